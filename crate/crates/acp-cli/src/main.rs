//! `acp` — construct, verify, transform, and exponentiate
//! anticommuting pairs of Hermitian involutions stored as JSON matrix
//! files.
//!
//! Exit codes follow one contract across all subcommands: 0 for
//! success, 1 for a domain failure (verification failed, a closed
//! form's precondition does not hold, no partner exists), 2 for usage,
//! I/O, or parse errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use acp_core::closed_form::{exp_involution, exp_kron_pair, exp_nilpotent, exp_product};
use acp_core::eig::hermitian_eig;
use acp_core::expm::expm_oracle;
use acp_core::io::{fmt_f64, read_matrix, write_matrix, write_report, ReportFile};
use acp_core::matrix::{Complex64, ComplexMatrix};
use acp_core::pair::{
    canonical_pair, derive_partner, lift_direct_sum, lift_kron, lift_star, nilpotent,
    pauli_chain_pair, random_pair, verify_pair, InvolutionPair, VerificationReport,
};
use acp_core::rng::RandomSource;
use acp_core::Error;

/// Eigenvalues within this distance of +1 or -1 are counted as part of
/// that cluster in spectrum output.
const SPECTRUM_WINDOW: f64 = 1e-8;

#[derive(Parser)]
#[command(
    name = "acp",
    version,
    about = "Anticommuting Hermitian involution pairs: generate, verify, derive, lift, exponentiate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a certified pair and write both members to files
    Generate(GenerateArgs),
    /// Check the five pair conditions and report residuals
    Verify(VerifyArgs),
    /// Construct an anticommuting partner for a balanced involution
    Derive(DeriveArgs),
    /// Raise a pair to a higher dimension by kron, dirsum, or star
    Lift(LiftArgs),
    /// Matrix exponential via a closed form or the generic series
    Expm(ExpmArgs),
    /// Eigenvalues of a Hermitian matrix and its +1/-1 split
    Spectrum(SpectrumArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Random,
    Canonical,
    PauliChain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LiftOp {
    Kron,
    Dirsum,
    Star,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Form {
    Auto,
    Involution,
    Product,
    KronPair,
    Nilpotent,
    Oracle,
}

#[derive(Args)]
struct GenerateArgs {
    /// Pair construction to use
    #[arg(long, value_enum)]
    method: Method,
    /// Matrix dimension (even; a power of two for pauli-chain)
    #[arg(long)]
    size: usize,
    /// Random seed (used by --method random)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Certification tolerance (used by --method random)
    #[arg(long, default_value_t = 1e-10, env = "ACP_DEFAULT_TOL")]
    tol: f64,
    /// Output file for the first member
    #[arg(long)]
    out_a: PathBuf,
    /// Output file for the second member
    #[arg(long)]
    out_b: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// First member file
    #[arg(long)]
    a: PathBuf,
    /// Second member file
    #[arg(long)]
    b: PathBuf,
    /// Tolerance each residual is compared against
    #[arg(long, default_value_t = 1e-10, env = "ACP_DEFAULT_TOL")]
    tol: f64,
    /// Also write the report as JSON
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct DeriveArgs {
    /// Input involution file
    #[arg(long = "in")]
    input: PathBuf,
    /// Tolerance for the involution and trace checks
    #[arg(long, default_value_t = 1e-10, env = "ACP_DEFAULT_TOL")]
    tol: f64,
    /// Output file for the constructed partner
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct LiftArgs {
    /// Lift operation
    #[arg(long, value_enum)]
    op: LiftOp,
    /// First member file of the input pair
    #[arg(long)]
    a: PathBuf,
    /// Second member file of the input pair
    #[arg(long)]
    b: PathBuf,
    /// Involution factor file (required for --op kron)
    #[arg(long, required_if_eq("op", "kron"))]
    c: Option<PathBuf>,
    /// Certification tolerance for the input pair
    #[arg(long, default_value_t = 1e-10, env = "ACP_DEFAULT_TOL")]
    tol: f64,
    /// Output file for the lifted first member
    #[arg(long)]
    out_a: PathBuf,
    /// Output file for the lifted second member
    #[arg(long)]
    out_b: PathBuf,
}

#[derive(Args)]
struct ExpmArgs {
    /// Closed form to apply; auto picks from the input's structure
    #[arg(long, value_enum, default_value_t = Form::Auto)]
    form: Form,
    /// Scalar exponent as "re,im" (no spaces)
    #[arg(long, value_parser = parse_complex)]
    z: Complex64,
    /// Input matrix (the pair's first member for pair forms)
    #[arg(long)]
    a: PathBuf,
    /// Second member file (pair forms)
    #[arg(long)]
    b: Option<PathBuf>,
    /// With --form auto and a pair: use the nilpotent combination A+iB
    #[arg(long)]
    nilpotent: bool,
    /// Tolerance for structure checks and pair certification
    #[arg(long, default_value_t = 1e-10, env = "ACP_DEFAULT_TOL")]
    tol: f64,
    /// Output file for the exponential
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Input Hermitian matrix file
    #[arg(long = "in")]
    input: PathBuf,
    /// Hermitian check and convergence tolerance
    #[arg(long, default_value_t = 1e-10, env = "ACP_DEFAULT_TOL")]
    tol: f64,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

type CliResult = Result<(), Failure>;

/// Usage, I/O, and parse problems: exit 2.
fn usage(err: Error) -> Failure {
    Failure {
        code: 2,
        message: err.to_string(),
    }
}

/// Domain failures (the mathematics said no): exit 1.
fn domain(err: Error) -> Failure {
    Failure {
        code: 1,
        message: err.to_string(),
    }
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected \"re,im\", got \"{s}\""));
    }
    let re: f64 = parts[0]
        .parse()
        .map_err(|e| format!("bad real part {:?}: {e}", parts[0]))?;
    let im: f64 = parts[1]
        .parse()
        .map_err(|e| format!("bad imaginary part {:?}: {e}", parts[1]))?;
    if !re.is_finite() || !im.is_finite() {
        return Err("components must be finite".into());
    }
    Ok(Complex64::new(re, im))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Random => "random",
        Method::Canonical => "canonical",
        Method::PauliChain => "pauli-chain",
    }
}

fn op_name(op: LiftOp) -> &'static str {
    match op {
        LiftOp::Kron => "kron",
        LiftOp::Dirsum => "dirsum",
        LiftOp::Star => "star",
    }
}

fn form_name(f: Form) -> &'static str {
    match f {
        Form::Auto => "auto",
        Form::Involution => "involution",
        Form::Product => "product",
        Form::KronPair => "kron-pair",
        Form::Nilpotent => "nilpotent",
        Form::Oracle => "oracle",
    }
}

fn print_report(report: &VerificationReport) {
    println!("residual_hermitian_a: {}", fmt_f64(report.residual_hermitian_a));
    println!("residual_hermitian_b: {}", fmt_f64(report.residual_hermitian_b));
    println!("residual_involution_a: {}", fmt_f64(report.residual_involution_a));
    println!("residual_involution_b: {}", fmt_f64(report.residual_involution_b));
    println!("residual_anticommute: {}", fmt_f64(report.residual_anticommute));
    println!("trace_ab_abs: {}", fmt_f64(report.trace_ab_abs));
    println!("tol: {}", fmt_f64(report.tol));
    println!("passed: {}", report.passed);
}

fn cmd_generate(args: GenerateArgs) -> CliResult {
    // an odd or otherwise unusable --size is a usage error here: the
    // request itself asked for something that cannot exist
    let pair = match args.method {
        Method::Canonical => canonical_pair(args.size),
        Method::PauliChain => pauli_chain_pair(args.size),
        Method::Random => {
            let mut rng = RandomSource::new(args.seed);
            random_pair(args.size, &mut rng, args.tol)
        }
    }
    .map_err(usage)?;
    write_matrix(&args.out_a, pair.a()).map_err(usage)?;
    write_matrix(&args.out_b, pair.b()).map_err(usage)?;
    match args.method {
        Method::Random => println!(
            "generated: method=random size={} seed={}",
            pair.dim(),
            args.seed
        ),
        m => println!("generated: method={} size={}", method_name(m), pair.dim()),
    }
    print_report(&pair.report());
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> CliResult {
    let a = read_matrix(&args.a).map_err(usage)?;
    let b = read_matrix(&args.b).map_err(usage)?;
    let report = verify_pair(&a, &b, args.tol).map_err(usage)?;
    print_report(&report);
    if let Some(path) = &args.report {
        write_report(path, &ReportFile::from_report(&report)).map_err(usage)?;
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: "verification failed; residuals exceed tolerance".into(),
        })
    }
}

fn cmd_derive(args: DeriveArgs) -> CliResult {
    let a = read_matrix(&args.input).map_err(usage)?;
    let b = derive_partner(&a, args.tol).map_err(|e| match e {
        Error::NotInvolution { .. }
        | Error::NotHermitian { .. }
        | Error::UnbalancedSpectrum { .. }
        | Error::OddDimension { .. }
        | Error::NoConvergence { .. } => domain(e),
        other => usage(other),
    })?;
    write_matrix(&args.out, &b).map_err(usage)?;
    let report = verify_pair(&a, &b, 10.0 * args.tol).map_err(usage)?;
    println!("derived: size={}", a.rows());
    print_report(&report);
    if report.passed {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: "derived partner failed verification".into(),
        })
    }
}

fn cmd_lift(args: LiftArgs) -> CliResult {
    let a = read_matrix(&args.a).map_err(usage)?;
    let b = read_matrix(&args.b).map_err(usage)?;
    let pair = InvolutionPair::certify(a, b, args.tol).map_err(usage)?;
    let lifted = match args.op {
        LiftOp::Kron => {
            let c_path = args.c.as_ref().expect("clap enforces --c for kron");
            let c = read_matrix(c_path).map_err(usage)?;
            // a factor that is not a Hermitian involution is a domain
            // failure; anything else is usage
            lift_kron(&c, &pair, args.tol).map_err(|e| match e {
                Error::NotInvolution { .. } | Error::NotHermitian { .. } => domain(e),
                other => usage(other),
            })?
        }
        LiftOp::Dirsum => lift_direct_sum(&pair),
        LiftOp::Star => lift_star(&pair).map_err(usage)?,
    };
    write_matrix(&args.out_a, lifted.a()).map_err(usage)?;
    write_matrix(&args.out_b, lifted.b()).map_err(usage)?;
    println!("lifted: op={} size={}", op_name(args.op), lifted.dim());
    print_report(&lifted.report());
    Ok(())
}

/// Certify the two file contents as a pair for one of the pair-shaped
/// closed forms. Shape problems are usage errors; a pair that fails
/// the defining conditions is a domain error, because the requested
/// closed form's precondition does not hold.
fn certify_for_expm(
    a: ComplexMatrix,
    b: Option<ComplexMatrix>,
    tol: f64,
) -> Result<InvolutionPair, Failure> {
    let b = b.ok_or(Failure {
        code: 2,
        message: "this form needs both --a and --b".into(),
    })?;
    InvolutionPair::certify(a, b, tol).map_err(|e| match e {
        Error::NonSquare { .. } | Error::DimensionMismatch { .. } => usage(e),
        other => domain(other),
    })
}

fn cmd_expm(args: ExpmArgs) -> CliResult {
    let a = read_matrix(&args.a).map_err(usage)?;
    let b = match &args.b {
        Some(path) => Some(read_matrix(path).map_err(usage)?),
        None => None,
    };
    let resolved = match args.form {
        Form::Auto => {
            if b.is_some() && args.nilpotent {
                Form::Nilpotent
            } else if b.is_some() {
                Form::Product
            } else if a.is_square() && a.involution_residual() <= args.tol {
                Form::Involution
            } else {
                Form::Oracle
            }
        }
        f => f,
    };

    // the matrix actually exponentiated, kept for the auto-mode oracle
    // comparison
    let result = match resolved {
        Form::Involution => exp_involution(&a, args.z, args.tol).map_err(|e| match e {
            Error::NotInvolution { .. } => domain(e),
            other => usage(other),
        })?,
        Form::Product => {
            let pair = certify_for_expm(a.clone(), b.clone(), args.tol)?;
            exp_product(&pair, args.z)
        }
        Form::KronPair => {
            let pair = certify_for_expm(a.clone(), b.clone(), args.tol)?;
            exp_kron_pair(&pair, args.z)
        }
        Form::Nilpotent => {
            let pair = certify_for_expm(a.clone(), b.clone(), args.tol)?;
            exp_nilpotent(&pair, args.z)
        }
        Form::Oracle => expm_oracle(&a.scale(args.z)).map_err(usage)?,
        Form::Auto => unreachable!("auto resolves above"),
    };

    println!("form: {}", form_name(resolved));
    if args.form == Form::Auto {
        // auto mode shows how far the chosen closed form sits from the
        // generic exponential of the same matrix
        let deviation = match resolved {
            Form::Oracle => 0.0,
            Form::Involution => oracle_deviation(&result, &a.scale(args.z))?,
            Form::Product => {
                let pair = certify_for_expm(a.clone(), b.clone(), args.tol)?;
                let ab = pair.a().matmul(pair.b());
                oracle_deviation(&result, &ab.scale(args.z))?
            }
            Form::Nilpotent => {
                let pair = certify_for_expm(a.clone(), b.clone(), args.tol)?;
                oracle_deviation(&result, &nilpotent(&pair).scale(args.z))?
            }
            _ => unreachable!("auto never resolves to kron-pair"),
        };
        println!("oracle_deviation: {}", fmt_f64(deviation));
    }
    write_matrix(&args.out, &result).map_err(usage)?;
    Ok(())
}

fn oracle_deviation(closed: &ComplexMatrix, exponent: &ComplexMatrix) -> Result<f64, Failure> {
    let reference = expm_oracle(exponent).map_err(usage)?;
    Ok(closed.frobenius_distance(&reference) / reference.frobenius_norm().max(1.0))
}

fn cmd_spectrum(args: SpectrumArgs) -> CliResult {
    let h = read_matrix(&args.input).map_err(usage)?;
    let decomposition = hermitian_eig(&h, args.tol).map_err(|e| match e {
        Error::NotHermitian { .. } | Error::NoConvergence { .. } => domain(e),
        other => usage(other),
    })?;
    let rendered: Vec<String> = decomposition.values.iter().map(|&v| fmt_f64(v)).collect();
    println!("eigenvalues: {}", rendered.join(" "));
    let near = |target: f64| {
        decomposition
            .values
            .iter()
            .filter(|&&v| (v - target).abs() <= SPECTRUM_WINDOW)
            .count()
    };
    println!("near_plus_one: {}", near(1.0));
    println!("near_minus_one: {}", near(-1.0));
    Ok(())
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Generate(args) => cmd_generate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Derive(args) => cmd_derive(args),
        Command::Lift(args) => cmd_lift(args),
        Command::Expm(args) => cmd_expm(args),
        Command::Spectrum(args) => cmd_spectrum(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
