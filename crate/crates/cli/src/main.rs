use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pdg_verify::config::CONFIG_ENV;
use pdg_verify::{all_passed, plan, plan_all, run, table, to_json, CliError, Command, Config, Flags};

#[derive(Parser)]
#[command(name = "pdg-verify", version, about = "Exact verification of p-DG identities")]
struct Cli {
    #[command(subcommand)]
    command: Sub,

    /// Write a JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,

    /// Maximum number of checks run concurrently.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Defaults file; the built-in defaults are used when absent.
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,
}

#[derive(Args, Clone, Copy, Default)]
struct Params {
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    i: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    /// Degree cap for truncated complexes.
    #[arg(long)]
    cap: Option<i64>,
    #[arg(long)]
    max: Option<i64>,
}

impl From<Params> for Flags {
    fn from(x: Params) -> Self {
        Flags { p: x.p, n: x.n, a: x.a, b: x.b, i: x.i, k: x.k, cap: x.cap, max: x.max }
    }
}

#[derive(Subcommand)]
enum Sub {
    /// Slash cohomology of Sym_n against the product formula.
    VerifySlash(Params),
    /// Acyclicity of the twisted modules S_n(a).
    VerifyTwist(Params),
    /// H_/(V_{a,b}) is spanned by the p-Lima Schur classes.
    VerifyLima(Params),
    /// V_i splits into strings of length p.
    VerifyVi(Params),
    /// Quantum binomials at multiples of p in O_p.
    VerifyBinom(Params),
    /// NilHecke relations and acyclicity of NH_p.
    VerifyNilhecke(Params),
    /// Thick nilHecke relations in END(S_{(p^a)}).
    VerifyThick(Params),
    /// Formality of END(S_{p,p}).
    VerifyGrass(Params),
    /// Quantum Frobenius: homomorphism, kernel, section and the K0 symbol.
    VerifyFrobenius(Params),
    /// The thickening map on centers.
    VerifyTheta0(Params),
    /// Every check at its default parameters.
    ReportAll,
}

fn execute(cli: &Cli) -> Result<bool, CliError> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::builtin(),
    };
    let specs = match cli.command {
        Sub::ReportAll => plan_all(&config)?,
        Sub::VerifySlash(x) => plan(Command::Slash, &x.into(), &config)?,
        Sub::VerifyTwist(x) => plan(Command::Twist, &x.into(), &config)?,
        Sub::VerifyLima(x) => plan(Command::Lima, &x.into(), &config)?,
        Sub::VerifyVi(x) => plan(Command::Vi, &x.into(), &config)?,
        Sub::VerifyBinom(x) => plan(Command::Binom, &x.into(), &config)?,
        Sub::VerifyNilhecke(x) => plan(Command::Nilhecke, &x.into(), &config)?,
        Sub::VerifyThick(x) => plan(Command::Thick, &x.into(), &config)?,
        Sub::VerifyGrass(x) => plan(Command::Grass, &x.into(), &config)?,
        Sub::VerifyFrobenius(x) => plan(Command::Frobenius, &x.into(), &config)?,
        Sub::VerifyTheta0(x) => plan(Command::Theta0, &x.into(), &config)?,
    };
    let reports = run(&specs, cli.jobs)?;
    print!("{}", table(&reports));
    if let Some(path) = &cli.json {
        std::fs::write(path, to_json(&reports))?;
    }
    Ok(all_passed(&reports))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("pdg-verify: {e}");
            ExitCode::from(2)
        }
    }
}
