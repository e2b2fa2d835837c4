use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use uqsl2_cli::print::Format;
use uqsl2_cli::suite::{parse_mode, ConfigError, FileConfig, SweepOptions};
use uqsl2_cli::{eval_str, exit, print_element, run_verify_suite, EvalContext, SuiteConfig};
use uqsl2_core::algebra::{commutator, deformed_commutator, el_mul, normal_form, omega, Element, RelationMode};
use uqsl2_core::drinfeld::{central_c, family_e, phi, psi, FamilyParams, Sign};

/// Environment variable holding the default relation mode.
const MODE_ENV: &str = "UQSL2_MODE";

#[derive(Parser)]
#[command(name = "uqsl2", version, about = "Exact normal ordering and claim checks in the loop algebra")]
struct Cli {
    /// Relation mode: strict or abelianx [default: $UQSL2_MODE, else strict]
    #[arg(long, global = true)]
    mode: Option<String>,
    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// TOML file with defaults for any of the long flags
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression
    Nf { expr: String },
    /// Normal form of a product
    Mul { a: String, b: String },
    /// Commutator [a, b]
    Comm { a: String, b: String },
    /// Deformed commutator a K^p b - b K^p a
    Dcomm {
        a: String,
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },
    /// Cartan current psi_m
    Psi {
        #[arg(allow_hyphen_values = true)]
        m: i64,
    },
    /// Cartan current phi_m
    Phi {
        #[arg(allow_hyphen_values = true)]
        m: i64,
    },
    /// Family element E^sign_{p,index}(m)
    #[command(name = "E")]
    E {
        #[arg(allow_hyphen_values = true)]
        sign: Sign,
        #[arg(allow_hyphen_values = true)]
        p: i64,
        #[arg(allow_hyphen_values = true)]
        m: i64,
        #[arg(allow_hyphen_values = true)]
        index: i64,
    },
    /// Claimed central value c^sign_n(m)
    #[command(name = "c")]
    C {
        #[arg(allow_hyphen_values = true)]
        sign: Sign,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        m: i64,
    },
    /// Image of an expression under the Chevalley involution
    Omega { expr: String },
    /// Run the claim-verification sweep
    Verify(SweepOptions),
}

fn fail(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(exit::USAGE as u8)
}

fn resolve_mode(flag: Option<&str>, file: Option<&str>) -> Result<RelationMode, ConfigError> {
    let env = std::env::var(MODE_ENV).ok().filter(|s| !s.is_empty());
    match flag.or(file).or(env.as_deref()) {
        Some(text) => parse_mode(text),
        None => Ok(RelationMode::default()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match &cli.config {
        Some(path) => match FileConfig::load(path) {
            Ok(f) => f,
            Err(e) => return fail(e),
        },
        None => FileConfig::default(),
    };
    let mode = match resolve_mode(cli.mode.as_deref(), file.mode.as_deref()) {
        Ok(m) => m,
        Err(e) => return fail(e),
    };
    let format = cli.format.or(file.format).unwrap_or_default();
    let ctx = EvalContext { mode };
    let read = |text: &str| eval_str(text, &ctx);

    let element: Result<Element, uqsl2_cli::EvalError> = match cli.command {
        Command::Verify(flags) => {
            let result = SuiteConfig::from_options(&flags.or(file.sweep()), mode).and_then(|c| run_verify_suite(&c));
            return match result {
                Ok(doc) => {
                    println!("{}", doc.render(format).trim_end());
                    ExitCode::from(doc.exit_code() as u8)
                }
                Err(e) => fail(e),
            };
        }
        Command::Nf { expr } => read(&expr),
        Command::Omega { expr } => read(&expr).map(|e| omega(&e)),
        Command::Mul { a, b } => read(&a).and_then(|a| Ok(el_mul(&a, &read(&b)?))),
        Command::Comm { a, b } => read(&a).and_then(|a| Ok(commutator(&a, &read(&b)?, mode))),
        Command::Dcomm { a, b, p } => read(&a).and_then(|a| Ok(deformed_commutator(&a, &read(&b)?, p, mode))),
        Command::Psi { m } => Ok(psi(m)),
        Command::Phi { m } => Ok(phi(m)),
        Command::E { sign, p, m, index } => Ok(family_e(FamilyParams::new(sign, p, m, index))),
        Command::C { sign, n, m } => match central_c(n, m, sign) {
            Ok(e) => Ok(e),
            Err(e) => return fail(e),
        },
    };
    match element {
        Ok(e) => {
            println!("{}", print_element(&normal_form(&e, mode), format));
            ExitCode::from(exit::OK as u8)
        }
        Err(e) => fail(e),
    }
}
