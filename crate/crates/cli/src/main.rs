//! `mpcoh`: cohomology tables, regularity, aCM and splitting-criterion reports
//! for decomposable bundles on products of projective spaces.
//!
//! Exit codes: 0 on success whatever the verdict, 2 for unparseable input,
//! 3 for input that parses but is invalid on the given space, 4 when a
//! criterion's precondition does not hold.

mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mpcoh::expr::{parse_bundle, parse_space, DiagnosticKind, ParseDiagnostic, MAX_LITERAL};
use mpcoh::{Bundle, Criterion, Error, Multidegree, Space};

use render::{Output, Request};

#[derive(Parser)]
#[command(
    name = "mpcoh",
    version,
    about = "Exact cohomology of decomposable bundles on P^n1 x ... x P^ns"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print h^0, ..., h^d and the Euler characteristic.
    Cohom {
        #[arg(long)]
        space: String,
        /// Apply O(a_1,...,a_s) first.
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<String>,
        #[arg(allow_hyphen_values = true)]
        bundle: String,
    },
    /// Balanced regularity, or regularity at a given multidegree.
    Reg {
        #[arg(long)]
        space: String,
        /// Test (p_1,...,p_s)-regularity instead of computing Reg.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        #[arg(allow_hyphen_values = true)]
        bundle: String,
    },
    /// Decide whether the bundle is arithmetically Cohen-Macaulay.
    Acm {
        #[arg(long)]
        space: String,
        #[arg(allow_hyphen_values = true)]
        bundle: String,
    },
    /// Evaluate a splitting criterion and report condition and shape separately.
    Split {
        /// One of thm31, thm32, thm33.
        #[arg(long)]
        criterion: String,
        #[arg(long)]
        space: String,
        #[arg(allow_hyphen_values = true)]
        bundle: String,
    },
    /// Check the Koszul complexes and cohomology identities of a space.
    KoszulVerify {
        #[arg(long)]
        space: String,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn syntax(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn semantic(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    fn diagnostic(what: &str, text: &str, d: ParseDiagnostic) -> Self {
        let code = match d.kind {
            DiagnosticKind::Syntax => 2,
            DiagnosticKind::Semantic => 3,
        };
        let caret = format!("{}^", " ".repeat(d.offset));
        Failure {
            code,
            message: format!("invalid {what}: {d}\n  {text}\n  {caret}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition(_) => 4,
            Error::Domain(_) | Error::Arity { .. } => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn space_arg(text: &str) -> Result<Space, Failure> {
    parse_space(text).map_err(|d| Failure::diagnostic("space", text, d))
}

fn bundle_arg(text: &str, space: &Space) -> Result<Bundle, Failure> {
    parse_bundle(text, space).map_err(|d| Failure::diagnostic("bundle", text, d))
}

fn multidegree_arg(flag: &str, text: &str, space: &Space) -> Result<Multidegree, Failure> {
    let values = text
        .split(',')
        .map(|part| {
            let part = part.trim();
            let v: i128 = part
                .parse()
                .map_err(|_| Failure::syntax(format!("--{flag}: `{part}` is not an integer")))?;
            if v.abs() > MAX_LITERAL as i128 {
                return Err(Failure::semantic(format!(
                    "--{flag}: {v} exceeds {MAX_LITERAL} in magnitude"
                )));
            }
            Ok(v as i64)
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != space.factors() {
        return Err(Failure::semantic(format!(
            "--{flag}: expected {} entries, found {}",
            space.factors(),
            values.len()
        )));
    }
    Ok(Multidegree(values))
}

fn run(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Cohom {
            space,
            twist,
            bundle,
        } => {
            let x = space_arg(&space)?;
            let mut e = bundle_arg(&bundle, &x)?;
            let twist = twist
                .map(|t| multidegree_arg("twist", &t, &x))
                .transpose()?;
            if let Some(k) = &twist {
                e = e.twist(k)?;
            }
            let table = mpcoh::cohomology::bundle_cohomology(&e);
            Output::cohom(Request::new("cohom", &x, &bundle), &e, twist, table)
        }
        Command::Reg { space, at, bundle } => {
            let x = space_arg(&space)?;
            let e = bundle_arg(&bundle, &x)?;
            let request = Request::new("reg", &x, &bundle);
            match at {
                Some(p) => {
                    let p = multidegree_arg("at", &p, &x)?;
                    let verdict = mpcoh::criteria::is_regular_at(&e, &p)?;
                    Output::regular_at(request, &e, p, verdict)
                }
                None => Output::regularity(request, &e, mpcoh::criteria::balanced_regularity(&e)?),
            }
        }
        Command::Acm { space, bundle } => {
            let x = space_arg(&space)?;
            let e = bundle_arg(&bundle, &x)?;
            let verdict = mpcoh::criteria::is_acm(&e)?;
            Output::acm(Request::new("acm", &x, &bundle), &e, verdict)
        }
        Command::Split {
            criterion,
            space,
            bundle,
        } => {
            let criterion: Criterion = criterion.parse().map_err(|_| {
                Failure::syntax(format!(
                    "unknown criterion `{criterion}` (expected thm31, thm32 or thm33)"
                ))
            })?;
            let x = space_arg(&space)?;
            let e = bundle_arg(&bundle, &x)?;
            let report = mpcoh::criteria::verify_criterion(&e, criterion)?;
            Output::split(Request::new("split", &x, &bundle), &e, report)
        }
        Command::KoszulVerify { space } => {
            let x = space_arg(&space)?;
            Output::koszul(Request::new("koszul-verify", &x, ""), &x)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            if cli.json {
                println!("{}", output.json());
            } else {
                print!("{}", output.text());
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
