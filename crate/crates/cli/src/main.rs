mod corpus;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use centra::permfile::PermFile;
use centra::regular::{self, DEFAULT_AUTOTOPISM_CAP};
use centra::representation::{self, Law};
use centra::{catalog, CayleyTable, Error, PropertyReport};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::verify::Theorem;

/// Exit statuses.
pub mod exit {
    pub const CLEAN: u8 = 0;
    pub const FINDING: u8 = 1;
    pub const MALFORMED: u8 = 2;
    pub const GENERATION: u8 = 3;
    pub const USAGE: u8 = 4;
}

#[derive(Parser)]
#[command(
    name = "centra",
    version,
    about = "Central identities, regular bijections and isotopes of finite loops"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full predicate battery on one table.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Rebuild a loop from generators of its right representation.
    Generate {
        /// Permutation file: `n=<order>` then one cycle string per line.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "c")]
        law: Law,
    },
    /// Check a theorem over a corpus and print a JSON findings document.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Comma-separated corpus items: `exhaustive:<n>`, `random:<lo>-<hi>:<count>`,
        /// `catalog`, or a fixture name.
        #[arg(long)]
        corpus: Option<String>,
        /// Extra table file added to the corpus.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Isotope shape; both shapes when omitted.
        #[arg(long)]
        shape: Option<centra::isotopy::Shape>,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Print a catalog fixture as a table file.
    Construct {
        /// c12, d4, q8, o16, klein, c2^3, q8xc2xc3, cyclic:<n>, dihedral:<m>,
        /// product:<a>*<b>
        #[arg(long)]
        name: String,
    },
    /// List every autotopism as JSON triples in cycle notation.
    Autotopisms {
        #[command(flatten)]
        source: Source,
        /// Largest order enumerated. Defaults to $CENTRA_MAX_ORDER, then 10.
        #[arg(long)]
        max_order: Option<usize>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Table file: the order on the first line, then one row per line.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Catalog fixture instead of a file.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// An error together with the exit status it maps to.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: exit::USAGE,
            message: message.into(),
        }
    }

    fn with_context(mut self, context: &str) -> Self {
        self.message = format!("{context}: {}", self.message);
        self
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ClosureOverflow { .. }
            | Error::NotSharplyTransitive(_)
            | Error::LawViolation(_) => exit::GENERATION,
            Error::InternalInconsistency(_) => exit::FINDING,
            _ => exit::MALFORMED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: exit::MALFORMED,
        message: format!("{}: {e}", path.display()),
    })
}

pub fn load_table(path: &Path) -> Result<CayleyTable, Failure> {
    let text = read(path)?;
    CayleyTable::parse(&text)
        .map_err(|e| Failure::from(e).with_context(&path.display().to_string()))
}

fn load_source(source: &Source) -> Result<CayleyTable, Failure> {
    match (&source.input, &source.name) {
        (Some(path), _) => load_table(path),
        (None, Some(name)) => catalog::named(name).map_err(|e| Failure::usage(e.to_string())),
        (None, None) => Err(Failure::usage("one of --input or --name is required")),
    }
}

fn max_order(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("CENTRA_MAX_ORDER") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::usage(format!(
                "CENTRA_MAX_ORDER={v:?} is not a non-negative integer"
            ))
        }),
        Err(_) => Ok(DEFAULT_AUTOTOPISM_CAP),
    }
}

fn json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Analyze { source, format } => {
            let t = load_source(&source)?;
            let report = PropertyReport::analyze(&t)?;
            let out = match format {
                Format::Text => report.to_text(),
                Format::Json => json(&report),
            };
            Ok((out, exit::CLEAN))
        }
        Command::Generate { input, law } => {
            let file = PermFile::parse(&read(&input)?)
                .map_err(|e| Failure::from(e).with_context(&input.display().to_string()))?;
            let t = representation::generate_from_generators(&file.perms, file.order, law)?;
            Ok((t.to_text(), exit::CLEAN))
        }
        Command::Verify {
            theorem,
            corpus,
            input,
            shape,
            seed,
            budget,
        } => verify::run(
            theorem,
            corpus.as_deref(),
            input.as_deref(),
            shape,
            seed,
            budget,
        ),
        Command::Construct { name } => {
            let t = catalog::named(&name).map_err(|e| Failure::usage(e.to_string()))?;
            Ok((t.to_text(), exit::CLEAN))
        }
        Command::Autotopisms {
            source,
            max_order: flag,
        } => {
            let t = load_source(&source)?;
            let cap = max_order(flag)?;
            let group = regular::enumerate_autotopisms(&t, cap)?;
            let out = serde_json::json!({
                "source": group.loop_digest,
                "order": t.order(),
                "count": group.len(),
                "triples": group.triples,
            });
            Ok((json(&out), exit::CLEAN))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::USAGE
            } else {
                exit::CLEAN
            });
        }
    };
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
