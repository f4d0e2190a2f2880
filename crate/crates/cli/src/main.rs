use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dblcat::lifting::{CheckMode, Level};
use dblcat_cli::report::RunReport;
use dblcat_cli::run::{lift_model, validate, ModelSpec, Operational, Options};

#[derive(Parser)]
#[command(name = "dblcat", version, about = "Check finite double categories and lift their monoidal structure")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a model.
    Validate {
        #[command(flatten)]
        model: ModelArgs,
        /// Structure to check; defaults to everything the model declares.
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Certify fibrancy, lift the structure to the horizontal bicategory
    /// and check the lifted axioms.
    Lift {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum, default_value = "monoidal")]
        level: LevelArg,
        /// Choose companions only for invertible vertical morphisms.
        #[arg(long)]
        isofibrant: bool,
        #[arg(long, value_enum, default_value = "brute")]
        check_mode: ModeArg,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Render a saved report.
    Report {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct ModelArgs {
    #[arg(long, value_enum, conflicts_with = "table", required_unless_present = "table")]
    builtin: Option<Builtin>,
    /// Largest set size in a builtin model.
    #[arg(long, default_value_t = 2)]
    max_size: u32,
    /// Largest apex of a span in the builtin span model.
    #[arg(long, default_value_t = 3)]
    max_apex: u32,
    /// A model given by explicit tables.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instances checked per axiom before switching to sampling.
    #[arg(long, default_value_t = 100)]
    budget: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    Rel,
    Span,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Monoidal,
    Braided,
    Symmetric,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Theta,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Monoidal => Level::Monoidal,
            LevelArg::Braided => Level::Braided,
            LevelArg::Symmetric => Level::Symmetric,
        }
    }
}

impl ModelArgs {
    fn spec(&self) -> ModelSpec {
        match (self.builtin, &self.table) {
            (_, Some(path)) => ModelSpec::Table(path.clone()),
            (Some(Builtin::Rel), None) => ModelSpec::Rel { max_size: self.max_size },
            (Some(Builtin::Span), None) | (None, None) => {
                ModelSpec::Span { max_size: self.max_size, max_apex: self.max_apex }
            }
        }
    }
}

fn render(r: &RunReport, f: Format) -> String {
    match f {
        Format::Json => r.to_json(),
        Format::Text => r.to_text(),
    }
}

fn emit(result: Result<RunReport, Operational>, format: Format) -> ExitCode {
    match result {
        Ok(r) => {
            print!("{}", render(&r, format));
            if r.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Operational(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.command {
        Command::Validate { model, level, run } => {
            let opts = Options { seed: run.seed, budget: run.budget, isofibrant: false, mode: CheckMode::Brute };
            emit(validate(&model.spec(), level.map(Level::from), &opts), run.format)
        }
        Command::Lift { model, level, isofibrant, check_mode, run } => {
            let mode = match check_mode {
                ModeArg::Theta => CheckMode::Theta,
                ModeArg::Brute => CheckMode::Brute,
            };
            let opts = Options { seed: run.seed, budget: run.budget, isofibrant, mode };
            emit(lift_model(&model.spec(), level.into(), &opts), run.format)
        }
        Command::Report { path, format } => {
            let parsed = std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))
                .and_then(|t| RunReport::parse(&t));
            match parsed {
                Ok(r) => {
                    print!("{}", render(&r, format));
                    ExitCode::SUCCESS
                }
                Err(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
