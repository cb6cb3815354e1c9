mod commands;
mod corpus;
mod outcome;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{coxeter_or_default, load_quiver, parse_word, Engine, Failure};
use outcome::{failure, Outcome};

#[derive(Parser)]
#[command(name = "sq", version, about = "Sortable words, layers and tilting chains of acyclic quivers")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reducedness, c-sortability and the c-sorting word.
    Check {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        word: String,
        /// Coxeter element; defaults to the admissible order of the quiver.
        #[arg(long)]
        coxeter: Option<String>,
    },
    /// Dimension vectors of the layer.
    Layers {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// The reflection and approximation chains.
    Chain {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long)]
        coxeter: Option<String>,
        #[arg(long, value_enum, default_value = "both")]
        engine: Engine,
    },
    /// T_w and the modules of Sub T_w up to a size bound.
    Subcat {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long)]
        coxeter: Option<String>,
        /// Largest total dimension to enumerate; defaults to the largest chain member.
        #[arg(long)]
        bound: Option<usize>,
        /// Write the summands of T_w to this file.
        #[arg(long)]
        save_tilting: Option<PathBuf>,
    },
    /// The c-sortable word of a tilting module.
    Recover {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        coxeter: Option<String>,
        /// Summands of the tilting module, over the opposite quiver.
        #[arg(long)]
        modules: PathBuf,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Exchange summands of kQ along a word.
    Explore {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long)]
        save_tilting: Option<PathBuf>,
    },
    /// c-sortable elements against torsionfree classes (Dynkin quivers).
    Count {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        coxeter: Option<String>,
    },
    /// Run the bundled corpus of worked examples.
    VerifyPaper {
        /// Use this corpus file instead of the bundled one.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Layers { .. } => "layers",
            Command::Chain { .. } => "chain",
            Command::Subcat { .. } => "subcat",
            Command::Recover { .. } => "recover",
            Command::Explore { .. } => "explore",
            Command::Count { .. } => "count",
            Command::VerifyPaper { .. } => "verify-paper",
        }
    }
}

fn run(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Check { quiver, word, coxeter } => {
            let q = load_quiver(quiver)?;
            let w = parse_word(word, &q)?;
            let c = coxeter_or_default(&q, coxeter.as_deref())?;
            commands::check(&q, &w, &c)
        }
        Command::Layers { quiver, word } => {
            let q = load_quiver(quiver)?;
            commands::layers(&q, &parse_word(word, &q)?)
        }
        Command::Chain { quiver, word, coxeter, engine } => {
            let q = load_quiver(quiver)?;
            let w = parse_word(word, &q)?;
            let c = coxeter_or_default(&q, coxeter.as_deref())?;
            commands::chain(&q, &c, &w, *engine)
        }
        Command::Subcat { quiver, word, coxeter, bound, save_tilting } => {
            let q = load_quiver(quiver)?;
            let w = parse_word(word, &q)?;
            let c = coxeter_or_default(&q, coxeter.as_deref())?;
            commands::subcat(&q, &c, &w, *bound, save_tilting.as_deref())
        }
        Command::Recover { quiver, coxeter, modules, bound } => {
            let q = load_quiver(quiver)?;
            let c = coxeter_or_default(&q, coxeter.as_deref())?;
            commands::recover(&q, &c, modules, *bound)
        }
        Command::Explore { quiver, word, save_tilting } => {
            let q = load_quiver(quiver)?;
            commands::explore(&q, &parse_word(word, &q)?, save_tilting.as_deref())
        }
        Command::Count { quiver, coxeter } => {
            let q = load_quiver(quiver)?;
            let c = coxeter_or_default(&q, coxeter.as_deref())?;
            commands::count(&q, &c)
        }
        Command::VerifyPaper { corpus } => corpus::verify(corpus.as_deref()),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("SQ_LOG")).init();
    let cli = Cli::parse();
    let (out, failed) = match run(&cli.command) {
        Ok(out) => (out, false),
        Err((code, msg)) => (failure(cli.command.name(), code, msg), true),
    };
    let printed = if cli.json {
        let text = serde_json::to_string_pretty(&out.json).expect("json values serialize");
        writeln!(std::io::stdout().lock(), "{text}")
    } else if failed {
        write!(std::io::stderr().lock(), "{}", out.text)
    } else {
        write!(std::io::stdout().lock(), "{}", out.text)
    };
    if printed.is_err() {
        return ExitCode::from(outcome::INPUT_ERROR as u8);
    }
    ExitCode::from(out.code as u8)
}
