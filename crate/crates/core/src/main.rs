use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mcalc::dsl::{self, Command as DslCommand};
use mcalc::invariants::SurgeryDirection;

/// Exact monodromy calculus for Lefschetz fibrations over the disk.
///
/// Reads a document in the line-oriented DSL (surface, curves, words,
/// assemblies) from --input or standard input, runs one command over it,
/// and prints a report. All integers are exact.
#[derive(Parser)]
#[command(name = "mcalc", version, about)]
struct Cli {
    /// Read the document from FILE instead of standard input.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Output format: human-readable text or machine key-value lines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Cmd {
    /// Homology action matrix of a word.
    Action { word: String },
    /// Chiral split of a word: positive part, negative part, certificate.
    Split { word: String },
    /// Invariants of the fibration over the disk a word defines.
    Invariants { word: String },
    /// First homology of the boundary open book of a word.
    #[command(name = "openbook-h1")]
    OpenbookH1 { word: String },
    /// Invariants of a declared assembly and of both its sides.
    Fold { assembly: String },
    /// Fold, then trade a circle for a sphere in the fold (or back).
    Surgery {
        assembly: String,
        /// Reverse direction: trade the sphere back for a circle.
        #[arg(long)]
        back: bool,
    },
    /// Run a bundled example fixture against its expect table.
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// One of the bundled fixtures; see `verify-paper --fixture list`.
        #[arg(long, value_name = "NAME")]
        fixture: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    if let Cmd::VerifyPaper { fixture } = &cli.command {
        return verify(fixture, cli.format);
    }

    let text = read_document(&cli.input)?;
    let doc = dsl::parse(&text).map_err(|e| e.to_string())?;
    let (command, echo) = match &cli.command {
        Cmd::Action { word } => (
            DslCommand::Action { word: word.clone() },
            format!("action {word}"),
        ),
        Cmd::Split { word } => (
            DslCommand::Split { word: word.clone() },
            format!("split {word}"),
        ),
        Cmd::Invariants { word } => (
            DslCommand::Invariants { word: word.clone() },
            format!("invariants {word}"),
        ),
        Cmd::OpenbookH1 { word } => (
            DslCommand::OpenbookH1 { word: word.clone() },
            format!("openbook-h1 {word}"),
        ),
        Cmd::Fold { assembly } => (
            DslCommand::Fold {
                assembly: assembly.clone(),
            },
            format!("fold {assembly}"),
        ),
        Cmd::Surgery { assembly, back } => {
            let direction = if *back {
                SurgeryDirection::SphereToCircle
            } else {
                SurgeryDirection::CircleToSphere
            };
            (
                DslCommand::Surgery {
                    assembly: assembly.clone(),
                    direction,
                },
                format!("surgery {assembly}"),
            )
        }
        Cmd::VerifyPaper { .. } => unreachable!("handled above"),
    };
    let report = dsl::run(&command, &doc, &echo).map_err(|e| e.to_string())?;
    match cli.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Machine => print!("{}", report.to_machine()),
    }
    Ok(true)
}

fn verify(fixture: &str, format: Format) -> Result<bool, String> {
    if fixture == "list" {
        for name in dsl::fixture_names() {
            println!("{name}");
        }
        return Ok(true);
    }
    let outcome = dsl::verify_paper(fixture).map_err(|e| e.to_string())?;
    match format {
        Format::Machine => {
            print!("{}", outcome.report.to_machine());
            for c in &outcome.checks {
                println!("check.{} = {}", c.key, if c.pass { "pass" } else { "fail" });
            }
        }
        Format::Text => {
            for c in &outcome.checks {
                if c.pass {
                    println!("PASS {} = {}  {}", c.key, c.expected, c.provenance);
                } else {
                    println!(
                        "FAIL {}: expected {}, got {}  {}",
                        c.key,
                        c.expected,
                        c.actual.as_deref().unwrap_or("<missing>"),
                        c.provenance
                    );
                }
            }
            println!(
                "fixture {}: {}",
                outcome.name,
                if outcome.passed() { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(outcome.passed())
}

fn read_document(input: &Option<PathBuf>) -> Result<String, String> {
    match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(buf)
        }
    }
}
