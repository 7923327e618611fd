use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use cmlocus::session::{run_session, FieldSpec, Options, Pos, SessionError, SessionErrorKind};

/// Cohen-Macaulay loci of modules over polynomial rings.
///
/// Reads a session file (from --input or stdin) and runs the given command,
/// or every command listed in the file when none is given. Several commands
/// can be separated by `;`.
#[derive(Parser, Debug)]
#[command(name = "cmlocus", version)]
struct Cli {
    /// Session file; stdin when omitted.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,

    /// Maximum S-pair reductions per Gröbner basis computation.
    #[arg(long, value_name = "N")]
    max_steps: Option<u64>,

    /// Coefficient field, overriding the ring declaration: `qq` or `fp:P`.
    #[arg(long, value_name = "FIELD", value_parser = parse_field)]
    field: Option<FieldSpec>,

    /// Compute every deficiency module and run consistency checks.
    #[arg(long)]
    verify: bool,

    /// Command to run, e.g. `report M` or `at-prime M P`.
    command: Vec<String>,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    match s {
        "qq" | "QQ" => Ok(FieldSpec::Rationals),
        _ => match s.strip_prefix("fp:") {
            Some(p) => p.parse().map(FieldSpec::Prime).map_err(|_| format!("invalid characteristic `{p}`")),
            None => Err("expected `qq` or `fp:P`".into()),
        },
    }
}

fn fail(err: &SessionError) -> ExitCode {
    eprintln!("error code={} {err}", err.code());
    ExitCode::from(err.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s).map_err(|e| format!("stdin: {e}"))
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(m) => {
            return fail(&SessionError { pos: Pos { line: 0, column: 1 }, kind: SessionErrorKind::Io(m) });
        }
    };
    let joined = cli.command.join(" ");
    let commands: Vec<String> =
        joined.split(';').map(|c| c.trim().to_string()).filter(|c| !c.is_empty()).collect();
    let options = Options { max_steps: cli.max_steps, verify: cli.verify };
    let outputs = match run_session(&text, cli.field, &commands, options) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    if cli.json {
        let value = match outputs.len() {
            1 => outputs[0].json.clone(),
            _ => serde_json::Value::Array(outputs.into_iter().map(|o| o.json).collect()),
        };
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        for o in outputs {
            println!("{}", o.text);
        }
    }
    ExitCode::SUCCESS
}
