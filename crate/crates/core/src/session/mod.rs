//! Session files, command execution and JSON output.

pub mod parse;
pub mod run;

pub use parse::{parse_session, Command, CommandKind, FieldSpec, Pos, SessionError, SessionErrorKind, SessionFile};
pub use run::{ideal_json, Options, Output, Session};

use crate::polyarith::{Field, Fp, Rational};

/// Prime characteristics accepted for `GF(p)`.
pub const SUPPORTED_PRIMES: &[u64] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 32003,
    65521, 2147483647,
];

fn run_with<F: Field>(file: SessionFile, extra: &[String], options: Options) -> Result<Vec<Output>, SessionError> {
    let mut commands = Vec::with_capacity(extra.len());
    let mut column = 1;
    for text in extra {
        let mut cmd = file.parse_command(text, 0)?;
        cmd.pos.column += column - 1;
        commands.push(cmd);
        column += text.len() + 1;
    }
    let mut session = Session::<F>::build(file, options)?;
    if commands.is_empty() {
        return session.run_all();
    }
    commands.iter().map(|c| session.run_command(c)).collect()
}

/// Parses `text` and runs either `extra` commands or, when empty, those in
/// the file. `field` overrides the field named in the ring declaration.
pub fn run_session(
    text: &str,
    field: Option<FieldSpec>,
    extra: &[String],
    options: Options,
) -> Result<Vec<Output>, SessionError> {
    let mut file = parse_session(text)?;
    let pos = if field.is_some() { Pos { line: 0, column: 1 } } else { file.ring_pos };
    if let Some(f) = field {
        file.field = f;
    }
    macro_rules! dispatch {
        ($p:expr; $($q:literal),*) => {
            match $p {
                $($q => run_with::<Fp<$q>>(file, extra, options),)*
                p => Err(SessionError::syntax(
                    pos,
                    format!("unsupported characteristic {p}; supported primes are {SUPPORTED_PRIMES:?}"),
                )),
            }
        };
    }
    match file.field {
        FieldSpec::Rationals => run_with::<Rational>(file, extra, options),
        FieldSpec::Prime(p) => dispatch!(p; 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
            71, 73, 79, 83, 89, 97, 101, 32003, 65521, 2147483647),
    }
}
