//! Line-oriented session files.
//!
//! ```text
//! ring QQ[x,y,z,w] grevlex
//! ideal I = xz, xw, yz, yw
//! module M = quotient I
//! prime P = x, y
//! report M
//! ```
//!
//! Presentations use the column convention: `coker [[x, y], [0, x]]` is the
//! cokernel of the 2×2 matrix with rows `(x, y)` and `(0, x)`, whose columns are
//! the relations.

use std::collections::HashMap;
use std::fmt;

use crate::error::AlgebraError;
use crate::polyarith::{parse_polynomial, MonomialOrder, Rational, Ring};

/// A location inside the session text. Line 0 denotes the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned<T> {
    pub value: T,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SessionErrorKind {
    Syntax(String),
    UndefinedName(String),
    DuplicateName(String),
    Io(String),
    Algebra(AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionError {
    pub pos: Pos,
    pub kind: SessionErrorKind,
}

impl SessionError {
    pub fn syntax(pos: Pos, message: impl Into<String>) -> Self {
        SessionError { pos, kind: SessionErrorKind::Syntax(message.into()) }
    }

    pub fn algebra(pos: Pos, err: AlgebraError) -> Self {
        // parse errors from polynomial text become syntax errors at the exact column
        let at = |offset: usize| Pos { line: pos.line, column: pos.column + offset };
        match err {
            AlgebraError::Syntax { offset, message } => Self::syntax(at(offset), message),
            AlgebraError::BadExponent { offset, message } => Self::syntax(at(offset), message),
            AlgebraError::UnknownVariable { name, offset } => {
                Self::syntax(at(offset), format!("unknown variable `{name}`"))
            }
            e => SessionError { pos, kind: SessionErrorKind::Algebra(e) },
        }
    }

    /// Machine-readable category.
    pub fn code(&self) -> &'static str {
        match &self.kind {
            SessionErrorKind::Syntax(_) => "syntax",
            SessionErrorKind::UndefinedName(_) => "undefined-name",
            SessionErrorKind::DuplicateName(_) => "duplicate-name",
            SessionErrorKind::Io(_) => "io",
            SessionErrorKind::Algebra(AlgebraError::BudgetExceeded(_)) => "budget",
            SessionErrorKind::Algebra(AlgebraError::NotInSupport) => "not-in-support",
            SessionErrorKind::Algebra(AlgebraError::ZeroModule) => "zero-module",
            SessionErrorKind::Algebra(AlgebraError::NotPrime(_)) => "not-prime",
            SessionErrorKind::Algebra(AlgebraError::IndexOutOfRange { .. }) => "index",
            SessionErrorKind::Algebra(_) => "algebra",
        }
    }

    /// Process exit status: 2 for input problems, 3 for algebra errors, 4 for
    /// an exhausted budget.
    pub fn exit_code(&self) -> i32 {
        match &self.kind {
            SessionErrorKind::Algebra(AlgebraError::BudgetExceeded(_)) => 4,
            SessionErrorKind::Algebra(_) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for SessionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pos.line == 0 {
            write!(f, "command line, column {}: ", self.pos.column)?;
        } else {
            write!(f, "line {}, column {}: ", self.pos.line, self.pos.column)?;
        }
        match &self.kind {
            SessionErrorKind::Syntax(m) => write!(f, "{m}"),
            SessionErrorKind::UndefinedName(n) => write!(f, "undefined name `{n}`"),
            SessionErrorKind::DuplicateName(n) => write!(f, "name `{n}` is already defined"),
            SessionErrorKind::Io(m) => write!(f, "{m}"),
            SessionErrorKind::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SessionError {}

type PResult<T> = Result<T, SessionError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSource {
    Quotient(Spanned<String>),
    Coker(Vec<Vec<Spanned<String>>>),
    Free(usize),
    Sum(Vec<Spanned<String>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Declaration<T> {
    pub name: String,
    pub pos: Pos,
    pub body: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CommandKind {
    Gb,
    Dim,
    Ext,
    Deficiency,
    Psupp,
    Psd,
    Ncm,
    Serre,
    AtPrime,
    Shallow,
    Report,
}

impl CommandKind {
    fn from_keyword(word: &str) -> Option<Self> {
        Some(match word {
            "gb" => CommandKind::Gb,
            "dim" => CommandKind::Dim,
            "ext" => CommandKind::Ext,
            "deficiency" => CommandKind::Deficiency,
            "psupp" => CommandKind::Psupp,
            "psd" => CommandKind::Psd,
            "ncm" => CommandKind::Ncm,
            "serre" => CommandKind::Serre,
            "at-prime" => CommandKind::AtPrime,
            "shallow" => CommandKind::Shallow,
            "report" => CommandKind::Report,
            _ => return None,
        })
    }

    pub fn keyword(self) -> &'static str {
        match self {
            CommandKind::Gb => "gb",
            CommandKind::Dim => "dim",
            CommandKind::Ext => "ext",
            CommandKind::Deficiency => "deficiency",
            CommandKind::Psupp => "psupp",
            CommandKind::Psd => "psd",
            CommandKind::Ncm => "ncm",
            CommandKind::Serre => "serre",
            CommandKind::AtPrime => "at-prime",
            CommandKind::Shallow => "shallow",
            CommandKind::Report => "report",
        }
    }

    /// Whether the command takes a trailing argument besides the target.
    fn takes_argument(self) -> bool {
        matches!(
            self,
            CommandKind::Ext
                | CommandKind::Psupp
                | CommandKind::Psd
                | CommandKind::Serre
                | CommandKind::AtPrime
                | CommandKind::Shallow
        )
    }
}

/// A command with its target resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub kind: CommandKind,
    pub target: String,
    /// Integer argument, or the prime name for `at-prime`.
    pub arg: Option<Spanned<String>>,
    pub pos: Pos,
}

impl Command {
    pub fn index(&self) -> usize {
        self.arg.as_ref().and_then(|a| a.value.parse().ok()).unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NameKind {
    Ideal,
    Module,
    Prime,
}

/// A parsed and name-checked session.
#[derive(Clone, Debug)]
pub struct SessionFile {
    pub field: FieldSpec,
    pub ring_pos: Pos,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub ideals: Vec<Declaration<Vec<Spanned<String>>>>,
    pub modules: Vec<Declaration<ModuleSource>>,
    pub primes: Vec<Declaration<Vec<Spanned<String>>>>,
    pub asserted_primes: Vec<String>,
    pub asserted_equidimensional: Vec<String>,
    pub commands: Vec<Command>,
    names: HashMap<String, NameKind>,
    ring: std::sync::Arc<Ring>,
}

struct Line<'a> {
    text: &'a str,
    number: usize,
}

impl<'a> Line<'a> {
    fn pos(&self, offset: usize) -> Pos {
        Pos { line: self.number, column: offset + 1 }
    }

    fn offset_of(&self, part: &str) -> usize {
        part.as_ptr() as usize - self.text.as_ptr() as usize
    }

    fn spanned(&self, part: &'a str) -> Spanned<String> {
        let trimmed = part.trim();
        let offset = if trimmed.is_empty() { self.offset_of(part) } else { self.offset_of(trimmed) };
        Spanned { value: trimmed.to_string(), pos: self.pos(offset) }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn split_word(s: &str) -> (&str, &str) {
    let s = s.trim_start();
    match s.find(char::is_whitespace) {
        Some(i) => (&s[..i], &s[i..]),
        None => (s, ""),
    }
}

/// Comma-separated items; empty items are syntax errors.
fn comma_list<'a>(line: &Line<'a>, body: &'a str, what: &str) -> PResult<Vec<Spanned<String>>> {
    let mut out = Vec::new();
    for part in body.split(',') {
        let item = line.spanned(part);
        if item.value.is_empty() {
            return Err(SessionError::syntax(item.pos, format!("empty {what} in list")));
        }
        out.push(item);
    }
    Ok(out)
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `name = body` after the keyword.
fn assignment<'a>(line: &Line<'a>, rest: &'a str) -> PResult<(Spanned<String>, &'a str)> {
    let Some(eq) = rest.find('=') else {
        return Err(SessionError::syntax(line.pos(line.offset_of(rest)), "expected `name = ...`"));
    };
    let name = line.spanned(&rest[..eq]);
    if !is_name(&name.value) {
        return Err(SessionError::syntax(name.pos, format!("invalid name `{}`", name.value)));
    }
    Ok((name, &rest[eq + 1..]))
}

fn parse_ring(line: &Line<'_>, rest: &str) -> PResult<(FieldSpec, Vec<String>, MonomialOrder)> {
    let start = line.offset_of(rest) + (rest.len() - rest.trim_start().len());
    let body = rest.trim();
    let err = |off: usize, m: &str| SessionError::syntax(line.pos(start + off), m);
    let Some(open) = body.find('[') else { return Err(err(0, "expected `FIELD[vars]`")) };
    let Some(close) = body.find(']') else { return Err(err(open, "unclosed `[`")) };
    let field = match &body[..open] {
        "QQ" => FieldSpec::Rationals,
        f if f.starts_with("GF(") && f.ends_with(')') => {
            let p: u64 = f[3..f.len() - 1].parse().map_err(|_| err(3, "invalid characteristic"))?;
            FieldSpec::Prime(p)
        }
        _ => return Err(err(0, "unknown field, expected `QQ` or `GF(p)`")),
    };
    let vars: Vec<String> = body[open + 1..close].split(',').map(|v| v.trim().to_string()).collect();
    let order = match body[close + 1..].trim() {
        "" | "grevlex" => MonomialOrder::Grevlex,
        "lex" => MonomialOrder::Lex,
        o if o.starts_with("elim") => {
            let block = o[4..].parse().map_err(|_| err(close + 1, "expected `elimK`"))?;
            MonomialOrder::Elimination { block }
        }
        _ => return Err(err(close + 1, "unknown monomial order")),
    };
    Ok((field, vars, order))
}

fn parse_matrix<'a>(line: &Line<'a>, body: &'a str) -> PResult<Vec<Vec<Spanned<String>>>> {
    let base = line.offset_of(body);
    let t = body.trim_end();
    let lead = t.len() - t.trim_start().len();
    let t = t.trim_start();
    if !t.starts_with('[') || !t.ends_with(']') {
        return Err(SessionError::syntax(line.pos(base + lead), "expected `[[...], ...]`"));
    }
    let inner = &t[1..t.len() - 1];
    let mut rows = Vec::new();
    let mut depth = 0;
    let mut row_start = None;
    let mut expect_row = true;
    for (i, c) in inner.char_indices() {
        match c {
            '[' => {
                if depth != 0 || !expect_row {
                    return Err(SessionError::syntax(line.pos(line.offset_of(&inner[i..])), "unexpected `[`"));
                }
                depth = 1;
                row_start = Some(i + 1);
            }
            ']' => {
                if depth != 1 {
                    return Err(SessionError::syntax(line.pos(line.offset_of(&inner[i..])), "unexpected `]`"));
                }
                depth = 0;
                let row = &inner[row_start.take().unwrap()..i];
                rows.push(comma_list(line, row, "entry")?);
                expect_row = false;
            }
            ',' if depth == 0 => {
                if expect_row {
                    return Err(SessionError::syntax(line.pos(line.offset_of(&inner[i..])), "empty row"));
                }
                expect_row = true;
            }
            c if depth == 0 && !c.is_whitespace() => {
                return Err(SessionError::syntax(line.pos(line.offset_of(&inner[i..])), "expected `[`"));
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(SessionError::syntax(line.pos(base + lead), "unclosed row"));
    }
    if expect_row && !rows.is_empty() {
        return Err(SessionError::syntax(line.pos(base + t.len()), "trailing comma"));
    }
    if let Some(w) = rows.first().map(|r| r.len()) {
        if let Some(bad) = rows.iter().find(|r| r.len() != w) {
            return Err(SessionError::syntax(bad[0].pos, "rows have different lengths"));
        }
    }
    Ok(rows)
}

impl SessionFile {
    pub fn ring(&self) -> &std::sync::Arc<Ring> {
        &self.ring
    }

    pub fn kind_of(&self, name: &str) -> Option<NameKind> {
        self.names.get(name).copied()
    }

    fn declare(&mut self, name: &Spanned<String>, kind: NameKind) -> PResult<()> {
        if self.names.contains_key(&name.value) || self.ring.var_index(&name.value).is_some() {
            return Err(SessionError { pos: name.pos, kind: SessionErrorKind::DuplicateName(name.value.clone()) });
        }
        self.names.insert(name.value.clone(), kind);
        Ok(())
    }

    fn expect(&self, name: &Spanned<String>, kinds: &[NameKind]) -> PResult<()> {
        match self.names.get(&name.value) {
            Some(k) if kinds.contains(k) => Ok(()),
            Some(k) => Err(SessionError::syntax(
                name.pos,
                format!("`{}` is {:?}, expected {:?}", name.value, k, kinds).to_lowercase(),
            )),
            None => Err(SessionError { pos: name.pos, kind: SessionErrorKind::UndefinedName(name.value.clone()) }),
        }
    }

    fn check_polys(&self, items: &[Spanned<String>]) -> PResult<()> {
        for it in items {
            parse_polynomial::<Rational>(&it.value, &self.ring).map_err(|e| SessionError::algebra(it.pos, e))?;
        }
        Ok(())
    }

    fn last_module(&self) -> Option<&str> {
        self.modules.last().map(|m| m.name.as_str())
    }

    /// Parses one command. Without an explicit target the last declared
    /// module is used.
    pub fn parse_command(&self, text: &str, line_number: usize) -> PResult<Command> {
        let line = Line { text, number: line_number };
        let (word, rest) = split_word(text);
        let pos = line.pos(line.offset_of(word));
        let Some(kind) = CommandKind::from_keyword(word) else {
            return Err(SessionError::syntax(pos, format!("unknown command `{word}`")));
        };
        let args: Vec<Spanned<String>> = rest.split_whitespace().map(|a| line.spanned(a)).collect();
        let wanted = usize::from(kind.takes_argument());
        let (target, arg) = match args.len() {
            n if n == wanted => (None, args.first().cloned().filter(|_| wanted == 1)),
            n if n == wanted + 1 => (Some(args[0].clone()), args.get(1).cloned()),
            _ => return Err(SessionError::syntax(pos, format!("wrong number of arguments to `{word}`"))),
        };
        let target = match target {
            Some(t) => {
                let kinds: &[NameKind] = match kind {
                    CommandKind::Gb => &[NameKind::Ideal],
                    CommandKind::Dim => &[NameKind::Ideal, NameKind::Module],
                    _ => &[NameKind::Module],
                };
                self.expect(&t, kinds)?;
                t.value
            }
            None if kind == CommandKind::Gb => {
                match self.ideals.last() {
                    Some(i) => i.name.clone(),
                    None => return Err(SessionError::syntax(pos, "no ideal declared")),
                }
            }
            None => match self.last_module() {
                Some(m) => m.to_string(),
                None => return Err(SessionError::syntax(pos, "no module declared")),
            },
        };
        if let Some(a) = &arg {
            if kind == CommandKind::AtPrime {
                self.expect(a, &[NameKind::Prime])?;
            } else if a.value.parse::<usize>().is_err() {
                return Err(SessionError::syntax(a.pos, format!("expected a nonnegative integer, found `{}`", a.value)));
            }
        }
        Ok(Command { kind, target, arg, pos })
    }
}

/// Parses and name-checks a session file.
pub fn parse_session(text: &str) -> PResult<SessionFile> {
    let mut session: Option<SessionFile> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = Line { text: raw, number: idx + 1 };
        let content = strip_comment(raw);
        if content.trim().is_empty() {
            continue;
        }
        let (word, rest) = split_word(content);
        let word_pos = line.pos(line.offset_of(word));
        if word == "ring" {
            if session.is_some() {
                return Err(SessionError::syntax(word_pos, "only one ring per session"));
            }
            let (field, vars, order) = parse_ring(&line, rest)?;
            let ring = Ring::new(&vars, order).map_err(|e| SessionError::algebra(word_pos, e))?;
            session = Some(SessionFile {
                field,
                ring_pos: word_pos,
                vars,
                order,
                ideals: Vec::new(),
                modules: Vec::new(),
                primes: Vec::new(),
                asserted_primes: Vec::new(),
                asserted_equidimensional: Vec::new(),
                commands: Vec::new(),
                names: HashMap::new(),
                ring,
            });
            continue;
        }
        let Some(s) = session.as_mut() else {
            return Err(SessionError::syntax(word_pos, "the first declaration must be `ring`"));
        };
        match word {
            "ideal" | "prime" => {
                let (name, body) = assignment(&line, rest)?;
                let gens = comma_list(&line, body, "generator")?;
                s.check_polys(&gens)?;
                let kind = if word == "ideal" { NameKind::Ideal } else { NameKind::Prime };
                s.declare(&name, kind)?;
                let decl = Declaration { name: name.value, pos: name.pos, body: gens };
                if word == "ideal" {
                    s.ideals.push(decl);
                } else {
                    s.primes.push(decl);
                }
            }
            "module" => {
                let (name, body) = assignment(&line, rest)?;
                let (kind, arg) = split_word(body);
                let kind_pos = line.pos(line.offset_of(kind));
                let source = match kind {
                    "quotient" => {
                        let target = line.spanned(arg);
                        s.expect(&target, &[NameKind::Ideal])?;
                        ModuleSource::Quotient(target)
                    }
                    "coker" => {
                        let rows = parse_matrix(&line, arg)?;
                        for r in &rows {
                            s.check_polys(r)?;
                        }
                        ModuleSource::Coker(rows)
                    }
                    "free" => {
                        let n = line.spanned(arg);
                        let rank = n
                            .value
                            .parse()
                            .map_err(|_| SessionError::syntax(n.pos, "expected a rank"))?;
                        ModuleSource::Free(rank)
                    }
                    "sum" => {
                        let parts = comma_list(&line, arg, "summand")?;
                        for p in &parts {
                            s.expect(p, &[NameKind::Module])?;
                        }
                        ModuleSource::Sum(parts)
                    }
                    _ => {
                        return Err(SessionError::syntax(
                            kind_pos,
                            "expected `quotient`, `coker`, `free` or `sum`",
                        ))
                    }
                };
                s.declare(&name, NameKind::Module)?;
                s.modules.push(Declaration { name: name.value, pos: name.pos, body: source });
            }
            "assert-prime" | "assert-equidimensional" => {
                let target = line.spanned(rest);
                let kind = if word == "assert-prime" { NameKind::Prime } else { NameKind::Module };
                s.expect(&target, &[kind])?;
                if word == "assert-prime" {
                    s.asserted_primes.push(target.value);
                } else {
                    s.asserted_equidimensional.push(target.value);
                }
            }
            _ => {
                let cmd = s.parse_command(content, line.number)?;
                s.commands.push(cmd);
            }
        }
    }
    session.ok_or_else(|| SessionError::syntax(Pos { line: 1, column: 1 }, "missing `ring` declaration"))
}
