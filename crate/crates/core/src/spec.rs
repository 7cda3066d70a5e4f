//! The group-spec language.
//!
//! ```text
//! spec   := atom | "product" "(" spec { "," spec } ")" ;
//! atom   := ("cyclic"|"dihedral"|"dicyclic"|"sym"|"alt") "(" int ")"
//!         | "semidirect" "(" int "," int "," int ")"
//!         | "perm" "(" int ";" cycles { "," cycles } ")"
//!         | "table" "(" path ")" ;
//! cycles := { "(" int { " " int } ")" } ;
//! ```
//!
//! Whitespace between tokens is ignored. Points in `perm` cycles are
//! 1-based; each comma-separated group of cycles is one generator, the
//! cycles composed left to right.

use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::error::Result;
use crate::group::{direct_product, semidirect_cyclic, validate_semidirect, GroupTable, Limits};
use crate::perm::Perm;

/// Largest degree accepted by `sym` and `alt`.
pub const MAX_SYM_DEGREE: u64 = 7;

/// Largest degree accepted by `perm`.
pub const MAX_PERM_DEGREE: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u64),
    Dihedral(u64),
    Dicyclic(u64),
    Sym(u64),
    Alt(u64),
    Semidirect {
        p: u64,
        q: u64,
        r: u64,
    },
    /// `generators[g]` is a list of 1-based cycles.
    Perm {
        degree: u64,
        generators: Vec<Vec<Vec<u64>>>,
    },
    Table(String),
    Product(Vec<GroupSpec>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Range,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    /// Tokens that would have been accepted; empty for range errors.
    pub expected: Vec<String>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl ParseError {
    /// Shifts the line number, for specs embedded in a larger file.
    pub fn at_line_offset(mut self, offset: usize) -> Self {
        self.line += offset;
        self
    }
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

impl GroupSpec {
    /// Order implied by the spec alone; `None` for `perm` and `table`.
    pub fn predicted_order(&self) -> Option<u128> {
        match *self {
            GroupSpec::Cyclic(n) => Some(n as u128),
            GroupSpec::Dihedral(n) => Some(2 * n as u128),
            GroupSpec::Dicyclic(n) => Some(4 * n as u128),
            GroupSpec::Sym(n) => Some(factorial(n)),
            GroupSpec::Alt(n) => Some(if n < 2 { 1 } else { factorial(n) / 2 }),
            GroupSpec::Semidirect { p, q, .. } => Some(p as u128 * q as u128),
            GroupSpec::Perm { .. } | GroupSpec::Table(_) => None,
            GroupSpec::Product(ref parts) => parts
                .iter()
                .try_fold(1u128, |acc, s| acc.checked_mul(s.predicted_order()?)),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupSpec::Dicyclic(n) => write!(f, "dicyclic({n})"),
            GroupSpec::Sym(n) => write!(f, "sym({n})"),
            GroupSpec::Alt(n) => write!(f, "alt({n})"),
            GroupSpec::Semidirect { p, q, r } => write!(f, "semidirect({p}, {q}, {r})"),
            GroupSpec::Perm { degree, generators } => {
                write!(f, "perm({degree};")?;
                for (i, gen) in generators.iter().enumerate() {
                    f.write_str(if i == 0 { " " } else { ", " })?;
                    for cycle in gen {
                        let pts: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
                        write!(f, "({})", pts.join(" "))?;
                    }
                }
                write!(f, ")")
            }
            GroupSpec::Table(path) => write!(f, "table({path})"),
            GroupSpec::Product(parts) => {
                write!(f, "product(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec, ParseError> {
    parse_spec_with(text, &Limits::default())
}

pub fn parse_spec_with(text: &str, limits: &Limits) -> Result<GroupSpec, ParseError> {
    let mut parser = Parser {
        src: text,
        pos: 0,
        limits,
    };
    let spec = parser.spec()?;
    parser.skip_ws();
    if parser.pos < text.len() {
        return Err(parser.syntax(&["end of input"]));
    }
    Ok(spec)
}

impl std::str::FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_spec(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    limits: &'a Limits,
}

impl<'a> Parser<'a> {
    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before
            .rfind('\n')
            .map_or(before.chars().count(), |i| before[i + 1..].chars().count())
            + 1;
        (line, column)
    }

    fn syntax(&self, expected: &[&str]) -> ParseError {
        let (line, column) = self.location(self.pos);
        let found = match self.peek() {
            Some(c) => format!("found {c:?}"),
            None => "found end of input".to_string(),
        };
        ParseError {
            kind: ParseErrorKind::Syntax,
            line,
            column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            message: format!("syntax error, {found}"),
        }
    }

    fn range(&self, at: usize, message: String) -> ParseError {
        let (line, column) = self.location(at);
        ParseError {
            kind: ParseErrorKind::Range,
            line,
            column,
            expected: Vec::new(),
            message,
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char, expected: &[&str]) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.syntax(expected))
        }
    }

    fn ident(&mut self) -> Result<(&'a str, usize), ParseError> {
        self.skip_ws();
        let src = self.src;
        let start = self.pos;
        let len = src[start..]
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(src.len() - start);
        if len == 0 {
            return Err(self.syntax(&CONSTRUCTORS));
        }
        self.pos += len;
        Ok((&src[start..start + len], start))
    }

    fn int(&mut self, expected: &[&str]) -> Result<(u64, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.syntax(expected));
        }
        self.pos += len;
        let value = self.src[start..start + len]
            .parse::<u64>()
            .map_err(|_| self.range(start, "integer is too large".into()))?;
        Ok((value, start))
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let (name, start) = self.ident()?;
        let spec = match name {
            "product" => {
                self.eat('(', &["("])?;
                let mut parts = vec![self.spec()?];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(',') => {
                            self.pos += 1;
                            parts.push(self.spec()?);
                        }
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.syntax(&[",", ")"])),
                    }
                }
                GroupSpec::Product(parts)
            }
            "cyclic" | "dihedral" | "dicyclic" | "sym" | "alt" => {
                self.eat('(', &["("])?;
                let (n, _) = self.int(&["integer"])?;
                self.eat(')', &[")"])?;
                match name {
                    "cyclic" => GroupSpec::Cyclic(n),
                    "dihedral" => GroupSpec::Dihedral(n),
                    "dicyclic" => GroupSpec::Dicyclic(n),
                    "sym" => GroupSpec::Sym(n),
                    _ => GroupSpec::Alt(n),
                }
            }
            "semidirect" => {
                self.eat('(', &["("])?;
                let (p, _) = self.int(&["integer"])?;
                self.eat(',', &[","])?;
                let (q, _) = self.int(&["integer"])?;
                self.eat(',', &[","])?;
                let (r, _) = self.int(&["integer"])?;
                self.eat(')', &[")"])?;
                GroupSpec::Semidirect { p, q, r }
            }
            "perm" => self.perm()?,
            "table" => {
                self.eat('(', &["("])?;
                let src = self.src;
                let rest = &src[self.pos..];
                let Some(end) = rest.find(')') else {
                    self.pos = src.len();
                    return Err(self.syntax(&["path", ")"]));
                };
                let path = rest[..end].trim().to_string();
                if path.is_empty() {
                    return Err(self.syntax(&["path"]));
                }
                self.pos += end + 1;
                GroupSpec::Table(path)
            }
            _ => {
                self.pos = start;
                return Err(self.syntax(&CONSTRUCTORS));
            }
        };
        self.validate(&spec, start)?;
        Ok(spec)
    }

    fn perm(&mut self) -> Result<GroupSpec, ParseError> {
        self.eat('(', &["("])?;
        let (degree, _) = self.int(&["integer"])?;
        self.eat(';', &[";"])?;
        let mut generators = Vec::new();
        let mut current: Vec<Vec<u64>> = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some('(') => {
                    self.pos += 1;
                    let mut cycle = vec![self.int(&["integer"])?];
                    loop {
                        self.skip_ws();
                        if self.peek() == Some(')') {
                            self.pos += 1;
                            break;
                        }
                        cycle.push(self.int(&["integer", ")"])?);
                    }
                    let mut points = Vec::with_capacity(cycle.len());
                    for (x, at) in cycle {
                        if x == 0 || x > degree {
                            return Err(self.range(at, format!("point {x} is outside 1..={degree}")));
                        }
                        if points.contains(&x) {
                            return Err(self.range(at, format!("point {x} repeats within a cycle")));
                        }
                        points.push(x);
                    }
                    current.push(points);
                }
                Some(',') => {
                    self.pos += 1;
                    generators.push(std::mem::take(&mut current));
                }
                Some(')') => {
                    self.pos += 1;
                    generators.push(current);
                    break;
                }
                _ => return Err(self.syntax(&["(", ",", ")"])),
            }
        }
        Ok(GroupSpec::Perm { degree, generators })
    }

    fn validate(&self, spec: &GroupSpec, at: usize) -> Result<(), ParseError> {
        let fail = |msg: String| Err(self.range(at, msg));
        match *spec {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) if n == 0 => {
                return fail(format!("{spec}: parameter must be at least 1"))
            }
            GroupSpec::Dicyclic(n) if n < 2 => return fail(format!("{spec}: parameter must be at least 2")),
            GroupSpec::Sym(n) | GroupSpec::Alt(n) if n == 0 || n > MAX_SYM_DEGREE => {
                return fail(format!("{spec}: degree must lie in 1..={MAX_SYM_DEGREE}"))
            }
            GroupSpec::Semidirect { p, q, r } => {
                let ok = usize::try_from(p)
                    .ok()
                    .zip(usize::try_from(q).ok())
                    .zip(usize::try_from(r).ok());
                let checked = match ok {
                    Some(((p, q), r)) => validate_semidirect(p, q, r).map_err(|e| e.to_string()),
                    None => Err("parameters too large".into()),
                };
                if let Err(msg) = checked {
                    return fail(msg);
                }
            }
            GroupSpec::Perm { degree, .. } if degree == 0 || degree > MAX_PERM_DEGREE => {
                return fail(format!("perm degree must lie in 1..={MAX_PERM_DEGREE}"))
            }
            _ => {}
        }
        if let Some(order) = spec.predicted_order() {
            if order > self.limits.max_order as u128 {
                return fail(format!(
                    "{spec} has order {order}, above the limit {}",
                    self.limits.max_order
                ));
            }
        }
        Ok(())
    }
}

const CONSTRUCTORS: [&str; 9] = [
    "cyclic",
    "dihedral",
    "dicyclic",
    "sym",
    "alt",
    "semidirect",
    "perm",
    "table",
    "product",
];

/// Builds the table a spec describes. The result's label is the spec's
/// canonical text.
pub fn realize(spec: &GroupSpec, limits: &Limits) -> Result<GroupTable> {
    let as_usize = |n: u64| usize::try_from(n).unwrap_or(usize::MAX);
    if let Some(order) = spec.predicted_order() {
        limits.check(usize::try_from(order).unwrap_or(usize::MAX))?;
    }
    let table = match spec {
        GroupSpec::Cyclic(n) => GroupTable::cyclic(as_usize(*n)),
        GroupSpec::Dihedral(n) => GroupTable::dihedral(as_usize(*n)),
        GroupSpec::Dicyclic(n) => GroupTable::dicyclic(as_usize(*n)),
        GroupSpec::Sym(n) => GroupTable::symmetric(as_usize(*n), limits)?,
        GroupSpec::Alt(n) => GroupTable::alternating(as_usize(*n), limits)?,
        GroupSpec::Semidirect { p, q, r } => semidirect_cyclic(as_usize(*p), as_usize(*q), as_usize(*r), limits)?,
        GroupSpec::Perm { degree, generators } => {
            let degree = as_usize(*degree);
            let perms = generators
                .iter()
                .map(|cycles| {
                    let zero_based: Vec<Vec<usize>> = cycles
                        .iter()
                        .map(|c| c.iter().map(|&x| as_usize(x) - 1).collect())
                        .collect();
                    Perm::from_cycles(degree, &zero_based)
                })
                .collect::<Result<Vec<_>>>()?;
            GroupTable::from_permutations(degree, &perms, limits)?
        }
        GroupSpec::Table(path) => GroupTable::read_table_file(Path::new(path), limits)?,
        GroupSpec::Product(parts) => {
            let mut acc = realize(&parts[0], limits)?;
            for part in &parts[1..] {
                let next = realize(part, limits)?;
                acc = direct_product(&acc, &next, limits)?;
            }
            acc
        }
    };
    Ok(table.with_label(spec.to_string()))
}
