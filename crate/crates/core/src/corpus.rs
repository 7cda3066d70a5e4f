//! Corpus files and the builtin corpus.
//!
//! A corpus file holds one spec per line; blank lines and lines starting
//! with `#` are skipped.

use std::path::Path;

use crate::arith::{gcd, pow_mod};
use crate::error::{Error, Result};
use crate::group::Limits;
use crate::spec::{parse_spec_with, GroupSpec};

/// The frozen builtin corpus, versioned with the crate.
pub const BUILTIN_CORPUS: &str = include_str!("../corpus/builtin.txt");

/// Number of groups in [`BUILTIN_CORPUS`].
pub const BUILTIN_CORPUS_SIZE: usize = 1730;

pub fn parse_corpus(text: &str, limits: &Limits) -> Result<Vec<GroupSpec>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let spec = parse_spec_with(trimmed, limits).map_err(|e| e.at_line_offset(i))?;
        out.push(spec);
    }
    Ok(out)
}

pub fn load_corpus(path: &Path, limits: &Limits) -> Result<Vec<GroupSpec>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_corpus(&text, limits)
}

pub fn builtin_corpus() -> Vec<GroupSpec> {
    parse_corpus(BUILTIN_CORPUS, &Limits::default()).expect("builtin corpus parses")
}

/// `builtin` or a path to a corpus file.
pub fn resolve_corpus(name: &str, limits: &Limits) -> Result<Vec<GroupSpec>> {
    if name == "builtin" {
        Ok(builtin_corpus())
    } else {
        load_corpus(Path::new(name), limits)
    }
}

/// The enumeration the frozen corpus was generated from:
///
/// * `cyclic(n)`, `n ≤ 24`; `dihedral(n)`, `n ≤ 12`; `dicyclic(2..=6)`;
///   `sym(3..=6)`; `alt(4..=6)`
/// * `semidirect(p, q, r)` for `p, q ≥ 2`, `pq ≤ 200`, `1 ≤ r < p` with
///   `gcd(r, p) = 1` and `r^q ≡ 1 (mod p)`
/// * unordered pairs (with repetition) from `sym(3)`, `sym(4)`,
///   `cyclic(2..=6)`, `dihedral(4)`, `alt(4)` as products
pub fn enumerate_builtin() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    out.extend((1..=24).map(GroupSpec::Cyclic));
    out.extend((1..=12).map(GroupSpec::Dihedral));
    out.extend((2..=6).map(GroupSpec::Dicyclic));
    out.extend((3..=6).map(GroupSpec::Sym));
    out.extend((4..=6).map(GroupSpec::Alt));
    for p in 2u64..=100 {
        for q in 2..=200 / p {
            for r in 1..p {
                if gcd(r, p) == 1 && pow_mod(r, q, p) == 1 {
                    out.push(GroupSpec::Semidirect { p, q, r });
                }
            }
        }
    }
    let mut factors = vec![GroupSpec::Sym(3), GroupSpec::Sym(4)];
    factors.extend((2..=6).map(GroupSpec::Cyclic));
    factors.push(GroupSpec::Dihedral(4));
    factors.push(GroupSpec::Alt(4));
    let max_order = Limits::default().max_order as u128;
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            let pair = GroupSpec::Product(vec![a.clone(), b.clone()]);
            if pair.predicted_order().is_some_and(|o| o <= max_order) {
                out.push(pair);
            }
        }
    }
    out
}
