//! Finite groups stored as dense Cayley tables.
//!
//! Elements are indices `0..order`; the identity is always index 0.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{gcd, pow_mod};
use crate::error::{Error, Result};
use crate::perm::Perm;

pub const DEFAULT_MAX_ORDER: usize = 5040;

/// Tables up to this order get the full `n³` associativity check.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;

/// Number of random triples checked above [`EXHAUSTIVE_ASSOC_LIMIT`].
pub const SAMPLED_ASSOC_TRIPLES: usize = 1_000_000;

const ASSOC_SAMPLE_SEED: u64 = 0x5eed_c0de;

/// Construction limits shared by every constructor that can blow up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    /// Force the full associativity check on large input tables.
    pub strict_assoc: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            strict_assoc: false,
        }
    }
}

impl Limits {
    pub fn check(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            Err(Error::SizeLimit {
                order,
                max_order: self.max_order,
            })
        } else {
            Ok(())
        }
    }
}

struct TableData {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    elem_order: Vec<u32>,
    generators: OnceLock<Vec<usize>>,
}

/// An immutable finite group. Cloning is cheap; clones share the table.
#[derive(Clone)]
pub struct GroupTable {
    data: Arc<TableData>,
    label: Arc<str>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("label", &self.label)
            .field("order", &self.order())
            .finish()
    }
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data.table == other.data.table
    }
}

impl Eq for GroupTable {}

impl GroupTable {
    /// Builds a table from a multiplication function that is known to
    /// define a group with identity 0.
    pub(crate) fn from_fn(order: usize, label: impl Into<Arc<str>>, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                table.push(mul(i, j) as u32);
            }
        }
        Self::from_raw(order, table, label).expect("constructor produced a non-group table")
    }

    /// Derives inverses and element orders from a flat row-major table.
    fn from_raw(order: usize, table: Vec<u32>, label: impl Into<Arc<str>>) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for (i, inv) in inverse.iter_mut().enumerate() {
            let row = &table[i * order..(i + 1) * order];
            let j = row
                .iter()
                .position(|&x| x == 0)
                .ok_or_else(|| Error::Validation(format!("element {i} has no right inverse")))?;
            if table[j * order + i] != 0 {
                return Err(Error::Validation(format!(
                    "element {i} has right inverse {j} that is not a left inverse"
                )));
            }
            *inv = j as u32;
        }
        let mut elem_order = vec![0u32; order];
        for (i, ord) in elem_order.iter_mut().enumerate() {
            let mut x = i;
            let mut m = 1u32;
            while x != 0 {
                x = table[x * order + i] as usize;
                m += 1;
                if m as usize > order {
                    return Err(Error::Validation(format!(
                        "powers of element {i} never reach the identity"
                    )));
                }
            }
            *ord = m;
        }
        Ok(GroupTable {
            data: Arc::new(TableData {
                order,
                table,
                inverse,
                elem_order,
                generators: OnceLock::new(),
            }),
            label: label.into(),
        })
    }

    /// Full Cayley table of the group generated by `generators`, found by
    /// breadth-first closure. Indices follow discovery order.
    pub fn from_permutations(degree: usize, generators: &[Perm], limits: &Limits) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Validation("permutation degree must be positive".into()));
        }
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::Validation(format!(
                "generator {bad} has degree {}, expected {degree}",
                bad.degree()
            )));
        }
        let mut elems = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        // parent[j] = (i, g) with elems[j] = elems[i] * generators[g]
        let mut parent = vec![(0usize, 0usize)];
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); generators.len()];
        let mut i = 0;
        while i < elems.len() {
            for (gi, g) in generators.iter().enumerate() {
                let y = elems[i].then(g);
                let idx = match index.get(&y) {
                    Some(&idx) => idx,
                    None => {
                        let idx = elems.len();
                        limits.check(idx + 1)?;
                        index.insert(y.clone(), idx);
                        elems.push(y);
                        parent.push((i, gi));
                        idx
                    }
                };
                right[gi].push(idx as u32);
            }
            i += 1;
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            table[x * n] = x as u32;
        }
        for j in 1..n {
            let (p, g) = parent[j];
            for x in 0..n {
                let xp = table[x * n + p] as usize;
                table[x * n + j] = right[g][xp];
            }
        }
        let label = format!("perm({degree}; {})", {
            let parts: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
            parts.join(", ")
        });
        Self::from_raw(n, table, label)
    }

    /// Validates an arbitrary square matrix as a group table. If the
    /// identity is not element 0 it is swapped into place.
    pub fn from_table(matrix: &[Vec<usize>], limits: &Limits) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::Validation("empty table".into()));
        }
        limits.check(n)?;
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::Validation(format!("entry {bad} in row {i} is out of range")));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|j| matrix[e][j] == j && matrix[j][e] == j))
            .ok_or_else(|| Error::Validation("table has no two-sided identity".into()))?;
        // swap labels e <-> 0; the swap is its own inverse
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[relabel(i) * n + relabel(j)] = relabel(matrix[i][j]) as u32;
            }
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if at(at(a, b), c) != at(a, at(b, c)) {
                Err(Error::NotAssociative {
                    a: relabel(a),
                    b: relabel(b),
                    c: relabel(c),
                })
            } else {
                Ok(())
            }
        };
        if n <= EXHAUSTIVE_ASSOC_LIMIT || limits.strict_assoc {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SAMPLE_SEED);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                check(a, b, c)?;
            }
        }
        Self::from_raw(n, table, format!("table[{n}]"))
    }

    /// Parses the plain-text table format: a line with `n`, then `n` rows of
    /// `n` whitespace-separated 0-based indices. Lines starting with `#` are
    /// comments.
    pub fn parse_table_text(text: &str, limits: &Limits) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, first) = lines
            .next()
            .ok_or_else(|| Error::Validation("table file is empty".into()))?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::Validation(format!("line {line_no}: expected the order, got {first:?}")))?;
        limits.check(n)?;
        let mut matrix = Vec::with_capacity(n);
        for row in 0..n {
            let (line_no, line) = lines
                .next()
                .ok_or_else(|| Error::Validation(format!("missing table row {row}")))?;
            let entries = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Validation(format!("line {line_no}: bad entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            matrix.push(entries);
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::Validation(format!("line {line_no}: trailing data after table")));
        }
        Self::from_table(&matrix, limits)
    }

    pub fn read_table_file(path: &Path, limits: &Limits) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(Self::parse_table_text(&text, limits)?.with_label(format!("table({})", path.display())))
    }

    /// Serializes in the format read by [`GroupTable::parse_table_text`].
    pub fn to_table_text(&self) -> String {
        let n = self.order();
        let mut out = format!("# {}\n{n}\n", self.label());
        for i in 0..n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        Self::from_fn(n, format!("cyclic({n})"), |i, j| (i + j) % n)
    }

    /// Dihedral group of order `2n`: `r^i s^j` has index `i + n*j`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        Self::from_fn(2 * n, format!("dihedral({n})"), |x, y| {
            let (a, b) = (x % n, x / n);
            let (c, d) = (y % n, y / n);
            let c = if b == 1 { (n - c) % n } else { c };
            (a + c) % n + n * ((b + d) % 2)
        })
    }

    /// Dicyclic group of order `4n` (`n = 2` gives the quaternions):
    /// `a^i x^j` has index `i + 2n*j`, with `x² = a^n` and `x a x⁻¹ = a⁻¹`.
    pub fn dicyclic(n: usize) -> Self {
        assert!(n >= 2);
        let m = 2 * n;
        Self::from_fn(4 * n, format!("dicyclic({n})"), |x, y| {
            let (a, b) = (x % m, x / m);
            let (c, d) = (y % m, y / m);
            let c = if b == 1 { (m - c) % m } else { c };
            let mut i = a + c;
            if b + d == 2 {
                i += n;
            }
            i % m + m * ((b + d) % 2)
        })
    }

    pub fn symmetric(n: usize, limits: &Limits) -> Result<Self> {
        let degree = n.max(1);
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(degree, &[vec![0, 1]])?);
            gens.push(Perm::from_cycles(degree, &[(0..n).collect()])?);
        }
        Ok(Self::from_permutations(degree, &gens, limits)?.with_label(format!("sym({n})")))
    }

    pub fn alternating(n: usize, limits: &Limits) -> Result<Self> {
        let degree = n.max(1);
        let gens = (2..n)
            .map(|k| Perm::from_cycles(degree, &[vec![0, 1, k]]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_permutations(degree, &gens, limits)?.with_label(format!("alt({n})")))
    }

    pub fn with_label(mut self, label: impl Into<Arc<str>>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.data.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.data.table[a * self.data.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.data.inverse[a] as usize
    }

    /// Order of `x`; panics if `x` is out of range.
    #[inline]
    pub fn elem_order(&self, x: usize) -> usize {
        self.data.elem_order[x] as usize
    }

    pub fn element_order(&self, x: usize) -> Result<usize> {
        if x >= self.order() {
            return Err(Error::Validation(format!(
                "element {x} out of range for order {}",
                self.order()
            )));
        }
        Ok(self.elem_order(x))
    }

    pub fn elem_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.data.elem_order.iter().map(|&o| o as usize)
    }

    pub fn row(&self, a: usize) -> &[u32] {
        let n = self.data.order;
        &self.data.table[a * n..(a + 1) * n]
    }

    pub fn pow(&self, x: usize, m: usize) -> usize {
        let m = m % self.elem_order(x);
        let mut acc = 0;
        for _ in 0..m {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        // x⁻¹y⁻¹xy = (yx)⁻¹(xy)
        self.mul(self.inv(yx), xy)
    }

    /// `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| self.commutes(a, b)))
    }

    /// A small generating set, chosen greedily by element index.
    pub fn generators(&self) -> &[usize] {
        self.data.generators.get_or_init(|| {
            let mut closure = Closure::new(self);
            for x in 0..self.order() {
                closure.add(x);
                if closure.len() == self.order() {
                    break;
                }
            }
            closure.gens
        })
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }
}

/// Incremental subgroup generation. Each new generator extends the current
/// element list by breadth-first right multiplication, so the cost is
/// `|H| * |gens|` overall.
pub(crate) struct Closure<'a> {
    group: &'a GroupTable,
    pub(crate) members: FixedBitSet,
    list: Vec<usize>,
    pub(crate) gens: Vec<usize>,
}

impl<'a> Closure<'a> {
    pub(crate) fn new(group: &'a GroupTable) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(0);
        Closure {
            group,
            members,
            list: vec![0],
            gens: Vec::new(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.list.len()
    }

    /// Adds `s` as a generator; returns whether the subgroup grew.
    pub(crate) fn add(&mut self, s: usize) -> bool {
        if self.members.contains(s) {
            return false;
        }
        self.gens.push(s);
        let old = self.list.len();
        for i in 0..old {
            let y = self.group.mul(self.list[i], s);
            self.push(y);
        }
        let mut i = old;
        while i < self.list.len() {
            let x = self.list[i];
            for k in 0..self.gens.len() {
                let y = self.group.mul(x, self.gens[k]);
                self.push(y);
            }
            i += 1;
        }
        true
    }

    fn push(&mut self, y: usize) {
        if !self.members.put(y) {
            self.list.push(y);
        }
    }
}

/// Componentwise product; the pair `(i, j)` gets index `i*|H| + j`.
pub fn direct_product(g: &GroupTable, h: &GroupTable, limits: &Limits) -> Result<GroupTable> {
    let m = h.order();
    let n = g.order() * m;
    limits.check(n)?;
    let label = format!("product({}, {})", g.label(), h.label());
    Ok(GroupTable::from_fn(n, label, |x, y| {
        g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
    }))
}

/// `C_p ⋊ C_q` where the `C_q` generator `b` acts by `b a b⁻¹ = a^r`.
/// The element `a^i b^j` has index `i*q + j`.
pub fn semidirect_cyclic(p: usize, q: usize, r: usize, limits: &Limits) -> Result<GroupTable> {
    validate_semidirect(p, q, r)?;
    limits.check(p * q)?;
    let r = r % p;
    // r^j mod p for j < q
    let twist: Vec<usize> = (0..q).map(|j| pow_mod(r as u64, j as u64, p as u64) as usize).collect();
    let label = format!("semidirect({p}, {q}, {r})");
    Ok(GroupTable::from_fn(p * q, label, |x, y| {
        let (i1, j1) = (x / q, x % q);
        let (i2, j2) = (y / q, y % q);
        ((i1 + i2 * twist[j1]) % p) * q + (j1 + j2) % q
    }))
}

pub fn validate_semidirect(p: usize, q: usize, r: usize) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::Parameter(format!(
            "semidirect({p}, {q}, {r}): p and q must be positive"
        )));
    }
    if gcd(r, p) != 1 {
        return Err(Error::Parameter(format!(
            "semidirect({p}, {q}, {r}): gcd(r, p) must be 1"
        )));
    }
    if pow_mod(r as u64, q as u64, p as u64) != 1 % p as u64 {
        return Err(Error::Parameter(format!(
            "semidirect({p}, {q}, {r}): r^q is not 1 mod p"
        )));
    }
    Ok(())
}
