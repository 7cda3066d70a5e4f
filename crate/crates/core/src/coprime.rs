//! δ*-commutators, their power closures, and the lower Fitting series.
//!
//! Every element is a δ₀*-commutator. For `k ≥ 1`, with `T` the set of
//! powers of δ_{k-1}*-commutators, a δ_k*-commutator is any `[a, b]` with
//! `a, b ∈ T` of coprime orders. The subgroup generated by the
//! δ_k*-commutators coincides with `D_k(G)`, where `D₀ = G` and
//! `D_{k+1} = γ∞(D_k)`.

use std::sync::{Arc, Mutex};

use fixedbitset::FixedBitSet;

use crate::arith::{gcd, is_prime, p_part};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::series::{is_soluble, nilpotent_residual_of, SeriesKind, SeriesReport};
use crate::subgroup::{generated_subgroup, Subgroup};
use crate::sylow::sylow_subgroup;
use crate::verdict::{CheckStatus, CheckVerdict};

/// Default cap on the number of lower Fitting steps.
pub const MAX_SERIES_DEPTH: usize = 8;

#[derive(Clone, Debug)]
pub struct DeltaSet {
    pub parent: GroupTable,
    pub level: usize,
    pub commutators: FixedBitSet,
    pub power_closure: FixedBitSet,
}

impl DeltaSet {
    fn top(g: &GroupTable) -> Self {
        let mut all = FixedBitSet::with_capacity(g.order());
        all.insert_range(..);
        DeltaSet {
            parent: g.clone(),
            level: 0,
            commutators: all.clone(),
            power_closure: all,
        }
    }

    fn next(&self) -> Self {
        let g = &self.parent;
        let t: Vec<(usize, usize)> = self.power_closure.ones().map(|x| (x, g.elem_order(x))).collect();
        let mut commutators = FixedBitSet::with_capacity(g.order());
        for &(a, oa) in &t {
            for &(b, ob) in &t {
                if gcd(oa, ob) == 1 {
                    commutators.insert(g.commutator(a, b));
                }
            }
        }
        let power_closure = power_closure(g, commutators.ones());
        DeltaSet {
            parent: g.clone(),
            level: self.level + 1,
            commutators,
            power_closure,
        }
    }

    pub fn commutator_list(&self) -> Vec<usize> {
        self.commutators.ones().collect()
    }

    pub fn power_list(&self) -> Vec<usize> {
        self.power_closure.ones().collect()
    }
}

/// `{ s^m : s ∈ S, m ≥ 0 }`. The empty set maps to the empty set.
pub fn power_closure(g: &GroupTable, set: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(g.order());
    for s in set {
        // anything already present lies in a cyclic subgroup we have added
        if out.contains(s) {
            continue;
        }
        let mut x = s;
        loop {
            out.insert(x);
            if x == 0 {
                break;
            }
            x = g.mul(x, s);
        }
    }
    out
}

pub fn delta_star_set(g: &GroupTable, k: usize) -> DeltaSet {
    let mut set = DeltaSet::top(g);
    for _ in 0..k {
        set = set.next();
    }
    set
}

/// Per-group cache of δ-sets, filled on demand and shared between threads.
pub struct DeltaLadder {
    group: GroupTable,
    levels: Mutex<Vec<Arc<DeltaSet>>>,
}

impl DeltaLadder {
    pub fn new(group: &GroupTable) -> Self {
        DeltaLadder {
            group: group.clone(),
            levels: Mutex::new(Vec::new()),
        }
    }

    pub fn level(&self, k: usize) -> Arc<DeltaSet> {
        let mut levels = self.levels.lock().unwrap();
        if levels.is_empty() {
            levels.push(Arc::new(DeltaSet::top(&self.group)));
        }
        while levels.len() <= k {
            let next = levels.last().unwrap().next();
            levels.push(Arc::new(next));
        }
        levels[k].clone()
    }
}

/// `D₀ ⊇ D₁ ⊇ …` with each term the nilpotent residual of the previous,
/// computed on its standalone table. Stops at a fixed point or after
/// `max_k` steps.
pub fn lower_fitting_series(g: &GroupTable, max_k: usize) -> Result<SeriesReport> {
    if max_k == 0 || max_k > MAX_SERIES_DEPTH {
        return Err(Error::Parameter(format!(
            "max_k must lie in 1..={MAX_SERIES_DEPTH}, got {max_k}"
        )));
    }
    Ok(lower_fitting_chain(g, Some(max_k)))
}

/// The lower Fitting series run to its fixed point. Each step has index at
/// least 2, so this takes at most `log2 |G|` steps.
pub fn full_lower_fitting_series(g: &GroupTable) -> SeriesReport {
    lower_fitting_chain(g, None)
}

fn lower_fitting_chain(g: &GroupTable, max_k: Option<usize>) -> SeriesReport {
    let mut terms = vec![Subgroup::whole(g)];
    let mut stabilized = false;
    loop {
        let last = terms.last().unwrap();
        let next = nilpotent_residual_of(last);
        if &next == last {
            stabilized = true;
            break;
        }
        if max_k.is_some_and(|m| terms.len() > m) {
            break;
        }
        terms.push(next);
    }
    SeriesReport {
        kind: SeriesKind::LowerFitting,
        terms,
        stabilized,
    }
}

/// `D_k(G)` read off the lower Fitting series.
pub fn lower_fitting_term(g: &GroupTable, k: usize) -> Subgroup {
    full_lower_fitting_series(g)
        .term(k)
        .cloned()
        .expect("a full series is stabilized")
}

/// The subgroup generated by the δ_k*-commutators.
pub fn generated_dk(g: &GroupTable, k: usize) -> Subgroup {
    generated_subgroup(g, delta_star_set(g, k).commutators.ones())
}

/// Focal-subgroup check for δ_k*-commutators: with `P` a Sylow
/// `p`-subgroup and `n` the `p'`-part of `|G|`, the `n`-th powers of
/// δ_k*-commutators that land in `P` should generate `P ∩ D_k(G)`.
///
/// The stricter reading, powers of commutators that themselves lie in
/// `P`, is evaluated too and reported in the note.
pub fn focal_check(g: &GroupTable, k: usize, p: usize) -> Result<CheckVerdict> {
    if !is_prime(p) || !g.order().is_multiple_of(p) {
        return Err(Error::Parameter(format!("{p} is not a prime divisor of {}", g.order())));
    }
    if !is_soluble(g) {
        return Err(Error::HypothesisNotMet(format!("{} is not soluble", g.label())));
    }
    let delta = delta_star_set(g, k);
    let dk = lower_fitting_term(g, k);
    focal_verdict(g, k, p, &delta, &dk)
}

pub(crate) fn focal_verdict(
    g: &GroupTable,
    k: usize,
    p: usize,
    delta: &DeltaSet,
    dk: &Subgroup,
) -> Result<CheckVerdict> {
    let sylow = sylow_subgroup(g, p)?;
    let n = g.order() / p_part(g.order(), p);
    let powers: Vec<(usize, usize)> = delta.commutators.ones().map(|c| (c, g.pow(c, n))).collect();
    let generated = generated_subgroup(
        g,
        powers.iter().filter(|&&(_, cn)| sylow.contains(cn)).map(|&(_, cn)| cn),
    );
    let strict = generated_subgroup(g, powers.iter().filter(|&&(c, _)| sylow.contains(c)).map(|&(_, cn)| cn));
    let target = sylow.intersection(dk);
    let holds = generated == target;
    let mut note = format!(
        "|P|={}, |P∩D_{k}|={}, generated={}, commutators-in-P reading {}",
        sylow.order(),
        target.order(),
        generated.order(),
        if strict == target { "agrees" } else { "differs" },
    );
    if !holds {
        let diff = (generated.members() ^ target.members())
            .ones()
            .next()
            .expect("unequal sets differ somewhere");
        note.push_str(&format!(", first mismatch at element {diff}"));
    }
    Ok(CheckVerdict::new(format!("focal:p{p}:k{k}"), CheckStatus::Proved, true, holds).with_note(note))
}
