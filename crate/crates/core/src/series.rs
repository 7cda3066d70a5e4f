//! Lower central and derived series, nilpotency and solubility.

use serde::Serialize;

use crate::group::GroupTable;
use crate::subgroup::{commutator_subgroup, subgroup_table, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    LowerCentral,
    Derived,
    LowerFitting,
}

/// A descending chain of subgroups starting at the whole group.
///
/// `terms` holds the distinct terms only. When `stabilized` is set, the
/// last term is a fixed point of the step map and every later index
/// refers to it; see [`SeriesReport::term`].
#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup>,
    pub stabilized: bool,
}

impl SeriesReport {
    /// Term `k`, repeating the stable term past the end. `None` if the
    /// series was cut off before reaching `k`.
    pub fn term(&self, k: usize) -> Option<&Subgroup> {
        match self.terms.get(k) {
            Some(t) => Some(t),
            None if self.stabilized => self.terms.last(),
            None => None,
        }
    }

    pub fn last(&self) -> &Subgroup {
        self.terms.last().expect("series has at least one term")
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }

    /// Length of the chain below the top, i.e. the number of steps taken.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }
}

fn iterate(g: &GroupTable, kind: SeriesKind, step: impl Fn(&Subgroup) -> Subgroup) -> SeriesReport {
    let mut terms = vec![Subgroup::whole(g)];
    loop {
        let next = step(terms.last().unwrap());
        if &next == terms.last().unwrap() {
            break;
        }
        terms.push(next);
    }
    SeriesReport {
        kind,
        terms,
        stabilized: true,
    }
}

/// `γ₁ = G`, `γ_{i+1} = [γ_i, G]`, iterated to its fixed point `γ∞(G)`.
pub fn lower_central_series(g: &GroupTable) -> SeriesReport {
    let whole = Subgroup::whole(g);
    iterate(g, SeriesKind::LowerCentral, |t| commutator_subgroup(t, &whole))
}

pub fn derived_series(g: &GroupTable) -> SeriesReport {
    iterate(g, SeriesKind::Derived, |t| commutator_subgroup(t, t))
}

pub fn nilpotent_residual(g: &GroupTable) -> Subgroup {
    lower_central_series(g).last().clone()
}

/// `γ∞(H)` computed on the standalone table of `H`, as a subgroup of the
/// parent.
pub fn nilpotent_residual_of(h: &Subgroup) -> Subgroup {
    let (table, inclusion) = subgroup_table(h);
    inclusion.push_forward(&nilpotent_residual(&table))
}

pub fn is_nilpotent(h: &Subgroup) -> bool {
    let (table, _) = subgroup_table(h);
    is_nilpotent_group(&table)
}

pub fn is_nilpotent_group(g: &GroupTable) -> bool {
    nilpotent_residual(g).is_trivial()
}

pub fn is_soluble(g: &GroupTable) -> bool {
    derived_series(g).last().is_trivial()
}
