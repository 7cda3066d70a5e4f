//! Sylow subgroups, p-cores, the Fitting subgroup and Fitting height.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{is_power_of, p_part, prime_divisors};
use crate::error::{Error, Result};
use crate::group::{Closure, GroupTable};
use crate::hom::quotient;
use crate::subgroup::{generated_subgroup, normalizer, Subgroup};

/// A Sylow `p`-subgroup, grown from a cyclic subgroup of order `p` by
/// repeatedly adjoining a `p`-element of the normalizer.
pub fn sylow_subgroup(g: &GroupTable, p: usize) -> Result<Subgroup> {
    let target = p_part(g.order(), p);
    if target == 1 {
        return Ok(Subgroup::trivial(g));
    }
    let x = g
        .elements()
        .find(|&x| g.elem_order(x) == p)
        .ok_or_else(|| Error::Internal(format!("no element of order {p} in a group of order {}", g.order())))?;
    let mut gens = vec![x];
    let mut current = generated_subgroup(g, [x]);
    while current.order() < target {
        let norm = normalizer(g, &current);
        let y = norm
            .iter()
            .find(|&y| !current.contains(y) && is_power_of(g.elem_order(y), p))
            .ok_or_else(|| {
                Error::Internal(format!(
                    "p-subgroup of order {} for p = {p} cannot be extended",
                    current.order()
                ))
            })?;
        gens.push(y);
        current = generated_subgroup(g, gens.iter().copied());
    }
    Ok(current)
}

/// `O_p(G)`: the intersection of all conjugates of a Sylow `p`-subgroup.
pub fn p_core(g: &GroupTable, p: usize) -> Result<Subgroup> {
    let sylow = sylow_subgroup(g, p)?;
    let core = sylow
        .iter()
        .filter(|&x| g.elements().all(|y| sylow.contains(g.conjugate(x, y))));
    let mut closure = Closure::new(g);
    for x in core {
        closure.add(x);
    }
    let core = Subgroup::from_closure(g, closure);
    debug_assert!(core.is_normal() && core.is_p_group(p));
    Ok(core)
}

/// `F(G)`, generated by the p-cores for every prime dividing `|G|`.
pub fn fitting_subgroup(g: &GroupTable) -> Result<Subgroup> {
    let mut seeds = Vec::new();
    for p in prime_divisors(g.order()) {
        seeds.extend(p_core(g, p)?.iter());
    }
    Ok(generated_subgroup(g, seeds))
}

/// Fitting height, defined only for soluble groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FittingHeight {
    Finite(usize),
    Insoluble,
}

impl FittingHeight {
    pub fn value(self) -> Option<usize> {
        match self {
            FittingHeight::Finite(h) => Some(h),
            FittingHeight::Insoluble => None,
        }
    }

    pub fn is_at_most(self, k: usize) -> bool {
        matches!(self, FittingHeight::Finite(h) if h <= k)
    }

    pub fn is_soluble(self) -> bool {
        matches!(self, FittingHeight::Finite(_))
    }
}

impl fmt::Display for FittingHeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FittingHeight::Finite(h) => write!(f, "{h}"),
            FittingHeight::Insoluble => write!(f, "insoluble"),
        }
    }
}

/// Serialized as a bare integer, or the string `"insoluble"`.
impl Serialize for FittingHeight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            FittingHeight::Finite(h) => s.serialize_u64(*h as u64),
            FittingHeight::Insoluble => s.serialize_str("insoluble"),
        }
    }
}

/// Counts the steps `G ← G/F(G)` needed to reach the trivial group.
pub fn fitting_height(g: &GroupTable) -> Result<FittingHeight> {
    let mut current = g.clone();
    let mut height = 0;
    while !current.is_trivial() {
        let f = fitting_subgroup(&current)?;
        if f.is_trivial() {
            return Ok(FittingHeight::Insoluble);
        }
        current = quotient(&current, &f)?.0;
        height += 1;
    }
    Ok(FittingHeight::Finite(height))
}
