//! Subgroups as materialized element sets of a parent table.

use std::collections::BTreeMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{Closure, GroupTable};
use crate::hom::GroupHom;

#[derive(Clone)]
pub struct Subgroup {
    parent: GroupTable,
    members: FixedBitSet,
    size: usize,
    generators: Option<Vec<usize>>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent.order() == other.parent.order() && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.parent.label())
            .field("order", &self.size)
            .field("members", &self.to_vec())
            .finish()
    }
}

impl Subgroup {
    fn from_bits(parent: &GroupTable, members: FixedBitSet, generators: Option<Vec<usize>>) -> Self {
        let size = members.count_ones(..);
        Subgroup {
            parent: parent.clone(),
            members,
            size,
            generators,
        }
    }

    pub(crate) fn from_closure(parent: &GroupTable, closure: Closure<'_>) -> Self {
        let gens = closure.gens;
        Self::from_bits(parent, closure.members, Some(gens))
    }

    /// Wraps an element set, checking that it contains the identity and is
    /// closed under multiplication.
    pub fn from_members(parent: &GroupTable, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = FixedBitSet::with_capacity(parent.order());
        for x in members {
            if x >= parent.order() {
                return Err(Error::Validation(format!("element {x} out of range")));
            }
            bits.insert(x);
        }
        if !bits.contains(0) {
            return Err(Error::Validation("subgroup must contain the identity".into()));
        }
        let list: Vec<usize> = bits.ones().collect();
        for &a in &list {
            for &b in &list {
                if !bits.contains(parent.mul(a, b)) {
                    return Err(Error::Validation(format!("set is not closed: {a}*{b} is missing")));
                }
            }
        }
        Ok(Self::from_bits(parent, bits, None))
    }

    /// Trusted constructor for sets known to be subgroups.
    pub(crate) fn from_members_unchecked(parent: &GroupTable, members: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = FixedBitSet::with_capacity(parent.order());
        bits.extend(members);
        debug_assert!(bits.contains(0));
        Self::from_bits(parent, bits, None)
    }

    pub fn whole(parent: &GroupTable) -> Self {
        let mut bits = FixedBitSet::with_capacity(parent.order());
        bits.insert_range(..);
        Self::from_bits(parent, bits, Some(parent.generators().to_vec()))
    }

    pub fn trivial(parent: &GroupTable) -> Self {
        let mut bits = FixedBitSet::with_capacity(parent.order());
        bits.insert(0);
        Self::from_bits(parent, bits, Some(Vec::new()))
    }

    pub fn parent(&self) -> &GroupTable {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.size
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.size
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn is_whole(&self) -> bool {
        self.size == self.parent.order()
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    /// Stored generators, or a greedy generating set if none were recorded.
    pub fn generating_set(&self) -> Vec<usize> {
        if let Some(g) = &self.generators {
            return g.clone();
        }
        let mut closure = Closure::new(&self.parent);
        for x in self.iter() {
            closure.add(x);
            if closure.len() == self.size {
                break;
            }
        }
        closure.gens
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let bits = &self.members & &other.members;
        Self::from_bits(&self.parent, bits, None)
    }

    /// A pair `(h, g)` with `h ∈ H` and `h^g ∉ H`, or `None` when normal.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        let hs = self.generating_set();
        for &g in self.parent.generators() {
            for &h in &hs {
                if !self.contains(self.parent.conjugate(h, g)) {
                    return Some((h, g));
                }
            }
        }
        None
    }

    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    /// `true` when every element has order a power of `p`.
    pub fn is_p_group(&self, p: usize) -> bool {
        crate::arith::is_power_of(self.size, p)
    }
}

/// Least subgroup containing `seeds`.
pub fn generated_subgroup(g: &GroupTable, seeds: impl IntoIterator<Item = usize>) -> Subgroup {
    let mut closure = Closure::new(g);
    for s in seeds {
        closure.add(s);
        if closure.len() == g.order() {
            break;
        }
    }
    Subgroup::from_closure(g, closure)
}

/// Least normal subgroup containing `seeds`.
pub fn normal_closure(g: &GroupTable, seeds: impl IntoIterator<Item = usize>) -> Subgroup {
    let mut closure = Closure::new(g);
    for s in seeds {
        closure.add(s);
    }
    // Conjugate each generator (including ones added along the way) by the
    // parent's generators until nothing new appears.
    let mut i = 0;
    while i < closure.gens.len() && closure.len() < g.order() {
        let h = closure.gens[i];
        for &x in g.generators() {
            let c = g.conjugate(h, x);
            closure.add(c);
        }
        i += 1;
    }
    Subgroup::from_closure(g, closure)
}

/// Elements commuting with every element of `set`.
pub fn centralizer(g: &GroupTable, set: &[usize]) -> Subgroup {
    let members = g.elements().filter(|&x| set.iter().all(|&s| g.commutes(x, s)));
    Subgroup::from_members_unchecked(g, members)
}

pub fn normalizer(g: &GroupTable, h: &Subgroup) -> Subgroup {
    let hs = h.generating_set();
    let members = g
        .elements()
        .filter(|&x| hs.iter().all(|&y| h.contains(g.conjugate(y, x))));
    Subgroup::from_members_unchecked(g, members)
}

/// `[A, B]`, generated by every commutator `[a, b]`.
pub fn commutator_subgroup(a: &Subgroup, b: &Subgroup) -> Subgroup {
    let g = a.parent();
    let mut closure = Closure::new(g);
    let bs = b.to_vec();
    'outer: for x in a.iter() {
        for &y in &bs {
            closure.add(g.commutator(x, y));
            if closure.len() == g.order() {
                break 'outer;
            }
        }
    }
    Subgroup::from_closure(g, closure)
}

/// Re-indexes `h` as a standalone group. Local index `i` is the `i`-th
/// smallest member; the returned map sends local indices to parent ones.
pub fn subgroup_table(h: &Subgroup) -> (GroupTable, GroupHom) {
    let parent = h.parent();
    let members = h.to_vec();
    let mut local = vec![u32::MAX; parent.order()];
    for (i, &m) in members.iter().enumerate() {
        local[m] = i as u32;
    }
    let label = format!("{}<{}>", parent.label(), members.len());
    let table = GroupTable::from_fn(members.len(), label, |i, j| {
        local[parent.mul(members[i], members[j])] as usize
    });
    let inclusion = GroupHom::new_unchecked(table.clone(), parent.clone(), members);
    (table, inclusion)
}

/// Distinct normal closures of single elements, sorted by order and then
/// by member list. Not every normal subgroup need appear.
pub fn normal_closure_family(g: &GroupTable) -> Vec<Subgroup> {
    let mut done = FixedBitSet::with_capacity(g.order());
    let mut family: BTreeMap<(usize, Vec<usize>), Subgroup> = BTreeMap::new();
    for x in g.elements() {
        if done.contains(x) {
            continue;
        }
        for y in g.elements() {
            done.insert(g.conjugate(x, y));
        }
        let n = normal_closure(g, [x]);
        family.entry((n.order(), n.to_vec())).or_insert(n);
    }
    family.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Limits;
    use crate::perm::Perm;

    fn s4() -> GroupTable {
        GroupTable::symmetric(4, &Limits::default()).unwrap()
    }

    /// Finds the index of a permutation inside a table built by
    /// `from_permutations` with the same generators, by replaying the BFS.
    fn locate(degree: usize, gens: &[Perm], target: &Perm) -> usize {
        let mut elems = vec![Perm::identity(degree)];
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let y = elems[i].then(g);
                if !elems.contains(&y) {
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.iter().position(|p| p == target).unwrap()
    }

    fn s4_gens() -> Vec<Perm> {
        vec![
            Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
        ]
    }

    #[test]
    fn generated_examples() {
        let g = s4();
        assert!(generated_subgroup(&g, []).is_trivial());
        let four = locate(4, &s4_gens(), &Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap());
        assert_eq!(generated_subgroup(&g, [four]).order(), 4);
        let three_cycles: Vec<usize> = g.elements().filter(|&x| g.elem_order(x) == 3).collect();
        assert_eq!(three_cycles.len(), 8);
        assert_eq!(generated_subgroup(&g, three_cycles).order(), 12);
    }

    #[test]
    fn normal_closure_examples() {
        let g = s4();
        assert!(normal_closure(&g, [0]).is_trivial());
        let t = locate(4, &s4_gens(), &Perm::from_cycles(4, &[vec![0, 1]]).unwrap());
        assert_eq!(normal_closure(&g, [t]).order(), 24);
        let dt = locate(4, &s4_gens(), &Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap());
        let v4 = normal_closure(&g, [dt]);
        assert_eq!(v4.order(), 4);
        assert!(v4.is_normal());
    }

    #[test]
    fn centralizer_examples() {
        let s3 = GroupTable::symmetric(3, &Limits::default()).unwrap();
        assert!(centralizer(&s3, &[0]).is_whole());
        let c = s3.elements().find(|&x| s3.elem_order(x) == 3).unwrap();
        assert_eq!(centralizer(&s3, &[c]).order(), 3);
        let c6 = GroupTable::cyclic(6);
        assert!(centralizer(&c6, &[1, 2, 5]).is_whole());
    }

    #[test]
    fn normalizer_examples() {
        let g = s4();
        assert!(normalizer(&g, &Subgroup::whole(&g)).is_whole());
        let four = locate(4, &s4_gens(), &Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap());
        let c4 = generated_subgroup(&g, [four]);
        assert_eq!(normalizer(&g, &c4).order(), 8);
        let a4 = commutator_subgroup(&Subgroup::whole(&g), &Subgroup::whole(&g));
        assert!(normalizer(&g, &a4).is_whole());
    }

    #[test]
    fn normality_witness_is_genuine() {
        let g = s4();
        let t = locate(4, &s4_gens(), &Perm::from_cycles(4, &[vec![0, 1]]).unwrap());
        let h = generated_subgroup(&g, [t]);
        let (m, by) = h.normality_witness().unwrap();
        assert!(h.contains(m));
        assert!(!h.contains(g.conjugate(m, by)));
    }

    #[test]
    fn subgroup_tables() {
        let g = s4();
        let (t, inc) = subgroup_table(&Subgroup::trivial(&g));
        assert_eq!(t.order(), 1);
        assert_eq!(inc.apply(0), 0);
        let (w, inc) = subgroup_table(&Subgroup::whole(&g));
        assert_eq!(w.order(), 24);
        inc.verify().unwrap();
        let a4 = commutator_subgroup(&Subgroup::whole(&g), &Subgroup::whole(&g));
        let (t, inc) = subgroup_table(&a4);
        assert_eq!(t.order(), 12);
        inc.verify().unwrap();
    }

    #[test]
    fn from_members_checks_closure() {
        let g = GroupTable::cyclic(6);
        assert!(Subgroup::from_members(&g, [0, 2, 4]).is_ok());
        assert!(Subgroup::from_members(&g, [0, 1]).is_err());
        assert!(Subgroup::from_members(&g, [2, 4]).is_err());
        assert!(Subgroup::from_members(&g, [0, 7]).is_err());
    }

    #[test]
    fn family_of_s4() {
        let orders: Vec<usize> = normal_closure_family(&s4()).iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }
}
