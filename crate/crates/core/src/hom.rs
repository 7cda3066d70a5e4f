//! Homomorphisms between tables and quotient construction.

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::subgroup::Subgroup;

#[derive(Clone, Debug)]
pub struct GroupHom {
    source: GroupTable,
    target: GroupTable,
    map: Vec<usize>,
}

impl GroupHom {
    /// Builds a homomorphism after checking the law on all pairs.
    pub fn new(source: GroupTable, target: GroupTable, map: Vec<usize>) -> Result<Self> {
        let hom = Self::new_unchecked(source, target, map);
        hom.verify()?;
        Ok(hom)
    }

    pub(crate) fn new_unchecked(source: GroupTable, target: GroupTable, map: Vec<usize>) -> Self {
        debug_assert_eq!(map.len(), source.order());
        GroupHom { source, target, map }
    }

    pub fn source(&self) -> &GroupTable {
        &self.source
    }

    pub fn target(&self) -> &GroupTable {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Exhaustive check of `map[s·t] = map[s]·map[t]`.
    pub fn verify(&self) -> Result<()> {
        if self.map.len() != self.source.order() {
            return Err(Error::Validation("map length differs from source order".into()));
        }
        if let Some(&bad) = self.map.iter().find(|&&y| y >= self.target.order()) {
            return Err(Error::Validation(format!("image {bad} out of range")));
        }
        for s in self.source.elements() {
            for t in self.source.elements() {
                let lhs = self.map[self.source.mul(s, t)];
                let rhs = self.target.mul(self.map[s], self.map[t]);
                if lhs != rhs {
                    return Err(Error::Validation(format!("homomorphism law fails at ({s}, {t})")));
                }
            }
        }
        Ok(())
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_members_unchecked(&self.source, self.source.elements().filter(|&x| self.map[x] == 0))
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_members_unchecked(&self.target, self.map.iter().copied())
    }

    /// Maps a subgroup of the source forward into the target.
    pub fn push_forward(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_members_unchecked(&self.target, h.iter().map(|x| self.map[x]))
    }

    pub fn pull_back(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_members_unchecked(
            &self.source,
            self.source.elements().filter(|&x| h.contains(self.map[x])),
        )
    }
}

/// `G/N` on left cosets. Coset indices follow their least member, so the
/// coset `N` itself is index 0.
pub fn quotient(g: &GroupTable, n: &Subgroup) -> Result<(GroupTable, GroupHom)> {
    if let Some((member, by)) = n.normality_witness() {
        return Err(Error::NotNormal { member, by });
    }
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps = Vec::with_capacity(n.index());
    let ns = n.to_vec();
    for x in g.elements() {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &m in &ns {
            coset[g.mul(x, m)] = id;
        }
    }
    let label = format!("{}/{}", g.label(), n.order());
    let q = GroupTable::from_fn(reps.len(), label, |a, b| coset[g.mul(reps[a], reps[b])]);
    let proj = GroupHom::new_unchecked(g.clone(), q.clone(), coset);
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Limits;
    use crate::subgroup::{commutator_subgroup, generated_subgroup, normal_closure};

    #[test]
    fn quotient_by_trivial_and_whole() {
        let g = GroupTable::dihedral(5);
        let (q, p) = quotient(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.order(), 10);
        p.verify().unwrap();
        let (q, p) = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.order(), 1);
        p.verify().unwrap();
    }

    #[test]
    fn s4_mod_v4_is_s3() {
        let g = GroupTable::symmetric(4, &Limits::default()).unwrap();
        let dt = g
            .elements()
            .find(|&x| g.elem_order(x) == 2 && !normal_closure(&g, [x]).is_whole())
            .unwrap();
        let v4 = normal_closure(&g, [dt]);
        assert_eq!(v4.order(), 4);
        let (q, p) = quotient(&g, &v4).unwrap();
        assert_eq!(q.order(), 6);
        assert!(q.elem_orders().any(|o| o == 3));
        assert!(!q.is_abelian());
        p.verify().unwrap();
        assert_eq!(p.kernel(), v4);
        assert!(p.image().is_whole());
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = GroupTable::symmetric(3, &Limits::default()).unwrap();
        let t = g.elements().find(|&x| g.elem_order(x) == 2).unwrap();
        let h = generated_subgroup(&g, [t]);
        match quotient(&g, &h) {
            Err(Error::NotNormal { member, by }) => {
                assert!(h.contains(member));
                assert!(!h.contains(g.conjugate(member, by)));
            }
            other => panic!("expected normality error, got {other:?}"),
        }
    }

    #[test]
    fn pull_back_of_derived_subgroup() {
        let g = GroupTable::symmetric(4, &Limits::default()).unwrap();
        let whole = Subgroup::whole(&g);
        let a4 = commutator_subgroup(&whole, &whole);
        let (q, p) = quotient(&g, &a4).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(p.pull_back(&Subgroup::trivial(&q)), a4);
        assert!(GroupHom::new(g.clone(), q.clone(), vec![0; 24]).is_ok());
        assert!(GroupHom::new(g.clone(), q, (0..24).map(|x| x % 2).collect()).is_err());
    }
}
