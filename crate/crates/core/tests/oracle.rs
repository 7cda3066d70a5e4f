mod common;

use cogroup::coprime::{delta_star_set, lower_fitting_term};
use cogroup::series::nilpotent_residual;
use cogroup::{
    coprime_product_property, derived_series, fitting_height, fitting_subgroup, lower_central_series,
    lower_fitting_series, parse_spec, realize, GroupTable, Limits, Subgroup, Theorem,
};
use common::{Set, P};

struct Golden {
    spec: &'static str,
    order: usize,
    lower_central: &'static [usize],
    derived: &'static [usize],
    lower_fitting: &'static [usize],
    fitting: usize,
    height: Option<usize>,
    delta: [usize; 4],
    powers: [usize; 4],
    main_hypothesis: bool,
    bw: bool,
    nilpotent: bool,
}

macro_rules! golden {
    ($($spec:literal, $o:literal, $lc:expr, $d:expr, $lf:expr, $f:literal, $h:expr, $dl:expr, $pw:expr, $m:literal, $bw:literal, $n:literal;)*) => {
        &[$(Golden {
            spec: $spec, order: $o, lower_central: $lc, derived: $d, lower_fitting: $lf,
            fitting: $f, height: $h, delta: $dl, powers: $pw, main_hypothesis: $m, bw: $bw, nilpotent: $n,
        }),*]
    };
}

// Computed once with the brute-force routines in `common`, then frozen.
const GOLDEN: &[Golden] = golden! {
    "sym(3)", 6, &[6, 3], &[6, 3, 1], &[6, 3, 1], 3, Some(2), [6, 3, 1, 1], [6, 3, 1, 1], true, false, false;
    "sym(4)", 24, &[24, 12], &[24, 12, 4, 1], &[24, 12, 4, 1], 4, Some(3), [24, 12, 4, 1], [24, 12, 4, 1], false, false, false;
    "alt(4)", 12, &[12, 4], &[12, 4, 1], &[12, 4, 1], 4, Some(2), [12, 4, 1, 1], [12, 4, 1, 1], true, false, false;
    "alt(5)", 60, &[60], &[60], &[60], 1, None, [60, 60, 60, 60], [60, 60, 60, 60], false, false, false;
    "dihedral(4)", 8, &[8, 2, 1], &[8, 2, 1], &[8, 1], 8, Some(1), [8, 1, 1, 1], [8, 1, 1, 1], true, true, true;
    "dihedral(5)", 10, &[10, 5], &[10, 5, 1], &[10, 5, 1], 5, Some(2), [10, 5, 1, 1], [10, 5, 1, 1], true, false, false;
    "dihedral(6)", 12, &[12, 3], &[12, 3, 1], &[12, 3, 1], 6, Some(2), [12, 3, 1, 1], [12, 3, 1, 1], true, false, false;
    "dicyclic(2)", 8, &[8, 2, 1], &[8, 2, 1], &[8, 1], 8, Some(1), [8, 1, 1, 1], [8, 1, 1, 1], true, true, true;
    "semidirect(7, 3, 2)", 21, &[21, 7], &[21, 7, 1], &[21, 7, 1], 7, Some(2), [21, 7, 1, 1], [21, 7, 1, 1], true, false, false;
    "semidirect(11, 5, 3)", 55, &[55, 11], &[55, 11, 1], &[55, 11, 1], 11, Some(2), [55, 11, 1, 1], [55, 11, 1, 1], true, false, false;
    "semidirect(13, 4, 5)", 52, &[52, 13], &[52, 13, 1], &[52, 13, 1], 13, Some(2), [52, 13, 1, 1], [52, 13, 1, 1], true, false, false;
    "cyclic(12)", 12, &[12, 1], &[12, 1], &[12, 1], 12, Some(1), [12, 1, 1, 1], [12, 1, 1, 1], true, true, true;
    "product(sym(3), cyclic(5))", 30, &[30, 3], &[30, 3, 1], &[30, 3, 1], 15, Some(2), [30, 3, 1, 1], [30, 3, 1, 1], true, false, false;
    "product(sym(3), sym(3))", 36, &[36, 9], &[36, 9, 1], &[36, 9, 1], 9, Some(2), [36, 9, 1, 1], [36, 9, 1, 1], true, false, false;
    "product(sym(4), cyclic(3))", 72, &[72, 12], &[72, 12, 4, 1], &[72, 12, 4, 1], 12, Some(3), [72, 12, 4, 1], [72, 12, 4, 1], false, false, false;
};

fn oracle_group(spec: &str) -> Set {
    use common::*;
    match spec {
        "sym(3)" => sym(3),
        "sym(4)" => sym(4),
        "alt(4)" => alt(4),
        "alt(5)" => alt(5),
        "dihedral(4)" => dihedral(4),
        "dihedral(5)" => dihedral(5),
        "dihedral(6)" => dihedral(6),
        "dicyclic(2)" => quaternion(),
        "semidirect(7, 3, 2)" => affine(7, 2),
        "semidirect(11, 5, 3)" => affine(11, 3),
        "semidirect(13, 4, 5)" => affine(13, 5),
        "cyclic(12)" => cyclic(12),
        "product(sym(3), cyclic(5))" => product(&sym(3), &cyclic(5)),
        "product(sym(3), sym(3))" => product(&sym(3), &sym(3)),
        "product(sym(4), cyclic(3))" => product(&sym(4), &cyclic(3)),
        other => panic!("no oracle model for {other}"),
    }
}

fn lib_group(spec: &str) -> GroupTable {
    realize(&parse_spec(spec).unwrap(), &Limits::default()).unwrap()
}

/// Cayley table of the oracle group, elements in sorted order (so the
/// identity permutation comes first).
fn as_table(g: &Set) -> (GroupTable, Vec<P>) {
    let elems: Vec<P> = g.iter().cloned().collect();
    let index = |p: &P| elems.binary_search(p).unwrap();
    let rows: Vec<Vec<usize>> = elems
        .iter()
        .map(|x| elems.iter().map(|y| index(&common::mul(x, y))).collect())
        .collect();
    (GroupTable::from_table(&rows, &Limits::default()).unwrap(), elems)
}

fn indices(elems: &[P], s: &Set) -> Vec<usize> {
    s.iter().map(|p| elems.binary_search(p).unwrap()).collect()
}

fn members(h: &Subgroup) -> Vec<usize> {
    h.iter().collect()
}

#[test]
fn oracle_reproduces_frozen_values() {
    for gold in GOLDEN {
        let g = oracle_group(gold.spec);
        assert_eq!(g.len(), gold.order, "{}", gold.spec);
        assert_eq!(common::lower_central_orders(&g), gold.lower_central, "{}", gold.spec);
        assert_eq!(common::derived_orders(&g), gold.derived, "{}", gold.spec);
        assert_eq!(common::lower_fitting_orders(&g), gold.lower_fitting, "{}", gold.spec);
        assert_eq!(common::fitting(&g).len(), gold.fitting, "{}", gold.spec);
        assert_eq!(common::fitting_height(&g), gold.height, "{}", gold.spec);
        for k in 0..4 {
            let d = common::delta(&g, k);
            assert_eq!(d.len(), gold.delta[k], "{} k={k}", gold.spec);
            assert_eq!(common::powers(&d).len(), gold.powers[k], "{} k={k}", gold.spec);
        }
        let main = common::coprime_property(&common::powers(&common::delta(&g, 1)));
        assert_eq!(main, gold.main_hypothesis, "{}", gold.spec);
        assert_eq!(common::coprime_property(&g), gold.bw, "{}", gold.spec);
        assert_eq!(common::is_nilpotent(&g), gold.nilpotent, "{}", gold.spec);
    }
}

#[test]
fn library_matches_frozen_values() {
    for gold in GOLDEN {
        let g = lib_group(gold.spec);
        assert_eq!(g.order(), gold.order, "{}", gold.spec);
        assert_eq!(lower_central_series(&g).orders(), gold.lower_central, "{}", gold.spec);
        assert_eq!(derived_series(&g).orders(), gold.derived, "{}", gold.spec);
        assert_eq!(
            lower_fitting_series(&g, 8).unwrap().orders(),
            gold.lower_fitting,
            "{}",
            gold.spec
        );
        assert_eq!(fitting_subgroup(&g).unwrap().order(), gold.fitting, "{}", gold.spec);
        assert_eq!(fitting_height(&g).unwrap().value(), gold.height, "{}", gold.spec);
        for k in 0..4 {
            let d = delta_star_set(&g, k);
            assert_eq!(d.commutators.count_ones(..), gold.delta[k], "{} k={k}", gold.spec);
            assert_eq!(d.power_closure.count_ones(..), gold.powers[k], "{} k={k}", gold.spec);
        }
        let main = cogroup::theorem_check(&g, Theorem::Main).unwrap();
        assert_eq!(main.hypothesis(), gold.main_hypothesis, "{}", gold.spec);
        let all: Vec<usize> = g.elements().collect();
        assert_eq!(coprime_product_property(&g, &all).0, gold.bw, "{}", gold.spec);
        assert_eq!(cogroup::series::is_nilpotent_group(&g), gold.nilpotent, "{}", gold.spec);
    }
}

/// Feeds the oracle's own elements to the library as a Cayley table and
/// compares element sets, not just sizes.
#[test]
fn library_matches_oracle_elementwise() {
    for gold in GOLDEN {
        let g = oracle_group(gold.spec);
        let (t, elems) = as_table(&g);
        assert_eq!(t.identity(), 0);
        assert_eq!(
            members(&nilpotent_residual(&t)),
            indices(&elems, &common::residual(&g)),
            "{}",
            gold.spec
        );
        assert_eq!(
            members(&fitting_subgroup(&t).unwrap()),
            indices(&elems, &common::fitting(&g)),
            "{}",
            gold.spec
        );
        for k in 0..4 {
            let d = delta_star_set(&t, k);
            let want = common::delta(&g, k);
            assert_eq!(d.commutator_list(), indices(&elems, &want), "{} k={k}", gold.spec);
            assert_eq!(
                d.power_list(),
                indices(&elems, &common::powers(&want)),
                "{} k={k}",
                gold.spec
            );
            assert_eq!(
                members(&lower_fitting_term(&t, k)),
                indices(&elems, &common::d_term(&g, k)),
                "{} k={k}",
                gold.spec
            );
        }
        for p in common::primes_of(g.len()) {
            assert_eq!(
                members(&cogroup::p_core(&t, p).unwrap()),
                indices(&elems, &common::p_core(&g, p)),
                "{} p={p}",
                gold.spec
            );
        }
    }
}

#[test]
fn lexicographically_least_witness() {
    for gold in GOLDEN {
        let (t, _) = as_table(&oracle_group(gold.spec));
        let all: Vec<usize> = t.elements().collect();
        let mut least = None;
        'outer: for &x in &all {
            for &y in &all {
                let (ox, oy) = (t.elem_order(x), t.elem_order(y));
                if common::gcd(ox, oy) == 1 && t.elem_order(t.mul(x, y)) != ox * oy {
                    least = Some((x, y));
                    break 'outer;
                }
            }
        }
        let w = coprime_product_property(&t, &all).1.map(|w| (w.x, w.y));
        assert_eq!(w, least, "{}", gold.spec);
    }
}
