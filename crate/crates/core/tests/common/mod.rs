//! Brute-force reference implementations over explicit permutations.
//!
//! Nothing here touches the library: groups are sets of image vectors,
//! subgroups are closed by repeated multiplication, and quotients are taken
//! through the action on cosets.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type P = Vec<u8>;
pub type Set = BTreeSet<P>;

pub fn id(n: usize) -> P {
    (0..n as u8).collect()
}

/// `x` first, then `y`.
pub fn mul(x: &P, y: &P) -> P {
    x.iter().map(|&i| y[i as usize]).collect()
}

pub fn inv(x: &P) -> P {
    let mut out = vec![0; x.len()];
    for (i, &j) in x.iter().enumerate() {
        out[j as usize] = i as u8;
    }
    out
}

pub fn comm(x: &P, y: &P) -> P {
    mul(&mul(&inv(x), &inv(y)), &mul(x, y))
}

pub fn order(x: &P) -> usize {
    let e = id(x.len());
    let mut y = x.clone();
    let mut k = 1;
    while y != e {
        y = mul(&y, x);
        k += 1;
    }
    k
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Points are 0-based; each cycle maps a[i] to a[i+1].
pub fn cycles(n: usize, cs: &[&[u8]]) -> P {
    let mut p = id(n);
    for c in cs {
        let mut q = id(n);
        for i in 0..c.len() {
            q[c[i] as usize] = c[(i + 1) % c.len()];
        }
        p = mul(&p, &q);
    }
    p
}

pub fn closure(n: usize, gens: &[P]) -> Set {
    let mut set: Set = [id(n)].into_iter().collect();
    let mut frontier: Vec<P> = vec![id(n)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = mul(&x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

fn degree(g: &Set) -> usize {
    g.iter().next().unwrap().len()
}

pub fn gen_set(g: &Set, elems: impl IntoIterator<Item = P>) -> Set {
    let gens: Vec<P> = elems.into_iter().collect();
    closure(degree(g), &gens)
}

pub fn commutator_subgroup(a: &Set, b: &Set) -> Set {
    let mut cs = Vec::new();
    for x in a {
        for y in b {
            cs.push(comm(x, y));
        }
    }
    gen_set(a, cs)
}

/// Orders of the distinct terms of γ_1 ⊇ γ_2 ⊇ ...
pub fn lower_central_orders(g: &Set) -> Vec<usize> {
    let mut out = vec![g.len()];
    let mut cur = g.clone();
    loop {
        let next = commutator_subgroup(&cur, g);
        if next == cur {
            return out;
        }
        out.push(next.len());
        cur = next;
    }
}

pub fn residual(g: &Set) -> Set {
    let mut cur = g.clone();
    loop {
        let next = commutator_subgroup(&cur, g);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

pub fn is_nilpotent(g: &Set) -> bool {
    residual(g).len() == 1
}

pub fn derived_orders(g: &Set) -> Vec<usize> {
    let mut out = vec![g.len()];
    let mut cur = g.clone();
    loop {
        let next = commutator_subgroup(&cur, &cur);
        if next == cur {
            return out;
        }
        out.push(next.len());
        cur = next;
    }
}

pub fn is_soluble(g: &Set) -> bool {
    *derived_orders(g).last().unwrap() == 1
}

/// D_0 = G, D_{k+1} = γ∞(D_k), distinct terms only.
pub fn lower_fitting_terms(g: &Set) -> Vec<Set> {
    let mut out = vec![g.clone()];
    loop {
        let next = residual(out.last().unwrap());
        if &next == out.last().unwrap() {
            return out;
        }
        out.push(next);
    }
}

pub fn lower_fitting_orders(g: &Set) -> Vec<usize> {
    lower_fitting_terms(g).iter().map(Set::len).collect()
}

pub fn d_term(g: &Set, k: usize) -> Set {
    let terms = lower_fitting_terms(g);
    terms[k.min(terms.len() - 1)].clone()
}

pub fn powers(s: &Set) -> Set {
    let mut out = Set::new();
    for x in s {
        let e = id(x.len());
        let mut y = e.clone();
        loop {
            out.insert(y.clone());
            y = mul(&y, x);
            if y == e {
                break;
            }
        }
    }
    out
}

/// The δ_k*-commutators, straight from the recursive definition.
pub fn delta(g: &Set, k: usize) -> Set {
    let mut cur = g.clone();
    for _ in 0..k {
        let t = powers(&cur);
        let mut next = Set::new();
        for a in &t {
            for b in &t {
                if gcd(order(a), order(b)) == 1 {
                    next.insert(comm(a, b));
                }
            }
        }
        cur = next;
    }
    cur
}

pub fn coprime_property(s: &Set) -> bool {
    s.iter().all(|x| {
        s.iter()
            .all(|y| gcd(order(x), order(y)) != 1 || order(&mul(x, y)) == order(x) * order(y))
    })
}

pub fn normal_closure(g: &Set, x: &P) -> Set {
    gen_set(g, g.iter().map(|h| mul(&mul(&inv(h), x), h)))
}

fn is_power_of(n: usize, p: usize) -> bool {
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Elements whose normal closure is a p-group; this set is O_p(G).
pub fn p_core(g: &Set, p: usize) -> Set {
    g.iter()
        .filter(|x| is_power_of(normal_closure(g, x).len(), p))
        .cloned()
        .collect()
}

pub fn primes_of(n: usize) -> Vec<usize> {
    (2..=n)
        .filter(|&p| n.is_multiple_of(p) && (2..p).all(|d| p % d != 0))
        .collect()
}

pub fn fitting(g: &Set) -> Set {
    let mut gens = Vec::new();
    for p in primes_of(g.len()) {
        gens.extend(p_core(g, p));
    }
    gen_set(g, gens)
}

/// `G/N` realised as the permutation group induced on the left cosets of `N`.
pub fn quotient(g: &Set, n: &Set) -> Set {
    let mut index: BTreeMap<P, u8> = BTreeMap::new();
    let mut cosets: Vec<P> = Vec::new();
    for x in g {
        if index.contains_key(x) {
            continue;
        }
        let c = cosets.len() as u8;
        for m in n {
            index.insert(mul(x, m), c);
        }
        cosets.push(x.clone());
    }
    g.iter()
        .map(|h| cosets.iter().map(|rep| index[&mul(h, rep)]).collect())
        .collect()
}

/// `None` for insoluble groups.
pub fn fitting_height(g: &Set) -> Option<usize> {
    let mut cur = g.clone();
    let mut h = 0;
    while cur.len() > 1 {
        let f = fitting(&cur);
        if f.len() == 1 {
            return None;
        }
        cur = quotient(&cur, &f);
        h += 1;
    }
    Some(h)
}

pub fn sym(n: usize) -> Set {
    let all: Vec<u8> = (0..n as u8).collect();
    closure(n, &[cycles(n, &[&[0, 1]]), cycles(n, &[&all])])
}

pub fn alt(n: usize) -> Set {
    let gens: Vec<P> = (2..n as u8).map(|k| cycles(n, &[&[0, 1, k]])).collect();
    closure(n, &gens)
}

/// Symmetries of an n-gon, n ≥ 3.
pub fn dihedral(n: usize) -> Set {
    let rot: P = (0..n).map(|i| ((i + 1) % n) as u8).collect();
    let refl: P = (0..n).map(|i| ((n - i) % n) as u8).collect();
    closure(n, &[rot, refl])
}

/// x ↦ x + 1 and x ↦ r·x on Z/p.
pub fn affine(p: usize, r: usize) -> Set {
    let t: P = (0..p).map(|i| ((i + 1) % p) as u8).collect();
    let m: P = (0..p).map(|i| ((i * r) % p) as u8).collect();
    closure(p, &[t, m])
}

pub fn cyclic(n: usize) -> Set {
    let t: P = (0..n).map(|i| ((i + 1) % n) as u8).collect();
    closure(n, &[t])
}

pub fn quaternion() -> Set {
    let i = cycles(8, &[&[0, 1, 3, 6], &[2, 5, 7, 4]]);
    let j = cycles(8, &[&[0, 2, 3, 7], &[1, 4, 6, 5]]);
    closure(8, &[i, j])
}

/// Direct product acting on disjoint point sets.
pub fn product(a: &Set, b: &Set) -> Set {
    let (da, db) = (degree(a), degree(b));
    let mut out = Set::new();
    for x in a {
        for y in b {
            let mut z = x.clone();
            z.extend(y.iter().map(|&i| i + da as u8));
            debug_assert_eq!(z.len(), da + db);
            out.insert(z);
        }
    }
    out
}
