//! Test corpus and brute-force oracles that do not call into the library's
//! own checkers.

#![allow(dead_code)]

use std::collections::BTreeSet;

use mvcomp::algebra::RawTables;
use mvcomp::lattice::Poset;
use mvcomp::{ElemId, FiniteMvAlgebra};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every ordered tuple of chain sizes in `2..=6` with one to three factors.
pub fn corpus_sizes() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 2..=6 {
        out.push(vec![a]);
    }
    for a in 2..=6 {
        for b in 2..=6 {
            out.push(vec![a, b]);
        }
    }
    for a in 2..=6 {
        for b in 2..=6 {
            for c in 2..=6 {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

pub fn corpus() -> Vec<(Vec<usize>, FiniteMvAlgebra)> {
    corpus_sizes()
        .into_iter()
        .map(|s| {
            let a = FiniteMvAlgebra::product(&s).unwrap();
            (s, a)
        })
        .collect()
}

pub fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Axioms violated by the given tables, by id, checked straight from the
/// six defining identities.
pub fn brute_force_violations(
    size: usize,
    oplus: &[usize],
    neg: &[usize],
    zero: usize,
) -> BTreeSet<&'static str> {
    let op = |x: usize, y: usize| oplus[x * size + y];
    let one = neg[zero];
    let mut bad = BTreeSet::new();
    for x in 0..size {
        if op(x, zero) != x {
            bad.insert("zero-unit");
        }
        if neg[neg[x]] != x {
            bad.insert("involution");
        }
        if op(one, x) != one {
            bad.insert("absorbing-one");
        }
        for y in 0..size {
            if op(x, y) != op(y, x) {
                bad.insert("commutativity");
            }
            if op(neg[op(neg[x], y)], y) != op(neg[op(neg[y], x)], x) {
                bad.insert("lukasiewicz");
            }
            for z in 0..size {
                if op(op(x, y), z) != op(x, op(y, z)) {
                    bad.insert("associativity");
                }
            }
        }
    }
    bad
}

pub fn tables_of(a: &FiniteMvAlgebra) -> (Vec<usize>, Vec<usize>) {
    let oplus = a
        .elements()
        .flat_map(|x| a.elements().map(move |y| (x, y)))
        .map(|(x, y)| a.oplus(x, y))
        .collect();
    let neg = a.elements().map(|x| a.neg(x)).collect();
    (oplus, neg)
}

/// `a` with its carrier relabelled by `perm` (old id → new id) and fresh
/// names, rebuilt through the validating table constructor.
pub fn permuted_presentation(a: &FiniteMvAlgebra, perm: &[usize]) -> FiniteMvAlgebra {
    let n = a.size();
    let mut inverse = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    let mut oplus = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            oplus[perm[x] * n + perm[y]] = perm[a.oplus(x, y)];
        }
    }
    let neg = (0..n).map(|new| perm[a.neg(inverse[new])]).collect();
    let names = (0..n).map(|i| format!("e{i}")).collect();
    let tables = RawTables::new(n, oplus, neg, perm[a.zero()]).unwrap();
    FiniteMvAlgebra::from_tables(names, tables).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Least upper bound by scanning all upper bounds.
pub fn brute_lub(a: &FiniteMvAlgebra, x: ElemId, y: ElemId) -> Option<ElemId> {
    let upper: Vec<ElemId> = a.elements().filter(|&u| a.leq(x, u) && a.leq(y, u)).collect();
    upper.iter().copied().find(|&u| upper.iter().all(|&v| a.leq(u, v)))
}

pub fn brute_glb(a: &FiniteMvAlgebra, x: ElemId, y: ElemId) -> Option<ElemId> {
    let lower: Vec<ElemId> = a.elements().filter(|&l| a.leq(l, x) && a.leq(l, y)).collect();
    lower.iter().copied().find(|&l| lower.iter().all(|&v| a.leq(v, l)))
}

/// Least set containing `generators` and 0, closed under `⊕` and downward,
/// found by iterating both closures until nothing changes.
pub fn naive_ideal(a: &FiniteMvAlgebra, generators: &[ElemId]) -> Vec<ElemId> {
    let mut set: BTreeSet<ElemId> = generators.iter().copied().collect();
    set.insert(a.zero());
    loop {
        let mut next = set.clone();
        for &x in &set {
            for &y in &set {
                next.insert(a.oplus(x, y));
            }
            for z in a.elements() {
                if a.leq(z, x) {
                    next.insert(z);
                }
            }
        }
        if next == set {
            return set.into_iter().collect();
        }
        set = next;
    }
}

/// Random partial order on `n` points: a random relation compatible with a
/// shuffled linear order, transitively closed.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize) -> Poset {
    let order = random_permutation(rng, n);
    let density: f64 = rng.gen_range(0.0..0.6);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    Poset::from_pairs(n, &pairs).unwrap()
}

/// Name of `k/(n-1)` in `Ł_n`.
pub fn chain_name(n: usize, k: usize) -> String {
    match k {
        0 => "0".into(),
        k if k == n - 1 => "1".into(),
        k => format!("{k}/{}", n - 1),
    }
}

/// All cuts `L(U(X))` over every subset `X`, as membership masks.
pub fn brute_force_cuts(p: &Poset) -> BTreeSet<Vec<bool>> {
    let n = p.size();
    assert!(n <= 12, "subset enumeration is exponential");
    let mut cuts = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let in_x = |i: usize| mask & (1 << i) != 0;
        let upper: Vec<usize> = (0..n).filter(|&u| (0..n).all(|x| !in_x(x) || p.leq(x, u))).collect();
        let lower: Vec<bool> = (0..n).map(|l| upper.iter().all(|&u| p.leq(l, u))).collect();
        cuts.insert(lower);
    }
    cuts
}
