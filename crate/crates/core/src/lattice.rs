//! Finite posets and their Dedekind–MacNeille completions.

use std::collections::HashSet;

use crate::algebra::FiniteMvAlgebra;
use crate::error::{MvError, Result};

/// A finite partial order on `0..size`, stored as a dense `≤` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
    // |↑x|, used to pick least upper bounds in linear time
    up_count: Vec<usize>,
    down_count: Vec<usize>,
}

impl Poset {
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn new(size: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != size * size {
            return Err(MvError::InvalidArgument(format!(
                "relation has {} entries, expected {}",
                leq.len(),
                size * size
            )));
        }
        let at = |x: usize, y: usize| leq[x * size + y];
        for x in 0..size {
            if !at(x, x) {
                return Err(MvError::InvalidArgument(format!(
                    "relation is not reflexive at {x}"
                )));
            }
        }
        for x in 0..size {
            for y in 0..size {
                if x != y && at(x, y) && at(y, x) {
                    return Err(MvError::InvalidArgument(format!(
                        "relation is not antisymmetric at ({x}, {y})"
                    )));
                }
            }
        }
        for x in 0..size {
            for y in (0..size).filter(|&y| at(x, y)) {
                if let Some(z) = (0..size).find(|&z| at(y, z) && !at(x, z)) {
                    return Err(MvError::InvalidArgument(format!(
                        "relation is not transitive at ({x}, {y}, {z})"
                    )));
                }
            }
        }
        Ok(Self::assemble(size, leq))
    }

    fn assemble(size: usize, leq: Vec<bool>) -> Self {
        let up_count = (0..size)
            .map(|x| (0..size).filter(|&y| leq[x * size + y]).count())
            .collect();
        let down_count = (0..size)
            .map(|x| (0..size).filter(|&y| leq[y * size + x]).count())
            .collect();
        Poset {
            size,
            leq,
            up_count,
            down_count,
        }
    }

    /// Reflexive-transitive closure of the given covering pairs `(x, y)`, read
    /// as `x ≤ y`.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; size * size];
        for x in 0..size {
            leq[x * size + x] = true;
        }
        for &(x, y) in pairs {
            if x >= size || y >= size {
                return Err(MvError::InvalidArgument(format!("pair ({x}, {y}) out of range")));
            }
            leq[x * size + y] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if leq[i * size + k] {
                    for j in 0..size {
                        if leq[k * size + j] {
                            leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        Self::new(size, leq)
    }

    /// The lattice order of an MV-algebra.
    pub fn of_algebra(a: &FiniteMvAlgebra) -> Self {
        let n = a.size();
        let leq = (0..n * n).map(|i| a.leq(i / n, i % n)).collect();
        Self::assemble(n, leq)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    /// Least upper bound of `items` (the bottom for an empty set), if any.
    pub fn join_of(&self, items: &[usize]) -> Option<usize> {
        let upper: Vec<usize> = (0..self.size)
            .filter(|&u| items.iter().all(|&x| self.leq(x, u)))
            .collect();
        // ↑u ⊆ upper for every upper bound u, with equality iff u is least.
        upper
            .iter()
            .copied()
            .find(|&u| self.up_count[u] == upper.len())
    }

    /// Greatest lower bound of `items` (the top for an empty set), if any.
    pub fn meet_of(&self, items: &[usize]) -> Option<usize> {
        let lower: Vec<usize> = (0..self.size)
            .filter(|&l| items.iter().all(|&x| self.leq(l, x)))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&l| self.down_count[l] == lower.len())
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.join_of(&[x, y])
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.meet_of(&[x, y])
    }

    /// Every subset has a join and a meet. For a finite poset it suffices to
    /// have a bottom, a top and all binary joins and meets.
    pub fn is_complete_lattice(&self) -> bool {
        if self.size == 0 {
            return false;
        }
        self.join_of(&[]).is_some()
            && self.meet_of(&[]).is_some()
            && (0..self.size).all(|x| {
                (x + 1..self.size).all(|y| self.join(x, y).is_some() && self.meet(x, y).is_some())
            })
    }

    fn downset(&self, x: usize) -> Vec<bool> {
        (0..self.size).map(|y| self.leq(y, x)).collect()
    }

    fn upper_bounds(&self, set: &[bool]) -> Vec<bool> {
        (0..self.size)
            .map(|u| (0..self.size).all(|x| !set[x] || self.leq(x, u)))
            .collect()
    }

    fn lower_bounds(&self, set: &[bool]) -> Vec<bool> {
        (0..self.size)
            .map(|l| (0..self.size).all(|x| !set[x] || self.leq(l, x)))
            .collect()
    }
}

/// The lattice of cuts of a poset, ordered by inclusion, with the principal
/// embedding `x ↦ ↓x`.
#[derive(Debug, Clone)]
pub struct MacNeilleCompletion {
    pub lattice: Poset,
    /// Cut `i` as a membership mask over the original poset.
    pub cuts: Vec<Vec<bool>>,
    pub embedding: Vec<usize>,
}

impl MacNeilleCompletion {
    /// Whether the embedding hits every cut, i.e. the poset was already a
    /// complete lattice.
    pub fn is_onto(&self) -> bool {
        let mut hit = vec![false; self.cuts.len()];
        for &c in &self.embedding {
            hit[c] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Exhaustive check of the defining properties against `original`.
    pub fn verify(&self, original: &Poset) -> Result<()> {
        let fail = |msg: String| Err(MvError::InternalInvariant(msg));
        let n = original.size();
        if self.embedding.len() != n {
            return fail("embedding has the wrong length".into());
        }
        for (i, cut) in self.cuts.iter().enumerate() {
            if original.lower_bounds(&original.upper_bounds(cut)) != *cut {
                return fail(format!("set {i} is not closed under lower-of-upper bounds"));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let (ex, ey) = (self.embedding[x], self.embedding[y]);
                if x != y && ex == ey {
                    return fail(format!("embedding identifies {x} and {y}"));
                }
                if original.leq(x, y) != self.lattice.leq(ex, ey) {
                    return fail(format!("embedding does not reflect the order at ({x}, {y})"));
                }
            }
        }
        for (c, cut) in self.cuts.iter().enumerate() {
            let below: Vec<usize> = (0..n).filter(|&x| cut[x]).map(|x| self.embedding[x]).collect();
            if self.lattice.join_of(&below) != Some(c) {
                return fail(format!("cut {c} is not a join of embedded elements"));
            }
            let above: Vec<usize> = (0..n)
                .filter(|&u| (0..n).all(|x| !cut[x] || original.leq(x, u)))
                .map(|u| self.embedding[u])
                .collect();
            if self.lattice.meet_of(&above) != Some(c) {
                return fail(format!("cut {c} is not a meet of embedded elements"));
            }
        }
        if !self.lattice.is_complete_lattice() {
            return fail("cut lattice is not complete".into());
        }
        Ok(())
    }
}

/// Completes `poset` by closing the principal downsets (and the whole set)
/// under intersection; the results are exactly the sets `L(U(X))`.
/// Cuts are ordered by size, then lexicographically by membership.
pub fn dedekind_macneille(poset: &Poset) -> Result<MacNeilleCompletion> {
    let n = poset.size();
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut cuts: Vec<Vec<bool>> = Vec::new();
    let mut push = |c: Vec<bool>, cuts: &mut Vec<Vec<bool>>| {
        if seen.insert(c.clone()) {
            cuts.push(c);
            true
        } else {
            false
        }
    };
    push(vec![true; n], &mut cuts);
    for x in 0..n {
        push(poset.downset(x), &mut cuts);
    }
    let mut start = 0;
    while start < cuts.len() {
        let end = cuts.len();
        for i in start..end {
            for j in 0..end {
                let meet: Vec<bool> = cuts[i].iter().zip(&cuts[j]).map(|(a, b)| *a && *b).collect();
                push(meet, &mut cuts);
            }
        }
        start = end;
    }
    cuts.sort_by(|a, b| {
        let count = |c: &Vec<bool>| c.iter().filter(|&&m| m).count();
        count(a).cmp(&count(b)).then_with(|| b.cmp(a))
    });
    let k = cuts.len();
    let mut leq = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            leq[i * k + j] = cuts[i].iter().zip(&cuts[j]).all(|(a, b)| !*a || *b);
        }
    }
    let lattice = Poset::assemble(k, leq);
    let embedding = (0..n)
        .map(|x| {
            let d = poset.downset(x);
            cuts.iter()
                .position(|c| *c == d)
                .expect("principal downsets are cuts")
        })
        .collect();
    let completion = MacNeilleCompletion {
        lattice,
        cuts,
        embedding,
    };
    completion.verify(poset)?;
    Ok(completion)
}

/// Checks that `map` is an order isomorphism `from → to`.
pub fn is_order_isomorphism(from: &Poset, to: &Poset, map: &[usize]) -> bool {
    if from.size() != to.size() || map.len() != from.size() {
        return false;
    }
    let mut hit = vec![false; to.size()];
    for &y in map {
        if y >= to.size() || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    (0..from.size()).all(|x| (0..from.size()).all(|y| from.leq(x, y) == to.leq(map[x], map[y])))
}
