//! Canonical form of a finite MV-algebra as a product of Łukasiewicz chains.

use std::fmt;

use super::{ElemId, FiniteMvAlgebra, Homomorphism, IsoWitness, Limits, MixedRadix};
use crate::error::{MvError, Result};
use crate::ideals::{max_ideals_with, quotient, Ideal};

/// A sorted multiset of chain sizes, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ChainMultiset(Vec<usize>);

impl ChainMultiset {
    pub fn new(mut sizes: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = sizes.iter().find(|&&n| n < 2) {
            return Err(MvError::InvalidParameter(format!(
                "chain size must be at least 2, got {bad}"
            )));
        }
        sizes.sort_unstable();
        Ok(ChainMultiset(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Carrier size of the product these chains describe.
    pub fn carrier_size(&self) -> usize {
        self.0.iter().product()
    }

    /// Multiset sum.
    pub fn union(&self, other: &ChainMultiset) -> ChainMultiset {
        let mut sizes = self.0.clone();
        sizes.extend_from_slice(&other.0);
        sizes.sort_unstable();
        ChainMultiset(sizes)
    }

    /// `∏ Ł_n` over the entries, or the trivial algebra when empty.
    pub fn algebra(&self) -> Result<FiniteMvAlgebra> {
        if self.0.is_empty() {
            Ok(FiniteMvAlgebra::trivial())
        } else {
            FiniteMvAlgebra::product_with_limits(
                &self.0,
                &Limits {
                    max_carrier: usize::MAX,
                    ..Limits::default()
                },
            )
        }
    }
}

impl fmt::Display for ChainMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `A ≅ ∏ Ł_n`, assembled from the projections onto `A/M`.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub multiset: ChainMultiset,
    /// Maximal ideals sorted by rank, matching the product's coordinates.
    pub maximal: Vec<Ideal>,
    /// `A → ChainMultiset::algebra()`
    pub iso: IsoWitness,
}

/// Decomposes `a` along its maximal ideals. The trivial algebra yields the
/// empty multiset and the identity.
pub fn canonical_decomposition(a: &FiniteMvAlgebra) -> Result<Decomposition> {
    if a.is_trivial() {
        return Ok(Decomposition {
            multiset: ChainMultiset::default(),
            maximal: Vec::new(),
            iso: IsoWitness::identity(a),
        });
    }
    let maximal = max_ideals_with(
        a,
        &Limits {
            max_carrier: usize::MAX,
            ..Limits::default()
        },
    )?;
    let mut factors = Vec::with_capacity(maximal.len());
    for m in maximal {
        let q = quotient(a, &m)?;
        if !q.algebra.is_chain() {
            return Err(MvError::InternalInvariant(
                "quotient by a maximal ideal is not a chain".into(),
            ));
        }
        // In a chain the position of a class is the number of classes below it.
        let chain = &q.algebra;
        let position: Vec<ElemId> = chain
            .elements()
            .map(|c| chain.elements().filter(|&d| d != c && chain.leq(d, c)).count())
            .collect();
        factors.push((chain.size(), m, q, position));
    }
    factors.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));

    let sizes: Vec<usize> = factors.iter().map(|f| f.0).collect();
    let multiset = ChainMultiset::new(sizes.clone())?;
    let target = multiset.algebra()?;
    let radix = MixedRadix::new(sizes);
    let map = a
        .elements()
        .map(|x| {
            let coords: Vec<ElemId> = factors
                .iter()
                .map(|(_, _, q, pos)| pos[q.class_of(x)])
                .collect();
            radix.encode(&coords)
        })
        .collect();
    let forward = Homomorphism::new(a.clone(), target, map)
        .map_err(|e| MvError::TheoremViolation(format!("decomposition map: {e}")))?;
    let iso = IsoWitness::from_bijection(forward).map_err(|e| {
        MvError::TheoremViolation(format!(
            "A is not the product of its quotients by maximal ideals: {e}"
        ))
    })?;
    Ok(Decomposition {
        multiset,
        maximal: factors.into_iter().map(|f| f.1).collect(),
        iso,
    })
}

/// An isomorphism `a → b` if their canonical chain multisets agree.
pub fn is_isomorphic(a: &FiniteMvAlgebra, b: &FiniteMvAlgebra) -> Result<Option<IsoWitness>> {
    if a.size() != b.size() {
        return Ok(None);
    }
    let da = canonical_decomposition(a)?;
    let db = canonical_decomposition(b)?;
    if da.multiset != db.multiset {
        return Ok(None);
    }
    // Both decompositions land in the same product, so compose through it.
    let forward = Homomorphism::new(
        a.clone(),
        b.clone(),
        a.elements()
            .map(|x| db.iso.backward().apply(da.iso.forward().apply(x)))
            .collect(),
    )?;
    IsoWitness::from_bijection(forward).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multisets_of_small_algebras() {
        let a = FiniteMvAlgebra::product(&[3, 2]).unwrap();
        assert_eq!(canonical_decomposition(&a).unwrap().multiset.sizes(), [2, 3]);
        let c = FiniteMvAlgebra::chain(5).unwrap();
        assert_eq!(canonical_decomposition(&c).unwrap().multiset.sizes(), [5]);
        let b = FiniteMvAlgebra::product(&[2, 2, 2]).unwrap();
        assert_eq!(canonical_decomposition(&b).unwrap().multiset.sizes(), [2, 2, 2]);
        let t = FiniteMvAlgebra::trivial();
        assert!(canonical_decomposition(&t).unwrap().multiset.is_empty());
    }

    #[test]
    fn factor_permutation_is_an_isomorphism() {
        let a = FiniteMvAlgebra::product(&[2, 3]).unwrap();
        let b = FiniteMvAlgebra::product(&[3, 2]).unwrap();
        let iso = is_isomorphic(&a, &b).unwrap().unwrap();
        iso.verify().unwrap();
        assert_eq!(iso.forward().apply(a.find("(1,1/2)").unwrap()), b.find("(1/2,1)").unwrap());
    }

    #[test]
    fn same_size_different_shape() {
        let a = FiniteMvAlgebra::chain(4).unwrap();
        let b = FiniteMvAlgebra::product(&[2, 2]).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap().is_none());
    }

    #[test]
    fn table_copy_of_chain_three() {
        let t = FiniteMvAlgebra::from_named_tables(
            &["u", "z", "h"],
            &[
                vec!["u", "u", "u"],
                vec!["u", "z", "h"],
                vec!["u", "h", "u"],
            ],
            &["z", "u", "h"],
            "z",
        )
        .unwrap();
        let c = FiniteMvAlgebra::chain(3).unwrap();
        let iso = is_isomorphic(&t, &c).unwrap().unwrap();
        assert_eq!(iso.forward().apply(t.find("h").unwrap()), c.find("1/2").unwrap());
    }
}
