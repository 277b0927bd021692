//! Order-theoretic structure of a single algebra: element orders, atoms and
//! the Boolean center.

use super::{ElemId, ElementOrder, FiniteMvAlgebra, Homomorphism};
use crate::error::{MvError, Result};

/// `|a|`: the largest `n` with `na` defined under partial addition.
/// `|0|` is [`ElementOrder::Infinite`].
pub fn element_order(a: &FiniteMvAlgebra, x: ElemId) -> ElementOrder {
    let neg = a.neg(x);
    let mut sum = x;
    let mut n = 1u64;
    // (n+1)x is defined iff nx ≤ ¬x.
    while a.leq(sum, neg) {
        let next = a.oplus(sum, x);
        if next == sum {
            // every further step is defined as well
            return ElementOrder::Infinite;
        }
        sum = next;
        n += 1;
    }
    ElementOrder::Finite(n)
}

/// Minimal elements of `A \ {0}`, in id order.
pub fn atoms(a: &FiniteMvAlgebra) -> Vec<ElemId> {
    let zero = a.zero();
    a.elements()
        .filter(|&x| x != zero)
        .filter(|&x| a.elements().all(|y| y == zero || y == x || !a.leq(y, x)))
        .collect()
}

/// Every nonzero element dominates an atom.
pub fn is_atomic(a: &FiniteMvAlgebra) -> bool {
    let atoms = atoms(a);
    a.elements()
        .filter(|&x| x != a.zero())
        .all(|x| atoms.iter().any(|&t| a.leq(t, x)))
}

/// The subalgebra on `members` with inherited operations, and its inclusion.
/// Fails when `members` is not closed under `⊕` and `¬` or misses `0`.
pub fn subalgebra(a: &FiniteMvAlgebra, members: &[ElemId]) -> Result<(FiniteMvAlgebra, Homomorphism)> {
    let mut members = members.to_vec();
    members.sort_unstable();
    members.dedup();
    let mut position = vec![usize::MAX; a.size()];
    for (i, &x) in members.iter().enumerate() {
        position[x] = i;
    }
    let closed = |x: ElemId| {
        let p = position[x];
        if p == usize::MAX {
            Err(MvError::InvalidArgument(format!(
                "subset is not a subalgebra: misses {}",
                a.name(x)
            )))
        } else {
            Ok(p)
        }
    };
    let zero = closed(a.zero())?;
    let mut oplus = Vec::with_capacity(members.len() * members.len());
    for &x in &members {
        for &y in &members {
            oplus.push(closed(a.oplus(x, y))?);
        }
    }
    let neg = members
        .iter()
        .map(|&x| closed(a.neg(x)))
        .collect::<Result<Vec<_>>>()?;
    let names = members.iter().map(|&x| a.name(x).to_string()).collect();
    let sub = FiniteMvAlgebra::from_trusted(names, oplus, neg, zero);
    let inclusion = Homomorphism::new(sub.clone(), a.clone(), members)?;
    Ok((sub, inclusion))
}

/// `B(A)` with its inclusion into `A`.
#[derive(Debug, Clone)]
pub struct BooleanCenter {
    pub algebra: FiniteMvAlgebra,
    pub embedding: Homomorphism,
}

/// The idempotents `x ⊕ x = x`, which form a Boolean subalgebra.
pub fn boolean_center(a: &FiniteMvAlgebra) -> Result<BooleanCenter> {
    let members: Vec<ElemId> = a.elements().filter(|&x| a.is_idempotent(x)).collect();
    let (algebra, embedding) = subalgebra(a, &members)?;
    for x in algebra.elements() {
        let nx = algebra.neg(x);
        if algebra.join(x, nx) != algebra.one() || algebra.meet(x, nx) != algebra.zero() {
            return Err(MvError::InternalInvariant(format!(
                "¬ is not a complement of {} in the Boolean center",
                algebra.name(x)
            )));
        }
    }
    Ok(BooleanCenter { algebra, embedding })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(a: &FiniteMvAlgebra, ids: &[ElemId]) -> Vec<String> {
        ids.iter().map(|&x| a.name(x).to_string()).collect()
    }

    #[test]
    fn orders_in_chain_five() {
        let a = FiniteMvAlgebra::chain(5).unwrap();
        let orders: Vec<_> = a.elements().map(|x| element_order(&a, x)).collect();
        assert_eq!(
            orders,
            vec![
                ElementOrder::Infinite,
                ElementOrder::Finite(4),
                ElementOrder::Finite(2),
                ElementOrder::Finite(1),
                ElementOrder::Finite(1),
            ]
        );
    }

    #[test]
    fn order_in_product_is_componentwise_minimum() {
        let a = FiniteMvAlgebra::product(&[2, 3]).unwrap();
        assert_eq!(element_order(&a, a.find("(0,1/2)").unwrap()), ElementOrder::Finite(2));
        assert_eq!(element_order(&a, a.find("(1,1/2)").unwrap()), ElementOrder::Finite(1));
        assert_eq!(element_order(&a, a.zero()), ElementOrder::Infinite);
    }

    #[test]
    fn atoms_of_small_algebras() {
        let a = FiniteMvAlgebra::product(&[2, 3]).unwrap();
        assert_eq!(names(&a, &atoms(&a)), ["(0,1/2)", "(1,0)"]);
        let c = FiniteMvAlgebra::chain(7).unwrap();
        assert_eq!(names(&c, &atoms(&c)), ["1/6"]);
        let t = FiniteMvAlgebra::trivial();
        assert!(atoms(&t).is_empty());
        assert!(is_atomic(&t));
        assert!(is_atomic(&a));
    }

    #[test]
    fn boolean_centers() {
        let c = FiniteMvAlgebra::chain(3).unwrap();
        assert_eq!(boolean_center(&c).unwrap().algebra.names(), ["0", "1"]);

        let b = FiniteMvAlgebra::product(&[2, 2]).unwrap();
        assert_eq!(boolean_center(&b).unwrap().algebra.size(), 4);

        let a = FiniteMvAlgebra::product(&[2, 3]).unwrap();
        let center = boolean_center(&a).unwrap();
        assert_eq!(center.algebra.names(), ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
        assert!(center.algebra.is_boolean());
        assert!(center.embedding.is_injective());
    }

    #[test]
    fn non_closed_subset_is_not_a_subalgebra() {
        let a = FiniteMvAlgebra::chain(5).unwrap();
        assert!(subalgebra(&a, &[0, 1, 4]).is_err());
        // {0, 1/2, 1} is a copy of Ł_3 inside Ł_5
        let (sub, _) = subalgebra(&a, &[0, 2, 4]).unwrap();
        assert!(sub.is_chain());
    }
}
