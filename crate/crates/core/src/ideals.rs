//! Ideals, quotients and the maximal-ideal spectrum of a finite MV-algebra.
//!
//! An ideal is a subset containing `0` that is downward closed and closed
//! under `⊕`. Enumeration order is fixed: ideals are sorted by their member
//! lists, compared lexicographically by element id.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use crate::algebra::{ElemId, FiniteMvAlgebra, Homomorphism, IsoWitness, Limits, MixedRadix};
use crate::error::{MvError, Result};

/// An ideal of a particular algebra, stored as a sorted member list plus a
/// membership mask over the carrier.
#[derive(Clone, Debug)]
pub struct Ideal {
    members: Vec<ElemId>,
    mask: Vec<bool>,
}

impl Ideal {
    /// Checks the ideal laws before accepting `members`.
    pub fn from_members(a: &FiniteMvAlgebra, members: impl IntoIterator<Item = ElemId>) -> Result<Self> {
        let ideal = Self::from_mask(mask_of(a, members)?);
        if let Some(reason) = ideal_law_violation(a, &ideal) {
            return Err(MvError::InvalidArgument(format!("not an ideal: {reason}")));
        }
        Ok(ideal)
    }

    fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Ideal { members, mask }
    }

    /// `{0}`
    pub fn zero(a: &FiniteMvAlgebra) -> Self {
        let mut mask = vec![false; a.size()];
        mask[a.zero()] = true;
        Self::from_mask(mask)
    }

    pub fn whole(a: &FiniteMvAlgebra) -> Self {
        Self::from_mask(vec![true; a.size()])
    }

    #[inline]
    pub fn contains(&self, x: ElemId) -> bool {
        self.mask[x]
    }

    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn carrier_size(&self) -> usize {
        self.mask.len()
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.mask.len()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Self::from_mask(self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect())
    }

    pub fn names(&self, a: &FiniteMvAlgebra) -> Vec<String> {
        self.members.iter().map(|&x| a.name(x).to_string()).collect()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members
            .cmp(&other.members)
            .then(self.mask.len().cmp(&other.mask.len()))
    }
}

fn mask_of(a: &FiniteMvAlgebra, members: impl IntoIterator<Item = ElemId>) -> Result<Vec<bool>> {
    let mut mask = vec![false; a.size()];
    for x in members {
        if x >= a.size() {
            return Err(MvError::InvalidArgument(format!("no element with id {x}")));
        }
        mask[x] = true;
    }
    Ok(mask)
}

fn check_belongs(a: &FiniteMvAlgebra, ideal: &Ideal) -> Result<()> {
    if ideal.carrier_size() != a.size() {
        return Err(MvError::InvalidArgument(
            "ideal belongs to a different algebra".into(),
        ));
    }
    Ok(())
}

/// Describes the first failed ideal law, if any.
fn ideal_law_violation(a: &FiniteMvAlgebra, ideal: &Ideal) -> Option<String> {
    if !ideal.contains(a.zero()) {
        return Some("does not contain 0".into());
    }
    for &y in ideal.members() {
        if let Some(x) = a.elements().find(|&x| a.leq(x, y) && !ideal.contains(x)) {
            return Some(format!("{} ≤ {} but is missing", a.name(x), a.name(y)));
        }
        for &z in ideal.members() {
            if !ideal.contains(a.oplus(y, z)) {
                return Some(format!("{} ⊕ {} is missing", a.name(y), a.name(z)));
            }
        }
    }
    None
}

/// Iterates `e ← e ⊕ e` to the idempotent `e` that tops the ideal generated
/// by `x`: the multiples of `x` grow until they stop changing.
fn saturate(a: &FiniteMvAlgebra, mut x: ElemId) -> ElemId {
    loop {
        let next = a.oplus(x, x);
        if next == x {
            return x;
        }
        x = next;
    }
}

fn downset(a: &FiniteMvAlgebra, top: ElemId) -> Ideal {
    Ideal::from_mask(a.elements().map(|x| a.leq(x, top)).collect())
}

/// The least ideal containing `generators`.
///
/// Every element of the generated ideal lies below some finite sum of
/// generators, and those sums are dominated by the multiples of
/// `s = ⊕ generators`. In a finite algebra the multiples stabilise at an
/// idempotent `e`, so the ideal is exactly `↓e`.
pub fn ideal_generated(a: &FiniteMvAlgebra, generators: &[ElemId]) -> Result<Ideal> {
    let mut sum = a.zero();
    for &g in generators {
        if g >= a.size() {
            return Err(MvError::InvalidArgument(format!("no element with id {g}")));
        }
        sum = a.oplus(sum, g);
    }
    Ok(downset(a, saturate(a, sum)))
}

/// Every ideal of `a`, duplicate-free, in the canonical order.
pub fn all_ideals(a: &FiniteMvAlgebra) -> Result<Vec<Ideal>> {
    all_ideals_with(a, &Limits::default())
}

/// Each ideal is the join of the principal ideals of its members, so closing
/// the principal ideals under binary joins reaches all of them.
pub fn all_ideals_with(a: &FiniteMvAlgebra, limits: &Limits) -> Result<Vec<Ideal>> {
    limits.check_carrier(a.size())?;
    // Ideals are tracked by their top idempotent during the closure.
    let mut tops: BTreeSet<ElemId> = a.elements().map(|x| saturate(a, x)).collect();
    let mut frontier: Vec<ElemId> = tops.iter().copied().collect();
    while !frontier.is_empty() {
        let known: Vec<ElemId> = tops.iter().copied().collect();
        let mut next = Vec::new();
        for &e in &frontier {
            for &f in &known {
                let joined = saturate(a, a.oplus(e, f));
                if tops.insert(joined) {
                    next.push(joined);
                }
            }
        }
        if tops.len() > limits.max_ideals {
            return Err(MvError::ResourceLimit {
                what: "ideal lattice",
                size: tops.len(),
                limit: limits.max_ideals,
            });
        }
        frontier = next;
    }
    let mut ideals: Vec<Ideal> = tops.into_iter().map(|e| downset(a, e)).collect();
    ideals.sort();
    Ok(ideals)
}

/// Ideals with finite quotient; for a finite algebra this is every ideal.
pub fn id_f(a: &FiniteMvAlgebra) -> Result<Vec<Ideal>> {
    all_ideals(a)
}

fn require_proper(a: &FiniteMvAlgebra, ideal: &Ideal) -> Result<()> {
    check_belongs(a, ideal)?;
    if !ideal.is_proper() {
        return Err(MvError::InvalidArgument("ideal is not proper".into()));
    }
    Ok(())
}

/// A pair `(x, y)` with `x ∧ y ∈ P` but `x, y ∉ P`, if one exists.
pub fn prime_violation(a: &FiniteMvAlgebra, ideal: &Ideal) -> Result<Option<(ElemId, ElemId)>> {
    require_proper(a, ideal)?;
    for x in a.elements().filter(|&x| !ideal.contains(x)) {
        for y in a.elements().filter(|&y| !ideal.contains(y)) {
            if ideal.contains(a.meet(x, y)) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Whenever `x ∧ y ∈ P`, `x ∈ P` or `y ∈ P`.
pub fn is_prime(a: &FiniteMvAlgebra, ideal: &Ideal) -> Result<bool> {
    Ok(prime_violation(a, ideal)?.is_none())
}

/// For every `x ∉ M` some `n ≥ 1` has `¬(nx) ∈ M`, where `nx` is the
/// iterated `⊕`-sum.
pub fn is_maximal(a: &FiniteMvAlgebra, ideal: &Ideal) -> Result<bool> {
    require_proper(a, ideal)?;
    Ok(a.elements().filter(|&x| !ideal.contains(x)).all(|x| {
        let mut sum = x;
        loop {
            if ideal.contains(a.neg(sum)) {
                return true;
            }
            let next = a.oplus(sum, x);
            if next == sum {
                return false;
            }
            sum = next;
        }
    }))
}

/// Maximality as "no proper ideal strictly contains it", against an
/// enumeration of all ideals.
pub fn is_maximal_by_inclusion(a: &FiniteMvAlgebra, ideal: &Ideal, ideals: &[Ideal]) -> Result<bool> {
    require_proper(a, ideal)?;
    Ok(!ideals
        .iter()
        .any(|j| j.is_proper() && j != ideal && ideal.is_subset(j)))
}

/// A generator of `ideal`, preferring its largest element.
pub fn is_principal(a: &FiniteMvAlgebra, ideal: &Ideal) -> Result<Option<ElemId>> {
    check_belongs(a, ideal)?;
    let top = ideal
        .members()
        .iter()
        .copied()
        .find(|&m| ideal.members().iter().all(|&x| a.leq(x, m)));
    let candidates = top.into_iter().chain(ideal.members().iter().copied());
    for g in candidates {
        if &ideal_generated(a, &[g])? == ideal {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// `A/I` together with the projection `x ↦ [x]_I`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: FiniteMvAlgebra,
    pub projection: Homomorphism,
    /// Least element id of each class.
    pub representatives: Vec<ElemId>,
}

impl Quotient {
    #[inline]
    pub fn class_of(&self, x: ElemId) -> ElemId {
        self.projection.apply(x)
    }
}

/// `(x ⊙ ¬y) ⊕ (y ⊙ ¬x)`, which lies in `I` exactly when `x ≡ y mod I`.
pub fn distance(a: &FiniteMvAlgebra, x: ElemId, y: ElemId) -> ElemId {
    a.oplus(a.otimes(x, a.neg(y)), a.otimes(y, a.neg(x)))
}

/// The quotient by the congruence `x ∼ y ⟺ d(x, y) ∈ I`. Classes are
/// numbered in order of their least member and named `[rep]`.
pub fn quotient(a: &FiniteMvAlgebra, ideal: &Ideal) -> Result<Quotient> {
    check_belongs(a, ideal)?;
    let mut representatives: Vec<ElemId> = Vec::new();
    let mut class = vec![0usize; a.size()];
    for x in a.elements() {
        match representatives
            .iter()
            .position(|&r| ideal.contains(distance(a, x, r)))
        {
            Some(c) => class[x] = c,
            None => {
                class[x] = representatives.len();
                representatives.push(x);
            }
        }
    }
    let k = representatives.len();
    let mut oplus = Vec::with_capacity(k * k);
    for &r in &representatives {
        for &s in &representatives {
            oplus.push(class[a.oplus(r, s)]);
        }
    }
    let neg: Vec<ElemId> = representatives.iter().map(|&r| class[a.neg(r)]).collect();
    // The induced operations must not depend on the chosen representatives.
    for x in a.elements() {
        if neg[class[x]] != class[a.neg(x)] {
            return Err(MvError::InternalInvariant(format!(
                "¬ is not well defined on the class of {}",
                a.name(x)
            )));
        }
        for y in a.elements() {
            if oplus[class[x] * k + class[y]] != class[a.oplus(x, y)] {
                return Err(MvError::InternalInvariant(format!(
                    "⊕ is not well defined at ({}, {})",
                    a.name(x),
                    a.name(y)
                )));
            }
        }
    }
    let names = representatives
        .iter()
        .map(|&r| format!("[{}]", a.name(r)))
        .collect();
    let algebra = FiniteMvAlgebra::from_trusted(names, oplus, neg, class[a.zero()]);
    let projection = Homomorphism::new(a.clone(), algebra.clone(), class)
        .map_err(|e| MvError::InternalInvariant(format!("projection: {e}")))?;
    let kernel = projection.kernel();
    if kernel.as_slice() != ideal.members() {
        return Err(MvError::InternalInvariant(
            "projection kernel differs from the ideal".into(),
        ));
    }
    Ok(Quotient {
        algebra,
        projection,
        representatives,
    })
}

/// The `n` with `A/M ≅ Ł_n`.
pub fn rank(a: &FiniteMvAlgebra, maximal: &Ideal) -> Result<usize> {
    if !is_maximal(a, maximal)? {
        return Err(MvError::InvalidArgument("ideal is not maximal".into()));
    }
    let q = quotient(a, maximal)?;
    if !q.algebra.is_chain() {
        return Err(MvError::InternalInvariant(
            "quotient by a maximal ideal is not a chain".into(),
        ));
    }
    Ok(q.algebra.size())
}

/// Maximal ideals in canonical order. The definitional test is cross-checked
/// against inclusion-maximality.
pub fn max_ideals(a: &FiniteMvAlgebra) -> Result<Vec<Ideal>> {
    max_ideals_with(a, &Limits::default())
}

pub fn max_ideals_with(a: &FiniteMvAlgebra, limits: &Limits) -> Result<Vec<Ideal>> {
    let ideals = all_ideals_with(a, limits)?;
    let mut maximal = Vec::new();
    for ideal in ideals.iter().filter(|i| i.is_proper()) {
        let by_definition = is_maximal(a, ideal)?;
        let by_inclusion = is_maximal_by_inclusion(a, ideal, &ideals)?;
        if by_definition != by_inclusion {
            return Err(MvError::InternalInvariant(format!(
                "maximality tests disagree on {{{}}}",
                ideal.names(a).join(", ")
            )));
        }
        if by_definition {
            maximal.push(ideal.clone());
        }
    }
    Ok(maximal)
}

/// Maximal ideals of finite rank; all of them, for a finite algebra.
pub fn max_f(a: &FiniteMvAlgebra) -> Result<Vec<Ideal>> {
    max_ideals(a)
}

/// Intersection of all maximal ideals (the whole algebra if there are none).
pub fn radical(a: &FiniteMvAlgebra) -> Result<Ideal> {
    Ok(max_ideals(a)?
        .iter()
        .fold(Ideal::whole(a), |acc, m| acc.intersection(m)))
}

pub fn is_semisimple(a: &FiniteMvAlgebra) -> Result<bool> {
    Ok(radical(a)? == Ideal::zero(a))
}

/// `S(I)`: the maximal ideals containing `I`, with `A/I ≅ ∏ A/M`.
#[derive(Debug, Clone)]
pub struct SDecomposition {
    pub ideal: Ideal,
    pub factors: Vec<Ideal>,
    pub ranks: Vec<usize>,
    /// `A/I`
    pub quotient: Quotient,
    /// `A/M` for each factor, in the same order.
    pub factor_quotients: Vec<Quotient>,
    /// `∏ A/M`
    pub product: FiniteMvAlgebra,
    /// `φ_I : A/I → ∏ A/M`, `[a]_I ↦ ([a]_M)_M`.
    pub iso: IsoWitness,
}

pub fn s_decomposition(a: &FiniteMvAlgebra, ideal: &Ideal) -> Result<SDecomposition> {
    let maximal = max_ideals(a)?;
    s_decomposition_among(a, ideal, &maximal)
}

/// As [`s_decomposition`], with the maximal ideals already enumerated.
pub fn s_decomposition_among(
    a: &FiniteMvAlgebra,
    ideal: &Ideal,
    maximal: &[Ideal],
) -> Result<SDecomposition> {
    check_belongs(a, ideal)?;
    let factors: Vec<Ideal> = if ideal.is_proper() {
        maximal.iter().filter(|m| ideal.is_subset(m)).cloned().collect()
    } else {
        Vec::new()
    };
    let meet = factors
        .iter()
        .fold(Ideal::whole(a), |acc, m| acc.intersection(m));
    if &meet != ideal {
        return Err(MvError::TheoremViolation(format!(
            "maximal ideals over {{{}}} intersect to {{{}}}",
            ideal.names(a).join(", "),
            meet.names(a).join(", ")
        )));
    }
    let quotient = quotient(a, ideal)?;
    let factor_quotients = factors
        .iter()
        .map(|m| quotient_checked_chain(a, m))
        .collect::<Result<Vec<_>>>()?;
    let ranks: Vec<usize> = factor_quotients.iter().map(|q| q.algebra.size()).collect();
    let product = FiniteMvAlgebra::direct_product(
        &factor_quotients
            .iter()
            .map(|q| q.algebra.clone())
            .collect::<Vec<_>>(),
        &Limits {
            max_carrier: usize::MAX,
            ..Limits::default()
        },
    )?;
    let radix = MixedRadix::new(ranks.clone());
    let image_of = |x: ElemId| {
        let coords: Vec<ElemId> = factor_quotients.iter().map(|q| q.class_of(x)).collect();
        radix.encode(&coords)
    };
    let mut map = vec![usize::MAX; quotient.algebra.size()];
    for x in a.elements() {
        let c = quotient.class_of(x);
        let img = image_of(x);
        if map[c] != usize::MAX && map[c] != img {
            return Err(MvError::InternalInvariant(
                "φ_I is not well defined on classes".into(),
            ));
        }
        map[c] = img;
    }
    let phi = Homomorphism::new(quotient.algebra.clone(), product.clone(), map)
        .map_err(|e| MvError::TheoremViolation(format!("φ_I is not a homomorphism: {e}")))?;
    if !phi.is_injective() || quotient.algebra.size() != product.size() {
        return Err(MvError::TheoremViolation(format!(
            "φ_I is not bijective: |A/I| = {}, |∏ A/M| = {}",
            quotient.algebra.size(),
            product.size()
        )));
    }
    let iso = IsoWitness::from_bijection(phi)?;
    Ok(SDecomposition {
        ideal: ideal.clone(),
        factors,
        ranks,
        quotient,
        factor_quotients,
        product,
        iso,
    })
}

fn quotient_checked_chain(a: &FiniteMvAlgebra, maximal: &Ideal) -> Result<Quotient> {
    let q = quotient(a, maximal)?;
    if !q.algebra.is_chain() {
        return Err(MvError::InternalInvariant(
            "quotient by a maximal ideal is not a chain".into(),
        ));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prod(sizes: &[usize]) -> FiniteMvAlgebra {
        FiniteMvAlgebra::product(sizes).unwrap()
    }

    fn ideal(a: &FiniteMvAlgebra, names: &[&str]) -> Ideal {
        Ideal::from_members(a, names.iter().map(|n| a.find(n).unwrap())).unwrap()
    }

    #[test]
    fn generated_ideals() {
        let a = prod(&[2, 3]);
        let g = ideal_generated(&a, &[a.find("(0,1/2)").unwrap()]).unwrap();
        assert_eq!(g.names(&a), ["(0,0)", "(0,1/2)", "(0,1)"]);
        assert_eq!(ideal_generated(&a, &[]).unwrap(), Ideal::zero(&a));
        assert_eq!(ideal_generated(&a, &[a.one()]).unwrap(), Ideal::whole(&a));
    }

    #[test]
    fn from_members_rejects_non_ideals() {
        let a = prod(&[2, 3]);
        assert!(Ideal::from_members(&a, [a.find("(0,1/2)").unwrap()]).is_err());
        assert!(Ideal::from_members(&a, [0, a.find("(0,1/2)").unwrap()]).is_err());
    }

    #[test]
    fn ideal_counts() {
        for n in 2..=8 {
            let c = FiniteMvAlgebra::chain(n).unwrap();
            let ideals = all_ideals(&c).unwrap();
            assert_eq!(ideals, vec![Ideal::zero(&c), Ideal::whole(&c)]);
        }
        assert_eq!(all_ideals(&prod(&[2, 3])).unwrap().len(), 4);
        assert_eq!(all_ideals(&prod(&[2, 2])).unwrap().len(), 4);
        assert_eq!(all_ideals(&FiniteMvAlgebra::trivial()).unwrap().len(), 1);
    }

    #[test]
    fn ideal_limit() {
        let limits = Limits {
            max_carrier: 5000,
            max_ideals: 3,
        };
        assert!(matches!(
            all_ideals_with(&prod(&[2, 2, 2]), &limits),
            Err(MvError::ResourceLimit { .. })
        ));
    }

    #[test]
    fn primality() {
        let a = prod(&[2, 3]);
        assert!(is_prime(&a, &ideal(&a, &["(0,0)", "(0,1/2)", "(0,1)"])).unwrap());
        let zero = Ideal::zero(&a);
        assert_eq!(
            prime_violation(&a, &zero).unwrap(),
            Some((a.find("(0,1/2)").unwrap(), a.find("(1,0)").unwrap()))
        );
        let c = FiniteMvAlgebra::chain(3).unwrap();
        assert!(is_prime(&c, &Ideal::zero(&c)).unwrap());
        assert!(matches!(
            is_prime(&c, &Ideal::whole(&c)),
            Err(MvError::InvalidArgument(_))
        ));
    }

    #[test]
    fn maximality() {
        let a = prod(&[2, 3]);
        let m = ideal(&a, &["(0,0)", "(0,1/2)", "(0,1)"]);
        assert!(is_maximal(&a, &m).unwrap());
        assert!(!is_maximal(&a, &Ideal::zero(&a)).unwrap());
        let c = FiniteMvAlgebra::chain(5).unwrap();
        assert!(is_maximal(&c, &Ideal::zero(&c)).unwrap());
        assert!(is_maximal(&a, &Ideal::whole(&a)).is_err());
    }

    #[test]
    fn principal_generators() {
        let a = prod(&[2, 3]);
        assert_eq!(is_principal(&a, &Ideal::zero(&a)).unwrap(), Some(a.zero()));
        let m = ideal(&a, &["(0,0)", "(0,1/2)", "(0,1)"]);
        assert_eq!(is_principal(&a, &m).unwrap(), a.find("(0,1)"));
        assert_eq!(is_principal(&a, &Ideal::whole(&a)).unwrap(), Some(a.one()));
    }

    #[test]
    fn quotients() {
        let a = prod(&[2, 3]);
        let q = quotient(&a, &Ideal::zero(&a)).unwrap();
        assert_eq!(q.algebra.size(), 6);
        let q = quotient(&a, &ideal(&a, &["(0,0)", "(0,1/2)", "(0,1)"])).unwrap();
        assert_eq!(q.algebra.size(), 2);
        assert!(q.algebra.is_chain());
        let q = quotient(&a, &Ideal::whole(&a)).unwrap();
        assert!(q.algebra.is_trivial());
    }

    #[test]
    fn ranks() {
        let a = prod(&[2, 3]);
        assert_eq!(rank(&a, &ideal(&a, &["(0,0)", "(0,1/2)", "(0,1)"])).unwrap(), 2);
        assert_eq!(rank(&a, &ideal(&a, &["(0,0)", "(1,0)"])).unwrap(), 3);
        for n in 2..=7 {
            let c = FiniteMvAlgebra::chain(n).unwrap();
            assert_eq!(rank(&c, &Ideal::zero(&c)).unwrap(), n);
        }
        assert!(rank(&a, &Ideal::zero(&a)).is_err());
    }

    #[test]
    fn maximal_spectrum() {
        assert_eq!(max_ideals(&prod(&[2, 3])).unwrap().len(), 2);
        assert_eq!(max_ideals(&FiniteMvAlgebra::chain(6).unwrap()).unwrap().len(), 1);
        let b = prod(&[2, 2, 2]);
        let maximal = max_ideals(&b).unwrap();
        assert_eq!(maximal.len(), 3);
        for m in &maximal {
            assert_eq!(rank(&b, m).unwrap(), 2);
        }
    }

    #[test]
    fn radicals() {
        let a = prod(&[2, 3]);
        assert_eq!(radical(&a).unwrap(), Ideal::zero(&a));
        assert!(is_semisimple(&a).unwrap());
        assert!(is_semisimple(&FiniteMvAlgebra::chain(4).unwrap()).unwrap());
    }

    #[test]
    fn decomposition_of_zero_ideal() {
        let a = prod(&[2, 3]);
        let s = s_decomposition(&a, &Ideal::zero(&a)).unwrap();
        let mut ranks = s.ranks.clone();
        ranks.sort();
        assert_eq!(ranks, [2, 3]);
        assert_eq!(s.iso.source().size(), 6);

        let b = prod(&[2, 2]);
        let s = s_decomposition(&b, &Ideal::zero(&b)).unwrap();
        assert_eq!(s.ranks, [2, 2]);
    }

    #[test]
    fn decomposition_of_maximal_and_improper_ideals() {
        let a = prod(&[2, 3]);
        let m = ideal(&a, &["(0,0)", "(1,0)"]);
        let s = s_decomposition(&a, &m).unwrap();
        assert_eq!(s.factors, vec![m]);
        assert_eq!(s.ranks, [3]);
        let s = s_decomposition(&a, &Ideal::whole(&a)).unwrap();
        assert!(s.factors.is_empty());
        assert!(s.product.is_trivial());
    }
}
