//! Decision procedures for the characterisation results on finite algebras.
//! Each returns the evidence it found, not just a verdict.

use super::{macneille_mv, profinite_product, MaxfProduct};
use crate::algebra::{
    atoms, boolean_center, element_order, is_atomic, is_isomorphic, BooleanCenter, ChainMultiset,
    ElemId, FiniteMvAlgebra, Homomorphism, IsoWitness, Limits,
};
use crate::error::{MvError, Result};
use crate::ideals::{
    all_ideals, ideal_generated, is_prime, is_principal, is_semisimple, max_ideals,
    max_ideals_with, Ideal,
};

/// Evidence for "A ≅ Â iff A is profinite and every finite-rank maximal
/// ideal is principal".
#[derive(Debug, Clone)]
pub struct SelfIso {
    pub holds: bool,
    /// `A → Â` when it exists.
    pub witness: Option<IsoWitness>,
    /// Each maximal ideal with a generator, if principal.
    pub generators: Vec<(Ideal, Option<ElemId>)>,
}

pub fn check_self_iso(a: &FiniteMvAlgebra) -> Result<SelfIso> {
    let (completion, _) = profinite_product(a)?;
    let witness = is_isomorphic(a, &completion)?;
    let generators = max_ideals(a)?
        .into_iter()
        .map(|m| {
            let g = is_principal(a, &m)?;
            Ok((m, g))
        })
        .collect::<Result<Vec<_>>>()?;
    // Finite algebras are products of chains, hence profinite.
    let profinite = true;
    let all_principal = generators.iter().all(|(_, g)| g.is_some());
    let holds = witness.is_some();
    if holds != (profinite && all_principal) {
        return Err(MvError::TheoremViolation(format!(
            "A ≅ Â is {holds} but 'profinite and all maximal ideals principal' is {}",
            profinite && all_principal
        )));
    }
    Ok(SelfIso {
        holds,
        witness,
        generators,
    })
}

/// Primes of `B(A)` and the ideals they generate in `A`.
#[derive(Debug, Clone)]
pub struct Regularity {
    pub regular: bool,
    pub center: BooleanCenter,
    /// `(N, ⟨N⟩_A, ⟨N⟩_A is prime)` for each prime `N` of the center.
    pub primes: Vec<(Ideal, Ideal, bool)>,
}

impl Regularity {
    /// The first prime of the center whose generated ideal is not prime.
    pub fn violating(&self) -> Option<&Ideal> {
        self.primes.iter().find(|p| !p.2).map(|p| &p.0)
    }
}

/// Regular: every prime ideal `N` of `B(A)` generates a prime ideal of `A`.
pub fn regularity(a: &FiniteMvAlgebra) -> Result<Regularity> {
    let center = boolean_center(a)?;
    let b = &center.algebra;
    let mut primes = Vec::new();
    for n in all_ideals(b)?.into_iter().filter(|n| n.is_proper()) {
        if !is_prime(b, &n)? {
            continue;
        }
        let image: Vec<ElemId> = n.members().iter().map(|&x| center.embedding.apply(x)).collect();
        let generated = ideal_generated(a, &image)?;
        let prime = generated.is_proper() && is_prime(a, &generated)?;
        primes.push((n, generated, prime));
    }
    let regular = primes.iter().all(|p| p.2);
    Ok(Regularity {
        regular,
        center,
        primes,
    })
}

pub fn is_regular(a: &FiniteMvAlgebra) -> Result<bool> {
    Ok(regularity(a)?.regular)
}

/// `B(Â) ≅ (B(A))^`
#[derive(Debug, Clone)]
pub struct CenterPreservation {
    pub center_of_completion: FiniteMvAlgebra,
    pub completion_of_center: FiniteMvAlgebra,
    pub witness: IsoWitness,
}

pub fn check_boolean_center_preservation(a: &FiniteMvAlgebra) -> Result<CenterPreservation> {
    let reg = regularity(a)?;
    if let Some(n) = reg.violating() {
        return Err(MvError::Precondition(format!(
            "algebra is not regular: the prime {{{}}} of B(A) generates a non-prime ideal",
            n.names(&reg.center.algebra).join(", ")
        )));
    }
    let (completion, _) = profinite_product(a)?;
    let center_of_completion = boolean_center(&completion)?.algebra;
    let (completion_of_center, _) = profinite_product(&reg.center.algebra)?;
    let witness = is_isomorphic(&center_of_completion, &completion_of_center)?.ok_or_else(|| {
        MvError::TheoremViolation(format!(
            "B(Â) has {} elements but the completion of B(A) has {}",
            center_of_completion.size(),
            completion_of_center.size()
        ))
    })?;
    Ok(CenterPreservation {
        center_of_completion,
        completion_of_center,
        witness,
    })
}

/// `(A1 × A2)^ ≅ Â1 × Â2`
#[derive(Debug, Clone)]
pub struct ProductPreservation {
    pub product: FiniteMvAlgebra,
    pub completion_of_product: FiniteMvAlgebra,
    pub product_of_completions: FiniteMvAlgebra,
    pub multiset: ChainMultiset,
    pub witness: IsoWitness,
}

pub fn check_product_preservation(
    first: &FiniteMvAlgebra,
    second: &FiniteMvAlgebra,
    limits: &Limits,
) -> Result<ProductPreservation> {
    let product = FiniteMvAlgebra::direct_product(&[first.clone(), second.clone()], limits)?;

    // Max(A1 × A2) = {M1 × A2} ∪ {A1 × M2}
    let width = second.size();
    let mut expected: Vec<Ideal> = Vec::new();
    for m in max_ideals_with(first, limits)? {
        let members = m
            .members()
            .iter()
            .flat_map(|&x| (0..width).map(move |y| x * width + y));
        expected.push(Ideal::from_members(&product, members)?);
    }
    for m in max_ideals_with(second, limits)? {
        let members = first
            .elements()
            .flat_map(|x| m.members().iter().map(move |&y| x * width + y));
        expected.push(Ideal::from_members(&product, members)?);
    }
    expected.sort();
    let actual = max_ideals_with(&product, limits)?;
    if actual != expected {
        return Err(MvError::TheoremViolation(format!(
            "A1 × A2 has {} maximal ideals, expected the {} of the form M1 × A2 or A1 × M2",
            actual.len(),
            expected.len()
        )));
    }

    let completion_of_product = MaxfProduct::build_with(&product, limits)?.algebra;
    let product_of_completions = FiniteMvAlgebra::direct_product(
        &[
            MaxfProduct::build_with(first, limits)?.algebra,
            MaxfProduct::build_with(second, limits)?.algebra,
        ],
        limits,
    )?;
    let witness = is_isomorphic(&completion_of_product, &product_of_completions)?
        .ok_or_else(|| MvError::TheoremViolation("(A1 × A2)^ ≇ Â1 × Â2".into()))?;
    let multiset = crate::algebra::canonical_decomposition(&completion_of_product)?.multiset;
    Ok(ProductPreservation {
        product,
        completion_of_product,
        product_of_completions,
        multiset,
        witness,
    })
}

/// Evidence for the comparison of profinite and MacNeille completions: a
/// rank-respecting bijection from atoms onto finite-rank maximal ideals.
#[derive(Debug, Clone)]
pub struct MacCriterion {
    pub holds: bool,
    pub atomic: bool,
    /// `{|a| + 1 : a atom}`
    pub atom_multiset: ChainMultiset,
    /// `{rank(M) : M ∈ Max_f(A)}`
    pub rank_multiset: ChainMultiset,
    /// `(a, τ(a), rank(τ(a)))`
    pub tau: Option<Vec<(ElemId, Ideal, usize)>>,
    /// `Â → Ā`
    pub witness: Option<IsoWitness>,
}

pub fn check_mac_criterion(a: &FiniteMvAlgebra) -> Result<MacCriterion> {
    if !is_semisimple(a)? {
        return Err(MvError::Precondition("algebra is not semisimple".into()));
    }
    let atomic = is_atomic(a);
    let atom_list = atoms(a);
    let atom_sizes = atom_list
        .iter()
        .map(|&t| {
            element_order(a, t)
                .finite()
                .map(|o| o as usize + 1)
                .ok_or_else(|| MvError::InternalInvariant("atom of infinite order".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let product = MaxfProduct::build(a)?;
    let ranks = product.ranks();
    let atom_multiset = ChainMultiset::new(atom_sizes.clone())?;
    let rank_multiset = ChainMultiset::new(ranks.clone())?;
    let holds = atomic && atom_multiset == rank_multiset;
    if !holds {
        return Ok(MacCriterion {
            holds,
            atomic,
            atom_multiset,
            rank_multiset,
            tau: None,
            witness: None,
        });
    }

    // τ(a) is the unique maximal ideal missing a; fall back to pairing by
    // rank if that is not a rank-respecting bijection.
    let natural: Option<Vec<usize>> = atom_list
        .iter()
        .map(|&t| {
            let mut missing = product.maximal.iter().enumerate().filter(|(_, m)| !m.contains(t));
            match (missing.next(), missing.next()) {
                (Some((k, _)), None) => Some(k),
                _ => None,
            }
        })
        .collect();
    let is_bijective_by_rank = |assign: &[usize]| {
        let mut used = vec![false; ranks.len()];
        assign.iter().zip(&atom_sizes).all(|(&k, &s)| {
            ranks[k] == s && !std::mem::replace(&mut used[k], true)
        })
    };
    let assignment = match natural {
        Some(assign) if is_bijective_by_rank(&assign) => assign,
        _ => {
            let mut used = vec![false; ranks.len()];
            atom_sizes
                .iter()
                .map(|&s| {
                    let k = (0..ranks.len())
                        .find(|&k| !used[k] && ranks[k] == s)
                        .expect("multisets agree");
                    used[k] = true;
                    k
                })
                .collect()
        }
    };
    let tau = atom_list
        .iter()
        .zip(&assignment)
        .map(|(&t, &k)| (t, product.maximal[k].clone(), ranks[k]))
        .collect();

    let mac = macneille_mv(a)?;
    let witness = is_isomorphic(&product.algebra, &mac.algebra)?
        .ok_or_else(|| MvError::TheoremViolation("Â ≇ Ā although the criterion holds".into()))?;
    Ok(MacCriterion {
        holds,
        atomic,
        atom_multiset,
        rank_multiset,
        tau: Some(tau),
        witness: Some(witness),
    })
}

/// The power-set Boolean algebra on `points` points: `⊕` is union, `¬` is
/// complement. Elements are bit masks named like `{0,2}`.
pub fn powerset_algebra(points: usize) -> Result<FiniteMvAlgebra> {
    if points > 20 {
        return Err(MvError::ResourceLimit {
            what: "power set",
            size: points,
            limit: 20,
        });
    }
    let n = 1usize << points;
    let full = n - 1;
    let oplus = (0..n).flat_map(|x| (0..n).map(move |y| x | y)).collect();
    let neg = (0..n).map(|x| full ^ x).collect();
    let names = (0..n)
        .map(|mask| {
            let members: Vec<String> = (0..points)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| i.to_string())
                .collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    Ok(FiniteMvAlgebra::from_trusted(names, oplus, neg, 0))
}

/// `B̂ ≅ P(X)` where `X` is the set of maximal ideals (the finite Stone space).
#[derive(Debug, Clone)]
pub struct PowersetWitness {
    pub points: Vec<Ideal>,
    pub completion: FiniteMvAlgebra,
    pub powerset: FiniteMvAlgebra,
    /// `B̂ → P(X)`: a tuple goes to the set of points where it is 1.
    pub witness: IsoWitness,
}

pub fn boolean_profinite_powerset(b: &FiniteMvAlgebra) -> Result<PowersetWitness> {
    if let Some(x) = b.elements().find(|&x| !b.is_idempotent(x)) {
        return Err(MvError::Precondition(format!(
            "not a Boolean algebra: {} ⊕ {} ≠ {}",
            b.name(x),
            b.name(x),
            b.name(x)
        )));
    }
    let product = MaxfProduct::build(b)?;
    if let Some(r) = product.ranks().into_iter().find(|&r| r != 2) {
        return Err(MvError::TheoremViolation(format!(
            "a Boolean algebra has a maximal ideal of rank {r}"
        )));
    }
    let powerset = powerset_algebra(product.maximal.len())?;
    let radix = crate::algebra::MixedRadix::new(product.ranks());
    let map = product
        .algebra
        .elements()
        .map(|x| {
            radix
                .decode(x)
                .iter()
                .zip(&product.factors)
                .enumerate()
                .filter(|(_, (&c, q))| c == q.algebra.one())
                .map(|(i, _)| 1usize << i)
                .sum()
        })
        .collect();
    let forward = Homomorphism::new(product.algebra.clone(), powerset.clone(), map)
        .map_err(|e| MvError::TheoremViolation(format!("B̂ → P(X): {e}")))?;
    let witness = IsoWitness::from_bijection(forward)
        .map_err(|e| MvError::TheoremViolation(format!("B̂ → P(X): {e}")))?;
    Ok(PowersetWitness {
        points: product.maximal.clone(),
        completion: product.algebra,
        powerset,
        witness,
    })
}
