//! The profinite completion as the inverse limit of the finite quotients.

use std::collections::HashMap;

use super::{CompletionReport, Method};
use crate::algebra::{canonical_decomposition, ElemId, FiniteMvAlgebra, Homomorphism, IsoWitness, Limits};
use crate::error::{MvError, Result};
use crate::ideals::{all_ideals_with, quotient, Ideal, Quotient};

/// A transition `φ_JI : A/I → A/J` for `I ⊆ J`.
#[derive(Debug, Clone)]
pub struct Transition {
    pub from: usize,
    pub to: usize,
    pub map: Homomorphism,
}

/// The system `{(id_f(A), ⊇), {A/I}, {φ_JI}}`.
#[derive(Debug, Clone)]
pub struct InverseSystem {
    pub algebra: FiniteMvAlgebra,
    pub index: Vec<Ideal>,
    pub nodes: Vec<Quotient>,
    pub transitions: Vec<Transition>,
    lookup: HashMap<(usize, usize), usize>,
}

impl InverseSystem {
    pub fn build(a: &FiniteMvAlgebra) -> Result<Self> {
        Self::build_with(a, &Limits::default())
    }

    pub fn build_with(a: &FiniteMvAlgebra, limits: &Limits) -> Result<Self> {
        let index = all_ideals_with(a, limits)?;
        let nodes = index
            .iter()
            .map(|i| quotient(a, i))
            .collect::<Result<Vec<_>>>()?;
        let mut transitions = Vec::new();
        let mut lookup = HashMap::new();
        for (i, small) in index.iter().enumerate() {
            for (j, large) in index.iter().enumerate() {
                if !small.is_subset(large) {
                    continue;
                }
                let (src, dst) = (&nodes[i], &nodes[j]);
                // [a]_I ↦ [a]_J, read off a representative of each class
                let map: Vec<ElemId> = src
                    .representatives
                    .iter()
                    .map(|&r| dst.class_of(r))
                    .collect();
                if let Some(x) = a.elements().find(|&x| map[src.class_of(x)] != dst.class_of(x)) {
                    return Err(MvError::InternalInvariant(format!(
                        "transition is not well defined at {}",
                        a.name(x)
                    )));
                }
                let map = Homomorphism::new(src.algebra.clone(), dst.algebra.clone(), map)
                    .map_err(|e| MvError::InternalInvariant(format!("transition map: {e}")))?;
                lookup.insert((i, j), transitions.len());
                transitions.push(Transition { from: i, to: j, map });
            }
        }
        Ok(InverseSystem {
            algebra: a.clone(),
            index,
            nodes,
            transitions,
            lookup,
        })
    }

    /// `φ_JI`, present whenever `index[from] ⊆ index[to]`.
    pub fn transition(&self, from: usize, to: usize) -> Option<&Homomorphism> {
        self.lookup.get(&(from, to)).map(|&t| &self.transitions[t].map)
    }

    /// `φ_II = id` and `φ_KJ ∘ φ_JI = φ_KI` for all `I ⊆ J ⊆ K`.
    pub fn check_coherence(&self) -> Result<()> {
        for (i, node) in self.nodes.iter().enumerate() {
            let id = self
                .transition(i, i)
                .ok_or_else(|| MvError::InternalInvariant("missing φ_II".into()))?;
            if id.map().iter().enumerate().any(|(x, &y)| x != y) {
                return Err(MvError::InternalInvariant(format!(
                    "φ_II is not the identity on a quotient of size {}",
                    node.algebra.size()
                )));
            }
        }
        for t in &self.transitions {
            for u in self.transitions.iter().filter(|u| u.from == t.to) {
                let direct = self.transition(t.from, u.to).ok_or_else(|| {
                    MvError::InternalInvariant("inclusion of ideals is not transitive".into())
                })?;
                let composed = t.map.then(&u.map)?;
                if composed.map() != direct.map() {
                    return Err(MvError::InternalInvariant(format!(
                        "φ_KJ ∘ φ_JI ≠ φ_KI for index triple ({}, {}, {})",
                        t.from, t.to, u.to
                    )));
                }
            }
        }
        Ok(())
    }

    /// Position of `{0}` in the index, which is its least element.
    pub fn least_index(&self) -> Result<usize> {
        let zero = Ideal::zero(&self.algebra);
        let z = self
            .index
            .iter()
            .position(|i| *i == zero)
            .ok_or_else(|| MvError::InternalInvariant("{0} is missing from id_f(A)".into()))?;
        for k in 0..self.index.len() {
            if self.transition(z, k).is_none() {
                return Err(MvError::InternalInvariant(
                    "{0} is not below every index".into(),
                ));
            }
        }
        Ok(z)
    }
}

/// The compatible-tuple algebra and the tuples behind its elements.
#[derive(Debug, Clone)]
pub struct InverseLimit {
    pub system: InverseSystem,
    pub algebra: FiniteMvAlgebra,
    /// `tuples[e][k]` is the coordinate of element `e` at `system.index[k]`.
    pub tuples: Vec<Vec<ElemId>>,
}

/// `{α ∈ ∏ A/I : φ_JI(α(I)) = α(J) whenever I ⊆ J}` with coordinatewise
/// operations.
///
/// Since `{0}` lies below every index, a compatible tuple is fixed by its
/// coordinate at `{0}`: `α(I) = φ_{I,{0}}(α({0}))`. The tuples are therefore
/// enumerated by that coordinate and extended, then checked for compatibility
/// at every transition.
pub fn inverse_limit(a: &FiniteMvAlgebra) -> Result<InverseLimit> {
    inverse_limit_with(a, &Limits::default())
}

pub fn inverse_limit_with(a: &FiniteMvAlgebra, limits: &Limits) -> Result<InverseLimit> {
    let system = InverseSystem::build_with(a, limits)?;
    system.check_coherence()?;
    let z = system.least_index()?;
    let width = system.index.len();
    let base = &system.nodes[z].algebra;

    let tuples: Vec<Vec<ElemId>> = base
        .elements()
        .map(|c| {
            (0..width)
                .map(|k| system.transition(z, k).expect("checked above").apply(c))
                .collect()
        })
        .collect();
    for alpha in &tuples {
        for t in &system.transitions {
            if t.map.apply(alpha[t.from]) != alpha[t.to] {
                return Err(MvError::InternalInvariant(format!(
                    "extended tuple is incompatible at transition ({}, {})",
                    t.from, t.to
                )));
            }
        }
    }

    let position: HashMap<&[ElemId], usize> = tuples
        .iter()
        .enumerate()
        .map(|(e, t)| (t.as_slice(), e))
        .collect();
    let find = |t: &[ElemId]| {
        position.get(t).copied().ok_or_else(|| {
            MvError::InternalInvariant("compatible tuples are not closed under the operations".into())
        })
    };
    let n = tuples.len();
    let mut oplus = Vec::with_capacity(n * n);
    let mut buf = vec![0; width];
    for x in &tuples {
        for y in &tuples {
            for k in 0..width {
                buf[k] = system.nodes[k].algebra.oplus(x[k], y[k]);
            }
            oplus.push(find(&buf)?);
        }
    }
    let mut neg = Vec::with_capacity(n);
    for x in &tuples {
        for k in 0..width {
            buf[k] = system.nodes[k].algebra.neg(x[k]);
        }
        neg.push(find(&buf)?);
    }
    let zero_tuple: Vec<ElemId> = system.nodes.iter().map(|q| q.algebra.zero()).collect();
    let zero = find(&zero_tuple)?;
    let names = tuples
        .iter()
        .map(|t| format!("⟨{}⟩", base.name(t[z])))
        .collect();
    let algebra = FiniteMvAlgebra::from_trusted(names, oplus, neg, zero);
    Ok(InverseLimit {
        system,
        algebra,
        tuples,
    })
}

/// Builds `Â` as an inverse limit. The report's witness is the canonical
/// map `A → Â`, `a ↦ ([a]_I)_I`.
pub fn inverse_limit_profinite(a: &FiniteMvAlgebra) -> Result<(FiniteMvAlgebra, CompletionReport)> {
    inverse_limit_profinite_with(a, &Limits::default())
}

pub fn inverse_limit_profinite_with(
    a: &FiniteMvAlgebra,
    limits: &Limits,
) -> Result<(FiniteMvAlgebra, CompletionReport)> {
    let limit = inverse_limit_with(a, limits)?;
    let report = limit_report(a, &limit)?;
    Ok((limit.algebra, report))
}

pub(crate) fn limit_report(a: &FiniteMvAlgebra, limit: &InverseLimit) -> Result<CompletionReport> {
    let position: HashMap<&[ElemId], usize> = limit
        .tuples
        .iter()
        .enumerate()
        .map(|(e, t)| (t.as_slice(), e))
        .collect();
    let map = a
        .elements()
        .map(|x| {
            let t: Vec<ElemId> = limit.system.nodes.iter().map(|q| q.class_of(x)).collect();
            position.get(t.as_slice()).copied().ok_or_else(|| {
                MvError::InternalInvariant(format!("image of {} is not a compatible tuple", a.name(x)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let canonical = Homomorphism::new(a.clone(), limit.algebra.clone(), map)?;
    let witness = IsoWitness::from_bijection(canonical).map_err(|e| {
        MvError::TheoremViolation(format!("A → Â is not bijective for finite A: {e}"))
    })?;
    let multiset = canonical_decomposition(&limit.algebra)?.multiset;
    Ok(CompletionReport {
        subject: a.clone(),
        method: Method::InverseLimit,
        multiset,
        witness: Some(witness),
        diagnostics: vec![
            format!("index ideals: {}", limit.system.index.len()),
            format!("transitions: {}", limit.system.transitions.len()),
            format!("compatible tuples: {}", limit.tuples.len()),
        ],
    })
}
