//! Profinite and MacNeille completions of finite MV-algebras, and the
//! characterisation checks built on them.
//!
//! The profinite completion is computed two ways: as the inverse limit of
//! all finite quotients ([`inverse_limit_profinite`]) and as the product of
//! the quotients by maximal ideals ([`profinite_product`]).
//! [`verify_main_theorem`] connects the two by an explicit isomorphism.

mod checks;
mod inverse_limit;
mod macneille;

use std::fmt;

use crate::algebra::{
    ElemId, FiniteMvAlgebra, Homomorphism, IsoWitness, Limits, MixedRadix,
};
use crate::algebra::ChainMultiset;
use crate::error::{MvError, Result};
use crate::ideals::{max_ideals_with, quotient, Ideal, Quotient};

pub use checks::{
    boolean_profinite_powerset, check_boolean_center_preservation, check_mac_criterion,
    check_product_preservation, check_self_iso, is_regular, powerset_algebra, regularity,
    CenterPreservation, MacCriterion, PowersetWitness, ProductPreservation, Regularity, SelfIso,
};
pub use inverse_limit::{
    inverse_limit, inverse_limit_profinite, inverse_limit_profinite_with, inverse_limit_with, InverseLimit, InverseSystem,
    Transition,
};
pub use macneille::{macneille_mv, MacNeilleMv};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    InverseLimit,
    MaxfProduct,
    MacNeille,
}

impl Method {
    pub fn id(self) -> &'static str {
        match self {
            Method::InverseLimit => "inverse-limit",
            Method::MaxfProduct => "maxf-product",
            Method::MacNeille => "macneille",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Outcome of one completion construction.
#[derive(Debug, Clone)]
pub struct CompletionReport {
    pub subject: FiniteMvAlgebra,
    pub method: Method,
    pub multiset: ChainMultiset,
    /// Subject → completion, when the two are isomorphic.
    pub witness: Option<IsoWitness>,
    pub diagnostics: Vec<String>,
}

/// `∏_{M ∈ Max_f(A)} A/M` with the quotients it is built from.
#[derive(Debug, Clone)]
pub struct MaxfProduct {
    pub maximal: Vec<Ideal>,
    pub factors: Vec<Quotient>,
    pub algebra: FiniteMvAlgebra,
}

impl MaxfProduct {
    pub fn build(a: &FiniteMvAlgebra) -> Result<Self> {
        Self::build_with(a, &Limits::default())
    }

    pub fn build_with(a: &FiniteMvAlgebra, limits: &Limits) -> Result<Self> {
        let maximal = max_ideals_with(a, limits)?;
        let factors = maximal
            .iter()
            .map(|m| quotient(a, m))
            .collect::<Result<Vec<_>>>()?;
        let algebra = FiniteMvAlgebra::direct_product(
            &factors.iter().map(|q| q.algebra.clone()).collect::<Vec<_>>(),
            &Limits {
                max_carrier: usize::MAX,
                ..*limits
            },
        )?;
        Ok(MaxfProduct {
            maximal,
            factors,
            algebra,
        })
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.factors.iter().map(|q| q.algebra.size()).collect()
    }

    fn radix(&self) -> MixedRadix {
        MixedRadix::new(self.ranks())
    }

    /// `a ↦ ([a]_M)_M`
    pub fn canonical_map(&self, a: &FiniteMvAlgebra) -> Result<Homomorphism> {
        let radix = self.radix();
        let map = a
            .elements()
            .map(|x| {
                let coords: Vec<ElemId> = self.factors.iter().map(|q| q.class_of(x)).collect();
                radix.encode(&coords)
            })
            .collect();
        Homomorphism::new(a.clone(), self.algebra.clone(), map)
    }
}

/// Builds `Â` as the product of `A/M` over `Max_f(A)`. The report's witness
/// is the canonical map `A → Â`.
pub fn profinite_product(a: &FiniteMvAlgebra) -> Result<(FiniteMvAlgebra, CompletionReport)> {
    profinite_product_with(a, &Limits::default())
}

pub fn profinite_product_with(
    a: &FiniteMvAlgebra,
    limits: &Limits,
) -> Result<(FiniteMvAlgebra, CompletionReport)> {
    let product = MaxfProduct::build_with(a, limits)?;
    let report = product_report(a, &product)?;
    Ok((product.algebra, report))
}

fn product_report(a: &FiniteMvAlgebra, product: &MaxfProduct) -> Result<CompletionReport> {
    let multiset = ChainMultiset::new(product.ranks())?;
    let witness = IsoWitness::from_bijection(product.canonical_map(a)?).map_err(|e| {
        MvError::TheoremViolation(format!("A → ∏ A/M is not bijective for finite A: {e}"))
    })?;
    Ok(CompletionReport {
        subject: a.clone(),
        method: Method::MaxfProduct,
        multiset,
        witness: Some(witness),
        diagnostics: vec![format!("maximal ideals: {}", product.maximal.len())],
    })
}

/// Isomorphism from the inverse-limit completion onto the `Max_f` product,
/// obtained by keeping only the coordinates at maximal ideals.
pub fn verify_main_theorem(a: &FiniteMvAlgebra) -> Result<IsoWitness> {
    verify_main_theorem_with(a, &Limits::default())
}

pub fn verify_main_theorem_with(a: &FiniteMvAlgebra, limits: &Limits) -> Result<IsoWitness> {
    let limit = inverse_limit_with(a, limits)?;
    let product = MaxfProduct::build_with(a, limits)?;
    main_theorem_witness(&limit, &product)
}

pub(crate) fn main_theorem_witness(limit: &InverseLimit, product: &MaxfProduct) -> Result<IsoWitness> {
    let violation = |msg: String| MvError::TheoremViolation(msg);
    let positions = product
        .maximal
        .iter()
        .map(|m| {
            limit
                .system
                .index
                .iter()
                .position(|i| i == m)
                .ok_or_else(|| violation("a maximal ideal is missing from id_f(A)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    // Coordinates of A/M in the system and in the product must agree.
    for (k, &p) in positions.iter().enumerate() {
        if limit.system.nodes[p].algebra != product.factors[k].algebra {
            return Err(violation("quotient presentations differ".into()));
        }
    }
    let radix = product.radix();
    let map = limit
        .tuples
        .iter()
        .map(|t| {
            let coords: Vec<ElemId> = positions.iter().map(|&p| t[p]).collect();
            radix.encode(&coords)
        })
        .collect();
    let forward = Homomorphism::new(limit.algebra.clone(), product.algebra.clone(), map)
        .map_err(|e| violation(format!("restriction to Max_f is not a homomorphism: {e}")))?;
    IsoWitness::from_bijection(forward)
        .map_err(|e| violation(format!("restriction to Max_f is not bijective: {e}")))
}
