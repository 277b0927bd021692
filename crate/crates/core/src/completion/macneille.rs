use super::{CompletionReport, Method};
use crate::algebra::{atoms, element_order, is_atomic, is_isomorphic, ChainMultiset, FiniteMvAlgebra};
use crate::error::{MvError, Result};
use crate::ideals::is_semisimple;
use crate::lattice::{dedekind_macneille, is_order_isomorphism, MacNeilleCompletion, Poset};

/// `Ā` together with the lattice-level completion it was checked against.
#[derive(Debug, Clone)]
pub struct MacNeilleMv {
    pub algebra: FiniteMvAlgebra,
    pub report: CompletionReport,
    /// Dedekind–MacNeille completion of the subject's lattice order.
    pub lattice: MacNeilleCompletion,
    /// Order isomorphism from the cut lattice onto `algebra`.
    pub order_iso: Vec<usize>,
}

/// `Ā ≅ ∏_{a ∈ atoms(A)} Ł_{|a|+1}` for atomic semisimple `A`.
///
/// The product is cross-checked against the Dedekind–MacNeille completion
/// of `A`'s underlying lattice: the cut lattice must be order-isomorphic to
/// the product's lattice.
pub fn macneille_mv(a: &FiniteMvAlgebra) -> Result<MacNeilleMv> {
    if !is_semisimple(a)? {
        return Err(MvError::Precondition(
            "the MacNeille completion is an MV-algebra only for semisimple algebras".into(),
        ));
    }
    if !is_atomic(a) {
        return Err(MvError::Precondition("algebra is not atomic".into()));
    }
    let sizes = atoms(a)
        .into_iter()
        .map(|t| {
            element_order(a, t)
                .finite()
                .map(|o| o as usize + 1)
                .ok_or_else(|| MvError::InternalInvariant("atom of infinite order".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let multiset = ChainMultiset::new(sizes)?;
    let algebra = multiset.algebra()?;

    let iso = is_isomorphic(a, &algebra)?.ok_or_else(|| {
        MvError::TheoremViolation(format!(
            "∏ Ł_(|a|+1) = {multiset} is not isomorphic to the finite algebra"
        ))
    })?;
    let poset = Poset::of_algebra(a);
    let lattice = dedekind_macneille(&poset)?;
    if !lattice.is_onto() {
        return Err(MvError::InternalInvariant(
            "the lattice of a finite MV-algebra is not complete".into(),
        ));
    }
    let mut order_iso = vec![0; lattice.cuts.len()];
    for x in a.elements() {
        order_iso[lattice.embedding[x]] = iso.forward().apply(x);
    }
    if !is_order_isomorphism(&lattice.lattice, &Poset::of_algebra(&algebra), &order_iso) {
        return Err(MvError::TheoremViolation(
            "cut lattice and ∏ Ł_(|a|+1) are not order-isomorphic".into(),
        ));
    }
    let report = CompletionReport {
        subject: a.clone(),
        method: Method::MacNeille,
        multiset,
        witness: Some(iso),
        diagnostics: vec![
            format!("atoms: {}", atoms(a).len()),
            format!("cuts: {}", lattice.cuts.len()),
        ],
    };
    Ok(MacNeilleMv {
        algebra,
        report,
        lattice,
        order_iso,
    })
}
