//! Exact computations with finite MV-algebras.
//!
//! The crate builds finite MV-algebras (Łukasiewicz chains, their products,
//! and arbitrary validated tables), enumerates their ideals and maximal
//! spectra, and constructs profinite and MacNeille completions by
//! independent routes. Every isomorphism it claims is returned as an
//! explicit, exhaustively verified [`IsoWitness`].
//!
//! The [`signatures`] module carries the same reasoning over to infinite
//! semisimple algebras described only by the ranks of their maximal ideals.

pub mod algebra;
pub mod completion;
pub mod error;
pub mod ideals;
pub mod lattice;
pub mod signatures;

pub use algebra::{
    ChainMultiset, ElemId, Element, ElementOrder, FiniteMvAlgebra, Homomorphism, IsoWitness,
    Limits, Provenance, Rational,
};
pub use error::{MvError, Result};
pub use ideals::Ideal;
