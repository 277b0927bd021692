use super::{ElemId, FiniteMvAlgebra};
use crate::error::{MvError, Result};

/// A map between finite MV-algebras that preserves `0`, `¬` and `⊕`.
///
/// The preservation laws are checked exhaustively on construction, so a
/// value of this type is always a genuine homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    source: FiniteMvAlgebra,
    target: FiniteMvAlgebra,
    map: Vec<ElemId>,
}

impl Homomorphism {
    pub fn new(source: FiniteMvAlgebra, target: FiniteMvAlgebra, map: Vec<ElemId>) -> Result<Self> {
        let hom = Homomorphism {
            source,
            target,
            map,
        };
        hom.verify()?;
        Ok(hom)
    }

    pub fn identity(algebra: &FiniteMvAlgebra) -> Self {
        Homomorphism {
            source: algebra.clone(),
            target: algebra.clone(),
            map: algebra.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteMvAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FiniteMvAlgebra {
        &self.target
    }

    pub fn map(&self) -> &[ElemId] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: ElemId) -> ElemId {
        self.map[x]
    }

    /// Re-runs the exhaustive preservation check.
    pub fn verify(&self) -> Result<()> {
        let (src, tgt) = (&self.source, &self.target);
        if self.map.len() != src.size() {
            return Err(MvError::InvalidArgument(format!(
                "map has {} entries for a source of size {}",
                self.map.len(),
                src.size()
            )));
        }
        if let Some(x) = self.map.iter().position(|&v| v >= tgt.size()) {
            return Err(MvError::InvalidArgument(format!(
                "image of {} lies outside the target",
                src.name(x)
            )));
        }
        if self.apply(src.zero()) != tgt.zero() {
            return Err(MvError::InvalidArgument("map does not send 0 to 0".into()));
        }
        for x in src.elements() {
            if self.apply(src.neg(x)) != tgt.neg(self.apply(x)) {
                return Err(MvError::InvalidArgument(format!(
                    "map does not preserve ¬ at {}",
                    src.name(x)
                )));
            }
        }
        for x in src.elements() {
            let fx = self.apply(x);
            for y in src.elements() {
                if self.apply(src.oplus(x, y)) != tgt.oplus(fx, self.apply(y)) {
                    return Err(MvError::InvalidArgument(format!(
                        "map does not preserve ⊕ at ({}, {})",
                        src.name(x),
                        src.name(y)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Homomorphism) -> Result<Homomorphism> {
        if self.target != next.source {
            return Err(MvError::InvalidArgument(
                "composition of maps between different algebras".into(),
            ));
        }
        Ok(Homomorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&y| next.apply(y)).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// `{x : f(x) = 0}`, in increasing id order.
    pub fn kernel(&self) -> Vec<ElemId> {
        let zero = self.target.zero();
        self.source
            .elements()
            .filter(|&x| self.apply(x) == zero)
            .collect()
    }

    /// The element map as `(source name, target name)` pairs.
    pub fn named_pairs(&self) -> Vec<(String, String)> {
        self.source
            .elements()
            .map(|x| {
                (
                    self.source.name(x).to_string(),
                    self.target.name(self.apply(x)).to_string(),
                )
            })
            .collect()
    }

    /// Rebuilds a homomorphism from name pairs, as printed by [`named_pairs`].
    ///
    /// [`named_pairs`]: Homomorphism::named_pairs
    pub fn from_named_pairs(
        source: FiniteMvAlgebra,
        target: FiniteMvAlgebra,
        pairs: &[(String, String)],
    ) -> Result<Self> {
        let mut map = vec![usize::MAX; source.size()];
        for (from, to) in pairs {
            let x = source
                .find(from)
                .ok_or_else(|| MvError::Format(format!("unknown source element `{from}`")))?;
            let y = target
                .find(to)
                .ok_or_else(|| MvError::Format(format!("unknown target element `{to}`")))?;
            if map[x] != usize::MAX && map[x] != y {
                return Err(MvError::Format(format!("`{from}` mapped twice")));
            }
            map[x] = y;
        }
        if let Some(x) = map.iter().position(|&y| y == usize::MAX) {
            return Err(MvError::Format(format!(
                "no image given for `{}`",
                source.name(x)
            )));
        }
        Homomorphism::new(source, target, map)
    }
}

/// An isomorphism together with its inverse; both compositions are checked
/// to be identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    forward: Homomorphism,
    backward: Homomorphism,
}

impl IsoWitness {
    pub fn new(forward: Homomorphism, backward: Homomorphism) -> Result<Self> {
        let iso = IsoWitness { forward, backward };
        iso.verify_inverse()?;
        Ok(iso)
    }

    /// Inverts a bijective homomorphism.
    pub fn from_bijection(forward: Homomorphism) -> Result<Self> {
        if forward.source.size() != forward.target.size() || !forward.is_injective() {
            return Err(MvError::InvalidArgument("map is not a bijection".into()));
        }
        let mut inverse = vec![0; forward.target.size()];
        for (x, &y) in forward.map.iter().enumerate() {
            inverse[y] = x;
        }
        let backward = Homomorphism::new(forward.target.clone(), forward.source.clone(), inverse)?;
        IsoWitness::new(forward, backward)
    }

    pub fn identity(algebra: &FiniteMvAlgebra) -> Self {
        IsoWitness {
            forward: Homomorphism::identity(algebra),
            backward: Homomorphism::identity(algebra),
        }
    }

    pub fn forward(&self) -> &Homomorphism {
        &self.forward
    }

    pub fn backward(&self) -> &Homomorphism {
        &self.backward
    }

    pub fn source(&self) -> &FiniteMvAlgebra {
        &self.forward.source
    }

    pub fn target(&self) -> &FiniteMvAlgebra {
        &self.forward.target
    }

    pub fn inverse(&self) -> IsoWitness {
        IsoWitness {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &IsoWitness) -> Result<IsoWitness> {
        Ok(IsoWitness {
            forward: self.forward.then(&next.forward)?,
            backward: next.backward.then(&self.backward)?,
        })
    }

    /// Full re-verification: both maps are homomorphisms and mutually inverse.
    pub fn verify(&self) -> Result<()> {
        self.forward.verify()?;
        self.backward.verify()?;
        self.verify_inverse()
    }

    fn verify_inverse(&self) -> Result<()> {
        if self.forward.source != self.backward.target || self.forward.target != self.backward.source
        {
            return Err(MvError::InvalidArgument(
                "forward and backward maps do not connect the same algebras".into(),
            ));
        }
        let src = &self.forward.source;
        if let Some(x) = src
            .elements()
            .find(|&x| self.backward.apply(self.forward.apply(x)) != x)
        {
            return Err(MvError::InvalidArgument(format!(
                "backward ∘ forward moves {}",
                src.name(x)
            )));
        }
        let tgt = &self.forward.target;
        if let Some(y) = tgt
            .elements()
            .find(|&y| self.forward.apply(self.backward.apply(y)) != y)
        {
            return Err(MvError::InvalidArgument(format!(
                "forward ∘ backward moves {}",
                tgt.name(y)
            )));
        }
        Ok(())
    }
}
