//! Exhaustive checking of the MV-algebra axioms on raw operation tables.

use std::collections::HashMap;
use std::fmt;

use super::ElemId;
use crate::error::{MvError, Result};

/// The defining identities of an MV-algebra, in the order they are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// x ⊕ y = y ⊕ x
    Commutativity,
    /// x ⊕ (y ⊕ z) = (x ⊕ y) ⊕ z
    Associativity,
    /// x ⊕ 0 = x
    ZeroUnit,
    /// ¬¬x = x
    Involution,
    /// ¬0 ⊕ x = ¬0
    AbsorbingOne,
    /// ¬(¬x ⊕ y) ⊕ y = ¬(¬y ⊕ x) ⊕ x
    Lukasiewicz,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::Commutativity,
        Axiom::Associativity,
        Axiom::ZeroUnit,
        Axiom::Involution,
        Axiom::AbsorbingOne,
        Axiom::Lukasiewicz,
    ];

    /// Stable identifier used in machine-readable reports.
    pub fn id(self) -> &'static str {
        match self {
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::ZeroUnit => "zero-unit",
            Axiom::Involution => "involution",
            Axiom::AbsorbingOne => "absorbing-one",
            Axiom::Lukasiewicz => "lukasiewicz",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            Axiom::Commutativity => "x⊕y = y⊕x",
            Axiom::Associativity => "x⊕(y⊕z) = (x⊕y)⊕z",
            Axiom::ZeroUnit => "x⊕0 = x",
            Axiom::Involution => "¬¬x = x",
            Axiom::AbsorbingOne => "¬0⊕x = ¬0",
            Axiom::Lukasiewicz => "¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.id(), self.formula())
    }
}

/// Operation tables over the carrier `0..size`, not yet known to satisfy the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTables {
    size: usize,
    oplus: Vec<ElemId>,
    neg: Vec<ElemId>,
    zero: ElemId,
}

impl RawTables {
    /// `oplus` is row-major: entry `x * size + y` holds `x ⊕ y`.
    pub fn new(size: usize, oplus: Vec<ElemId>, neg: Vec<ElemId>, zero: ElemId) -> Result<Self> {
        if size == 0 {
            return Err(MvError::Format("carrier must be nonempty".into()));
        }
        if oplus.len() != size * size {
            return Err(MvError::Format(format!(
                "⊕ table has {} entries, expected {}",
                oplus.len(),
                size * size
            )));
        }
        if neg.len() != size {
            return Err(MvError::Format(format!(
                "¬ table has {} entries, expected {}",
                neg.len(),
                size
            )));
        }
        if let Some(pos) = oplus.iter().position(|&v| v >= size) {
            return Err(MvError::Format(format!(
                "⊕ entry ({}, {}) lies outside the carrier",
                pos / size,
                pos % size
            )));
        }
        if let Some(pos) = neg.iter().position(|&v| v >= size) {
            return Err(MvError::Format(format!("¬ entry {pos} lies outside the carrier")));
        }
        if zero >= size {
            return Err(MvError::Format("zero lies outside the carrier".into()));
        }
        Ok(RawTables {
            size,
            oplus,
            neg,
            zero,
        })
    }

    /// Tables written in terms of element names; `oplus[i][j]` names
    /// `names[i] ⊕ names[j]`. Returns the owned names alongside.
    pub fn from_names<S: AsRef<str>>(
        names: &[S],
        oplus: &[Vec<S>],
        neg: &[S],
        zero: &str,
    ) -> Result<(Vec<String>, Self)> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        super::check_unique(&names)?;
        let index: HashMap<&str, ElemId> =
            names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let lookup = |s: &str, what: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| MvError::Format(format!("{what} refers to unknown element `{s}`")))
        };
        let n = names.len();
        if oplus.len() != n {
            return Err(MvError::Format(format!(
                "⊕ table has {} rows, expected {n}",
                oplus.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in oplus.iter().enumerate() {
            if row.len() != n {
                return Err(MvError::Format(format!(
                    "⊕ row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, entry) in row.iter().enumerate() {
                flat.push(lookup(entry.as_ref(), &format!("⊕ entry ({i}, {j})"))?);
            }
        }
        if neg.len() != n {
            return Err(MvError::Format(format!(
                "¬ table has {} entries, expected {n}",
                neg.len()
            )));
        }
        let neg = neg
            .iter()
            .enumerate()
            .map(|(i, s)| lookup(s.as_ref(), &format!("¬ entry {i}")))
            .collect::<Result<Vec<_>>>()?;
        let zero = lookup(zero, "zero")?;
        let tables = RawTables::new(n, flat, neg, zero)?;
        Ok((names, tables))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> ElemId {
        self.zero
    }

    #[inline]
    pub fn oplus(&self, x: ElemId, y: ElemId) -> ElemId {
        self.oplus[x * self.size + y]
    }

    #[inline]
    pub fn neg(&self, x: ElemId) -> ElemId {
        self.neg[x]
    }

    /// Overwrites a single ⊕ entry; used to build corrupted presentations.
    pub fn set_oplus(&mut self, x: ElemId, y: ElemId, value: ElemId) {
        assert!(x < self.size && y < self.size && value < self.size);
        self.oplus[x * self.size + y] = value;
    }

    pub fn set_neg(&mut self, x: ElemId, value: ElemId) {
        assert!(x < self.size && value < self.size);
        self.neg[x] = value;
    }

    pub(crate) fn into_parts(self) -> (usize, Vec<ElemId>, Vec<ElemId>, ElemId) {
        (self.size, self.oplus, self.neg, self.zero)
    }

    /// Checks every axiom exhaustively. Witnesses are the first failing
    /// instance in lexicographic order of element ids.
    pub fn validate(&self) -> AxiomReport {
        let checks = Axiom::ALL
            .iter()
            .map(|&axiom| AxiomCheck {
                axiom,
                witness: self.first_violation(axiom),
            })
            .collect();
        AxiomReport { checks }
    }

    fn first_violation(&self, axiom: Axiom) -> Option<Vec<ElemId>> {
        let n = self.size;
        let one = self.neg(self.zero);
        match axiom {
            Axiom::Commutativity => pairs(n)
                .find(|&(x, y)| self.oplus(x, y) != self.oplus(y, x))
                .map(|(x, y)| vec![x, y]),
            Axiom::Associativity => {
                for x in 0..n {
                    for y in 0..n {
                        let xy = self.oplus(x, y);
                        for z in 0..n {
                            if self.oplus(x, self.oplus(y, z)) != self.oplus(xy, z) {
                                return Some(vec![x, y, z]);
                            }
                        }
                    }
                }
                None
            }
            Axiom::ZeroUnit => (0..n).find(|&x| self.oplus(x, self.zero) != x).map(|x| vec![x]),
            Axiom::Involution => (0..n).find(|&x| self.neg(self.neg(x)) != x).map(|x| vec![x]),
            Axiom::AbsorbingOne => (0..n).find(|&x| self.oplus(one, x) != one).map(|x| vec![x]),
            Axiom::Lukasiewicz => pairs(n)
                .find(|&(x, y)| {
                    let lhs = self.oplus(self.neg(self.oplus(self.neg(x), y)), y);
                    let rhs = self.oplus(self.neg(self.oplus(self.neg(y), x)), x);
                    lhs != rhs
                })
                .map(|(x, y)| vec![x, y]),
        }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (ElemId, ElemId)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// `None` when the axiom holds; otherwise the violating (x[, y[, z]]).
    pub witness: Option<Vec<ElemId>>,
}

/// Pass/fail status of each axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.witness.is_some())
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| c.witness.is_some())
    }
}
