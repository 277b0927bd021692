//! Finite MV-algebras given by explicit ⊕ and ¬ tables.
//!
//! Every algebra is immutable once built. Cloning is cheap: the tables live
//! behind an `Arc`, so homomorphisms and reports can hold their source and
//! target algebras by value.

mod axioms;
mod decompose;
mod element;
mod hom;
mod structure;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{MvError, Result};

pub use axioms::{Axiom, AxiomCheck, AxiomReport, RawTables};
pub use decompose::{canonical_decomposition, is_isomorphic, ChainMultiset, Decomposition};
pub use element::{Element, ElementOrder, Rational};
pub use hom::{Homomorphism, IsoWitness};
pub use structure::{atoms, boolean_center, element_order, is_atomic, subalgebra, BooleanCenter};

/// Index into an algebra's carrier.
pub type ElemId = usize;

/// How an algebra was presented.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// The Łukasiewicz chain Ł_n.
    Chain(usize),
    /// Ł_{n_1} × … × Ł_{n_k}, first coordinate most significant.
    Product(Vec<usize>),
    Table,
}

/// Soft size guards for the exhaustive algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_carrier: usize,
    pub max_ideals: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_carrier: 5000,
            max_ideals: 100_000,
        }
    }
}

impl Limits {
    pub fn check_carrier(&self, size: usize) -> Result<()> {
        if size > self.max_carrier {
            return Err(MvError::ResourceLimit {
                what: "carrier",
                size,
                limit: self.max_carrier,
            });
        }
        Ok(())
    }
}

/// Operations accepted by [`FiniteMvAlgebra::evaluate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Oplus,
    Neg,
    Leq,
    Join,
    Meet,
    Otimes,
    PartialAdd,
    /// `nfold(a, n)`; the count is passed as the second argument.
    NFold,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Value {
    Elem(ElemId),
    Bool(bool),
}

struct Inner {
    names: Vec<String>,
    index: HashMap<String, ElemId>,
    oplus: Vec<ElemId>,
    neg: Vec<ElemId>,
    zero: ElemId,
    one: ElemId,
    leq: Vec<bool>,
    provenance: Provenance,
}

/// A finite MV-algebra `(A, ⊕, ¬, 0)`.
#[derive(Clone)]
pub struct FiniteMvAlgebra {
    inner: Arc<Inner>,
}

impl FiniteMvAlgebra {
    /// The Łukasiewicz chain Ł_n on `{0, 1/(n-1), …, 1}` with
    /// `x ⊕ y = min(1, x + y)` and `¬x = 1 - x`.
    pub fn chain(n: usize) -> Result<Self> {
        Self::chain_with_limits(n, &Limits::default())
    }

    pub fn chain_with_limits(n: usize, limits: &Limits) -> Result<Self> {
        if n < 2 {
            return Err(MvError::InvalidParameter(format!(
                "chain size must be at least 2, got {n}"
            )));
        }
        limits.check_carrier(n)?;
        let tables = chain_tables(n);
        if let Some(fail) = tables.validate().first_failure() {
            return Err(MvError::InternalInvariant(format!(
                "Ł_{n} tables violate {}",
                fail.axiom
            )));
        }
        let top = u32::try_from(n - 1)
            .map_err(|_| MvError::InvalidParameter(format!("chain size {n} too large")))?;
        let names = (0..top + 1).map(|k| Rational::new(k, top).to_string()).collect();
        let (size, oplus, neg, zero) = tables.into_parts();
        debug_assert_eq!(size, n);
        Ok(Self::assemble(names, oplus, neg, zero, Provenance::Chain(n)))
    }

    /// The product Ł_{n_1} × … × Ł_{n_k} with componentwise operations.
    pub fn product(sizes: &[usize]) -> Result<Self> {
        Self::product_with_limits(sizes, &Limits::default())
    }

    pub fn product_with_limits(sizes: &[usize], limits: &Limits) -> Result<Self> {
        if sizes.is_empty() {
            return Err(MvError::InvalidParameter(
                "product needs at least one factor; use `trivial()` for the one-element algebra"
                    .into(),
            ));
        }
        if let Some(&bad) = sizes.iter().find(|&&n| n < 2) {
            return Err(MvError::InvalidParameter(format!(
                "chain size must be at least 2, got {bad}"
            )));
        }
        let carrier = checked_product(sizes).ok_or(MvError::ResourceLimit {
            what: "carrier",
            size: usize::MAX,
            limit: limits.max_carrier,
        })?;
        limits.check_carrier(carrier)?;
        if sizes.len() == 1 {
            return Self::chain_with_limits(sizes[0], limits);
        }
        // The axioms are equations, so they hold in the product exactly when
        // they hold in every factor.
        let mut factors: Vec<FiniteMvAlgebra> = Vec::with_capacity(sizes.len());
        for &n in sizes {
            match factors.iter().find(|f| f.size() == n) {
                Some(f) => factors.push(f.clone()),
                None => factors.push(Self::chain_with_limits(n, limits)?),
            }
        }
        let mut algebra = Self::direct_product(&factors, limits)?;
        Arc::get_mut(&mut algebra.inner)
            .expect("freshly built algebra is uniquely owned")
            .provenance = Provenance::Product(sizes.to_vec());
        Ok(algebra)
    }

    /// The one-element algebra, where `0 = 1`.
    pub fn trivial() -> Self {
        Self::assemble(vec!["0".into()], vec![0], vec![0], 0, Provenance::Table)
    }

    /// Builds an algebra from tables over `names`, rejecting it unless every
    /// axiom holds.
    pub fn from_tables(names: Vec<String>, tables: RawTables) -> Result<Self> {
        if names.len() != tables.size() {
            return Err(MvError::Format(format!(
                "{} names for a carrier of size {}",
                names.len(),
                tables.size()
            )));
        }
        check_unique(&names)?;
        if let Some(fail) = tables.validate().first_failure() {
            let witness = fail
                .witness
                .as_ref()
                .map(|w| w.iter().map(|&id| names[id].clone()).collect())
                .unwrap_or_default();
            return Err(MvError::AxiomViolation {
                axiom: fail.axiom,
                witness,
            });
        }
        let (size, oplus, neg, zero) = tables.into_parts();
        if size > 1 && neg[zero] == zero {
            return Err(MvError::InternalInvariant(
                "¬0 = 0 in a nontrivial algebra".into(),
            ));
        }
        Ok(Self::assemble(names, oplus, neg, zero, Provenance::Table))
    }

    /// Builds an algebra from tables written in terms of element names.
    /// `oplus[i][j]` is the name of `names[i] ⊕ names[j]`.
    pub fn from_named_tables<S: AsRef<str>>(
        names: &[S],
        oplus: &[Vec<S>],
        neg: &[S],
        zero: &str,
    ) -> Result<Self> {
        let (names, tables) = RawTables::from_names(names, oplus, neg, zero)?;
        Self::from_tables(names, tables)
    }

    /// Product of arbitrary algebras, first factor most significant. The
    /// empty product is the trivial algebra.
    pub fn direct_product(factors: &[FiniteMvAlgebra], limits: &Limits) -> Result<Self> {
        if factors.is_empty() {
            return Ok(Self::trivial());
        }
        let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
        let carrier = checked_product(&sizes).ok_or(MvError::ResourceLimit {
            what: "carrier",
            size: usize::MAX,
            limit: limits.max_carrier,
        })?;
        limits.check_carrier(carrier)?;
        // Fold the factors in pairwise; the id of (x, y) in X × Y is x·|Y| + y,
        // which agrees with the mixed-radix coding.
        let first = &factors[0].inner;
        let mut oplus = first.oplus.clone();
        let mut neg = first.neg.clone();
        let mut zero = first.zero;
        let mut n = first.names.len();
        for f in &factors[1..] {
            let g = &f.inner;
            let m = g.names.len();
            let nm = n * m;
            let mut next = vec![0; nm * nm];
            for x1 in 0..n {
                for y1 in 0..m {
                    let row = &mut next[(x1 * m + y1) * nm..][..nm];
                    let g_row = &g.oplus[y1 * m..][..m];
                    for x2 in 0..n {
                        let base = oplus[x1 * n + x2] * m;
                        for (slot, &v) in row[x2 * m..][..m].iter_mut().zip(g_row) {
                            *slot = base + v;
                        }
                    }
                }
            }
            neg = (0..nm).map(|id| neg[id / m] * m + g.neg[id % m]).collect();
            zero = zero * m + g.zero;
            oplus = next;
            n = nm;
        }
        debug_assert_eq!(n, carrier);
        let radix = MixedRadix::new(sizes);
        let coords: Vec<Vec<ElemId>> = (0..carrier).map(|id| radix.decode(id)).collect();
        let names = coords
            .iter()
            .map(|x| {
                let parts: Vec<&str> = factors.iter().zip(x).map(|(f, &v)| f.name(v)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let provenance = if factors.iter().all(|f| matches!(f.provenance(), Provenance::Chain(_))) {
            Provenance::Product(factors.iter().map(|f| f.size()).collect())
        } else {
            Provenance::Table
        };
        Ok(Self::assemble(names, oplus, neg, zero, provenance))
    }

    /// Tables already known to describe an MV-algebra (homomorphic images,
    /// subalgebras and products of validated algebras).
    pub(crate) fn from_trusted(
        names: Vec<String>,
        oplus: Vec<ElemId>,
        neg: Vec<ElemId>,
        zero: ElemId,
    ) -> Self {
        debug_assert!(
            names.len() > 24
                || RawTables::new(names.len(), oplus.clone(), neg.clone(), zero)
                    .map(|t| t.validate().is_valid())
                    .unwrap_or(false),
            "trusted tables fail the axioms"
        );
        Self::assemble(names, oplus, neg, zero, Provenance::Table)
    }

    fn assemble(
        names: Vec<String>,
        oplus: Vec<ElemId>,
        neg: Vec<ElemId>,
        zero: ElemId,
        provenance: Provenance,
    ) -> Self {
        let n = names.len();
        let one = neg[zero];
        let mut leq = vec![false; n * n];
        for x in 0..n {
            let nx = neg[x];
            for y in 0..n {
                leq[x * n + y] = oplus[nx * n + y] == one;
            }
        }
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        FiniteMvAlgebra {
            inner: Arc::new(Inner {
                names,
                index,
                oplus,
                neg,
                zero,
                one,
                leq,
                provenance,
            }),
        }
    }

    pub fn size(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    pub fn elements(&self) -> std::ops::Range<ElemId> {
        0..self.size()
    }

    pub fn zero(&self) -> ElemId {
        self.inner.zero
    }

    pub fn one(&self) -> ElemId {
        self.inner.one
    }

    pub fn provenance(&self) -> &Provenance {
        &self.inner.provenance
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, x: ElemId) -> &str {
        &self.inner.names[x]
    }

    pub fn find(&self, name: &str) -> Option<ElemId> {
        self.inner.index.get(name).copied()
    }

    /// Returns the element with its exact chain coordinates when the algebra
    /// is a chain or a product of chains.
    pub fn element(&self, x: ElemId) -> Element {
        let value = match &self.inner.provenance {
            Provenance::Chain(n) => Some(vec![Rational::new(x as u32, (*n - 1) as u32)]),
            Provenance::Product(sizes) => {
                let coords = MixedRadix::new(sizes.clone()).decode(x);
                Some(
                    coords
                        .iter()
                        .zip(sizes)
                        .map(|(&k, &n)| Rational::new(k as u32, (n - 1) as u32))
                        .collect(),
                )
            }
            Provenance::Table => None,
        };
        Element {
            id: x,
            name: self.name(x).to_string(),
            value,
        }
    }

    #[inline]
    pub fn oplus(&self, x: ElemId, y: ElemId) -> ElemId {
        self.inner.oplus[x * self.size() + y]
    }

    #[inline]
    pub fn neg(&self, x: ElemId) -> ElemId {
        self.inner.neg[x]
    }

    /// `x ⊙ y = ¬(¬x ⊕ ¬y)`
    pub fn otimes(&self, x: ElemId, y: ElemId) -> ElemId {
        self.neg(self.oplus(self.neg(x), self.neg(y)))
    }

    /// `x ≤ y` iff `¬x ⊕ y = 1`.
    #[inline]
    pub fn leq(&self, x: ElemId, y: ElemId) -> bool {
        self.inner.leq[x * self.size() + y]
    }

    /// `x ∨ y = ¬(¬x ⊕ y) ⊕ y`
    pub fn join(&self, x: ElemId, y: ElemId) -> ElemId {
        self.oplus(self.neg(self.oplus(self.neg(x), y)), y)
    }

    /// `x ∧ y = ¬(¬x ∨ ¬y)`
    pub fn meet(&self, x: ElemId, y: ElemId) -> ElemId {
        self.neg(self.join(self.neg(x), self.neg(y)))
    }

    /// The partial sum `x + y`, defined only when `x ≤ ¬y`.
    pub fn partial_add(&self, x: ElemId, y: ElemId) -> Result<ElemId> {
        if !self.leq(x, self.neg(y)) {
            return Err(MvError::UndefinedPartialSum(format!(
                "{} + {} needs {} ≤ ¬{}",
                self.name(x),
                self.name(y),
                self.name(x),
                self.name(y)
            )));
        }
        Ok(self.oplus(x, y))
    }

    /// `na = a + … + a` with partial addition, failing at the first
    /// undefined step.
    pub fn nfold(&self, a: ElemId, n: u64) -> Result<ElemId> {
        if n == 0 {
            return Err(MvError::InvalidArgument("nfold needs n ≥ 1".into()));
        }
        let mut sum = a;
        for step in 2..=n {
            sum = self.partial_add(sum, a).map_err(|_| {
                MvError::UndefinedPartialSum(format!(
                    "{step}·{} is undefined ({}·{} = {} exceeds ¬{})",
                    self.name(a),
                    step - 1,
                    self.name(a),
                    self.name(sum),
                    self.name(a)
                ))
            })?;
        }
        Ok(sum)
    }

    /// The plain iterated sum `a ⊕ … ⊕ a` (n times), always defined.
    pub fn oplus_power(&self, a: ElemId, n: u64) -> ElemId {
        let mut sum = self.zero();
        for _ in 0..n {
            let next = self.oplus(sum, a);
            if next == sum {
                break;
            }
            sum = next;
        }
        sum
    }

    pub fn evaluate(&self, op: Op, args: &[ElemId]) -> Result<Value> {
        let arity = match op {
            Op::Neg => 1,
            _ => 2,
        };
        if args.len() != arity {
            return Err(MvError::InvalidArgument(format!(
                "{op:?} takes {arity} arguments, got {}",
                args.len()
            )));
        }
        let check = |x: ElemId| {
            if x < self.size() {
                Ok(x)
            } else {
                Err(MvError::InvalidArgument(format!("no element with id {x}")))
            }
        };
        let x = check(args[0])?;
        let y = || check(args[1]);
        Ok(match op {
            Op::Oplus => Value::Elem(self.oplus(x, y()?)),
            Op::Neg => Value::Elem(self.neg(x)),
            Op::Leq => Value::Bool(self.leq(x, y()?)),
            Op::Join => Value::Elem(self.join(x, y()?)),
            Op::Meet => Value::Elem(self.meet(x, y()?)),
            Op::Otimes => Value::Elem(self.otimes(x, y()?)),
            Op::PartialAdd => Value::Elem(self.partial_add(x, y()?)?),
            Op::NFold => Value::Elem(self.nfold(x, args[1] as u64)?),
        })
    }

    pub fn is_idempotent(&self, x: ElemId) -> bool {
        self.oplus(x, x) == x
    }

    pub fn is_boolean(&self) -> bool {
        self.elements().all(|x| self.is_idempotent(x))
    }

    /// Whether `≤` is a total order.
    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|x| (x..self.size()).all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    pub fn raw_tables(&self) -> RawTables {
        RawTables::new(
            self.size(),
            self.inner.oplus.clone(),
            self.inner.neg.clone(),
            self.zero(),
        )
        .expect("stored tables are total")
    }

    pub fn validate_axioms(&self) -> AxiomReport {
        self.raw_tables().validate()
    }

    /// Same tables, element names replaced (e.g. to relabel a copy).
    pub fn renamed(&self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.size() {
            return Err(MvError::InvalidArgument("wrong number of names".into()));
        }
        check_unique(&names)?;
        Ok(Self::assemble(
            names,
            self.inner.oplus.clone(),
            self.inner.neg.clone(),
            self.zero(),
            self.inner.provenance.clone(),
        ))
    }

    pub(crate) fn ptr_eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}

impl PartialEq for FiniteMvAlgebra {
    /// Equal presentations: same names and tables in the same order.
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other)
            || (self.inner.zero == other.inner.zero
                && self.inner.neg == other.inner.neg
                && self.inner.oplus == other.inner.oplus
                && self.inner.names == other.inner.names)
    }
}

impl Eq for FiniteMvAlgebra {}

impl fmt::Debug for FiniteMvAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMvAlgebra")
            .field("size", &self.size())
            .field("provenance", &self.inner.provenance)
            .finish()
    }
}

fn chain_tables(n: usize) -> RawTables {
    let top = n - 1;
    let oplus = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x + y).min(top)))
        .collect();
    let neg = (0..n).map(|x| top - x).collect();
    RawTables::new(n, oplus, neg, 0).expect("chain tables are total")
}

fn checked_product(sizes: &[usize]) -> Option<usize> {
    sizes.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n))
}

fn check_unique(names: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(MvError::Format(format!("duplicate element name `{name}`")));
        }
    }
    Ok(())
}

/// Mixed-radix coding of coordinate tuples, first coordinate most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedRadix {
    sizes: Vec<usize>,
    strides: Vec<usize>,
}

impl MixedRadix {
    pub fn new(sizes: Vec<usize>) -> Self {
        let mut strides = vec![1; sizes.len()];
        for i in (0..sizes.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * sizes[i + 1];
        }
        MixedRadix { sizes, strides }
    }

    pub fn len(&self) -> usize {
        self.sizes.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encode(&self, coords: &[ElemId]) -> ElemId {
        debug_assert_eq!(coords.len(), self.sizes.len());
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub fn decode(&self, mut id: ElemId) -> Vec<ElemId> {
        self.strides
            .iter()
            .map(|&s| {
                let c = id / s;
                id %= s;
                c
            })
            .collect()
    }
}
