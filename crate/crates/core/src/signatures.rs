//! Symbolic descriptions of semisimple MV-algebras by the ranks of their
//! maximal ideals.
//!
//! A [`SpectralSignature`] records, for each finite rank `n ≥ 2`, how many
//! maximal ideals have rank `n` (a finite count or countably many), how many
//! have infinite rank, and optionally the orders of the atoms. Infinite rank
//! sets are written with a [`Family`] such as "every `n ≥ 3`". This is
//! enough to evaluate the completion results on algebras that cannot be
//! enumerated element by element.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use crate::algebra::{atoms, element_order, is_atomic, FiniteMvAlgebra};
use crate::error::{MvError, Result};
use crate::ideals::{max_f, rank};

/// A finite count or the countably infinite cardinal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinality {
    Finite(u64),
    Countable,
}

impl Cardinality {
    pub const ZERO: Cardinality = Cardinality::Finite(0);

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

impl Add for Cardinality {
    type Output = Cardinality;

    fn add(self, rhs: Cardinality) -> Cardinality {
        match (self, rhs) {
            (Cardinality::Finite(a), Cardinality::Finite(b)) => Cardinality::Finite(a + b),
            _ => Cardinality::Countable,
        }
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::Countable => f.write_str("countable"),
        }
    }
}

/// An infinite arithmetic progression of integers, each counted once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `k, k+1, k+2, …`
    AllFrom(u64),
    /// `first, first+step, first+2·step, …`
    Arithmetic { first: u64, step: u64 },
}

impl Family {
    pub fn first(self) -> u64 {
        match self {
            Family::AllFrom(k) => k,
            Family::Arithmetic { first, .. } => first,
        }
    }

    pub fn step(self) -> u64 {
        match self {
            Family::AllFrom(_) => 1,
            Family::Arithmetic { step, .. } => step,
        }
    }

    pub fn contains(self, n: u64) -> bool {
        n >= self.first() && (n - self.first()).is_multiple_of(self.step())
    }

    fn validate(self, min_first: u64) -> Result<()> {
        if self.first() < min_first {
            return Err(MvError::InvalidParameter(format!(
                "family must start at {min_first} or above, got {}",
                self.first()
            )));
        }
        if self.step() == 0 {
            return Err(MvError::InvalidParameter("family step must be at least 1".into()));
        }
        Ok(())
    }

    fn shifted(self, delta: i64) -> Family {
        let move_by = |x: u64| x.checked_add_signed(delta).expect("shift stays nonnegative");
        match self {
            Family::AllFrom(k) => Family::AllFrom(move_by(k)),
            Family::Arithmetic { first, step } => Family::Arithmetic {
                first: move_by(first),
                step,
            },
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::AllFrom(k) => write!(f, "every n ≥ {k}"),
            Family::Arithmetic { first, step } => write!(f, "{first} + {step}j for j ≥ 0"),
        }
    }
}

/// A multiset of positive integers: explicit counts plus an optional family.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Spectrum {
    pub explicit: BTreeMap<u64, Cardinality>,
    pub family: Option<Family>,
}

impl Spectrum {
    pub fn new(explicit: BTreeMap<u64, Cardinality>, family: Option<Family>) -> Self {
        let explicit = explicit.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Spectrum { explicit, family }
    }

    pub fn count(&self, n: u64) -> Cardinality {
        let explicit = self.explicit.get(&n).copied().unwrap_or(Cardinality::ZERO);
        let from_family = match self.family {
            Some(f) if f.contains(n) => Cardinality::Finite(1),
            _ => Cardinality::ZERO,
        };
        explicit + from_family
    }

    pub fn is_empty(&self) -> bool {
        self.explicit.is_empty() && self.family.is_none()
    }

    /// Whether finitely many distinct values occur.
    pub fn is_bounded(&self) -> bool {
        self.family.is_none()
    }

    fn validate(&self, min_value: u64, what: &str) -> Result<()> {
        if let Some((&n, _)) = self.explicit.iter().find(|(&n, _)| n < min_value) {
            return Err(MvError::InvalidParameter(format!(
                "{what} {n} is below the minimum {min_value}"
            )));
        }
        if let Some(f) = self.family {
            f.validate(min_value)?;
        }
        Ok(())
    }

    fn shifted(&self, delta: i64) -> Spectrum {
        Spectrum {
            explicit: self
                .explicit
                .iter()
                .map(|(&n, &c)| (n.checked_add_signed(delta).expect("shift stays nonnegative"), c))
                .collect(),
            family: self.family.map(|f| f.shifted(delta)),
        }
    }

    /// Equality of the count functions `n ↦ count(n)`.
    ///
    /// Past every explicit key and family start, membership is periodic with
    /// period `lcm` of the steps, so one period beyond that point decides.
    pub fn same_counts(&self, other: &Spectrum) -> bool {
        let horizon = self
            .explicit
            .keys()
            .chain(other.explicit.keys())
            .copied()
            .chain(self.family.iter().chain(other.family.iter()).map(|f| f.first()))
            .max()
            .unwrap_or(0);
        let period = [self.family, other.family]
            .iter()
            .flatten()
            .map(|f| f.step())
            .fold(1, lcm);
        (0..=horizon + period).all(|n| self.count(n) == other.count(n))
    }

    /// Distinct values, up to `limit` inclusive.
    pub fn support_up_to(&self, limit: u64) -> Vec<u64> {
        let mut values: Vec<u64> = self.explicit.keys().copied().filter(|&n| n <= limit).collect();
        if let Some(f) = self.family {
            let mut n = f.first();
            while n <= limit {
                values.push(n);
                n += f.step();
            }
        }
        values.sort_unstable();
        values.dedup();
        values
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.explicit.iter().map(|(n, c)| format!("{n}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))?;
        if let Some(family) = self.family {
            write!(f, " + one each for {family}")?;
        }
        Ok(())
    }
}

/// Atom orders `|a|` with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomOrders {
    pub orders: Spectrum,
    pub is_atomic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralSignature {
    /// Ranks of the finite-rank maximal ideals.
    pub ranks: Spectrum,
    pub infinite_rank_count: Cardinality,
    pub atoms: Option<AtomOrders>,
}

impl SpectralSignature {
    pub fn new(
        ranks: Spectrum,
        infinite_rank_count: Cardinality,
        atoms: Option<AtomOrders>,
    ) -> Result<Self> {
        ranks.validate(2, "rank")?;
        if let Some(a) = &atoms {
            a.orders.validate(1, "atom order")?;
        }
        Ok(SpectralSignature {
            ranks: Spectrum::new(ranks.explicit, ranks.family),
            infinite_rank_count,
            atoms,
        })
    }

    /// The one-element algebra: no maximal ideals at all.
    pub fn trivial() -> Self {
        SpectralSignature {
            ranks: Spectrum::default(),
            infinite_rank_count: Cardinality::ZERO,
            atoms: Some(AtomOrders {
                orders: Spectrum::default(),
                is_atomic: true,
            }),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.ranks.is_empty() && self.infinite_rank_count.is_zero()
    }

    pub fn finite_part(&self) -> &BTreeMap<u64, Cardinality> {
        &self.ranks.explicit
    }

    pub fn family(&self) -> Option<Family> {
        self.ranks.family
    }
}

impl fmt::Display for SpectralSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ranks {}; infinite-rank ideals: {}",
            self.ranks, self.infinite_rank_count
        )?;
        if let Some(a) = &self.atoms {
            write!(
                f,
                "; atom orders {} ({})",
                a.orders,
                if a.is_atomic { "atomic" } else { "not atomic" }
            )?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Ranks of `Max_f(A)` and the orders of the atoms of a finite algebra.
pub fn sig_of_finite_algebra(a: &FiniteMvAlgebra) -> Result<SpectralSignature> {
    let mut ranks: BTreeMap<u64, Cardinality> = BTreeMap::new();
    for m in max_f(a)? {
        let r = rank(a, &m)? as u64;
        let c = ranks.entry(r).or_insert(Cardinality::ZERO);
        *c = *c + Cardinality::Finite(1);
    }
    let mut orders: BTreeMap<u64, Cardinality> = BTreeMap::new();
    for t in atoms(a) {
        let o = element_order(a, t)
            .finite()
            .ok_or_else(|| MvError::InternalInvariant("atom of infinite order".into()))?;
        let c = orders.entry(o).or_insert(Cardinality::ZERO);
        *c = *c + Cardinality::Finite(1);
    }
    SpectralSignature::new(
        Spectrum::new(ranks, None),
        Cardinality::ZERO,
        Some(AtomOrders {
            orders: Spectrum::new(orders, None),
            is_atomic: is_atomic(a),
        }),
    )
}

/// The completion keeps exactly the finite-rank factors. Its atoms are
/// those of the chains `Ł_n`, of order `n - 1`.
pub fn sig_profinite(s: &SpectralSignature) -> SpectralSignature {
    SpectralSignature {
        ranks: s.ranks.clone(),
        infinite_rank_count: Cardinality::ZERO,
        atoms: Some(AtomOrders {
            orders: s.ranks.shifted(-1),
            is_atomic: true,
        }),
    }
}

/// `∏ Ł_{|a|+1}` over the atoms.
pub fn sig_macneille(s: &SpectralSignature) -> Result<SpectralSignature> {
    let atoms = s
        .atoms
        .as_ref()
        .ok_or_else(|| MvError::Precondition("signature carries no atom data".into()))?;
    if !atoms.is_atomic {
        return Err(MvError::Precondition("signature is not atomic".into()));
    }
    Ok(SpectralSignature {
        ranks: atoms.orders.shifted(1),
        infinite_rank_count: Cardinality::ZERO,
        atoms: Some(atoms.clone()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacVerdict {
    pub holds: bool,
    pub diagnostic: String,
}

/// Atomic, and the ranks `{|a| + 1}` coincide with the finite ranks,
/// counts compared as cardinalities.
pub fn sig_mac_criterion(s: &SpectralSignature) -> Result<MacVerdict> {
    let atoms = s
        .atoms
        .as_ref()
        .ok_or_else(|| MvError::Precondition("signature carries no atom data".into()))?;
    if !atoms.is_atomic {
        return Ok(MacVerdict {
            holds: false,
            diagnostic: "not atomic".into(),
        });
    }
    let profinite = sig_profinite(s);
    let macneille = sig_macneille(s)?;
    let holds = profinite.ranks.same_counts(&macneille.ranks);
    let diagnostic = if holds {
        format!("atom ranks and finite ranks agree: {}", profinite.ranks)
    } else {
        format!(
            "finite ranks {} differ from atom ranks {}",
            profinite.ranks, macneille.ranks
        )
    };
    Ok(MacVerdict { holds, diagnostic })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Finitely many distinct ranks.
    YesBounded,
    /// Some `n0` in the rank set satisfies the divisibility condition.
    YesDivisibility,
    /// Neither sufficient condition applies; no claim either way.
    Unknown,
}

impl Verdict {
    pub fn id(self) -> &'static str {
        match self {
            Verdict::YesBounded => "YES_BOUNDED",
            Verdict::YesDivisibility => "YES_DIVISIBILITY",
            Verdict::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Which divisibility is demanded of `n0 - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Divisibility {
    /// `(n0 - 1) | (n - 1)`, i.e. Ł_{n0} embeds in Ł_n.
    #[default]
    Subalgebra,
    /// `(n0 - 1) | n`, read literally.
    Literal,
}

impl Divisibility {
    fn holds(self, n0: u64, n: u64) -> bool {
        let m = n0 - 1;
        match self {
            Divisibility::Subalgebra => (n - 1).is_multiple_of(m),
            Divisibility::Literal => n.is_multiple_of(m),
        }
    }
}

/// Whether the described profinite algebra is known to be a profinite
/// completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionDecision {
    pub verdict: Verdict,
    pub n0: Option<u64>,
    /// Ranks that fail the divisibility by `n0 - 1`.
    pub exceptional: Vec<u64>,
}

pub fn divisibility_decision(s: &SpectralSignature, mode: Divisibility) -> CompletionDecision {
    let Some(family) = s.ranks.family else {
        return CompletionDecision {
            verdict: Verdict::YesBounded,
            n0: None,
            exceptional: Vec::new(),
        };
    };
    // For the progression a + jd, (n0 - 1) divides all but finitely many
    // members iff it divides d and the first member's residue; in particular
    // n0 - 1 ≤ d, which bounds the candidates.
    let (a, d) = (family.first(), family.step());
    let residue = match mode {
        Divisibility::Subalgebra => a - 1,
        Divisibility::Literal => a,
    };
    let candidates = s.ranks.support_up_to(d + 1);
    let n0 = candidates.into_iter().find(|&n0| {
        let m = n0 - 1;
        d % m == 0 && residue % m == 0
    });
    match n0 {
        Some(n0) => CompletionDecision {
            verdict: Verdict::YesDivisibility,
            n0: Some(n0),
            exceptional: s
                .ranks
                .explicit
                .keys()
                .copied()
                .filter(|&n| !mode.holds(n0, n))
                .collect(),
        },
        None => CompletionDecision {
            verdict: Verdict::Unknown,
            n0: None,
            exceptional: Vec::new(),
        },
    }
}

/// The algebra of convergent sequences in `∏_{n≥1} Ł_{n+1}`: one maximal
/// ideal of each rank `n + 1`, one of infinite rank, and one atom of each
/// order `n ≥ 1`.
pub fn builtin_example_convergent() -> SpectralSignature {
    SpectralSignature {
        ranks: Spectrum::new(BTreeMap::new(), Some(Family::AllFrom(2))),
        infinite_rank_count: Cardinality::Finite(1),
        atoms: Some(AtomOrders {
            orders: Spectrum::new(BTreeMap::new(), Some(Family::AllFrom(1))),
            is_atomic: true,
        }),
    }
}

/// Same rank counts (families expanded) and the same number of
/// infinite-rank ideals.
pub fn sig_equal(first: &SpectralSignature, second: &SpectralSignature) -> bool {
    first.infinite_rank_count == second.infinite_rank_count
        && first.ranks.same_counts(&second.ranks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn explicit(pairs: &[(u64, Cardinality)]) -> Spectrum {
        Spectrum::new(pairs.iter().copied().collect(), None)
    }

    fn ranks_only(ranks: Spectrum) -> SpectralSignature {
        SpectralSignature::new(ranks, Cardinality::ZERO, None).unwrap()
    }

    use Cardinality::{Countable, Finite};

    #[test]
    fn finite_algebra_signatures() {
        let a = FiniteMvAlgebra::product(&[2, 3]).unwrap();
        let s = sig_of_finite_algebra(&a).unwrap();
        assert_eq!(s.ranks, explicit(&[(2, Finite(1)), (3, Finite(1))]));
        assert_eq!(s.atoms.unwrap().orders, explicit(&[(1, Finite(1)), (2, Finite(1))]));

        let t = sig_of_finite_algebra(&FiniteMvAlgebra::trivial()).unwrap();
        assert!(t.is_trivial());

        let b = FiniteMvAlgebra::product(&[2, 2, 2]).unwrap();
        assert_eq!(sig_of_finite_algebra(&b).unwrap().ranks, explicit(&[(2, Finite(3))]));
    }

    #[test]
    fn infinite_simple_algebra_has_trivial_completion() {
        let s = SpectralSignature::new(Spectrum::default(), Finite(1), None).unwrap();
        assert!(!s.is_trivial());
        assert!(sig_profinite(&s).is_trivial());
    }

    #[test]
    fn profinite_is_idempotent_and_keeps_finite_signatures() {
        let s = builtin_example_convergent();
        let once = sig_profinite(&s);
        assert_eq!(sig_profinite(&once), once);
        assert_eq!(once.ranks.family, Some(Family::AllFrom(2)));
        assert!(once.infinite_rank_count.is_zero());

        let f = ranks_only(explicit(&[(4, Finite(2))]));
        assert!(sig_equal(&sig_profinite(&f), &f));
    }

    #[test]
    fn macneille_signatures() {
        let boolean = SpectralSignature::new(
            Spectrum::default(),
            Finite(0),
            Some(AtomOrders {
                orders: explicit(&[(1, Finite(5))]),
                is_atomic: true,
            }),
        )
        .unwrap();
        assert_eq!(sig_macneille(&boolean).unwrap().ranks, explicit(&[(2, Finite(5))]));

        let one = SpectralSignature::new(
            Spectrum::default(),
            Finite(0),
            Some(AtomOrders {
                orders: explicit(&[(2, Finite(1))]),
                is_atomic: true,
            }),
        )
        .unwrap();
        assert_eq!(sig_macneille(&one).unwrap().ranks, explicit(&[(3, Finite(1))]));

        let m = sig_macneille(&builtin_example_convergent()).unwrap();
        assert_eq!(m.ranks.family, Some(Family::AllFrom(2)));

        assert!(sig_macneille(&ranks_only(explicit(&[(2, Finite(1))]))).is_err());
    }

    #[test]
    fn mac_criterion() {
        assert!(sig_mac_criterion(&builtin_example_convergent()).unwrap().holds);

        let mismatch = SpectralSignature::new(
            explicit(&[(2, Finite(5))]),
            Finite(0),
            Some(AtomOrders {
                orders: explicit(&[(1, Countable)]),
                is_atomic: true,
            }),
        )
        .unwrap();
        assert!(!sig_mac_criterion(&mismatch).unwrap().holds);

        let a = FiniteMvAlgebra::product(&[2, 3]).unwrap();
        assert!(sig_mac_criterion(&sig_of_finite_algebra(&a).unwrap()).unwrap().holds);
    }

    #[test]
    fn divisibility_examples() {
        let bounded = ranks_only(explicit(&[(2, Finite(1)), (3, Finite(1)), (4, Finite(1))]));
        assert_eq!(
            divisibility_decision(&bounded, Divisibility::Subalgebra).verdict,
            Verdict::YesBounded
        );

        let odd = ranks_only(Spectrum::new(
            BTreeMap::new(),
            Some(Family::Arithmetic { first: 3, step: 2 }),
        ));
        let d = divisibility_decision(&odd, Divisibility::Subalgebra);
        assert_eq!((d.verdict, d.n0), (Verdict::YesDivisibility, Some(3)));

        let all = ranks_only(Spectrum::new(BTreeMap::new(), Some(Family::AllFrom(2))));
        let d = divisibility_decision(&all, Divisibility::Subalgebra);
        assert_eq!((d.verdict, d.n0), (Verdict::YesDivisibility, Some(2)));

        let sparse = ranks_only(Spectrum::new(
            BTreeMap::new(),
            Some(Family::Arithmetic { first: 4, step: 10 }),
        ));
        assert_eq!(
            divisibility_decision(&sparse, Divisibility::Subalgebra).verdict,
            Verdict::Unknown
        );
    }

    #[test]
    fn literal_divisibility_differs() {
        // 3, 5, 7, …: 2 divides n - 1 but never n
        let odd = ranks_only(Spectrum::new(
            BTreeMap::new(),
            Some(Family::Arithmetic { first: 3, step: 2 }),
        ));
        assert_eq!(divisibility_decision(&odd, Divisibility::Literal).verdict, Verdict::Unknown);
        // 3 and then 4, 6, 8, …: n0 = 3 works literally but not as a subalgebra
        let even = ranks_only(Spectrum::new(
            [(3, Finite(1))].into_iter().collect(),
            Some(Family::Arithmetic { first: 4, step: 2 }),
        ));
        assert_eq!(divisibility_decision(&even, Divisibility::Subalgebra).verdict, Verdict::Unknown);
        let d = divisibility_decision(&even, Divisibility::Literal);
        assert_eq!((d.verdict, d.n0), (Verdict::YesDivisibility, Some(3)));
        assert_eq!(d.exceptional, vec![3]);
    }

    #[test]
    fn explicit_rank_two_always_decides() {
        let s = ranks_only(Spectrum::new(
            [(2, Countable)].into_iter().collect(),
            Some(Family::Arithmetic { first: 4, step: 10 }),
        ));
        let d = divisibility_decision(&s, Divisibility::Subalgebra);
        assert_eq!((d.verdict, d.n0), (Verdict::YesDivisibility, Some(2)));
    }

    #[test]
    fn exceptional_ranks_are_reported() {
        let s = ranks_only(Spectrum::new(
            [(4, Finite(1)), (6, Finite(2))].into_iter().collect(),
            Some(Family::Arithmetic { first: 3, step: 2 }),
        ));
        let d = divisibility_decision(&s, Divisibility::Subalgebra);
        assert_eq!(d.n0, Some(3));
        assert_eq!(d.exceptional, vec![4, 6]);
    }

    #[test]
    fn equality_of_signatures() {
        let a = ranks_only(explicit(&[(2, Finite(1)), (3, Finite(1))]));
        let b = ranks_only(explicit(&[(3, Finite(1)), (2, Finite(1))]));
        assert!(sig_equal(&a, &b));
        assert!(!sig_equal(
            &ranks_only(explicit(&[(2, Countable)])),
            &ranks_only(explicit(&[(2, Finite(5))]))
        ));
        let all = ranks_only(Spectrum::new(BTreeMap::new(), Some(Family::AllFrom(2))));
        let ap = ranks_only(Spectrum::new(
            BTreeMap::new(),
            Some(Family::Arithmetic { first: 2, step: 1 }),
        ));
        assert!(sig_equal(&all, &ap));
        // an explicit head plus a later family start
        let split = ranks_only(Spectrum::new(
            [(2, Finite(1)), (3, Finite(1))].into_iter().collect(),
            Some(Family::AllFrom(4)),
        ));
        assert!(sig_equal(&all, &split));
        let odd = ranks_only(Spectrum::new(
            BTreeMap::new(),
            Some(Family::Arithmetic { first: 3, step: 2 }),
        ));
        assert!(!sig_equal(&all, &odd));
    }

    #[test]
    fn invalid_signatures() {
        assert!(SpectralSignature::new(explicit(&[(1, Finite(1))]), Finite(0), None).is_err());
        assert!(SpectralSignature::new(
            Spectrum::new(BTreeMap::new(), Some(Family::Arithmetic { first: 1, step: 1 })),
            Finite(0),
            None
        )
        .is_err());
        assert!(SpectralSignature::new(
            Spectrum::new(BTreeMap::new(), Some(Family::Arithmetic { first: 3, step: 0 })),
            Finite(0),
            None
        )
        .is_err());
        assert!(SpectralSignature::new(Spectrum::new(BTreeMap::new(), Some(Family::AllFrom(1))), Finite(0), None).is_err());
    }
}
