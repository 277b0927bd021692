use std::fmt;

use super::ElemId;

/// A truth value `num/den` of a Łukasiewicz chain, kept unreduced so the
/// denominator always names the chain (`den = n - 1` in Ł_n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    pub num: u32,
    pub den: u32,
}

impl Rational {
    pub fn new(num: u32, den: u32) -> Self {
        assert!(den > 0 && num <= den, "grade {num}/{den} outside [0, 1]");
        Rational { num, den }
    }

    /// Exact comparison by cross-multiplication.
    pub fn same_value(&self, other: &Rational) -> bool {
        u64::from(self.num) * u64::from(other.den) == u64::from(other.num) * u64::from(self.den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            f.write_str("0")
        } else if self.num == self.den {
            f.write_str("1")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// An element of a specific algebra together with its readable value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub id: ElemId,
    pub name: String,
    /// One grade per chain coordinate; `None` for table presentations.
    pub value: Option<Vec<Rational>>,
}

/// `|a| = sup { n ≥ 1 : na is defined }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

impl ElementOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            ElementOrder::Finite(n) => Some(n),
            ElementOrder::Infinite => None,
        }
    }
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(n) => write!(f, "{n}"),
            ElementOrder::Infinite => f.write_str("infinite"),
        }
    }
}
