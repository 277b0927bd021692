//! JSON input descriptions of algebras and spectral signatures.

use std::collections::BTreeMap;

use mvcomp::algebra::RawTables;
use mvcomp::signatures::{
    builtin_example_convergent, AtomOrders, Cardinality, Family, SpectralSignature, Spectrum,
};
use mvcomp::{FiniteMvAlgebra, Limits, MvError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Description {
    Chain(ChainDescription),
    Product(ProductDescription),
    Table(TableDescription),
    Signature(SignatureDescription),
}

// Each body also accepts the `kind` key so it can be read straight from the
// input text; going through serde's tagged-enum buffering would lose error
// positions and integer map keys.

/// Swallows the `kind` key; the enum variant already records it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct KindKey;

impl<'de> Deserialize<'de> for KindKey {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        serde::de::IgnoredAny::deserialize(d).map(|_| KindKey)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainDescription {
    #[serde(default, skip_serializing)]
    kind: KindKey,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductDescription {
    #[serde(default, skip_serializing)]
    kind: KindKey,
    pub chains: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDescription {
    #[serde(default, skip_serializing)]
    kind: KindKey,
    pub elements: Vec<String>,
    /// `oplus[i][j]` names `elements[i] ⊕ elements[j]`.
    pub oplus: Vec<Vec<String>>,
    pub neg: Vec<String>,
    pub zero: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureDescription {
    #[serde(default, skip_serializing)]
    kind: KindKey,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub finite_part: BTreeMap<u64, Count>,
    #[serde(default, skip_serializing_if = "Count::is_zero")]
    pub infinite_rank_count: Count,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyDescription>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atom_orders: Option<BTreeMap<u64, Count>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atom_family: Option<FamilyDescription>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_atomic: Option<bool>,
}

impl Description {
    pub fn chain(n: usize) -> Self {
        Description::Chain(ChainDescription { kind: KindKey, n })
    }

    pub fn product(chains: Vec<usize>) -> Self {
        Description::Product(ProductDescription { kind: KindKey, chains })
    }
}

/// A multiplicity: a number or the string `"countable"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Count {
    Finite(u64),
    Marker(String),
}

impl Default for Count {
    fn default() -> Self {
        Count::Finite(0)
    }
}

impl Count {
    fn is_zero(&self) -> bool {
        *self == Count::Finite(0)
    }

    fn cardinality(&self, field: &str) -> Result<Cardinality, MvError> {
        match self {
            Count::Finite(n) => Ok(Cardinality::Finite(*n)),
            Count::Marker(s) if s.eq_ignore_ascii_case("countable") => Ok(Cardinality::Countable),
            Count::Marker(s) => Err(MvError::Format(format!(
                "{field}: expected a count or \"countable\", got \"{s}\""
            ))),
        }
    }

    pub fn of(c: Cardinality) -> Self {
        match c {
            Cardinality::Finite(n) => Count::Finite(n),
            Cardinality::Countable => Count::Marker("countable".into()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum FamilyDescription {
    AllRanksFrom(u64),
    Arithmetic { first: u64, step: u64 },
}

impl FamilyDescription {
    fn family(self) -> Family {
        match self {
            FamilyDescription::AllRanksFrom(k) => Family::AllFrom(k),
            FamilyDescription::Arithmetic { first, step } => Family::Arithmetic { first, step },
        }
    }

    pub fn of(f: Family) -> Self {
        match f {
            Family::AllFrom(k) => FamilyDescription::AllRanksFrom(k),
            Family::Arithmetic { first, step } => FamilyDescription::Arithmetic { first, step },
        }
    }
}

/// The parsed, validated subject of a command.
#[derive(Debug, Clone)]
pub enum Subject {
    Algebra(FiniteMvAlgebra),
    Signature(SpectralSignature),
}

/// Parses a description. Errors carry serde's line and column.
pub fn parse_description(text: &str) -> Result<Description, MvError> {
    #[derive(Deserialize)]
    struct Kind {
        kind: Option<String>,
    }
    fn body<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, MvError> {
        serde_json::from_str(text).map_err(|e| MvError::Format(format!("invalid description: {e}")))
    }
    let Kind { kind } = body(text)?;
    match kind.as_deref() {
        Some("chain") => body(text).map(Description::Chain),
        Some("product") => body(text).map(Description::Product),
        Some("table") => body(text).map(Description::Table),
        Some("signature") => body(text).map(Description::Signature),
        Some(other) => Err(MvError::Format(format!(
            "invalid description: unknown kind `{other}`, expected one of chain, product, table, signature"
        ))),
        None => Err(MvError::Format("invalid description: missing field `kind`".into())),
    }
}

impl Description {
    /// Resolves a table description to raw tables without checking axioms.
    pub fn raw_tables(&self, limits: &Limits) -> Result<Option<(Vec<String>, RawTables)>, MvError> {
        match self {
            Description::Table(t) => {
                limits.check_carrier(t.elements.len())?;
                RawTables::from_names(&t.elements, &t.oplus, &t.neg, &t.zero).map(Some)
            }
            _ => Ok(None),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<Subject, MvError> {
        match self {
            Description::Chain(c) => {
                FiniteMvAlgebra::chain_with_limits(c.n, limits).map(Subject::Algebra)
            }
            Description::Product(p) => {
                FiniteMvAlgebra::product_with_limits(&p.chains, limits).map(Subject::Algebra)
            }
            Description::Table(_) => {
                let (names, tables) = self.raw_tables(limits)?.expect("table description");
                FiniteMvAlgebra::from_tables(names, tables).map(Subject::Algebra)
            }
            Description::Signature(SignatureDescription {
                builtin,
                finite_part,
                infinite_rank_count,
                family,
                atom_orders,
                atom_family,
                is_atomic,
                ..
            }) => {
                if let Some(name) = builtin {
                    let only_builtin = finite_part.is_empty()
                        && infinite_rank_count.is_zero()
                        && family.is_none()
                        && atom_orders.is_none()
                        && atom_family.is_none()
                        && is_atomic.is_none();
                    if !only_builtin {
                        return Err(MvError::Format(
                            "a builtin signature takes no other fields".into(),
                        ));
                    }
                    return match name.as_str() {
                        "convergent" => Ok(Subject::Signature(builtin_example_convergent())),
                        other => Err(MvError::Format(format!(
                            "unknown builtin signature `{other}`; known: convergent"
                        ))),
                    };
                }
                let counts = |map: &BTreeMap<u64, Count>, field: &str| {
                    map.iter()
                        .map(|(&k, c)| Ok((k, c.cardinality(&format!("{field}.{k}"))?)))
                        .collect::<Result<BTreeMap<_, _>, MvError>>()
                };
                let ranks = Spectrum::new(
                    counts(finite_part, "finite_part")?,
                    family.map(FamilyDescription::family),
                );
                let atoms = if atom_orders.is_some() || atom_family.is_some() || is_atomic.is_some() {
                    let orders = atom_orders.clone().unwrap_or_default();
                    Some(AtomOrders {
                        orders: Spectrum::new(
                            counts(&orders, "atom_orders")?,
                            atom_family.map(FamilyDescription::family),
                        ),
                        is_atomic: is_atomic.unwrap_or(true),
                    })
                } else {
                    None
                };
                let infinite = infinite_rank_count.cardinality("infinite_rank_count")?;
                SpectralSignature::new(ranks, infinite, atoms).map(Subject::Signature)
            }
        }
    }
}

/// A signature in the input format, so reports can be fed back in.
pub fn describe_signature(s: &SpectralSignature) -> Description {
    let counts = |m: &BTreeMap<u64, Cardinality>| m.iter().map(|(&k, &c)| (k, Count::of(c))).collect();
    Description::Signature(SignatureDescription {
        builtin: None,
        finite_part: counts(&s.ranks.explicit),
        infinite_rank_count: Count::of(s.infinite_rank_count),
        family: s.ranks.family.map(FamilyDescription::of),
        atom_orders: s.atoms.as_ref().map(|a| counts(&a.orders.explicit)),
        atom_family: s
            .atoms
            .as_ref()
            .and_then(|a| a.orders.family.map(FamilyDescription::of)),
        is_atomic: s.atoms.as_ref().map(|a| a.is_atomic),
        ..SignatureDescription::default()
    })
}
