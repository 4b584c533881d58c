//! The JSON document shared by `check`, `coeff`, `factor` and `enumerate`.

use std::fmt;
use std::str::FromStr;

use flaghorn::flag::codim;
use flaghorn::{FactorizationTree, FlagType, MovabilityReport, Permutation, Result};
use num_bigint::BigUint;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// An exact nonnegative integer. Serialized as a JSON number when it fits
/// in 64 bits and as a decimal string otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coefficient(pub BigUint);

impl From<BigUint> for Coefficient {
    fn from(c: BigUint) -> Self {
        Coefficient(c)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match u64::try_from(&self.0) {
            Ok(small) => serializer.serialize_u64(small),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Coefficient {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoefficientVisitor;

        impl Visitor<'_> for CoefficientVisitor {
            type Value = Coefficient;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or a decimal string")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Coefficient, E> {
                Ok(Coefficient(BigUint::from(v)))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Coefficient, E> {
                BigUint::from_str(v).map(Coefficient).map_err(E::custom)
            }
        }

        deserializer.deserialize_any(CoefficientVisitor)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Conditions {
    pub i: Option<bool>,
    pub iii: Option<bool>,
    pub iv: Option<bool>,
}

/// One level of a factorization: the Grassmannian factor and the fiber.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FactorNode {
    /// `"k/m"` for `Gr(k, m)`.
    pub grassmannian: String,
    pub partitions: Vec<String>,
    pub coefficient: Coefficient,
    pub fiber: Option<Box<FactorNode>>,
}

impl FactorNode {
    pub fn from_tree(tree: &FactorizationTree) -> Self {
        let base = &tree.base;
        FactorNode {
            grassmannian: format!("{}/{}", base.rank, base.ambient),
            partitions: base.partitions.iter().map(ToString::to_string).collect(),
            coefficient: base.coefficient.clone().into(),
            fiber: tree.fiber.as_deref().map(|t| Box::new(FactorNode::from_tree(t))),
        }
    }

    /// Levels from the top down.
    pub fn levels(&self) -> Vec<&FactorNode> {
        let mut out = vec![self];
        while let Some(next) = &out[out.len() - 1].fiber {
            out.push(next);
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Document {
    pub flag: String,
    pub n: usize,
    pub tuple: Vec<String>,
    pub codims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub movable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    pub conditions: Conditions,
    pub coefficient: Option<Coefficient>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub factorization: Option<FactorNode>,
}

impl Document {
    pub fn new(tuple: &[Permutation], flag: &FlagType) -> Result<Self> {
        Ok(Document {
            flag: flag.to_string(),
            n: flag.ambient(),
            tuple: tuple.iter().map(ToString::to_string).collect(),
            codims: tuple.iter().map(|w| codim(w, flag)).collect::<Result<_>>()?,
            movable: None,
            method: None,
            conditions: Conditions::default(),
            coefficient: None,
            witness: None,
            factorization: None,
        })
    }

    pub fn from_report(report: &MovabilityReport) -> Result<Self> {
        let mut doc = Document::new(&report.tuple, &report.flag)?;
        doc.movable = Some(report.movable);
        doc.method = Some(report.method.to_string());
        doc.conditions = Conditions {
            i: report.condition_i,
            iii: report.condition_iii,
            iv: report.condition_iv,
        };
        doc.coefficient = report.coefficient.clone().map(Coefficient);
        doc.witness = report.failing_witness.clone();
        Ok(doc)
    }

    /// Parses the flag and tuple back.
    pub fn parse_input(&self) -> Result<(FlagType, Vec<Permutation>)> {
        let flag = self.flag.parse()?;
        let tuple = self.tuple.iter().map(|w| w.parse()).collect::<Result<_>>()?;
        Ok((flag, tuple))
    }
}
