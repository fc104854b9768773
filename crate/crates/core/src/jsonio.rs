//! JSON schemas and canonical serialization.
//!
//! All output JSON is UTF-8 with keys sorted and a trailing newline; the
//! byte stream for a given value is unique, so round-tripping is exact.
//! Coefficients serialize as `{ "num": polystring, "den": polystring }`
//! where a polystring is the ascending sparse-term format (`-1 + q^2`);
//! numeric-mode coefficients are constant polystrings.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith::{format_big_rational, parse_big_rational, RatQ, Scalar};
use crate::error::{Error, Result};
use crate::fusion::{ElementKind, FusionResult, FusionSpec};
use crate::hecke::HeckeElement;
use crate::perm::Permutation;
use crate::tableaux::{Partition, StandardTableau, Variant};

/// Scalar fields with a num/den string form in the element schema.
pub trait CoeffStrings: Scalar {
    fn coeff_strings(&self) -> (String, String);
    fn from_coeff_strings(num: &str, den: &str) -> Result<Self>;
}

impl CoeffStrings for RatQ {
    fn coeff_strings(&self) -> (String, String) {
        (
            crate::arith::format_poly_q(self.num(), 'q'),
            crate::arith::format_poly_q(self.den(), 'q'),
        )
    }
    fn from_coeff_strings(num: &str, den: &str) -> Result<Self> {
        RatQ::new(
            crate::arith::parse_poly_q(num, 'q')?,
            crate::arith::parse_poly_q(den, 'q')?,
        )
    }
}

impl CoeffStrings for BigRational {
    fn coeff_strings(&self) -> (String, String) {
        (format_big_rational(self), "1".to_string())
    }
    fn from_coeff_strings(num: &str, den: &str) -> Result<Self> {
        let n = parse_big_rational(num)?;
        let d = parse_big_rational(den)?;
        if Scalar::is_zero(&d) {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(n / d)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CoeffJson {
    pub num: String,
    pub den: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: CoeffJson,
    pub perm: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ElementJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FusionResultJson {
    pub element: ElementJson,
    pub kind: String,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q0: Option<String>,
    pub shape: Vec<usize>,
    pub tableau: Vec<Vec<usize>>,
    pub variant: String,
    pub direction: Vec<u64>,
}

pub fn element_to_json<K: CoeffStrings>(x: &HeckeElement<K>) -> ElementJson {
    let terms = x
        .iter()
        .map(|(p, c)| {
            let (num, den) = c.coeff_strings();
            TermJson {
                coeff: CoeffJson { num, den },
                perm: p.images().to_vec(),
            }
        })
        .collect();
    ElementJson { n: x.n(), terms }
}

pub fn element_from_json<K: CoeffStrings>(j: &ElementJson) -> Result<HeckeElement<K>> {
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in &j.terms {
        let perm = Permutation::from_images(t.perm.clone())?;
        let coeff = K::from_coeff_strings(&t.coeff.num, &t.coeff.den)?;
        terms.push((perm, coeff));
    }
    HeckeElement::from_terms(j.n, terms)
}

pub fn fusion_result_to_json<K: CoeffStrings>(r: &FusionResult<K>) -> FusionResultJson {
    FusionResultJson {
        element: element_to_json(&r.element),
        kind: r.kind.name().to_string(),
        mode: if r.q0.is_some() { "numeric" } else { "symbolic" }.to_string(),
        q0: r.q0.as_ref().map(format_big_rational),
        shape: r.spec.tableau().shape().parts().to_vec(),
        tableau: r.spec.tableau().rows().to_vec(),
        variant: r.spec.variant().name().to_string(),
        direction: r.spec.direction().to_vec(),
    }
}

/// A parsed fusion result in either coefficient field.
pub enum AnyFusionResult {
    Symbolic(FusionResult<RatQ>),
    Numeric(FusionResult<BigRational>),
}

pub fn fusion_result_from_json(j: &FusionResultJson) -> Result<AnyFusionResult> {
    let shape = Partition::new(j.shape.clone())?;
    let tableau = StandardTableau::new(shape, j.tableau.clone())?;
    let variant: Variant = j.variant.parse()?;
    let spec = FusionSpec::new(tableau, variant, j.direction.clone())?;
    let kind = match j.kind.as_str() {
        "F" => ElementKind::F,
        "G" => ElementKind::G,
        other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
    };
    match j.mode.as_str() {
        "symbolic" => Ok(AnyFusionResult::Symbolic(FusionResult {
            element: element_from_json(&j.element)?,
            spec,
            kind,
            q0: None,
        })),
        "numeric" => {
            let q0 = j
                .q0
                .as_deref()
                .ok_or_else(|| Error::Parse("numeric result without q0".into()))?;
            Ok(AnyFusionResult::Numeric(FusionResult {
                element: element_from_json(&j.element)?,
                spec,
                kind,
                q0: Some(parse_big_rational(q0)?),
            }))
        }
        other => Err(Error::Parse(format!("unknown mode {other:?}"))),
    }
}

/// Compact JSON with sorted keys and a trailing newline — the unique byte
/// form of the value.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    let mut s = serde_json::to_string(&v).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}
