//! Serializable summaries, rendered with every field element as an exact
//! string.

use serde::Serialize;

use crate::cubics::BinaryCubic;
use crate::error::{Error, Result};
use crate::factor::{full_factor, is_reducible, Factorization};
use crate::fields::{CubeClass, Field};
use crate::orbits::{classify, invariant, OrbitInvariant, Stratum};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub q: Option<String>,
    pub cube_class: Option<String>,
}

fn class_string<E: Field>(c: &CubeClass<E>) -> String {
    c.canonical().unwrap_or_else(|_| c.clone()).rep().to_string()
}

impl<F: Field> From<&OrbitInvariant<F>> for InvariantReport {
    fn from(inv: &OrbitInvariant<F>) -> Self {
        match inv.normalized() {
            OrbitInvariant::Triple(c) => InvariantReport { q: None, cube_class: Some(class_string(&c)) },
            OrbitInvariant::Double => InvariantReport { q: None, cube_class: None },
            OrbitInvariant::GenSquare { q, class } => InvariantReport {
                q: Some(q.to_string()),
                cube_class: Some(class_string(&class)),
            },
            OrbitInvariant::GenNonSquare { q, class } => InvariantReport {
                q: Some(q.to_string()),
                cube_class: Some(class_string(&class)),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(bound = "")]
pub struct OrbitReport<F: Field> {
    pub cubic: BinaryCubic<F>,
    pub stratum: String,
    pub qn: String,
    /// The canonical square root of `Q_n` when it lies in `k`.
    pub q: Option<String>,
    /// `k(√Q_n)` when `Q_n` is a nonzero non-square.
    pub extension: Option<String>,
    pub invariant: InvariantReport,
    pub reducible: bool,
}

/// Stratum, discriminant, invariant and reducibility of a nonzero cubic.
pub fn orbit_report<F: Field>(p: &BinaryCubic<F>) -> Result<OrbitReport<F>> {
    if p.is_zero() {
        return Err(Error::ZeroCubic);
    }
    let stratum = classify(p);
    let (q, extension) = match &stratum {
        Stratum::GenericSquare { q } => (Some(q.to_string()), None),
        Stratum::GenericNonSquare { extension } => (None, extension.as_ref().map(|e| e.to_string())),
        _ => (None, None),
    };
    Ok(OrbitReport {
        cubic: p.clone(),
        stratum: stratum.name().to_string(),
        qn: p.qn().to_string(),
        q,
        extension,
        invariant: InvariantReport::from(&invariant(p)?),
        reducible: is_reducible(p)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorEntry {
    pub coeffs: Vec<String>,
    pub degree: usize,
    pub multiplicity: u32,
    pub irreducible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub unit: String,
    pub factors: Vec<FactorEntry>,
    /// Whether the product re-expands to the input; present when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<bool>,
}

impl<F: Field> From<&Factorization<F>> for FactorReport {
    fn from(f: &Factorization<F>) -> Self {
        FactorReport {
            unit: f.unit.to_string(),
            factors: f
                .factors
                .iter()
                .map(|x| FactorEntry {
                    coeffs: x.coeffs.iter().map(|c| c.to_string()).collect(),
                    degree: x.degree(),
                    multiplicity: x.multiplicity,
                    irreducible: x.irreducible,
                })
                .collect(),
            check: None,
        }
    }
}

/// Complete factorization; with `check`, also re-expands and compares.
pub fn factor_report<F: Field>(p: &BinaryCubic<F>, check: bool) -> Result<FactorReport> {
    let f = full_factor(p)?;
    let mut r = FactorReport::from(&f);
    if check {
        r.check = Some(f.expand() == *p);
    }
    Ok(r)
}

/// `{"error": kind, "message": text}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorReport {
    pub error: String,
    pub message: String,
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        ErrorReport { error: e.kind().to_string(), message: e.to_string() }
    }
}

#[cfg(test)]
mod tests {
    use serde_json::json;

    use super::*;
    use crate::testutil::*;

    #[test]
    fn orbit_report_json() {
        let r = orbit_report(&raw_q([1, 0, 6, -7])).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["stratum"], "GenericSquare");
        assert_eq!(v["qn"], "81");
        assert_eq!(v["q"], "9");
        assert_eq!(v["reducible"], true);
        assert_eq!(v["cubic"]["raw"], json!(["1", "0", "6", "-7"]));
        assert_eq!(v["cubic"]["abcd"], json!(["1", "0", "2", "-7"]));
        assert_eq!(v["cubic"]["field"], "rat");
        assert_eq!(v["invariant"]["cube_class"], "1");
    }

    #[test]
    fn triple_and_double() {
        let r = orbit_report(&raw_q([2, 0, 0, 0])).unwrap();
        assert_eq!(r.stratum, "TripleRoot");
        assert_eq!(r.invariant, InvariantReport { q: None, cube_class: Some("2".into()) });
        let r = orbit_report(&raw_q([0, 3, 0, 0])).unwrap();
        assert_eq!(r.stratum, "DoubleRoot");
        assert!(r.reducible);
        assert_eq!(orbit_report(&raw_q([0, 0, 0, 0])).unwrap_err(), Error::ZeroCubic);
    }

    #[test]
    fn factor_json() {
        let r = factor_report(&raw_q([0, 3, 0, 0]), true).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["unit"], "3");
        assert_eq!(v["check"], true);
        assert_eq!(v["factors"][0]["coeffs"], json!(["1", "0"]));
        assert_eq!(v["factors"][0]["multiplicity"], 2);
        let r = factor_report(&raw_q([1, 0, 0, 2]), false).unwrap();
        assert!(r.check.is_none());
        assert_eq!(r.factors.len(), 1);
        assert_eq!(r.factors[0].degree, 3);
    }

    #[test]
    fn error_json() {
        let e = ErrorReport::from(&Error::NotTripleRoot);
        assert_eq!(
            serde_json::to_value(&e).unwrap(),
            json!({"error": "NotTripleRoot", "message": "cubic does not have a triple root"})
        );
    }
}
