//! JSON documents read and written by the command-line tool.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::numeric::Polynomial;
use crate::regularity::{Polygon, Tolerances, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    PolynomialCoeffs,
    Roots,
    Polygon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoefficientOrder {
    Ascending,
    Descending,
}

/// An input instance.
///
/// ```json
/// {"kind": "polynomial-coeffs", "order": "ascending", "data": [[25,0],[0,0],[-6,0],[0,0],[1,0]], "n": 4}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub kind: InstanceKind,
    /// Coefficient order; only meaningful for `polynomial-coeffs`, where it
    /// defaults to ascending.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<CoefficientOrder>,
    pub data: Vec<Complex64>,
    /// Degree for coefficients, point count otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub meta: BTreeMap<String, String>,
}

/// Input problem with a location when one is known.
#[derive(Clone, Debug, PartialEq)]
pub struct DocumentError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            (Some(l), None) => write!(f, "line {l}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for DocumentError {}

/// Line and column of the first `"key":` in `text`.
fn locate_key(text: &str, key: &str) -> (Option<usize>, Option<usize>) {
    let needle = format!("\"{key}\"");
    for (i, line) in text.lines().enumerate() {
        if let Some(col) = line.find(&needle) {
            if line[col + needle.len()..].trim_start().starts_with(':') {
                return (Some(i + 1), Some(col + 1));
            }
        }
    }
    (None, None)
}

impl InstanceDocument {
    pub fn coefficients(coeffs: &Polynomial) -> Self {
        InstanceDocument {
            kind: InstanceKind::PolynomialCoeffs,
            order: Some(CoefficientOrder::Ascending),
            data: coeffs.coeffs().to_vec(),
            n: Some(coeffs.degree()),
            meta: BTreeMap::new(),
        }
    }

    pub fn points(kind: InstanceKind, points: Vec<Complex64>) -> Self {
        InstanceDocument {
            kind,
            order: None,
            n: Some(points.len()),
            data: points,
            meta: BTreeMap::new(),
        }
    }

    /// Parse and validate.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: InstanceDocument = serde_json::from_str(text).map_err(|e| DocumentError {
            line: Some(e.line()),
            column: Some(e.column()),
            message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
        })?;
        doc.validate().map_err(|(key, message)| {
            let (line, column) = locate_key(text, key);
            DocumentError { line, column, message }
        })?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance documents serialize")
    }

    /// Checks that do not depend on the JSON layout; the error names the
    /// offending key.
    pub fn validate(&self) -> Result<(), (&'static str, String)> {
        if self.data.is_empty() {
            return Err(("data", "data must be nonempty".into()));
        }
        if let Some(i) = self.data.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(("data", format!("data[{i}] is not finite")));
        }
        if self.order.is_some() && self.kind != InstanceKind::PolynomialCoeffs {
            return Err(("order", "order applies only to polynomial-coeffs".into()));
        }
        match self.kind {
            InstanceKind::PolynomialCoeffs => {
                let leading = match self.order.unwrap_or(CoefficientOrder::Ascending) {
                    CoefficientOrder::Ascending => self.data[self.data.len() - 1],
                    CoefficientOrder::Descending => self.data[0],
                };
                if leading == Complex64::new(0.0, 0.0) {
                    return Err(("data", "leading coefficient is zero".into()));
                }
                let degree = self.data.len() - 1;
                if let Some(n) = self.n {
                    if n != degree {
                        return Err((
                            "n",
                            format!("n = {n} but {} coefficients give degree {degree}", self.data.len()),
                        ));
                    }
                }
            }
            InstanceKind::Roots | InstanceKind::Polygon => {
                if let Some(n) = self.n {
                    if n != self.data.len() {
                        return Err(("n", format!("n = {n} but data has {} points", self.data.len())));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn polynomial(&self) -> crate::Result<Polynomial> {
        match self.kind {
            InstanceKind::PolynomialCoeffs => {
                let mut coeffs = self.data.clone();
                if self.order == Some(CoefficientOrder::Descending) {
                    coeffs.reverse();
                }
                Polynomial::new(coeffs)
            }
            InstanceKind::Roots | InstanceKind::Polygon => Ok(Polynomial::from_roots(&self.data)),
        }
    }

    /// The vertices as a polygon: in the given order for `polygon`
    /// documents, sorted counterclockwise otherwise.
    pub fn polygon(&self) -> crate::Result<Polygon> {
        match self.kind {
            InstanceKind::Polygon => Polygon::new(self.data.clone()),
            InstanceKind::Roots => Polygon::from_unordered(&self.data),
            InstanceKind::PolynomialCoeffs => {
                let roots = crate::numeric::find_roots(&self.polynomial()?)?;
                Polygon::from_unordered(roots.points())
            }
        }
    }
}

/// Output of `verify`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub tolerances: Tolerances,
    pub duration_ms: f64,
    pub verdict: bool,
    pub report: VerificationReport,
}

impl ReportDocument {
    pub fn new(report: VerificationReport, tolerances: Tolerances, duration_ms: f64) -> Self {
        ReportDocument {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            tolerances,
            duration_ms,
            verdict: report.verdict(),
            report,
        }
    }
}
