//! Algebra specifications from flags or a JSON spec file.

use std::fmt;
use std::path::Path;

use gerstenhaber::nil::{build_kodaira, complex_dga, NilComplexSpec, SymplecticSpec};
use gerstenhaber::scalar::{parse_pair, parse_real};
use gerstenhaber::{DgaPresentation, GaussianRational as Q};
use serde::{Deserialize, Serialize};

/// Malformed input; maps to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub fn bad(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SpecFile {
    Kodaira {
        n: usize,
    },
    NilpotentComplex {
        n: usize,
        #[serde(rename = "E")]
        e: Vec<Vec<[String; 2]>>,
    },
    Symplectic {
        u1: String,
        v1: String,
        u2: String,
        v2: String,
    },
}

/// A validated specification.
pub enum Algebra {
    Complex { spec: NilComplexSpec<Q>, kodaira: bool },
    Symplectic(SymplecticSpec<Q>),
}

impl Algebra {
    pub fn presentation(&self) -> anyhow::Result<DgaPresentation> {
        Ok(match self {
            Algebra::Complex { spec, .. } => complex_dga(spec),
            Algebra::Symplectic(s) => gerstenhaber::nil::symplectic_dga(s).map_err(|e| bad(e.to_string()))?,
        })
    }

    pub fn complex(&self) -> anyhow::Result<(&NilComplexSpec<Q>, bool)> {
        match self {
            Algebra::Complex { spec, kodaira } => Ok((spec, *kodaira)),
            Algebra::Symplectic(_) => Err(bad("this command needs a complex specification")),
        }
    }
}

impl SpecFile {
    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))
    }

    /// `u1,v1,u2,v2` as given on the command line.
    pub fn symplectic_flag(text: &str) -> anyhow::Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let [u1, v1, u2, v2] = parts.as_slice() else {
            return Err(bad(format!("expected four comma-separated rationals, got `{text}`")));
        };
        Ok(SpecFile::Symplectic { u1: u1.to_string(), v1: v1.to_string(), u2: u2.to_string(), v2: v2.to_string() })
    }

    pub fn build(&self) -> anyhow::Result<Algebra> {
        let err = |e: gerstenhaber::SpecError| bad(e.to_string());
        Ok(match self {
            SpecFile::Kodaira { n } => Algebra::Complex { spec: build_kodaira(*n).map_err(err)?, kodaira: true },
            SpecFile::NilpotentComplex { n, e } => {
                if e.len() != *n || e.iter().any(|r| r.len() != *n) {
                    return Err(bad(format!("E must be {n}x{n}")));
                }
                let e = e
                    .iter()
                    .map(|row| row.iter().map(|[re, im]| parse_pair(re, im)).collect::<Result<Vec<Q>, _>>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| bad(e.to_string()))?;
                Algebra::Complex { spec: NilComplexSpec::from_e(e).map_err(err)?, kodaira: false }
            }
            SpecFile::Symplectic { u1, v1, u2, v2 } => {
                let p = |s: &String| parse_real(s).map_err(|e| bad(e.to_string()));
                Algebra::Symplectic(SymplecticSpec::new(p(u1)?, p(v1)?, p(u2)?, p(v2)?).map_err(err)?)
            }
        })
    }
}
