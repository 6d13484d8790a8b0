//! JSON file formats.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use k3lab_core::exactcore::{BigRat, IntMat};
use k3lab_core::galedisc::LaurentPoly;
use k3lab_core::lattice::Lattice;
use k3lab_core::periods::TruncSeries2;
use k3lab_core::polytope::{PointConfig, SecondaryFan2, Triangulation};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{origin}:{line}:{column}: {msg}")]
    Parse { origin: String, line: usize, column: usize, msg: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl IoError {
    pub fn parse(origin: &str, e: &serde_json::Error) -> IoError {
        IoError::Parse { origin: origin.to_string(), line: e.line(), column: e.column(), msg: e.to_string() }
    }
}

pub fn read_text(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io { path: path.display().to_string(), source })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Io { path: path.display().to_string(), source })
}

pub fn parse_json<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::parse(origin, &e))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn rows_i64(m: &IntMat) -> Vec<Vec<i64>> {
    m.to_i64_rows()
}

fn big_to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).expect("entry fits in i64")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub label: String,
    pub gram: Vec<Vec<i64>>,
}

impl LatticeFile {
    pub fn from_lattice(l: &Lattice) -> Self {
        LatticeFile { label: l.label().to_string(), gram: rows_i64(l.gram()) }
    }

    pub fn to_lattice(&self) -> Result<Lattice, IoError> {
        let n = self.gram.len();
        if self.gram.iter().any(|r| r.len() != n) {
            return Err(IoError::Invalid(format!("{}: Gram matrix is not square", self.label)));
        }
        let refs: Vec<&[i64]> = self.gram.iter().map(|r| r.as_slice()).collect();
        let gram = if n == 0 { IntMat::zeros(0, 0) } else { IntMat::from_i64_rows(&refs) };
        Lattice::new(&self.label, gram).map_err(|e| IoError::Invalid(format!("{}: {e}", self.label)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfigFile {
    pub dim: usize,
    pub points: Vec<Vec<i64>>,
}

impl PointConfigFile {
    pub fn from_config(a: &PointConfig) -> Self {
        PointConfigFile { dim: a.dim(), points: a.points().to_vec() }
    }

    pub fn to_config(&self) -> Result<PointConfig, IoError> {
        PointConfig::new(self.dim, self.points.clone()).map_err(|e| IoError::Invalid(e.to_string()))
    }
}

pub fn parse_point_config_str(text: &str, origin: &str) -> Result<PointConfig, IoError> {
    parse_json::<PointConfigFile>(text, origin)?.to_config()
}

pub fn parse_point_config(path: &Path) -> Result<PointConfig, IoError> {
    parse_point_config_str(&read_text(path)?, &path.display().to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationFile {
    pub simplices: Vec<Vec<usize>>,
}

impl TriangulationFile {
    pub fn from_triangulation(t: &Triangulation) -> Self {
        TriangulationFile { simplices: t.simplices().to_vec() }
    }

    pub fn to_triangulation(&self) -> Triangulation {
        Triangulation::new(self.simplices.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermFile {
    pub exp: Vec<i64>,
    /// An integer or `num/den`.
    pub coef: String,
}

/// A polynomial together with its variable names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyFile {
    pub case: String,
    pub variables: Vec<String>,
    pub terms: Vec<TermFile>,
}

pub fn parse_rational(s: &str) -> Result<BigRat, IoError> {
    s.trim().parse::<BigRat>().map_err(|_| IoError::Invalid(format!("bad rational {s:?}")))
}

pub fn format_rational(q: &BigRat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl PolyFile {
    pub fn from_poly(case: &str, variables: &[&str], p: &LaurentPoly) -> Self {
        PolyFile {
            case: case.to_string(),
            variables: variables.iter().map(|v| v.to_string()).collect(),
            terms: p.terms().iter().map(|(e, c)| TermFile { exp: e.clone(), coef: format_rational(c) }).collect(),
        }
    }

    pub fn to_poly(&self) -> Result<LaurentPoly, IoError> {
        let n = self.variables.len();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.exp.len() != n {
                return Err(IoError::Invalid(format!("{}: exponent {:?} has {} entries, expected {n}", self.case, t.exp, t.exp.len())));
            }
            terms.push((t.exp.clone(), parse_rational(&t.coef)?));
        }
        LaurentPoly::from_terms(n, terms).map_err(|e| IoError::Invalid(e.to_string()))
    }
}

/// Series coefficients keyed by `"n,m"`.
pub fn series_to_map(s: &TruncSeries2) -> BTreeMap<String, String> {
    s.coeffs().iter().map(|((n, m), c)| (format!("{n},{m}"), format_rational(c))).collect()
}

pub fn series_from_map(map: &BTreeMap<String, String>, max_total_degree: u32) -> Result<TruncSeries2, IoError> {
    let mut s = TruncSeries2::zero(max_total_degree);
    for (k, v) in map {
        let (n, m) = k.split_once(',').ok_or_else(|| IoError::Invalid(format!("bad series key {k:?}")))?;
        let parse = |x: &str| x.trim().parse::<u32>().map_err(|_| IoError::Invalid(format!("bad series key {k:?}")));
        s.set(parse(n)?, parse(m)?, parse_rational(v)?);
    }
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeFile {
    pub rays: [usize; 2],
    pub triangulation: Vec<Vec<usize>>,
    pub gkz: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallFile {
    pub cones: [usize; 2],
    pub ray: usize,
    pub support: Vec<usize>,
    pub relation: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanFile {
    pub gale_basis: Vec<Vec<i64>>,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<ConeFile>,
    pub walls: Vec<WallFile>,
}

impl FanFile {
    pub fn from_fan(f: &SecondaryFan2) -> Self {
        FanFile {
            gale_basis: f.gale_basis.iter().map(|r| big_to_i64(r)).collect(),
            rays: f.rays.iter().map(|r| big_to_i64(r)).collect(),
            cones: f
                .cones
                .iter()
                .zip(&f.triangulations)
                .zip(&f.gkz)
                .map(|((c, t), g)| ConeFile { rays: [c.0, c.1], triangulation: t.simplices().to_vec(), gkz: big_to_i64(g) })
                .collect(),
            walls: f
                .adjacency
                .iter()
                .map(|a| WallFile {
                    cones: [a.cones.0, a.cones.1],
                    ray: a.ray,
                    support: a.circuit.support.clone(),
                    relation: big_to_i64(&a.circuit.relation),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use k3lab_core::exactcore::rat;

    #[test]
    fn rationals_round_trip() {
        for q in [rat(0, 1), rat(-7, 1), rat(3, 4), rat(-1, 27)] {
            assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
        assert_eq!(format_rational(&rat(6, 4)), "3/2");
        assert!(parse_rational("1/0").is_err() || parse_rational("x").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn parse_error_carries_line() {
        let err = parse_point_config_str("{\n  \"dim\": 3,\n  \"points\": [[0, 0,]]\n}", "t.json").unwrap_err();
        match err {
            IoError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("{other}"),
        }
    }
}
