//! The example registry: every transcribed matrix, polytope and polynomial
//! of the two families, loaded from `data/examples.json`.

use std::collections::BTreeMap;
use std::path::Path;

use k3lab_core::exactcore::IntMat;
use k3lab_core::galedisc::{fan_sequence, GaleData, LaurentPoly};
use k3lab_core::lattice::{DolgachevInput, Lattice};
use k3lab_core::polytope::{PointConfig, Triangulation};
use k3lab_core::Case;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::io::{IoError, PolyFile};

pub const BUILTIN_JSON: &str = include_str!("../data/examples.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Registry {
    pub version: u32,
    pub cases: Vec<ExampleCase>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriangulationEntry {
    pub label: String,
    pub simplices: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolumeEntry {
    pub simplex: Vec<usize>,
    pub volume: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeClaims {
    pub e8_copies: usize,
    pub m_block: Vec<Vec<i64>>,
    pub m_check: Vec<Vec<i64>>,
    pub m_dual: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExampleCase {
    pub id: String,
    /// Where each field was transcribed from.
    pub provenance: BTreeMap<String, String>,
    /// Columns of the vertex matrix.
    pub vertices: Vec<Vec<i64>>,
    pub divisor_rows: Vec<Vec<i64>>,
    pub dual_vertices: Vec<Vec<i64>>,
    pub triangulations: Vec<TriangulationEntry>,
    pub adjacency_circuits: Vec<Vec<usize>>,
    pub volumes: Vec<VolumeEntry>,
    pub discriminant: PolyFile,
    pub reduced_discriminant: PolyFile,
    pub pic_gram_mirror: Vec<Vec<i64>>,
    pub lattice: LatticeClaims,
    pub published_f: Option<Vec<i64>>,
}

fn int_mat(label: &str, rows: &[Vec<i64>]) -> Result<IntMat, IoError> {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    if refs.is_empty() || refs.iter().any(|r| r.len() != refs[0].len()) {
        return Err(IoError::Invalid(format!("{label}: ragged or empty matrix")));
    }
    Ok(IntMat::from_i64_rows(&refs))
}

fn lattice(label: &str, rows: &[Vec<i64>]) -> Result<Lattice, IoError> {
    Lattice::new(label, int_mat(label, rows)?).map_err(|e| IoError::Invalid(format!("{label}: {e}")))
}

impl Registry {
    pub fn builtin() -> Registry {
        Registry::from_json(BUILTIN_JSON, "builtin").expect("shipped registry is valid")
    }

    pub fn from_json(text: &str, origin: &str) -> Result<Registry, IoError> {
        let reg: Registry = serde_json::from_str(text).map_err(|e| IoError::parse(origin, &e))?;
        reg.validate()?;
        Ok(reg)
    }

    pub fn load(path: &Path) -> Result<Registry, IoError> {
        let text = crate::io::read_text(path)?;
        Registry::from_json(&text, &path.display().to_string())
    }

    pub fn case(&self, case: Case) -> Option<&ExampleCase> {
        self.cases.iter().find(|c| c.id == case.name())
    }

    /// Structural consistency only; the mathematical claims are checked by
    /// the suite.
    pub fn validate(&self) -> Result<(), IoError> {
        for case in Case::ALL {
            let n = self.cases.iter().filter(|c| c.id == case.name()).count();
            if n != 1 {
                return Err(IoError::Invalid(format!("registry has {n} entries for {case}")));
            }
        }
        for c in &self.cases {
            c.validate()?;
        }
        Ok(())
    }
}

impl ExampleCase {
    pub fn case(&self) -> Case {
        self.id.parse().expect("validated id")
    }

    pub fn point_config(&self) -> Result<PointConfig, IoError> {
        let mut pts = vec![vec![0; 3]];
        pts.extend(self.vertices.iter().cloned());
        PointConfig::new(3, pts).map_err(|e| IoError::Invalid(format!("{}: {e}", self.id)))
    }

    pub fn divisor_rows_big(&self) -> Vec<Vec<BigInt>> {
        self.divisor_rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    pub fn gale(&self) -> Result<GaleData, IoError> {
        let g = fan_sequence(&self.point_config()?).map_err(|e| IoError::Invalid(format!("{}: {e}", self.id)))?;
        g.with_basis(self.divisor_rows_big()).map_err(|e| IoError::Invalid(format!("{}: divisor rows: {e}", self.id)))
    }

    pub fn triangulations(&self) -> Vec<Triangulation> {
        self.triangulations.iter().map(|t| Triangulation::new(t.simplices.clone())).collect()
    }

    pub fn discriminant(&self) -> Result<LaurentPoly, IoError> {
        self.discriminant.to_poly()
    }

    pub fn reduced_discriminant(&self) -> Result<LaurentPoly, IoError> {
        self.reduced_discriminant.to_poly()
    }

    pub fn pic_gram(&self) -> Result<IntMat, IoError> {
        int_mat("pic_gram_mirror", &self.pic_gram_mirror)
    }

    pub fn dolgachev_input(&self) -> Result<DolgachevInput, IoError> {
        let l = &self.lattice;
        let mut m = Lattice::zero();
        for _ in 0..l.e8_copies {
            m = m.direct_sum(&Lattice::e8());
        }
        let m = m.direct_sum(&lattice("M block", &l.m_block)?);
        Ok(DolgachevInput { m, m_check: lattice("M check", &l.m_check)?, m_dual: lattice("M dual", &l.m_dual)? })
    }

    pub fn validate(&self) -> Result<(), IoError> {
        let id = &self.id;
        let invalid = |msg: String| Err(IoError::Invalid(format!("{id}: {msg}")));
        if self.id.parse::<Case>().is_err() {
            return invalid("unknown case id".into());
        }
        if self.vertices.iter().any(|v| v.len() != 3) || self.dual_vertices.iter().any(|v| v.len() != 3) {
            return invalid("vertices must have three coordinates".into());
        }
        let n = self.vertices.len() + 1;
        if self.divisor_rows.len() != 2 || self.divisor_rows.iter().any(|r| r.len() != n) {
            return invalid(format!("divisor matrix must be 2 x {n}"));
        }
        // rows lie in the kernel of the lifted point matrix
        let g = fan_sequence(&self.point_config()?).map_err(|e| IoError::Invalid(format!("{id}: {e}")))?;
        for row in self.divisor_rows_big() {
            if !g.ptilde.mul_vec(&row).expect("shape checked").iter().all(Zero::is_zero) {
                return invalid(format!("divisor row {row:?} is not an affine relation"));
            }
        }
        let labels: Vec<&str> = self.triangulations.iter().map(|t| t.label.as_str()).collect();
        if labels != k3lab_core::cases::CONE_LABELS {
            return invalid(format!("triangulation labels {labels:?}"));
        }
        let out_of_range = |s: &[usize]| s.iter().any(|&i| i >= n);
        if self.triangulations.iter().flat_map(|t| &t.simplices).any(|s| out_of_range(s))
            || self.adjacency_circuits.iter().any(|s| out_of_range(s))
            || self.volumes.iter().any(|v| out_of_range(&v.simplex))
        {
            return invalid("point index out of range".into());
        }
        if self.adjacency_circuits.len() != 4 {
            return invalid("expected four wall circuits".into());
        }
        if self.discriminant.variables.len() != n || self.reduced_discriminant.variables.len() != 2 {
            return invalid("discriminant variable count".into());
        }
        self.discriminant()?;
        self.reduced_discriminant()?;
        let pic = self.pic_gram()?;
        if pic.rows() != 2 || pic.cols() != 2 || !pic.is_symmetric() {
            return invalid("Picard Gram matrix must be symmetric 2 x 2".into());
        }
        self.dolgachev_input()?;
        if let Some(f) = &self.published_f {
            if f.len() != 4 {
                return invalid("published f must have four coordinates".into());
            }
        }
        Ok(())
    }
}
