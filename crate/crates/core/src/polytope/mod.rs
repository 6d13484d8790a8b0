//! Lattice polytopes, point configurations, triangulations and the rank-2
//! secondary fan.

mod fm;
mod hull;
mod secondary;
mod triangulation;

pub use fm::{feasible_point, strict_cone_point, Ineq};
pub use hull::{hull, Facet, Polytope};
pub use secondary::{secondary_fan, secondary_fan_with_basis, FanAdjacency, SecondaryFan2};
pub use triangulation::{
    circuits, enumerate_regular_triangulations, gkz_vector, is_regular_triangulation,
    normalized_volume, regularity_constraints, regularity_witness, validate_triangulation, Circuit,
    Triangulation,
};

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exactcore::{integer_kernel, ExactError, IntMat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolytopeError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("points span an affine subspace of dimension {span} in rank {dim}")]
    LowerDimensional { span: usize, dim: usize },
    #[error("hulls are supported in rank 1 to 3, got {0}")]
    UnsupportedRank(usize),
    #[error("empty point set")]
    Empty,
    #[error("duplicate point {0:?}")]
    DuplicatePoint(Vec<i64>),
    #[error("point {0:?} has the wrong length")]
    PointLength(Vec<i64>),
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("polar dual is not a lattice polytope")]
    NotLatticeDual,
    #[error("simplex {0:?} has the wrong number of points")]
    WrongCardinality(Vec<usize>),
    #[error("simplex {0:?} is not full-dimensional")]
    Degenerate(Vec<usize>),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("triangulation overlaps: {0}")]
    Overlap(String),
    #[error("triangulation leaves a gap: {0}")]
    Gap(String),
    #[error("configuration has {0} points, more than the supported 8")]
    TooManyPoints(usize),
    #[error("Gale dual has rank {0}, expected 2")]
    GaleRank(usize),
    #[error("supplied Gale basis does not span the relation lattice")]
    GaleBasisMismatch,
    #[error("inconsistent secondary fan: {0}")]
    InconsistentFan(String),
}

/// An ordered list of distinct lattice points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl PointConfig {
    pub fn new(dim: usize, points: Vec<Vec<i64>>) -> Result<Self, PolytopeError> {
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(PolytopeError::PointLength(p.clone()));
            }
            if points[..i].contains(p) {
                return Err(PolytopeError::DuplicatePoint(p.clone()));
            }
        }
        Ok(PointConfig { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[i64] {
        &self.points[i]
    }

    /// Columns `(1, a_i)` for `i` in `idx`.
    pub fn lifted(&self, idx: &[usize]) -> IntMat {
        let mut m = IntMat::zeros(self.dim + 1, idx.len());
        for (c, &i) in idx.iter().enumerate() {
            m.set(0, c, BigInt::from(1));
            for r in 0..self.dim {
                m.set(r + 1, c, BigInt::from(self.points[i][r]));
            }
        }
        m
    }

    pub fn all_indices(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }

    /// Dimension of the affine span.
    pub fn affine_dim(&self) -> usize {
        if self.points.is_empty() {
            return 0;
        }
        self.lifted(&self.all_indices()).to_rat().rank() - 1
    }

    /// Basis of the lattice of affine relations `{c : Σ c_i = 0, Σ c_i a_i = 0}`
    /// in Hermite normal form. Its rows are the Gale dual of the configuration.
    pub fn gale_basis(&self) -> Vec<Vec<BigInt>> {
        integer_kernel(&self.lifted(&self.all_indices()))
    }

    pub fn gale_rank(&self) -> usize {
        self.len() - 1 - self.affine_dim()
    }

    /// Position of the origin, if present.
    pub fn origin_index(&self) -> Option<usize> {
        self.points.iter().position(|p| p.iter().all(|&x| x == 0))
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), alloc::vec![alloc::vec![0, 1, 2]]);
        assert_eq!(subsets(3, 0), alloc::vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn config_rejects_duplicates() {
        let r = PointConfig::new(1, alloc::vec![alloc::vec![0], alloc::vec![0]]);
        assert_eq!(r, Err(PolytopeError::DuplicatePoint(alloc::vec![0])));
    }
}
