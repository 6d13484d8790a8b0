//! Facet descriptions of full-dimensional lattice polytopes in rank ≤ 3.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{subsets, PointConfig, PolytopeError};
use crate::exactcore::{dot, integer_kernel, BigRat, IntMat};

/// The half-space `⟨normal, x⟩ ≥ −offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Facet {
    /// `⟨normal, x⟩ + offset`, nonnegative on the polytope.
    pub fn slack(&self, x: &[i64]) -> BigInt {
        let xs: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        dot(&self.normal, &xs) + &self.offset
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    facets: Vec<Facet>,
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Convex hull by enumerating hyperplanes through `dim`-subsets of points.
pub fn hull(points: &[Vec<i64>]) -> Result<Polytope, PolytopeError> {
    let first = points.first().ok_or(PolytopeError::Empty)?;
    let dim = first.len();
    if dim == 0 || dim > 3 {
        return Err(PolytopeError::UnsupportedRank(dim));
    }
    let mut pts: Vec<Vec<i64>> = Vec::new();
    for p in points {
        if p.len() != dim {
            return Err(PolytopeError::PointLength(p.clone()));
        }
        if !pts.contains(p) {
            pts.push(p.clone());
        }
    }
    let config = PointConfig::new(dim, pts.clone())?;
    let span = config.affine_dim();
    if span < dim {
        return Err(PolytopeError::LowerDimensional { span, dim });
    }
    let mut facets: Vec<Facet> = Vec::new();
    for s in subsets(pts.len(), dim) {
        let p0 = big(&pts[s[0]]);
        let rows: Vec<Vec<BigInt>> = s[1..]
            .iter()
            .map(|&i| big(&pts[i]).iter().zip(&p0).map(|(a, b)| a - b).collect())
            .collect();
        let edges = if rows.is_empty() { IntMat::zeros(0, dim) } else { IntMat::from_rows(&rows)? };
        let ker = integer_kernel(&edges);
        if ker.len() != 1 {
            continue;
        }
        let n = ker.into_iter().next().unwrap();
        let c = dot(&n, &p0);
        let vals: Vec<BigInt> = pts.iter().map(|x| dot(&n, &big(x)) - &c).collect();
        let facet = if vals.iter().all(|v| !v.is_negative()) {
            Facet { normal: n, offset: -c }
        } else if vals.iter().all(|v| !v.is_positive()) {
            Facet { normal: n.iter().map(|x| -x).collect(), offset: c }
        } else {
            continue;
        };
        if !facets.contains(&facet) {
            facets.push(facet);
        }
    }
    let vertices: Vec<Vec<i64>> = pts
        .iter()
        .filter(|p| {
            let tight: Vec<Vec<BigInt>> =
                facets.iter().filter(|f| f.slack(p).is_zero()).map(|f| f.normal.clone()).collect();
            !tight.is_empty() && IntMat::from_rows(&tight).map(|m| m.to_rat().rank()).unwrap_or(0) == dim
        })
        .cloned()
        .collect();
    Ok(Polytope { dim, vertices, facets })
}

impl Polytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    pub fn is_interior(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|f| f.slack(x).is_positive())
    }

    fn bounding_box(&self) -> Vec<(i64, i64)> {
        (0..self.dim)
            .map(|k| {
                let lo = self.vertices.iter().map(|v| v[k]).min().unwrap_or(0);
                let hi = self.vertices.iter().map(|v| v[k]).max().unwrap_or(0);
                (lo, hi)
            })
            .collect()
    }

    /// All lattice points, origin first if present, then lexicographic.
    pub fn lattice_points(&self) -> PointConfig {
        let bx = self.bounding_box();
        let mut pts: Vec<Vec<i64>> = vec![Vec::new()];
        for &(lo, hi) in &bx {
            pts = pts
                .into_iter()
                .flat_map(|p| {
                    (lo..=hi).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        let mut inside: Vec<Vec<i64>> = pts.into_iter().filter(|p| self.contains(p)).collect();
        inside.sort();
        if let Some(o) = inside.iter().position(|p| p.iter().all(|&x| x == 0)) {
            let origin = inside.remove(o);
            inside.insert(0, origin);
        }
        PointConfig::new(self.dim, inside).expect("distinct lattice points")
    }

    pub fn interior_lattice_points(&self) -> Vec<Vec<i64>> {
        self.lattice_points().points().iter().filter(|p| self.is_interior(p)).cloned().collect()
    }

    /// Vertices `n_F / offset_F` of the polar `{m : ⟨m, x⟩ ≥ −1 on P}`.
    pub fn polar_vertices(&self) -> Result<Vec<Vec<BigRat>>, PolytopeError> {
        if self.facets.iter().any(|f| !f.offset.is_positive()) {
            return Err(PolytopeError::OriginNotInterior);
        }
        Ok(self
            .facets
            .iter()
            .map(|f| f.normal.iter().map(|n| BigRat::new(n.clone(), f.offset.clone())).collect())
            .collect())
    }

    pub fn polar_dual(&self) -> Result<Polytope, PolytopeError> {
        let verts = self.polar_vertices()?;
        let mut int_verts = Vec::new();
        for v in verts {
            if v.iter().any(|x| !x.is_integer()) {
                return Err(PolytopeError::NotLatticeDual);
            }
            int_verts.push(v.iter().map(|x| x.to_integer().to_i64().expect("small")).collect());
        }
        hull(&int_verts)
    }

    pub fn is_reflexive(&self) -> bool {
        let origin = vec![0i64; self.dim];
        self.polar_dual().is_ok() && self.interior_lattice_points() == vec![origin]
    }

    pub fn same_vertex_set(&self, other: &Polytope) -> bool {
        let (mut a, mut b) = (self.vertices.clone(), other.vertices.clone());
        a.sort();
        b.sort();
        a == b
    }

    fn affine_dim_of(&self, idx: &[usize]) -> usize {
        if idx.is_empty() {
            return 0;
        }
        let pc = PointConfig::new(self.dim, idx.iter().map(|&i| self.vertices[i].clone()).collect())
            .expect("distinct vertices");
        pc.affine_dim()
    }

    fn tight_vertices(&self, f: &Facet) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&i| f.slack(&self.vertices[i]).is_zero()).collect()
    }

    /// Pulling triangulation of the face spanned by vertex indices `face`
    /// of affine dimension `k`, as vertex-index simplices.
    fn pull(&self, face: &[usize], k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![face[0]]];
        }
        let apex = face[0];
        let mut subfaces: Vec<Vec<usize>> = Vec::new();
        for f in &self.facets {
            let t = self.tight_vertices(f);
            let s: Vec<usize> = face.iter().copied().filter(|i| t.contains(i)).collect();
            if s.len() >= k && !s.contains(&apex) && self.affine_dim_of(&s) == k - 1 && !subfaces.contains(&s) {
                subfaces.push(s);
            }
        }
        let mut out = Vec::new();
        for s in subfaces {
            for mut t in self.pull(&s, k - 1) {
                t.insert(0, apex);
                out.push(t);
            }
        }
        out
    }

    /// A triangulation of `P` using only vertices, as vertex-index simplices.
    pub fn pulling_triangulation(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        self.pull(&all, self.dim)
    }

    fn simplex_volume(points: &[Vec<i64>]) -> BigInt {
        let p0 = &points[0];
        let rows: Vec<Vec<BigInt>> = points[1..]
            .iter()
            .map(|p| p.iter().zip(p0).map(|(a, b)| BigInt::from(a - b)).collect())
            .collect();
        IntMat::from_rows(&rows).and_then(|m| m.det()).map(|d| d.abs()).unwrap_or_default()
    }

    /// Normalized volume, `dim!` times the Euclidean volume.
    pub fn normalized_volume(&self) -> BigInt {
        self.pulling_triangulation()
            .iter()
            .map(|s| Self::simplex_volume(&s.iter().map(|&i| self.vertices[i].clone()).collect::<Vec<_>>()))
            .sum()
    }

    /// Normalized volume as a sum of pyramids from `apex` over the facets,
    /// with each facet triangulated separately.
    pub fn fan_volume(&self, apex: &[i64]) -> BigInt {
        let mut total = BigInt::zero();
        for f in &self.facets {
            if f.slack(apex).is_zero() {
                continue;
            }
            let face = self.tight_vertices(f);
            for t in self.pull(&face, self.dim - 1) {
                let mut pts = vec![apex.to_vec()];
                pts.extend(t.iter().map(|&i| self.vertices[i].clone()));
                total += Self::simplex_volume(&pts);
            }
        }
        total
    }

    /// Number of lattice points, counted by the bounding-box scan.
    pub fn count_lattice_points(&self) -> usize {
        self.lattice_points().len()
    }

    pub fn has_unit_facet_offsets(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    fn unit_simplex() -> Polytope {
        hull(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap()
    }

    #[test]
    fn unit_simplex_facets_and_points() {
        let p = unit_simplex();
        assert_eq!(p.facets().len(), 4);
        assert_eq!(p.lattice_points().len(), 4);
        assert_eq!(p.normalized_volume(), BigInt::one());
    }

    #[test]
    fn square_with_interior_point() {
        let p = hull(&[vec![-1, -1], vec![1, -1], vec![1, 1], vec![-1, 1], vec![0, 0]]).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert!(!p.vertices().contains(&vec![0, 0]));
        assert_eq!(p.normalized_volume(), BigInt::from(8));
        assert_eq!(p.fan_volume(&[0, 0]), BigInt::from(8));
    }

    #[test]
    fn flat_input_is_rejected() {
        let r = hull(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]);
        assert_eq!(r, Err(PolytopeError::LowerDimensional { span: 2, dim: 3 }));
    }

    #[test]
    fn cube_and_octahedron_are_dual() {
        let mut cube = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    cube.push(vec![x, y, z]);
                }
            }
        }
        let cube = hull(&cube).unwrap();
        let oct = cube.polar_dual().unwrap();
        assert_eq!(oct.vertices().len(), 6);
        assert!(oct.polar_dual().unwrap().same_vertex_set(&cube));
        assert!(cube.is_reflexive() && oct.is_reflexive());
        assert_eq!(cube.normalized_volume(), BigInt::from(48));
    }

    #[test]
    fn doubled_simplex_is_not_reflexive() {
        let p = hull(&[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2], vec![-2, -2, -2]]).unwrap();
        assert_eq!(p.polar_dual(), Err(PolytopeError::NotLatticeDual));
        assert!(!p.is_reflexive());
        let v = p.polar_vertices().unwrap();
        let half = vec![rat(-1, 2); 3];
        assert!(v.contains(&half));
    }

    #[test]
    fn origin_outside_is_an_error() {
        let p = hull(&[vec![1, 0], vec![2, 0], vec![1, 1]]).unwrap();
        assert_eq!(p.polar_vertices(), Err(PolytopeError::OriginNotInterior));
    }
}
