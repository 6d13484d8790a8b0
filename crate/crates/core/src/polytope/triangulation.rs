//! Triangulations of point configurations: validity, regularity, enumeration.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::fm::strict_cone_point;
use super::{hull, subsets, PointConfig, PolytopeError};
use crate::exactcore::{clear_denominators, dot, integer_kernel, primitive_part, rat_int, BigRat, IntMat, RatMat};

/// A set of full-dimensional simplices, each a sorted list of point indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    simplices: Vec<Vec<usize>>,
}

impl Triangulation {
    pub fn new(simplices: Vec<Vec<usize>>) -> Self {
        let mut s: Vec<Vec<usize>> = simplices
            .into_iter()
            .map(|mut x| {
                x.sort_unstable();
                x
            })
            .collect();
        s.sort();
        s.dedup();
        Triangulation { simplices: s }
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Point indices used as vertices.
    pub fn used_points(&self) -> Vec<usize> {
        let mut u: Vec<usize> = self.simplices.iter().flatten().copied().collect();
        u.sort_unstable();
        u.dedup();
        u
    }
}

/// A minimal affinely dependent subset with its primitive affine relation
/// `Σ relation[k] · a_{support[k]} = 0`, first coefficient positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub support: Vec<usize>,
    pub relation: Vec<BigInt>,
}

impl Circuit {
    /// The relation as a vector in `Z^A`.
    pub fn full(&self, n: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); n];
        for (k, &i) in self.support.iter().enumerate() {
            v[i] = self.relation[k].clone();
        }
        v
    }

    pub fn positive_part(&self) -> Vec<usize> {
        self.support.iter().zip(&self.relation).filter(|(_, c)| c.is_positive()).map(|(&i, _)| i).collect()
    }

    pub fn negative_part(&self) -> Vec<usize> {
        self.support.iter().zip(&self.relation).filter(|(_, c)| c.is_negative()).map(|(&i, _)| i).collect()
    }
}

fn check_indices(a: &PointConfig, s: &[usize]) -> Result<(), PolytopeError> {
    match s.iter().find(|&&i| i >= a.len()) {
        Some(&i) => Err(PolytopeError::IndexOutOfRange(i)),
        None => Ok(()),
    }
}

/// `|det|` of the lifted simplex, the normalized lattice volume.
pub fn normalized_volume(simplex: &[usize], a: &PointConfig) -> Result<BigInt, PolytopeError> {
    if simplex.len() != a.dim() + 1 {
        return Err(PolytopeError::WrongCardinality(simplex.to_vec()));
    }
    check_indices(a, simplex)?;
    Ok(a.lifted(simplex).det()?.abs())
}

pub fn circuits(a: &PointConfig) -> Vec<Circuit> {
    let mut out = Vec::new();
    for k in 2..=(a.dim() + 2).min(a.len()) {
        for s in subsets(a.len(), k) {
            let ker = integer_kernel(&a.lifted(&s));
            if ker.len() == 1 && ker[0].iter().all(|c| !c.is_zero()) {
                out.push(Circuit { support: s, relation: primitive_part(&ker[0]) });
            }
        }
    }
    out
}

/// Oriented hyperplane through `face`: returns `(n, c)` with `⟨n, x⟩ = c`.
fn hyperplane(a: &PointConfig, face: &[usize]) -> (Vec<BigInt>, BigInt) {
    let p0: Vec<BigInt> = a.point(face[0]).iter().map(|&x| BigInt::from(x)).collect();
    let rows: Vec<Vec<BigInt>> = face[1..]
        .iter()
        .map(|&i| a.point(i).iter().zip(&p0).map(|(&x, y)| BigInt::from(x) - y).collect())
        .collect();
    let m = if rows.is_empty() { IntMat::zeros(0, a.dim()) } else { IntMat::from_rows(&rows).unwrap() };
    let n = integer_kernel(&m).into_iter().next().expect("codimension one face");
    let c = dot(&n, &p0);
    (n, c)
}

fn side(a: &PointConfig, n: &[BigInt], c: &BigInt, i: usize) -> i32 {
    let x: Vec<BigInt> = a.point(i).iter().map(|&v| BigInt::from(v)).collect();
    let s = dot(n, &x) - c;
    if s.is_positive() {
        1
    } else if s.is_negative() {
        -1
    } else {
        0
    }
}

/// Interior walls: `(wall, p, q)` with `p`, `q` the opposite vertices.
type Walls = Vec<(Vec<usize>, usize, usize)>;

fn check_simplices(a: &PointConfig, t: &Triangulation) -> Result<BigInt, PolytopeError> {
    let mut total = BigInt::zero();
    for s in t.simplices() {
        let v = normalized_volume(s, a)?;
        if v.is_zero() {
            return Err(PolytopeError::Degenerate(s.clone()));
        }
        total += v;
    }
    Ok(total)
}

fn walls(a: &PointConfig, t: &Triangulation) -> Result<Walls, PolytopeError> {
    let mut faces: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for s in t.simplices() {
        for &opp in s {
            let f: Vec<usize> = s.iter().copied().filter(|&x| x != opp).collect();
            faces.entry(f).or_default().push(opp);
        }
    }
    let mut out = Vec::new();
    for (f, opps) in faces {
        let (n, c) = hyperplane(a, &f);
        let sides: Vec<i32> = (0..a.len()).map(|i| side(a, &n, &c, i)).collect();
        let boundary = sides.iter().all(|&s| s >= 0) || sides.iter().all(|&s| s <= 0);
        match (boundary, opps.len()) {
            (true, 1) => {}
            (true, _) => return Err(PolytopeError::Overlap(format!("boundary face {f:?} used {} times", opps.len()))),
            (false, 1) => return Err(PolytopeError::Gap(format!("interior face {f:?} has one neighbour"))),
            (false, 2) => {
                if sides[opps[0]] == sides[opps[1]] {
                    return Err(PolytopeError::Overlap(format!("simplices on face {f:?} lie on the same side")));
                }
                out.push((f, opps[0], opps[1]));
            }
            (false, k) => return Err(PolytopeError::Overlap(format!("face {f:?} shared by {k} simplices"))),
        }
    }
    Ok(out)
}

/// Checks that `t` is a triangulation of `conv(A)`: full-dimensional
/// simplices, volumes summing to the hull volume, and every codimension-one
/// face either on the boundary once or interior with neighbours on both sides.
pub fn validate_triangulation(a: &PointConfig, t: &Triangulation) -> Result<(), PolytopeError> {
    validate_with_walls(a, t).map(|_| ())
}

fn validate_with_walls(a: &PointConfig, t: &Triangulation) -> Result<Walls, PolytopeError> {
    let total = check_simplices(a, t)?;
    let vol = hull(a.points())?.normalized_volume();
    if total > vol {
        return Err(PolytopeError::Overlap(format!("volume sum {total} exceeds {vol}")));
    }
    if total < vol {
        return Err(PolytopeError::Gap(format!("volume sum {total} is below {vol}")));
    }
    walls(a, t)
}

/// Barycentric coordinates of `a_j` in the simplex `s`, if it lies in it.
fn barycentric(a: &PointConfig, s: &[usize], j: usize) -> Option<Vec<BigRat>> {
    let m: RatMat = a.lifted(s).to_rat();
    let mut rhs = vec![BigRat::from_integer(1.into())];
    rhs.extend(a.point(j).iter().map(|&x| BigRat::from_integer(x.into())));
    let lam = m.solve(&rhs).ok()?;
    lam.iter().all(|l| !l.is_negative()).then_some(lam)
}

/// Vectors `w ∈ Z^A` such that heights `ψ` induce `t` iff `w·ψ > 0` for all.
///
/// One vector per interior wall (the circuit of the two adjacent simplices,
/// positive on the opposite vertices) and one per unused point (its
/// barycentric relation in a containing simplex, positive on the point).
pub fn regularity_constraints(a: &PointConfig, t: &Triangulation) -> Result<Vec<Vec<BigInt>>, PolytopeError> {
    let ws = validate_with_walls(a, t)?;
    let n = a.len();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for (f, p, q) in ws {
        let mut idx = f.clone();
        idx.push(p);
        idx.push(q);
        let ker = integer_kernel(&a.lifted(&idx));
        let rel = &ker[0];
        let sign = if rel[idx.len() - 2].is_positive() { 1 } else { -1 };
        let mut w = vec![BigInt::zero(); n];
        for (k, &i) in idx.iter().enumerate() {
            w[i] = &rel[k] * sign;
        }
        if !out.contains(&w) {
            out.push(w);
        }
    }
    let used = t.used_points();
    for j in (0..n).filter(|j| !used.contains(j)) {
        let (s, lam) = t
            .simplices()
            .iter()
            .find_map(|s| barycentric(a, s, j).map(|l| (s.clone(), l)))
            .ok_or_else(|| PolytopeError::Gap(format!("point {j} not covered")))?;
        let mut w = vec![BigRat::zero(); n];
        w[j] = BigRat::from_integer(1.into());
        for (k, &i) in s.iter().enumerate() {
            w[i] -= &lam[k];
        }
        let w = clear_denominators(&w);
        if !out.contains(&w) {
            out.push(w);
        }
    }
    Ok(out)
}

/// Coordinates `y` with `y · basis = w`, for `w` in the row span of `basis`.
pub(crate) fn gale_coords(basis: &[Vec<BigInt>], w: &[BigInt]) -> Vec<BigRat> {
    let b = IntMat::from_rows(basis).unwrap().to_rat();
    let bbt = b.mul_mat(&b.transpose()).unwrap();
    let wr: Vec<BigRat> = w.iter().map(rat_int).collect();
    let bw = b.mul_vec(&wr).unwrap();
    bbt.solve(&bw).expect("independent Gale rows")
}

/// Heights `ψ = Bᵀ (B Bᵀ)⁻¹ x` with `B ψ = x`.
pub(crate) fn lift_heights(basis: &[Vec<BigInt>], x: &[BigRat]) -> Vec<BigRat> {
    let b = IntMat::from_rows(basis).unwrap().to_rat();
    let bbt = b.mul_mat(&b.transpose()).unwrap();
    let y = bbt.solve(x).expect("independent Gale rows");
    b.transpose().mul_vec(&y).unwrap()
}

/// Heights inducing `t`, or `None` if `t` is not regular.
pub fn regularity_witness(a: &PointConfig, t: &Triangulation) -> Result<Option<Vec<BigRat>>, PolytopeError> {
    let cons = regularity_constraints(a, t)?;
    let basis = a.gale_basis();
    if basis.is_empty() {
        return Ok(Some(vec![BigRat::zero(); a.len()]));
    }
    let rows: Vec<Vec<BigRat>> = cons.iter().map(|w| gale_coords(&basis, w)).collect();
    Ok(strict_cone_point(&rows, basis.len()).map(|x| lift_heights(&basis, &x)))
}

pub fn is_regular_triangulation(a: &PointConfig, t: &Triangulation) -> Result<bool, PolytopeError> {
    regularity_witness(a, t).map(|w| w.is_some())
}

/// `φ_T(i) = Σ_{σ ∋ i} vol(σ)`.
pub fn gkz_vector(a: &PointConfig, t: &Triangulation) -> Result<Vec<BigInt>, PolytopeError> {
    let mut phi = vec![BigInt::zero(); a.len()];
    for s in t.simplices() {
        let v = normalized_volume(s, a)?;
        for &i in s {
            phi[i] += &v;
        }
    }
    Ok(phi)
}

/// Two simplices sharing a facet with both opposite vertices on one side.
fn clash(a: &PointConfig, s: &[usize], t: &[usize]) -> bool {
    let common: Vec<usize> = s.iter().copied().filter(|i| t.contains(i)).collect();
    if common.len() != a.dim() {
        return false;
    }
    let p = *s.iter().find(|i| !common.contains(i)).unwrap();
    let q = *t.iter().find(|i| !common.contains(i)).unwrap();
    let (n, c) = hyperplane(a, &common);
    side(a, &n, &c, p) == side(a, &n, &c, q)
}

/// All regular triangulations, by exact cover over full-dimensional
/// simplices within the hull volume followed by the regularity test.
pub fn enumerate_regular_triangulations(a: &PointConfig) -> Result<Vec<Triangulation>, PolytopeError> {
    if a.len() > 8 {
        return Err(PolytopeError::TooManyPoints(a.len()));
    }
    let span = a.affine_dim();
    if span < a.dim() {
        return Err(PolytopeError::LowerDimensional { span, dim: a.dim() });
    }
    let vol = hull(a.points())?.normalized_volume();
    let cands: Vec<(Vec<usize>, BigInt)> = subsets(a.len(), a.dim() + 1)
        .into_iter()
        .filter_map(|s| {
            let v = normalized_volume(&s, a).ok()?;
            (!v.is_zero()).then_some((s, v))
        })
        .collect();

    struct Search<'a> {
        a: &'a PointConfig,
        cands: &'a [(Vec<usize>, BigInt)],
        vol: &'a BigInt,
        found: Vec<Triangulation>,
    }
    impl Search<'_> {
        fn go(&mut self, start: usize, chosen: &mut Vec<usize>, sum: &BigInt) {
            if sum == self.vol {
                let t = Triangulation::new(chosen.iter().map(|&k| self.cands[k].0.clone()).collect());
                if validate_triangulation(self.a, &t).is_ok() {
                    self.found.push(t);
                }
                return;
            }
            for k in start..self.cands.len() {
                let (s, v) = &self.cands[k];
                let next = sum + v;
                if &next > self.vol {
                    continue;
                }
                if chosen.iter().any(|&c| clash(self.a, &self.cands[c].0, s)) {
                    continue;
                }
                chosen.push(k);
                self.go(k + 1, chosen, &next);
                chosen.pop();
            }
        }
    }
    let mut search = Search { a, cands: &cands, vol: &vol, found: Vec::new() };
    search.go(0, &mut Vec::new(), &BigInt::zero());
    let mut out = Vec::new();
    for t in search.found {
        if is_regular_triangulation(a, &t)? {
            out.push(t);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_with_origin() -> PointConfig {
        PointConfig::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap()
    }

    #[test]
    fn two_triangulations_of_a_triangle_with_centre() {
        let a = triangle_with_origin();
        let ts = enumerate_regular_triangulations(&a).unwrap();
        assert_eq!(ts.len(), 2);
        assert!(ts.contains(&Triangulation::new(vec![vec![1, 2, 3]])));
        assert!(ts.contains(&Triangulation::new(vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 1, 3]])));
    }

    #[test]
    fn overlap_and_gap_are_distinguished() {
        let a = triangle_with_origin();
        let over = Triangulation::new(vec![vec![1, 2, 3], vec![0, 1, 2]]);
        assert!(matches!(validate_triangulation(&a, &over), Err(PolytopeError::Overlap(_))));
        let gap = Triangulation::new(vec![vec![0, 1, 2], vec![0, 2, 3]]);
        assert!(matches!(validate_triangulation(&a, &gap), Err(PolytopeError::Gap(_))));
        let flat = Triangulation::new(vec![vec![1, 2]]);
        assert!(matches!(validate_triangulation(&a, &flat), Err(PolytopeError::WrongCardinality(_))));
    }

    #[test]
    fn unit_simplex_volume_and_circuits() {
        let a = PointConfig::new(3, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(normalized_volume(&[0, 1, 2, 3], &a).unwrap(), BigInt::from(1));
        assert!(circuits(&a).is_empty());
        assert_eq!(normalized_volume(&[0, 1, 2], &a), Err(PolytopeError::WrongCardinality(vec![0, 1, 2])));
    }

    #[test]
    fn collinear_circuit() {
        let a = PointConfig::new(1, vec![vec![0], vec![1], vec![2]]).unwrap();
        let c = circuits(&a);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].full(3), crate::exactcore::ints(&[1, -2, 1]));
        let t = Triangulation::new(vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(regularity_constraints(&a, &t).unwrap(), vec![crate::exactcore::ints(&[1, -2, 1])]);
        let w = regularity_witness(&a, &t).unwrap().unwrap();
        assert!((&w[0] + &w[2] - &w[1] - &w[1]) > BigRat::zero());
    }

    #[test]
    fn size_cap() {
        let pts: Vec<Vec<i64>> = (0..9).map(|i| vec![i]).collect();
        let a = PointConfig::new(1, pts).unwrap();
        assert_eq!(enumerate_regular_triangulations(&a), Err(PolytopeError::TooManyPoints(9)));
    }
}
