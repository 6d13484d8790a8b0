//! Gale duality, torus coordinates, Horn–Kapranov uniformization and the
//! reduction of A-discriminants to torus coordinates.

mod laurent;

pub use laurent::LaurentPoly;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactcore::{integer_kernel, rat_int, rat_pow, same_lattice, BigRat, IntMat};
use crate::polytope::{hull, PointConfig};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaleError {
    #[error("point configuration does not span its ambient space")]
    NotSpanning,
    #[error("supplied rows do not span the lattice of affine relations")]
    BasisMismatch,
    #[error("expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("pole")]
    Pole,
    #[error("polynomial is not quasi-homogeneous: exponent {0:?} has a different weight")]
    NotQuasiHomogeneous(Vec<i64>),
    #[error("not torus-invariant: exponent {0:?}")]
    NotTorusInvariant(Vec<i64>),
}

/// The fan sequence `0 → L → Z^A → Ň ⊕ Z → 0` of a configuration with the
/// origin at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaleData {
    pub a: PointConfig,
    /// Columns `v_1, …, v_{n+r}`.
    pub p_matrix: IntMat,
    /// Columns `ṽ_i = (v_i, 1)`, `i = 0, …, n+r`.
    pub ptilde: IntMat,
    /// Rows `c̃^{(p)} = (−Σ_j c_j^{(p)}, c_1^{(p)}, …)`.
    pub kernel_basis: Vec<Vec<BigInt>>,
}

pub fn fan_sequence(a: &PointConfig) -> Result<GaleData, GaleError> {
    if a.is_empty() || a.affine_dim() < a.dim() {
        return Err(GaleError::NotSpanning);
    }
    let d = a.dim();
    let n = a.len();
    let mut ptilde = IntMat::zeros(d + 1, n);
    for j in 0..n {
        for r in 0..d {
            ptilde.set(r, j, BigInt::from(a.point(j)[r]));
        }
        ptilde.set(d, j, BigInt::one());
    }
    let rest: Vec<usize> = (1..n).collect();
    let p_matrix = ptilde.submatrix(&(0..d).collect::<Vec<_>>(), &rest);
    let kernel_basis = if a.origin_index() == Some(0) {
        integer_kernel(&p_matrix)
            .into_iter()
            .map(|c| {
                let s: BigInt = c.iter().sum();
                let mut row = vec![-s];
                row.extend(c);
                row
            })
            .collect()
    } else {
        integer_kernel(&ptilde)
    };
    Ok(GaleData { a: a.clone(), p_matrix, ptilde, kernel_basis })
}

impl GaleData {
    /// Replaces the kernel basis by `rows`, which must span the same lattice.
    pub fn with_basis(&self, rows: Vec<Vec<BigInt>>) -> Result<GaleData, GaleError> {
        let annihilated = rows.iter().all(|r| {
            self.ptilde.mul_vec(r).map(|v| v.iter().all(Zero::is_zero)).unwrap_or(false)
        });
        if !annihilated || !same_lattice(&rows, &self.kernel_basis) {
            return Err(GaleError::BasisMismatch);
        }
        Ok(GaleData { kernel_basis: rows, ..self.clone() })
    }

    pub fn rank(&self) -> usize {
        self.kernel_basis.len()
    }

    pub fn torus_coordinates(&self) -> TorusCoords {
        TorusCoords { monomials: self.kernel_basis.clone() }
    }

    /// `c_j^{(p)}` for all `j ∈ A`: the Gale vector of point `j`.
    pub fn gale_vector(&self, j: usize) -> Vec<BigInt> {
        self.kernel_basis.iter().map(|row| row[j].clone()).collect()
    }
}

/// Monomials `a^{c̃^{(p)}}` giving coordinates on the Gale torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusCoords {
    pub monomials: Vec<Vec<BigInt>>,
}

impl TorusCoords {
    pub fn rank(&self) -> usize {
        self.monomials.len()
    }

    /// The coordinates as Laurent monomials in the `a_i`.
    pub fn as_laurent(&self) -> Vec<LaurentPoly> {
        self.monomials
            .iter()
            .map(|m| LaurentPoly::monomial(m.iter().map(|x| x.to_i64().expect("small")).collect(), BigRat::one()))
            .collect()
    }

    /// Values at a coefficient vector `a`.
    pub fn evaluate(&self, a: &[BigRat]) -> Result<Vec<BigRat>, GaleError> {
        self.as_laurent().iter().map(|m| m.eval(a)).collect()
    }

    /// `x = a^{m}` written as a fraction, e.g. `a1*a3*a4/a0^3`.
    pub fn describe(&self, p: usize) -> String {
        let fmt = |sign: i64| -> String {
            let parts: Vec<String> = self.monomials[p]
                .iter()
                .enumerate()
                .filter_map(|(i, c)| {
                    let c = c.to_i64()? * sign;
                    (c > 0).then(|| if c == 1 { alloc::format!("a{i}") } else { alloc::format!("a{i}^{c}") })
                })
                .collect();
            if parts.is_empty() { String::from("1") } else { parts.join("*") }
        };
        let den = fmt(-1);
        if den == "1" { fmt(1) } else { alloc::format!("{}/{}", fmt(1), den) }
    }
}

/// `Φ_q(λ) = Π_{j ∈ A} ⟨c_j, λ⟩^{c_j^{(q)}}`, with the product over every
/// point including `j = 0`.
pub fn horn_kapranov(g: &GaleData, lambda: &[BigRat]) -> Result<Vec<BigRat>, GaleError> {
    horn_kapranov_rows(&g.kernel_basis, lambda)
}

pub fn horn_kapranov_rows(rows: &[Vec<BigInt>], lambda: &[BigRat]) -> Result<Vec<BigRat>, GaleError> {
    let r = rows.len();
    if lambda.len() != r {
        return Err(GaleError::Arity { expected: r, got: lambda.len() });
    }
    let n = rows.first().map_or(0, |x| x.len());
    let bases: Vec<BigRat> = (0..n).map(|j| (0..r).map(|p| rat_int(&rows[p][j]) * &lambda[p]).sum()).collect();
    let mut out = Vec::with_capacity(r);
    for row in rows {
        let mut v = BigRat::one();
        for (b, e) in bases.iter().zip(row) {
            let e = e.to_i64().expect("small exponent");
            if e == 0 {
                continue;
            }
            if b.is_zero() {
                if e < 0 {
                    return Err(GaleError::Pole);
                }
                v = BigRat::zero();
                continue;
            }
            v *= rat_pow(b, e).map_err(|_| GaleError::Pole)?;
        }
        out.push(v);
    }
    Ok(out)
}

/// Weights `P̃ · e` of an exponent vector under the torus acting on `a`.
fn weight(ptilde: &IntMat, e: &[i64]) -> Vec<BigInt> {
    ptilde.mul_vec(&e.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()).expect("arity")
}

/// Rewrites a quasi-homogeneous polynomial in `a` as a polynomial in the
/// torus coordinates: divide by one monomial, express every term as a
/// Laurent monomial in the coordinates, shift to nonnegative exponents and
/// normalize to a primitive integer polynomial with positive graded-lex
/// leading coefficient.
pub fn reduce_discriminant(delta: &LaurentPoly, g: &GaleData) -> Result<LaurentPoly, GaleError> {
    let n = g.a.len();
    if delta.nvars() != n {
        return Err(GaleError::Arity { expected: n, got: delta.nvars() });
    }
    let r = g.rank();
    let Some(e0) = delta.terms().keys().next().cloned() else {
        return Ok(LaurentPoly::zero(r));
    };
    let w0 = weight(&g.ptilde, &e0);
    for e in delta.terms().keys() {
        if weight(&g.ptilde, e) != w0 {
            return Err(GaleError::NotQuasiHomogeneous(e.clone()));
        }
    }
    let basis = IntMat::from_rows(&g.kernel_basis).expect("rows").to_rat();
    let bbt = basis.mul_mat(&basis.transpose()).expect("shape");
    let mut reduced: Vec<(Vec<i64>, BigRat)> = Vec::new();
    for (e, c) in delta.terms() {
        let diff: Vec<BigRat> = e.iter().zip(&e0).map(|(a, b)| BigRat::from_integer((a - b).into())).collect();
        let rhs = basis.mul_vec(&diff).expect("shape");
        let y = bbt.solve(&rhs).map_err(|_| GaleError::NotTorusInvariant(e.clone()))?;
        let back = basis.transpose().mul_vec(&y).expect("shape");
        if back != diff || y.iter().any(|v| !v.is_integer()) {
            return Err(GaleError::NotTorusInvariant(e.clone()));
        }
        let y: Vec<i64> = y.iter().map(|v| v.to_integer().to_i64().expect("small")).collect();
        reduced.push((y, c.clone()));
    }
    let mins: Vec<i64> = (0..r).map(|p| reduced.iter().map(|(y, _)| y[p]).min().unwrap()).collect();
    let shifted = reduced.into_iter().map(|(y, c)| (y.iter().zip(&mins).map(|(a, m)| a - m).collect(), c));
    Ok(LaurentPoly::from_terms(r, shifted)?.primitive())
}

/// Deterministic sample points with small-height rational coordinates.
pub fn sample_points(seed: u64, count: usize, dim: usize) -> Vec<Vec<BigRat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| BigRat::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=9).into()))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleEval {
    pub lambda: Vec<BigRat>,
    /// The Horn–Kapranov image, absent at a pole.
    pub image: Option<Vec<BigRat>>,
    pub value: Option<BigRat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingReport {
    pub evaluations: Vec<SampleEval>,
}

impl VanishingReport {
    pub fn evaluated(&self) -> usize {
        self.evaluations.iter().filter(|s| s.value.is_some()).count()
    }

    pub fn poles(&self) -> usize {
        self.evaluations.len() - self.evaluated()
    }

    pub fn all_zero(&self) -> bool {
        self.evaluated() > 0 && self.evaluations.iter().filter_map(|s| s.value.as_ref()).all(Zero::is_zero)
    }

    pub fn nonzero(&self) -> usize {
        self.evaluations.iter().filter_map(|s| s.value.as_ref()).filter(|v| !v.is_zero()).count()
    }
}

/// Evaluates the reduced discriminant at Horn–Kapranov images of the samples.
pub fn discriminant_vanishes_on_horn(
    rows: &[Vec<BigInt>],
    reduced: &LaurentPoly,
    samples: &[Vec<BigRat>],
) -> VanishingReport {
    let evaluations = samples
        .iter()
        .map(|l| match horn_kapranov_rows(rows, l) {
            Ok(img) => {
                let value = reduced.eval(&img).ok();
                SampleEval { lambda: l.clone(), image: Some(img), value }
            }
            Err(_) => SampleEval { lambda: l.clone(), image: None, value: None },
        })
        .collect();
    VanishingReport { evaluations }
}

/// `W = Σ_i a_i x^{v_i}` as a Laurent polynomial in `x`.
pub fn superpotential(a: &PointConfig, coeffs: &[BigRat]) -> LaurentPoly {
    let mut w = LaurentPoly::zero(a.dim());
    for (p, c) in a.points().iter().zip(coeffs) {
        w.add_term(p.clone(), c.clone());
    }
    w
}

/// Inner normals of the edges of the Newton polygon of a polynomial in two
/// variables.
pub fn newton_edge_normals(p: &LaurentPoly) -> Vec<Vec<BigInt>> {
    let pts: Vec<Vec<i64>> = p.terms().keys().cloned().collect();
    match hull(&pts) {
        Ok(h) => h.facets().iter().map(|f| f.normal.clone()).collect(),
        Err(_) => Vec::new(),
    }
}

/// Whether `e` is a positive multiple of `v`.
pub fn same_direction(e: &[BigInt], v: &[BigInt]) -> bool {
    let cross = &e[0] * &v[1] - &e[1] * &v[0];
    let dot = &e[0] * &v[0] + &e[1] * &v[1];
    cross.is_zero() && dot.is_positive()
}
