use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::PeriodError;
use crate::cases::{gale_rows, reduced_discriminant};
use crate::exactcore::{rat, rat_pow, BigRat};
use crate::galedisc::{horn_kapranov_rows, LaurentPoly};
use crate::Case;

/// A point of a weighted projective space `P(w₀, …, w_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedPoint<T> {
    pub coords: Vec<T>,
    pub weights: Vec<u32>,
}

impl WeightedPoint<BigRat> {
    pub fn new(coords: Vec<BigRat>, weights: Vec<u32>) -> Result<Self, PeriodError> {
        if coords.len() != weights.len() {
            return Err(PeriodError::WeightArity);
        }
        if coords.iter().all(Zero::is_zero) {
            return Err(PeriodError::ZeroPoint);
        }
        Ok(WeightedPoint { coords, weights })
    }

    /// `(t^{w_i} x_i)`.
    pub fn rescale(&self, t: &BigRat) -> Self {
        let coords = self.coords.iter().zip(&self.weights).map(|(x, &w)| x * num_traits::pow(t.clone(), w as usize)).collect();
        WeightedPoint { coords, weights: self.weights.clone() }
    }

    /// Equality in the weighted projective space over `C`: same zero
    /// pattern and `x_i^{w_j} y_j^{w_i} = x_j^{w_i} y_i^{w_j}` for all `i, j`.
    pub fn equivalent(&self, other: &Self) -> bool {
        if self.weights != other.weights {
            return false;
        }
        let n = self.coords.len();
        for i in 0..n {
            if self.coords[i].is_zero() != other.coords[i].is_zero() {
                return false;
            }
        }
        let p = |x: &BigRat, e: u32| num_traits::pow(x.clone(), e as usize);
        for i in 0..n {
            for j in i + 1..n {
                let (wi, wj) = (self.weights[i], self.weights[j]);
                let l = p(&self.coords[i], wj) * p(&other.coords[j], wi);
                let r = p(&self.coords[j], wi) * p(&other.coords[i], wj);
                if l != r {
                    return false;
                }
            }
        }
        true
    }
}

/// The point `[ν:λ:μ] = [1:1/4:0]` where the A0 period map is undefined.
pub fn a0_indeterminacy() -> [BigRat; 3] {
    [BigRat::one(), rat(1, 4), BigRat::zero()]
}


/// `[1 : 25μ/(2(λ−1/4)³) : −3125μ²/(λ−1/4)⁵] ∈ P(1,3,5)`.
pub fn period_map_a0(lam: &BigRat, mu: &BigRat) -> Result<WeightedPoint<BigRat>, PeriodError> {
    let t = lam - rat(1, 4);
    if t.is_zero() {
        return Err(PeriodError::IndeterminacyCenter);
    }
    let b = rat(25, 2) * mu / rat_pow(&t, 3).expect("nonzero");
    let c = rat(-3125, 1) * mu * mu / rat_pow(&t, 5).expect("nonzero");
    WeightedPoint::new(vec![BigRat::one(), b, c], vec![1, 3, 5])
}

pub fn period_map_a0_complex(lam: Complex64, mu: Complex64) -> Result<[Complex64; 3], PeriodError> {
    let t = lam - 0.25;
    if t == Complex64::zero() {
        return Err(PeriodError::IndeterminacyCenter);
    }
    Ok([Complex64::new(1.0, 0.0), mu * 12.5 / t.powu(3), mu * mu * -3125.0 / t.powu(5)])
}

/// `[ν:λ:μ] ↦ [λ − ν²/4 : (25/2)νμ : −3125μ²]`, `P(1,2,5) ⇢ P(1,3,5)`.
pub fn period_map_a0_homogeneous() -> [LaurentPoly; 3] {
    let t = |e: [i64; 3], c: BigRat| (e.to_vec(), c);
    [
        LaurentPoly::from_terms(3, [t([0, 1, 0], rat(1, 1)), t([2, 0, 0], rat(-1, 4))]).expect("arity"),
        LaurentPoly::from_terms(3, [t([1, 0, 1], rat(25, 2))]).expect("arity"),
        LaurentPoly::from_terms(3, [t([0, 0, 2], rat(-3125, 1))]).expect("arity"),
    ]
}

fn weighted_degree(e: &[i64], w: &[u32]) -> i64 {
    e.iter().zip(w).map(|(a, &b)| a * b as i64).sum()
}

/// The `k` with every component `i` quasi-homogeneous of degree
/// `k · dst_i` for the source weights, or `None`.
pub fn wproj_homogeneity_check(map: &[LaurentPoly], src: &[u32], dst: &[u32]) -> Option<u32> {
    if map.len() != dst.len() {
        return None;
    }
    let mut k: Option<i64> = None;
    for (p, &w) in map.iter().zip(dst) {
        if p.nvars() != src.len() {
            return None;
        }
        let mut degs = p.terms().keys().map(|e| weighted_degree(e, src));
        let Some(d) = degs.next() else { continue };
        if degs.any(|x| x != d) || w == 0 || d % w as i64 != 0 {
            return None;
        }
        let kk = d / w as i64;
        match k {
            Some(prev) if prev != kk => return None,
            _ => k = Some(kk),
        }
    }
    k.and_then(|k| u32::try_from(k).ok()).filter(|&k| k > 0)
}

/// `Δ(A,B,C) = −1728B⁵ + 720AB³C − 80A²BC² + 64A³(5B²−AC)² + C³`.
pub fn delta_abc() -> LaurentPoly {
    let v = |i| LaurentPoly::var(3, i);
    let c = |x: i64| LaurentPoly::constant(3, rat(x, 1));
    let (a, b, cc) = (v(0), v(1), v(2));
    let inner = c(5).mul(&b.pow(2)).sub(&a.mul(&cc));
    c(-1728)
        .mul(&b.pow(5))
        .add(&c(720).mul(&a).mul(&b.pow(3)).mul(&cc))
        .sub(&c(80).mul(&a.pow(2)).mul(&b).mul(&cc.pow(2)))
        .add(&c(64).mul(&a.pow(3)).mul(&inner.pow(2)))
        .add(&cc.pow(3))
}

/// Generators `A, B, C, D` of weights 2, 6, 10, 15 and the relation
/// `144D² − Δ(A,B,C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularRingData {
    pub weights: [u32; 4],
    pub relation: LaurentPoly,
}

impl ModularRingData {
    pub fn builtin() -> Self {
        let delta4 = LaurentPoly::from_terms(
            4,
            delta_abc().terms().iter().map(|(e, c)| {
                let mut e = e.clone();
                e.push(0);
                (e, c.clone())
            }),
        )
        .expect("arity");
        let d2 = LaurentPoly::monomial(vec![0, 0, 0, 2], rat(144, 1));
        ModularRingData { weights: [2, 6, 10, 15], relation: d2.sub(&delta4) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub expected: i64,
    /// `(exponent, coefficient, weighted degree)` per monomial.
    pub monomials: Vec<(Vec<i64>, BigRat, i64)>,
}

impl DegreeReport {
    pub fn passed(&self) -> bool {
        !self.monomials.is_empty() && self.monomials.iter().all(|m| m.2 == self.expected)
    }
}

pub fn hilbert_relation_degree_check(r: &ModularRingData) -> DegreeReport {
    let monomials = r
        .relation
        .terms()
        .iter()
        .map(|(e, c)| (e.clone(), c.clone(), weighted_degree(e, &r.weights)))
        .collect();
    DegreeReport { expected: 30, monomials }
}

/// `(λ, μ) = (x(y−1)/27, y(x−1)/27)`, i.e. `−27λ = x(1−y)`, `−27μ = y(1−x)`.
pub fn lambda_mu_from_xy(x: Complex64, y: Complex64) -> (Complex64, Complex64) {
    (x * (y - 1.0) / 27.0, y * (x - 1.0) / 27.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BranchEval {
    pub gale_point: Vec<BigRat>,
    pub lambda_mu: (BigRat, BigRat),
    pub reduced_discriminant: BigRat,
    pub image: WeightedPoint<BigRat>,
    /// `Δ(1, B, C)` at the image.
    pub delta: BigRat,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BranchReport {
    pub evaluations: Vec<BranchEval>,
    pub skipped: usize,
}

impl BranchReport {
    pub fn all_on_branch(&self) -> bool {
        !self.evaluations.is_empty() && self.evaluations.iter().all(|e| e.delta.is_zero() && e.reduced_discriminant.is_zero())
    }
}

/// Pushes Horn–Kapranov points of the A0 discriminant through the period
/// map and evaluates `Δ(1, B, C)` exactly.
pub fn branch_relation_report(samples: &[Vec<BigRat>]) -> BranchReport {
    let rows: Vec<Vec<BigInt>> = gale_rows(Case::A0);
    let red = reduced_discriminant(Case::A0);
    let delta = delta_abc();
    let mut report = BranchReport::default();
    for s in samples {
        let Ok(lm) = horn_kapranov_rows(&rows, s) else {
            report.skipped += 1;
            continue;
        };
        let Ok(image) = period_map_a0(&lm[0], &lm[1]) else {
            report.skipped += 1;
            continue;
        };
        let rd = red.eval(&lm).expect("polynomial");
        let d = delta.eval(&image.coords).expect("polynomial");
        report.evaluations.push(BranchEval {
            gale_point: s.clone(),
            lambda_mu: (lm[0].clone(), lm[1].clone()),
            reduced_discriminant: rd,
            image,
            delta: d,
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_values() {
        let p = period_map_a0(&rat(1, 2), &rat(1, 1)).unwrap();
        assert_eq!(p.coords, vec![rat(1, 1), rat(800, 1), rat(-3_200_000, 1)]);
        let cusp = period_map_a0(&rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(cusp.coords, vec![rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(period_map_a0(&rat(1, 4), &rat(3, 1)), Err(PeriodError::IndeterminacyCenter));
    }

    #[test]
    fn equivalence() {
        let p = WeightedPoint::new(vec![rat(1, 1), rat(2, 1), rat(3, 1)], vec![1, 3, 5]).unwrap();
        assert!(p.equivalent(&p.rescale(&rat(-7, 3))));
        let q = WeightedPoint::new(vec![rat(1, 1), rat(2, 1), rat(4, 1)], vec![1, 3, 5]).unwrap();
        assert!(!p.equivalent(&q));
        assert_eq!(WeightedPoint::new(vec![rat(0, 1)], vec![1]), Err(PeriodError::ZeroPoint));
    }

    #[test]
    fn homogeneity_degrees() {
        let m = period_map_a0_homogeneous();
        assert_eq!(wproj_homogeneity_check(&m, &[1, 2, 5], &[1, 3, 5]), Some(2));
        let id: Vec<LaurentPoly> = (0..3).map(|i| LaurentPoly::var(3, i)).collect();
        assert_eq!(wproj_homogeneity_check(&id, &[1, 3, 5], &[1, 3, 5]), Some(1));
        let mut bad = m.clone();
        bad[2] = LaurentPoly::monomial(vec![1, 0, 1], rat(-3125, 1));
        assert_eq!(wproj_homogeneity_check(&bad, &[1, 2, 5], &[1, 3, 5]), None);
    }

    #[test]
    fn relation_degrees() {
        let r = hilbert_relation_degree_check(&ModularRingData::builtin());
        assert!(r.passed());
        assert!(r.monomials.iter().any(|(e, c, _)| e == &vec![0, 5, 0, 0] && *c == rat(1728, 1)));
        assert!(r.monomials.iter().any(|(e, c, _)| e == &vec![0, 0, 0, 2] && *c == rat(144, 1)));
    }
}
