use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::series::TruncSeries2;
use super::PeriodError;
use crate::cases::gale_rows;
use crate::exactcore::{rat_int, BigRat};
use crate::Case;

/// An element `c0 + c1 p₁ + c2 p₂ + c12 p₁p₂` of `Q[p₁, p₂]/(p₁², p₂²)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilCohClass {
    pub c0: BigRat,
    pub c1: BigRat,
    pub c2: BigRat,
    pub c12: BigRat,
}

impl NilCohClass {
    pub fn new(c0: BigRat, c1: BigRat, c2: BigRat, c12: BigRat) -> Self {
        NilCohClass { c0, c1, c2, c12 }
    }

    pub fn scalar(c: BigRat) -> Self {
        Self::new(c, BigRat::zero(), BigRat::zero(), BigRat::zero())
    }

    pub fn one() -> Self {
        Self::scalar(BigRat::one())
    }

    /// The divisor class `x₁ p₁ + x₂ p₂`.
    pub fn divisor(x1: &BigInt, x2: &BigInt) -> Self {
        Self::new(BigRat::zero(), rat_int(x1), rat_int(x2), BigRat::zero())
    }

    pub fn plus_scalar(&self, k: i64) -> Self {
        let mut s = self.clone();
        s.c0 += BigRat::from_integer(k.into());
        s
    }

    /// `None` when the degree-0 part vanishes.
    pub fn inverse(&self) -> Option<Self> {
        if self.c0.is_zero() {
            return None;
        }
        let inv = self.c0.recip();
        let n1 = &self.c1 * &inv;
        let n2 = &self.c2 * &inv;
        let n12 = &self.c12 * &inv;
        // (1 + n)^{-1} = 1 − n + n², with n² = 2 n1 n2 p₁p₂
        let two = BigRat::from_integer(2.into());
        let c12 = -n12 + two * &n1 * &n2;
        Some(Self::new(inv.clone(), -n1 * &inv, -n2 * &inv, c12 * &inv))
    }
}

impl Add for &NilCohClass {
    type Output = NilCohClass;

    fn add(self, o: &NilCohClass) -> NilCohClass {
        NilCohClass::new(&self.c0 + &o.c0, &self.c1 + &o.c1, &self.c2 + &o.c2, &self.c12 + &o.c12)
    }
}

impl Mul for &NilCohClass {
    type Output = NilCohClass;

    fn mul(self, o: &NilCohClass) -> NilCohClass {
        NilCohClass::new(
            &self.c0 * &o.c0,
            &self.c0 * &o.c1 + &self.c1 * &o.c0,
            &self.c0 * &o.c2 + &self.c2 * &o.c0,
            &self.c0 * &o.c12 + &self.c12 * &o.c0 + &self.c1 * &o.c2 + &self.c2 * &o.c1,
        )
    }
}

/// Degree coordinates for the I-function: every class contributing to `F`
/// or `G` has nonnegative coordinates. For A1 these are the Gale rows; for
/// A0 the second row is replaced by `row₂ − 2·row₁`, i.e. `q₂ = μ/λ²`.
pub fn ifunction_rows(case: Case) -> Vec<Vec<BigInt>> {
    let rows = gale_rows(case);
    match case {
        Case::A1 => rows,
        Case::A0 => {
            let r2 = rows[1].iter().zip(&rows[0]).map(|(b, a)| b - a * 2).collect();
            alloc::vec![rows[0].clone(), r2]
        }
    }
}

/// `⟨d, v⟩` and `⟨d, u_j⟩`, read off the rows with the origin at index 0.
pub fn degree_rows(rows: &[Vec<BigInt>], d: (i64, i64)) -> (i64, Vec<i64>) {
    let pair = |j: usize| (&rows[0][j] * d.0 + &rows[1][j] * d.1).to_i64().expect("small degree");
    let n = rows[0].len();
    (-pair(0), (1..n).map(pair).collect())
}

/// Class-valued coefficient of `q^d` in the I-function with `z = 1`; the
/// `p`-degree records the power of `z^{-1}`.
fn degree_class(rows: &[Vec<BigInt>], d: (i64, i64)) -> Result<NilCohClass, PeriodError> {
    let (dv, du) = degree_rows(rows, d);
    if dv < 0 {
        return Err(PeriodError::NegativeAnticanonicalDegree);
    }
    let v = NilCohClass::divisor(&-&rows[0][0], &-&rows[1][0]);
    let mut acc = NilCohClass::one();
    for k in 1..=dv {
        acc = &acc * &v.plus_scalar(k);
    }
    for (j, &nj) in du.iter().enumerate() {
        let u = NilCohClass::divisor(&rows[0][j + 1], &rows[1][j + 1]);
        if nj >= 0 {
            for k in 1..=nj {
                acc = &acc * &u.plus_scalar(k).inverse().expect("nonzero constant");
            }
        } else {
            for k in nj + 1..=0 {
                acc = &acc * &u.plus_scalar(k);
            }
        }
    }
    Ok(acc)
}

/// Degrees `d` in the box `|d_i| ≤ bound` outside the nonnegative
/// quadrant whose I-function coefficient has a nonzero `1` or `p` part.
pub fn contributions_outside_quadrant(rows: &[Vec<BigInt>], bound: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for d1 in -bound..=bound {
        for d2 in -bound..=bound {
            if d1 >= 0 && d2 >= 0 {
                continue;
            }
            if let Ok(c) = degree_class(rows, (d1, d2)) {
                if !(c.c0.is_zero() && c.c1.is_zero() && c.c2.is_zero()) {
                    out.push((d1, d2));
                }
            }
        }
    }
    out
}

/// `I = F(q) + G(q)/z + O(z^{-2})` up to the `e^{p log q / z}` prefactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IFunction {
    pub rows: Vec<Vec<BigInt>>,
    pub f: TruncSeries2,
    /// Components of `G` along `p₁`, `p₂`.
    pub g: [TruncSeries2; 2],
    /// Non-log part of the mirror map, `ς_i − log q_i = G_i / F`.
    pub mirror: [TruncSeries2; 2],
}

/// `F(q) = Σ_d q^d ⟨d,v⟩! / Π_j ⟨d,u_j⟩!` and the harmonic-number part
/// `G`, summed over `d ≥ 0` with `|d| ≤ max_deg`.
pub fn ifunction_fg(rows: &[Vec<BigInt>], max_deg: u32) -> Result<IFunction, PeriodError> {
    let mut f = TruncSeries2::zero(max_deg);
    let mut g = [TruncSeries2::zero(max_deg), TruncSeries2::zero(max_deg)];
    for t in 0..=max_deg {
        for n in 0..=t {
            let m = t - n;
            let c = degree_class(rows, (n as i64, m as i64))?;
            f.set(n, m, c.c0);
            g[0].set(n, m, c.c1);
            g[1].set(n, m, c.c2);
        }
    }
    let finv = f.inverse().expect("F(0) = 1");
    let mirror = [g[0].mul(&finv), g[1].mul(&finv)];
    Ok(IFunction { rows: rows.to_vec(), f, g, mirror })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{harmonic, rat};

    #[test]
    fn nil_ring() {
        let x = NilCohClass::new(rat(2, 1), rat(1, 1), rat(3, 1), rat(5, 1));
        assert_eq!(&x * &x.inverse().unwrap(), NilCohClass::one());
        let p1 = NilCohClass::divisor(&1.into(), &0.into());
        assert_eq!(&p1 * &p1, NilCohClass::scalar(BigRat::zero()));
        assert!(p1.inverse().is_none());
    }

    #[test]
    fn a1_first_g_coefficient() {
        let i = ifunction_fg(&ifunction_rows(Case::A1), 3).unwrap();
        assert_eq!(i.f.get(1, 0), rat(6, 1));
        // 6 (3 H_3 − 2 H_1 − H_1)
        let expect = rat(6, 1) * (rat(3, 1) * harmonic(3) - rat(3, 1));
        assert_eq!(i.g[0].get(1, 0), expect);
        assert_eq!(i.g[0].get(0, 0), BigRat::zero());
    }

    #[test]
    fn a0_needs_adapted_rows() {
        assert!(contributions_outside_quadrant(&gale_rows(Case::A0), 3).contains(&(-1, 1)));
        assert!(contributions_outside_quadrant(&ifunction_rows(Case::A0), 3).is_empty());
        assert!(contributions_outside_quadrant(&ifunction_rows(Case::A1), 3).is_empty());
    }
}
