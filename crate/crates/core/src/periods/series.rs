use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use super::PeriodError;
use crate::exactcore::{factorial, pochhammer, rat_to_f64, BigRat};

/// A power series in two variables truncated at total degree
/// `max_total_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries2 {
    max_total_degree: u32,
    coeffs: BTreeMap<(u32, u32), BigRat>,
}

impl TruncSeries2 {
    pub fn zero(max_total_degree: u32) -> Self {
        TruncSeries2 { max_total_degree, coeffs: BTreeMap::new() }
    }

    pub fn constant(max_total_degree: u32, c: BigRat) -> Self {
        let mut s = Self::zero(max_total_degree);
        s.set(0, 0, c);
        s
    }

    pub fn from_fn(max_total_degree: u32, mut f: impl FnMut(u32, u32) -> BigRat) -> Self {
        let mut s = Self::zero(max_total_degree);
        for t in 0..=max_total_degree {
            for n in 0..=t {
                s.set(n, t - n, f(n, t - n));
            }
        }
        s
    }

    pub fn max_total_degree(&self) -> u32 {
        self.max_total_degree
    }

    /// Coefficient of `x^n y^m`; zero when not stored.
    pub fn get(&self, n: u32, m: u32) -> BigRat {
        self.coeffs.get(&(n, m)).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Terms beyond the truncation degree are dropped.
    pub fn set(&mut self, n: u32, m: u32, c: BigRat) {
        if n + m > self.max_total_degree {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&(n, m));
        } else {
            self.coeffs.insert((n, m), c);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), BigRat> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut s = Self::zero(self.max_total_degree.min(other.max_total_degree));
        for t in [self, other] {
            for (&(n, m), c) in &t.coeffs {
                let v = s.get(n, m) + c;
                s.set(n, m, v);
            }
        }
        s
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        let mut s = Self::zero(self.max_total_degree);
        for (&(n, m), v) in &self.coeffs {
            s.set(n, m, v * c);
        }
        s
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut s = Self::zero(self.max_total_degree.min(other.max_total_degree));
        for (&(n1, m1), a) in &self.coeffs {
            for (&(n2, m2), b) in &other.coeffs {
                if n1 + n2 + m1 + m2 <= s.max_total_degree {
                    let v = s.get(n1 + n2, m1 + m2) + a * b;
                    s.set(n1 + n2, m1 + m2, v);
                }
            }
        }
        s
    }

    /// Multiplicative inverse; `None` when the constant term vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.get(0, 0);
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let mut out = Self::zero(self.max_total_degree);
        out.set(0, 0, inv0.clone());
        for t in 1..=self.max_total_degree {
            for n in 0..=t {
                let m = t - n;
                let mut acc = BigRat::zero();
                for (&(i, j), a) in &self.coeffs {
                    if (i, j) != (0, 0) && i <= n && j <= m {
                        acc += a * out.get(n - i, m - j);
                    }
                }
                out.set(n, m, -acc * &inv0);
            }
        }
        Some(out)
    }

    /// Multiplies the coefficient of `x^n y^m` by `(−1)^{w_1 n + w_2 m}`.
    pub fn sign_twist(&self, w: (i64, i64)) -> Self {
        let mut s = self.clone();
        for (&(n, m), c) in self.coeffs.iter() {
            if (w.0 * n as i64 + w.1 * m as i64).rem_euclid(2) == 1 {
                s.set(n, m, -c);
            }
        }
        s
    }

    /// Exchanges the two variables.
    pub fn swap(&self) -> Self {
        let mut s = Self::zero(self.max_total_degree);
        for (&(n, m), c) in &self.coeffs {
            s.set(m, n, c.clone());
        }
        s
    }

    pub fn truncate(&self, max_total_degree: u32) -> Self {
        let mut s = Self::zero(max_total_degree);
        for (&(n, m), c) in &self.coeffs {
            s.set(n, m, c.clone());
        }
        s
    }

    /// Value of the truncated polynomial.
    pub fn eval_complex(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .map(|(&(n, m), c)| x.powu(n) * y.powu(m) * rat_to_f64(c))
            .fold(Complex64::new(0.0, 0.0), |a, b| a + b)
    }
}

/// `η₁ = Σ (−1)^{n+m} (3n+3m)! / ((n!)² (m!)² (n+m)!) λⁿ μᵐ`.
pub fn eta1_coeffs(max_deg: u32) -> TruncSeries2 {
    TruncSeries2::from_fn(max_deg, |n, m| {
        let (n, m) = (n as u64, m as u64);
        let num = factorial(3 * (n + m));
        let den = factorial(n).pow(2) * factorial(m).pow(2) * factorial(n + m);
        let v = BigRat::new(num, den);
        if (n + m) % 2 == 1 { -v } else { v }
    })
}

/// Exact coefficients of `F₄(a, b; c₁, c₂; s·x, t·y)`.
pub fn appell_f4_coeffs(a: &BigRat, b: &BigRat, c1: &BigRat, c2: &BigRat, s: &BigRat, t: &BigRat, max_deg: u32) -> TruncSeries2 {
    TruncSeries2::from_fn(max_deg, |n, m| {
        let k = (n + m) as u64;
        let den = pochhammer(c1, n as u64) * pochhammer(c2, m as u64) * BigRat::from_integer(factorial(n as u64) * factorial(m as u64));
        if den.is_zero() {
            return BigRat::zero();
        }
        pochhammer(a, k) * pochhammer(b, k) / den * num_traits::pow(s.clone(), n as usize) * num_traits::pow(t.clone(), m as usize)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkzFailure {
    pub row: usize,
    pub at: (u32, u32),
    pub lhs: BigRat,
    pub rhs: BigRat,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GkzReport {
    pub checked: usize,
    pub failure: Option<GkzFailure>,
}

impl GkzReport {
    pub fn passed(&self) -> bool {
        self.checked > 0 && self.failure.is_none()
    }
}

fn falling(x: &BigInt, k: i64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (x - i))
}

/// Checks the two-term recurrences imposed on the coefficients `A(d)` of
/// `Σ_d A(d) a^{ℓ·d + γ}`, `γ = −e₀`, by the box operators
/// `Π_{ℓ_j>0} ∂_j^{ℓ_j} − Π_{ℓ_j<0} ∂_j^{−ℓ_j}` of each row `ℓ`:
///
/// `A(d + e_p) Π_{ℓ_j>0} (ℓ·(d+e_p) + γ)_j^{\underline{ℓ_j}} = A(d) Π_{ℓ_j<0} (ℓ·d + γ)_j^{\underline{−ℓ_j}}`.
///
/// Every `d` with `|d| < max_total_degree` is tested.
pub fn gkz_recurrence_check(rows: &[Vec<BigInt>], s: &TruncSeries2) -> Result<GkzReport, PeriodError> {
    if rows.len() != 2 {
        return Err(PeriodError::Gale(crate::galedisc::GaleError::Arity { expected: 2, got: rows.len() }));
    }
    let npts = rows[0].len();
    let expo = |d: (i64, i64), j: usize| -> BigInt {
        let g = if j == 0 { -1 } else { 0 };
        &rows[0][j] * d.0 + &rows[1][j] * d.1 + g
    };
    let mut report = GkzReport::default();
    for t in 0..s.max_total_degree() {
        for n in 0..=t {
            let m = t - n;
            for (p, row) in rows.iter().enumerate() {
                let step = if p == 0 { (n + 1, m) } else { (n, m + 1) };
                let d = (n as i64, m as i64);
                let d1 = (step.0 as i64, step.1 as i64);
                let mut lhs = s.get(step.0, step.1);
                let mut rhs = s.get(n, m);
                for j in 0..npts {
                    let l = row[j].to_i64().expect("small row entry");
                    if l > 0 {
                        lhs *= BigRat::from_integer(falling(&expo(d1, j), l));
                    } else if l < 0 {
                        rhs *= BigRat::from_integer(falling(&expo(d, j), -l));
                    }
                }
                report.checked += 1;
                if lhs != rhs {
                    report.failure = Some(GkzFailure { row: p, at: (n, m), lhs, rhs });
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}
