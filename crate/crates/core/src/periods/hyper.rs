use num_complex::Complex64;
use num_traits::{Signed, Zero};

use super::PeriodError;
use crate::exactcore::{rat_to_f64, BigRat};

pub const DEFAULT_TOL: f64 = 1e-10;
const MAX_TERMS: usize = 1_000_000;
const STABLE: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypValue {
    pub value: Complex64,
    pub terms: usize,
}

fn check_lower(c: &BigRat) -> Result<f64, PeriodError> {
    if c.is_integer() && !c.is_positive() {
        return Err(PeriodError::PoleParameter);
    }
    Ok(rat_to_f64(c))
}

/// `₂F₁(a, b; c; x)` by direct summation for `|x| < 1`.
///
/// Stops once three consecutive terms are below `tol` relative to the
/// partial sum.
pub fn gauss_2f1(a: &BigRat, b: &BigRat, c: &BigRat, x: Complex64, tol: f64) -> Result<HypValue, PeriodError> {
    let d = gauss_2f1_derivatives(a, b, c, x, tol, 0)?;
    Ok(HypValue { value: d.0[0], terms: d.1 })
}

/// Value and the first `order ≤ 2` derivatives of `₂F₁(a, b; c; x)`,
/// differentiating the series termwise. Returns `([u, u′, u″], terms)`.
pub fn gauss_2f1_derivatives(
    a: &BigRat,
    b: &BigRat,
    c: &BigRat,
    x: Complex64,
    tol: f64,
    order: usize,
) -> Result<([Complex64; 3], usize), PeriodError> {
    let cf = check_lower(c)?;
    if x.norm() >= 1.0 {
        return Err(PeriodError::OutsideRadius);
    }
    let (af, bf) = (rat_to_f64(a), rat_to_f64(b));
    let zero = Complex64::zero();
    let mut sums = [zero; 3];
    // coefficient c_n, and x^{n}, x^{n-1}, x^{n-2}
    let mut coef = 1.0f64;
    let mut stable = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let terms = [
            x.powu(n as u32) * coef,
            if n >= 1 { x.powu(n as u32 - 1) * (coef * nf) } else { zero },
            if n >= 2 { x.powu(n as u32 - 2) * (coef * nf * (nf - 1.0)) } else { zero },
        ];
        let mut small = true;
        for k in 0..=order.min(2) {
            sums[k] += terms[k];
            if terms[k].norm() > tol * sums[k].norm() && !(terms[k].is_zero() && sums[k].is_zero()) {
                small = false;
            }
        }
        stable = if small && n >= 2 { stable + 1 } else { 0 };
        if stable >= STABLE {
            return Ok((sums, n + 1));
        }
        coef *= (af + nf) * (bf + nf) / ((cf + nf) * (nf + 1.0));
    }
    Err(PeriodError::NotConverged(MAX_TERMS))
}

/// Appell `F₄(a, b; c₁, c₂; z, w)` for `√|z| + √|w| < 1`, summed by
/// shells of constant total degree.
pub fn appell_f4(
    a: &BigRat,
    b: &BigRat,
    c1: &BigRat,
    c2: &BigRat,
    z: Complex64,
    w: Complex64,
    tol: f64,
) -> Result<HypValue, PeriodError> {
    let (c1f, c2f) = (check_lower(c1)?, check_lower(c2)?);
    if libm::sqrt(z.norm()) + libm::sqrt(w.norm()) >= 1.0 {
        return Err(PeriodError::OutsideRadius);
    }
    let (af, bf) = (rat_to_f64(a), rat_to_f64(b));
    let mut shell: alloc::vec::Vec<Complex64> = alloc::vec![Complex64::new(1.0, 0.0)];
    let mut sum = Complex64::new(1.0, 0.0);
    let mut terms = 1;
    let mut stable = 0;
    for s in 1..MAX_TERMS {
        let sf = s as f64;
        let g = (af + sf - 1.0) * (bf + sf - 1.0);
        let mut next = alloc::vec::Vec::with_capacity(s + 1);
        // t(0, s) from t(0, s-1)
        next.push(shell[0] * w * (g / ((c2f + sf - 1.0) * sf)));
        for n in 1..=s {
            let nf = n as f64;
            next.push(shell[n - 1] * z * (g / ((c1f + nf - 1.0) * nf)));
        }
        let shell_sum: Complex64 = next.iter().sum();
        let shell_max = next.iter().map(|t| t.norm()).fold(0.0, f64::max);
        sum += shell_sum;
        terms += next.len();
        stable = if shell_max <= tol * sum.norm() { stable + 1 } else { 0 };
        if stable >= STABLE {
            return Ok(HypValue { value: sum, terms });
        }
        shell = next;
    }
    Err(PeriodError::NotConverged(MAX_TERMS))
}
