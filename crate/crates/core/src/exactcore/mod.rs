//! Exact scalars and dense integer matrices.
//!
//! Integers are `num_bigint::BigInt` and rationals are `num_rational::BigRational`,
//! which is always kept reduced with a positive denominator.

mod hermite;
mod matrix;
mod quad5;
mod signature;
mod snf;

pub use hermite::{
    column_echelon, hermite_rows, integer_kernel, row_echelon, same_lattice, saturate_rows,
    ColumnEchelon,
};
pub use matrix::{IntMat, Matrix, RatMat};
pub use quad5::Quad5;
pub use signature::{signature_of_form, Signature};
pub use snf::{smith_normal_form, Snf};

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type BigRat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("not symmetric")]
    NotSymmetric,
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(&'static str),
    #[error("matrix is singular")]
    Singular,
}

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: &BigInt) -> BigRat {
    BigRat::from_integer(v.clone())
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// gcd of all entries; zero for the empty or all-zero slice.
pub fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn is_primitive(v: &[BigInt]) -> bool {
    gcd_all(v).is_one()
}

/// Divides by the content and makes the first nonzero entry positive.
pub fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let g = gcd_all(v);
    if g.is_zero() {
        return v.to_vec();
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| x / &g).collect();
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in out.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    out
}

/// Clears denominators of a rational vector, returning the primitive integer
/// vector on the same ray (sign preserved).
pub fn clear_denominators(v: &[BigRat]) -> Vec<BigInt> {
    let l = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|x| (x * rat_int(&l)).to_integer()).collect();
    let g = gcd_all(&scaled);
    if g.is_zero() {
        scaled
    } else {
        scaled.into_iter().map(|x| x / &g).collect()
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Rising factorial (x)_n.
pub fn pochhammer(x: &BigRat, n: u64) -> BigRat {
    let mut acc = BigRat::one();
    let mut cur = x.clone();
    for _ in 0..n {
        acc *= &cur;
        cur += BigRat::one();
    }
    acc
}

/// Harmonic number H_n as an exact rational.
pub fn harmonic(n: u64) -> BigRat {
    (1..=n).fold(BigRat::zero(), |acc, k| acc + rat(1, k as i64))
}

pub fn rat_to_f64(x: &BigRat) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn rat_pow(x: &BigRat, e: i64) -> Result<BigRat, ExactError> {
    if e >= 0 {
        Ok(num_traits::pow(x.clone(), e as usize))
    } else if x.is_zero() {
        Err(ExactError::DivisionByZero)
    } else {
        Ok(num_traits::pow(x.recip(), (-e) as usize))
    }
}
