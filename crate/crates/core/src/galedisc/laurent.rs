//! Sparse Laurent polynomials with rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::GaleError;
use crate::exactcore::{rat_pow, rat_to_f64, BigRat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigRat>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRat) -> Self {
        LaurentPoly::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exp: Vec<i64>, c: BigRat) -> Self {
        let mut p = LaurentPoly::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// The `i`-th variable.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        LaurentPoly::monomial(e, BigRat::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, BigRat)>) -> Result<Self, GaleError> {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(GaleError::Arity { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Integer coefficients, handy for registered polynomials.
    pub fn from_int_terms(nvars: usize, terms: &[(&[i64], i64)]) -> Self {
        LaurentPoly::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), BigRat::from_integer((*c).into()))))
            .expect("consistent arity")
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: BigRat) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp.clone()).or_insert_with(BigRat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigRat> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &[i64]) -> BigRat {
        self.terms.get(exp).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        self.scale(&-BigRat::one())
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &BigRat) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::constant(self.nvars, BigRat::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone());
        }
        out
    }

    pub fn total_degree(exp: &[i64]) -> i64 {
        exp.iter().sum()
    }

    /// Leading exponent in graded-lex order (higher total degree first, then
    /// lexicographically larger with the first variable most significant).
    pub fn leading_exponent(&self) -> Option<&Vec<i64>> {
        self.terms.keys().max_by(|a, b| Self::total_degree(a).cmp(&Self::total_degree(b)).then_with(|| a.cmp(b)))
    }

    /// Clears denominators, divides by the content and makes the graded-lex
    /// leading coefficient positive.
    pub fn primitive(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.terms.values().map(|c| (c * BigRat::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let mut scale = BigRat::new(l, g);
        let lead = self.leading_exponent().unwrap();
        if self.terms[lead].is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Exact evaluation.
    pub fn eval(&self, point: &[BigRat]) -> Result<BigRat, GaleError> {
        if point.len() != self.nvars {
            return Err(GaleError::Arity { expected: self.nvars, got: point.len() });
        }
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k != 0 {
                    m *= rat_pow(x, k).map_err(|_| GaleError::Pole)?;
                }
            }
            acc += m;
        }
        Ok(acc)
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Result<Complex64, GaleError> {
        if point.len() != self.nvars {
            return Err(GaleError::Arity { expected: self.nvars, got: point.len() });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut m = Complex64::new(rat_to_f64(c), 0.0);
            for (x, &k) in point.iter().zip(e) {
                if k < 0 && *x == Complex64::new(0.0, 0.0) {
                    return Err(GaleError::Pole);
                }
                if k != 0 {
                    m *= x.powi(k as i32);
                }
            }
            acc += m;
        }
        Ok(acc)
    }

    /// Formats with the given variable names.
    pub fn display_with(&self, names: &[&str]) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by(|a, b| Self::total_degree(b).cmp(&Self::total_degree(a)).then_with(|| b.cmp(a)));
        for (k, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if k == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(i, &p)| if p == 1 { String::from(names[i]) } else { alloc::format!("{}^{}", names[i], p) })
                .collect();
            if mono.is_empty() {
                let _ = write!(out, "{mag}");
            } else if mag.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                let _ = write!(out, "{mag}*{}", mono.join("*"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| alloc::format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        f.write_str(&self.display_with(&refs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    #[test]
    fn arithmetic_and_evaluation() {
        let x = LaurentPoly::var(2, 0);
        let y = LaurentPoly::var(2, 1);
        let p = x.add(&y).pow(2).sub(&x.mul(&y).scale(&rat(2, 1)));
        assert_eq!(p, x.pow(2).add(&y.pow(2)));
        let q = LaurentPoly::monomial(vec![-1, 2], rat(3, 1));
        assert_eq!(q.eval(&[rat(2, 1), rat(1, 2)]).unwrap(), rat(3, 8));
        assert_eq!(q.eval(&[rat(0, 1), rat(1, 1)]), Err(GaleError::Pole));
        let c = q.eval_complex(&[Complex64::new(2.0, 0.0), Complex64::new(0.5, 0.0)]).unwrap();
        assert!((c.re - 0.375).abs() < 1e-15);
    }

    #[test]
    fn evaluation_respects_products() {
        let p = LaurentPoly::from_int_terms(2, &[(&[1, -1], 2), (&[0, 2], -1)]);
        let q = LaurentPoly::from_int_terms(2, &[(&[2, 0], 1), (&[0, 0], 5)]);
        let pt = [rat(3, 2), rat(-2, 5)];
        assert_eq!(p.mul(&q).eval(&pt).unwrap(), p.eval(&pt).unwrap() * q.eval(&pt).unwrap());
    }

    #[test]
    fn primitive_normalization() {
        let p = LaurentPoly::from_terms(1, [(vec![2], rat(-1, 2)), (vec![0], rat(3, 4))]).unwrap();
        let q = p.primitive();
        assert_eq!(q, LaurentPoly::from_int_terms(1, &[(&[2], 2), (&[0], -3)]));
        assert_eq!(q.display_with(&["t"]), "2*t^2 - 3");
    }
}
