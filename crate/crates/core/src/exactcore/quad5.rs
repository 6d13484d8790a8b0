use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat, BigRat, ExactError};

/// Element `a + b·√5` of Q(√5).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quad5 {
    pub a: BigRat,
    pub b: BigRat,
}

impl Quad5 {
    pub fn new(a: BigRat, b: BigRat) -> Self {
        Quad5 { a, b }
    }

    pub fn from_rat(a: BigRat) -> Self {
        Quad5 { a, b: BigRat::zero() }
    }

    pub fn zero() -> Self {
        Quad5::from_rat(BigRat::zero())
    }

    pub fn one() -> Self {
        Quad5::from_rat(BigRat::one())
    }

    /// The golden ratio (1 + √5)/2.
    pub fn epsilon() -> Self {
        Quad5::new(rat(1, 2), rat(1, 2))
    }

    pub fn sqrt5() -> Self {
        Quad5::new(BigRat::zero(), BigRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quad5::new(self.a.clone(), -self.b.clone())
    }

    pub fn norm(&self) -> BigRat {
        &self.a * &self.a - BigRat::from_integer(5.into()) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let c = self.conj();
        Ok(Quad5::new(c.a / &n, c.b / &n))
    }

    pub fn checked_div(&self, other: &Quad5) -> Result<Self, ExactError> {
        Ok(self * &other.inverse()?)
    }

    pub fn to_f64(&self) -> f64 {
        super::rat_to_f64(&self.a) + super::rat_to_f64(&self.b) * libm::sqrt(5.0)
    }
}

impl Add for &Quad5 {
    type Output = Quad5;
    fn add(self, o: &Quad5) -> Quad5 {
        Quad5::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &Quad5 {
    type Output = Quad5;
    fn sub(self, o: &Quad5) -> Quad5 {
        Quad5::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &Quad5 {
    type Output = Quad5;
    fn mul(self, o: &Quad5) -> Quad5 {
        let five = BigRat::from_integer(5.into());
        Quad5::new(
            &self.a * &o.a + five * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Neg for &Quad5 {
    type Output = Quad5;
    fn neg(self) -> Quad5 {
        Quad5::new(-self.a.clone(), -self.b.clone())
    }
}

impl Add for Quad5 {
    type Output = Quad5;
    fn add(self, o: Quad5) -> Quad5 {
        &self + &o
    }
}

impl Sub for Quad5 {
    type Output = Quad5;
    fn sub(self, o: Quad5) -> Quad5 {
        &self - &o
    }
}

impl Mul for Quad5 {
    type Output = Quad5;
    fn mul(self, o: Quad5) -> Quad5 {
        &self * &o
    }
}

impl Neg for Quad5 {
    type Output = Quad5;
    fn neg(self) -> Quad5 {
        -&self
    }
}

impl fmt::Display for Quad5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt5", self.a, self.b)
    }
}
