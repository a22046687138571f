//! Rational functions in one indeterminate `q` over the rationals.

use num_rational::BigRational;

use super::field::Field;
use super::poly::Poly;

pub type QPoly = Poly<BigRational>;

/// A fraction `num / den` kept in canonical form: `den` is monic and
/// coprime to `num`, and zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        let lead = den.lead();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = <BigRational as Field>::one().div(&lead);
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc { num: p, den: QPoly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    /// The indeterminate `q`.
    pub fn var() -> Self {
        Self::from_poly(QPoly::x())
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Value at a rational point, or `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if Field::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(x).div(&d))
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc { num: QPoly::zero(), den: QPoly::one() }
    }
    fn one() -> Self {
        RatFunc { num: QPoly::one(), den: QPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let b = self.den.div_exact(&g);
        let d = other.den.div_exact(&g);
        let num = self.num.mul(&d).add(&other.num.mul(&b));
        Self::new(num, b.mul(&other.den))
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = other.den.div_exact(&g1);
        let n2 = other.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lead = den.lead();
        let inv = <BigRational as Field>::one().div(&lead);
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero"))
    }
}
