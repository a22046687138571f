//! The scalar field: rationals, or rational functions in a symbolic `q`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::field::Field;
use super::ratfunc::{QPoly, RatFunc};

/// An element of `Q` or of `Q(q)`.
///
/// Constant rational functions are always stored as `Rat`, so a value has
/// exactly one representation and the two backends agree on `Q`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Func(RatFunc),
}

/// Which field a computation lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Backend {
    Rational,
    Symbolic,
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(n.into()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Scalar::Rat(BigRational::new(n.into(), d.into()))
    }

    /// The symbolic indeterminate `q`.
    pub fn q() -> Self {
        Scalar::Func(RatFunc::var())
    }

    pub fn from_ratfunc(f: RatFunc) -> Self {
        match f.as_constant() {
            Some(c) => Scalar::Rat(c),
            None => Scalar::Func(f),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self::from_ratfunc(RatFunc::from_poly(p))
    }

    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Rat(_) => Backend::Rational,
            Scalar::Func(_) => Backend::Symbolic,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Func(_) => None,
        }
    }

    fn to_ratfunc(&self) -> RatFunc {
        match self {
            Scalar::Rat(r) => RatFunc::constant(r.clone()),
            Scalar::Func(f) => f.clone(),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Rat(r) if r.is_zero() => None,
            Scalar::Rat(r) => Some(Scalar::Rat(r.recip())),
            Scalar::Func(f) => f.inv().map(Scalar::from_ratfunc),
        }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut b = base;
        let mut acc = Scalar::int(1);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        acc
    }

    /// Quantum integer `[n]_q = 1 + q + ... + q^(n-1)`, extended by
    /// `[-n]_q = -q^(-n) [n]_q`.
    pub fn quantum_int(q: &Scalar, n: i64) -> Scalar {
        if n >= 0 {
            let mut acc = Scalar::int(0);
            let mut p = Scalar::int(1);
            for _ in 0..n {
                acc = &acc + &p;
                p = &p * q;
            }
            acc
        } else {
            let pos = Scalar::quantum_int(q, -n);
            -(&q.pow(n) * &pos)
        }
    }

    /// The nonnegative rational square root, when it exists.
    pub fn rational_sqrt(&self) -> Option<Scalar> {
        let r = self.as_rational()?;
        if r.is_negative() {
            return None;
        }
        let root = |n: &BigInt| {
            let s = n.sqrt();
            (&s * &s == *n).then_some(s)
        };
        Some(Scalar::Rat(BigRational::new(root(r.numer())?, root(r.denom())?)))
    }

    /// `[n]_q!`
    pub fn quantum_factorial(q: &Scalar, n: i64) -> Scalar {
        (1..=n).fold(Scalar::int(1), |acc, k| &acc * &Scalar::quantum_int(q, k))
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }
    fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Func(_) => false,
        }
    }
    fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Func(_) => false,
        }
    }
    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => Scalar::from_ratfunc(self.to_ratfunc().add(&other.to_ratfunc())),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => Scalar::from_ratfunc(self.to_ratfunc().sub(&other.to_ratfunc())),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Func(f)) | (Scalar::Func(f), Scalar::Rat(a)) => {
                if a.is_zero() {
                    Scalar::Rat(BigRational::zero())
                } else {
                    Scalar::Func(RatFunc::new(f.numer().scale(a), f.denom().clone()))
                }
            }
            (Scalar::Func(f), Scalar::Func(g)) => Scalar::from_ratfunc(f.mul(g)),
        }
    }
    fn neg(&self) -> Self {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Func(f) => Scalar::Func(f.neg()),
        }
    }
    fn div(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => {
                assert!(!b.is_zero(), "division by zero");
                Scalar::Rat(a / b)
            }
            _ => Scalar::from_ratfunc(self.to_ratfunc().div(&other.to_ratfunc())),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                Field::$m(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                Field::$m(&self, &rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Field::neg(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Field::neg(self)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if num_traits::One::is_one(r.denom()) {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders `c0 + c1*q + c2*q^2 ...`, skipping zero coefficients.
pub fn fmt_poly(p: &QPoly) -> String {
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => String::from("q"),
            _ => format!("q^{i}"),
        };
        if i == 0 {
            out.push_str(&fmt_rational(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&fmt_rational(&a));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => f.write_str(&fmt_rational(r)),
            Scalar::Func(rf) => write!(f, "({})/({})", fmt_poly(rf.numer()), fmt_poly(rf.denom())),
        }
    }
}

/// Failure to parse a scalar string.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse scalar: {}", self.0)
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ParseScalarError> {
    let err = || ParseScalarError(String::from(s));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| err())?;
            let d = BigInt::from_str(d).map_err(|_| err())?;
            if num_traits::Zero::is_zero(&d) {
                return Err(err());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| err())?)),
    }
}

fn parse_term(t: &str) -> Result<(BigRational, usize), ParseScalarError> {
    let err = || ParseScalarError(String::from(t));
    let (coeff, mono) = match t.find('q') {
        None => return Ok((parse_rational(t)?, 0)),
        Some(pos) => {
            let head = &t[..pos];
            let coeff = match head {
                "" => BigRational::one(),
                _ => parse_rational(head.strip_suffix('*').ok_or_else(err)?)?,
            };
            (coeff, &t[pos + 1..])
        }
    };
    let deg = match mono {
        "" => 1,
        _ => mono.strip_prefix('^').ok_or_else(err)?.parse::<usize>().map_err(|_| err())?,
    };
    Ok((coeff, deg))
}

/// Parses `c0 + c1*q - c2*q^2 ...` (whitespace ignored).
pub fn parse_poly(s: &str) -> Result<QPoly, ParseScalarError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ParseScalarError(String::from(s)));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push((neg, core::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && i == 0 {
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    terms.push((neg, cur));
    let mut p = QPoly::zero();
    for (neg, t) in terms {
        if t.is_empty() {
            return Err(ParseScalarError(String::from(s)));
        }
        let (c, deg) = parse_term(&t)?;
        let c = if neg { -c } else { c };
        p = p.add(&QPoly::monomial(c, deg));
    }
    Ok(p)
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `a`, `a/b`, a polynomial in `q`, or `(poly)/(poly)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let close = rest.find(')').ok_or_else(|| ParseScalarError(String::from(s)))?;
            let num = parse_poly(&rest[..close])?;
            let tail = rest[close + 1..].trim();
            let den = match tail.strip_prefix('/') {
                None if tail.is_empty() => QPoly::one(),
                None => return Err(ParseScalarError(String::from(s))),
                Some(d) => {
                    let d = d.trim();
                    let inner = d.strip_prefix('(').and_then(|d| d.strip_suffix(')')).ok_or_else(|| ParseScalarError(String::from(s)))?;
                    parse_poly(inner)?
                }
            };
            if den.is_zero() {
                return Err(ParseScalarError(String::from(s)));
            }
            return Ok(Scalar::from_ratfunc(RatFunc::new(num, den)));
        }
        if t.contains('q') {
            return Ok(Scalar::from_poly(parse_poly(t)?));
        }
        parse_rational(t).map(Scalar::Rat)
    }
}
