#![allow(dead_code)]

use qhom_core::arith::{Field, Scalar, Subspace};
use qhom_core::operators::{make_standard, make_super, HeckeOp};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn p2() -> Scalar {
    Scalar::int(2)
}

pub fn q4() -> Scalar {
    Scalar::int(4)
}

pub fn standard(d: usize) -> HeckeOp {
    make_standard(d, &p2()).unwrap()
}

pub fn super_op(r: usize, s: usize) -> HeckeOp {
    make_super(r, s, &p2()).unwrap()
}

/// A random integer combination of the basis of `s`.
pub fn random_element(s: &Subspace, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); s.ambient_dim()];
    for row in s.basis_rows() {
        let c = Scalar::int(rng.gen_range(-3..=3));
        if c.is_zero() {
            continue;
        }
        for (x, y) in out.iter_mut().zip(row) {
            *x = &*x + &(&c * y);
        }
    }
    out
}

/// `1 + q + … + q^{n−1}` computed by plain summation.
pub fn q_int(q: &Scalar, n: usize) -> Scalar {
    let mut acc = Scalar::zero();
    let mut pw = Scalar::one();
    for _ in 0..n {
        acc = &acc + &pw;
        pw = &pw * q;
    }
    acc
}

pub fn q_factorial(q: &Scalar, n: usize) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, k| &acc * &q_int(q, k))
}

pub mod suites;
