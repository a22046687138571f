//! Minimal polynomials by Krylov iteration and the parameter check.

use alloc::vec::Vec;

use super::field::Field;
use super::matrix::Matrix;
use super::poly::Poly;
use super::scalar::Scalar;
use super::subspace::{unit, Echelon, Subspace};
use crate::error::Error;

pub type ScalarPoly = Poly<Scalar>;

/// Monic polynomial of least degree with `p(m) v = 0`.
fn local_minpoly(m: &Matrix, v: Vec<Scalar>) -> ScalarPoly {
    let n = m.rows();
    let mut krylov = alloc::vec![v];
    let mut ech = Echelon::new(n);
    ech.insert(krylov[0].clone());
    loop {
        let next = m.mul_vec(krylov.last().unwrap());
        let grew = ech.insert(next.clone());
        krylov.push(next);
        if !grew {
            break;
        }
    }
    let k = krylov.len();
    let cols = Matrix::from_fn(n, k, |i, j| krylov[j][i].clone());
    let ker = Subspace::kernel(&cols);
    debug_assert_eq!(ker.dim(), 1);
    Poly::from_coeffs(ker.basis_rows()[0].clone()).monic()
}

/// The minimal polynomial of a square matrix, as the least common multiple
/// of the local minimal polynomials of enough basis vectors to exhaust the
/// space.
pub fn minimal_polynomial(m: &Matrix) -> Result<ScalarPoly, Error> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut acc = ScalarPoly::one();
    let mut seen = Echelon::new(n);
    for j in 0..n {
        let e = unit(n, j);
        if seen.contains(&e) {
            continue;
        }
        let p = local_minpoly(m, e.clone());
        let mut w = e;
        for _ in 0..=p.degree().unwrap_or(0) {
            seen.insert(w.clone());
            w = m.mul_vec(&w);
        }
        acc = acc.lcm(&p);
    }
    Ok(acc)
}

/// Succeeds when `[n]_q != 0` for `2 <= n <= max_degree`.
pub fn field_check_parameter(q: &Scalar, max_degree: usize) -> Result<(), Error> {
    if q.is_zero() {
        return Err(Error::ZeroParameter);
    }
    for n in 2..=max_degree {
        if Scalar::quantum_int(q, n as i64).is_zero() {
            return Err(Error::DegenerateParameter(n));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn small_minimal_polynomials() {
        let p = minimal_polynomial(&Matrix::identity(3)).unwrap();
        assert_eq!(p, Poly::from_coeffs(vec![Scalar::int(-1), Scalar::int(1)]));

        let mut j = Matrix::zeros(2, 2);
        j.set(0, 1, Scalar::int(1));
        assert_eq!(minimal_polynomial(&j).unwrap(), Poly::monomial(Scalar::int(1), 2));

        let mut d = Matrix::zeros(2, 2);
        d.set(1, 1, Scalar::int(3));
        let p = minimal_polynomial(&d).unwrap();
        assert_eq!(p, Poly::from_coeffs(vec![Scalar::int(0), Scalar::int(-3), Scalar::int(1)]));
        assert!(d.eval_poly(p.coeffs()).is_zero());
    }

    #[test]
    fn parameter_check() {
        assert!(field_check_parameter(&Scalar::int(2), 6).is_ok());
        assert_eq!(field_check_parameter(&Scalar::int(-1), 2), Err(Error::DegenerateParameter(2)));
        assert!(field_check_parameter(&Scalar::q(), 8).is_ok());
        assert!(field_check_parameter(&Scalar::int(1), 8).is_ok());
    }

    #[test]
    fn non_square_rejected() {
        assert!(matches!(minimal_polynomial(&Matrix::zeros(2, 3)), Err(Error::NotSquare { .. })));
    }
}
