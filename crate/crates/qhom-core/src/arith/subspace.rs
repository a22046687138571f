//! Subspaces of `K^n` in reduced row-echelon form.

use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;
use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::Error;

/// Incremental Gauss-Jordan state: rows are kept fully reduced, with a
/// leading one in each pivot column and sorted by pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows in place.
    pub fn reduce(&self, v: &mut [Scalar]) {
        debug_assert_eq!(v.len(), self.ncols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x = x.sub(&f.mul(r));
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Field::is_zero)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ncols, "vector length does not match ambient dimension");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let piv = v[p].clone();
        if !piv.is_one() {
            let inv = Scalar::one().div(&piv);
            for x in v.iter_mut().skip(p) {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v).skip(p) {
                if !r.is_zero() {
                    *x = x.sub(&f.mul(r));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace { ambient: self.ncols, rows: self.rows, pivots: self.pivots }
    }
}

/// A subspace given by its unique reduced row-echelon basis, so equality of
/// subspaces is equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit(ambient, i)))
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            e.insert(v);
        }
        e.into_subspace()
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        Self::span(m.cols(), m.row_vecs())
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Self {
        Self::span(m.rows(), (0..m.cols()).map(|j| m.column(j)))
    }

    /// Null space `{v : m v = 0}`.
    pub fn kernel(m: &Matrix) -> Self {
        let rs = Self::row_space(m);
        let n = m.cols();
        let mut is_pivot = vec![false; n];
        for &p in &rs.pivots {
            is_pivot[p] = true;
        }
        let free = (0..n).filter(|&j| !is_pivot[j]);
        let vecs = free.map(|f| {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for (row, &p) in rs.rows.iter().zip(&rs.pivots) {
                if !row[f].is_zero() {
                    v[p] = row[f].neg();
                }
            }
            v
        });
        Self::span(n, vecs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Basis vectors as the rows of a matrix.
    pub fn basis(&self) -> Matrix {
        Matrix::from_rows(self.ambient, self.rows.clone())
    }

    fn echelon(&self) -> Echelon {
        Echelon { ncols: self.ambient, rows: self.rows.clone(), pivots: self.pivots.clone() }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains_all(&self, vs: &[Vec<Scalar>]) -> bool {
        let e = self.echelon();
        vs.iter().all(|v| e.contains(v))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && other.contains_all(&self.rows)
    }

    fn check_ambient(&self, other: &Self) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        let (big, small) = if self.dim() >= other.dim() { (self, other) } else { (other, self) };
        let mut e = big.echelon();
        for r in &small.rows {
            e.insert(r.clone());
        }
        Ok(e.into_subspace())
    }

    /// Zassenhaus: reduce `[a | a]` and `[b | 0]`; rows with vanishing left
    /// half span the intersection.
    pub fn intersection(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut e = Echelon::new(2 * n);
        for a in &self.rows {
            let mut v = a.clone();
            v.extend(a.iter().cloned());
            e.insert(v);
        }
        for b in &other.rows {
            let mut v = b.clone();
            v.extend(core::iter::repeat_n(Scalar::zero(), n));
            e.insert(v);
        }
        let vecs = e.rows.into_iter().zip(e.pivots).filter(|(_, p)| *p >= n).map(|(r, _)| r[n..].to_vec());
        Ok(Self::span(n, vecs))
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn map(&self, m: &Matrix) -> Self {
        Self::span(m.rows(), self.rows.iter().map(|v| m.mul_vec(v)))
    }

    /// Coordinates of `v` in the reduced basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.sub(&c.mul(r));
                }
            }
        }
        w.iter().all(Field::is_zero).then_some(coords)
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Rank of a matrix.
pub fn rank(m: &Matrix) -> usize {
    Subspace::row_space(m).dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::int(x)).collect()
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(rank(&Matrix::identity(2)), 2);
        assert!(Subspace::kernel(&Matrix::identity(2)).is_zero());
        let z = Matrix::zeros(3, 3);
        assert_eq!(rank(&z), 0);
        assert_eq!(Subspace::kernel(&z), Subspace::full(3));
    }

    #[test]
    fn symbolic_rank_one() {
        let q = Scalar::q();
        let m = Matrix::from_rows(2, vec![vec![Scalar::one(), q.clone()], vec![q.clone(), &q * &q]]);
        assert_eq!(rank(&m), 1);
        let k = Subspace::kernel(&m);
        assert_eq!(k.dim(), 1);
        assert!(m.mul_vec(&k.basis_rows()[0]).iter().all(Field::is_zero));
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::span(2, [v(&[1, 0])]);
        let b = Subspace::span(2, [v(&[0, 1])]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(2));
        assert!(a.intersection(&b).unwrap().is_zero());
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);

        let a = Subspace::span(3, [v(&[1, 1, 0])]);
        let b = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert_eq!(a.intersection(&b).unwrap(), a);
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn coordinates_reconstruct() {
        let s = Subspace::span(3, [v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let x = v(&[2, 7, 9]);
        let c = s.coordinates(&x).unwrap();
        let mut back = vec![Scalar::zero(); 3];
        for (ci, row) in c.iter().zip(s.basis_rows()) {
            for (b, r) in back.iter_mut().zip(row) {
                *b = b.add(&ci.mul(r));
            }
        }
        assert_eq!(back, x);
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
    }
}
