//! Hecke operators on `V⊗V` and their lifts to tensor powers.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{field_check_parameter, rank, Field, Matrix, Scalar};
use crate::error::Error;
use crate::hecke::{HeckeElement, Permutation};

/// An operator `R` on `V⊗V` with `(R+1)(R−q) = 0` satisfying Yang-Baxter.
///
/// Matrix convention: the basis `x_i⊗x_j` has index `i·d + j`, and
/// `R^{kl}_{ij}`, the coefficient of `x_k⊗x_l` in `R(x_i⊗x_j)`, sits at
/// row `k·d + l`, column `i·d + j`.
#[derive(Clone, PartialEq, Debug)]
pub struct HeckeOp {
    d: usize,
    q: Scalar,
    r: Matrix,
}

impl HeckeOp {
    /// Validates Yang-Baxter and the Hecke equation.
    pub fn new(d: usize, q: Scalar, r: Matrix) -> Result<Self, Error> {
        if r.rows() != d * d || r.cols() != d * d {
            return Err(Error::DimensionMismatch { expected: d * d, found: r.rows().max(r.cols()) });
        }
        if q.is_zero() {
            return Err(Error::ZeroParameter);
        }
        let op = HeckeOp { d, q, r };
        if !op.satisfies_hecke() {
            return Err(Error::HeckeEquationFails);
        }
        if !op.satisfies_ybe() {
            return Err(Error::YangBaxterFails);
        }
        Ok(op)
    }

    /// Builds from `(i, j, k, l, R^{kl}_{ij})` with 0-based indices.
    pub fn from_entries(d: usize, q: Scalar, entries: &[(usize, usize, usize, usize, Scalar)]) -> Result<Self, Error> {
        let mut r = Matrix::zeros(d * d, d * d);
        for (i, j, k, l, v) in entries {
            for x in [i, j, k, l] {
                if *x >= d {
                    return Err(Error::DimensionMismatch { expected: d, found: *x + 1 });
                }
            }
            r.set(k * d + l, i * d + j, v.clone());
        }
        Self::new(d, q, r)
    }

    /// Nonzero `(i, j, k, l, R^{kl}_{ij})`, sorted.
    pub fn entries(&self) -> Vec<(usize, usize, usize, usize, Scalar)> {
        let d = self.d;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let v = self.coeff(i, j, k, l);
                        if !v.is_zero() {
                            out.push((i, j, k, l, v.clone()));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn matrix(&self) -> &Matrix {
        &self.r
    }

    /// `R^{kl}_{ij}`.
    pub fn coeff(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        self.r.get(k * self.d + l, i * self.d + j)
    }

    fn satisfies_hecke(&self) -> bool {
        let n = self.d * self.d;
        let one = Matrix::identity(n);
        let a = self.r.add(&one);
        let b = self.r.sub(&Matrix::scalar(n, &self.q));
        a.mul(&b).is_zero()
    }

    fn satisfies_ybe(&self) -> bool {
        let id = Matrix::identity(self.d);
        let r1 = self.r.kron(&id);
        let r2 = id.kron(&self.r);
        r1.mul(&r2).mul(&r1) == r2.mul(&r1).mul(&r2)
    }

    /// `R′ = −q R⁻¹`, again a Hecke operator with the same `q`.
    pub fn dual_partner(&self) -> HeckeOp {
        let inv = self.r.inverse().expect("Hecke operators with q != 0 are invertible");
        HeckeOp { d: self.d, q: self.q.clone(), r: inv.scale(&(-self.q.clone())) }
    }

    /// `R̂ = P R P`.
    pub fn conjugate_by_flip(&self) -> HeckeOp {
        let p = flip_matrix(self.d);
        HeckeOp { d: self.d, q: self.q.clone(), r: p.mul(&self.r).mul(&p) }
    }

    /// `R⁻¹`.
    pub fn inverse_matrix(&self) -> Matrix {
        self.r.inverse().expect("Hecke operators with q != 0 are invertible")
    }

    /// The `d²×d²` matrix of `R^# = (ev⊗id)(id⊗R⊗id)(id⊗db)`, from
    /// `V*⊗V` to `V⊗V*`: `ξ^a⊗x_b ↦ Σ R^{al}_{bk} x_l⊗ξ^k`.
    pub fn closure_matrix(&self) -> Matrix {
        let d = self.d;
        Matrix::from_fn(d * d, d * d, |row, col| {
            let (l, k) = (row / d, row % d);
            let (a, b) = (col / d, col % d);
            self.coeff(b, k, a, l).clone()
        })
    }

    /// Whether `R^#` is invertible, i.e. `R` is a Hecke symmetry.
    pub fn check_hecke_symmetry(&self) -> Result<(), Error> {
        if rank(&self.closure_matrix()) == self.d * self.d {
            Ok(())
        } else {
            Err(Error::NotClosed)
        }
    }

    /// `R_i = id^{i−1}⊗R⊗id^{n−i−1}` applied on the left of `m`, whose
    /// rows are indexed by `V^{⊗n}`.
    pub fn apply_local(&self, n: usize, i: usize, m: &Matrix) -> Matrix {
        apply_local(&self.r, self.d, n, i, m)
    }

    /// `R_i` as a full matrix on `V^{⊗n}`.
    pub fn local(&self, n: usize, i: usize) -> Matrix {
        let left = Matrix::identity(self.d.pow(i as u32 - 1));
        let right = Matrix::identity(self.d.pow((n - i - 1) as u32));
        left.kron(&self.r).kron(&right)
    }
}

/// Flip `x_i⊗x_j ↦ x_j⊗x_i`.
pub fn flip_matrix(d: usize) -> Matrix {
    Matrix::from_fn(d * d, d * d, |row, col| if row == (col % d) * d + col / d { Scalar::one() } else { Scalar::zero() })
}

fn apply_local(r: &Matrix, d: usize, n: usize, i: usize, m: &Matrix) -> Matrix {
    let outer = d.pow(i as u32 - 1);
    let inner = d.pow((n - i - 1) as u32);
    let dd = d * d;
    let cols = m.cols();
    let nonzero: Vec<Vec<(usize, Scalar)>> =
        (0..dd).map(|row| (0..dd).filter(|&c| !r.get(row, c).is_zero()).map(|c| (c, r.get(row, c).clone())).collect()).collect();
    let mut out = Matrix::zeros(m.rows(), cols);
    for a in 0..outer {
        for b in 0..inner {
            for (xy, terms) in nonzero.iter().enumerate() {
                let orow = (a * dd + xy) * inner + b;
                let mut acc = vec![Scalar::zero(); cols];
                for (c, v) in terms {
                    let src = m.row((a * dd + c) * inner + b);
                    for (x, s) in acc.iter_mut().zip(src) {
                        if !s.is_zero() {
                            *x = &*x + &(v * s);
                        }
                    }
                }
                for (j, x) in acc.into_iter().enumerate() {
                    out.set(orow, j, x);
                }
            }
        }
    }
    out
}

fn sign(odd_i: bool, odd_j: bool) -> Scalar {
    if odd_i && odd_j {
        Scalar::int(-1)
    } else {
        Scalar::int(1)
    }
}

/// Drinfel'd-Jimbo operator on a `d`-dimensional space, `q = p²`.
pub fn make_standard(d: usize, p: &Scalar) -> Result<HeckeOp, Error> {
    make_super(d, 0, p)
}

/// Super operator `R_{r|s}`: the first `r` basis vectors are even, the
/// remaining `s` odd; `q = p²`.
pub fn make_super(r: usize, s: usize, p: &Scalar) -> Result<HeckeOp, Error> {
    if p.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let q = p * p;
    field_check_parameter(&q, 2)?;
    let d = r + s;
    let one = Scalar::one();
    let mut m = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let col = i * d + j;
            let eps = sign(i >= r, j >= r);
            if i == j {
                let v = if i < r { q.clone() } else { -one.clone() };
                m.set(col, col, v);
            } else if i < j {
                m.set(j * d + i, col, &eps * p);
            } else {
                m.set(col, col, &q - &one);
                m.set(j * d + i, col, &eps * p);
            }
        }
    }
    HeckeOp::new(d, q, m)
}

/// The flip `P` on a `d`-dimensional space, `q = 1`.
pub fn make_flip(d: usize) -> HeckeOp {
    make_standard(d, &Scalar::one()).expect("flip is a Hecke operator")
}

/// The super flip on `(r|s)`, `q = 1`.
pub fn make_superflip(r: usize, s: usize) -> HeckeOp {
    make_super(r, s, &Scalar::one()).expect("super flip is a Hecke operator")
}

/// Standard operator normalized to have eigenvalue `q` directly, without
/// a square root; usable with a symbolic `q`.
pub fn make_standard_q(d: usize, q: &Scalar) -> Result<HeckeOp, Error> {
    make_super_q(d, 0, q)
}

/// Super operator normalized by `q` in place of `p²`:
/// `R(x_i⊗x_j) = ε x_j⊗x_i` for `i<j` and
/// `(q−1) x_i⊗x_j + ε q x_j⊗x_i` for `i>j`.
pub fn make_super_q(r: usize, s: usize, q: &Scalar) -> Result<HeckeOp, Error> {
    field_check_parameter(q, 2)?;
    let d = r + s;
    let one = Scalar::one();
    let mut m = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let col = i * d + j;
            let eps = sign(i >= r, j >= r);
            if i == j {
                let v = if i < r { q.clone() } else { -one.clone() };
                m.set(col, col, v);
            } else if i < j {
                m.set(j * d + i, col, eps);
            } else {
                m.set(col, col, q - &one);
                m.set(j * d + i, col, &eps * q);
            }
        }
    }
    HeckeOp::new(d, q.clone(), m)
}

/// Which action of `H_n` on a tensor power.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepKind {
    /// `ρ(T_w) = R_{i1}⋯R_{ik}` on `V^{⊗n}`.
    Rho,
    /// `σ(T_w) = ᵗρ′(T_w)` on `V*^{⊗n}`, with `ρ′` built from `R′ = −qR⁻¹`.
    Sigma,
    /// `τ(T_w) = ᵗρ(T_w)` on `V*^{⊗n}`.
    Tau,
}

/// The matrices of `T_w` for all `w ∈ S_n`, in rank order.
///
/// `Rho` is a homomorphism; `Sigma` and `Tau` are anti-homomorphisms, so
/// they are representations of `H_n^op`.
#[derive(Clone, Debug)]
pub struct TensorRep {
    kind: RepKind,
    n: usize,
    dim: usize,
    mats: Vec<Matrix>,
}

impl TensorRep {
    pub fn new(op: &HeckeOp, n: usize, kind: RepKind) -> Self {
        let base = match kind {
            RepKind::Sigma => op.dual_partner(),
            _ => op.clone(),
        };
        let dim = op.d.pow(n as u32);
        let perms = Permutation::all(n);
        let mut order: Vec<usize> = (0..perms.len()).collect();
        order.sort_by_key(|&r| perms[r].length());
        let mut mats: Vec<Option<Matrix>> = vec![None; perms.len()];
        for r in order {
            let word = perms[r].reduced_word();
            let m = match word.first() {
                None => Matrix::identity(dim),
                Some(&i) => {
                    let rest = Permutation::simple(n, i).compose(&perms[r]).rank();
                    let prev = mats[rest].as_ref().expect("shorter words come first");
                    base.apply_local(n, i, prev)
                }
            };
            mats[r] = Some(m);
        }
        let mut mats: Vec<Matrix> = mats.into_iter().map(|m| m.expect("all permutations visited")).collect();
        if kind != RepKind::Rho {
            mats = mats.iter().map(Matrix::transpose).collect();
        }
        TensorRep { kind, n, dim, mats }
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn of_basis(&self, w: &Permutation) -> &Matrix {
        &self.mats[w.rank()]
    }

    pub fn of_rank(&self, r: usize) -> &Matrix {
        &self.mats[r]
    }

    /// Linear extension to `H_n`.
    pub fn of(&self, h: &HeckeElement) -> Matrix {
        assert_eq!(h.degree(), self.n);
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (r, c) in h.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &self.mats[r]);
            }
        }
        out
    }
}

/// Lift of `T_w` for a single permutation, multiplied along its reduced
/// word.
pub fn lift(op: &HeckeOp, n: usize, w: &Permutation, kind: RepKind) -> Result<Matrix, Error> {
    if w.degree() != n {
        return Err(Error::RankMismatch { expected: n, found: w.degree() });
    }
    let base = match kind {
        RepKind::Sigma => op.dual_partner(),
        _ => op.clone(),
    };
    let mut m = Matrix::identity(op.d.pow(n as u32));
    for &i in w.reduced_word().iter().rev() {
        m = base.apply_local(n, i, &m);
    }
    Ok(if kind == RepKind::Rho { m } else { m.transpose() })
}
