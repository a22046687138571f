//! Quadratic algebras `T(U)/(relations)` and their graded dimensions.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{Field, Matrix, Scalar, Subspace};
use crate::error::Error;
use crate::operators::HeckeOp;
use crate::partitions::Partition;
use crate::projectors::multiplicities;

/// How `U^{⊗n}` is laid out in coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Layout {
    /// `V^{⊗n}`, lexicographic.
    Plain { d: usize },
    /// `(W*⊗V)^{⊗n}` stored as `W*^{⊗n}⊗V^{⊗n}`, dual indices major.
    Paired { dw: usize, dv: usize },
}

impl Layout {
    pub fn generators(&self) -> usize {
        match *self {
            Layout::Plain { d } => d,
            Layout::Paired { dw, dv } => dw * dv,
        }
    }

    pub fn ambient(&self, n: usize) -> usize {
        self.generators().pow(n as u32)
    }

    /// Coordinate of the word `g_1 ⋯ g_n` in generator indices.
    pub fn index(&self, word: &[usize]) -> usize {
        match *self {
            Layout::Plain { d } => word.iter().fold(0, |acc, &g| acc * d + g),
            Layout::Paired { dw, dv } => {
                let a = word.iter().fold(0, |acc, &g| acc * dw + g / dv);
                let b = word.iter().fold(0, |acc, &g| acc * dv + g % dv);
                a * dv.pow(word.len() as u32) + b
            }
        }
    }

    /// Inverse of [`Layout::index`].
    pub fn word(&self, n: usize, idx: usize) -> Vec<usize> {
        match *self {
            Layout::Plain { d } => digits(idx, d, n),
            Layout::Paired { dw, dv } => {
                let vn = dv.pow(n as u32);
                let a = digits(idx / vn, dw, n);
                let b = digits(idx % vn, dv, n);
                a.into_iter().zip(b).map(|(x, y)| x * dv + y).collect()
            }
        }
    }

    /// Regroups `u ⊗ v`, `u` of degree `m` and `v` of degree `n`, into
    /// degree `m + n` coordinates.
    pub fn concat(&self, m: usize, u: &[Scalar], n: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.ambient(m + n)];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut w = self.word(m, i);
            let len = w.len();
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                w.truncate(len);
                w.extend(self.word(n, j));
                out[self.index(&w)] = a * b;
            }
        }
        out
    }
}

fn digits(mut x: usize, base: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = x % base;
        x /= base;
    }
    out
}

/// Which quadratic algebra a relation space presents.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Label {
    S,
    Lambda,
    E,
    F,
    M,
    N,
    Custom,
}

#[derive(Clone, Debug)]
pub struct QuadraticAlgebra {
    pub layout: Layout,
    pub relations: Subspace,
    pub label: Label,
}

impl QuadraticAlgebra {
    pub fn new(layout: Layout, relations: Subspace, label: Label) -> Result<Self, Error> {
        if relations.ambient_dim() != layout.ambient(2) {
            return Err(Error::DimensionMismatch { expected: layout.ambient(2), found: relations.ambient_dim() });
        }
        Ok(QuadraticAlgebra { layout, relations, label })
    }

    /// `S = T(V)/(Im(R − q))`.
    pub fn symmetric(op: &HeckeOp) -> Self {
        let m = op.matrix().sub(&Matrix::scalar(op.dim().pow(2), op.q()));
        QuadraticAlgebra { layout: Layout::Plain { d: op.dim() }, relations: Subspace::image(&m), label: Label::S }
    }

    /// `Λ = T(V)/(Im(R + 1))`.
    pub fn exterior(op: &HeckeOp) -> Self {
        let m = op.matrix().add(&Matrix::identity(op.dim().pow(2)));
        QuadraticAlgebra { layout: Layout::Plain { d: op.dim() }, relations: Subspace::image(&m), label: Label::Lambda }
    }

    /// `M_{SR}` on generators `W*⊗V`: relations `Im(ᵗS⁻¹⊗R − 1)`.
    pub fn matrix_algebra(op_s: &HeckeOp, op_r: &HeckeOp) -> Result<Self, Error> {
        if op_s.q() != op_r.q() {
            return Err(Error::ParameterMismatch);
        }
        let t = op_s.inverse_matrix().transpose().kron(op_r.matrix());
        let m = t.sub(&Matrix::identity(t.rows()));
        let layout = Layout::Paired { dw: op_s.dim(), dv: op_r.dim() };
        Ok(QuadraticAlgebra { layout, relations: Subspace::image(&m), label: Label::M })
    }

    /// `N_{SR} = M_{S′R}`: relations `Im(ᵗS⊗R + q)`.
    pub fn twisted_matrix_algebra(op_s: &HeckeOp, op_r: &HeckeOp) -> Result<Self, Error> {
        if op_s.q() != op_r.q() {
            return Err(Error::ParameterMismatch);
        }
        let t = op_s.matrix().transpose().kron(op_r.matrix());
        let m = t.add(&Matrix::scalar(t.rows(), op_r.q()));
        let layout = Layout::Paired { dw: op_s.dim(), dv: op_r.dim() };
        Ok(QuadraticAlgebra { layout, relations: Subspace::image(&m), label: Label::N })
    }

    /// `E = M_{RR}`.
    pub fn e(op: &HeckeOp) -> Self {
        let mut a = Self::matrix_algebra(op, op).expect("same operator");
        a.label = Label::E;
        a
    }

    /// `F = N_{RR}`.
    pub fn f(op: &HeckeOp) -> Self {
        let mut a = Self::twisted_matrix_algebra(op, op).expect("same operator");
        a.label = Label::F;
        a
    }

    pub fn generators(&self) -> usize {
        self.layout.generators()
    }

    /// `R(A)ⁿᵢ`: the relations in positions `i, i+1` (1-based).
    pub fn relation_at(&self, n: usize, i: usize) -> Subspace {
        let g = self.generators();
        let others = n - 2;
        let mut vecs = Vec::new();
        for r in self.relations.basis_rows() {
            let support: Vec<(usize, usize, &Scalar)> = r
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(idx, c)| {
                    let w = self.layout.word(2, idx);
                    (w[0], w[1], c)
                })
                .collect();
            for rest in 0..g.pow(others as u32) {
                let rest = digits(rest, g, others);
                let mut v = vec![Scalar::zero(); self.layout.ambient(n)];
                let mut word = Vec::with_capacity(n);
                for &(x, y, c) in &support {
                    word.clear();
                    word.extend_from_slice(&rest[..i - 1]);
                    word.push(x);
                    word.push(y);
                    word.extend_from_slice(&rest[i - 1..]);
                    v[self.layout.index(&word)] = c.clone();
                }
                vecs.push(v);
            }
        }
        Subspace::span(self.layout.ambient(n), vecs)
    }

    /// `Rⁿ(A) = Σᵢ R(A)ⁿᵢ`.
    pub fn relation_sum(&self, n: usize) -> Subspace {
        let mut acc = Subspace::zero(self.layout.ambient(n));
        for i in 1..n {
            acc = acc.sum(&self.relation_at(n, i)).expect("same ambient");
        }
        acc
    }

    /// `⋂ᵢ R(A)ⁿᵢ`, the dual of the `n`th component of `A^!`.
    pub fn relation_intersection(&self, n: usize) -> Subspace {
        if n < 2 {
            return Subspace::full(self.layout.ambient(n));
        }
        let mut acc = self.relation_at(n, 1);
        for i in 2..n {
            acc = acc.intersection(&self.relation_at(n, i)).expect("same ambient");
        }
        acc
    }

    /// `dim Aₙ`.
    pub fn graded_dimension(&self, n: usize) -> usize {
        self.layout.ambient(n) - self.relation_sum(n).dim()
    }

    /// `dim A^!_n`.
    pub fn dual_graded_dimension(&self, n: usize) -> usize {
        self.relation_intersection(n).dim()
    }

    pub fn hilbert_series(&self, max_degree: usize) -> HilbertSeries {
        HilbertSeries { coefficients: (0..=max_degree).map(|n| self.graded_dimension(n)).collect() }
    }

    pub fn dual_hilbert_series(&self, max_degree: usize) -> HilbertSeries {
        HilbertSeries { coefficients: (0..=max_degree).map(|n| self.dual_graded_dimension(n)).collect() }
    }
}

/// `P_A(t)` truncated after the last stored coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertSeries {
    pub coefficients: Vec<usize>,
}

impl HilbertSeries {
    pub fn truncation_degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }
}

/// `P_A(t) P_{A^!}(−t) = 1` through degree `max_degree`.
pub fn koszul_numeric_check(a: &HilbertSeries, b: &HilbertSeries, max_degree: usize) -> Result<(), Error> {
    for n in 1..=max_degree {
        let mut acc: i64 = 0;
        for j in 0..=n {
            let term = (a.coefficients[n - j] * b.coefficients[j]) as i64;
            acc += if j % 2 == 0 { term } else { -term };
        }
        if acc != 0 {
            return Err(Error::KoszulDefect(n));
        }
    }
    Ok(())
}

/// Which rank-sum prediction to compare with.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// `dim E_n = Σ l_λ²`.
    E,
    /// `dim F_n = Σ l_λ l_{λ′}`.
    F,
    /// `dim M_n = Σ k^S_λ l^R_λ`.
    M,
}

/// One row of a dimension comparison.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimensionRow {
    pub degree: usize,
    pub computed: usize,
    pub predicted: usize,
}

/// Graded dimensions next to the rank-sum predictions for every degree up
/// to `max_degree`.
pub fn dimension_rows(op_s: &HeckeOp, op_r: &HeckeOp, family: Family, max_degree: usize) -> Result<Vec<DimensionRow>, Error> {
    let algebra = match family {
        Family::E => QuadraticAlgebra::e(op_r),
        Family::F => QuadraticAlgebra::f(op_r),
        Family::M => QuadraticAlgebra::matrix_algebra(op_s, op_r)?,
    };
    let lr = multiplicities(op_r, max_degree)?;
    let ls = match family {
        Family::M => multiplicities(op_s, max_degree)?,
        _ => lr.clone(),
    };
    let mut rows = Vec::new();
    for n in 0..=max_degree {
        let predicted: usize = Partition::all_of_weight(n)
            .iter()
            .map(|lam| {
                let partner = match family {
                    Family::F => ls[&lam.conjugate()],
                    _ => ls[lam],
                };
                partner * lr[lam]
            })
            .sum();
        rows.push(DimensionRow { degree: n, computed: algebra.graded_dimension(n), predicted });
    }
    Ok(rows)
}

/// [`dimension_rows`], failing at the first degree where they differ.
pub fn plethysm_rank_identity(op_s: &HeckeOp, op_r: &HeckeOp, family: Family, max_degree: usize) -> Result<Vec<DimensionRow>, Error> {
    let rows = dimension_rows(op_s, op_r, family, max_degree)?;
    if let Some(bad) = rows.iter().find(|r| r.computed != r.predicted) {
        let what = match family {
            Family::E => "E rank-sum identity",
            Family::F => "F rank-sum identity",
            Family::M => "M rank-sum identity",
        };
        return Err(Error::IdentityViolation { what: String::from(what), degree: bad.degree, lhs: bad.computed, rhs: bad.predicted });
    }
    Ok(rows)
}
