//! The map `μ*: M_{TS} → M_{TR}⊗M_{RS}` in its plain and twisted forms.
//!
//! Elements of the target live on `(W*^{⊗n}⊗V^{⊗n}) ⊗ (V*^{⊗n}⊗U^{⊗n})`,
//! indexed by `left · ambient_right + right`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{Field, Matrix, Scalar, Subspace};
use crate::bialgebra::{Kind, RealizedAlgebra};
use crate::error::Error;
use crate::operators::{flip_matrix, HeckeOp};
use crate::partitions::{Partition, PartitionSet};
use crate::projectors::{birank, multiplicities};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Version {
    /// `V*` and `V` interchanged by the flip.
    Plain,
    /// `V*` and `V` interchanged by `ξⁱ⊗x_j ↦ Σ x_k⊗ξˡ (R⁻¹)^{ik}_{jl}`,
    /// with `M_{R̂S}`, `R̂ = PRP`, as the right factor.
    Twisted,
}

/// Everything needed to evaluate `μ*` up to a fixed degree.
#[derive(Clone, Debug)]
pub struct MuStar {
    pub version: Version,
    pub r: HeckeOp,
    /// `M_{TS}`.
    pub source: RealizedAlgebra,
    /// `M_{TR}`.
    pub left: RealizedAlgebra,
    /// `M_{RS}`, or `M_{R̂S}` in the twisted version.
    pub right: RealizedAlgebra,
}

impl MuStar {
    pub fn new(t: &HeckeOp, r: &HeckeOp, s: &HeckeOp, version: Version, max_degree: usize) -> Result<Self, Error> {
        if t.q() != r.q() || s.q() != r.q() {
            return Err(Error::ParameterMismatch);
        }
        r.check_hecke_symmetry()?;
        let middle = match version {
            Version::Plain => r.clone(),
            Version::Twisted => r.conjugate_by_flip(),
        };
        Ok(MuStar {
            version,
            r: r.clone(),
            source: RealizedAlgebra::realize(t, s, Kind::M, max_degree)?,
            left: RealizedAlgebra::realize(t, r, Kind::M, max_degree)?,
            right: RealizedAlgebra::realize(&middle, s, Kind::M, max_degree)?,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.source.max_degree()
    }

    fn dims(&self) -> (usize, usize, usize) {
        (self.source.left.dim(), self.r.dim(), self.source.right.dim())
    }

    pub fn source_ambient(&self, n: usize) -> usize {
        self.source.layout().ambient(n)
    }

    pub fn target_ambient(&self, n: usize) -> usize {
        self.left.layout().ambient(n) * self.right.layout().ambient(n)
    }

    /// `V*⊗V → V⊗V*` on two adjacent slots; row `k·d + l` is `x_k⊗ξˡ`,
    /// column `i·d + j` is `ξⁱ⊗x_j`.
    pub fn omega(&self) -> Matrix {
        let d = self.r.dim();
        match self.version {
            Version::Plain => flip_matrix(d),
            Version::Twisted => {
                let inv = self.r.inverse_matrix();
                Matrix::from_fn(d * d, d * d, |row, col| {
                    let (k, l) = (row / d, row % d);
                    let (i, j) = (col / d, col % d);
                    inv.get(i * d + k, j * d + l).clone()
                })
            }
        }
    }

    /// `V*^{⊗m}⊗V^{⊗n} → V^{⊗n}⊗V*^{⊗m}` by moving each `V` factor
    /// leftwards with [`MuStar::omega`].
    pub fn braid(&self, m: usize, n: usize) -> Matrix {
        let d = self.r.dim();
        let omega = self.omega();
        let size = d.pow((m + n) as u32);
        let mut cols = Vec::with_capacity(size);
        for c in 0..size {
            let mut v = crate::arith::unit(size, c);
            for t in 0..n {
                for p in (t..m + t).rev() {
                    v = apply_two_site(&v, d, m + n, p, &omega);
                }
            }
            cols.push(v);
        }
        Matrix::from_fn(size, size, |i, j| cols[j][i].clone())
    }

    /// `ω_n db^{⊗n}` as a `V^{⊗n} × V*^{⊗n}` coefficient matrix.
    pub fn middle(&self, n: usize) -> Matrix {
        let d = self.r.dim();
        let slots = 2 * n;
        let size = d.pow(slots as u32);
        let mut v = vec![Scalar::zero(); size];
        for word in 0..d.pow(n as u32) {
            let mut idx = 0;
            for k in 0..n {
                let x = word / d.pow((n - 1 - k) as u32) % d;
                idx = (idx * d + x) * d + x;
            }
            v[idx] = Scalar::one();
        }
        let omega = self.omega();
        for k in 1..n {
            for p in (k..2 * k).rev() {
                v = apply_two_site(&v, d, slots, p, &omega);
            }
        }
        let dn = d.pow(n as u32);
        Matrix::from_fn(dn, dn, |i, j| v[i * dn + j].clone())
    }

    /// `θ_n` from `W*^{⊗n}⊗U^{⊗n}` to the target, before projecting.
    pub fn theta_matrix(&self, n: usize) -> Matrix {
        let (dw, dv, du) = self.dims();
        let (wn, vn, un) = (dw.pow(n as u32), dv.pow(n as u32), du.pow(n as u32));
        let amb_r = self.right.layout().ambient(n);
        let c = self.middle(n);
        let mut out = Matrix::zeros(self.target_ambient(n), wn * un);
        for a in 0..wn {
            for b in 0..un {
                for i in 0..vn {
                    for j in 0..vn {
                        let x = c.get(i, j);
                        if !x.is_zero() {
                            out.set((a * vn + i) * amb_r + j * un + b, a * un + b, x.clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// `(Ψ̄_{TR}ⁿ⊗Ψ̄_{RS}ⁿ) θ_n` on all of `W*^{⊗n}⊗U^{⊗n}`.
    pub fn lifted_matrix(&self, n: usize) -> Matrix {
        let (dw, dv, du) = self.dims();
        let (wn, vn, un) = (dw.pow(n as u32), dv.pow(n as u32), du.pow(n as u32));
        let bar_l = &self.left.component(n).projectors.bar;
        let bar_r = &self.right.component(n).projectors.bar;
        let (amb_l, amb_r) = (bar_l.rows(), bar_r.rows());
        let c = self.middle(n);
        let mut cols = vec![Vec::new(); wn * un];
        for a in 0..wn {
            let la = Matrix::from_fn(amb_l, vn, |row, i| bar_l.get(row, a * vn + i).clone());
            let pa = la.mul(&c);
            for b in 0..un {
                let rb_t = Matrix::from_fn(vn, amb_r, |j, row| bar_r.get(row, j * un + b).clone());
                cols[a * un + b] = pa.mul(&rb_t).entries().to_vec();
            }
        }
        Matrix::from_fn(amb_l * amb_r, wn * un, |i, j| cols[j][i].clone())
    }

    /// `μ*ₙ` on an element of `Im Ψ̄_{TS}ⁿ`.
    pub fn apply(&self, n: usize, v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if !self.source.component(n).image.contains(v) {
            return Err(Error::NotInComponent);
        }
        Ok(self.lifted_matrix(n).mul_vec(v))
    }

    /// Columns are `μ*ₙ` of the canonical basis of `Im Ψ̄_{TS}ⁿ`.
    pub fn mu_star_matrix(&self, n: usize) -> Matrix {
        restrict(&self.lifted_matrix(n), &self.source.component(n).image)
    }

    /// `Ker μ*ₙ` inside `Im Ψ̄_{TS}ⁿ`, in source coordinates.
    pub fn kernel(&self, n: usize) -> Subspace {
        let image = &self.source.component(n).image;
        let coords = Subspace::kernel(&self.mu_star_matrix(n));
        let basis = image.basis_rows();
        let vecs = coords.basis_rows().iter().map(|c| combine(basis, c, self.source_ambient(n)));
        Subspace::span(self.source_ambient(n), vecs.collect::<Vec<_>>())
    }

    /// The product on the target: positional in the plain version, with
    /// the middle `V*^{⊗m}` moved past `V^{⊗n}` by [`MuStar::braid`] in
    /// the twisted one.
    pub fn target_product(&self, m: usize, x: &[Scalar], n: usize, y: &[Scalar]) -> Vec<Scalar> {
        let (dw, dv, du) = self.dims();
        let (rm, rn) = (self.right.layout().ambient(m), self.right.layout().ambient(n));
        let (vm, vn, um, un, wn) = (dv.pow(m as u32), dv.pow(n as u32), du.pow(m as u32), du.pow(n as u32), dw.pow(n as u32));
        let (vmn, umn) = (vm * vn, um * un);
        let bm = self.braid(m, n);
        let amb_l = self.left.layout().ambient(m + n);
        let amb_r = self.right.layout().ambient(m + n);
        let mut out = Matrix::zeros(amb_l, amb_r);
        for (ix, cx) in x.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            let (l1, r1) = (ix / rm, ix % rm);
            let (a1, i1) = (l1 / vm, l1 % vm);
            let (j1, b1) = (r1 / um, r1 % um);
            for (iy, cy) in y.iter().enumerate() {
                if cy.is_zero() {
                    continue;
                }
                let (l2, r2) = (iy / rn, iy % rn);
                let (a2, i2) = (l2 / vn, l2 % vn);
                let (j2, b2) = (r2 / un, r2 % un);
                let c = cx * cy;
                for k in 0..vn {
                    for l in 0..vm {
                        let coef = bm.get(k * vm + l, j1 * vn + i2);
                        if coef.is_zero() {
                            continue;
                        }
                        let left = (a1 * wn + a2) * vmn + i1 * vn + k;
                        let right = (l * vn + j2) * umn + b1 * un + b2;
                        let cell = out.get(left, right) + &(&c * coef);
                        out.set(left, right, cell);
                    }
                }
            }
        }
        let bar_l = &self.left.component(m + n).projectors.bar;
        let bar_r = &self.right.component(m + n).projectors.bar;
        bar_l.mul(&out).mul(&bar_r.transpose()).entries().to_vec()
    }

    /// `μ*_{m+n}(a·b)` against `μ*_m(a)·μ*_n(b)`.
    pub fn multiplicativity(&self, m: usize, a: &[Scalar], n: usize, b: &[Scalar]) -> Result<bool, Error> {
        let ab = self.source.product(m, a, n, b)?;
        let lhs = self.apply(m + n, &ab)?;
        let rhs = self.target_product(m, &self.apply(m, a)?, n, &self.apply(n, b)?);
        Ok(lhs == rhs)
    }

    /// `(Ψ̄⊗Ψ̄)θ₂` vanishes on `Ker Ψ̄²_{TS}`, i.e. `θ` respects the
    /// relations `T M₁M₂ = M₁M₂ S`.
    pub fn relation_check(&self) -> Result<(), Error> {
        let lifted = self.lifted_matrix(2);
        let relations = self.source.presentation.relation_sum(2);
        let bad = relations.basis_rows().iter().filter(|v| !lifted.mul_vec(v).iter().all(Scalar::is_zero)).count();
        if bad == 0 {
            Ok(())
        } else {
            Err(Error::IdentityViolation { what: String::from("theta on relations"), degree: 2, lhs: bad, rhs: 0 })
        }
    }

    /// `Ker μ*ₙ` against `⊕_{λ ⊢ n, λ ∉ Γ_{r,s}} M^{TS}_λ`, `(r, s)` the
    /// birank of `R`.
    pub fn kernel_vs_rectangle(&self, n: usize) -> Result<KernelReport, Error> {
        let (r, s) = birank(&self.r, self.max_degree().max(self.r.dim() + 1))?;
        let kernel = self.kernel(n);
        let mut predicted = Subspace::zero(self.source_ambient(n));
        for b in self.source.block_split(n) {
            if !b.lambda.in_gamma(r, s) {
                predicted = predicted.sum(&b.subspace)?;
            }
        }
        let rank = self.source.component(n).image.dim() - kernel.dim();
        Ok(KernelReport {
            degree: n,
            birank: (r, s),
            rank,
            kernel_dim: kernel.dim(),
            predicted_kernel_dim: predicted.dim(),
            equal: kernel == predicted,
        })
    }

    /// Per-block injectivity and cross-block vanishing in degree `n`.
    pub fn block_injectivity_check(&self, n: usize) -> Result<InjectivityReport, Error> {
        let lr = multiplicities(&self.r, n)?;
        let lifted = self.lifted_matrix(n);
        let mut per_block = Vec::new();
        let mut image = Subspace::zero(self.target_ambient(n));
        for b in self.source.block_split(n) {
            let block_image = b.subspace.map(&lifted);
            image = image.sum(&block_image)?;
            let l = lr[&b.lambda];
            let ok = if l == 0 { block_image.is_zero() } else { block_image.dim() == b.subspace.dim() };
            per_block.push(BlockRow { lambda: b.lambda.clone(), dim: b.subspace.dim(), image_dim: block_image.dim(), multiplicity: l, ok });
        }
        let left = self.left.block_split(n);
        let right = self.right.block_split(n);
        let mut cross = Vec::new();
        for x in &left {
            for y in &right {
                if x.lambda == y.lambda || x.subspace.is_zero() || y.subspace.is_zero() {
                    continue;
                }
                let tensor = tensor_span(&x.subspace, &y.subspace);
                let meet = tensor.intersection(&image)?;
                cross.push(CrossRow { row: x.lambda.clone(), column: y.lambda.clone(), meet_dim: meet.dim() });
            }
        }
        Ok(InjectivityReport { degree: n, per_block, cross })
    }

    /// The shapes `λ ⊢ n` with `l^R_λ = 0`.
    pub fn vanishing_shapes(&self, n: usize) -> Result<PartitionSet, Error> {
        let lr = multiplicities(&self.r, n)?;
        Ok(Partition::all_of_weight(n).into_iter().filter(|l| lr[l] == 0).collect())
    }
}

/// Builds the twisted instance and checks that `θ` respects the degree-2
/// relations of `M_{TS}` with `M_{TR}⊗M_{R̂S}` as target.
pub fn twisted_relation_check(t: &HeckeOp, r: &HeckeOp, s: &HeckeOp) -> Result<(), Error> {
    MuStar::new(t, r, s, Version::Twisted, 2)?.relation_check()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelReport {
    pub degree: usize,
    pub birank: (usize, usize),
    pub rank: usize,
    pub kernel_dim: usize,
    pub predicted_kernel_dim: usize,
    pub equal: bool,
}

impl KernelReport {
    pub fn into_result(self) -> Result<Self, Error> {
        if self.equal {
            Ok(self)
        } else {
            Err(Error::IdentityViolation {
                what: String::from("kernel of mu* vs rectangle ideal"),
                degree: self.degree,
                lhs: self.kernel_dim,
                rhs: self.predicted_kernel_dim,
            })
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockRow {
    pub lambda: Partition,
    pub dim: usize,
    pub image_dim: usize,
    pub multiplicity: usize,
    pub ok: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossRow {
    pub row: Partition,
    pub column: Partition,
    pub meet_dim: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InjectivityReport {
    pub degree: usize,
    pub per_block: Vec<BlockRow>,
    pub cross: Vec<CrossRow>,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.per_block.iter().all(|b| b.ok) && self.cross.iter().all(|c| c.meet_dim == 0)
    }

    pub fn into_result(self) -> Result<Self, Error> {
        if self.passed() {
            return Ok(self);
        }
        let bad_blocks = self.per_block.iter().filter(|b| !b.ok).count();
        let bad_cross = self.cross.iter().filter(|c| c.meet_dim != 0).count();
        Err(Error::IdentityViolation {
            what: String::from("block injectivity of mu*"),
            degree: self.degree,
            lhs: bad_blocks + bad_cross,
            rhs: 0,
        })
    }
}

fn apply_two_site(v: &[Scalar], d: usize, slots: usize, p: usize, op: &Matrix) -> Vec<Scalar> {
    let inner = d.pow((slots - p - 2) as u32);
    let outer = d.pow(p as u32);
    let mut out = vec![Scalar::zero(); v.len()];
    for o in 0..outer {
        for col in 0..d * d {
            for i in 0..inner {
                let x = &v[(o * d * d + col) * inner + i];
                if x.is_zero() {
                    continue;
                }
                for row in 0..d * d {
                    let c = op.get(row, col);
                    if !c.is_zero() {
                        let cell = &mut out[(o * d * d + row) * inner + i];
                        *cell = &*cell + &(x * c);
                    }
                }
            }
        }
    }
    out
}

fn restrict(m: &Matrix, space: &Subspace) -> Matrix {
    let cols: Vec<Vec<Scalar>> = space.basis_rows().iter().map(|v| m.mul_vec(v)).collect();
    Matrix::from_fn(m.rows(), cols.len(), |i, j| cols[j][i].clone())
}

fn combine(basis: &[Vec<Scalar>], coeffs: &[Scalar], ambient: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); ambient];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            if !x.is_zero() {
                *o = &*o + &(c * x);
            }
        }
    }
    out
}

fn tensor_span(a: &Subspace, b: &Subspace) -> Subspace {
    let nb = b.ambient_dim();
    let mut vecs = Vec::new();
    for u in a.basis_rows() {
        for v in b.basis_rows() {
            let mut w = vec![Scalar::zero(); a.ambient_dim() * nb];
            for (i, x) in u.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in v.iter().enumerate() {
                    if !y.is_zero() {
                        w[i * nb + j] = x * y;
                    }
                }
            }
            vecs.push(w);
        }
    }
    Subspace::span(a.ambient_dim() * nb, vecs)
}
