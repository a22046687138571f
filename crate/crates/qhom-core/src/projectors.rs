//! The Casimir images `Φⁿ`, `Ψⁿ`, their blocks, the modified projectors,
//! multiplicities and birank.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith::{rank, Field, Matrix, Scalar, Subspace};
use crate::error::Error;
use crate::hecke::{BlockData, Hecke};
use crate::operators::{HeckeOp, RepKind, TensorRep};
use crate::partitions::Partition;

/// One block `Ψ_λ = (τ_S(F_λ)⊗ρ_R(F_λ)) Ψⁿ` with its constants.
#[derive(Clone, Debug)]
pub struct BlockProjector {
    pub lambda: Partition,
    pub d: usize,
    pub k: Scalar,
    /// `Ψ_λ`; satisfies `Ψ_λ² = (d_λ/k_λ) Ψ_λ`.
    pub matrix: Matrix,
}

impl BlockProjector {
    /// `(k_λ/d_λ) Ψ_λ`, an idempotent.
    pub fn normalized(&self) -> Matrix {
        self.matrix.scale(&(&self.k / &Scalar::int(self.d as i64)))
    }

    pub fn image(&self) -> Subspace {
        Subspace::image(&self.matrix)
    }
}

/// The projector data of `M_{SR}` in degree `n` on `W*^{⊗n}⊗V^{⊗n}`,
/// with the dual factor as the major Kronecker index.
///
/// `full = Σ_w q^{−l(w)} τ_S(T_w)⊗ρ_R(T_{w⁻¹})`, `bar = Σ_λ (k_λ/d_λ) Ψ_λ`.
#[derive(Clone, Debug)]
pub struct Projectors {
    pub n: usize,
    pub dim_w: usize,
    pub dim_v: usize,
    pub full: Matrix,
    pub bar: Matrix,
    pub blocks: Vec<BlockProjector>,
}

impl Projectors {
    pub fn build(op_s: &HeckeOp, op_r: &HeckeOp, n: usize, h: &Hecke, blocks: &[BlockData]) -> Result<Self, Error> {
        if op_s.q() != op_r.q() || h.q() != op_r.q() {
            return Err(Error::ParameterMismatch);
        }
        if h.degree() != n {
            return Err(Error::RankMismatch { expected: n, found: h.degree() });
        }
        let tau = TensorRep::new(op_s, n, RepKind::Tau);
        let rho = TensorRep::new(op_r, n, RepKind::Rho);
        Ok(Self::from_reps(&tau, &rho, h, blocks))
    }

    /// From any pair of an `H_n^op`-action on the dual factor and an
    /// `H_n`-action on the other.
    pub fn from_reps(left: &TensorRep, right: &TensorRep, h: &Hecke, blocks: &[BlockData]) -> Self {
        let n = h.degree();
        let perms = h.permutations();
        let weights: Vec<Scalar> = (0..perms.len()).map(|r| h.q().pow(-(h.length_of_rank(r) as i64))).collect();
        let inverse_rank: Vec<usize> = perms.iter().map(|w| w.inverse().rank()).collect();
        let ambient = left.dim() * right.dim();

        let mut full = Matrix::zeros(ambient, ambient);
        for r in 0..perms.len() {
            let t = left.of_rank(r).kron(right.of_rank(inverse_rank[r]));
            full.add_scaled(&weights[r], &t);
        }

        let mut bar = Matrix::zeros(ambient, ambient);
        let mut out = Vec::new();
        for b in blocks {
            let fl = left.of(&b.f);
            let fr = right.of(&b.f);
            let mut m = Matrix::zeros(ambient, ambient);
            if !fl.is_zero() && !fr.is_zero() {
                for r in 0..perms.len() {
                    let a = fl.mul(left.of_rank(r));
                    let c = fr.mul(right.of_rank(inverse_rank[r]));
                    m.add_scaled(&weights[r], &a.kron(&c));
                }
            }
            let bp = BlockProjector { lambda: b.lambda.clone(), d: b.d, k: b.k.clone(), matrix: m };
            bar.add_scaled(&Scalar::one(), &bp.normalized());
            out.push(bp);
        }
        Projectors { n, dim_w: dim_root(left.dim(), n), dim_v: dim_root(right.dim(), n), full, bar, blocks: out }
    }

    pub fn ambient_dim(&self) -> usize {
        self.full.rows()
    }

    pub fn image(&self) -> Subspace {
        Subspace::image(&self.bar)
    }

    pub fn block(&self, lambda: &Partition) -> Option<&BlockProjector> {
        self.blocks.iter().find(|b| &b.lambda == lambda)
    }
}

fn dim_root(total: usize, n: usize) -> usize {
    if n == 0 {
        return 1;
    }
    (1..=total).find(|d| d.pow(n as u32) == total).unwrap_or(total)
}

/// `Φⁿ`-type data (via `σ_S`, i.e. `τ` of `S′ = −qS⁻¹`) together with
/// `Ψⁿ`-type data (via `τ_S`).
#[derive(Clone, Debug)]
pub struct ProjectorBundle {
    pub n: usize,
    pub phi: Projectors,
    pub psi: Projectors,
}

pub fn build_projectors(op_s: &HeckeOp, op_r: &HeckeOp, n: usize, h: &Hecke, blocks: &[BlockData]) -> Result<ProjectorBundle, Error> {
    let psi = Projectors::build(op_s, op_r, n, h, blocks)?;
    let phi = Projectors::build(&op_s.dual_partner(), op_r, n, h, blocks)?;
    Ok(ProjectorBundle { n, phi, psi })
}

/// `l_λ = rank ρ(F_λ) / d_λ`.
pub fn multiplicity(rho: &TensorRep, block: &BlockData) -> Result<usize, Error> {
    let rk = rank(&rho.of(&block.f));
    if !rk.is_multiple_of(block.d) {
        return Err(Error::NonIntegralMultiplicity { rank: rk, d: block.d });
    }
    Ok(rk / block.d)
}

/// `l_λ` for every `λ` with `|λ| <= max_degree`.
pub fn multiplicities(op: &HeckeOp, max_degree: usize) -> Result<BTreeMap<Partition, usize>, Error> {
    let mut out = BTreeMap::new();
    for n in 0..=max_degree {
        let h = Hecke::new(n, op.q().clone());
        let blocks = h.block_decomposition()?;
        let rho = TensorRep::new(op, n, RepKind::Rho);
        for b in &blocks {
            out.insert(b.lambda.clone(), multiplicity(&rho, b)?);
        }
    }
    Ok(out)
}

/// The unique minimal `(r, s)` in the product order with
/// `l_λ ≠ 0 ⟺ λ ∈ Γ_{r,s}` for all `|λ| <= probe_degree`.
pub fn birank(op: &HeckeOp, probe_degree: usize) -> Result<(usize, usize), Error> {
    birank_from(&multiplicities(op, probe_degree)?, probe_degree)
}

pub fn birank_from(mults: &BTreeMap<Partition, usize>, probe_degree: usize) -> Result<(usize, usize), Error> {
    let fits = |r: usize, s: usize| mults.iter().all(|(lam, &l)| (l != 0) == lam.in_gamma(r, s));
    let consistent: Vec<(usize, usize)> =
        (0..=probe_degree).flat_map(|r| (0..=probe_degree).map(move |s| (r, s))).filter(|&(r, s)| fits(r, s)).collect();
    let minimal: Vec<(usize, usize)> =
        consistent.iter().copied().filter(|&(r, s)| !consistent.iter().any(|&(a, b)| (a, b) != (r, s) && a <= r && b <= s)).collect();
    match minimal.as_slice() {
        [one] => Ok(*one),
        _ => Err(Error::BirankUndetermined { candidates: minimal }),
    }
}
