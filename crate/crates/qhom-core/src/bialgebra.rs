//! Matrix bialgebras realized as images of the modified projectors.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{field_check_parameter, Field, Scalar, Subspace};
use crate::error::Error;
use crate::hecke::Hecke;
use crate::operators::HeckeOp;
use crate::partitions::Partition;
use crate::projectors::Projectors;
use crate::quadratic::{Layout, QuadraticAlgebra};

/// Which algebra is realized. `E = M_{RR}`, `F = N_{RR}`, `N_{SR} = M_{S′R}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    E,
    F,
    M,
    N,
}

/// One graded piece: the projectors and the image of `Ψ̄ⁿ`.
#[derive(Clone, Debug)]
pub struct Component {
    pub projectors: Projectors,
    pub image: Subspace,
}

/// `M_λ` inside the degree-`|λ|` component.
#[derive(Clone, Debug)]
pub struct BlockComponent {
    pub lambda: Partition,
    pub subspace: Subspace,
}

impl BlockComponent {
    pub fn degree(&self) -> usize {
        self.lambda.weight()
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

#[derive(Clone, Debug)]
pub struct RealizedAlgebra {
    pub kind: Kind,
    /// The operator acting on the dual factor, after `S ↦ S′` for `F`, `N`.
    pub left: HeckeOp,
    pub right: HeckeOp,
    pub presentation: QuadraticAlgebra,
    pub components: Vec<Component>,
}

impl RealizedAlgebra {
    /// Builds every component up to `max_degree` and checks that
    /// `Ker Ψ̄ⁿ` is the degree-`n` part of the relation ideal.
    pub fn realize(op_s: &HeckeOp, op_r: &HeckeOp, kind: Kind, max_degree: usize) -> Result<Self, Error> {
        if op_s.q() != op_r.q() {
            return Err(Error::ParameterMismatch);
        }
        field_check_parameter(op_r.q(), max_degree.max(2))?;
        let (left, presentation) = match kind {
            Kind::E => (op_r.clone(), QuadraticAlgebra::e(op_r)),
            Kind::F => (op_r.dual_partner(), QuadraticAlgebra::f(op_r)),
            Kind::M => (op_s.clone(), QuadraticAlgebra::matrix_algebra(op_s, op_r)?),
            Kind::N => (op_s.dual_partner(), QuadraticAlgebra::twisted_matrix_algebra(op_s, op_r)?),
        };
        let mut components = Vec::new();
        for n in 0..=max_degree {
            let h = Hecke::new(n, op_r.q().clone());
            let blocks = h.block_decomposition()?;
            let projectors = Projectors::build(&left, op_r, n, &h, &blocks)?;
            let image = Subspace::image(&projectors.bar);
            let kernel = Subspace::kernel(&projectors.bar);
            let relations = presentation.relation_sum(n);
            if kernel != relations {
                return Err(Error::IdentityViolation {
                    what: String::from("projector kernel vs relation ideal"),
                    degree: n,
                    lhs: kernel.dim(),
                    rhs: relations.dim(),
                });
            }
            components.push(Component { projectors, image });
        }
        Ok(RealizedAlgebra { kind, left, right: op_r.clone(), presentation, components })
    }

    pub fn max_degree(&self) -> usize {
        self.components.len() - 1
    }

    pub fn layout(&self) -> Layout {
        self.presentation.layout
    }

    pub fn component(&self, n: usize) -> &Component {
        &self.components[n]
    }

    /// `a · b = Ψ̄^{m+n}(a⊗b)`, with `a⊗b` regrouped positionally.
    pub fn product(&self, m: usize, a: &[Scalar], n: usize, b: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if !self.components[m].image.contains(a) || !self.components[n].image.contains(b) {
            return Err(Error::NotInComponent);
        }
        Ok(self.product_unchecked(m, a, n, b))
    }

    /// Same as [`RealizedAlgebra::product`] for arbitrary tensors.
    pub fn product_unchecked(&self, m: usize, a: &[Scalar], n: usize, b: &[Scalar]) -> Vec<Scalar> {
        let t = self.layout().concat(m, a, n, b);
        self.components[m + n].projectors.bar.mul_vec(&t)
    }

    /// The span of all products of two subspaces, landing in degree `m + n`.
    pub fn product_span(&self, m: usize, a: &Subspace, n: usize, b: &Subspace) -> Subspace {
        let vecs = a.basis_rows().iter().flat_map(|u| b.basis_rows().iter().map(move |v| self.product_unchecked(m, u, n, v)));
        Subspace::span(self.layout().ambient(m + n), vecs.collect::<Vec<_>>())
    }

    /// `M_λ = Im Ψ_λ` for every `λ ⊢ n`.
    pub fn block_split(&self, n: usize) -> Vec<BlockComponent> {
        self.components[n].projectors.blocks.iter().map(|b| BlockComponent { lambda: b.lambda.clone(), subspace: b.image() }).collect()
    }

    /// `M_λ` for a single shape.
    pub fn block(&self, lambda: &Partition) -> Subspace {
        let n = lambda.weight();
        match self.components[n].projectors.block(lambda) {
            Some(b) => b.image(),
            None => Subspace::zero(self.layout().ambient(n)),
        }
    }
}

/// `Δ(e^i_j) = Σ_k e^i_k ⊗ e^k_j` extended multiplicatively to a word of
/// generators; output indexed by `(left word, right word)`.
fn coproduct_of_word(layout: Layout, d: usize, word: &[usize]) -> Vec<(usize, usize)> {
    let n = word.len();
    let mut out = Vec::new();
    for mid in 0..d.pow(n as u32) {
        let ks = digits(mid, d, n);
        let left: Vec<usize> = word.iter().zip(&ks).map(|(&g, &k)| (g / d) * d + k).collect();
        let right: Vec<usize> = word.iter().zip(&ks).map(|(&g, &k)| k * d + g % d).collect();
        out.push((layout.index(&left), layout.index(&right)));
    }
    out
}

fn digits(mut x: usize, base: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = x % base;
        x /= base;
    }
    out
}

/// Applies `Δ` to a degree-`n` tensor over square matrix generators.
pub fn coproduct(layout: Layout, n: usize, v: &[Scalar]) -> Vec<Scalar> {
    let Layout::Paired { dw, dv } = layout else {
        panic!("coproduct needs matrix generators");
    };
    assert_eq!(dw, dv, "coproduct needs square matrix generators");
    let amb = layout.ambient(n);
    let mut out = vec![Scalar::zero(); amb * amb];
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let word = layout.word(n, idx);
        for (l, r) in coproduct_of_word(layout, dw, &word) {
            let t = &mut out[l * amb + r];
            *t = &*t + c;
        }
    }
    out
}

/// Checks that the relations of a matrix algebra generate a bi-ideal,
/// `Δ R ⊆ R⊗T₂ + T₂⊗R`, and that `Δ` is coassociative on generators.
pub fn coproduct_check(algebra: &QuadraticAlgebra) -> Result<(), Error> {
    let layout = algebra.layout;
    let amb = layout.ambient(2);
    let rel = algebra.relations.basis_rows();
    let mut target = Vec::new();
    for r in rel {
        for t in 0..amb {
            let mut a = vec![Scalar::zero(); amb * amb];
            let mut b = vec![Scalar::zero(); amb * amb];
            for (i, c) in r.iter().enumerate() {
                if !c.is_zero() {
                    a[i * amb + t] = c.clone();
                    b[t * amb + i] = c.clone();
                }
            }
            target.push(a);
            target.push(b);
        }
    }
    let target = Subspace::span(amb * amb, target);
    if !rel.iter().all(|r| target.contains(&coproduct(layout, 2, r))) {
        return Err(Error::BiidealViolation);
    }

    let g = layout.ambient(1);
    for x in 0..g {
        let e = crate::arith::unit(g, x);
        let once = coproduct(layout, 1, &e);
        let mut left = vec![Scalar::zero(); g * g * g];
        let mut right = vec![Scalar::zero(); g * g * g];
        for (idx, c) in once.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = (idx / g, idx % g);
            for (j, cc) in coproduct(layout, 1, &crate::arith::unit(g, a)).iter().enumerate() {
                if !cc.is_zero() {
                    let t = &mut left[j * g + b];
                    *t = &*t + &(c * cc);
                }
            }
            for (j, cc) in coproduct(layout, 1, &crate::arith::unit(g, b)).iter().enumerate() {
                if !cc.is_zero() {
                    let t = &mut right[a * g * g + j];
                    *t = &*t + &(c * cc);
                }
            }
        }
        if left != right {
            return Err(Error::BiidealViolation);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coproduct_of_a_word_sums_over_the_middle_index() {
        let layout = Layout::Paired { dw: 2, dv: 2 };
        let terms = coproduct_of_word(layout, 2, &[1, 2]);
        assert_eq!(terms.len(), 4);
        let (l, r) = terms[0];
        assert_eq!(layout.word(2, l), alloc::vec![0, 2]);
        assert_eq!(layout.word(2, r), alloc::vec![1, 0]);
    }

    #[test]
    fn block_components_report_degree() {
        let op = crate::operators::make_standard(2, &Scalar::int(2)).unwrap();
        let a = RealizedAlgebra::realize(&op, &op, Kind::E, 2).unwrap();
        let dims: Vec<(usize, usize)> = a.block_split(2).iter().map(|b| (b.degree(), b.dim())).collect();
        assert_eq!(dims, alloc::vec![(2, 9), (2, 1)]);
    }
}
