//! Invariant ideals of `M_{SR}` and quantum minors.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{Field, Scalar, Subspace};
use crate::bialgebra::RealizedAlgebra;
use crate::error::Error;
use crate::hecke::Permutation;
use crate::partitions::{lr_support, Partition};
use crate::quadratic::Layout;

/// The degree-`n` part of the ideal generated by `M_σ`.
#[derive(Clone, Debug)]
pub struct IdealComponent {
    pub sigma: Partition,
    pub n: usize,
    pub subspace: Subspace,
}

/// A computed subspace set against its predicted block sum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Comparison {
    pub degree: usize,
    pub computed: usize,
    pub predicted: usize,
    pub equal: bool,
}

impl Comparison {
    fn new(degree: usize, computed: &Subspace, predicted: &Subspace) -> Self {
        Comparison { degree, computed: computed.dim(), predicted: predicted.dim(), equal: computed == predicted }
    }

    pub fn into_result(self, what: &str) -> Result<Self, Error> {
        if self.equal {
            Ok(self)
        } else {
            Err(Error::IdentityViolation { what: String::from(what), degree: self.degree, lhs: self.computed, rhs: self.predicted })
        }
    }
}

/// `Σ M_τ` over `τ ⊢ n` passing `keep`.
pub fn block_sum(a: &RealizedAlgebra, n: usize, keep: impl Fn(&Partition) -> bool) -> Subspace {
    let mut acc = Subspace::zero(a.layout().ambient(n));
    for b in a.block_split(n) {
        if keep(&b.lambda) {
            acc = acc.sum(&b.subspace).expect("same ambient");
        }
    }
    acc
}

/// Span of `Ψ̄ⁿ(u⊗g⊗v)` for `u ∈ A_p`, `g ∈ M_σ`, `v ∈ A_r`, `p + |σ| + r = n`.
pub fn ideal_component(a: &RealizedAlgebra, sigma: &Partition, n: usize) -> Result<IdealComponent, Error> {
    let generator = a.block(sigma);
    if generator.is_zero() {
        return Err(Error::EmptyGenerator);
    }
    Ok(IdealComponent { sigma: sigma.clone(), n, subspace: generated_component(a, sigma.weight(), &generator, n) })
}

fn generated_component(a: &RealizedAlgebra, m: usize, generator: &Subspace, n: usize) -> Subspace {
    let mut acc = Subspace::zero(a.layout().ambient(n));
    if n < m {
        return acc;
    }
    for p in 0..=n - m {
        let r = n - m - p;
        let left = a.product_span(p, &a.component(p).image, m, generator);
        let both = a.product_span(p + m, &left, r, &a.component(r).image);
        acc = acc.sum(&both).expect("same ambient");
    }
    acc
}

/// `I_{σ,n}` against `⊕_{τ ⊇ σ, τ ⊢ n} M_τ`.
pub fn component_check(a: &RealizedAlgebra, sigma: &Partition, n: usize) -> Result<Comparison, Error> {
    let computed = ideal_component(a, sigma, n)?.subspace;
    let predicted = block_sum(a, n, |t| t.contains(sigma));
    Ok(Comparison::new(n, &computed, &predicted))
}

/// `M_λ · M_μ` against `Σ_{γ ∈ C_{λ,μ}} M_γ`; needs every `c^γ_{λμ} <= 1`.
pub fn key_lemma_check(a: &RealizedAlgebra, lambda: &Partition, mu: &Partition) -> Result<Comparison, Error> {
    let support = lr_support(lambda, mu);
    if support.iter().any(|(_, c)| *c > 1) {
        return Err(Error::MultiplicityTooHigh);
    }
    let (ml, mm) = (a.block(lambda), a.block(mu));
    if ml.is_zero() || mm.is_zero() {
        return Err(Error::EmptyGenerator);
    }
    let n = lambda.weight() + mu.weight();
    let computed = a.product_span(lambda.weight(), &ml, mu.weight(), &mm);
    let predicted = block_sum(a, n, |g| support.iter().any(|(s, _)| s == g));
    Ok(Comparison::new(n, &computed, &predicted))
}

/// Degree-`n` part of `I(J)` for a set `J` listed up to degree `n`.
pub fn ideal_of_set(a: &RealizedAlgebra, j: &[Partition], n: usize) -> Subspace {
    block_sum(a, n, |t| j.contains(t))
}

/// Degree-`n` part of the two-sided ideal generated by `I(J)`.
pub fn ideal_generated_by_set(a: &RealizedAlgebra, j: &[Partition], n: usize) -> Subspace {
    let mut acc = Subspace::zero(a.layout().ambient(n));
    for m in 0..=n {
        let gen = ideal_of_set(a, j, m);
        if !gen.is_zero() {
            acc = acc.sum(&generated_component(a, m, &gen, n)).expect("same ambient");
        }
    }
    acc
}

/// `I_{(1^{σ_1})} ⋯ I_{(1^{σ_r})}` in degree `n` against the β-order
/// prediction `⊕_{τ ≥ σ′} M_τ`.
pub fn ideal_product_check(a: &RealizedAlgebra, sigma: &Partition, n: usize) -> Result<Comparison, Error> {
    let factors: Vec<Vec<Subspace>> = sigma
        .parts()
        .iter()
        .map(|&k| {
            let col = Partition::column(k);
            (0..=n)
                .map(|m| if m < k { Ok(Subspace::zero(a.layout().ambient(m))) } else { ideal_component(a, &col, m).map(|c| c.subspace) })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let mut acc: Vec<Subspace> = (0..=n).map(|m| if m == 0 { Subspace::full(1) } else { Subspace::zero(a.layout().ambient(m)) }).collect();
    for f in &factors {
        let mut next: Vec<Subspace> = (0..=n).map(|m| Subspace::zero(a.layout().ambient(m))).collect();
        for (i, x) in acc.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in f.iter().enumerate().take(n + 1 - i) {
                if y.is_zero() {
                    continue;
                }
                let p = a.product_span(i, x, j, y);
                next[i + j] = next[i + j].sum(&p).expect("same ambient");
            }
        }
        acc = next;
    }
    let conj = sigma.conjugate();
    let predicted = block_sum(a, n, |t| t.beta_geq(&conj));
    Ok(Comparison::new(n, &acc[n], &predicted))
}

/// `Σ_{σ ∈ S_k} (−p)^{−l(σ)} e^{j_1}_{i_{1σ}} ⋯ e^{j_k}_{i_{kσ}}` with
/// `e^j_i` the generator `ξ^j ⊗ x_i`; indices 0-based.
pub fn quantum_minor(dim_s: usize, dim_r: usize, p: &Scalar, rows: &[usize], cols: &[usize]) -> Result<Vec<Scalar>, Error> {
    let k = rows.len();
    let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
    if cols.len() != k || !increasing(rows) || !increasing(cols) || rows.iter().any(|&i| i >= dim_r) || cols.iter().any(|&j| j >= dim_s) {
        return Err(Error::BadIndexLists);
    }
    let layout = Layout::Paired { dw: dim_s, dv: dim_r };
    let mut out = vec![Scalar::zero(); layout.ambient(k)];
    let mp = -p.clone();
    for s in Permutation::all(k) {
        let word: Vec<usize> = (0..k).map(|m| cols[m] * dim_r + rows[s.image(m)]).collect();
        let idx = layout.index(&word);
        out[idx] = &out[idx] + &mp.pow(-(s.length() as i64));
    }
    Ok(out)
}

/// Span of the images in `Im Ψ̄^k` of all `k×k` quantum minors.
pub fn minor_span(a: &RealizedAlgebra, p: &Scalar, k: usize) -> Result<Subspace, Error> {
    let Layout::Paired { dw, dv } = a.layout() else {
        return Err(Error::BadIndexLists);
    };
    let bar = &a.component(k).projectors.bar;
    let mut vecs = Vec::new();
    for r in subsets(dv, k) {
        for c in subsets(dw, k) {
            vecs.push(bar.mul_vec(&quantum_minor(dw, dv, p, &r, &c)?));
        }
    }
    Ok(Subspace::span(a.layout().ambient(k), vecs))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comparison_reports_violations() {
        let c = Comparison { degree: 3, computed: 2, predicted: 4, equal: false };
        match c.into_result("ideal") {
            Err(Error::IdentityViolation { degree, lhs, rhs, .. }) => assert_eq!((degree, lhs, rhs), (3, 2, 4)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn minors_need_matching_index_lists() {
        let p = Scalar::int(2);
        assert_eq!(quantum_minor(2, 2, &p, &[0, 0], &[0, 1]).unwrap_err(), Error::BadIndexLists);
        let m = quantum_minor(2, 2, &p, &[0], &[1]).unwrap();
        assert_eq!(m.iter().filter(|c| !c.is_zero()).count(), 1);
    }
}
