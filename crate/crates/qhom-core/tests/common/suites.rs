//! Verification suites shared by the topic tests and the acceptance target.
//! Each returns a one-line summary, or a description of the first failure.

use std::time::Instant;

use qhom_core::arith::{Field, Scalar, Subspace};
use qhom_core::bialgebra::{Kind, RealizedAlgebra};
use qhom_core::hecke::{factorial, Hecke, HeckeElement};
use qhom_core::ideals::{component_check, ideal_product_check, key_lemma_check, minor_span};
use qhom_core::invariant::{twisted_relation_check, MuStar, Version};
use qhom_core::operators::{make_flip, make_standard, make_super, make_superflip, HeckeOp, RepKind, TensorRep};
use qhom_core::partitions::Partition;
use qhom_core::projectors::{birank, build_projectors};
use qhom_core::quadratic::{dimension_rows, koszul_numeric_check, Family, QuadraticAlgebra};
use qhom_core::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{p2, q_int, random_element};

pub type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !($cond) {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Yang-Baxter and Hecke checks on the bundled operator families, plus a
/// perturbed entry that must be rejected.
pub fn operator_validity() -> Outcome {
    let p = p2();
    let mut slowest = 0.0f64;
    let mut count = 0;
    let mut timed = |f: &dyn Fn() -> Result<HeckeOp, Error>| -> Result<HeckeOp, String> {
        let t = Instant::now();
        let op = f().map_err(err)?;
        slowest = slowest.max(t.elapsed().as_secs_f64());
        count += 1;
        Ok(op)
    };
    for d in 1..=4 {
        timed(&|| make_standard(d, &p))?;
    }
    for (r, s) in [(1, 1), (2, 1)] {
        timed(&|| make_super(r, s, &p))?;
        timed(&|| Ok(make_superflip(r, s)))?;
    }
    for d in 1..=3 {
        timed(&|| Ok(make_flip(d)))?;
    }
    let fast = slowest < 1.0;
    ensure!(fast, "slowest validation took {slowest:.2}s");
    let std2 = make_standard(2, &p).map_err(err)?;
    let mut m = std2.matrix().clone();
    let v = m.get(1, 2).clone();
    m.set(1, 2, &v + &Scalar::one());
    match HeckeOp::new(2, std2.q().clone(), m) {
        Err(Error::HeckeEquationFails) | Err(Error::YangBaxterFails) => {}
        other => return Err(format!("perturbed operator accepted: {other:?}")),
    }
    Ok(format!("{count} operators valid, slowest {slowest:.3}s, perturbed entry rejected"))
}

fn power(h: &Hecke, a: &HeckeElement, b: &HeckeElement, c: &HeckeElement) -> HeckeElement {
    h.mul(&h.mul(a, b), c)
}

/// Relations, form, Casimir centrality, blocks and (anti)symmetrizers of
/// `H_n` for `1 <= n <= max_n`.
pub fn hecke_suite(q: &Scalar, max_n: usize) -> Outcome {
    let one = Scalar::one();
    for n in 1..=max_n {
        let h = Hecke::new(n, q.clone());
        let t: Vec<HeckeElement> = (1..n).map(|i| h.generator(i)).collect();
        let id = HeckeElement::one(n);
        for i in 0..n.saturating_sub(1) {
            let sq = h.mul(&t[i], &t[i]);
            let rhs = t[i].scale(&(q - &one)).add(&id.scale(q));
            ensure!(sq == rhs, "quadratic relation fails for T_{} in degree {n}", i + 1);
            for j in 0..n - 1 {
                if j == i + 1 {
                    ensure!(
                        power(&h, &t[i], &t[j], &t[i]) == power(&h, &t[j], &t[i], &t[j]),
                        "braid relation fails for T_{}, T_{}",
                        i + 1,
                        j + 1
                    );
                } else if j > i + 1 {
                    ensure!(h.mul(&t[i], &t[j]) == h.mul(&t[j], &t[i]), "T_{} and T_{} do not commute", i + 1, j + 1);
                }
            }
        }

        let basis: Vec<HeckeElement> = h.permutations().iter().map(HeckeElement::basis).collect();
        for a in &basis {
            for b in &basis {
                let ab = h.bilinear_form(a, b).map_err(err)?;
                ensure!(ab == h.bilinear_form(b, a).map_err(err)?, "form is not symmetric in degree {n}");
            }
            for i in 1..n {
                let ai = h.right_generator(a, i);
                for b in &basis {
                    let ib = h.left_generator(i, b);
                    ensure!(
                        h.bilinear_form(&ai, b).map_err(err)? == h.bilinear_form(a, &ib).map_err(err)?,
                        "form is not associative in degree {n}"
                    );
                }
            }
        }

        casimir_centrality(&h)?;

        let blocks = h.block_decomposition().map_err(err)?;
        let total: usize = blocks.iter().map(|b| b.d * b.d).sum();
        ensure!(total == factorial(n), "sum of d^2 is {total}, not {}", factorial(n));
        let mut sum = HeckeElement::zero(n);
        for (x, a) in blocks.iter().enumerate() {
            sum = sum.add(&a.f);
            for (y, b) in blocks.iter().enumerate() {
                let prod = h.mul(&a.f, &b.f);
                let expected = if x == y { a.f.clone() } else { HeckeElement::zero(n) };
                ensure!(prod == expected, "F_{} F_{} is wrong", a.lambda, b.lambda);
            }
            for ti in &t {
                ensure!(h.mul(ti, &a.f) == h.mul(&a.f, ti), "F_{} is not central", a.lambda);
            }
        }
        ensure!(sum == id, "central idempotents do not sum to 1 in degree {n}");

        let x = h.symmetrizer().map_err(err)?;
        let y = h.antisymmetrizer().map_err(err)?;
        ensure!(h.mul(&x, &x) == x, "X_{n} is not idempotent");
        ensure!(h.mul(&y, &y) == y, "Y_{n} is not idempotent");
        for ti in &t {
            ensure!(h.mul(ti, &x) == x.scale(q), "T_i X_{n} != q X_{n}");
            ensure!(h.mul(ti, &y) == y.scale(&-one.clone()), "T_i Y_{n} != -Y_{n}");
        }
    }
    Ok(format!("H_n relations, form, Casimir, blocks, X_n, Y_n verified for n <= {max_n}"))
}

/// `Σ q^{−l(w)} T_iT_w ⊗ T_{w⁻¹} = Σ q^{−l(w)} T_w ⊗ T_{w⁻¹}T_i`, as dense
/// tensors indexed by pairs of ranks.
fn casimir_centrality(h: &Hecke) -> Result<(), String> {
    let dim = h.dim();
    let pairs = h.casimir();
    for i in 1..h.degree() {
        let mut left = vec![Scalar::zero(); dim * dim];
        let mut right = vec![Scalar::zero(); dim * dim];
        for (a, b) in &pairs {
            accumulate(&mut left, &h.left_generator(i, a), b, dim);
            accumulate(&mut right, a, &h.right_generator(b, i), dim);
        }
        ensure!(left == right, "Casimir element does not commute with T_{i}");
    }
    Ok(())
}

fn accumulate(acc: &mut [Scalar], a: &HeckeElement, b: &HeckeElement, dim: usize) {
    for (u, c) in a.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (v, d) in b.coeffs().iter().enumerate() {
            if !d.is_zero() {
                acc[u * dim + v] = &acc[u * dim + v] + &(c * d);
            }
        }
    }
}

/// `d_λ q^{−n(λ)} Π_{hooks} [h]_q`, the scalar by which
/// `z = Σ q^{−l(w)} T_w T_{w⁻¹}` acts on block `λ`.
pub fn z_eigenvalue_oracle(q: &Scalar, lambda: &Partition) -> Scalar {
    let conj = lambda.conjugate();
    let mut acc = Scalar::int(lambda.count_standard_tableaux() as i64);
    for (i, j) in lambda.cells() {
        let hook = (lambda.part(i + 1) - j - 1) + (conj.part(j + 1) - i - 1) + 1;
        acc = &acc * &q_int(q, hook);
    }
    let n_lambda: usize = lambda.parts().iter().enumerate().map(|(i, &p)| i * p).sum();
    &acc * &q.pow(-(n_lambda as i64))
}

/// `z F_λ = (d_λ/k_λ) F_λ` and the independent hook oracle for every
/// `λ ⊢ n <= max_n`; `n!` at `q = 1`; the two blocks of `H_2`.
pub fn block_constants(q: &Scalar, max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let h = Hecke::new(n, q.clone());
        let z = h.casimir_contraction();
        for b in h.block_decomposition().map_err(err)? {
            let zf = h.mul(&z, &b.f);
            ensure!(zf == b.f.scale(&b.z_eigenvalue), "z does not act by a scalar on block {}", b.lambda);
            ensure!(&b.z_eigenvalue * &b.k == Scalar::int(b.d as i64), "z-eigenvalue times k is not d for {}", b.lambda);
            let oracle = z_eigenvalue_oracle(q, &b.lambda);
            ensure!(b.z_eigenvalue == oracle, "z-eigenvalue {} for {} differs from hook oracle {oracle}", b.z_eigenvalue, b.lambda);
            ensure!(b.reconstruct(&h) == b.f, "F_{} is not recovered from its character", b.lambda);
        }
    }
    for n in 1..=max_n {
        let h = Hecke::new(n, Scalar::one());
        for b in h.block_decomposition().map_err(err)? {
            ensure!(b.z_eigenvalue == Scalar::int(factorial(n) as i64), "q=1 eigenvalue on {} is {}", b.lambda, b.z_eigenvalue);
        }
    }
    let h = Hecke::new(2, q.clone());
    let one = Scalar::one();
    for b in h.block_decomposition().map_err(err)? {
        let expected = if b.lambda == Partition::row(2) { q + &one } else { &one + &q.inv().unwrap() };
        ensure!(b.z_eigenvalue == expected, "H_2 eigenvalue on {} is {}", b.lambda, b.z_eigenvalue);
    }
    Ok(format!("z-eigenvalue * k = d and hook oracle for n <= {max_n}; q=1 gives n!; H_2 gives 1+q, 1+1/q"))
}

/// `Im ρ(X_n) = ⋂ R(Λ)ⁿᵢ` and `Im ρ(Y_n) = ⋂ R(S)ⁿᵢ`.
pub fn second_realization(op: &HeckeOp, max_n: usize) -> Outcome {
    let sym = QuadraticAlgebra::symmetric(op);
    let ext = QuadraticAlgebra::exterior(op);
    for n in 1..=max_n {
        let h = Hecke::new(n, op.q().clone());
        let rho = TensorRep::new(op, n, RepKind::Rho);
        let x = Subspace::image(&rho.of(&h.symmetrizer().map_err(err)?));
        let y = Subspace::image(&rho.of(&h.antisymmetrizer().map_err(err)?));
        let (xi, yi) = (ext.relation_intersection(n), sym.relation_intersection(n));
        ensure!(x == xi, "Im rho(X_{n}) has dim {}, intersection {}", x.dim(), xi.dim());
        ensure!(y == yi, "Im rho(Y_{n}) has dim {}, intersection {}", y.dim(), yi.dim());
    }
    Ok(format!("d={} exact equalities for n <= {max_n}", op.dim()))
}

/// Projector kernels and images of `E = M_{RR}`, idempotency of `Φ̄ⁿ`,
/// `Ψ̄ⁿ`, and associativity on random triples.
pub fn bialgebra_suite(op: &HeckeOp, max_n: usize, samples: usize, seed: u64) -> Outcome {
    let a = RealizedAlgebra::realize(op, op, Kind::E, max_n).map_err(err)?;
    for n in 0..=max_n {
        let h = Hecke::new(n, op.q().clone());
        let blocks = h.block_decomposition().map_err(err)?;
        let bundle = build_projectors(op, op, n, &h, &blocks).map_err(err)?;
        let rel = a.presentation.relation_sum(n);
        ensure!(Subspace::kernel(&bundle.psi.bar) == rel, "Ker Psi-bar^{n} differs from the relation ideal");
        let meet = a.presentation.relation_intersection(n);
        ensure!(Subspace::image(&bundle.phi.full) == meet, "Im Phi^{n} differs from the relation intersection");
        for (name, m) in [("Phi", &bundle.phi.bar), ("Psi", &bundle.psi.bar)] {
            ensure!(m.mul(m) == *m, "{name}-bar^{n} is not idempotent");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let i = rng.gen_range(0..=max_n);
        let j = rng.gen_range(0..=max_n - i);
        let k = rng.gen_range(0..=max_n - i - j);
        let x = random_element(&a.component(i).image, &mut rng);
        let y = random_element(&a.component(j).image, &mut rng);
        let z = random_element(&a.component(k).image, &mut rng);
        let xy = a.product(i, &x, j, &y).map_err(err)?;
        let yz = a.product(j, &y, k, &z).map_err(err)?;
        let lhs = a.product(i + j, &xy, k, &z).map_err(err)?;
        let rhs = a.product(i, &x, j + k, &yz).map_err(err)?;
        ensure!(lhs == rhs, "associativity fails on sample {s} in degrees ({i},{j},{k})");
    }
    Ok(format!("d={} q={} to n={max_n}, {samples} associativity samples", op.dim(), op.q()))
}

/// Graded dimensions against rank sums and the Koszul numeric identity.
pub fn dimension_suite() -> Outcome {
    let std2 = make_standard(2, &p2()).map_err(err)?;
    let super11 = make_super(1, 1, &p2()).map_err(err)?;
    let std1 = make_standard(1, &p2()).map_err(err)?;
    let e = dimension_rows(&std2, &std2, Family::E, 4).map_err(err)?;
    let dims: Vec<usize> = e.iter().map(|r| r.computed).collect();
    ensure!(dims == [1, 4, 10, 20, 35], "dim E_n for d=2 is {dims:?}");
    let mut checked = 0;
    let runs: [(&HeckeOp, &HeckeOp, Family, usize); 7] = [
        (&std2, &std2, Family::E, 4),
        (&super11, &super11, Family::E, 4),
        (&std2, &std2, Family::F, 4),
        (&super11, &super11, Family::F, 4),
        (&std2, &super11, Family::M, 4),
        (&super11, &std2, Family::M, 4),
        (&std1, &std2, Family::M, 4),
    ];
    for (s, r, family, max) in runs {
        for row in dimension_rows(s, r, family, max).map_err(err)? {
            ensure!(row.computed == row.predicted, "{family:?} degree {}: {} vs {}", row.degree, row.computed, row.predicted);
            checked += 1;
        }
    }
    let algebras = [
        QuadraticAlgebra::symmetric(&std2),
        QuadraticAlgebra::exterior(&std2),
        QuadraticAlgebra::e(&std2),
        QuadraticAlgebra::f(&std2),
        QuadraticAlgebra::e(&super11),
        QuadraticAlgebra::matrix_algebra(&std2, &super11).map_err(err)?,
    ];
    for a in &algebras {
        koszul_numeric_check(&a.hilbert_series(4), &a.dual_hilbert_series(4), 4).map_err(err)?;
    }
    Ok(format!("{checked} rank-sum rows equal; Koszul identity to degree 4 for {} algebras", algebras.len()))
}

fn nonzero_blocks(a: &RealizedAlgebra, max: usize) -> Vec<Partition> {
    Partition::all_up_to(max).into_iter().filter(|l| l.weight() > 0 && !a.block(l).is_zero()).collect()
}

/// Key lemma, component equality and ideal products on `M_{SR}` to degree 4.
pub fn ideal_suite(op_s: &HeckeOp, op_r: &HeckeOp) -> Outcome {
    let a = RealizedAlgebra::realize(op_s, op_r, Kind::M, 4).map_err(err)?;
    let live = nonzero_blocks(&a, 4);
    let mut lemma = 0;
    for l in &live {
        for k in 1..=4 - l.weight().min(4) {
            let col = Partition::column(k);
            if !live.contains(&col) {
                continue;
            }
            let c = key_lemma_check(&a, l, &col).map_err(err)?;
            ensure!(c.equal, "key lemma fails for {l} and (1^{k}): {} vs {}", c.computed, c.predicted);
            lemma += 1;
        }
    }
    let mut comps = 0;
    for sigma in live.iter().filter(|s| s.weight() <= 2) {
        for n in sigma.weight()..=4 {
            let c = component_check(&a, sigma, n).map_err(err)?;
            ensure!(c.equal, "I_{sigma},{n} has dim {} vs block sum {}", c.computed, c.predicted);
            comps += 1;
        }
    }
    for sigma in [Partition::new(vec![1, 1]), Partition::new(vec![2, 1])] {
        for n in 0..=4 {
            let c = ideal_product_check(&a, &sigma, n).map_err(err)?;
            ensure!(c.equal, "ideal product for {sigma} in degree {n}: {} vs {}", c.computed, c.predicted);
        }
    }
    Ok(format!("{lemma} key-lemma pairs, {comps} ideal components, 2 ideal products"))
}

/// Kernel/rectangle equality and block injectivity of `μ*` for `n <= 3`.
pub fn mu_star_suite(t: &HeckeOp, r: &HeckeOp, s: &HeckeOp, version: Version) -> Result<usize, String> {
    let mu = MuStar::new(t, r, s, version, 3).map_err(err)?;
    mu.relation_check().map_err(err)?;
    for n in 1..=3 {
        let k = mu.kernel_vs_rectangle(n).map_err(err)?;
        ensure!(k.equal, "{version:?} degree {n}: kernel {} vs rectangle {}", k.kernel_dim, k.predicted_kernel_dim);
        let b = mu.block_injectivity_check(n).map_err(err)?;
        ensure!(b.passed(), "{version:?} degree {n}: block injectivity fails");
    }
    Ok(3)
}

/// The triples of the invariant-theory suite, grouped by parameter.
pub fn invariant_triples() -> Vec<(String, HeckeOp, HeckeOp, HeckeOp)> {
    let p = p2();
    let std2 = make_standard(2, &p).unwrap();
    let super11 = make_super(1, 1, &p).unwrap();
    let std1 = make_standard(1, &p).unwrap();
    let flip2 = make_flip(2);
    let sflip = make_superflip(1, 1);
    let triv = make_flip(1);
    let mut out = Vec::new();
    for (tn, t) in [("std2", &std2), ("super11", &super11)] {
        for (sn, s) in [("std2", &std2), ("super11", &super11)] {
            for (rn, r) in [("std1", &std1), ("std2", &std2)] {
                out.push((format!("T={tn} R={rn} S={sn}"), t.clone(), r.clone(), s.clone()));
            }
        }
    }
    for (tn, t) in [("flip2", &flip2), ("superflip11", &sflip)] {
        for (sn, s) in [("flip2", &flip2), ("superflip11", &sflip)] {
            for (rn, r) in [("flip1", &triv), ("flip2", &flip2)] {
                out.push((format!("T={tn} R={rn} S={sn}"), t.clone(), r.clone(), s.clone()));
            }
        }
    }
    out
}

pub fn invariant_suite() -> Outcome {
    let triples = invariant_triples();
    for (name, t, r, s) in &triples {
        for version in [Version::Plain, Version::Twisted] {
            mu_star_suite(t, r, s, version).map_err(|e| format!("{name}: {e}"))?;
        }
        twisted_relation_check(t, r, s).map_err(|e| format!("{name}: twisted relation: {}", err(e)))?;
    }
    Ok(format!("{} triples, both versions, n <= 3; twisted relation in degree 2", triples.len()))
}

/// Projected `k×k` quantum minors span `M_{(1^k)}`.
pub fn minor_suite() -> Outcome {
    let p = p2();
    let mut dims = Vec::new();
    for d in 2..=3 {
        let op = make_standard(d, &p).map_err(err)?;
        let a = RealizedAlgebra::realize(&op, &op, Kind::E, 3).map_err(err)?;
        for k in 2..=3 {
            let span = minor_span(&a, &p, k).map_err(err)?;
            let block = a.block(&Partition::column(k));
            ensure!(span == block, "d={d} k={k}: minors span {} vs block {}", span.dim(), block.dim());
            dims.push(format!("d={d},k={k}:{}", block.dim()));
        }
    }
    Ok(dims.join(" "))
}

/// Birank of standard, super and super-flip operators at probe `r+s+1`.
pub fn birank_suite() -> Outcome {
    let p = p2();
    let mut cases: Vec<(String, HeckeOp, (usize, usize))> = Vec::new();
    for d in 1..=3 {
        cases.push((format!("std{d}"), make_standard(d, &p).unwrap(), (d, 0)));
    }
    for (r, s) in [(1, 1), (2, 1)] {
        cases.push((format!("super{r}{s}"), make_super(r, s, &p).unwrap(), (r, s)));
        cases.push((format!("superflip{r}{s}"), make_superflip(r, s), (r, s)));
    }
    let mut lines = Vec::new();
    let mut failed = Vec::new();
    for (name, op, expected) in &cases {
        let probe = expected.0 + expected.1 + 1;
        match birank(op, probe) {
            Ok(b) if b == *expected => lines.push(format!("{name}->{b:?}")),
            Ok(b) => failed.push(format!("{name}: expected {expected:?}, got {b:?} at probe {probe}")),
            Err(e) => failed.push(format!("{name}: {} at probe {probe}", err(e))),
        }
    }
    if failed.is_empty() {
        Ok(lines.join(" "))
    } else {
        Err(failed.join("; "))
    }
}
