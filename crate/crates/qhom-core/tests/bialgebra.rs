mod common;

use common::suites::bialgebra_suite;
use common::{standard, super_op};
use proptest::prelude::*;
use qhom_core::arith::{unit, Field, Scalar, Subspace};
use qhom_core::bialgebra::{coproduct, coproduct_check, Kind, RealizedAlgebra};
use qhom_core::operators::make_superflip;
use qhom_core::projectors::multiplicities;
use qhom_core::quadratic::{Label, Layout, QuadraticAlgebra};
use qhom_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn standard_e_to_degree_three() {
    let r = bialgebra_suite(&standard(2), 3, 50, 7);
    assert!(r.is_ok(), "{r:?}");
}

#[test]
fn superflip_e_to_degree_three() {
    let r = bialgebra_suite(&make_superflip(1, 1), 3, 50, 11);
    assert!(r.is_ok(), "{r:?}");
}

#[test]
fn super_e_to_degree_three() {
    let r = bialgebra_suite(&super_op(1, 1), 3, 20, 3);
    assert!(r.is_ok(), "{r:?}");
}

#[test]
fn cauchy_block_dimensions() {
    let (s, r) = (standard(2), super_op(1, 1));
    let a = RealizedAlgebra::realize(&s, &r, Kind::M, 3).unwrap();
    let ks = multiplicities(&s, 3).unwrap();
    let lr = multiplicities(&r, 3).unwrap();
    for n in 0..=3 {
        let mut total = 0;
        for b in a.block_split(n) {
            assert_eq!(b.dim(), ks[&b.lambda] * lr[&b.lambda], "block {}", b.lambda);
            total += b.dim();
        }
        assert_eq!(total, a.component(n).image.dim());
    }
}

#[test]
fn every_kind_realizes() {
    let op = standard(2);
    for kind in [Kind::E, Kind::F, Kind::M, Kind::N] {
        let a = RealizedAlgebra::realize(&op, &op, kind, 3).unwrap();
        assert_eq!(a.component(1).image.dim(), 4);
        assert_eq!(a.max_degree(), 3);
    }
    let f = RealizedAlgebra::realize(&op, &op, Kind::F, 3).unwrap();
    let dims: Vec<usize> = (0..=3).map(|n| f.component(n).image.dim()).collect();
    assert_eq!(dims, vec![1, 4, 6, 4]);
}

#[test]
fn coproduct_is_compatible_with_relations() {
    let (a, b) = (standard(2), super_op(1, 1));
    assert!(coproduct_check(&QuadraticAlgebra::e(&a)).is_ok());
    assert!(coproduct_check(&QuadraticAlgebra::e(&b)).is_ok());
    assert!(coproduct_check(&QuadraticAlgebra::e(&make_superflip(1, 1))).is_ok());
}

#[test]
fn coproduct_rejects_a_non_biideal() {
    let layout = Layout::Paired { dw: 2, dv: 2 };
    let e11 = layout.index(&[0]);
    let e12 = layout.index(&[1]);
    let mut v = vec![Scalar::zero(); 16];
    v[layout.index(&[e11, e12])] = Scalar::one();
    let alg = QuadraticAlgebra::new(layout, Subspace::span(16, [v]), Label::M).unwrap();
    assert_eq!(coproduct_check(&alg), Err(Error::BiidealViolation));
}

#[test]
fn coproduct_of_a_generator() {
    let layout = Layout::Paired { dw: 2, dv: 2 };
    let out = coproduct(layout, 1, &unit(4, 1));
    let nonzero: Vec<usize> = out.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect();
    assert_eq!(nonzero, vec![1, 7]);
}

#[test]
fn products_need_component_elements() {
    let op = standard(2);
    let a = RealizedAlgebra::realize(&op, &op, Kind::E, 2).unwrap();
    let rel = a.presentation.relation_sum(2);
    let outside = rel.basis_rows()[0].clone();
    assert_eq!(a.product(2, &outside, 0, &[Scalar::one()]), Err(Error::NotInComponent));
}

#[test]
fn mismatched_parameters_are_rejected() {
    let r = RealizedAlgebra::realize(&standard(2), &make_superflip(1, 1), Kind::M, 2);
    assert_eq!(r.unwrap_err(), Error::ParameterMismatch);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn product_is_associative_on_random_triples(seed in any::<u64>()) {
        let op = super_op(1, 1);
        let r = bialgebra_suite(&op, 2, 10, seed);
        prop_assert!(r.is_ok(), "{:?}", r);
    }
}

#[test]
fn seeded_samples_are_reproducible() {
    let op = standard(2);
    let a = RealizedAlgebra::realize(&op, &op, Kind::E, 1).unwrap();
    let draw = |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::random_element(&a.component(1).image, &mut rng)
    };
    assert_eq!(draw(5), draw(5));
}
