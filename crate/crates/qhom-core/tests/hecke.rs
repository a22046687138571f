mod common;

use common::suites::{block_constants, hecke_suite, z_eigenvalue_oracle};
use common::{q4, q_factorial};
use proptest::prelude::*;
use qhom_core::arith::{Field, Scalar};
use qhom_core::hecke::{Hecke, HeckeElement, Permutation};
use qhom_core::partitions::Partition;

#[test]
fn relations_form_and_blocks_through_degree_five() {
    let r = hecke_suite(&q4(), 5);
    assert!(r.is_ok(), "{r:?}");
}

#[test]
fn block_constants_through_degree_four() {
    let r = block_constants(&q4(), 4);
    assert!(r.is_ok(), "{r:?}");
}

#[test]
fn block_constants_at_other_parameters() {
    for q in [Scalar::int(3), Scalar::frac(1, 2), Scalar::int(-2)] {
        let r = block_constants(&q, 3);
        assert!(r.is_ok(), "q={q}: {r:?}");
    }
}

#[test]
fn row_and_column_oracles() {
    let q = q4();
    for n in 1..=4 {
        let row = z_eigenvalue_oracle(&q, &Partition::row(n));
        assert_eq!(row, q_factorial(&q, n));
        let col = z_eigenvalue_oracle(&q, &Partition::column(n));
        assert_eq!(col, &q_factorial(&q, n) * &q.pow(-((n * (n - 1) / 2) as i64)));
    }
}

#[test]
fn symmetrizers_are_the_extreme_blocks() {
    let h = Hecke::new(4, q4());
    let blocks = h.block_decomposition().unwrap();
    let f = |l: Partition| blocks.iter().find(|b| b.lambda == l).unwrap().f.clone();
    assert_eq!(f(Partition::row(4)), h.symmetrizer().unwrap());
    assert_eq!(f(Partition::column(4)), h.antisymmetrizer().unwrap());
}

#[test]
fn degenerate_parameter_is_rejected() {
    let h = Hecke::new(3, Scalar::int(-1));
    assert!(h.block_decomposition().is_err());
    assert!(h.symmetrizer().is_err());
}

fn element(n: usize) -> impl Strategy<Value = HeckeElement> {
    let size = (1..=n).product::<usize>();
    prop::collection::vec(-2i64..=2, size).prop_map(move |c| HeckeElement::from_coeffs(n, c.into_iter().map(Scalar::int).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplication_is_associative(a in element(3), b in element(3), c in element(3)) {
        let h = Hecke::new(3, q4());
        prop_assert_eq!(h.mul(&h.mul(&a, &b), &c), h.mul(&a, &h.mul(&b, &c)));
    }

    #[test]
    fn form_is_associative_on_elements(a in element(3), b in element(3), c in element(3)) {
        let h = Hecke::new(3, q4());
        prop_assert_eq!(h.bilinear_form(&h.mul(&a, &b), &c).unwrap(), h.bilinear_form(&a, &h.mul(&b, &c)).unwrap());
    }

    #[test]
    fn lengths_add_along_reduced_words(r in 0usize..24, s in 0usize..24) {
        let (u, w) = (Permutation::unrank(4, r), Permutation::unrank(4, s));
        let h = Hecke::new(4, q4());
        let uw = u.compose(&w);
        if uw.length() == u.length() + w.length() {
            prop_assert_eq!(h.mul(&HeckeElement::basis(&u), &HeckeElement::basis(&w)), HeckeElement::basis(&uw));
        }
        prop_assert_eq!(u.inverse().length(), u.length());
        prop_assert_eq!(Permutation::unrank(4, u.rank()), u);
    }
}

#[test]
fn form_is_nondegenerate() {
    let h = Hecke::new(3, q4());
    for w in h.permutations() {
        let dual = HeckeElement::basis(&w.inverse()).scale(&q4().pow(-(w.length() as i64)));
        assert!(h.bilinear_form(&HeckeElement::basis(w), &dual).unwrap().is_one());
    }
}
