mod common;

use common::suites::{bialgebra_suite, block_constants, hecke_suite, second_realization};
use qhom_core::arith::{Backend, Scalar};
use qhom_core::hecke::Hecke;
use qhom_core::operators::{make_standard_q, make_super_q};

#[test]
fn hecke_relations_as_rational_functions() {
    let r = hecke_suite(&Scalar::q(), 3);
    assert!(r.is_ok(), "{r:?}");
}

#[test]
fn block_constants_as_rational_functions() {
    let r = block_constants(&Scalar::q(), 3);
    assert!(r.is_ok(), "{r:?}");
    let h = Hecke::new(3, Scalar::q());
    assert!(h.block_decomposition().unwrap().iter().any(|b| b.k.backend() == Backend::Symbolic));
}

#[test]
fn second_realization_with_symbolic_q() {
    let op = make_standard_q(2, &Scalar::q()).unwrap();
    assert_eq!(op.matrix().backend(), Backend::Symbolic);
    let r = second_realization(&op, 3);
    assert!(r.is_ok(), "{r:?}");
    let r = second_realization(&make_super_q(1, 1, &Scalar::q()).unwrap(), 3);
    assert!(r.is_ok(), "{r:?}");
}

#[test]
fn projectors_with_symbolic_q() {
    let op = make_standard_q(2, &Scalar::q()).unwrap();
    let r = bialgebra_suite(&op, 3, 50, 1);
    assert!(r.is_ok(), "{r:?}");
}
