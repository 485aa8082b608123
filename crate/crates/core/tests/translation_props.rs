//! Complexes against square-free monomial ideals.

mod common;

use common::{all_complexes_up_to, arb_complex, mask_to_face, random_suite};
use eulerchar::translation::{
    complex_to_ideal, ideal_to_complex, minimalize, transpose_ideal, SquareFreeIdeal,
};
use eulerchar::{euler, Complex, EngineConfig};
use proptest::prelude::*;

fn engine_value(c: &Complex) -> i64 {
    euler(c, &EngineConfig::default()).unwrap().0.get()
}

fn arb_ideal(max_vars: usize, max_gens: usize) -> impl Strategy<Value = SquareFreeIdeal> {
    (1..=max_vars).prop_flat_map(move |n| {
        prop::collection::vec(0..(1u64 << n), 1..=max_gens).prop_map(move |masks| {
            minimalize(n, masks.iter().map(|&m| mask_to_face(m, n))).unwrap()
        })
    })
}

/// Transposing keeps the Euler characteristic. Complexes on no vertices are
/// skipped: `{∅}` there is the unit ideal in zero variables, whose
/// transpose has no generators.
fn check_transpose(c: &Complex) {
    if c.is_void() || c.universe() == 0 {
        return;
    }
    let ideal = complex_to_ideal(c);
    let t = transpose_ideal(&ideal).unwrap();
    assert_eq!(t.num_vars(), ideal.num_generators());
    assert_eq!(
        engine_value(&ideal_to_complex(&t)),
        engine_value(c),
        "{c:?} -> {t:?}"
    );
}

/// The transpose of the ideal, read back as a complex, is the nerve.
fn check_transpose_is_nerve(c: &Complex) {
    if c.is_void() || c.universe() == 0 {
        return;
    }
    let t = transpose_ideal(&complex_to_ideal(c)).unwrap();
    assert_eq!(ideal_to_complex(&t), c.nerve().unwrap(), "{c:?}");
}

#[test]
fn transpose_invariance_exhaustive() {
    for c in all_complexes_up_to(4) {
        check_transpose(&c);
    }
}

#[test]
fn transpose_invariance_random() {
    for c in random_suite(501, 300, 12, 12) {
        check_transpose(&c);
    }
}

#[test]
fn transpose_matches_nerve() {
    for c in all_complexes_up_to(4)
        .iter()
        .chain(&random_suite(502, 300, 12, 12))
    {
        check_transpose_is_nerve(c);
    }
}

#[test]
fn complexes_round_trip_exhaustively() {
    for c in all_complexes_up_to(4) {
        let ideal = complex_to_ideal(&c);
        assert_eq!(ideal.num_generators(), c.num_facets());
        assert_eq!(ideal_to_complex(&ideal), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn complex_round_trip(c in arb_complex(12, 12)) {
        prop_assert_eq!(ideal_to_complex(&complex_to_ideal(&c)), c);
    }

    #[test]
    fn ideal_round_trip(i in arb_ideal(12, 12)) {
        prop_assert_eq!(complex_to_ideal(&ideal_to_complex(&i)), i);
    }

    #[test]
    fn transpose_twice_keeps_value(i in arb_ideal(10, 10)) {
        let once = transpose_ideal(&i).unwrap();
        let twice = transpose_ideal(&once).unwrap();
        let v = engine_value(&ideal_to_complex(&i));
        prop_assert_eq!(engine_value(&ideal_to_complex(&once)), v);
        prop_assert_eq!(engine_value(&ideal_to_complex(&twice)), v);
    }
}
