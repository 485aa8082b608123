//! Writers and parsers are inverse to each other.

mod common;

use common::mask_to_face;
use eulerchar::format::{
    parse_complex_json, parse_complex_text, parse_dimacs, parse_document, parse_ideal_text,
    write_complex_json, write_complex_text, write_dimacs, write_ideal_text, Document,
};
use eulerchar::reductions::{CnfFormula, Literal};
use eulerchar::translation::minimalize;
use eulerchar::Complex;
use proptest::prelude::*;

/// Complexes on up to 150 vertices, so that multi-word rows are covered.
fn arb_wide_complex() -> impl Strategy<Value = Complex> {
    (0usize..=150).prop_flat_map(|n| {
        let face = prop::collection::vec(0..n.max(1), 0..=n.min(12));
        prop::collection::vec(face, 0..=10).prop_map(move |faces| {
            let faces = faces.into_iter().map(|f| f.into_iter().filter(|&v| v < n));
            Complex::new(n, faces).unwrap()
        })
    })
}

fn arb_formula() -> impl Strategy<Value = CnfFormula> {
    (1usize..=8).prop_flat_map(|n| {
        let literal = (0..n, any::<bool>()).prop_map(|(var, positive)| Literal { var, positive });
        prop::collection::vec(prop::collection::vec(literal, 1..=4), 0..=8).prop_map(
            move |clauses| {
                let clauses = clauses
                    .into_iter()
                    .map(|mut c| {
                        c.sort_by_key(|l| l.var);
                        c.dedup_by_key(|l| l.var);
                        c
                    })
                    .collect();
                CnfFormula::new(n, clauses).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn complex_text(c in arb_wide_complex()) {
        let text = write_complex_text(&c);
        prop_assert!(text.ends_with('\n'));
        let back = parse_complex_text(&text).unwrap();
        prop_assert_eq!(write_complex_text(&back), text);
        prop_assert_eq!(parse_document(&write_complex_text(&c)).unwrap(), Document::Complex(c));
    }

    #[test]
    fn complex_json(c in arb_wide_complex()) {
        let json = write_complex_json(&c);
        prop_assert_eq!(parse_complex_json(&json).unwrap(), c.clone());
        prop_assert_eq!(parse_document(&json).unwrap(), Document::Complex(c));
    }

    #[test]
    fn ideal_text(n in 1usize..=12, masks in prop::collection::vec(any::<u64>(), 0..=10)) {
        let ideal = minimalize(n, masks.iter().map(|&m| mask_to_face(m, n))).unwrap();
        let text = write_ideal_text(&ideal);
        prop_assert_eq!(parse_ideal_text(&text).unwrap(), ideal.clone());
        prop_assert_eq!(parse_document(&text).unwrap(), Document::Ideal(ideal));
    }

    #[test]
    fn dimacs(f in arb_formula()) {
        prop_assert_eq!(parse_dimacs(&write_dimacs(&f)).unwrap(), f);
    }
}
