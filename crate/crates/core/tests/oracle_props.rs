//! The two oracles and the f-vector agree with each other.

mod common;

use common::{all_complexes_up_to, arb_complex, random_suite};
use eulerchar::oracle::{euler_by_inclusion_exclusion, euler_by_subsets, f_vector};
use eulerchar::Complex;
use proptest::prelude::*;

fn check(c: &Complex) {
    let subsets = euler_by_subsets(c).unwrap();
    assert_eq!(euler_by_inclusion_exclusion(c).unwrap(), subsets, "{c:?}");
    let f = f_vector(c).unwrap();
    assert_eq!(
        f.euler().unwrap(),
        subsets,
        "{c:?} f-vector {:?}",
        f.entries
    );
}

#[test]
fn oracles_agree_exhaustively() {
    for c in all_complexes_up_to(4) {
        check(&c);
    }
}

#[test]
fn oracles_agree_on_random_suite() {
    for c in random_suite(201, 500, 12, 12) {
        check(&c);
    }
}

#[test]
fn known_values() {
    assert_eq!(euler_by_subsets(&Complex::void(3)).unwrap(), 0);
    assert_eq!(euler_by_subsets(&Complex::empty_face(3)).unwrap(), -1);
    assert_eq!(euler_by_subsets(&Complex::simplex(4)).unwrap(), 0);
    // boundary of the tetrahedron is a 2-sphere
    let sphere = Complex::new(
        4,
        [vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]],
    )
    .unwrap();
    assert_eq!(euler_by_inclusion_exclusion(&sphere).unwrap(), 1);
    assert_eq!(f_vector(&sphere).unwrap().entries, vec![1, 4, 6, 4]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn f_vector_total_counts_faces(c in arb_complex(10, 8)) {
        let f = f_vector(&c).unwrap();
        let faces = (0u64..1 << c.universe())
            .filter(|&m| {
                let face = eulerchar::Face::from_indices(c.universe(), common::mask_to_face(m, c.universe())).unwrap();
                c.contains_face(&face)
            })
            .count() as u64;
        prop_assert_eq!(f.total(), faces);
    }
}
