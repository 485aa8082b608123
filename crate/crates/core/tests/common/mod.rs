//! Instance generators and helpers shared by the integration tests.

#![allow(dead_code)]

use eulerchar::{Algorithm, Complex, EngineConfig};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Vertex list of the bits set in `mask`.
pub fn mask_to_face(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Every complex on `n` vertices, one per antichain of subsets (including
/// the void complex and `{∅}`).
pub fn all_complexes(n: usize) -> Vec<Complex> {
    fn walk(i: u64, end: u64, n: usize, chosen: &mut Vec<u64>, out: &mut Vec<Complex>) {
        if i == end {
            let faces = chosen.iter().map(|&m| mask_to_face(m, n));
            out.push(Complex::new(n, faces).expect("masks fit the universe"));
            return;
        }
        walk(i + 1, end, n, chosen, out);
        if chosen.iter().all(|&g| i & g != i && i & g != g) {
            chosen.push(i);
            walk(i + 1, end, n, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    walk(0, 1 << n, n, &mut Vec::new(), &mut out);
    out
}

/// Every complex on at most `n` vertices.
pub fn all_complexes_up_to(n: usize) -> Vec<Complex> {
    (0..=n).flat_map(all_complexes).collect()
}

/// A seeded random complex on `1..=max_n` vertices built from `1..=max_m`
/// random faces (maximalized, so it may end up with fewer facets). Face
/// density varies per instance.
pub fn random_complex(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Complex {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let p: f64 = rng.gen_range(0.2..0.85);
    let faces: Vec<Vec<usize>> = (0..m)
        .map(|_| (0..n).filter(|_| rng.gen_bool(p)).collect())
        .collect();
    Complex::new(n, faces).expect("faces fit the universe")
}

/// `count` seeded random complexes for a named suite.
pub fn random_suite(seed: u64, count: usize, max_n: usize, max_m: usize) -> Vec<Complex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_complex(&mut rng, max_n, max_m))
        .collect()
}

/// Every (algorithm, pivot strategy, nerve) combination.
pub fn all_configs() -> Vec<EngineConfig> {
    let mut out = Vec::new();
    for alg in [Algorithm::Bcrt, Algorithm::Dbms] {
        for &pivot in alg.strategies() {
            for nerve in [false, true] {
                out.push(
                    EngineConfig::new(alg)
                        .with_pivot(pivot)
                        .with_nerve(nerve)
                        .with_seed(11),
                );
            }
        }
    }
    out
}

/// True when no facet contains another and no facet repeats.
pub fn is_antichain(c: &Complex) -> bool {
    let facets: Vec<_> = c.facets().collect();
    for (i, a) in facets.iter().enumerate() {
        for b in &facets[i + 1..] {
            if a.is_subset(b) || b.is_subset(a) {
                return false;
            }
        }
    }
    true
}

/// Proptest strategy: a complex on `1..=max_n` vertices from up to `max_m`
/// random faces.
pub fn arb_complex(max_n: usize, max_m: usize) -> impl Strategy<Value = Complex> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..(1u64 << n), 0..=max_m).prop_map(move |masks| {
            Complex::new(n, masks.iter().map(|&m| mask_to_face(m, n))).expect("masks fit")
        })
    })
}

/// Like [`arb_complex`] but never void.
pub fn arb_nonvoid_complex(max_n: usize, max_m: usize) -> impl Strategy<Value = Complex> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..(1u64 << n), 1..=max_m).prop_map(move |masks| {
            Complex::new(n, masks.iter().map(|&m| mask_to_face(m, n))).expect("masks fit")
        })
    })
}
