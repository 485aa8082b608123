//! Engine results against the oracle for every configuration.

mod common;

use common::{all_complexes_up_to, all_configs, random_suite};
use eulerchar::generators::gen_random;
use eulerchar::oracle::euler_by_subsets;
use eulerchar::{euler, Algorithm, Complex, EngineConfig, PivotStrategy};

fn check_all_configs(c: &Complex) {
    let expected = euler_by_subsets(c).unwrap();
    for cfg in all_configs() {
        let (value, _) = euler(c, &cfg).unwrap();
        assert_eq!(value, expected, "{c:?} with {cfg:?}");
    }
}

#[test]
fn every_config_matches_oracle_exhaustively() {
    for c in all_complexes_up_to(4) {
        check_all_configs(&c);
    }
}

#[test]
fn every_config_matches_oracle_on_random_suite() {
    for c in random_suite(301, 500, 12, 12) {
        check_all_configs(&c);
    }
}

#[test]
fn independence_does_not_change_results() {
    for c in random_suite(302, 300, 12, 12) {
        for mut cfg in [
            EngineConfig::new(Algorithm::Bcrt),
            EngineConfig::new(Algorithm::Dbms),
        ] {
            cfg.use_independence_at_root = false;
            cfg.use_independence_interior = false;
            let off = euler(&c, &cfg).unwrap().0;
            cfg.use_independence_at_root = true;
            cfg.use_independence_interior = true;
            assert_eq!(euler(&c, &cfg).unwrap().0, off, "{c:?}");
        }
    }
}

#[test]
fn runs_are_deterministic() {
    for c in random_suite(303, 50, 12, 12) {
        for cfg in all_configs() {
            let (v1, s1) = euler(&c, &cfg).unwrap();
            let (v2, s2) = euler(&c, &cfg).unwrap();
            assert_eq!(v1, v2);
            assert_eq!(s1.nodes_expanded, s2.nodes_expanded);
            assert_eq!(s1.base_case_hits, s2.base_case_hits);
        }
    }
}

#[test]
fn larger_random_complexes_agree_across_algorithms() {
    for seed in 0..10 {
        let c = gen_random(22, 40, seed).unwrap();
        let expected = euler_by_subsets(&c).unwrap();
        for alg in [Algorithm::Bcrt, Algorithm::Dbms] {
            assert_eq!(euler(&c, &EngineConfig::new(alg)).unwrap().0, expected);
        }
    }
}

#[test]
fn mismatched_strategy_is_rejected() {
    let cfg = EngineConfig::new(Algorithm::Bcrt).with_pivot(PivotStrategy::RareMax);
    assert!(euler(&Complex::simplex(2), &cfg).is_err());
}

fn median_nodes(cfg: &EngineConfig) -> u64 {
    let mut nodes: Vec<u64> = (0..20)
        .map(|seed| {
            euler(&gen_random(30, 30, seed).unwrap(), cfg)
                .unwrap()
                .1
                .nodes_expanded
        })
        .collect();
    nodes.sort_unstable();
    nodes[nodes.len() / 2]
}

#[test]
fn raremax_beats_minsupp_on_random_30_30() {
    let dbms = EngineConfig::new(Algorithm::Dbms);
    let raremax = median_nodes(&dbms.clone().with_pivot(PivotStrategy::RareMax));
    let minsupp = median_nodes(&dbms.with_pivot(PivotStrategy::MinSupp));
    assert!(raremax <= minsupp, "raremax {raremax} > minsupp {minsupp}");
}
