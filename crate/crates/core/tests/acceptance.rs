//! Acceptance report: one PASS/FAIL line per criterion, exiting non-zero if
//! any criterion fails. All comparisons are exact.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::{all_complexes_up_to, all_configs, mask_to_face, random_suite};
use eulerchar::engine::{split_bcrt, split_dbms};
use eulerchar::generators::{gen_random, GeneratorSpec};
use eulerchar::oracle::{euler_by_subsets, f_vector};
use eulerchar::reductions::{
    complex_with_euler, count_sat_bruteforce, euler_construction_bound, sat_to_complex, CnfFormula,
    Literal,
};
use eulerchar::translation::{complex_to_ideal, ideal_to_complex, transpose_ideal};
use eulerchar::{euler, Algorithm, Complex, EngineConfig, Face, PivotStrategy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// (spec, vertices, facets, value) for the benchmark instances.
const TABLE: &[(&str, usize, usize, i64)] = &[
    ("rook:6,6", 36, 720, 185),
    ("rook:7,7", 49, 5_040, -204),
    ("rook:8,8", 64, 40_320, -6_209),
    ("match:9", 36, 945, -28),
    ("match:10", 45, 945, -1_216),
    ("match:11", 55, 10_395, -936),
    ("match:12", 66, 10_395, 12_440),
    ("match:13", 78, 135_135, 23_672),
    ("nicgraph:7,2", 21, 217, -120),
    ("nicgraph:8,2", 28, 504, -720),
    ("nicgraph:9,2", 36, 1_143, -5_040),
];

/// Wall-clock budgets per instance, in seconds.
const BUDGETS: &[(&str, u64)] = &[("rook:8,8", 60), ("match:13", 300)];

fn chi(c: &Complex) -> i64 {
    euler_by_subsets(c).unwrap().get()
}

fn engine_value(c: &Complex) -> i64 {
    euler(c, &EngineConfig::default()).unwrap().0.get()
}

fn criterion_1() -> Outcome {
    let mut problems = Vec::new();
    let mut slowest = (String::new(), Duration::ZERO);
    for &(spec, vertices, facets, value) in TABLE {
        let c = spec.parse::<GeneratorSpec>().unwrap().generate().unwrap();
        if (c.universe(), c.num_facets()) != (vertices, facets) {
            problems.push(format!(
                "{spec} has {} vertices, {} facets",
                c.universe(),
                c.num_facets()
            ));
        }
        for alg in [Algorithm::Bcrt, Algorithm::Dbms] {
            let start = Instant::now();
            let got = euler(&c, &EngineConfig::new(alg)).map(|(v, _)| v.get());
            let took = start.elapsed();
            if took > slowest.1 {
                slowest = (format!("{spec} {alg}"), took);
            }
            if got.as_ref().ok() != Some(&value) {
                problems.push(format!("{spec} {alg} gave {got:?}, expected {value}"));
            }
            if let Some(&(_, secs)) = BUDGETS.iter().find(|(s, _)| *s == spec) {
                if took > Duration::from_secs(secs) {
                    problems.push(format!("{spec} {alg} took {took:.1?}, budget {secs} s"));
                }
            }
        }
    }
    if problems.is_empty() {
        Ok(format!(
            "11 instances x 2 algorithms exact; slowest {} {:.2?}",
            slowest.0, slowest.1
        ))
    } else {
        Err(problems.join("; "))
    }
}

fn criterion_2() -> Outcome {
    let mut details = Vec::new();
    for (spec, expected) in [("rook:6,6", 13_327u64), ("match:9", 2_620)] {
        let c = spec.parse::<GeneratorSpec>().unwrap().generate().unwrap();
        let total = f_vector(&c).map_err(|e| format!("{spec}: {e}"))?.total();
        if total != expected {
            return Err(format!("{spec} has {total} faces, expected {expected}"));
        }
        details.push(format!("{spec} {total}"));
    }
    Ok(details.join(", "))
}

fn criterion_3() -> Outcome {
    let configs = all_configs();
    let cases: Vec<Complex> = all_complexes_up_to(4)
        .into_iter()
        .chain(random_suite(301, 500, 12, 12))
        .collect();
    let mut mismatches = 0;
    let mut first = None;
    for c in &cases {
        let expected = euler_by_subsets(c).unwrap();
        for cfg in &configs {
            let got = euler(c, cfg).map(|(v, _)| v);
            if got.as_ref().ok() != Some(&expected) {
                mismatches += 1;
                first.get_or_insert_with(|| format!("{c:?} with {cfg:?}: {got:?} vs {expected}"));
            }
        }
    }
    let checked = cases.len() * configs.len();
    match first {
        None => Ok(format!(
            "{} complexes x {} configurations, 0 mismatches",
            cases.len(),
            configs.len()
        )),
        Some(f) => Err(format!("{mismatches} of {checked} mismatched, first {f}")),
    }
}

fn identity_sweep() -> Vec<Complex> {
    all_complexes_up_to(5)
        .into_iter()
        .chain(random_suite(101, 200, 10, 12))
        .collect()
}

fn check_splits(c: &Complex) -> Result<(), String> {
    let total = chi(c);
    if !c.is_void() {
        let n = c.universe();
        for m in 0..(1u64 << n) - 1 {
            let sigma = Face::from_indices(n, mask_to_face(m, n)).unwrap();
            if !c.contains_face(&sigma) {
                let (inner, outer) = split_bcrt(c, &sigma);
                if chi(&inner) + chi(&outer) != total {
                    return Err(format!("split on {sigma} of {c:?}"));
                }
            }
        }
    }
    if c.num_facets() >= 2 {
        for f in 0..c.num_facets() {
            let (rest, proj) = split_dbms(c, f);
            if chi(&rest) - chi(&proj) != total {
                return Err(format!("facet split on {f} of {c:?}"));
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let sweep = identity_sweep();
    for c in &sweep {
        check_splits(c)?;
        if !c.is_void() && chi(&c.nerve().unwrap()) != chi(c) {
            return Err(format!("nerve changed the value of {c:?}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for _ in 0..300 {
        let a = common::random_complex(&mut rng, 6, 8);
        let b = common::random_complex(&mut rng, 6, 8);
        if chi(&a.join(&b).unwrap()) != chi(&a) * chi(&b) {
            return Err(format!("join of {a:?} and {b:?} is not multiplicative"));
        }
    }
    let translation_sweep = all_complexes_up_to(4)
        .into_iter()
        .chain(random_suite(501, 300, 12, 12));
    let mut transposed = 0;
    for c in translation_sweep.filter(|c| !c.is_void() && c.universe() > 0) {
        let t = transpose_ideal(&complex_to_ideal(&c)).unwrap();
        let back = ideal_to_complex(&t);
        if engine_value(&back) != engine_value(&c) {
            return Err(format!("transpose changed the value of {c:?}"));
        }
        if back != c.nerve().unwrap() {
            return Err(format!("transpose of {c:?} is not its nerve"));
        }
        transposed += 1;
    }
    Ok(format!(
        "splits and nerve on {} complexes, 300 joins, transpose on {transposed} ideals",
        sweep.len()
    ))
}

fn criterion_5() -> Outcome {
    let mut largest = 0;
    for k in -1000..=1000 {
        let c = complex_with_euler(k).map_err(|e| format!("k = {k}: {e}"))?;
        let got = engine_value(&c);
        if got != k {
            return Err(format!("k = {k} gave {got}"));
        }
        let bound = euler_construction_bound(k) as usize;
        if c.universe() > bound || c.num_facets() > bound {
            return Err(format!(
                "k = {k}: {} vertices, {} facets, bound {bound}",
                c.universe(),
                c.num_facets()
            ));
        }
        largest = largest.max(c.universe().max(c.num_facets()));
    }
    Ok(format!("2001 targets exact, largest size {largest}"))
}

fn all_clauses(n: usize) -> Vec<Vec<Literal>> {
    (1..3usize.pow(n as u32))
        .map(|code| {
            (0..n)
                .filter_map(|var| match code / 3usize.pow(var as u32) % 3 {
                    1 => Some(Literal::pos(var)),
                    2 => Some(Literal::neg(var)),
                    _ => None,
                })
                .collect()
        })
        .collect()
}

fn check_formula(f: &CnfFormula) -> Result<(), String> {
    let (c, sign) = sat_to_complex(f).map_err(|e| format!("{f:?}: {e}"))?;
    let count = count_sat_bruteforce(f).unwrap() as i64;
    let got = sign * engine_value(&c);
    if got == count {
        Ok(())
    } else {
        Err(format!("{f:?}: complex gives {got}, truth table {count}"))
    }
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        let clauses = all_clauses(n);
        let k = clauses.len();
        let mut formulas = vec![vec![]];
        for i in 0..k {
            formulas.push(vec![clauses[i].clone()]);
            for j in i..k {
                formulas.push(vec![clauses[i].clone(), clauses[j].clone()]);
                for l in j..k {
                    formulas.push(vec![
                        clauses[i].clone(),
                        clauses[j].clone(),
                        clauses[l].clone(),
                    ]);
                }
            }
        }
        for f in formulas {
            check_formula(&CnfFormula::new(n, f).unwrap())?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    for _ in 0..50 {
        let n = rng.gen_range(1..=6);
        let clauses = (0..rng.gen_range(1..=6))
            .map(|_| {
                let mut vars: Vec<usize> = (0..n).collect();
                (0..rng.gen_range(1..=n.min(3)))
                    .map(|_| Literal {
                        var: vars.swap_remove(rng.gen_range(0..vars.len())),
                        positive: rng.gen(),
                    })
                    .collect()
            })
            .collect();
        check_formula(&CnfFormula::new(n, clauses).unwrap())?;
        checked += 1;
    }
    let worked = CnfFormula::new(
        3,
        vec![
            vec![Literal::pos(0), Literal::neg(1)],
            vec![Literal::pos(0), Literal::pos(2)],
            vec![Literal::neg(1), Literal::pos(2)],
        ],
    )
    .unwrap();
    check_formula(&worked)?;
    if count_sat_bruteforce(&worked).unwrap() != 4 {
        return Err("worked formula does not have 4 models".into());
    }
    Ok(format!(
        "{checked} formulas plus the worked example (4 models)"
    ))
}

fn median_nodes(algorithm: Algorithm, pivot: PivotStrategy) -> u64 {
    let cfg = EngineConfig::new(algorithm).with_pivot(pivot);
    let mut nodes: Vec<u64> = (0..20)
        .map(|seed| {
            euler(&gen_random(30, 30, seed).unwrap(), &cfg)
                .unwrap()
                .1
                .nodes_expanded
        })
        .collect();
    nodes.sort_unstable();
    nodes[nodes.len() / 2]
}

fn criterion_7() -> Outcome {
    let raremax = median_nodes(Algorithm::Dbms, PivotStrategy::RareMax);
    let minsupp = median_nodes(Algorithm::Dbms, PivotStrategy::MinSupp);
    let popvar = median_nodes(Algorithm::Bcrt, PivotStrategy::PopVar);
    let popgcd = median_nodes(Algorithm::Bcrt, PivotStrategy::PopGcd);
    let summary = format!(
        "median nodes raremax {raremax} / minsupp {minsupp}, popvar {popvar} / popgcd {popgcd}"
    );
    if raremax <= minsupp && popvar <= popgcd {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn criterion_8() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_eulerchar");
    let mut runs = 0;
    for spec in ["random:16,40,seed=2", "nicgraph:6,2", "rook:5,5"] {
        let path = dir.path().join(format!("{runs}.txt"));
        let status = Command::new(bin)
            .args(["gen", spec, "-o"])
            .arg(&path)
            .status()
            .unwrap();
        if !status.success() {
            return Err(format!("gen {spec} failed"));
        }
        for (alg, pivot) in [
            ("bcrt", "random"),
            ("bcrt", "popgcd"),
            ("dbms", "random"),
            ("dbms", "raremax"),
        ] {
            let mut cmd = Command::new(bin);
            cmd.arg("euler").arg(&path).args([
                "--algorithm",
                alg,
                "--pivot",
                pivot,
                "--seed",
                "5",
                "--stats",
            ]);
            let a = cmd.output().unwrap();
            let b = cmd.output().unwrap();
            if !a.status.success() || a.stdout != b.stdout {
                return Err(format!("euler {spec} {alg} {pivot} differs between runs"));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} invocations byte-identical across two runs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("benchmark values, sizes and budgets", criterion_1),
        ("face counts", criterion_2),
        ("oracle equivalence", criterion_3),
        ("identity suites", criterion_4),
        ("prescribed Euler characteristic", criterion_5),
        ("reduction soundness", criterion_6),
        ("strategy ranking", criterion_7),
        ("CLI determinism", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} PASS {name}: {detail} ({took:.1?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {detail} ({took:.1?})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
