//! Benchmark families: random complexes, chessboard (rook) complexes,
//! matching complexes and complexes of graphs that are not b-connected.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{bits, words_for};

/// Upper bound on the number of facets a generator may produce.
pub const MAX_GENERATED_FACETS: usize = 5_000_000;

/// Consecutive rejected candidates per requested facet before
/// [`gen_random`] gives up.
pub const SATURATION_FACTOR: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorSpec {
    Random {
        vertices: usize,
        facets: usize,
        seed: u64,
    },
    Rook {
        rows: usize,
        cols: usize,
    },
    Matching {
        vertices: usize,
    },
    NicGraph {
        vertices: usize,
        connectivity: usize,
    },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Complex> {
        match *self {
            GeneratorSpec::Random {
                vertices,
                facets,
                seed,
            } => gen_random(vertices, facets, seed),
            GeneratorSpec::Rook { rows, cols } => gen_rook(rows, cols),
            GeneratorSpec::Matching { vertices } => gen_matching(vertices),
            GeneratorSpec::NicGraph {
                vertices,
                connectivity,
            } => gen_nicgraph(vertices, connectivity),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorSpec::Random {
                vertices,
                facets,
                seed,
            } => write!(f, "random:{vertices},{facets},seed={seed}"),
            GeneratorSpec::Rook { rows, cols } => write!(f, "rook:{rows},{cols}"),
            GeneratorSpec::Matching { vertices } => write!(f, "match:{vertices}"),
            GeneratorSpec::NicGraph {
                vertices,
                connectivity,
            } => write!(f, "nicgraph:{vertices},{connectivity}"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    /// Parses `rook:6,6`, `match:9`, `nicgraph:7,2` or `random:20,100,seed=7`
    /// (the seed defaults to 0).
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::input(format!("bad generator spec `{s}`: {why}"));
        let (family, args) = s
            .split_once(':')
            .ok_or_else(|| bad("expected `family:params`"))?;
        let mut nums = Vec::new();
        let mut seed = None;
        for part in args.split(',').map(str::trim) {
            if let Some(v) = part.strip_prefix("seed=") {
                seed = Some(
                    v.parse::<u64>()
                        .map_err(|_| bad("seed is not an unsigned integer"))?,
                );
            } else {
                nums.push(
                    part.parse::<usize>()
                        .map_err(|_| bad("parameters must be non-negative integers"))?,
                );
            }
        }
        let spec = match (family.trim().to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("random", &[n, m]) => GeneratorSpec::Random {
                vertices: n,
                facets: m,
                seed: seed.unwrap_or(0),
            },
            ("rook", &[a, b]) => GeneratorSpec::Rook { rows: a, cols: b },
            ("match", &[a]) => GeneratorSpec::Matching { vertices: a },
            ("nicgraph", &[a, b]) => GeneratorSpec::NicGraph {
                vertices: a,
                connectivity: b,
            },
            ("random" | "rook" | "match" | "nicgraph", _) => {
                return Err(bad("wrong number of parameters"))
            }
            _ => return Err(bad("unknown family")),
        };
        if seed.is_some() && !matches!(spec, GeneratorSpec::Random { .. }) {
            return Err(bad("only the random family takes a seed"));
        }
        Ok(spec)
    }
}

/// Random complex with `m` facets on `n` vertices: each candidate facet
/// includes every vertex with probability one half, and candidates
/// comparable to an accepted facet are discarded.
pub fn gen_random(n: usize, m: usize, seed: u64) -> Result<Complex> {
    if n == 0 || m == 0 {
        return Err(Error::input(
            "random complexes need at least one vertex and one facet",
        ));
    }
    let stride = words_for(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut data: Vec<u64> = Vec::with_capacity(m * stride);
    let mut accepted = 0;
    let mut candidate = vec![0u64; stride];
    let limit = SATURATION_FACTOR.saturating_mul(m);
    let mut rejected = 0;
    while accepted < m {
        for w in candidate.iter_mut() {
            *w = rng.gen();
        }
        if let Some(last) = candidate.last_mut() {
            *last &= bits::tail_mask(n);
        }
        let comparable = data
            .chunks_exact(stride)
            .any(|r| bits::is_subset(&candidate, r) || bits::is_subset(r, &candidate));
        if comparable {
            rejected += 1;
            if rejected >= limit {
                return Err(Error::capacity(format!(
                    "random generator saturated after {accepted} of {m} facets on {n} vertices"
                )));
            }
            continue;
        }
        rejected = 0;
        data.extend_from_slice(&candidate);
        accepted += 1;
    }
    Ok(Complex::from_antichain(n, m, data))
}

/// Chessboard complex: non-attacking rook placements on an `a × b` board,
/// cell `(i, j)` being vertex `i·b + j`. Facets place `min(a, b)` rooks.
pub fn gen_rook(a: usize, b: usize) -> Result<Complex> {
    if a == 0 || b == 0 {
        return Err(Error::input("rook boards need positive dimensions"));
    }
    let k = a.min(b);
    let count = (0..k).try_fold(1usize, |acc, i| acc.checked_mul(a.max(b) - i));
    check_capacity(count, "rook")?;
    let n = a * b;
    let stride = words_for(n);
    let mut data = Vec::new();
    let mut len = 0;
    // place one rook in each line of the shorter side
    let mut used = vec![false; a.max(b)];
    let mut choice = vec![0usize; k];
    let cell = |line: usize, other: usize| {
        if a <= b {
            line * b + other
        } else {
            other * b + line
        }
    };
    fn place(
        depth: usize,
        k: usize,
        used: &mut [bool],
        choice: &mut [usize],
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if depth == k {
            emit(choice);
            return;
        }
        for o in 0..used.len() {
            if !used[o] {
                used[o] = true;
                choice[depth] = o;
                place(depth + 1, k, used, choice, emit);
                used[o] = false;
            }
        }
    }
    place(0, k, &mut used, &mut choice, &mut |ch| {
        let start = data.len();
        data.resize(start + stride, 0);
        for (line, &o) in ch.iter().enumerate() {
            bits::set(&mut data[start..], cell(line, o));
        }
        len += 1;
    });
    Ok(Complex::from_antichain(n, len, data))
}

/// Index of edge `{i, j}` of the complete graph on `a` vertices, edges being
/// ordered lexicographically by `(min, max)`.
pub fn edge_index(a: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(j < a);
    i * a - i * (i + 1) / 2 + (j - i - 1)
}

/// The edge `{i, j}` (with `i < j`) at position `idx` of the lexicographic order.
pub fn edge_at(a: usize, idx: usize) -> (usize, usize) {
    let mut rest = idx;
    for i in 0..a {
        let row = a - i - 1;
        if rest < row {
            return (i, i + 1 + rest);
        }
        rest -= row;
    }
    panic!("edge index {idx} out of range for {a} vertices");
}

/// Matching complex of the complete graph on `a` vertices. Facets are the
/// maximal matchings: perfect for even `a`, missing one vertex for odd `a`.
pub fn gen_matching(a: usize) -> Result<Complex> {
    if a < 2 {
        return Err(Error::input(
            "matching complexes need at least two vertices",
        ));
    }
    // (a-1)!! perfect matchings, times a for the uncovered vertex when a is odd
    let even = a - a % 2;
    let count = (1..even)
        .step_by(2)
        .try_fold(1usize, |acc, f| acc.checked_mul(f));
    let count = if a % 2 == 1 {
        count.and_then(|c| c.checked_mul(a))
    } else {
        count
    };
    check_capacity(count, "matching")?;
    let n = a * (a - 1) / 2;
    let stride = words_for(n);
    let mut data = Vec::new();
    let mut len = 0;
    let mut matched = vec![false; a];
    let mut edges = Vec::with_capacity(a / 2);
    fn extend(
        a: usize,
        matched: &mut [bool],
        skips_left: usize,
        edges: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        let Some(i) = matched.iter().position(|&m| !m) else {
            emit(edges);
            return;
        };
        matched[i] = true;
        if skips_left > 0 {
            extend(a, matched, skips_left - 1, edges, emit);
        }
        for j in i + 1..a {
            if !matched[j] {
                matched[j] = true;
                edges.push(edge_index(a, i, j));
                extend(a, matched, skips_left, edges, emit);
                edges.pop();
                matched[j] = false;
            }
        }
        matched[i] = false;
    }
    extend(a, &mut matched, a % 2, &mut edges, &mut |es| {
        let start = data.len();
        data.resize(start + stride, 0);
        for &e in es {
            bits::set(&mut data[start..], e);
        }
        len += 1;
    });
    Ok(Complex::from_antichain(n, len, data))
}

/// Complex of graphs on `a` vertices that are not `b`-connected, on the
/// edges of the complete graph. A graph fails to be `b`-connected when
/// removing some `b - 1` vertices `C` disconnects it, so the candidates are
/// `K_{A∪C} ∪ K_{B∪C}` over all such `C` and bipartitions `{A, B}` of the
/// remaining vertices; the facets are the maximal candidates.
pub fn gen_nicgraph(a: usize, b: usize) -> Result<Complex> {
    if b < 1 || a < b + 1 || a < 3 {
        return Err(Error::input("nicgraph needs b >= 1 and a >= max(3, b + 1)"));
    }
    if a > 24 {
        return Err(Error::capacity("nicgraph is limited to 24 graph vertices"));
    }
    let rest = a - (b - 1);
    let cuts = binomial(a, b - 1);
    let count = 1usize
        .checked_shl(rest as u32 - 1)
        .map(|p| p - 1)
        .and_then(|p| p.checked_mul(cuts));
    check_capacity(count, "nicgraph")?;
    let n = a * (a - 1) / 2;
    let stride = words_for(n);
    let mut data = Vec::new();
    let mut len = 0;
    for cut in (0u32..1 << a).filter(|m| m.count_ones() as usize == b - 1) {
        let others: Vec<usize> = (0..a).filter(|&v| cut >> v & 1 == 0).collect();
        // the first remaining vertex is always on side A, so each unordered
        // bipartition appears once
        for mask in 0u32..1 << (others.len() - 1) {
            let mut side_a = cut | 1 << others[0];
            let mut side_b = cut;
            for (k, &v) in others.iter().enumerate().skip(1) {
                if mask >> (k - 1) & 1 == 1 {
                    side_b |= 1 << v;
                } else {
                    side_a |= 1 << v;
                }
            }
            if side_b == cut {
                continue;
            }
            let start = data.len();
            data.resize(start + stride, 0);
            for side in [side_a, side_b] {
                for i in 0..a {
                    for j in i + 1..a {
                        if side >> i & 1 == 1 && side >> j & 1 == 1 {
                            bits::set(&mut data[start..], edge_index(a, i, j));
                        }
                    }
                }
            }
            len += 1;
        }
    }
    Ok(Complex::from_rows(n, len, data))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn check_capacity(count: Option<usize>, family: &str) -> Result<()> {
    match count {
        Some(c) if c <= MAX_GENERATED_FACETS => Ok(()),
        _ => Err(Error::capacity(format!(
            "{family} complex would exceed {MAX_GENERATED_FACETS} facets"
        ))),
    }
}
