//! Divide-and-conquer computation of the reduced Euler characteristic.
//!
//! Two splitting rules are implemented. For a set `σ ∉ Δ` with `σ ⊊ V`,
//! BCRT uses `χ̃(Δ) = χ̃(Δ ⊖ σᶜ) + χ̃(Δ ∪ pows σ)`. For a facet `σ` of `D`,
//! DBMS uses `χ̃(D) = χ̃(Δ) - χ̃(Δ ⊖ σᶜ)` with `Δ = ⟨facets(D) ∖ {σ}⟩`.
//!
//! Every node of the recursion is first simplified, optionally split along
//! an independent vertex pair, optionally replaced by its nerve, and then
//! either resolved by a base case or split on a pivot. The recursion runs
//! on an explicit stack, so deep trees do not exhaust the thread stack.

mod pivot;
mod simplify;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::value::EulerValue;

pub use pivot::{select_pivot_bcrt, select_pivot_dbms};
pub use simplify::{simplify, try_base_case, BaseCase, BaseCaseHits};

use pivot::{select_bcrt, BcrtPivot};
use simplify::{classify_base_case, simplify_counted};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Bcrt,
    Dbms,
}

impl Algorithm {
    /// The pivot strategy used when none is given.
    pub fn default_pivot(self) -> PivotStrategy {
        match self {
            Algorithm::Bcrt => PivotStrategy::PopVar,
            Algorithm::Dbms => PivotStrategy::RareMax,
        }
    }

    pub fn strategies(self) -> &'static [PivotStrategy] {
        use PivotStrategy::*;
        match self {
            Algorithm::Bcrt => &[PopVar, RareVar, Random, PopGcd],
            Algorithm::Dbms => &[RareVar, PopVar, MaxSupp, MinSupp, Random, Rarest, RareMax],
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Bcrt => "bcrt",
            Algorithm::Dbms => "dbms",
        })
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bcrt" => Ok(Algorithm::Bcrt),
            "dbms" => Ok(Algorithm::Dbms),
            _ => Err(Error::input(format!("unknown algorithm `{s}`"))),
        }
    }
}

/// Pivot strategies. The names follow the algebraic setting, so for
/// complexes they can read backwards: `popvar` picks a rare vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PivotStrategy {
    PopVar,
    RareVar,
    Random,
    PopGcd,
    MaxSupp,
    MinSupp,
    Rarest,
    RareMax,
}

impl PivotStrategy {
    pub fn name(self) -> &'static str {
        match self {
            PivotStrategy::PopVar => "popvar",
            PivotStrategy::RareVar => "rarevar",
            PivotStrategy::Random => "random",
            PivotStrategy::PopGcd => "popgcd",
            PivotStrategy::MaxSupp => "maxsupp",
            PivotStrategy::MinSupp => "minsupp",
            PivotStrategy::Rarest => "rarest",
            PivotStrategy::RareMax => "raremax",
        }
    }

    pub fn supports(self, algorithm: Algorithm) -> bool {
        algorithm.strategies().contains(&self)
    }
}

impl fmt::Display for PivotStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PivotStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use PivotStrategy::*;
        [
            PopVar, RareVar, Random, PopGcd, MaxSupp, MinSupp, Rarest, RareMax,
        ]
        .into_iter()
        .find(|p| p.name().eq_ignore_ascii_case(s))
        .ok_or_else(|| Error::input(format!("unknown pivot strategy `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    pub algorithm: Algorithm,
    pub pivot: PivotStrategy,
    pub use_nerve: bool,
    pub use_independence_at_root: bool,
    pub use_independence_interior: bool,
    pub seed: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig::new(Algorithm::Dbms)
    }
}

impl EngineConfig {
    /// Default settings for `algorithm` with its default pivot strategy.
    pub fn new(algorithm: Algorithm) -> Self {
        EngineConfig {
            algorithm,
            pivot: algorithm.default_pivot(),
            use_nerve: true,
            use_independence_at_root: true,
            use_independence_interior: false,
            seed: 0,
        }
    }

    pub fn with_pivot(mut self, pivot: PivotStrategy) -> Self {
        self.pivot = pivot;
        self
    }

    pub fn with_nerve(mut self, on: bool) -> Self {
        self.use_nerve = on;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.pivot.supports(self.algorithm) {
            Ok(())
        } else {
            Err(Error::input(format!(
                "pivot strategy `{}` is not available for {}",
                self.pivot, self.algorithm
            )))
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct EngineStats {
    pub nodes_expanded: u64,
    pub base_case_hits: BaseCaseHits,
    pub nerve_applications: u64,
    pub abundant_eliminations: u64,
    pub independence_splits: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Computes `χ̃(Δ)` under `cfg`. The result and all counters depend only on
/// `Δ` and `cfg`.
pub fn euler(c: &Complex, cfg: &EngineConfig) -> Result<(EulerValue, EngineStats)> {
    cfg.validate()?;
    let start = Instant::now();
    let mut engine = Engine {
        cfg,
        stats: EngineStats::default(),
    };
    let value = engine.run(c.clone(), splitmix64(cfg.seed), true)?;
    engine.stats.elapsed = start.elapsed();
    Ok((value, engine.stats))
}

/// BCRT split on `σ`: returns `(Δ ⊖ σᶜ, Δ ∪ pows σ)`, whose values add up to
/// `χ̃(Δ)`. The first complex is re-indexed to the vertices of `σ`.
pub fn split_bcrt(c: &Complex, sigma: &Face) -> (Complex, Complex) {
    assert!(!c.contains_face(sigma), "BCRT pivot must not be a face");
    assert!(
        *sigma != Face::full(c.universe()),
        "BCRT pivot must be a proper subset"
    );
    (
        c.restrict(&sigma.complement()).0,
        c.add_facet_closure(sigma),
    )
}

/// DBMS split on facet `f`: returns `(Δ, Δ ⊖ σᶜ)` with `Δ` generated by the
/// other facets; `χ̃(D)` is the first value minus the second. The second
/// complex is re-indexed to the vertices of the removed facet.
pub fn split_dbms(c: &Complex, f: usize) -> (Complex, Complex) {
    assert!(c.num_facets() >= 2, "DBMS split needs at least two facets");
    let sigma = c.row(f).to_vec();
    let rest = c.without_facet(f);
    let proj = c.project_onto((0..c.num_facets()).filter(|&i| i != f), &sigma);
    (rest, proj)
}

struct Task {
    complex: Complex,
    coeff: i64,
    key: u64,
    root: bool,
}

/// Result of processing one node: `χ̃ = constant + Σ coeff · χ̃(child)`.
struct Expansion {
    constant: i64,
    children: Vec<(i64, Complex)>,
}

impl Expansion {
    fn leaf(v: i64) -> Self {
        Expansion {
            constant: v,
            children: Vec::new(),
        }
    }
}

struct Engine<'a> {
    cfg: &'a EngineConfig,
    stats: EngineStats,
}

impl Engine<'_> {
    fn run(&mut self, c: Complex, key: u64, root: bool) -> Result<EulerValue> {
        let mut total = 0i64;
        let mut stack = vec![Task {
            complex: c,
            coeff: 1,
            key,
            root,
        }];
        while let Some(task) = stack.pop() {
            self.stats.nodes_expanded += 1;
            let exp = self.expand(task.complex, task.key, task.root)?;
            let term = task
                .coeff
                .checked_mul(exp.constant)
                .ok_or(Error::Overflow)?;
            total = total.checked_add(term).ok_or(Error::Overflow)?;
            // push in reverse so the first child is processed next
            for (i, (coeff, child)) in exp.children.into_iter().enumerate().rev() {
                if coeff == 0 {
                    continue;
                }
                stack.push(Task {
                    complex: child,
                    coeff: task.coeff.checked_mul(coeff).ok_or(Error::Overflow)?,
                    key: child_key(task.key, i as u64),
                    root: false,
                });
            }
        }
        Ok(EulerValue(total))
    }

    fn simplify(&mut self, c: Complex) -> (Complex, i64) {
        let (c, sign, elim) = simplify_counted(c);
        self.stats.abundant_eliminations += elim;
        (c, sign)
    }

    fn expand(&mut self, c: Complex, key: u64, root: bool) -> Result<Expansion> {
        let (mut c, mut sign) = self.simplify(c);

        let independence = if root {
            self.cfg.use_independence_at_root
        } else {
            self.cfg.use_independence_interior
        };
        if independence && c.num_facets() >= 2 {
            if let Some((a, b)) = c.find_independent_pair() {
                let (ca, cb) = c.independent_parts(&a, &b)?;
                self.stats.independence_splits += 1;
                let va = self.run(ca, child_key(key, 2), false)?;
                let factor = sign.checked_mul(va.get()).ok_or(Error::Overflow)?;
                return Ok(Expansion {
                    constant: 0,
                    children: vec![(factor, cb)],
                });
            }
        }

        if self.cfg.use_nerve && self.wants_nerve(&c) {
            let nerve = c.nerve()?;
            self.stats.nerve_applications += 1;
            let (n2, s2) = self.simplify(nerve);
            c = n2;
            sign *= s2;
        }

        if let Some((v, kind)) = classify_base_case(&c) {
            self.stats.base_case_hits.record(kind);
            return Ok(Expansion::leaf(sign * v.get()));
        }

        let mut rng = LazyRng::new(key);
        match self.cfg.algorithm {
            Algorithm::Dbms => {
                let f = select_pivot_dbms(&c, self.cfg.pivot, rng.get());
                let (rest, proj) = split_dbms(&c, f);
                debug_assert!(rest.num_facets() < c.num_facets());
                debug_assert!(proj.num_facets() < c.num_facets());
                Ok(Expansion {
                    constant: 0,
                    children: vec![(sign, rest), (-sign, proj)],
                })
            }
            Algorithm::Bcrt => match select_bcrt(&c, self.cfg.pivot, rng.get()) {
                BcrtPivot::Vertex(e) => {
                    // σ = V ∖ {e}: Δ ∪ pows σ has e abundant, and eliminating
                    // it leaves the link of e with the sign flipped
                    debug_assert!(!c.contains_face(&BcrtPivot::Vertex(e).into_face(c.universe())));
                    let deleted = c.delete_vertex(e);
                    let link = c.link(e);
                    self.stats.abundant_eliminations += 1;
                    debug_assert!(deleted.universe() < c.universe());
                    Ok(Expansion {
                        constant: 0,
                        children: vec![(sign, deleted), (-sign, link)],
                    })
                }
                BcrtPivot::Set(sigma) => {
                    debug_assert!(!c.contains_face(&sigma) && sigma != Face::full(c.universe()));
                    let (inner, closure) = split_bcrt(&c, &sigma);
                    debug_assert!(inner.universe() < c.universe());
                    Ok(Expansion {
                        constant: 0,
                        children: vec![(sign, inner), (sign, closure)],
                    })
                }
            },
        }
    }

    /// The nerve swaps the roles of vertices and facets. It is taken only
    /// when it strictly shrinks the dimension the algorithm is most
    /// sensitive to, so repeated nerves cannot cycle.
    fn wants_nerve(&self, c: &Complex) -> bool {
        if c.num_facets() == 0 || c.is_empty_face() {
            return false;
        }
        let used = c.used_vertices().len();
        match self.cfg.algorithm {
            Algorithm::Dbms => c.num_facets() > used,
            Algorithm::Bcrt => used > c.num_facets(),
        }
    }
}

/// Per-node generator, seeded from the node's path key and only created
/// when a strategy asks for randomness.
struct LazyRng {
    key: u64,
    rng: Option<ChaCha8Rng>,
}

impl LazyRng {
    fn new(key: u64) -> Self {
        LazyRng { key, rng: None }
    }

    fn get(&mut self) -> &mut ChaCha8Rng {
        let key = self.key;
        self.rng
            .get_or_insert_with(|| ChaCha8Rng::seed_from_u64(key))
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn child_key(parent: u64, branch: u64) -> u64 {
    splitmix64(parent ^ splitmix64(branch.wrapping_add(1)))
}

/// True when every vertex of the universe lies in some facet.
#[cfg(test)]
fn all_used(c: &Complex) -> bool {
    c.vertex_counts().iter().all(|&k| k > 0) || c.is_empty_face() || c.is_void()
}
