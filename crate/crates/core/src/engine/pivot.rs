//! Pivot selection for both algorithms.
//!
//! Vertex popularity is the number of facets containing a vertex. A rare
//! vertex has minimum popularity. A popular vertex has maximum popularity
//! among the vertices `e` whose complement `V ∖ {e}` is not a facet. Ties
//! go to the lowest vertex index or facet position.

use rand::seq::index::sample;
use rand::Rng;

use crate::complex::Complex;
use crate::face::{bits, words_for, Face};

use super::PivotStrategy;

/// A BCRT pivot: either `V ∖ {e}` for a vertex `e`, or a general set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum BcrtPivot {
    Vertex(usize),
    Set(Face),
}

impl BcrtPivot {
    pub(crate) fn into_face(self, universe: usize) -> Face {
        match self {
            BcrtPivot::Vertex(e) => {
                let mut f = Face::full(universe);
                f.remove(e);
                f
            }
            BcrtPivot::Set(f) => f,
        }
    }
}

/// Popularity of each vertex plus which vertices may serve as `e` in a
/// pivot `V ∖ {e}`.
struct Profile {
    counts: Vec<usize>,
    eligible: Vec<bool>,
}

impl Profile {
    fn new(c: &Complex) -> Self {
        let n = c.universe();
        let counts = c.vertex_counts();
        let mut eligible = vec![true; n];
        for r in c.rows() {
            if bits::count(r) + 1 == n {
                let mut missing = vec![0u64; words_for(n)];
                bits::fill(&mut missing, n);
                for (m, w) in missing.iter_mut().zip(r) {
                    *m &= !w;
                }
                if let Some(e) = bits::first(&missing) {
                    eligible[e] = false;
                }
            }
        }
        Profile { counts, eligible }
    }

    fn eligible(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.counts.len()).filter(|&v| self.eligible[v])
    }

    /// Lowest eligible vertex of minimum popularity.
    fn rare_eligible(&self) -> Option<usize> {
        self.eligible().min_by_key(|&v| (self.counts[v], v))
    }

    /// Lowest eligible vertex of maximum popularity.
    fn popular(&self) -> Option<usize> {
        self.eligible()
            .min_by_key(|&v| (std::cmp::Reverse(self.counts[v]), v))
    }

    /// Lowest vertex of minimum popularity, without the eligibility rule.
    fn rare(&self) -> Option<usize> {
        (0..self.counts.len()).min_by_key(|&v| (self.counts[v], v))
    }
}

/// Chooses a BCRT pivot `σ` with `σ ∉ Δ` and `σ ⊊ V`.
///
/// Vertex pivots use only eligible vertices. One always exists once the
/// base cases have been ruled out: if every `V ∖ {e}` were a facet, the
/// facets would be pairwise co-disjoint.
pub fn select_pivot_bcrt<R: Rng + ?Sized>(
    c: &Complex,
    strategy: PivotStrategy,
    rng: &mut R,
) -> Face {
    select_bcrt(c, strategy, rng).into_face(c.universe())
}

pub(crate) fn select_bcrt<R: Rng + ?Sized>(
    c: &Complex,
    strategy: PivotStrategy,
    rng: &mut R,
) -> BcrtPivot {
    let p = Profile::new(c);
    let fallback = || {
        BcrtPivot::Vertex(
            p.rare_eligible()
                .expect("a non-base-case complex has an eligible vertex"),
        )
    };
    match strategy {
        PivotStrategy::RareVar => BcrtPivot::Vertex(p.popular().expect("eligible vertex exists")),
        PivotStrategy::Random => {
            let cands: Vec<usize> = p.eligible().collect();
            BcrtPivot::Vertex(cands[rng.gen_range(0..cands.len())])
        }
        PivotStrategy::PopGcd => {
            let Some(e) = p.rare_eligible() else {
                return fallback();
            };
            let avoiding: Vec<usize> = (0..c.num_facets())
                .filter(|&i| !bits::get(c.row(i), e))
                .collect();
            let picked: Vec<usize> = if avoiding.len() <= 3 {
                avoiding
            } else {
                let mut idx: Vec<usize> = sample(rng, avoiding.len(), 3)
                    .into_iter()
                    .map(|k| avoiding[k])
                    .collect();
                idx.sort_unstable();
                idx
            };
            let mut union = vec![0u64; c.stride()];
            for i in picked {
                for (u, w) in union.iter_mut().zip(c.row(i)) {
                    *u |= w;
                }
            }
            let sigma = Face::from_words(c.universe(), union);
            if sigma == Face::full(c.universe()) || c.contains_face(&sigma) {
                fallback()
            } else {
                BcrtPivot::Set(sigma)
            }
        }
        // popvar, and the DBMS-only names which are rejected by config validation
        _ => fallback(),
    }
}

/// Chooses the facet removed by a DBMS split. Expects at least two facets.
pub fn select_pivot_dbms<R: Rng + ?Sized>(
    c: &Complex,
    strategy: PivotStrategy,
    rng: &mut R,
) -> usize {
    let m = c.num_facets();
    debug_assert!(m >= 2);
    let lacking = |e: usize| (0..m).find(|&i| !bits::get(c.row(i), e)).unwrap_or(0);
    match strategy {
        PivotStrategy::Random => rng.gen_range(0..m),
        PivotStrategy::MaxSupp => (0..m)
            .min_by_key(|&i| (bits::count(c.row(i)), i))
            .unwrap_or(0),
        PivotStrategy::MinSupp => (0..m)
            .min_by_key(|&i| (std::cmp::Reverse(bits::count(c.row(i))), i))
            .unwrap_or(0),
        PivotStrategy::PopVar => Profile::new(c).rare().map(lacking).unwrap_or(0),
        PivotStrategy::Rarest => rarest(c, &Profile::new(c)),
        PivotStrategy::RareMax => raremax(c, &Profile::new(c)),
        // rarevar, and the BCRT-only names which are rejected by config validation
        _ => Profile::new(c).popular().map(lacking).unwrap_or(0),
    }
}

/// Facet lacking the most vertices of the highest popularity level, ties
/// broken by the next level down, and so on.
fn rarest(c: &Complex, p: &Profile) -> usize {
    let mut levels: Vec<usize> = p.eligible().map(|v| p.counts[v]).collect();
    levels.sort_unstable_by(|a, b| b.cmp(a));
    levels.dedup();
    let level_of = |v: usize| levels.binary_search_by(|l| p.counts[v].cmp(l)).ok();
    let mut best: Option<(Vec<usize>, usize)> = None;
    for i in 0..c.num_facets() {
        let row = c.row(i);
        let mut score = vec![0usize; levels.len()];
        for v in p.eligible().filter(|&v| !bits::get(row, v)) {
            if let Some(l) = level_of(v) {
                score[l] += 1;
            }
        }
        if best.as_ref().is_none_or(|(s, _)| score > *s) {
            best = Some((score, i));
        }
    }
    best.map(|(_, i)| i).unwrap_or(0)
}

/// Smallest facet among those lacking some popular vertex.
fn raremax(c: &Complex, p: &Profile) -> usize {
    let Some(top) = p.popular().map(|v| p.counts[v]) else {
        return 0;
    };
    let mut popular = vec![0u64; c.stride()];
    for v in p.eligible().filter(|&v| p.counts[v] == top) {
        bits::set(&mut popular, v);
    }
    (0..c.num_facets())
        .filter(|&i| !bits::is_subset(&popular, c.row(i)))
        .min_by_key(|&i| (bits::count(c.row(i)), i))
        .unwrap_or(0)
}
