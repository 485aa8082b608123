//! Per-node simplification and base cases.

use serde::Serialize;

use crate::complex::Complex;
use crate::face::{bits, Face};
use crate::value::EulerValue;

/// Base cases recognised by [`try_base_case`], counted in the engine stats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseCase {
    Void,
    EmptyFace,
    Cone,
    Codisjoint,
    TwoFacets,
    ThreeFacets,
    FourCycle,
}

/// Number of times each base case ended a branch.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BaseCaseHits {
    pub void: u64,
    pub empty_face: u64,
    pub cone: u64,
    pub codisjoint: u64,
    pub two_facets: u64,
    pub three_facets: u64,
    pub four_cycle: u64,
}

impl BaseCaseHits {
    pub(crate) fn record(&mut self, kind: BaseCase) {
        let slot = match kind {
            BaseCase::Void => &mut self.void,
            BaseCase::EmptyFace => &mut self.empty_face,
            BaseCase::Cone => &mut self.cone,
            BaseCase::Codisjoint => &mut self.codisjoint,
            BaseCase::TwoFacets => &mut self.two_facets,
            BaseCase::ThreeFacets => &mut self.three_facets,
            BaseCase::FourCycle => &mut self.four_cycle,
        };
        *slot += 1;
    }

    pub fn total(&self) -> u64 {
        self.void
            + self.empty_face
            + self.cone
            + self.codisjoint
            + self.two_facets
            + self.three_facets
            + self.four_cycle
    }
}

/// Removes unused vertices and eliminates abundant vertices until neither
/// applies, stopping early at a cone. Returns the simplified complex and
/// the sign `s` with `χ̃(input) = s · χ̃(output)`.
///
/// A vertex `e` lying in every facet except `σ` is abundant. Then the
/// complex generated by the other facets is a cone on `e`, so by the DBMS
/// identity `χ̃(Δ) = -χ̃(⟨facets ∖ σ⟩ ⊖ σᶜ)`, which is the projection of
/// the other facets onto `σ`.
pub fn simplify(c: &Complex) -> (Complex, i64) {
    let (c, sign, _) = simplify_counted(c.clone());
    (c, sign)
}

/// Like [`simplify`], also returning the number of abundant eliminations.
pub(crate) fn simplify_counted(mut c: Complex) -> (Complex, i64, u64) {
    let mut sign = 1;
    let mut eliminations = 0;
    loop {
        let m = c.num_facets();
        if m == 0 || c.is_empty_face() {
            break;
        }
        let counts = c.vertex_counts();
        if counts.contains(&0) {
            let used =
                Face::from_indices(c.universe(), (0..counts.len()).filter(|&v| counts[v] > 0))
                    .expect("indices are in range");
            c = c.compact(used.words());
            continue;
        }
        if counts.contains(&m) {
            break;
        }
        let Some(e) = counts.iter().position(|&k| k + 1 == m) else {
            break;
        };
        let lacking = (0..m)
            .find(|&i| !bits::get(c.row(i), e))
            .expect("an abundant vertex misses exactly one facet");
        let sigma = c.row(lacking).to_vec();
        c = c.project_onto((0..m).filter(|&i| i != lacking), &sigma);
        sign = -sign;
        eliminations += 1;
    }
    (c, sign, eliminations)
}

/// Closed-form values for small or degenerate complexes. Expects a complex
/// that has been through [`simplify`]; the three- and four-facet rules are
/// only valid without abundant and unused vertices.
pub fn try_base_case(c: &Complex) -> Option<EulerValue> {
    classify_base_case(c).map(|(v, _)| v)
}

pub(crate) fn classify_base_case(c: &Complex) -> Option<(EulerValue, BaseCase)> {
    let m = c.num_facets();
    if m == 0 {
        return Some((EulerValue(0), BaseCase::Void));
    }
    if c.is_empty_face() {
        return Some((EulerValue(-1), BaseCase::EmptyFace));
    }
    let counts = c.vertex_counts();
    if counts.contains(&m) {
        return Some((EulerValue(0), BaseCase::Cone));
    }
    // pairwise co-disjoint: every vertex is missing from at most one facet
    if counts.iter().all(|&k| k + 1 >= m) {
        let v = if m.is_multiple_of(2) { 1 } else { -1 };
        return Some((EulerValue(v), BaseCase::Codisjoint));
    }
    match m {
        2 => Some((EulerValue(1), BaseCase::TwoFacets)),
        3 => Some((EulerValue(2), BaseCase::ThreeFacets)),
        4 if counts.iter().filter(|&&k| k > 0).count() == 4
            && counts.iter().all(|&k| k == 0 || k == 2) =>
        {
            Some((EulerValue(-1), BaseCase::FourCycle))
        }
        _ => None,
    }
}
