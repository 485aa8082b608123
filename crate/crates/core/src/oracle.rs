//! Brute-force reference computations of the reduced Euler characteristic
//! and the f-vector. They are deliberately simple and serve as ground truth
//! for the engine.

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{bits, words_for};
use crate::value::EulerValue;

/// Largest vertex universe accepted by [`euler_by_subsets`].
pub const MAX_SUBSET_VERTICES: usize = 25;
/// Largest facet count accepted by [`euler_by_inclusion_exclusion`].
pub const MAX_IE_FACETS: usize = 25;
/// Largest number of faces [`f_vector`] will enumerate.
pub const MAX_ENUMERATED_FACES: u64 = 1 << 26;

/// Face counts by dimension: `entries[i]` counts faces with `i` vertices,
/// so `entries[0]` is `f_{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FVector {
    pub entries: Vec<u64>,
}

impl FVector {
    /// Number of faces of dimension `dim` (`dim >= -1`).
    pub fn get(&self, dim: isize) -> u64 {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.entries.get(i).copied())
            .unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// The alternating sum `-f_{-1} + f_0 - f_1 + ...`.
    pub fn euler(&self) -> Result<EulerValue> {
        let mut acc: i64 = 0;
        for (i, &f) in self.entries.iter().enumerate() {
            let f = i64::try_from(f).map_err(|_| Error::Overflow)?;
            acc = if i % 2 == 0 {
                acc.checked_sub(f)
            } else {
                acc.checked_add(f)
            }
            .ok_or(Error::Overflow)?;
        }
        Ok(EulerValue(acc))
    }
}

/// `-Σ (-1)^|σ|` over all faces, found by marking every subset of the
/// universe that lies below a facet.
pub fn euler_by_subsets(c: &Complex) -> Result<EulerValue> {
    let n = c.universe();
    if n > MAX_SUBSET_VERTICES {
        return Err(Error::capacity(format!(
            "subset oracle limited to {MAX_SUBSET_VERTICES} vertices, got {n}"
        )));
    }
    let mut is_face = vec![false; 1 << n];
    for r in c.rows() {
        is_face[r.first().copied().unwrap_or(0) as usize] = true;
    }
    // close downwards one coordinate at a time
    for v in 0..n {
        let bit = 1usize << v;
        for mask in 0..is_face.len() {
            if mask & bit != 0 && is_face[mask] {
                is_face[mask ^ bit] = true;
            }
        }
    }
    let mut acc: i64 = 0;
    for (mask, &face) in is_face.iter().enumerate() {
        if face {
            acc += if mask.count_ones() % 2 == 0 { -1 } else { 1 };
        }
    }
    Ok(EulerValue(acc))
}

/// Inclusion-exclusion over sets of facets: a nonempty set `v` of facets
/// contributes `(-1)^|v|` when the facets in `v` have empty intersection.
pub fn euler_by_inclusion_exclusion(c: &Complex) -> Result<EulerValue> {
    let m = c.num_facets();
    if m > MAX_IE_FACETS {
        return Err(Error::capacity(format!(
            "inclusion-exclusion oracle limited to {MAX_IE_FACETS} facets, got {m}"
        )));
    }
    let stride = words_for(c.universe());
    let mut scratch = vec![0u64; (m + 1) * stride];
    let mut acc = 0i64;
    for first in 0..m {
        scratch[..stride].copy_from_slice(c.row(first));
        ie_extend(c, first + 1, 1, &mut scratch, stride, &mut acc);
    }
    Ok(EulerValue(acc))
}

/// Extends the current facet set (intersection in `buf[..stride]`) with
/// facets from `next` on. Once the intersection is empty, the remaining
/// extensions cancel in pairs unless none remain.
fn ie_extend(c: &Complex, next: usize, size: usize, buf: &mut [u64], stride: usize, acc: &mut i64) {
    let (cur, rest) = buf.split_at_mut(stride);
    if bits::is_empty(cur) {
        if next == c.num_facets() {
            *acc += if size.is_multiple_of(2) { 1 } else { -1 };
        }
        return;
    }
    for j in next..c.num_facets() {
        for ((o, a), b) in rest[..stride].iter_mut().zip(cur.iter()).zip(c.row(j)) {
            *o = a & b;
        }
        ie_extend(c, j + 1, size + 1, rest, stride, acc);
    }
}

/// Counts faces by size, enumerating each face once by extending it with
/// larger vertices that keep it inside some facet.
pub fn f_vector(c: &Complex) -> Result<FVector> {
    let n = c.universe();
    if c.is_void() {
        return Ok(FVector { entries: vec![0] });
    }
    let limit_exceeded = || {
        Error::capacity(format!(
            "f-vector enumeration limited to {MAX_ENUMERATED_FACES} faces"
        ))
    };
    // a facet with d vertices alone has 2^d faces
    let largest = c.rows().map(bits::count).max().unwrap_or(0);
    if largest >= 64 || 1u64 << largest > MAX_ENUMERATED_FACES {
        return Err(limit_exceeded());
    }
    let mut entries = vec![0u64; n + 2];
    let mut total = 0u64;
    let all: Vec<usize> = (0..c.num_facets()).collect();
    let mut stack: Vec<(usize, usize, Vec<usize>)> = vec![(0, 0, all)];
    // iterative DFS; each entry is (face size, smallest allowed vertex, facets containing the face)
    while let Some((size, from, facets)) = stack.pop() {
        entries[size] += 1;
        total += 1;
        if total > MAX_ENUMERATED_FACES {
            return Err(limit_exceeded());
        }
        let mut reach = vec![0u64; words_for(n)];
        for &f in &facets {
            for (r, w) in reach.iter_mut().zip(c.row(f)) {
                *r |= w;
            }
        }
        for v in bits::ones(&reach).filter(|&v| v >= from) {
            let sub: Vec<usize> = facets
                .iter()
                .copied()
                .filter(|&f| bits::get(c.row(f), v))
                .collect();
            stack.push((size + 1, v + 1, sub));
        }
    }
    while entries.len() > 1 && entries.last() == Some(&0) {
        entries.pop();
    }
    Ok(FVector { entries })
}
