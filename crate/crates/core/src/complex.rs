//! Simplicial complexes given by their facets.
//!
//! A [`Complex`] has an explicit vertex universe `0..n` and a list of facets
//! that is always an antichain under inclusion. Vertices that lie in no
//! facet are allowed. The empty facet list is the void complex, and a single
//! empty facet is the complex `{∅}`.
//!
//! Facets are stored row-major in one flat word buffer so the engine can
//! restrict, project and maximalize without per-facet allocations.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::face::{bits, words_for, Face, WORD_BITS};
use crate::union_find::UnionFind;

#[derive(Clone)]
pub struct Complex {
    universe: usize,
    stride: usize,
    len: usize,
    data: Vec<u64>,
}

impl Complex {
    /// The void complex (no faces at all) on `universe` vertices.
    pub fn void(universe: usize) -> Self {
        Complex {
            universe,
            stride: words_for(universe),
            len: 0,
            data: Vec::new(),
        }
    }

    /// The complex `{∅}` on `universe` vertices.
    pub fn empty_face(universe: usize) -> Self {
        let stride = words_for(universe);
        Complex {
            universe,
            stride,
            len: 1,
            data: vec![0; stride],
        }
    }

    /// The full simplex: every subset of the universe is a face.
    pub fn simplex(universe: usize) -> Self {
        let stride = words_for(universe);
        let mut data = vec![0; stride];
        bits::fill(&mut data, universe);
        Complex {
            universe,
            stride,
            len: 1,
            data,
        }
    }

    /// Builds a complex from arbitrary faces. Duplicates and faces contained
    /// in other faces are dropped; the surviving facets keep their first
    /// occurrence order.
    pub fn new<F, I>(universe: usize, faces: F) -> Result<Self>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let stride = words_for(universe);
        let mut data = Vec::new();
        let mut len = 0;
        for face in faces {
            let start = data.len();
            data.resize(start + stride, 0);
            for v in face {
                if v >= universe {
                    return Err(Error::VertexOutOfRange { index: v, universe });
                }
                bits::set(&mut data[start..], v);
            }
            len += 1;
        }
        Ok(Complex::from_rows(universe, len, data))
    }

    pub fn from_faces(universe: usize, faces: &[Face]) -> Result<Self> {
        if let Some(f) = faces.iter().find(|f| f.universe() != universe) {
            return Err(Error::input(format!(
                "face over universe {} used in complex over universe {universe}",
                f.universe()
            )));
        }
        let data = faces
            .iter()
            .flat_map(|f| f.words().iter().copied())
            .collect();
        Ok(Complex::from_rows(universe, faces.len(), data))
    }

    /// Maximalizes `len` packed rows of width `words_for(universe)`.
    pub(crate) fn from_rows(universe: usize, len: usize, data: Vec<u64>) -> Self {
        let stride = words_for(universe);
        debug_assert_eq!(data.len(), stride * len);
        let keep = maximal_rows(stride, len, &data);
        if keep.len() == len {
            return Complex {
                universe,
                stride,
                len,
                data,
            };
        }
        let mut out = Vec::with_capacity(keep.len() * stride);
        for &i in &keep {
            out.extend_from_slice(&data[i * stride..(i + 1) * stride]);
        }
        Complex {
            universe,
            stride,
            len: keep.len(),
            data: out,
        }
    }

    /// Wraps rows that the caller guarantees already form an antichain.
    pub(crate) fn from_antichain(universe: usize, len: usize, data: Vec<u64>) -> Self {
        let stride = words_for(universe);
        debug_assert_eq!(data.len(), stride * len);
        let c = Complex {
            universe,
            stride,
            len,
            data,
        };
        debug_assert!(len > 64 || c.is_antichain(), "rows are not an antichain");
        c
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn num_facets(&self) -> usize {
        self.len
    }

    pub fn is_void(&self) -> bool {
        self.len == 0
    }

    /// True for the complex `{∅}`.
    pub fn is_empty_face(&self) -> bool {
        self.len == 1 && bits::is_empty(self.row(0))
    }

    pub fn facet(&self, i: usize) -> Face {
        Face::from_words(self.universe, self.row(i).to_vec())
    }

    pub fn facets(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.len).map(|i| self.facet(i))
    }

    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub(crate) fn rows(&self) -> impl Iterator<Item = &[u64]> + '_ {
        (0..self.len).map(|i| self.row(i))
    }

    /// Is `sigma` a face, i.e. contained in some facet?
    pub fn contains_face(&self, sigma: &Face) -> bool {
        assert_eq!(sigma.universe(), self.universe);
        self.rows().any(|r| bits::is_subset(sigma.words(), r))
    }

    /// Number of facets containing each vertex.
    pub fn vertex_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.universe];
        for r in self.rows() {
            for v in bits::ones(r) {
                counts[v] += 1;
            }
        }
        counts
    }

    /// Vertices that lie in at least one facet.
    pub fn used_vertices(&self) -> Face {
        let mut acc = vec![0u64; self.stride];
        for r in self.rows() {
            for (a, w) in acc.iter_mut().zip(r) {
                *a |= w;
            }
        }
        Face::from_words(self.universe, acc)
    }

    /// Facets as sorted index lists in a canonical (sorted) order.
    pub fn canonical_facets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.rows().map(|r| bits::ones(r).collect()).collect();
        out.sort();
        out
    }

    fn is_antichain(&self) -> bool {
        for i in 0..self.len {
            for j in 0..self.len {
                if i != j && bits::is_subset(self.row(i), self.row(j)) {
                    return false;
                }
            }
        }
        true
    }

    /// `Δ ⊖ τ`: faces avoiding `tau`, on the universe re-indexed to the
    /// vertices outside `tau`. The second component lists, for each new
    /// index, the old vertex it came from (ascending).
    pub fn restrict(&self, tau: &Face) -> (Complex, Vec<usize>) {
        assert_eq!(tau.universe(), self.universe);
        let keep = tau.complement();
        let kept: Vec<usize> = keep.iter().collect();
        let (n, data) = project_rows(self.rows(), self.len, keep.words(), self.universe);
        (Complex::from_rows(n, self.len, data), kept)
    }

    /// Projects the selected facets onto the vertex set `keep`, re-indexing
    /// it to `0..|keep|`, and maximalizes.
    pub(crate) fn project_onto<I>(&self, facets: I, keep: &[u64]) -> Complex
    where
        I: IntoIterator<Item = usize>,
    {
        let mut count = 0;
        let rows = facets.into_iter().map(|i| {
            count += 1;
            self.row(i)
        });
        let rows: Vec<&[u64]> = rows.collect();
        let (n, data) = project_rows(rows.iter().copied(), count, keep, self.universe);
        Complex::from_rows(n, count, data)
    }

    /// Drops vertices outside `keep` when no facet uses them. The result is
    /// still an antichain, so no maximalization is needed.
    pub(crate) fn compact(&self, keep: &[u64]) -> Complex {
        let (n, data) = project_rows(self.rows(), self.len, keep, self.universe);
        Complex::from_antichain(n, self.len, data)
    }

    /// `Δ ∪ pows(σ)` over the same universe.
    pub fn add_facet_closure(&self, sigma: &Face) -> Complex {
        assert_eq!(sigma.universe(), self.universe);
        if self.contains_face(sigma) {
            return self.clone();
        }
        let mut data = Vec::with_capacity(self.data.len() + self.stride);
        let mut len = 0;
        for r in self.rows() {
            if !bits::is_subset(r, sigma.words()) {
                data.extend_from_slice(r);
                len += 1;
            }
        }
        data.extend_from_slice(sigma.words());
        Complex::from_antichain(self.universe, len + 1, data)
    }

    /// The complex generated by all facets except facet `i`.
    pub(crate) fn without_facet(&self, i: usize) -> Complex {
        let mut data = Vec::with_capacity(self.data.len().saturating_sub(self.stride));
        data.extend_from_slice(&self.data[..i * self.stride]);
        data.extend_from_slice(&self.data[(i + 1) * self.stride..]);
        Complex::from_antichain(self.universe, self.len - 1, data)
    }

    /// `Δ ∖ e`: the faces avoiding `e`, on the universe without `e`.
    ///
    /// Facets avoiding `e` stay maximal, and two facets through `e` stay
    /// incomparable after dropping it, so only the shortened facets need a
    /// domination check, and only against the untouched ones.
    pub(crate) fn delete_vertex(&self, e: usize) -> Complex {
        let mut keep = vec![0u64; self.stride];
        bits::fill(&mut keep, self.universe);
        bits::clear(&mut keep, e);
        let (n, data) = project_rows(self.rows(), self.len, &keep, self.universe);
        let stride = words_for(n);
        let row = |i: usize| &data[i * stride..(i + 1) * stride];
        let (touched, untouched): (Vec<usize>, Vec<usize>) =
            (0..self.len).partition(|&i| bits::get(self.row(i), e));
        if touched.is_empty() || untouched.is_empty() {
            return Complex::from_antichain(n, self.len, data);
        }
        let mut dominated = vec![false; self.len];
        let use_index = untouched.len() >= ColumnIndex::MIN_ROWS && touched.len() > 8;
        match ColumnIndex::new(stride * WORD_BITS, untouched.len()).filter(|_| use_index) {
            Some(mut ix) => {
                for &u in &untouched {
                    ix.push(row(u));
                }
                for &t in &touched {
                    dominated[t] = ix.has_superset(row(t));
                }
            }
            None => {
                for &t in &touched {
                    dominated[t] = untouched.iter().any(|&u| bits::is_subset(row(t), row(u)));
                }
            }
        }
        if !dominated.contains(&true) {
            return Complex::from_antichain(n, self.len, data);
        }
        let mut out = Vec::with_capacity(data.len());
        let mut len = 0;
        for i in (0..self.len).filter(|&i| !dominated[i]) {
            out.extend_from_slice(row(i));
            len += 1;
        }
        Complex::from_antichain(n, len, out)
    }

    /// The link of `e`: facets through `e` with `e` removed, on the
    /// universe without `e`. These are already pairwise incomparable.
    pub(crate) fn link(&self, e: usize) -> Complex {
        let mut keep = vec![0u64; self.stride];
        bits::fill(&mut keep, self.universe);
        bits::clear(&mut keep, e);
        let through: Vec<&[u64]> = self.rows().filter(|r| bits::get(r, e)).collect();
        let (n, data) = project_rows(through.iter().copied(), through.len(), &keep, self.universe);
        Complex::from_antichain(n, through.len(), data)
    }

    /// Lowest vertex contained in every facet. `None` for the void complex
    /// and for `{∅}`.
    pub fn is_cone(&self) -> Option<usize> {
        if self.len == 0 {
            return None;
        }
        let mut acc = self.row(0).to_vec();
        for r in self.rows().skip(1) {
            for (a, w) in acc.iter_mut().zip(r) {
                *a &= w;
            }
        }
        bits::first(&acc)
    }

    /// The nerve: one vertex per facet of `self`, with a face for every set
    /// of facets sharing a vertex. Its facets are the maximal sets
    /// `F_v = {facets containing v}` over used vertices `v`; when no vertex
    /// is used the nerve is `{∅}`.
    pub fn nerve(&self) -> Result<Complex> {
        if self.is_void() {
            return Err(Error::input("the nerve of the void complex is undefined"));
        }
        let m = self.len;
        let stride = words_for(m);
        let mut cols = vec![0u64; self.universe * stride];
        for (i, r) in self.rows().enumerate() {
            for v in bits::ones(r) {
                bits::set(&mut cols[v * stride..(v + 1) * stride], i);
            }
        }
        let mut data = Vec::new();
        let mut len = 0;
        for v in 0..self.universe {
            let col = &cols[v * stride..(v + 1) * stride];
            if !bits::is_empty(col) {
                data.extend_from_slice(col);
                len += 1;
            }
        }
        if len == 0 {
            return Ok(Complex::empty_face(m));
        }
        Ok(Complex::from_rows(m, len, data))
    }

    /// `Δ ⊕ Γ` on the concatenated universe (this complex's vertices first,
    /// then `other`'s shifted by `self.universe()`).
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        if self.is_void() || other.is_void() {
            return Err(Error::input("join requires two non-void complexes"));
        }
        let n1 = self.universe;
        let n = n1 + other.universe;
        let stride = words_for(n);
        let mut data = vec![0u64; (self.len + other.len) * stride];
        for (i, r) in self.rows().enumerate() {
            let out = &mut data[i * stride..(i + 1) * stride];
            for v in bits::ones(r) {
                bits::set(out, v);
            }
            for v in n1..n {
                bits::set(out, v);
            }
        }
        for (j, r) in other.rows().enumerate() {
            let i = self.len + j;
            let out = &mut data[i * stride..(i + 1) * stride];
            for v in 0..n1 {
                bits::set(out, v);
            }
            for v in bits::ones(r) {
                bits::set(out, n1 + v);
            }
        }
        Ok(Complex::from_rows(n, self.len + other.len, data))
    }

    /// Disjoint union of vertex-disjoint complexes on the concatenated
    /// universe.
    pub fn disjoint_union(parts: &[Complex]) -> Complex {
        let n: usize = parts.iter().map(|c| c.universe).sum();
        let stride = words_for(n);
        let total: usize = parts.iter().map(|c| c.len).sum();
        let mut data = vec![0u64; total * stride];
        let mut offset = 0;
        let mut i = 0;
        for c in parts {
            for r in c.rows() {
                let out = &mut data[i * stride..(i + 1) * stride];
                for v in bits::ones(r) {
                    bits::set(out, offset + v);
                }
                i += 1;
            }
            offset += c.universe;
        }
        Complex::from_rows(n, total, data)
    }

    /// Searches for a vertex bipartition `(A, B)` such that every facet
    /// complement lies inside `A` or inside `B`, which means the complex is
    /// the join of its parts on `A` and on `B`.
    ///
    /// Facet complements that share a vertex must land on the same side, so
    /// the candidate sides are the connected components of the complements
    /// under overlap. `A` is the component holding the lowest vertex that
    /// occurs in a complement and `B` is everything else (including
    /// vertices that lie in every facet). With more than two components the
    /// split is still two-way; recursing on the parts recovers the rest.
    pub fn find_independent_pair(&self) -> Option<(Face, Face)> {
        if self.len < 2 {
            return None;
        }
        let n = self.universe;
        let mut uf = UnionFind::new(n);
        let mut touched = vec![0u64; self.stride];
        let mut comp = vec![0u64; self.stride];
        for r in self.rows() {
            for (c, (&w, &full)) in comp.iter_mut().zip(r.iter().zip(full_words(n).iter())) {
                *c = !w & full;
            }
            let first = bits::first(&comp)?;
            for v in bits::ones(&comp) {
                uf.union(first, v);
            }
            for (t, c) in touched.iter_mut().zip(&comp) {
                *t |= c;
            }
        }
        let lowest = bits::first(&touched)?;
        let root = uf.find(lowest);
        let mut a = vec![0u64; self.stride];
        let mut split = false;
        for v in bits::ones(&touched).collect::<Vec<_>>() {
            if uf.find(v) == root {
                bits::set(&mut a, v);
            } else {
                split = true;
            }
        }
        if !split {
            return None;
        }
        let a = Face::from_words(n, a);
        let b = a.complement();
        Some((a, b))
    }

    /// Given an independent pair `(A, B)`, returns `Δ_A` (the facets that
    /// contain `B`, restricted to `A`) and `Δ_B` (the facets that contain
    /// `A`, restricted to `B`), re-indexed to `A` and to `B`. Their `join` is
    /// this complex with the vertices reordered as `A` then `B`.
    pub fn independent_parts(&self, a: &Face, b: &Face) -> Result<(Complex, Complex)> {
        assert_eq!(a.universe(), self.universe);
        assert_eq!(b.universe(), self.universe);
        if !a.is_disjoint(b) || a.union(b) != Face::full(self.universe) {
            return Err(Error::input("independent pair must partition the vertices"));
        }
        let mut fa = Vec::new();
        let mut fb = Vec::new();
        for (i, r) in self.rows().enumerate() {
            // complement of r inside A  <=>  r contains B
            if bits::is_subset(b.words(), r) {
                fa.push(i);
            } else if bits::is_subset(a.words(), r) {
                fb.push(i);
            } else {
                return Err(Error::input(format!(
                    "facet {i} straddles the proposed split"
                )));
            }
        }
        if fa.is_empty() || fb.is_empty() {
            return Err(Error::input(
                "independent pair leaves one side without facets",
            ));
        }
        Ok((
            self.project_onto(fa, a.words()),
            self.project_onto(fb, b.words()),
        ))
    }

    /// Renames vertex `v` to `perm[v]`; `perm` must be a permutation of the
    /// universe.
    pub fn relabel(&self, perm: &[usize]) -> Result<Complex> {
        let n = self.universe;
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::input(
                "relabel map is not a permutation of the universe",
            ));
        }
        let mut data = vec![0u64; self.data.len()];
        for (i, r) in self.rows().enumerate() {
            let out = &mut data[i * self.stride..(i + 1) * self.stride];
            for v in bits::ones(r) {
                bits::set(out, perm[v]);
            }
        }
        Ok(Complex::from_antichain(n, self.len, data))
    }
}

/// True when `sigma ∪ tau` is the whole universe.
pub fn codisjoint(sigma: &Face, tau: &Face) -> bool {
    sigma.union(tau) == Face::full(sigma.universe())
}

fn full_words(n: usize) -> Vec<u64> {
    let mut w = vec![0u64; words_for(n)];
    bits::fill(&mut w, n);
    w
}

/// Projects rows onto the vertices in `keep`, renumbering them densely in
/// ascending order. Returns the new universe size and the packed rows.
pub(crate) fn project_rows<'a, I>(
    rows: I,
    len: usize,
    keep: &[u64],
    universe: usize,
) -> (usize, Vec<u64>)
where
    I: Iterator<Item = &'a [u64]>,
{
    let n = bits::count(keep);
    let stride = words_for(n);
    let mut data = vec![0u64; len * stride];
    if n == 0 {
        return (0, data);
    }
    if n == universe {
        for (i, r) in rows.enumerate() {
            data[i * stride..(i + 1) * stride].copy_from_slice(r);
        }
        return (n, data);
    }
    // rank[w] = number of kept vertices in words before w
    let mut rank = Vec::with_capacity(keep.len());
    let mut acc = 0u32;
    for &w in keep {
        rank.push(acc);
        acc += w.count_ones();
    }
    for (i, r) in rows.enumerate() {
        let out = &mut data[i * stride..(i + 1) * stride];
        for (wi, (&rw, &kw)) in r.iter().zip(keep).enumerate() {
            let mut w = rw & kw;
            while w != 0 {
                let tz = w.trailing_zeros();
                let below = kw & ((1u64 << tz) - 1);
                let idx = rank[wi] as usize + below.count_ones() as usize;
                out[idx / WORD_BITS] |= 1 << (idx % WORD_BITS);
                w &= w - 1;
            }
        }
    }
    (n, data)
}

/// Indices (ascending) of the rows that are maximal under inclusion, with
/// duplicates collapsed onto their first occurrence.
pub(crate) fn maximal_rows(stride: usize, len: usize, data: &[u64]) -> Vec<usize> {
    if len <= 1 {
        return (0..len).collect();
    }
    let row = |i: usize| &data[i * stride..(i + 1) * stride];
    let sizes: Vec<usize> = (0..len).map(|i| bits::count(row(i))).collect();
    let mut order: Vec<usize> = (0..len).collect();
    order.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]).then(a.cmp(&b)));

    let universe_bits = stride * WORD_BITS;
    let mut index = ColumnIndex::new(universe_bits, len);
    let mut kept: Vec<usize> = Vec::new();
    let mut start = 0;
    while start < len {
        let size = sizes[order[start]];
        let mut end = start;
        while end < len && sizes[order[end]] == size {
            end += 1;
        }
        // rows of equal size can only dominate each other by being equal
        let mut seen: HashSet<&[u64]> = HashSet::new();
        let mut group = Vec::new();
        for &i in &order[start..end] {
            let r = row(i);
            if !seen.insert(r) {
                continue;
            }
            let dominated = if kept.is_empty() {
                false
            } else if let Some(ix) = index.as_mut() {
                ix.has_superset(r)
            } else {
                kept.iter().any(|&k| bits::is_subset(r, row(k)))
            };
            if !dominated {
                group.push(i);
            }
        }
        if let Some(ix) = index.as_mut() {
            for &i in &group {
                ix.push(row(i));
            }
        }
        kept.extend(group);
        start = end;
    }
    kept.sort_unstable();
    kept
}

/// Vertex-to-rows incidence bitsets over the rows kept so far. Superset
/// queries intersect the columns of the query's vertices, which beats a
/// linear scan once many rows have been kept.
struct ColumnIndex {
    cols: Vec<u64>,
    col_stride: usize,
    universe: usize,
    rows: usize,
    scratch: Vec<u64>,
}

impl ColumnIndex {
    const MIN_ROWS: usize = 512;
    const MAX_WORDS: usize = 1 << 23;

    fn new(universe: usize, capacity: usize) -> Option<Self> {
        let col_stride = words_for(capacity);
        if capacity < Self::MIN_ROWS || universe.saturating_mul(col_stride) > Self::MAX_WORDS {
            return None;
        }
        Some(ColumnIndex {
            cols: vec![0; universe * col_stride],
            col_stride,
            universe,
            rows: 0,
            scratch: vec![0; col_stride],
        })
    }

    fn push(&mut self, row: &[u64]) {
        let id = self.rows;
        self.rows += 1;
        for v in bits::ones(row) {
            debug_assert!(v < self.universe);
            bits::set(
                &mut self.cols[v * self.col_stride..(v + 1) * self.col_stride],
                id,
            );
        }
    }

    fn has_superset(&mut self, row: &[u64]) -> bool {
        let used = words_for(self.rows);
        let mut first = true;
        for v in bits::ones(row) {
            let col = &self.cols[v * self.col_stride..v * self.col_stride + used];
            if first {
                self.scratch[..used].copy_from_slice(col);
                first = false;
            } else {
                let mut any = 0;
                for (s, c) in self.scratch[..used].iter_mut().zip(col) {
                    *s &= c;
                    any |= *s;
                }
                if any == 0 {
                    return false;
                }
            }
        }
        // the empty row is contained in every kept row
        first || !bits::is_empty(&self.scratch[..used])
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        if self.universe != other.universe || self.len != other.len {
            return false;
        }
        let mut a: Vec<&[u64]> = self.rows().collect();
        let mut b: Vec<&[u64]> = other.rows().collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.universe)?;
        for (i, facet) in self.facets().enumerate() {
            write!(f, "{}{}", if i == 0 { " " } else { ", " }, facet)?;
        }
        write!(f, ")")
    }
}
