//! Square-free monomial ideals as 0/1 generator matrices, and the
//! correspondence with simplicial complexes.
//!
//! A face `σ` on `n` vertices corresponds to the monomial given by the
//! product of the variables outside `σ`, so facets correspond to minimal
//! generators. Transposing the generator matrix corresponds to taking the
//! nerve and leaves the Euler characteristic unchanged.

use std::fmt;

use crate::complex::{maximal_rows, Complex};
use crate::error::{Error, Result};
use crate::face::{bits, words_for, Face};

/// A square-free monomial ideal in `num_vars` variables given by its
/// minimal generators. Row `i` holds the variables dividing generator `i`;
/// an empty row is the unit monomial and no rows is the zero ideal.
#[derive(Clone)]
pub struct SquareFreeIdeal {
    num_vars: usize,
    stride: usize,
    len: usize,
    data: Vec<u64>,
}

impl SquareFreeIdeal {
    /// The zero ideal.
    pub fn zero(num_vars: usize) -> Self {
        SquareFreeIdeal {
            num_vars,
            stride: words_for(num_vars),
            len: 0,
            data: Vec::new(),
        }
    }

    /// Builds an ideal from generators that must already be minimal.
    pub fn new<G, I>(num_vars: usize, generators: G) -> Result<Self>
    where
        G: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let (len, data) = pack(num_vars, generators)?;
        let ideal = SquareFreeIdeal {
            num_vars,
            stride: words_for(num_vars),
            len,
            data,
        };
        if minimal_indices(&ideal).len() != len {
            return Err(Error::input(
                "generators are not minimal: one divides another or repeats",
            ));
        }
        Ok(ideal)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_generators(&self) -> usize {
        self.len
    }

    pub fn is_zero(&self) -> bool {
        self.len == 0
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Generator `i` as the set of variables dividing it.
    pub fn generator(&self, i: usize) -> Face {
        Face::from_words(self.num_vars, self.row(i).to_vec())
    }

    pub fn generators(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.len).map(|i| self.generator(i))
    }

    /// Generators as sorted variable lists in sorted order.
    pub fn canonical_generators(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.len)
            .map(|i| bits::ones(self.row(i)).collect())
            .collect();
        out.sort();
        out
    }
}

/// Equality of generator sets, ignoring generator order.
impl PartialEq for SquareFreeIdeal {
    fn eq(&self, other: &Self) -> bool {
        if self.num_vars != other.num_vars || self.len != other.len {
            return false;
        }
        let mut a: Vec<&[u64]> = (0..self.len).map(|i| self.row(i)).collect();
        let mut b: Vec<&[u64]> = (0..other.len).map(|i| other.row(i)).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

impl Eq for SquareFreeIdeal {}

impl fmt::Debug for SquareFreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{};", self.num_vars)?;
        for (i, g) in self.generators().enumerate() {
            write!(f, "{}{}", if i == 0 { " " } else { ", " }, g)?;
        }
        write!(f, ">")
    }
}

fn pack<G, I>(num_vars: usize, generators: G) -> Result<(usize, Vec<u64>)>
where
    G: IntoIterator<Item = I>,
    I: IntoIterator<Item = usize>,
{
    let stride = words_for(num_vars);
    let mut data = Vec::new();
    let mut len = 0;
    for g in generators {
        let start = data.len();
        data.resize(start + stride, 0);
        for v in g {
            if v >= num_vars {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    universe: num_vars,
                });
            }
            bits::set(&mut data[start..], v);
        }
        len += 1;
    }
    Ok((len, data))
}

/// Positions of the rows that are minimal under divisibility, i.e. whose
/// complements are maximal under inclusion.
fn minimal_indices(ideal: &SquareFreeIdeal) -> Vec<usize> {
    let mut flipped = ideal.data.clone();
    for row in flipped
        .chunks_exact_mut(ideal.stride.max(1))
        .take(ideal.len)
    {
        bits::complement(row, ideal.num_vars);
    }
    maximal_rows(ideal.stride, ideal.len, &flipped)
}

/// Keeps the rows minimal under divisibility, dropping duplicates.
pub fn minimalize<G, I>(num_vars: usize, rows: G) -> Result<SquareFreeIdeal>
where
    G: IntoIterator<Item = I>,
    I: IntoIterator<Item = usize>,
{
    let (len, data) = pack(num_vars, rows)?;
    Ok(minimalized(num_vars, len, data))
}

fn minimalized(num_vars: usize, len: usize, data: Vec<u64>) -> SquareFreeIdeal {
    let stride = words_for(num_vars);
    let raw = SquareFreeIdeal {
        num_vars,
        stride,
        len,
        data,
    };
    let keep = minimal_indices(&raw);
    if keep.len() == len {
        return raw;
    }
    let mut out = Vec::with_capacity(keep.len() * stride);
    for &i in &keep {
        out.extend_from_slice(raw.row(i));
    }
    SquareFreeIdeal {
        num_vars,
        stride,
        len: keep.len(),
        data: out,
    }
}

/// One generator per facet: the product of the variables outside it.
pub fn complex_to_ideal(c: &Complex) -> SquareFreeIdeal {
    let n = c.universe();
    let mut data = Vec::with_capacity(c.num_facets() * words_for(n));
    for r in c.rows() {
        let start = data.len();
        data.extend_from_slice(r);
        bits::complement(&mut data[start..], n);
    }
    SquareFreeIdeal {
        num_vars: n,
        stride: words_for(n),
        len: c.num_facets(),
        data,
    }
}

/// The complex on the ambient variables whose facets are the complements
/// of the generators. Variables dividing every generator become unused
/// vertices.
pub fn ideal_to_complex(ideal: &SquareFreeIdeal) -> Complex {
    let n = ideal.num_vars;
    let mut data = ideal.data.clone();
    for row in data.chunks_exact_mut(ideal.stride.max(1)).take(ideal.len) {
        bits::complement(row, n);
    }
    Complex::from_antichain(n, ideal.len, data)
}

/// Transposes the generator/variable incidence matrix and minimalizes. The
/// result lives in one variable per generator of `ideal`.
pub fn transpose_ideal(ideal: &SquareFreeIdeal) -> Result<SquareFreeIdeal> {
    if ideal.is_zero() {
        return Err(Error::input("the zero ideal has no transpose"));
    }
    let m = ideal.len;
    let stride = words_for(m);
    let mut data = vec![0u64; ideal.num_vars * stride];
    for i in 0..m {
        for v in bits::ones(ideal.row(i)) {
            bits::set(&mut data[v * stride..(v + 1) * stride], i);
        }
    }
    Ok(minimalized(m, ideal.num_vars, data))
}
