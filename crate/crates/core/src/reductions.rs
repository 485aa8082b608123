//! Constructive reductions: counting satisfying assignments through the
//! Euler characteristic, complexes with a prescribed Euler characteristic,
//! and negation by joining with a triangle boundary.

use std::collections::BTreeSet;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{bits, words_for};

/// Largest variable count accepted by [`count_sat_bruteforce`].
pub const MAX_BRUTEFORCE_VARS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    /// DIMACS encoding: `var + 1`, negated for negative literals.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

/// A formula in conjunctive normal form over variables `0..num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::input(format!("clause {j} is empty")));
            }
            if let Some(l) = clause.iter().find(|l| l.var >= num_vars) {
                return Err(Error::input(format!(
                    "clause {j} uses variable {} but the formula has {num_vars}",
                    l.var
                )));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// Does the assignment (bit `i` = value of variable `i`) satisfy every clause?
    pub fn satisfied_by(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|l| (assignment >> l.var & 1 == 1) == l.positive)
        })
    }
}

/// A simple undirected graph on vertices `0..num_vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    num_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(num_vertices: usize) -> Self {
        Graph {
            num_vertices,
            edges: BTreeSet::new(),
        }
    }

    /// Adds the edge `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::input(format!("loop at vertex {u}")));
        }
        if u.max(v) >= self.num_vertices {
            return Err(Error::VertexOutOfRange {
                index: u.max(v),
                universe: self.num_vertices,
            });
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }
}

/// Vertex `T_i`, `F_i` or `D_i` of variable `i`, and `C_j` of clause `j`,
/// in the graph built by [`sat_to_graph`].
pub fn true_vertex(i: usize) -> usize {
    3 * i
}

pub fn false_vertex(i: usize) -> usize {
    3 * i + 1
}

pub fn dummy_vertex(i: usize) -> usize {
    3 * i + 2
}

pub fn clause_vertex(f: &CnfFormula, j: usize) -> usize {
    3 * f.num_vars + j
}

/// Graph whose signed count of independent sets equals `(-1)^n` times the
/// number of satisfying assignments. Each variable contributes a triangle
/// `T_i, F_i, D_i`; each clause a vertex `C_j` joined to `T_i` for every
/// positive literal of `v_i` and to `F_i` for every negative one.
pub fn sat_to_graph(f: &CnfFormula) -> Graph {
    let mut g = Graph::new(3 * f.num_vars + f.clauses.len());
    for i in 0..f.num_vars {
        let (t, fa, d) = (true_vertex(i), false_vertex(i), dummy_vertex(i));
        for (u, v) in [(t, fa), (t, d), (fa, d)] {
            g.add_edge(u, v)
                .expect("gadget vertices are distinct and in range");
        }
    }
    for (j, clause) in f.clauses.iter().enumerate() {
        let c = clause_vertex(f, j);
        for l in clause {
            let v = if l.positive {
                true_vertex(l.var)
            } else {
                false_vertex(l.var)
            };
            g.add_edge(v, c)
                .expect("gadget vertices are distinct and in range");
        }
    }
    g
}

/// The complex whose facets are the complements of the edges of `g`. Its
/// faces are the vertex sets whose complement is not independent, so a graph
/// without edges gives the void complex. The graph on no vertices is
/// rejected: its signed independent-set count is 1, which no complex on the
/// empty universe has as `χ̃`.
pub fn graph_to_complex(g: &Graph) -> Result<Complex> {
    let n = g.num_vertices;
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    let stride = words_for(n);
    let mut data = Vec::with_capacity(g.num_edges() * stride);
    for (u, v) in g.edges() {
        let start = data.len();
        data.resize(start + stride, 0);
        let row = &mut data[start..];
        bits::fill(row, n);
        bits::clear(row, u);
        bits::clear(row, v);
    }
    Ok(Complex::from_antichain(n, g.num_edges(), data))
}

/// Number of satisfying assignments by truth table.
pub fn count_sat_bruteforce(f: &CnfFormula) -> Result<u64> {
    if f.num_vars > MAX_BRUTEFORCE_VARS {
        return Err(Error::capacity(format!(
            "brute-force counting limited to {MAX_BRUTEFORCE_VARS} variables, got {}",
            f.num_vars
        )));
    }
    Ok((0..1u64 << f.num_vars)
        .filter(|&a| f.satisfied_by(a))
        .count() as u64)
}

/// Composes [`sat_to_graph`] and [`graph_to_complex`]. Returns the complex
/// and the sign `s` with `s · χ̃(Δ) = #SAT`.
///
/// For a graph on `N` vertices, `χ̃` of the edge-complement complex is
/// `(-1)^N` times the signed independent-set count, which is `(-1)^n #SAT`
/// for `n` variables. With `N = 3n + k` for `k` clauses the two parities
/// combine to `s = (-1)^k`.
pub fn sat_to_complex(f: &CnfFormula) -> Result<(Complex, i64)> {
    let g = sat_to_graph(f);
    let c = graph_to_complex(&g)?;
    let sign = if f.clauses.len().is_multiple_of(2) {
        1
    } else {
        -1
    };
    Ok((c, sign))
}

/// Triangle boundary on three vertices, with `χ̃ = -1`.
pub fn triangle_boundary() -> Complex {
    Complex::new(3, [[0, 1], [0, 2], [1, 2]]).expect("static complex")
}

/// `n` isolated vertices, with `χ̃ = n - 1`.
fn points(n: usize) -> Complex {
    Complex::new(n, (0..n).map(|v| [v])).expect("indices are in range")
}

/// Join of `n >= 1` copies of three isolated points, with `χ̃ = 2^n`.
fn power_of_two(n: usize) -> Result<Complex> {
    let three = points(3);
    let mut acc = three.clone();
    for _ in 1..n {
        acc = acc.join(&three)?;
    }
    Ok(acc)
}

/// Builds a complex with reduced Euler characteristic `k` whose vertex and
/// facet counts are at most `2l² + 3l + 7` for `l = ⌈log₂|k|⌉`.
///
/// `k = 0` gives the void complex and `k = 1` two isolated points. For
/// larger `k`, each set bit `n >= 1` of the binary expansion contributes a
/// join of `n` three-point complexes (value `2^n`) and bit 0 contributes two
/// points. Their disjoint union overshoots by one less than the number of
/// parts, which a gadget `points(p) ⊕ triangle` cancels. Negative `k` joins
/// the construction for `-k` with a triangle boundary.
pub fn complex_with_euler(k: i64) -> Result<Complex> {
    if k == i64::MIN {
        return Err(Error::input("|k| must be below 2^63"));
    }
    if k < 0 {
        return negate_euler(&complex_with_euler(-k)?);
    }
    match k {
        0 => return Ok(Complex::void(0)),
        1 => return Ok(points(2)),
        _ => {}
    }
    let mut parts = Vec::new();
    for n in 0..63 {
        if k >> n & 1 == 1 {
            parts.push(if n == 0 { points(2) } else { power_of_two(n)? });
        }
    }
    let p = parts.len() + 1;
    parts.push(points(p).join(&triangle_boundary())?);
    Ok(Complex::disjoint_union(&parts))
}

/// `Δ ⊕ Ω` for the triangle boundary `Ω` on three new vertices appended to
/// the universe, which negates the Euler characteristic.
pub fn negate_euler(c: &Complex) -> Result<Complex> {
    if c.is_void() {
        return Err(Error::input("cannot negate the void complex by a join"));
    }
    c.join(&triangle_boundary())
}

/// The size bound `2l² + 3l + 7` for the construction of `k`.
pub fn euler_construction_bound(k: i64) -> u64 {
    let a = k.unsigned_abs();
    let l = if a <= 1 {
        0
    } else {
        u64::from(64 - (a - 1).leading_zeros())
    };
    2 * l * l + 3 * l + 7
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::euler_by_subsets;

    fn worked_formula_cnf() -> CnfFormula {
        CnfFormula::new(
            3,
            vec![
                vec![Literal::pos(0), Literal::neg(1)],
                vec![Literal::pos(0), Literal::pos(2)],
                vec![Literal::neg(1), Literal::pos(2)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn worked_formula() {
        let f = worked_formula_cnf();
        assert_eq!(count_sat_bruteforce(&f).unwrap(), 4);
        let g = sat_to_graph(&f);
        assert_eq!((g.num_vertices(), g.num_edges()), (12, 15));
        let (c, s) = sat_to_complex(&f).unwrap();
        assert_eq!(c.num_facets(), 15);
        assert!(c.facets().all(|f| f.len() == 10));
        assert_eq!(s * euler_by_subsets(&c).unwrap().get(), 4);
    }

    #[test]
    fn single_clause_graph() {
        let f = CnfFormula::new(1, vec![vec![Literal::pos(0)]]).unwrap();
        let g = sat_to_graph(&f);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (0, 3), (1, 2)]);
    }

    #[test]
    fn small_graph_complexes() {
        let mut k3 = Graph::new(3);
        k3.add_edge(0, 1).unwrap();
        k3.add_edge(1, 2).unwrap();
        k3.add_edge(0, 2).unwrap();
        assert_eq!(
            graph_to_complex(&k3).unwrap(),
            Complex::new(3, [[0], [1], [2]]).unwrap()
        );
        let mut k2 = Graph::new(2);
        k2.add_edge(1, 0).unwrap();
        let c = graph_to_complex(&k2).unwrap();
        assert_eq!(c, Complex::empty_face(2));
        assert_eq!(euler_by_subsets(&c).unwrap(), -1);
        assert!(graph_to_complex(&Graph::new(4)).unwrap().is_void());
        assert!(graph_to_complex(&Graph::new(0)).is_err());
        assert!(k2.add_edge(1, 1).is_err());
    }

    #[test]
    fn formula_validation() {
        assert!(CnfFormula::new(1, vec![vec![]]).is_err());
        assert!(CnfFormula::new(1, vec![vec![Literal::pos(1)]]).is_err());
        let none = CnfFormula::new(3, vec![]).unwrap();
        assert_eq!(count_sat_bruteforce(&none).unwrap(), 8);
        let unsat = CnfFormula::new(1, vec![vec![Literal::pos(0)], vec![Literal::neg(0)]]).unwrap();
        assert_eq!(count_sat_bruteforce(&unsat).unwrap(), 0);
    }

    #[test]
    fn prescribed_euler_small() {
        assert!(complex_with_euler(0).unwrap().is_void());
        assert_eq!(
            complex_with_euler(1).unwrap(),
            Complex::new(2, [[0], [1]]).unwrap()
        );
        for k in -6..=6 {
            let c = complex_with_euler(k).unwrap();
            if c.universe() <= 20 {
                assert_eq!(euler_by_subsets(&c).unwrap().get(), k, "k = {k}");
            }
        }
        assert_eq!(euler_construction_bound(5), 34);
        assert_eq!(euler_construction_bound(4), 21);
        assert_eq!(euler_construction_bound(0), 7);
    }

    #[test]
    fn negation() {
        let two_points = Complex::new(2, [[0], [1]]).unwrap();
        assert_eq!(
            euler_by_subsets(&negate_euler(&two_points).unwrap()).unwrap(),
            -1
        );
        assert_eq!(
            euler_by_subsets(&negate_euler(&triangle_boundary()).unwrap()).unwrap(),
            1
        );
        assert_eq!(
            euler_by_subsets(&negate_euler(&Complex::simplex(2)).unwrap()).unwrap(),
            0
        );
        assert!(negate_euler(&Complex::void(1)).is_err());
    }
}
