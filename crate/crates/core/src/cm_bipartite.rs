//! Bipartite Cohen-Macaulay graphs by the combinatorial labeling
//! characterization, the mutually inverse transforms between such graphs
//! and finite posets, and the doubling identity relating their
//! independence and antichain polynomials.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hilbert::{antichain_polynomial_fast, independence_polynomial, HilbertOptions};
use crate::poset::Poset;

/// A bipartite graph with both sides of size n and a fixed labeling:
/// x-side and y-side vertices `0..n` each, edges from x to y.
///
/// The labeling is Cohen-Macaulay when the diagonal matching is present,
/// edges only go upward (`(x_i, y_j)` implies `i <= j`), and edges
/// compose transitively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteLabeledGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteLabeledGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        for &(i, j) in &edges {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v + 1, n });
                }
            }
        }
        Ok(BipartiteLabeledGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    /// First violated labeling condition, or None if the labeling is
    /// Cohen-Macaulay. Conditions are numbered 1 (diagonal), 2 (upward
    /// edges), 3 (transitivity); messages are 1-based.
    pub fn labeling_violation(&self) -> Option<(u8, String)> {
        for i in 0..self.n {
            if !self.has_edge(i, i) {
                return Some((1, format!("missing diagonal edge (x{}, y{})", i + 1, i + 1)));
            }
        }
        for &(i, j) in &self.edges {
            if i > j {
                return Some((
                    2,
                    format!("edge (x{}, y{}) goes downward", i + 1, j + 1),
                ));
            }
        }
        for &(i, j) in &self.edges {
            for &(j2, k) in &self.edges {
                if j2 == j && !self.has_edge(i, k) {
                    return Some((
                        3,
                        format!(
                            "edges (x{}, y{}) and (x{}, y{}) lack (x{}, y{})",
                            i + 1,
                            j + 1,
                            j + 1,
                            k + 1,
                            i + 1,
                            k + 1
                        ),
                    ));
                }
            }
        }
        None
    }

    pub fn is_cohen_macaulay_labeling(&self) -> bool {
        self.labeling_violation().is_none()
    }

    /// The poset on the x-side: `x_i <= x_j` iff the edge `(x_i, y_j)`
    /// exists. Requires a Cohen-Macaulay labeling.
    pub fn to_poset(&self) -> Result<Poset> {
        if let Some((condition, message)) = self.labeling_violation() {
            return Err(Error::NotCohenMacaulay { condition, message });
        }
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(i, j)| i != j)
            .copied()
            .collect();
        Poset::from_relations(self.n, &pairs)
    }

    /// As an ordinary simple graph on 2n vertices: x-side `0..n`, y-side
    /// `n..2n`.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(2 * self.n);
        for &(i, j) in &self.edges {
            g.add_edge(i, self.n + j).unwrap();
        }
        g
    }

    /// Standard graph text format, with the side convention documented in
    /// a header comment.
    pub fn render(&self) -> String {
        let mut out = format!(
            "# bipartite CM graph: x-side 1..{}, y-side {}..{}\n",
            self.n,
            self.n + 1,
            2 * self.n
        );
        let _ = write!(out, "{}", self.to_graph().render());
        out
    }

    /// Parse from the standard graph format: 2n vertices, every edge
    /// between the sides `1..n` and `n+1..2n`.
    pub fn parse(text: &str) -> Result<Self> {
        let g = Graph::parse(text)?;
        if g.n() % 2 != 0 {
            return Err(Error::Parse {
                line: 0,
                message: format!("bipartite CM graph needs an even vertex count, got {}", g.n()),
            });
        }
        let n = g.n() / 2;
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            if u < n && v >= n {
                edges.push((u, v - n));
            } else {
                return Err(Error::Parse {
                    line: 0,
                    message: format!(
                        "edge {} {} does not connect x-side 1..{} to y-side {}..{}",
                        u + 1,
                        v + 1,
                        n,
                        n + 1,
                        2 * n
                    ),
                });
            }
        }
        BipartiteLabeledGraph::new(n, edges)
    }
}

/// The bipartite Cohen-Macaulay graph of a poset, after re-indexing the
/// elements along a linear extension so that edges go upward. Returns the
/// graph together with the extension (`order[new] = old element`).
pub fn graph_from_poset(p: &Poset) -> (BipartiteLabeledGraph, Vec<usize>) {
    let order = p.linear_extension();
    let mut position = vec![0; p.n()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let mut edges = Vec::new();
    for old_a in 0..p.n() {
        for old_b in p.up_set(old_a).iter() {
            edges.push((position[old_a], position[old_b]));
        }
    }
    let g = BipartiteLabeledGraph::new(p.n(), edges).unwrap();
    debug_assert!(g.is_cohen_macaulay_labeling());
    (g, order)
}

/// Check the doubling identity: the independence polynomial of the
/// bipartite graph of `p` equals the antichain polynomial of `p` with the
/// argument doubled (coefficient k multiplied by 2^k). The two sides run
/// through independent code paths.
pub fn cm_independence_identity_check(p: &Poset, options: HilbertOptions) -> Result<bool> {
    let (g, _) = graph_from_poset(p);
    let ind = independence_polynomial(&g.to_graph(), options)?
        .series
        .expect("specialized algorithm always yields a series");
    let anti = antichain_polynomial_fast(p, options)?;
    Ok(ind == anti.scale_argument(&BigInt::from(2)))
}
