//! Finite simple graphs with bitset adjacency, induced subgraphs, and the
//! brute-force independent-set oracle used to cross-check every fast path.

use std::fmt::Write as _;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use num_bigint::BigInt;

/// A finite simple graph on vertices `0..n`. Vertices are 0-based
/// internally; the text format is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Insert an undirected edge. Self-loops are rejected; duplicates are
    /// harmless.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::IndexOutOfRange { index: v + 1, n: self.n });
            }
        }
        if i == j {
            return Err(Error::Parse {
                line: 0,
                message: format!("self-loop at vertex {}", i + 1),
            });
        }
        self.adj[i].insert(j);
        self.adj[j].insert(i);
        Ok(())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && self.adj[i].contains(j)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as ordered pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.adj[i].iter() {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        if s.capacity() != self.n {
            return Err(Error::IndexOutOfRange {
                index: s.capacity(),
                n: self.n,
            });
        }
        for v in s.iter() {
            if self.adj[v].intersects(s) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Visit every independent set exactly once, the empty set included.
    ///
    /// Branches on the lowest-index undecided vertex: first exclude it,
    /// then include it and drop its closed neighborhood. Every leaf emits
    /// one set, so total work is proportional to the output size times n.
    /// The branch order is fixed so that golden outputs stay stable.
    pub fn for_each_independent_set<F: FnMut(&VertexSet)>(&self, f: &mut F) {
        let live = VertexSet::full(self.n);
        let current = VertexSet::new(self.n);
        self.enumerate_rec(live, &current, f);
    }

    fn enumerate_rec<F: FnMut(&VertexSet)>(&self, live: VertexSet, current: &VertexSet, f: &mut F) {
        match live.first() {
            None => f(current),
            Some(v) => {
                let mut excluded = live.clone();
                excluded.remove(v);
                self.enumerate_rec(excluded, current, f);

                let mut included_live = live;
                included_live.remove(v);
                included_live.subtract(&self.adj[v]);
                let mut with_v = current.clone();
                with_v.insert(v);
                self.enumerate_rec(included_live, &with_v, f);
            }
        }
    }

    pub fn independent_sets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.for_each_independent_set(&mut |s| out.push(s.clone()));
        out
    }

    /// Ground-truth independence polynomial, computed by enumeration.
    /// Coefficient k counts the independent sets of size k. This is the
    /// oracle all fast paths are checked against, never the fast path.
    pub fn independence_polynomial_oracle(&self) -> Polynomial {
        let mut counts = vec![BigInt::from(0); self.n + 1];
        self.for_each_independent_set(&mut |s| counts[s.len()] += 1);
        Polynomial::from_coeffs(counts)
    }

    /// Subgraph induced by `keep`, plus the old-to-new index map
    /// (`None` for dropped vertices).
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        for (new, old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let mut g = Graph::new(keep.len());
        for old in keep.iter() {
            let new = map[old].unwrap();
            for nb in self.adj[old].iter() {
                if nb > old {
                    if let Some(nb_new) = map[nb] {
                        g.adj[new].insert(nb_new);
                        g.adj[nb_new].insert(new);
                    }
                }
            }
        }
        (g, map)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::new(n);
        for (i, j) in self.edges() {
            g.add_edge(i, j).unwrap();
        }
        for (i, j) in other.edges() {
            g.add_edge(self.n + i, self.n + j).unwrap();
        }
        g
    }

    /// Connected components as vertex sets, restricted to `live`.
    pub fn components_within(&self, live: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = live.clone();
        let mut comps = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::new(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            remaining.remove(start);
            while let Some(v) = stack.pop() {
                let mut frontier = self.adj[v].clone();
                frontier.intersect_with(&remaining);
                for w in frontier.iter() {
                    comp.insert(w);
                    remaining.remove(w);
                    stack.push(w);
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Parse the text format: header `graph <n>`, then one `i j` edge per
    /// line, 1-based. Duplicate edges and both orientations are accepted;
    /// self-loops are rejected. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match &mut graph {
                None => {
                    let mut parts = line.split_whitespace();
                    if parts.next() != Some("graph") {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "expected header `graph <n>`".into(),
                        });
                    }
                    let n: usize = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::Parse {
                            line: line_no,
                            message: "expected vertex count after `graph`".into(),
                        })?;
                    if parts.next().is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "trailing tokens after header".into(),
                        });
                    }
                    graph = Some(Graph::new(n));
                }
                Some(g) => {
                    let mut parts = line.split_whitespace();
                    let parse_vertex = |tok: Option<&str>| -> Result<usize> {
                        tok.and_then(|t| t.parse::<usize>().ok())
                            .filter(|&v| v >= 1)
                            .ok_or_else(|| Error::Parse {
                                line: line_no,
                                message: format!("expected 1-based edge `i j`, got `{line}`"),
                            })
                    };
                    let i = parse_vertex(parts.next())?;
                    let j = parse_vertex(parts.next())?;
                    if parts.next().is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "trailing tokens after edge".into(),
                        });
                    }
                    g.add_edge(i - 1, j - 1).map_err(|e| match e {
                        Error::Parse { message, .. } => Error::Parse { line: line_no, message },
                        Error::IndexOutOfRange { index, n } => Error::Parse {
                            line: line_no,
                            message: format!("vertex {index} out of range 1..={n}"),
                        },
                        other => other,
                    })?;
                }
            }
        }
        graph.ok_or(Error::Parse {
            line: 0,
            message: "missing `graph <n>` header".into(),
        })
    }

    /// Render in the same text format (edges sorted, 1-based).
    pub fn render(&self) -> String {
        let mut out = format!("graph {}\n", self.n);
        for (i, j) in self.edges() {
            let _ = writeln!(out, "{} {}", i + 1, j + 1);
        }
        out
    }
}

/// The path on `n` vertices `1-2-...-n`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// The complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::polynomial::Rational;

    #[test]
    fn independence_checks() {
        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(!edge.is_independent(&VertexSet::from_indices(2, [0, 1])).unwrap());
        assert!(edge.is_independent(&VertexSet::new(2)).unwrap());
        let p3 = path(3);
        assert!(p3.is_independent(&VertexSet::from_indices(3, [0, 2])).unwrap());
        assert!(p3.is_independent(&VertexSet::new(2)).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Graph::new(3).independent_sets().len(), 8);
        let p3 = path(3);
        let sets = p3.independent_sets();
        assert_eq!(sets.len(), 5);
        // brute force over all 2^3 subsets agrees
        let mut brute = 0;
        for mask in 0u32..8 {
            let s = VertexSet::from_indices(3, (0..3).filter(|&i| mask >> i & 1 == 1));
            if p3.is_independent(&s).unwrap() {
                brute += 1;
            }
        }
        assert_eq!(brute, 5);
        assert_eq!(complete(4).independent_sets().len(), 5);
    }

    #[test]
    fn enumeration_emits_unique_independent_sets() {
        let g = path(6);
        let sets = g.independent_sets();
        for s in &sets {
            assert!(g.is_independent(s).unwrap());
        }
        let mut dedup = sets.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), sets.len());
        let count = g
            .independence_polynomial_oracle()
            .eval_rational(&Rational::one());
        assert_eq!(count, Rational::from_integer((sets.len() as i64).into()));
    }

    #[test]
    fn oracle_polynomials() {
        for m in 1..=6 {
            assert_eq!(
                complete(m).independence_polynomial_oracle(),
                Polynomial::from_i64(&[1, m as i64])
            );
        }
        assert_eq!(
            Graph::new(4).independence_polynomial_oracle(),
            Polynomial::one_plus_z().pow(4)
        );
        assert_eq!(path(3).independence_polynomial_oracle(), Polynomial::from_i64(&[1, 3, 1]));
    }

    #[test]
    fn oracle_multiplicative_on_disjoint_union() {
        let a = path(3);
        let b = complete(3);
        let u = a.disjoint_union(&b);
        assert_eq!(
            u.independence_polynomial_oracle(),
            a.independence_polynomial_oracle()
                .mul(&b.independence_polynomial_oracle())
        );
    }

    #[test]
    fn induced_subgraphs() {
        let p3 = path(3);
        let (copy, map) = p3.induced_subgraph(&VertexSet::full(3));
        assert_eq!(copy, p3);
        assert_eq!(map, vec![Some(0), Some(1), Some(2)]);
        let (sub, map) = p3.induced_subgraph(&VertexSet::from_indices(3, [0, 2]));
        assert_eq!(sub.edge_count(), 0);
        assert_eq!(sub.n(), 2);
        assert_eq!(map, vec![Some(0), None, Some(1)]);
        let (empty, _) = p3.induced_subgraph(&VertexSet::new(3));
        assert_eq!(empty.n(), 0);
    }

    #[test]
    fn components() {
        let g = path(2).disjoint_union(&path(3));
        let comps = g.components_within(&VertexSet::full(5));
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].len(), 2);
        assert_eq!(comps[1].len(), 3);
    }

    #[test]
    fn parse_and_render() {
        let g = Graph::parse("graph 3\n1 2\n2 3\n2 1\n").unwrap();
        assert_eq!(g, path(3));
        assert_eq!(g.render(), "graph 3\n1 2\n2 3\n");
        let commented = Graph::parse("# a path\ngraph 3\n1 2 # first\n\n2 3\n").unwrap();
        assert_eq!(commented, path(3));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match Graph::parse("graph 2\n1 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match Graph::parse("graph 2\n1 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(Graph::parse("").is_err());
        assert!(Graph::parse("poset 3\n").is_err());
    }
}
