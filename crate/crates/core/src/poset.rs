//! Finite posets: validated construction by reflexive-transitive closure,
//! cover relations, comparability graphs, antichain enumeration,
//! lexicographic products, chains and Boolean lattices.

use std::fmt::Write as _;

use rand::Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;

/// Elements above 2^20 make the closure matrix explode; the guard mainly
/// protects `boolean_lattice` from accidental blowup.
const MAX_BOOLEAN_RANK: usize = 20;

/// A finite partial order on `0..n`, stored transitively closed.
///
/// Elements are 0-based internally; all text I/O is 1-based. Construction
/// validates reflexivity, antisymmetry and transitivity; any generating
/// set of relations is accepted and closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `up[i]` = all j with i <= j (including i).
    up: Vec<VertexSet>,
    /// `down[i]` = all j with j <= i (including i).
    down: Vec<VertexSet>,
}

impl Poset {
    /// Reflexive-transitive closure of the given 0-based pairs `(i, j)`
    /// meaning `i <= j`. A cycle among distinct elements is rejected with
    /// one offending cycle named in the error (1-based).
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        for &(i, j) in pairs {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v + 1, n });
                }
            }
        }
        let mut up: Vec<VertexSet> = (0..n).map(|i| VertexSet::from_indices(n, [i])).collect();
        for &(i, j) in pairs {
            up[i].insert(j);
        }
        // Warshall closure on bitset rows
        for k in 0..n {
            for i in 0..n {
                if i != k && up[i].contains(k) {
                    let row_k = up[k].clone();
                    up[i].union_with(&row_k);
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if i != j && up[j].contains(i) {
                    return Err(Error::CycleDetected {
                        cycle: find_cycle(n, pairs, i, j),
                    });
                }
            }
        }
        let mut down: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        for i in 0..n {
            for j in up[i].iter() {
                down[j].insert(i);
            }
        }
        Ok(Poset { n, up, down })
    }

    /// Trusted constructor from rows already reflexive, antisymmetric and
    /// transitively closed. Checked in debug builds only.
    fn from_closed_rows(up: Vec<VertexSet>) -> Poset {
        let n = up.len();
        #[cfg(debug_assertions)]
        {
            for (i, row) in up.iter().enumerate() {
                debug_assert!(row.contains(i));
                for j in row.iter() {
                    debug_assert!(i == j || !up[j].contains(i));
                    debug_assert!(up[j].is_subset(row));
                }
            }
        }
        let mut down: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        for i in 0..n {
            for j in up[i].iter() {
                down[j].insert(i);
            }
        }
        Poset { n, up, down }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le(a, b) || self.le(b, a)
    }

    /// All j with i <= j, including i itself.
    pub fn up_set(&self, i: usize) -> &VertexSet {
        &self.up[i]
    }

    /// All j with j <= i, including i itself.
    pub fn down_set(&self, i: usize) -> &VertexSet {
        &self.down[i]
    }

    /// The transitive reduction: pairs `(a, b)` with b covering a.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in self.up[a].iter() {
                if a == b {
                    continue;
                }
                // b covers a iff nothing lies strictly between
                let mut between = self.up[a].clone();
                between.intersect_with(&self.down[b]);
                if between.len() == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Elements covering `a`.
    pub fn covers_of(&self, a: usize) -> Vec<usize> {
        self.covers()
            .into_iter()
            .filter(|&(x, _)| x == a)
            .map(|(_, b)| b)
            .collect()
    }

    /// Edge between every pair of distinct comparable elements.
    pub fn comparability_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for a in 0..self.n {
            for b in self.up[a].iter() {
                if a != b {
                    g.add_edge(a, b).unwrap();
                }
            }
        }
        g
    }

    pub fn is_antichain(&self, s: &VertexSet) -> bool {
        let elems: Vec<usize> = s.iter().collect();
        for (idx, &a) in elems.iter().enumerate() {
            for &b in &elems[idx + 1..] {
                if self.comparable(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// First comparable pair inside `s`, if any.
    pub fn find_comparable_pair(&self, s: &VertexSet) -> Option<(usize, usize)> {
        let elems: Vec<usize> = s.iter().collect();
        for (idx, &a) in elems.iter().enumerate() {
            for &b in &elems[idx + 1..] {
                if self.comparable(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Antichain polynomial by the enumeration oracle: coefficient k
    /// counts antichains of k elements. The fast Hilbert path lives in
    /// the `hilbert` module; both must agree.
    pub fn antichain_polynomial_oracle(&self) -> Polynomial {
        self.comparability_graph().independence_polynomial_oracle()
    }

    /// Visit every antichain exactly once (delegates to independent-set
    /// enumeration on the comparability graph).
    pub fn for_each_antichain<F: FnMut(&VertexSet)>(&self, f: &mut F) {
        self.comparability_graph().for_each_independent_set(f)
    }

    pub fn antichains(&self) -> Vec<VertexSet> {
        self.comparability_graph().independent_sets()
    }

    pub fn count_antichains(&self) -> u64 {
        let mut count = 0u64;
        self.for_each_antichain(&mut |_| count += 1);
        count
    }

    /// Lexicographic product `self[other]`: pairs `(a, b)` with
    /// `(a,b) <= (a',b')` iff `a < a'`, or `a = a'` and `b <= b'`.
    /// Pair `(a, b)` sits at index `a * other.n() + b`.
    pub fn lex_product(&self, other: &Poset) -> Poset {
        let n2 = other.n;
        let n = self.n * n2;
        let mut up = Vec::with_capacity(n);
        for a in 0..self.n {
            for b in 0..n2 {
                let mut row = VertexSet::new(n);
                for a2 in self.up[a].iter() {
                    if a2 == a {
                        for b2 in other.up[b].iter() {
                            row.insert(a * n2 + b2);
                        }
                    } else {
                        for b2 in 0..n2 {
                            row.insert(a2 * n2 + b2);
                        }
                    }
                }
                up.push(row);
            }
        }
        Poset::from_closed_rows(up)
    }

    /// Some linear extension: a total order listing every element after
    /// all elements below it. Lowest index first among available minima.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut placed = VertexSet::new(self.n);
        let mut order = Vec::with_capacity(self.n);
        while order.len() < self.n {
            for i in 0..self.n {
                if placed.contains(i) {
                    continue;
                }
                let mut pending = self.down[i].clone();
                pending.subtract(&placed);
                pending.remove(i);
                if pending.is_empty() {
                    placed.insert(i);
                    order.push(i);
                }
            }
        }
        order
    }

    /// Parse the text format: header `poset <n>`, then one `i <= j` or
    /// `i < j` relation per line, 1-based; `#` starts a comment. Any
    /// generating set is accepted; the closure is always applied.
    pub fn parse(text: &str) -> Result<Poset> {
        let mut header: Option<usize> = None;
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match header {
                None => {
                    let mut parts = line.split_whitespace();
                    if parts.next() != Some("poset") {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "expected header `poset <n>`".into(),
                        });
                    }
                    let n: usize = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::Parse {
                            line: line_no,
                            message: "expected element count after `poset`".into(),
                        })?;
                    if parts.next().is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "trailing tokens after header".into(),
                        });
                    }
                    header = Some(n);
                }
                Some(n) => {
                    let toks: Vec<&str> = line.split_whitespace().collect();
                    let bad = |msg: String| Error::Parse {
                        line: line_no,
                        message: msg,
                    };
                    if toks.len() != 3 || (toks[1] != "<=" && toks[1] != "<") {
                        return Err(bad(format!("expected `i <= j` or `i < j`, got `{line}`")));
                    }
                    let parse_el = |t: &str| -> Result<usize> {
                        t.parse::<usize>()
                            .ok()
                            .filter(|&v| v >= 1 && v <= n)
                            .ok_or_else(|| bad(format!("element `{t}` out of range 1..={n}")))
                    };
                    let i = parse_el(toks[0])?;
                    let j = parse_el(toks[2])?;
                    if toks[1] == "<" && i == j {
                        return Err(bad(format!("strict relation {i} < {i} is impossible")));
                    }
                    pairs.push((i - 1, j - 1));
                }
            }
        }
        let n = header.ok_or(Error::Parse {
            line: 0,
            message: "missing `poset <n>` header".into(),
        })?;
        Poset::from_relations(n, &pairs)
    }

    /// Render as cover relations (a generating set; closure is applied on
    /// load). 1-based, sorted.
    pub fn render(&self) -> String {
        let mut out = format!("poset {}\n", self.n);
        for (a, b) in self.covers() {
            let _ = writeln!(out, "{} < {}", a + 1, b + 1);
        }
        out
    }
}

/// Walk the original relation digraph to exhibit one cycle through the
/// mutually comparable pair `(i, j)` found in the closure.
fn find_cycle(n: usize, pairs: &[(usize, usize)], i: usize, j: usize) -> Vec<usize> {
    let forward = bfs_path(n, pairs, i, j).unwrap_or_else(|| vec![i, j]);
    let back = bfs_path(n, pairs, j, i).unwrap_or_else(|| vec![j, i]);
    let mut cycle: Vec<usize> = forward.iter().map(|&v| v + 1).collect();
    cycle.extend(back[1..back.len() - 1].iter().map(|&v| v + 1));
    cycle
}

fn bfs_path(n: usize, pairs: &[(usize, usize)], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([from]);
    prev[from] = from;
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &(a, b) in pairs {
            if a == v && a != b && prev[b] == usize::MAX {
                prev[b] = v;
                queue.push_back(b);
            }
        }
    }
    None
}

/// The m-element chain `1 <= 2 <= ... <= m` (a total order).
pub fn chain(m: usize) -> Result<Poset> {
    if m < 1 {
        return Err(Error::EmptyChain);
    }
    let mut up = Vec::with_capacity(m);
    for i in 0..m {
        up.push(VertexSet::from_indices(m, i..m));
    }
    Ok(Poset::from_closed_rows(up))
}

/// The poset with no relations between distinct elements.
pub fn antichain_poset(n: usize) -> Poset {
    Poset::from_relations(n, &[]).unwrap()
}

/// Subsets of `{1..k}` ordered by inclusion; element index is the subset
/// bitmask. Guarded against accidental blowup.
pub fn boolean_lattice(k: usize) -> Result<Poset> {
    if k > MAX_BOOLEAN_RANK {
        return Err(Error::TooLarge {
            what: "Boolean lattice rank",
            size: k,
            limit: MAX_BOOLEAN_RANK,
        });
    }
    let n = 1usize << k;
    let mut up = Vec::with_capacity(n);
    for s in 0..n {
        let mut row = VertexSet::new(n);
        // supersets of s
        let mut t = s;
        loop {
            row.insert(t);
            if t == n - 1 {
                break;
            }
            t = (t + 1) | s;
        }
        up.push(row);
    }
    Ok(Poset::from_closed_rows(up))
}

/// A random poset: each pair `i < j` (as integers) is related with the
/// given probability, then closed. Acyclic by construction.
pub fn random_poset<R: Rng>(n: usize, density: f64, rng: &mut R) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_relations(n, &pairs).unwrap()
}
