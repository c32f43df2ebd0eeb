//! Monomials, minimal generating sets of monomial ideals, the closed-form
//! colon and sum operations driving the Hilbert recursion, and edge-ideal
//! constructions.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A monomial as a sparse exponent list, sorted by variable index with no
/// zero exponents. Variables are 0-based internally, `x1, x2, ...` in I/O.
/// The empty list is the monomial 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    /// (variable, exponent) pairs, variable strictly increasing, exponent >= 1.
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn variable(i: usize) -> Self {
        Monomial { exps: vec![(i, 1)] }
    }

    pub fn variable_power(i: usize, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(i, e)] }
        }
    }

    pub fn edge(i: usize, j: usize) -> Self {
        assert_ne!(i, j);
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        Monomial {
            exps: vec![(a, 1), (b, 1)],
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut exps: Vec<(usize, u32)> = Vec::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            match exps.iter_mut().find(|(w, _)| *w == v) {
                Some((_, cur)) => *cur += e,
                None => exps.push((v, e)),
            }
        }
        exps.sort_unstable();
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent_of(&self, var: usize) -> u32 {
        self.exps
            .iter()
            .find(|&&(v, _)| v == var)
            .map_or(0, |&(_, e)| e)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.exps
    }

    pub fn max_variable(&self) -> Option<usize> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|&(v, e)| other.exponent_of(v) >= e)
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.support().all(|v| other.exponent_of(v) == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.exps.iter().chain(&other.exps).copied())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .filter_map(|&(v, e)| {
                    let o = other.exponent_of(v);
                    (o > 0).then(|| (v, e.min(o)))
                })
                .collect(),
        }
    }

    /// `self / other`; `other` must divide `self`.
    pub fn div_exact(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .filter_map(|&(v, e)| {
                    let rem = e - other.exponent_of(v);
                    (rem > 0).then_some((v, rem))
                })
                .collect(),
        }
    }

    /// `self / gcd(self, other)` -- the generator image under the colon by
    /// `other`.
    pub fn div_by_gcd_with(&self, other: &Monomial) -> Monomial {
        self.div_exact(&self.gcd(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for &(v, e) in &other.exps {
            match exps.iter_mut().find(|(w, _)| *w == v) {
                Some((_, cur)) => *cur = (*cur).max(e),
                None => exps.push((v, e)),
            }
        }
        exps.sort_unstable();
        Monomial { exps }
    }

    /// Value under a 0/1 substitution: 1 iff every support variable is set.
    pub fn eval_bits(&self, bits: u64) -> bool {
        self.support().all(|v| bits >> v & 1 == 1)
    }

    /// Parse `x3^2*x5` (1-based variables). `1` is the unit monomial.
    pub fn parse(s: &str) -> Result<Monomial> {
        let bad = |msg: String| Error::Parse { line: 0, message: msg };
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut pairs = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| bad(format!("expected factor like `x3^2`, got `{factor}`")))?;
            let (var_s, exp) = match rest.split_once('^') {
                Some((v, e)) => (
                    v,
                    e.parse::<u32>()
                        .ok()
                        .filter(|&e| e >= 1)
                        .ok_or_else(|| bad(format!("bad exponent in `{factor}`")))?,
                ),
                None => (rest, 1),
            };
            let var: usize = var_s
                .parse()
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| bad(format!("bad variable in `{factor}`")))?;
            pairs.push((var - 1, exp));
        }
        Ok(Monomial::from_pairs(pairs))
    }
}

/// Canonical order: by variable ascending, then exponent descending, so
/// `x1^2 < x1*x2 < x2^2` and generator listings are deterministic.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.exps.iter().zip(&other.exps) {
            match a.0.cmp(&b.0) {
                Ordering::Equal => {}
                ord => return ord,
            }
            match b.1.cmp(&a.1) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.exps.len().cmp(&other.exps.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (idx, &(v, e)) in self.exps.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{}", v + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal by its minimal (interreduced) generating set, kept
/// sorted canonically so generator sets hash deterministically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        MonomialIdeal::default()
    }

    /// Interreduce: drop every monomial strictly divisible by another in
    /// the set (and duplicates), leaving the minimal generating set.
    pub fn interreduce(gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        gens.sort();
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for m in &gens {
            if !gens.iter().any(|g| g != m && g.divides(m)) {
                minimal.push(m.clone());
            }
        }
        MonomialIdeal { gens: minimal }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Sum of the degrees of the minimal generators, the measure that the
    /// pivot condition must strictly decrease on both branches.
    pub fn sum_deg(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).sum()
    }

    pub fn pairwise_coprime(&self) -> bool {
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                if !a.is_coprime_with(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Colon by an arbitrary monomial: each generator m maps to
    /// m / gcd(m, p), then interreduce.
    pub fn colon_by_monomial(&self, p: &Monomial) -> MonomialIdeal {
        MonomialIdeal::interreduce(self.gens.iter().map(|m| m.div_by_gcd_with(p)))
    }

    /// Colon by a single variable.
    pub fn colon_by_variable(&self, var: usize) -> MonomialIdeal {
        self.colon_by_monomial(&Monomial::variable(var))
    }

    /// Sum with an arbitrary monomial: insert it, absorb its multiples.
    pub fn add_monomial(&self, p: &Monomial) -> MonomialIdeal {
        MonomialIdeal::interreduce(self.gens.iter().cloned().chain([p.clone()]))
    }

    /// Sum with a single variable.
    pub fn add_variable(&self, var: usize) -> MonomialIdeal {
        self.add_monomial(&Monomial::variable(var))
    }

    /// Highest variable index appearing in any generator, plus one.
    pub fn min_n_vars(&self) -> usize {
        self.gens
            .iter()
            .filter_map(Monomial::max_variable)
            .max()
            .map_or(0, |v| v + 1)
    }

    /// `x1^2, x1*x2, x2^2` style listing; the zero ideal renders `0`.
    pub fn render(&self) -> String {
        if self.gens.is_empty() {
            return "0".to_string();
        }
        self.gens
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// JSON list of exponent maps, 1-based variable keys.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.gens
                .iter()
                .map(|m| {
                    let mut map = Map::new();
                    for &(v, e) in m.exponents() {
                        map.insert((v + 1).to_string(), Value::from(e));
                    }
                    Value::Object(map)
                })
                .collect(),
        )
    }
}

/// The edge ideal: one generator `x_i*x_j` per edge. All generators have
/// degree 2 and no pair divides, so the set is already minimal.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    MonomialIdeal::interreduce(g.edges().into_iter().map(|(i, j)| Monomial::edge(i, j)))
}

/// The modified edge ideal: edge monomials plus every square `x_i^2`.
pub fn modified_edge_ideal(g: &Graph) -> MonomialIdeal {
    let squares = (0..g.n()).map(|i| Monomial::variable_power(i, 2));
    MonomialIdeal::interreduce(
        g.edges()
            .into_iter()
            .map(|(i, j)| Monomial::edge(i, j))
            .chain(squares),
    )
}
