//! Hilbert numerators of monomial ideals and the specialized
//! independence-polynomial recursion for modified edge ideals, with
//! pluggable pivot strategies and memoization.
//!
//! The general recursion splits on a pivot monomial p into the colon
//! ideal (I : p) and the sum (I + p), combining the results as
//! z^deg(p) * HN(I:p) + HN(I+p). The specialized version runs directly on
//! graph state: the generator list of any ideal reachable from a modified
//! edge ideal is exactly the subgraph induced by the variables that still
//! appear squared, so the recursion state is a live-vertex set, a pivot is
//! a vertex, the colon branch deletes its closed neighborhood and the plus
//! branch deletes the vertex alone.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial_ideal::{modified_edge_ideal, Monomial, MonomialIdeal};
use crate::polynomial::Polynomial;
use crate::poset::Poset;

/// How the pivot is chosen at every interior node of the recursion.
///
/// Every strategy must produce a pivot that strictly decreases the total
/// generator degree on both branches, or the computation fails loudly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotStrategy {
    /// Lowest-index variable that appears squared (lowest-index live
    /// vertex with a live edge, in graph form).
    FirstSquaredVariable,
    /// Squared variable contained in the most generators: the live vertex
    /// of maximum degree in the induced subgraph, lowest index on ties.
    MaxDegreeSquaredVariable,
    /// The CoCoA-style choice: a most-frequent variable picked at random
    /// among ties, then the highest power of it dividing two randomly
    /// chosen generators that contain it. Seeded for reproducibility.
    CocoaLike(u64),
    /// Most-frequent variable, pivot raised to the highest power dividing
    /// every generator containing it. Only meaningful for the general
    /// numerator algorithm; seeded tie-break.
    MostFrequentVariablePower(u64),
}

impl PivotStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            PivotStrategy::FirstSquaredVariable => "first",
            PivotStrategy::MaxDegreeSquaredVariable => "max-degree",
            PivotStrategy::CocoaLike(_) => "cocoa-like",
            PivotStrategy::MostFrequentVariablePower(_) => "most-frequent",
        }
    }

    pub fn from_name(name: &str, seed: u64) -> Option<PivotStrategy> {
        match name {
            "first" => Some(PivotStrategy::FirstSquaredVariable),
            "max-degree" => Some(PivotStrategy::MaxDegreeSquaredVariable),
            "cocoa-like" => Some(PivotStrategy::CocoaLike(seed)),
            "most-frequent" => Some(PivotStrategy::MostFrequentVariablePower(seed)),
            _ => None,
        }
    }

    fn rng(&self) -> Option<ChaCha8Rng> {
        match self {
            PivotStrategy::CocoaLike(seed) | PivotStrategy::MostFrequentVariablePower(seed) => {
                Some(ChaCha8Rng::seed_from_u64(*seed))
            }
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct HilbertOptions {
    pub strategy: PivotStrategy,
    pub memo: bool,
    /// Factor the computation over connected components of the live
    /// subgraph (specialized algorithm only).
    pub components: bool,
}

impl Default for HilbertOptions {
    fn default() -> Self {
        HilbertOptions {
            strategy: PivotStrategy::MaxDegreeSquaredVariable,
            memo: true,
            components: true,
        }
    }
}

impl HilbertOptions {
    pub fn with_strategy(strategy: PivotStrategy) -> Self {
        HilbertOptions {
            strategy,
            ..Default::default()
        }
    }
}

/// Size and shape of a finished recursion.
#[derive(Clone, Debug, Default)]
pub struct RecursionStats {
    pub nodes: u64,
    pub max_depth: usize,
    pub memo_hits: u64,
}

impl RecursionStats {
    pub fn to_json(&self, strategy: &PivotStrategy) -> Value {
        json!({
            "nodes": self.nodes,
            "depth": self.max_depth,
            "memo_hits": self.memo_hits,
            "strategy": strategy.name(),
        })
    }
}

/// Result of a Hilbert computation.
///
/// When `series` is set (zero-dimensional quotient), the identity
/// `numerator = series * (1-z)^n_vars` holds exactly.
#[derive(Clone, Debug)]
pub struct HilbertResult {
    pub numerator: Polynomial,
    pub n_vars: usize,
    pub series: Option<Polynomial>,
    pub stats: RecursionStats,
    pub strategy: PivotStrategy,
}

impl HilbertResult {
    pub fn stats_json(&self) -> Value {
        self.stats.to_json(&self.strategy)
    }
}

// ---------------------------------------------------------------------------
// Algorithm on general monomial ideals

struct NumeratorCtx {
    options: HilbertOptions,
    memo: HashMap<MonomialIdeal, Polynomial>,
    rng: Option<ChaCha8Rng>,
    stats: RecursionStats,
}

/// Hilbert numerator of `C[x1..x_nvars]/I` by the pivot recursion on
/// minimal generator lists.
pub fn hilbert_numerator(
    ideal: &MonomialIdeal,
    n_vars: usize,
    options: HilbertOptions,
) -> Result<HilbertResult> {
    if ideal.min_n_vars() > n_vars {
        return Err(Error::IndexOutOfRange {
            index: ideal.min_n_vars(),
            n: n_vars,
        });
    }
    let mut ctx = NumeratorCtx {
        options,
        memo: HashMap::new(),
        rng: options.strategy.rng(),
        stats: RecursionStats::default(),
    };
    let numerator = numerator_rec(&mut ctx, ideal, 1)?;
    Ok(HilbertResult {
        numerator,
        n_vars,
        series: None,
        stats: ctx.stats,
        strategy: options.strategy,
    })
}

fn numerator_rec(
    ctx: &mut NumeratorCtx,
    ideal: &MonomialIdeal,
    depth: usize,
) -> Result<Polynomial> {
    ctx.stats.nodes += 1;
    ctx.stats.max_depth = ctx.stats.max_depth.max(depth);
    if ctx.options.memo {
        if let Some(hit) = ctx.memo.get(ideal) {
            ctx.stats.memo_hits += 1;
            return Ok(hit.clone());
        }
    }
    let result = if ideal.pairwise_coprime() {
        // base case: product of (1 - z^d_i) over the s generators
        let mut prod = Polynomial::one();
        for g in ideal.gens() {
            prod = prod.mul(&Polynomial::one_minus_z_pow(g.degree() as usize));
        }
        prod
    } else {
        let pivot = choose_ideal_pivot(ideal, &ctx.options.strategy, ctx.rng.as_mut())?;
        let colon = ideal.colon_by_monomial(&pivot);
        let plus = ideal.add_monomial(&pivot);
        if colon.sum_deg() >= ideal.sum_deg() || plus.sum_deg() >= ideal.sum_deg() {
            return Err(Error::PivotViolation {
                pivot: pivot.to_string(),
            });
        }
        let f1 = numerator_rec(ctx, &colon, depth + 1)?;
        let f2 = numerator_rec(ctx, &plus, depth + 1)?;
        f1.shift(pivot.degree() as usize).add(&f2)
    };
    if ctx.options.memo {
        ctx.memo.insert(ideal.clone(), result.clone());
    }
    Ok(result)
}

/// Number of generators containing each variable, as (variable, count).
fn variable_frequencies(ideal: &MonomialIdeal) -> Vec<(usize, usize)> {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for g in ideal.gens() {
        for v in g.support() {
            *counts.entry(v).or_insert(0) += 1;
        }
    }
    let mut out: Vec<(usize, usize)> = counts.into_iter().collect();
    out.sort_unstable();
    out
}

fn squared_variables(ideal: &MonomialIdeal) -> Vec<usize> {
    let mut vars: Vec<usize> = ideal
        .gens()
        .iter()
        .flat_map(|g| g.exponents().iter())
        .filter(|&&(_, e)| e >= 2)
        .map(|&(v, _)| v)
        .collect();
    vars.sort_unstable();
    vars.dedup();
    vars
}

fn choose_ideal_pivot(
    ideal: &MonomialIdeal,
    strategy: &PivotStrategy,
    rng: Option<&mut ChaCha8Rng>,
) -> Result<Monomial> {
    let no_pivot = || Error::PivotViolation {
        pivot: "(no admissible pivot found)".to_string(),
    };
    let freq = variable_frequencies(ideal);
    match strategy {
        PivotStrategy::FirstSquaredVariable => squared_variables(ideal)
            .first()
            .map(|&v| Monomial::variable(v))
            .ok_or_else(no_pivot),
        PivotStrategy::MaxDegreeSquaredVariable => squared_variables(ideal)
            .into_iter()
            .max_by_key(|&v| {
                let count = freq.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, c)| c);
                (count, std::cmp::Reverse(v))
            })
            .map(Monomial::variable)
            .ok_or_else(no_pivot),
        PivotStrategy::CocoaLike(_) => {
            let rng = rng.expect("seeded strategy carries an rng");
            let best = freq.iter().map(|&(_, c)| c).max().ok_or_else(no_pivot)?;
            let candidates: Vec<usize> = freq
                .iter()
                .filter(|&&(_, c)| c == best)
                .map(|&(v, _)| v)
                .collect();
            let var = *candidates.choose(rng).unwrap();
            let containing: Vec<&Monomial> = ideal
                .gens()
                .iter()
                .filter(|g| g.exponent_of(var) > 0)
                .collect();
            // Two *distinct* generators: with an interreduced ideal this
            // keeps the pivot a proper divisor of one of them, so both
            // recursion branches strictly shrink.
            let a = rng.gen_range(0..containing.len());
            let mut b = rng.gen_range(0..containing.len() - 1);
            if b >= a {
                b += 1;
            }
            let power = containing[a]
                .exponent_of(var)
                .min(containing[b].exponent_of(var));
            Ok(Monomial::variable_power(var, power))
        }
        PivotStrategy::MostFrequentVariablePower(_) => {
            let rng = rng.expect("seeded strategy carries an rng");
            let best = freq.iter().map(|&(_, c)| c).max().ok_or_else(no_pivot)?;
            let candidates: Vec<usize> = freq
                .iter()
                .filter(|&&(_, c)| c == best)
                .map(|&(v, _)| v)
                .collect();
            let var = *candidates.choose(rng).unwrap();
            let power = ideal
                .gens()
                .iter()
                .filter_map(|g| {
                    let e = g.exponent_of(var);
                    (e > 0).then_some(e)
                })
                .min()
                .ok_or_else(no_pivot)?;
            Ok(Monomial::variable_power(var, power))
        }
    }
}

// ---------------------------------------------------------------------------
// Specialized algorithm on graph state

struct SeriesCtx<'g> {
    graph: &'g Graph,
    options: HilbertOptions,
    memo: HashMap<VertexSet, Polynomial>,
    rng: Option<ChaCha8Rng>,
    stats: RecursionStats,
}

/// Independence polynomial of a graph by the specialized Hilbert
/// recursion. `series` holds I(G, z); `numerator` holds
/// `series * (1-z)^n` for conformance against [`hilbert_numerator`] on
/// the modified edge ideal.
pub fn independence_polynomial(g: &Graph, options: HilbertOptions) -> Result<HilbertResult> {
    let mut ctx = SeriesCtx {
        graph: g,
        options,
        memo: HashMap::new(),
        rng: options.strategy.rng(),
        stats: RecursionStats::default(),
    };
    let series = series_rec(&mut ctx, VertexSet::full(g.n()), 1)?;
    let numerator = series.mul(&Polynomial::one_minus_z_pow(1).pow(g.n()));
    Ok(HilbertResult {
        numerator,
        n_vars: g.n(),
        series: Some(series),
        stats: ctx.stats,
        strategy: options.strategy,
    })
}

fn series_rec(ctx: &mut SeriesCtx, live: VertexSet, depth: usize) -> Result<Polynomial> {
    ctx.stats.nodes += 1;
    ctx.stats.max_depth = ctx.stats.max_depth.max(depth);
    if ctx.options.memo {
        if let Some(hit) = ctx.memo.get(&live) {
            ctx.stats.memo_hits += 1;
            return Ok(hit.clone());
        }
    }

    let live_degrees: Vec<(usize, usize)> = live
        .iter()
        .map(|v| {
            let mut nb = ctx.graph.neighbors(v).clone();
            nb.intersect_with(&live);
            (v, nb.len())
        })
        .collect();
    let has_edges = live_degrees.iter().any(|&(_, d)| d > 0);

    let result = if !has_edges {
        // base case: the quotient is a complete intersection,
        // (1+z) per live (squared) variable
        Polynomial::one_plus_z().pow(live.len())
    } else if ctx.options.components {
        let comps = ctx.graph.components_within(&live);
        if comps.len() > 1 {
            let mut prod = Polynomial::one();
            for comp in comps {
                prod = prod.mul(&series_component(ctx, comp, depth)?);
            }
            prod
        } else {
            series_component(ctx, live.clone(), depth)?
        }
    } else {
        series_split(ctx, &live, &live_degrees, depth)?
    };

    if ctx.options.memo {
        ctx.memo.insert(live, result.clone());
    }
    Ok(result)
}

/// Split a connected (or unfactored) live set at a pivot vertex.
fn series_component(ctx: &mut SeriesCtx, live: VertexSet, depth: usize) -> Result<Polynomial> {
    if ctx.options.memo {
        if let Some(hit) = ctx.memo.get(&live) {
            ctx.stats.memo_hits += 1;
            return Ok(hit.clone());
        }
    }
    let live_degrees: Vec<(usize, usize)> = live
        .iter()
        .map(|v| {
            let mut nb = ctx.graph.neighbors(v).clone();
            nb.intersect_with(&live);
            (v, nb.len())
        })
        .collect();
    let result = if live_degrees.iter().all(|&(_, d)| d == 0) {
        Polynomial::one_plus_z().pow(live.len())
    } else {
        series_split(ctx, &live, &live_degrees, depth)?
    };
    if ctx.options.memo {
        ctx.memo.insert(live, result.clone());
    }
    Ok(result)
}

fn series_split(
    ctx: &mut SeriesCtx,
    live: &VertexSet,
    live_degrees: &[(usize, usize)],
    depth: usize,
) -> Result<Polynomial> {
    let pivot = choose_vertex_pivot(&ctx.options.strategy, live_degrees, ctx.rng.as_mut())?;

    // colon branch: independent sets containing the pivot; drop its
    // closed neighborhood
    let mut colon_live = live.clone();
    colon_live.remove(pivot);
    colon_live.subtract(ctx.graph.neighbors(pivot));
    // plus branch: independent sets avoiding the pivot; drop it alone
    let mut plus_live = live.clone();
    plus_live.remove(pivot);

    let colon = series_rec(ctx, colon_live, depth + 1)?;
    let plus = series_rec(ctx, plus_live, depth + 1)?;
    Ok(colon.shift(1).add(&plus))
}

fn choose_vertex_pivot(
    strategy: &PivotStrategy,
    live_degrees: &[(usize, usize)],
    rng: Option<&mut ChaCha8Rng>,
) -> Result<usize> {
    let no_pivot = || Error::PivotViolation {
        pivot: "(no live vertex with an edge)".to_string(),
    };
    match strategy {
        PivotStrategy::FirstSquaredVariable => live_degrees
            .iter()
            .find(|&&(_, d)| d > 0)
            .map(|&(v, _)| v)
            .ok_or_else(no_pivot),
        PivotStrategy::MaxDegreeSquaredVariable => live_degrees
            .iter()
            .filter(|&&(_, d)| d > 0)
            .max_by_key(|&&(v, d)| (d, std::cmp::Reverse(v)))
            .map(|&(v, _)| v)
            .ok_or_else(no_pivot),
        PivotStrategy::CocoaLike(_) | PivotStrategy::MostFrequentVariablePower(_) => {
            // generator frequency of a live vertex is 1 + its live degree,
            // so most-frequent means maximum degree; ties break at random
            let rng = rng.expect("seeded strategy carries an rng");
            let best = live_degrees
                .iter()
                .filter(|&&(_, d)| d > 0)
                .map(|&(_, d)| d)
                .max()
                .ok_or_else(no_pivot)?;
            let candidates: Vec<usize> = live_degrees
                .iter()
                .filter(|&&(_, d)| d == best)
                .map(|&(v, _)| v)
                .collect();
            Ok(*candidates.choose(rng).unwrap())
        }
    }
}

/// Antichain polynomial via the fast path: the specialized recursion on
/// the comparability graph. This is the executable form of counting the
/// standard monomials of the leading-term ideal of the poset ideal.
pub fn antichain_polynomial_fast(p: &Poset, options: HilbertOptions) -> Result<Polynomial> {
    let result = independence_polynomial(&p.comparability_graph(), options)?;
    Ok(result.series.expect("specialized algorithm always yields a series"))
}

/// Convenience: run the specialized graph recursion and confirm
/// `numerator = series * (1-z)^n` against the general ideal recursion on
/// the modified edge ideal.
pub fn check_numerator_conformance(g: &Graph, options: HilbertOptions) -> Result<bool> {
    let fast = independence_polynomial(g, options)?;
    let general = hilbert_numerator(&modified_edge_ideal(g), g.n(), options)?;
    Ok(fast.numerator == general.numerator)
}
