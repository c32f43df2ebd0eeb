//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A generating relation set induces a cycle among distinct elements,
    /// so no partial order closes over it. Elements are 1-based.
    #[error("relations contain a cycle among distinct elements: {}", format_cycle(.cycle))]
    CycleDetected { cycle: Vec<usize> },

    /// A vertex or element index outside `1..=n`.
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("polynomial division left a non-zero remainder")]
    NonExactDivision,

    /// A pivot strategy produced a pivot that does not shrink both branches.
    #[error("pivot {pivot} violates the decreasing total degree condition")]
    PivotViolation { pivot: String },

    #[error("{what} of size {size} exceeds the supported limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("chain length must be at least 1")]
    EmptyChain,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The bipartite labeling fails one of the three Cohen-Macaulay
    /// conditions; `condition` is 1, 2 or 3.
    #[error("not a Cohen-Macaulay labeling: condition {condition} violated: {message}")]
    NotCohenMacaulay { condition: u8, message: String },

    #[error("point is not in the variety of the poset ideal")]
    NotInVariety,

    #[error("set is not an antichain: elements {a} and {b} are comparable")]
    NotAntichain { a: usize, b: usize },

    #[error("interpolation node t must be non-zero")]
    SingularSystem,

    /// The lex-product and direct evaluation routes disagreed, or a solved
    /// coefficient came out non-integral. Either indicates a bug upstream.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

fn format_cycle(cycle: &[usize]) -> String {
    let mut s = String::new();
    for v in cycle {
        s.push_str(&v.to_string());
        s.push_str(" -> ");
    }
    if let Some(first) = cycle.first() {
        s.push_str(&first.to_string());
    }
    s
}
