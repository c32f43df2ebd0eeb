//! Command-line front end: polynomial computations, Groebner basis
//! verification, variety enumeration, poset/graph conversions and the
//! interpolation procedure, over the text file formats of the core crate.
//!
//! Exit codes: 0 success, 1 validation error (bad input file or argument
//! value), 2 usage error, 3 internal consistency failure (oracle mismatch,
//! verification failure, route disagreement).

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;

use indalg::error::Error;
use indalg::hilbert::{hilbert_numerator, independence_polynomial};
use indalg::interpolation::{recover_coefficients, EvaluationRoute};
use indalg::polynomial::{parse_rational, Rational};
use indalg::poset::boolean_lattice;
use indalg::poset_ideal::{bijection_f, enumerate_variety, groebner_basis, jp_generators,
                          verify_buchberger};
use indalg::cm_bipartite::{graph_from_poset, BipartiteLabeledGraph};
use indalg::{Graph, HilbertOptions, Monomial, MonomialIdeal, PivotStrategy, Polynomial, Poset};

#[derive(Parser)]
#[command(
    name = "indalg",
    version,
    about = "Exact independence and antichain polynomial computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    First,
    MaxDegree,
    CocoaLike,
    MostFrequent,
}

impl StrategyArg {
    fn to_strategy(self, seed: u64) -> PivotStrategy {
        let name = match self {
            StrategyArg::First => "first",
            StrategyArg::MaxDegree => "max-degree",
            StrategyArg::CocoaLike => "cocoa-like",
            StrategyArg::MostFrequent => "most-frequent",
        };
        PivotStrategy::from_name(name, seed).unwrap()
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

impl Switch {
    fn as_bool(self) -> bool {
        matches!(self, Switch::On)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    LexProduct,
    Direct,
    Both,
}

impl RouteArg {
    fn to_route(self) -> EvaluationRoute {
        match self {
            RouteArg::LexProduct => EvaluationRoute::LexProduct,
            RouteArg::Direct => EvaluationRoute::Direct,
            RouteArg::Both => EvaluationRoute::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertTarget {
    Graph,
    Poset,
}

#[derive(Args, Clone, Copy)]
struct ComputeFlags {
    /// Pivot selection rule for the recursion
    #[arg(long, value_enum, default_value = "max-degree")]
    pivot_strategy: StrategyArg,
    /// Seed for the randomized strategies
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Memoize intermediate results
    #[arg(long, value_enum, default_value = "on")]
    memo: Switch,
    /// Factor over connected components
    #[arg(long, value_enum, default_value = "on")]
    components: Switch,
}

impl ComputeFlags {
    fn to_options(self) -> HilbertOptions {
        HilbertOptions {
            strategy: self.pivot_strategy.to_strategy(self.seed),
            memo: self.memo.as_bool(),
            components: self.components.as_bool(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Independence polynomial of a graph file
    Indpoly {
        file: PathBuf,
        /// Cross-check against full enumeration
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        compute: ComputeFlags,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Antichain polynomial of a poset file
    Antipoly {
        file: PathBuf,
        /// Cross-check against full enumeration
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        compute: ComputeFlags,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Groebner basis of the poset binomial ideal, with verification
    Groebner {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Points of the variety of the poset ideal and their antichains
    Variety {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Convert a poset file to its bipartite graph, or back
    Convert {
        file: PathBuf,
        /// Output kind
        #[arg(long, value_enum)]
        to: ConvertTarget,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lexicographic product of two poset files
    Lexprod {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Recover antichain polynomial coefficients from evaluations
    Interpolate {
        file: PathBuf,
        /// Evaluation node t (rational, e.g. 1/2); must be non-zero
        #[arg(long, value_parser = parse_rational_arg)]
        t: Rational,
        /// How the right-hand sides are produced
        #[arg(long, value_enum, default_value = "both")]
        route: RouteArg,
        #[command(flatten)]
        compute: ComputeFlags,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Count antichains of the rank-k Boolean lattice, with stats
    BenchBoolean {
        k: u32,
        /// Recount by full enumeration
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        compute: ComputeFlags,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hilbert numerator of a monomial ideal file
    Hn {
        file: PathBuf,
        #[command(flatten)]
        compute: ComputeFlags,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }

    fn inconsistency(message: impl Into<String>) -> Self {
        CliError { code: 3, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistent(_) => 3,
            _ => 1,
        };
        CliError { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("{}: {}", path.display(), e)))
}

fn load_graph(path: &PathBuf) -> Result<Graph, CliError> {
    Ok(Graph::parse(&read_file(path)?)?)
}

fn load_poset(path: &PathBuf) -> Result<Poset, CliError> {
    Ok(Poset::parse(&read_file(path)?)?)
}

/// Ideal file: header `ideal <n_vars>`, then one monomial per line in the
/// `x3^2*x5` syntax; `#` starts a comment. The generator set is
/// interreduced on load, with a warning when that changed it.
fn load_ideal(path: &PathBuf) -> Result<(MonomialIdeal, usize), CliError> {
    let text = read_file(path)?;
    let mut n_vars: Option<usize> = None;
    let mut gens: Vec<Monomial> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        if n_vars.is_none() {
            let rest = line.strip_prefix("ideal").ok_or_else(|| {
                CliError::validation(format!("line {}: expected `ideal <n_vars>` header", lineno))
            })?;
            let n = rest.trim().parse::<usize>().map_err(|_| {
                CliError::validation(format!("line {}: bad variable count", lineno))
            })?;
            n_vars = Some(n);
            continue;
        }
        let m = Monomial::parse(line)
            .map_err(|e| CliError::validation(format!("line {}: {}", lineno, e)))?;
        if let Some(v) = m.max_variable() {
            if v >= n_vars.unwrap() {
                return Err(CliError::validation(format!(
                    "line {}: variable x{} exceeds declared count {}",
                    lineno,
                    v + 1,
                    n_vars.unwrap()
                )));
            }
        }
        gens.push(m);
    }
    let n_vars = n_vars
        .ok_or_else(|| CliError::validation("missing `ideal <n_vars>` header".to_string()))?;
    let ideal = MonomialIdeal::interreduce(gens.clone());
    let mut sorted = gens;
    sorted.sort();
    sorted.dedup();
    if ideal.gens() != sorted.as_slice() {
        eprintln!("warning: generator list was not interreduced; using minimal generators");
    }
    Ok((ideal, n_vars))
}

fn count_at_one(poly: &Polynomial) -> num_bigint::BigInt {
    poly.eval_rational(&Rational::one()).to_integer()
}

fn set_to_string(s: &indalg::VertexSet) -> String {
    let elems: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", elems.join(", "))
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Indpoly { file, oracle, compute, format } => {
            let g = load_graph(&file)?;
            let result = independence_polynomial(&g, compute.to_options())?;
            let series = result.series.clone().expect("graph computation yields a series");
            let oracle_poly = oracle.then(|| g.independence_polynomial_oracle());
            if let Some(ref o) = oracle_poly {
                if *o != series {
                    return Err(CliError::inconsistency(format!(
                        "fast path {} disagrees with enumeration oracle {}",
                        series, o
                    )));
                }
            }
            match format {
                Format::Text => {
                    println!("I(G) = {}", series);
                    println!("independent sets: {}", count_at_one(&series));
                    if oracle_poly.is_some() {
                        println!("oracle agreement: ok");
                    }
                }
                Format::Json => {
                    let mut value = serde_json::json!({
                        "polynomial": series.to_string(),
                        "coefficients": series.coeff_strings(),
                        "count": count_at_one(&series).to_string(),
                        "stats": result.stats_json(),
                    });
                    if let Some(o) = oracle_poly {
                        value["oracle"] = serde_json::json!({
                            "polynomial": o.to_string(),
                            "agreement": true,
                        });
                    }
                    println!("{}", value);
                }
            }
        }
        Command::Antipoly { file, oracle, compute, format } => {
            let p = load_poset(&file)?;
            let result = independence_polynomial(&p.comparability_graph(), compute.to_options())?;
            let series = result.series.clone().expect("graph computation yields a series");
            let oracle_poly = oracle.then(|| p.antichain_polynomial_oracle());
            if let Some(ref o) = oracle_poly {
                if *o != series {
                    return Err(CliError::inconsistency(format!(
                        "fast path {} disagrees with enumeration oracle {}",
                        series, o
                    )));
                }
            }
            match format {
                Format::Text => {
                    println!("A(P) = {}", series);
                    println!("antichains: {}", count_at_one(&series));
                    if oracle_poly.is_some() {
                        println!("oracle agreement: ok");
                    }
                }
                Format::Json => {
                    let mut value = serde_json::json!({
                        "polynomial": series.to_string(),
                        "coefficients": series.coeff_strings(),
                        "count": count_at_one(&series).to_string(),
                        "stats": result.stats_json(),
                    });
                    if let Some(o) = oracle_poly {
                        value["oracle"] = serde_json::json!({
                            "polynomial": o.to_string(),
                            "agreement": true,
                        });
                    }
                    println!("{}", value);
                }
            }
        }
        Command::Groebner { file, format } => {
            let p = load_poset(&file)?;
            let basis = groebner_basis(&p);
            let report = verify_buchberger(&p);
            match format {
                Format::Text => {
                    for b in &basis.binomials {
                        println!("{}", b);
                    }
                    println!("pairs checked: {}", report.pairs_checked);
                    println!("reduced: {}", report.reduced);
                    println!("non-redundant: {}", report.non_redundant);
                    println!(
                        "verification: {}",
                        if report.is_success() { "ok" } else { "FAILED" }
                    );
                    for f in &report.failures {
                        println!("failure: {}", f);
                    }
                }
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::json!({
                            "basis": basis.to_json(),
                            "verification": report.to_json(),
                        })
                    );
                }
            }
            if !report.is_success() {
                return Err(CliError::inconsistency(
                    "Groebner verification failed".to_string(),
                ));
            }
        }
        Command::Variety { file, format } => {
            let p = load_poset(&file)?;
            let gens = jp_generators(&p);
            let points = enumerate_variety(&gens, p.n())?;
            let mut rows = Vec::with_capacity(points.len());
            for pt in &points {
                rows.push((pt, bijection_f(&p, pt)?));
            }
            match format {
                Format::Text => {
                    for (pt, antichain) in &rows {
                        println!("{}  ->  {}", pt, set_to_string(antichain));
                    }
                    println!("points: {}", rows.len());
                }
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::json!({
                            "points": rows
                                .iter()
                                .map(|(pt, a)| serde_json::json!({
                                    "point": pt.to_string(),
                                    "antichain": a.iter().map(|i| i + 1).collect::<Vec<_>>(),
                                }))
                                .collect::<Vec<_>>(),
                            "count": rows.len(),
                        })
                    );
                }
            }
        }
        Command::Convert { file, to, format } => {
            let text = read_file(&file)?;
            match to {
                ConvertTarget::Graph => {
                    let p = Poset::parse(&text)?;
                    let (g, _) = graph_from_poset(&p);
                    match format {
                        Format::Text => print!("{}", g.render()),
                        Format::Json => println!(
                            "{}",
                            serde_json::json!({
                                "n": 2 * g.n(),
                                "edges": g
                                    .edges()
                                    .map(|(i, j)| vec![i + 1, g.n() + j + 1])
                                    .collect::<Vec<_>>(),
                            })
                        ),
                    }
                }
                ConvertTarget::Poset => {
                    let g = BipartiteLabeledGraph::parse(&text)?;
                    let p = g.to_poset()?;
                    match format {
                        Format::Text => print!("{}", p.render()),
                        Format::Json => println!(
                            "{}",
                            serde_json::json!({
                                "n": p.n(),
                                "covers": p
                                    .covers()
                                    .iter()
                                    .map(|&(a, b)| vec![a + 1, b + 1])
                                    .collect::<Vec<_>>(),
                            })
                        ),
                    }
                }
            }
        }
        Command::Lexprod { file1, file2, format } => {
            let p1 = load_poset(&file1)?;
            let p2 = load_poset(&file2)?;
            let product = p1.lex_product(&p2);
            match format {
                Format::Text => print!("{}", product.render()),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "n": product.n(),
                        "covers": product
                            .covers()
                            .iter()
                            .map(|&(a, b)| vec![a + 1, b + 1])
                            .collect::<Vec<_>>(),
                    })
                ),
            }
        }
        Command::Interpolate { file, t, route, compute, format } => {
            let p = load_poset(&file)?;
            let rec = recover_coefficients(&p, &t, route.to_route(), compute.to_options())?;
            match format {
                Format::Text => {
                    println!("t = {}", t);
                    let evals: Vec<String> =
                        rec.system.rhs().iter().map(|r| r.to_string()).collect();
                    println!("evaluations: {}", evals.join(", "));
                    println!("recovered: {}", rec.polynomial);
                }
                Format::Json => println!("{}", rec.to_json()),
            }
        }
        Command::BenchBoolean { k, oracle, compute, format } => {
            let p = boolean_lattice(k as usize)?;
            let start = Instant::now();
            let result = independence_polynomial(&p.comparability_graph(), compute.to_options())?;
            let fast_ms = start.elapsed().as_millis();
            let series = result.series.clone().expect("graph computation yields a series");
            let count = count_at_one(&series);
            let oracle_count = if oracle {
                let start = Instant::now();
                let c = p.count_antichains();
                let ms = start.elapsed().as_millis();
                if num_bigint::BigInt::from(c) != count {
                    return Err(CliError::inconsistency(format!(
                        "fast count {} disagrees with enumeration oracle {}",
                        count, c
                    )));
                }
                Some((c, ms))
            } else {
                None
            };
            match format {
                Format::Text => {
                    println!("rank: {}", k);
                    println!("antichains: {}", count);
                    println!("nodes: {}", result.stats.nodes);
                    println!("depth: {}", result.stats.max_depth);
                    println!("memo hits: {}", result.stats.memo_hits);
                    println!("elapsed ms: {}", fast_ms);
                    if let Some((c, ms)) = oracle_count {
                        println!("oracle antichains: {}", c);
                        println!("oracle elapsed ms: {}", ms);
                    }
                }
                Format::Json => {
                    let mut value = serde_json::json!({
                        "rank": k,
                        "count": count.to_string(),
                        "stats": result.stats_json(),
                        "elapsed_ms": fast_ms as u64,
                    });
                    if let Some((c, ms)) = oracle_count {
                        value["oracle"] = serde_json::json!({
                            "count": c,
                            "elapsed_ms": ms as u64,
                        });
                    }
                    println!("{}", value);
                }
            }
        }
        Command::Hn { file, compute, format } => {
            let (ideal, n_vars) = load_ideal(&file)?;
            let result = hilbert_numerator(&ideal, n_vars, compute.to_options())?;
            match format {
                Format::Text => {
                    println!("numerator: {}", result.numerator);
                    println!("strategy: {}", result.strategy.name());
                    println!("nodes: {}", result.stats.nodes);
                    println!("depth: {}", result.stats.max_depth);
                    println!("memo hits: {}", result.stats.memo_hits);
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "numerator": result.numerator.to_string(),
                        "coefficients": result.numerator.coeff_strings(),
                        "n_vars": n_vars,
                        "stats": result.stats_json(),
                    })
                ),
            }
        }
    }
    Ok(())
}
