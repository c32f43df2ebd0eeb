//! The binomial ideal family attached to a poset: the full-down-set and
//! cover generator sets, the closed-form universal reduced Groebner basis,
//! S-polynomial verification, variety enumeration over {0,1}^n, and the
//! explicit bijection between variety points and antichains.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::monomial_ideal::{Monomial, MonomialIdeal};
use crate::poset::Poset;

/// The largest n for which a 2^n substitution sweep is allowed.
const MAX_VARIETY_VARS: usize = 30;

/// A difference of two monomials, `lead - trail`.
///
/// For Groebner basis members the lead has degree 2 and the trail degree 1,
/// so divisibility alone forces the leading term under every monomial
/// order. The down-set generators are stored with the high-degree product
/// term as `lead`; they appear in the construction as `trail - lead`, a
/// sign that matters neither to the variety nor to membership.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    pub fn new(lead: Monomial, trail: Monomial) -> Self {
        assert_ne!(lead, trail);
        Binomial { lead, trail }
    }

    /// Vanishes at a 0/1 point iff both monomials evaluate equally.
    pub fn vanishes_at(&self, bits: u64) -> bool {
        self.lead.eval_bits(bits) == self.trail.eval_bits(bits)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lead": monomial_json(&self.lead),
            "trail": monomial_json(&self.trail),
        })
    }
}

fn monomial_json(m: &Monomial) -> Value {
    let mut map = serde_json::Map::new();
    for &(v, e) in m.exponents() {
        map.insert((v + 1).to_string(), Value::from(e));
    }
    Value::Object(map)
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorKind {
    /// One generator per element, product over the full down-set.
    FullDownSet,
    /// One generator per element, product over the element and its covers.
    CoverDownSet,
    /// The closed-form universal reduced Groebner basis.
    Groebner,
}

impl GeneratorKind {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorKind::FullDownSet => "J_P",
            GeneratorKind::CoverDownSet => "J'_P",
            GeneratorKind::Groebner => "Gb_P",
        }
    }
}

/// A generator set for the poset ideal, in one of its three presentations.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub kind: GeneratorKind,
    pub n: usize,
    pub binomials: Vec<Binomial>,
}

impl GeneratorSet {
    pub fn vanishes_at(&self, bits: u64) -> bool {
        self.binomials.iter().all(|b| b.vanishes_at(bits))
    }

    pub fn render(&self) -> String {
        self.binomials
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.name(),
            "n": self.n,
            "generators": self.binomials.iter().map(Binomial::to_json).collect::<Vec<_>>(),
        })
    }
}

/// A point of {0,1}^n; bit i is the value of variable x_{i+1}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct VarietyPoint {
    pub bits: u64,
    pub n: usize,
}

impl fmt::Display for VarietyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", self.bits >> i & 1)?;
        }
        Ok(())
    }
}

/// One generator per element: `x_i - x_i * prod_{j <= i} x_j`, the product
/// running over the full down-set (the element itself included).
pub fn jp_generators(p: &Poset) -> GeneratorSet {
    down_set_generators(p, GeneratorKind::FullDownSet, |p, i| {
        p.down_set(i).iter().collect()
    })
}

/// Same shape, product over the element and its covers only.
pub fn jp_cover_generators(p: &Poset) -> GeneratorSet {
    let covers = p.covers();
    down_set_generators(p, GeneratorKind::CoverDownSet, move |_, i| {
        let mut vars: Vec<usize> = covers
            .iter()
            .filter(|&&(_, b)| b == i)
            .map(|&(a, _)| a)
            .collect();
        vars.push(i);
        vars
    })
}

fn down_set_generators(
    p: &Poset,
    kind: GeneratorKind,
    factors: impl Fn(&Poset, usize) -> Vec<usize>,
) -> GeneratorSet {
    let binomials = (0..p.n())
        .map(|i| {
            let mut product = Monomial::variable(i);
            for j in factors(p, i) {
                product = product.mul(&Monomial::variable(j));
            }
            Binomial::new(product, Monomial::variable(i))
        })
        .collect();
    GeneratorSet {
        kind,
        n: p.n(),
        binomials,
    }
}

/// The universal reduced Groebner basis: `x_i^2 - x_i` for every element
/// plus `x_i*x_j - x_i` for every strict relation `v_j < v_i`.
pub fn groebner_basis(p: &Poset) -> GeneratorSet {
    let mut binomials: Vec<Binomial> = (0..p.n())
        .map(|i| Binomial::new(Monomial::variable_power(i, 2), Monomial::variable(i)))
        .collect();
    for i in 0..p.n() {
        for j in p.down_set(i).iter() {
            if j != i {
                binomials.push(Binomial::new(Monomial::edge(i, j), Monomial::variable(i)));
            }
        }
    }
    GeneratorSet {
        kind: GeneratorKind::Groebner,
        n: p.n(),
        binomials,
    }
}

/// Leading terms of the Groebner basis, interreduced. Equals the modified
/// edge ideal of the comparability graph.
pub fn leading_term_ideal(p: &Poset) -> MonomialIdeal {
    MonomialIdeal::interreduce(groebner_basis(p).binomials.into_iter().map(|b| b.lead))
}

/// All points of {0,1}^n annihilating every generator, sorted by
/// bitstring value. A substitution sweep is exhaustive because every
/// point of the variety is a 0/1 string.
pub fn enumerate_variety(gens: &GeneratorSet, n: usize) -> Result<Vec<VarietyPoint>> {
    if n > MAX_VARIETY_VARS {
        return Err(Error::TooLarge {
            what: "variety sweep variable count",
            size: n,
            limit: MAX_VARIETY_VARS,
        });
    }
    let mut points = Vec::new();
    for bits in 0..1u64 << n {
        if gens.vanishes_at(bits) {
            points.push(VarietyPoint { bits, n });
        }
    }
    Ok(points)
}

/// The antichain attached to a variety point: elements set to 1 with every
/// strictly greater element set to 0.
pub fn bijection_f(p: &Poset, a: &VarietyPoint) -> Result<VertexSet> {
    if !jp_generators(p).vanishes_at(a.bits) {
        return Err(Error::NotInVariety);
    }
    let mut s = VertexSet::new(p.n());
    for i in 0..p.n() {
        if a.bits >> i & 1 == 0 {
            continue;
        }
        let maximal = p.up_set(i).iter().all(|j| j == i || a.bits >> j & 1 == 0);
        if maximal {
            s.insert(i);
        }
    }
    Ok(s)
}

/// The variety point attached to an antichain: the indicator of its
/// down-set.
pub fn bijection_g(p: &Poset, s: &VertexSet) -> Result<VarietyPoint> {
    if let Some((a, b)) = p.find_comparable_pair(s) {
        return Err(Error::NotAntichain { a: a + 1, b: b + 1 });
    }
    let mut bits = 0u64;
    for j in s.iter() {
        for i in p.down_set(j).iter() {
            bits |= 1 << i;
        }
    }
    Ok(VarietyPoint { bits, n: p.n() })
}

/// Variety-level surrogate for the ideal equality between the full and
/// cover presentations: the two varieties must coincide pointwise, and
/// every `x_i^2 - x_i` must vanish on the cover variety.
pub fn radical_membership_check(p: &Poset) -> Result<bool> {
    if p.n() > 12 {
        return Err(Error::TooLarge {
            what: "radical membership check size",
            size: p.n(),
            limit: 12,
        });
    }
    let full = enumerate_variety(&jp_generators(p), p.n())?;
    let cover = enumerate_variety(&jp_cover_generators(p), p.n())?;
    if full != cover {
        return Ok(false);
    }
    let squares: Vec<Binomial> = (0..p.n())
        .map(|i| Binomial::new(Monomial::variable_power(i, 2), Monomial::variable(i)))
        .collect();
    Ok(cover
        .iter()
        .all(|pt| squares.iter().all(|sq| sq.vanishes_at(pt.bits))))
}

// ---------------------------------------------------------------------------
// S-polynomial verification

/// Sparse integer polynomial, just enough arithmetic for S-polynomials of
/// monic binomials and top-reduction against them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct SparsePoly {
    terms: BTreeMap<Monomial, i64>,
}

impl SparsePoly {
    fn add_term(&mut self, m: Monomial, c: i64) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if c != 0 {
                    e.insert(c);
                }
            }
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// S-polynomial of two monic binomials: with L = lcm of the leads,
    /// (L/lead_p)*p - (L/lead_q)*q.
    fn s_polynomial(p: &Binomial, q: &Binomial) -> SparsePoly {
        let lcm = p.lead.lcm(&q.lead);
        let up = lcm.div_exact(&p.lead);
        let uq = lcm.div_exact(&q.lead);
        let mut s = SparsePoly::default();
        s.add_term(up.mul(&p.lead), 1);
        s.add_term(up.mul(&p.trail), -1);
        s.add_term(uq.mul(&q.lead), -1);
        s.add_term(uq.mul(&q.trail), 1);
        s
    }

    /// Normal form by repeated reduction against the basis. Each step
    /// replaces a term divisible by some basis lead with a term of degree
    /// one less, so the loop terminates. Basis leads are order-independent
    /// (degree 2 over degree 1), so no monomial order is needed.
    fn reduce(mut self, basis: &[Binomial]) -> SparsePoly {
        loop {
            // highest-degree reducible term first, deterministic
            let mut candidates: Vec<(Monomial, i64)> =
                self.terms.iter().map(|(m, &c)| (m.clone(), c)).collect();
            candidates.sort_by(|(a, _), (b, _)| {
                b.degree().cmp(&a.degree()).then_with(|| a.cmp(b))
            });
            let step = candidates.into_iter().find_map(|(m, c)| {
                basis
                    .iter()
                    .find(|b| b.lead.divides(&m))
                    .map(|b| (m.clone(), c, m.div_exact(&b.lead).mul(&b.trail)))
            });
            match step {
                None => return self,
                Some((m, c, replacement)) => {
                    self.add_term(m, -c);
                    self.add_term(replacement, c);
                }
            }
        }
    }
}

/// Outcome of checking the closed-form basis with Buchberger's criterion.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub pairs_checked: usize,
    /// Human-readable descriptions of S-polynomial pairs whose normal
    /// form did not vanish.
    pub failures: Vec<String>,
    pub reduced: bool,
    pub non_redundant: bool,
}

impl VerificationReport {
    pub fn is_success(&self) -> bool {
        self.failures.is_empty() && self.reduced && self.non_redundant
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pairs_checked": self.pairs_checked,
            "failures": self.failures,
            "reduced": self.reduced,
            "non_redundant": self.non_redundant,
            "success": self.is_success(),
        })
    }
}

/// Check that the closed-form basis really is a reduced Groebner basis:
/// every S-polynomial reduces to zero, no trailing term is divisible by a
/// leading term, and no leading term divides another.
pub fn verify_buchberger(p: &Poset) -> VerificationReport {
    let basis = groebner_basis(p).binomials;
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for (a, pa) in basis.iter().enumerate() {
        for pb in &basis[a + 1..] {
            pairs_checked += 1;
            let remainder = SparsePoly::s_polynomial(pa, pb).reduce(&basis);
            if !remainder.is_zero() {
                failures.push(format!("S({pa}, {pb}) has non-zero normal form"));
            }
        }
    }
    let reduced = basis
        .iter()
        .all(|b| !basis.iter().any(|other| other.lead.divides(&b.trail)));
    let non_redundant = basis
        .iter()
        .enumerate()
        .all(|(i, b)| {
            !basis
                .iter()
                .enumerate()
                .any(|(j, other)| i != j && other.lead.divides(&b.lead))
        });
    VerificationReport {
        pairs_checked,
        failures,
        reduced,
        non_redundant,
    }
}
