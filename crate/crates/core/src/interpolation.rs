//! Exact recovery of all antichain polynomial coefficients from the
//! evaluations A(P, m*t) for m = 1..n+1, by solving the resulting
//! Vandermonde system with fraction-free integer elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hilbert::{antichain_polynomial_fast, HilbertOptions};
use crate::polynomial::{Polynomial, Rational};
use crate::poset::{chain, Poset};

/// How the right-hand side evaluations are produced.
///
/// The lex-product route substitutes an m-chain into every element of the
/// poset and evaluates that antichain polynomial at t; the direct route
/// evaluates A(P) at m*t. The two agree exactly, and `Both` computes both
/// and errors on any mismatch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvaluationRoute {
    LexProduct,
    Direct,
    Both,
}

impl EvaluationRoute {
    pub fn name(self) -> &'static str {
        match self {
            EvaluationRoute::LexProduct => "lex-product",
            EvaluationRoute::Direct => "direct",
            EvaluationRoute::Both => "both",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "lex-product" => Some(EvaluationRoute::LexProduct),
            "direct" => Some(EvaluationRoute::Direct),
            "both" => Some(EvaluationRoute::Both),
            _ => None,
        }
    }
}

/// The (n+1)x(n+1) linear system: row m-1 (for m = 1..n+1) has entries
/// (m*t)^k for k = 0..n and right-hand side A(P, m*t). The nodes m*t are
/// pairwise distinct for t != 0, so the matrix is invertible.
#[derive(Clone, Debug)]
pub struct VandermondeSystem {
    t: Rational,
    size: usize,
    matrix: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl VandermondeSystem {
    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "t": self.t.to_string(),
            "size": self.size,
            "matrix": self
                .matrix
                .iter()
                .map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "rhs": self.rhs.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Result of a coefficient recovery: the solved system and the
/// reconstructed polynomial.
#[derive(Clone, Debug)]
pub struct Recovery {
    pub system: VandermondeSystem,
    pub polynomial: Polynomial,
}

impl Recovery {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "system": self.system.to_json(),
            "coefficients": self.polynomial.coeff_strings(),
            "polynomial": self.polynomial.to_string(),
        })
    }
}

fn rhs_evaluation(
    p: &Poset,
    base: &Polynomial,
    m: usize,
    t: &Rational,
    route: EvaluationRoute,
    options: HilbertOptions,
) -> Result<Rational> {
    let direct = || -> Result<Rational> {
        let node = Rational::from(BigInt::from(m)) * t;
        Ok(base.eval_rational(&node))
    };
    let lex = || -> Result<Rational> {
        let product = p.lex_product(&chain(m)?);
        Ok(antichain_polynomial_fast(&product, options)?.eval_rational(t))
    };
    match route {
        EvaluationRoute::Direct => direct(),
        EvaluationRoute::LexProduct => lex(),
        EvaluationRoute::Both => {
            let d = direct()?;
            let l = lex()?;
            if d != l {
                return Err(Error::Inconsistent(format!(
                    "evaluation routes disagree at m={}: direct {} vs lex-product {}",
                    m, d, l
                )));
            }
            Ok(d)
        }
    }
}

/// Solve an integer linear system by fraction-free (Bareiss) elimination
/// followed by rational back-substitution. `rows` holds the matrix with
/// the right-hand side appended as a final column.
fn solve_integer_system(mut rows: Vec<Vec<BigInt>>) -> Result<Vec<Rational>> {
    let n = rows.len();
    let mut prev_pivot = BigInt::one();
    for k in 0..n {
        if rows[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !rows[r][k].is_zero());
            match swap {
                Some(r) => rows.swap(k, r),
                None => return Err(Error::SingularSystem),
            }
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let num = &rows[k][k] * &rows[i][j] - &rows[i][k] * &rows[k][j];
                debug_assert!((&num % &prev_pivot).is_zero());
                rows[i][j] = num / &prev_pivot;
            }
            rows[i][k] = BigInt::zero();
        }
        prev_pivot = rows[k][k].clone();
    }
    let mut solution = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from(rows[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from(rows[i][j].clone()) * &solution[j];
        }
        solution[i] = acc / Rational::from(rows[i][i].clone());
    }
    Ok(solution)
}

/// Recover the coefficients of the antichain polynomial of `p` from its
/// values at the n+1 nodes m*t, m = 1..n+1. The recovered polynomial must
/// have integer coefficients; a fractional component signals a bug and is
/// reported as an internal inconsistency.
pub fn recover_coefficients(
    p: &Poset,
    t: &Rational,
    route: EvaluationRoute,
    options: HilbertOptions,
) -> Result<Recovery> {
    if t.is_zero() {
        return Err(Error::SingularSystem);
    }
    let n = p.n();
    let size = n + 1;
    let base = antichain_polynomial_fast(p, options)?;

    let mut matrix = Vec::with_capacity(size);
    let mut rhs = Vec::with_capacity(size);
    for m in 1..=size {
        let node = Rational::from(BigInt::from(m)) * t;
        let mut row = Vec::with_capacity(size);
        let mut power = Rational::one();
        for _ in 0..size {
            row.push(power.clone());
            power *= &node;
        }
        matrix.push(row);
        rhs.push(rhs_evaluation(p, &base, m, t, route, options)?);
    }

    // Clear denominators row by row so the elimination stays in integers.
    let mut int_rows = Vec::with_capacity(size);
    for (row, b) in matrix.iter().zip(&rhs) {
        let mut scale = BigInt::one();
        for e in row.iter().chain(std::iter::once(b)) {
            scale = num_integer::lcm(scale, e.denom().clone());
        }
        let scale = Rational::from(scale);
        let mut int_row: Vec<BigInt> = row.iter().map(|e| (e * &scale).to_integer()).collect();
        int_row.push((b * &scale).to_integer());
        int_rows.push(int_row);
    }

    let solution = solve_integer_system(int_rows)?;
    let mut coeffs = Vec::with_capacity(size);
    for (k, c) in solution.iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::Inconsistent(format!(
                "recovered coefficient of x^{} is not an integer: {}",
                k, c
            )));
        }
        coeffs.push(c.to_integer());
    }
    Ok(Recovery {
        system: VandermondeSystem { t: t.clone(), size, matrix, rhs },
        polynomial: Polynomial::from_coeffs(coeffs),
    })
}

/// Check that substituting an m-chain into every element of `p` evaluates,
/// at t, to the same number as A(P) at m*t. An m-chain has antichain
/// polynomial 1 + m*z, so composition gives exactly the argument scaling.
pub fn brown_identity_check(
    p: &Poset,
    m: usize,
    t: &Rational,
    options: HilbertOptions,
) -> Result<bool> {
    let product = p.lex_product(&chain(m)?);
    let left = antichain_polynomial_fast(&product, options)?.eval_rational(t);
    let node = Rational::from(BigInt::from(m)) * t;
    let right = antichain_polynomial_fast(p, options)?.eval_rational(&node);
    Ok(left == right)
}
