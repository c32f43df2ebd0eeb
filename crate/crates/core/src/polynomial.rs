//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, and exact evaluation over rationals.
//!
//! These carry Hilbert numerators, Hilbert series of zero-dimensional
//! quotients, and independence/antichain polynomials. Coefficient counts
//! overflow machine words quickly (the antichain count of the rank-6
//! Boolean lattice is already 7,828,354 and grows super-exponentially),
//! so fixed-width arithmetic is never used.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// Exact rational number, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Parse `a` or `a/b` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse {
        line: 0,
        message: format!("invalid rational `{s}`"),
    };
    let mut parts = s.splitn(2, '/');
    let num: BigInt = parts.next().ok_or_else(err)?.trim().parse().map_err(|_| err())?;
    let den: BigInt = match parts.next() {
        Some(d) => d.trim().parse().map_err(|_| err())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Dense univariate integer polynomial in canonical form.
///
/// `coeffs[i]` is the coefficient of `z^i`. The zero polynomial is the
/// empty coefficient vector; otherwise the highest stored coefficient is
/// non-zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// Build from raw coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + z`, the base-case factor of the specialized Hilbert recursion.
    pub fn one_plus_z() -> Self {
        Polynomial::from_i64(&[1, 1])
    }

    /// `1 - z^d`.
    pub fn one_minus_z_pow(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::one();
        coeffs[d] = -BigInt::one();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has degree -1.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Multiply by `z^d`.
    pub fn shift(&self, d: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut result = Polynomial::one();
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    /// Exact quotient in `Z[z]`; a non-zero remainder (or a coefficient
    /// that fails to divide) signals an upstream algorithm bug.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        if divisor.is_zero() {
            return Err(Error::NonExactDivision);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(Error::NonExactDivision);
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - divisor.coeffs.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + divisor.coeffs.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return Err(Error::NonExactDivision);
            }
            let c = &top / lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(Polynomial::from_coeffs(quot))
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Substitute `z -> m*z`, i.e. multiply coefficient `k` by `m^k`.
    pub fn scale_argument(&self, m: &BigInt) -> Polynomial {
        let mut factor = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * &factor;
                factor *= m;
                v
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// Coefficients as decimal strings, exact over the wire.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl fmt::Display for Polynomial {
    /// `1 + 3*z + z^2` style, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "z")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_i64(coeffs)
    }

    #[test]
    fn add_cases() {
        // (1+2z) + (1-2z) = 2
        assert_eq!(p(&[1, 2]).add(&p(&[1, -2])), p(&[2]));
        // 0 + p = p
        assert_eq!(Polynomial::zero().add(&p(&[5, 7])), p(&[5, 7]));
        // (1+3z+z^2) + z^2 = 1+3z+2z^2, checked by schoolbook addition
        assert_eq!(p(&[1, 3, 1]).add(&p(&[0, 0, 1])), p(&[1, 3, 2]));
    }

    #[test]
    fn mul_cases() {
        assert_eq!(p(&[1, -1]).mul(&p(&[1, 1])), p(&[1, 0, -1]));
        assert_eq!(p(&[4, 5, 6]).mul(&Polynomial::one()), p(&[4, 5, 6]));
        // (1-z^2)^2 = 1-2z^2+z^4 by schoolbook convolution
        assert_eq!(p(&[1, 0, -1]).pow(2), p(&[1, 0, -2, 0, 1]));
    }

    #[test]
    fn shift_cases() {
        assert_eq!(p(&[1, 1]).shift(1), p(&[0, 1, 1]));
        assert_eq!(p(&[2, 3]).shift(0), p(&[2, 3]));
        assert_eq!(p(&[3]).shift(2), p(&[0, 0, 3]));
        assert_eq!(Polynomial::zero().shift(4), Polynomial::zero());
    }

    #[test]
    fn divide_exact_cases() {
        // (1-3z^2+2z^3) / (1-z)^2 = 1+2z; oracle: (1+2z)(1-2z+z^2)
        let q = p(&[1, -2, 1]);
        let expected = p(&[1, 2]);
        assert_eq!(expected.mul(&q), p(&[1, 0, -3, 2]));
        assert_eq!(p(&[1, 0, -3, 2]).divide_exact(&q).unwrap(), expected);
        assert_eq!(p(&[9, 8]).divide_exact(&Polynomial::one()).unwrap(), p(&[9, 8]));
        assert_eq!(p(&[1, 0, -1]).divide_exact(&p(&[1, 1])).unwrap(), p(&[1, -1]));
    }

    #[test]
    fn divide_non_exact_fails() {
        assert!(matches!(
            p(&[1, 1, 1]).divide_exact(&p(&[1, 1])),
            Err(Error::NonExactDivision)
        ));
        assert!(p(&[1]).divide_exact(&Polynomial::zero()).is_err());
    }

    #[test]
    fn eval_cases() {
        let one = Rational::from_integer(1.into());
        // 1+3z+z^2 at 1 counts the 5 independent sets of the 3-path
        assert_eq!(
            p(&[1, 3, 1]).eval_rational(&one),
            Rational::from_integer(5.into())
        );
        assert_eq!(
            p(&[7, 1, 2]).eval_rational(&Rational::zero()),
            Rational::from_integer(7.into())
        );
        // 1+3z at 1/2 = 5/2
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(p(&[1, 3]).eval_rational(&half), Rational::new(5.into(), 2.into()));
    }

    #[test]
    fn scale_argument_doubles() {
        // p(2z) for p = 1+z+z^2
        assert_eq!(p(&[1, 1, 1]).scale_argument(&BigInt::from(2)), p(&[1, 2, 4]));
    }

    #[test]
    fn degree_and_canonical_form() {
        assert_eq!(Polynomial::zero().degree(), -1);
        assert_eq!(Polynomial::from_coeffs(vec![BigInt::zero()]), Polynomial::zero());
        assert_eq!(p(&[1, 2, 0, 0]).degree(), 1);
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[1, 5]).to_string(), "1 + 5*z");
        assert_eq!(p(&[1, 3, 1]).to_string(), "1 + 3*z + z^2");
        assert_eq!(p(&[1, 0, -3, 2]).to_string(), "1 - 3*z^2 + 2*z^3");
        assert_eq!(p(&[0, -1]).to_string(), "-z");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap(), Rational::from_integer(3.into()));
        assert_eq!(parse_rational("-1/2").unwrap(), Rational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
