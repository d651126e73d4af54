//! Exact scalar and polynomial arithmetic: the substrate every other
//! module computes in.
//!
//! Coefficients are arbitrary-precision rationals ([`Scalar`]); polynomials
//! are sparse exponent maps with no stored zero coefficients. Nothing in
//! this module ever rounds.

mod poly1;
mod poly2;
pub mod sample;

pub use poly1::Poly1;
pub use poly2::Poly2;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use once_cell::sync::Lazy;
use thiserror::Error;

/// Exact rational coefficient field. Canonical form (reduced, positive
/// denominator) is maintained by construction.
pub type Scalar = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("invalid scalar `{0}`: expected an integer or a p/q fraction")]
    ParseScalar(String),
    #[error("zero denominator in scalar `{0}`")]
    ZeroDenominator(String),
    #[error("lambda must be nonzero")]
    ZeroLambda,
}

/// The integer `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The exact fraction `p/q`.
///
/// Panics when `q == 0`; use [`parse_scalar`] for untrusted input.
pub fn frac(p: i64, q: i64) -> Scalar {
    assert!(q != 0, "zero denominator");
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` into a canonical scalar.
pub fn parse_scalar(text: &str) -> Result<Scalar, ExactError> {
    let text = text.trim();
    let bad = || ExactError::ParseScalar(text.to_string());
    match text.split_once('/') {
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Scalar::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(ExactError::ZeroDenominator(text.to_string()));
            }
            Ok(Scalar::new(p, q))
        }
    }
}

/// Renders a scalar as `"p"` or `"p/q"`.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// Exact integer power; negative exponents go through the reciprocal.
///
/// Panics on `0^e` with `e < 0`.
pub fn pow_i64(base: &Scalar, exp: i64) -> Scalar {
    if exp == 0 {
        return Scalar::one();
    }
    let e = exp.unsigned_abs() as u32;
    let p = Scalar::new(base.numer().pow(e), base.denom().pow(e));
    if exp > 0 {
        p
    } else {
        assert!(!base.is_zero(), "zero base with negative exponent");
        p.recip()
    }
}

const PASCAL_ROWS: usize = 65;

// C(n, k) for n < PASCAL_ROWS fits in i64 (C(64, 32) < 2^63).
static PASCAL: Lazy<Vec<Vec<i64>>> = Lazy::new(|| {
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(PASCAL_ROWS);
    for n in 0..PASCAL_ROWS {
        let mut row = vec![1i64; n + 1];
        for k in 1..n {
            row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
});

/// Binomial coefficient, exact for all sizes.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if (n as usize) < PASCAL_ROWS {
        return BigInt::from(PASCAL[n as usize][k as usize]);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// The quotient `(t^k - alpha^k) / (t - alpha)` as the explicit geometric
/// sum `sum_{j=0}^{k-1} alpha^j t^(k-1-j)`.
///
/// For `k = 0` the sum is empty and the result is zero, so the quotient is
/// always a genuine polynomial and no division occurs.
pub fn geometric_quotient(k: u32, alpha: &Scalar) -> Poly1 {
    let mut out = Poly1::zero();
    let mut alpha_pow = Scalar::one();
    for j in 0..k {
        out = &out + &Poly1::monomial(k - 1 - j, alpha_pow.clone());
        alpha_pow = &alpha_pow * alpha;
    }
    out
}

/// A parameter point: `lambda` (nonzero), `alpha`, `beta`, the xi
/// coefficient list, and the four central charge actions.
///
/// On every constructed module the central charges `c1..c3` are zero and
/// `c0` equals `beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSet {
    pub lambda: Scalar,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub xi: Vec<Scalar>,
    pub c: [Scalar; 4],
}

impl ParamSet {
    pub fn new(
        lambda: Scalar,
        alpha: Scalar,
        beta: Scalar,
        xi: Vec<Scalar>,
    ) -> Result<Self, ExactError> {
        if lambda.is_zero() {
            return Err(ExactError::ZeroLambda);
        }
        let c = [beta.clone(), Scalar::zero(), Scalar::zero(), Scalar::zero()];
        Ok(ParamSet { lambda, alpha, beta, xi, c })
    }

    /// `lambda^m`, exact.
    pub fn lambda_pow(&self, m: i64) -> Scalar {
        pow_i64(&self.lambda, m)
    }
}

/// Signed integer as `BigInt`, for structure-constant arithmetic.
pub fn bigint(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `sign * |base|^exp` for integer base, used in shift expansions.
pub(crate) fn int_pow(base: i64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

pub(crate) fn scalar_from_bigint(n: BigInt) -> Scalar {
    Scalar::from_integer(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-3", "3/4", "-7/2", "10/4"] {
            let x = parse_scalar(s).unwrap();
            let y = parse_scalar(&format_scalar(&x)).unwrap();
            assert_eq!(x, y);
        }
        assert_eq!(parse_scalar("10/4").unwrap(), frac(5, 2));
        assert_eq!(format_scalar(&frac(-6, 4)), "-3/2");
        assert_eq!(format_scalar(&int(7)), "7");
    }

    #[test]
    fn parse_rejects_garbage_and_zero_denominator() {
        assert!(matches!(parse_scalar("a/b"), Err(ExactError::ParseScalar(_))));
        assert!(matches!(parse_scalar(""), Err(ExactError::ParseScalar(_))));
        assert!(matches!(parse_scalar("1/0"), Err(ExactError::ZeroDenominator(_))));
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let x = frac(3, 2);
        assert_eq!(pow_i64(&x, 3), frac(27, 8));
        assert_eq!(pow_i64(&x, -2), frac(4, 9));
        assert_eq!(pow_i64(&x, 0), int(1));
        assert_eq!(pow_i64(&int(-1), 5), int(-1));
    }

    #[test]
    fn binomial_matches_pascal_recurrence() {
        assert_eq!(binomial(0, 0), bigint(1));
        assert_eq!(binomial(6, 2), bigint(15));
        assert_eq!(binomial(5, 9), bigint(0));
        // multiplicative fallback agrees with the table
        let big = binomial(70, 3);
        assert_eq!(big, bigint(70 * 69 * 68 / 6));
    }

    #[test]
    fn geometric_quotient_examples() {
        // k = 0: empty sum
        assert!(geometric_quotient(0, &int(4)).is_zero());
        // k = 3, alpha = 1 -> t^2 + t + 1
        let q = geometric_quotient(3, &int(1));
        assert_eq!(q, Poly1::from_coeffs([(2, int(1)), (1, int(1)), (0, int(1))]));
        // k = 2, alpha = 2 -> t + 2
        let q = geometric_quotient(2, &int(2));
        assert_eq!(q, Poly1::from_coeffs([(1, int(1)), (0, int(2))]));
    }

    #[test]
    fn geometric_quotient_clears_denominator() {
        // (t - alpha) * q_k = t^k - alpha^k for k <= 12 over sampled alpha
        for alpha in [int(0), int(1), int(-2), frac(1, 3), frac(-5, 7)] {
            for k in 0u32..=12 {
                let q = geometric_quotient(k, &alpha);
                let lin = Poly1::from_coeffs([(1, int(1)), (0, -alpha.clone())]);
                let lhs = &lin * &q;
                let rhs = &Poly1::monomial(k, int(1))
                    - &Poly1::constant(pow_i64(&alpha, k as i64));
                assert_eq!(lhs, rhs, "k={k} alpha={alpha}");
            }
        }
    }

    #[test]
    fn param_set_rejects_zero_lambda() {
        assert!(ParamSet::new(int(0), int(1), int(0), vec![]).is_err());
        let p = ParamSet::new(frac(3, 2), int(0), int(5), vec![]).unwrap();
        assert_eq!(p.c[0], int(5));
        assert_eq!(p.lambda_pow(-2), frac(4, 9));
    }
}
