use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::{binomial, int_pow, scalar_from_bigint, Scalar};

/// Sparse exact polynomial in one variable `t`.
///
/// No zero coefficients are stored. The zero polynomial has no degree:
/// `degree()` returns `None` rather than a sentinel integer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly1 {
    terms: BTreeMap<u32, Scalar>,
}

impl Poly1 {
    pub fn zero() -> Self {
        Poly1 { terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, Scalar::one())
    }

    pub fn monomial(exp: u32, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Poly1 { terms }
    }

    /// Accumulates `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_coeffs<I: IntoIterator<Item = (u32, Scalar)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    /// Coefficient of `t^exp` (zero when absent).
    pub fn coeff(&self, exp: u32) -> Scalar {
        self.terms.get(&exp).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn add_term(&mut self, exp: u32, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(slot) => {
                *slot = &*slot + &coeff;
                if slot.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly1 {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// `f(t - m)`, computed exactly by binomial expansion.
    pub fn shift(&self, m: i64) -> Self {
        if m == 0 {
            return self.clone();
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            // (t - m)^e = sum_j C(e, j) (-m)^(e-j) t^j
            for j in 0..=*e {
                let k = binomial(*e, j) * int_pow(-m, e - j);
                out.add_term(j, c * &scalar_from_bigint(k));
            }
        }
        out
    }

    /// Exact formal derivative in `t`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if *e > 0 {
                out.add_term(e - 1, c * &Scalar::from_integer((*e).into()));
            }
        }
        out
    }

    /// Horner evaluation at an exact point.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        match self.degree() {
            None => Scalar::zero(),
            Some(d) => {
                let mut acc = Scalar::zero();
                for e in (0..=d).rev() {
                    acc = &acc * x + &self.coeff(e);
                }
                acc
            }
        }
    }

    /// True when every stored exponent is at least `i` (membership in
    /// `t^i * C[t]`). The zero polynomial qualifies for every `i`.
    pub fn divisible_by_t_power(&self, i: u32) -> bool {
        self.terms.keys().all(|e| *e >= i)
    }

    fn fmt_with_var(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            write_term(f, &mut first, c, &var_power(var, *e))?;
        }
        Ok(())
    }
}

pub(crate) fn var_power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    c: &Scalar,
    vars: &str,
) -> fmt::Result {
    let neg = c.is_negative();
    let mag = c.abs();
    if *first {
        *first = false;
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if vars.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{vars}")
    } else {
        write!(f, "{mag}*{vars}")
    }
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with_var(f, "t")
    }
}

/// Adapter that renders a `Poly1` with a chosen variable name (quotient
/// checks print polynomials in `s`).
pub struct Poly1Display<'a> {
    poly: &'a Poly1,
    var: &'a str,
}

impl Poly1 {
    pub fn display_as<'a>(&'a self, var: &'a str) -> Poly1Display<'a> {
        Poly1Display { poly: self, var }
    }
}

impl fmt::Display for Poly1Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt_with_var(f, self.var)
    }
}

impl Add for &Poly1 {
    type Output = Poly1;
    fn add(self, rhs: &Poly1) -> Poly1 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly1 {
    type Output = Poly1;
    fn sub(self, rhs: &Poly1) -> Poly1 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &Poly1 {
    type Output = Poly1;
    fn mul(self, rhs: &Poly1) -> Poly1 {
        let mut out = Poly1::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly1 {
    type Output = Poly1;
    fn neg(self) -> Poly1 {
        Poly1 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $Op:ident, $op:ident) => {
        impl $Op for $ty {
            type Output = $ty;
            fn $op(self, rhs: $ty) -> $ty {
                (&self).$op(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(Poly1, Add, add);
forward_owned_binop!(Poly1, Sub, sub);
forward_owned_binop!(Poly1, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{frac, int};
    use proptest::prelude::*;

    fn p(coeffs: &[(u32, i64)]) -> Poly1 {
        Poly1::from_coeffs(coeffs.iter().map(|(e, c)| (*e, int(*c))))
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Poly1::zero().degree(), None);
        assert_eq!(p(&[(3, 1)]).degree(), Some(3));
        assert_eq!((&p(&[(2, 1)]) - &p(&[(2, 1)])).degree(), None);
    }

    #[test]
    fn shift_matches_hand_expansion() {
        // t^2 shifted by 1 -> t^2 - 2t + 1
        assert_eq!(p(&[(2, 1)]).shift(1), p(&[(2, 1), (1, -2), (0, 1)]));
        // identity shift
        let f = p(&[(4, 3), (1, -2), (0, 7)]);
        assert_eq!(f.shift(0), f);
        // t shifted by -2 -> t + 2
        assert_eq!(p(&[(1, 1)]).shift(-2), p(&[(1, 1), (0, 2)]));
    }

    // Independent oracle: f(t - m) by repeated multiplication with (t - m),
    // avoiding the binomial-table path used by `shift`.
    fn shift_by_products(f: &Poly1, m: i64) -> Poly1 {
        let lin = Poly1::from_coeffs([(1u32, int(1)), (0u32, int(-m))]);
        let mut out = Poly1::zero();
        for (e, c) in f.terms() {
            let mut pw = Poly1::one();
            for _ in 0..e {
                pw = &pw * &lin;
            }
            out = &out + &pw.scale(c);
        }
        out
    }

    #[test]
    fn derivative_and_eval_basics() {
        assert_eq!(p(&[(3, 1)]).derivative(), p(&[(2, 3)]));
        assert_eq!(p(&[(0, 5)]).derivative(), Poly1::zero());
        let f = p(&[(2, 1), (0, -4)]);
        assert_eq!(f.eval(&int(3)), int(5));
        assert_eq!(f.eval(&frac(1, 2)), frac(-15, 4));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[(2, 2), (1, -1), (0, 1)]).to_string(), "2*t^2 - t + 1");
        assert_eq!(Poly1::zero().to_string(), "0");
        assert_eq!(p(&[(1, -3)]).to_string(), "-3*t");
        assert_eq!(
            Poly1::monomial(1, frac(1, 2)).to_string(),
            "1/2*t"
        );
    }

    fn arb_poly() -> impl Strategy<Value = Poly1> {
        proptest::collection::vec((0u32..6, -9i64..=9), 0..5)
            .prop_map(|v| Poly1::from_coeffs(v.into_iter().map(|(e, c)| (e, int(c)))))
    }

    proptest! {
        #[test]
        fn shift_is_a_ring_map(f in arb_poly(), g in arb_poly(), m in -6i64..=6) {
            let fg = &f * &g;
            prop_assert_eq!(fg.shift(m), &f.shift(m) * &g.shift(m));
        }

        #[test]
        fn shift_composes_additively(f in arb_poly(), m in -6i64..=6, n in -6i64..=6) {
            prop_assert_eq!(f.shift(m).shift(n), f.shift(m + n));
        }

        #[test]
        fn shift_agrees_with_product_oracle(f in arb_poly(), m in -6i64..=6) {
            prop_assert_eq!(f.shift(m), shift_by_products(&f, m));
        }

        #[test]
        fn leibniz_rule(f in arb_poly(), g in arb_poly()) {
            let lhs = (&f * &g).derivative();
            let rhs = &(&f.derivative() * &g) + &(&f * &g.derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_commutes_and_associates(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        }
    }
}
