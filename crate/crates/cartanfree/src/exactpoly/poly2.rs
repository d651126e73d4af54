use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::poly1::{forward_owned_binop, var_power, write_term};
use super::{binomial, int_pow, scalar_from_bigint, Poly1, Scalar};

/// Sparse exact polynomial in two variables `t`, `s`, keyed by the
/// exponent pair `(t_exp, s_exp)`. No zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, Scalar::one())
    }

    pub fn s() -> Self {
        Self::monomial(0, 1, Scalar::one())
    }

    pub fn monomial(t_exp: u32, s_exp: u32, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((t_exp, s_exp), coeff);
        }
        Poly2 { terms }
    }

    pub fn from_coeffs<I: IntoIterator<Item = ((u32, u32), Scalar)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in iter {
            p.add_term(i, j, c);
        }
        p
    }

    /// Embeds a polynomial in `t`.
    pub fn embed_t(f: &Poly1) -> Self {
        Poly2 {
            terms: f.terms().map(|(e, c)| ((e, 0), c.clone())).collect(),
        }
    }

    /// Embeds a one-variable polynomial with its variable read as `s`.
    pub fn embed_s(f: &Poly1) -> Self {
        Poly2 {
            terms: f.terms().map(|(e, c)| ((0, e), c.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    pub fn deg_s(&self) -> Option<u32> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn coeff(&self, t_exp: u32, s_exp: u32) -> Scalar {
        self.terms
            .get(&(t_exp, s_exp))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Scalar)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn add_term(&mut self, t_exp: u32, s_exp: u32, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&(t_exp, s_exp)) {
            Some(slot) => {
                *slot = &*slot + &coeff;
                if slot.is_zero() {
                    self.terms.remove(&(t_exp, s_exp));
                }
            }
            None => {
                self.terms.insert((t_exp, s_exp), coeff);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// `f(t, s - m)`, exact; `deg_t` and `deg_s` are unchanged.
    pub fn shift_s(&self, m: i64) -> Self {
        if m == 0 {
            return self.clone();
        }
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            for k in 0..=*j {
                let w = binomial(*j, k) * int_pow(-m, j - k);
                out.add_term(*i, k, c * &scalar_from_bigint(w));
            }
        }
        out
    }

    /// Exact formal partial derivative in `t`.
    pub fn derivative_t(&self) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            if *i > 0 {
                out.add_term(i - 1, *j, c * &Scalar::from_integer((*i).into()));
            }
        }
        out
    }

    /// True when every term has `t`-exponent at least `i` (membership in
    /// `t^i * C[t, s]`).
    pub fn divisible_by_t_power(&self, i: u32) -> bool {
        self.terms.keys().all(|(e, _)| *e >= i)
    }

    /// Drops every term with `t`-exponent >= `i`: reduction modulo
    /// `t^i * C[t, s]`.
    pub fn reduce_mod_t_power(&self, i: u32) -> Self {
        Poly2 {
            terms: self
                .terms
                .iter()
                .filter(|((e, _), _)| *e < i)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `t^i` read as a polynomial in `s`.
    pub fn t_slice(&self, i: u32) -> Poly1 {
        Poly1::from_coeffs(
            self.terms
                .iter()
                .filter(|((e, _), _)| *e == i)
                .map(|((_, j), c)| (*j, c.clone())),
        )
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.terms.iter().rev() {
            let tp = var_power("t", *i);
            let sp = var_power("s", *j);
            let vars = match (tp.is_empty(), sp.is_empty()) {
                (true, true) => String::new(),
                (false, true) => tp,
                (true, false) => sp,
                (false, false) => format!("{tp}*{sp}"),
            };
            write_term(f, &mut first, c, &vars)?;
        }
        Ok(())
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.add_term(*i, *j, -c.clone());
        }
        out
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

forward_owned_binop!(Poly2, Add, add);
forward_owned_binop!(Poly2, Sub, sub);
forward_owned_binop!(Poly2, Mul, mul);
