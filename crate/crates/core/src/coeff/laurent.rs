//! Sparse Laurent polynomials in v over arbitrary-precision integers,
//! with the distinguished parameter q = v^2.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::poly::write_exponent_terms;
use super::{exponent_map_json, ExactInteger, Ring};

/// An element of Z[v, v^-1], stored sparsely as exponent -> nonzero coefficient.
///
/// Canonical form: no zero coefficients are ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentV {
    terms: BTreeMap<i64, ExactInteger>,
}

impl LaurentV {
    pub fn new() -> Self {
        LaurentV { terms: BTreeMap::new() }
    }

    /// c * v^exp (exp may be negative).
    pub fn monomial(exp: i64, coeff: ExactInteger) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentV { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        let mut p = LaurentV::new();
        for (e, c) in iter {
            p.add_term(e, &ExactInteger::from(c));
        }
        p
    }

    /// v^exp.
    pub fn v_pow(exp: i64) -> Self {
        LaurentV::monomial(exp, ExactInteger::from(1))
    }

    fn add_term(&mut self, exp: i64, coeff: &ExactInteger) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(ExactInteger::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &ExactInteger)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Multiplies by the unit v^shift.
    pub fn shifted(&self, shift: i64) -> LaurentV {
        LaurentV {
            terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Evaluates at an integer value of v; `None` if a negative exponent is
    /// present (the value would not be an integer).
    pub fn eval_nonneg(&self, v0: &ExactInteger) -> Option<ExactInteger> {
        if self.min_exp().is_some_and(|m| m < 0) {
            return None;
        }
        let mut acc = ExactInteger::zero();
        let mut last_exp: Option<i64> = None;
        for (&exp, coeff) in self.terms.iter().rev() {
            if let Some(prev) = last_exp {
                for _ in 0..(prev - exp) {
                    acc *= v0;
                }
            }
            acc += coeff;
            last_exp = Some(exp);
        }
        if let Some(e) = last_exp {
            for _ in 0..e {
                acc *= v0;
            }
        }
        Some(acc)
    }
}

impl Ring for LaurentV {
    fn zero() -> Self {
        LaurentV::new()
    }

    fn one() -> Self {
        LaurentV::monomial(0, ExactInteger::from(1))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }

    fn neg(&self) -> Self {
        LaurentV {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = LaurentV::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    /// Exact division in the Laurent ring: powers of v are units, so after
    /// shifting both operands to lowest exponent zero this is exact division
    /// in Z[v].
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let rhs_min = rhs.min_exp()?; // None for rhs = 0: not a valid divisor
        if self.is_zero() {
            return Some(LaurentV::new());
        }
        let self_min = self.min_exp().expect("nonzero element has a minimum exponent");
        let a = poly_part(&self.shifted(-self_min));
        let b = poly_part(&rhs.shifted(-rhs_min));
        let q = a.exact_div(&b)?;
        let mut out = LaurentV::new();
        for (e, c) in q.terms() {
            out.add_term(e as i64 + self_min - rhs_min, c);
        }
        Some(out)
    }

    fn from_int(n: i64) -> Self {
        LaurentV::monomial(0, ExactInteger::from(n))
    }

    /// q = v^2.
    fn q() -> Self {
        LaurentV::v_pow(2)
    }

    fn q_inv() -> Option<Self> {
        Some(LaurentV::v_pow(-2))
    }

    fn to_json(&self) -> serde_json::Value {
        exponent_map_json(self.terms.iter().map(|(&e, c)| (e, c)))
    }
}

/// Reinterprets a Laurent element with nonnegative exponents as a PolyQ-shaped
/// sparse polynomial in the same variable (used only for exact division).
fn poly_part(l: &LaurentV) -> super::PolyQ {
    debug_assert!(l.min_exp().is_none_or(|m| m >= 0));
    let mut p = super::PolyQ::new();
    for (e, c) in l.terms() {
        p = p.add(&super::PolyQ::monomial(e as usize, c.clone()));
    }
    p
}

impl fmt::Display for LaurentV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_exponent_terms(f, self.terms.iter().rev().map(|(&e, c)| (e, c)), "v")
    }
}
