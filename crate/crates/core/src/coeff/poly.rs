//! Sparse polynomials in q over arbitrary-precision integers.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{exponent_map_json, ExactInteger, Ring};
use crate::error::{Error, Result};

/// An element of Z[q], stored sparsely as exponent -> nonzero coefficient.
///
/// Canonical form: no zero coefficients are ever stored, so structural
/// equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    terms: BTreeMap<usize, ExactInteger>,
}

impl PolyQ {
    pub fn new() -> Self {
        PolyQ { terms: BTreeMap::new() }
    }

    /// c * q^exp.
    pub fn monomial(exp: usize, coeff: ExactInteger) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        PolyQ { terms }
    }

    /// Builds from (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (usize, i64)>>(iter: I) -> Self {
        let mut p = PolyQ::new();
        for (e, c) in iter {
            p.add_term(e, &ExactInteger::from(c));
        }
        p
    }

    fn add_term(&mut self, exp: usize, coeff: &ExactInteger) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(ExactInteger::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&ExactInteger> {
        self.terms.values().next_back()
    }

    /// Coefficient of q^exp (zero if absent).
    pub fn coeff(&self, exp: usize) -> ExactInteger {
        self.terms.get(&exp).cloned().unwrap_or_else(ExactInteger::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &ExactInteger)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Exact division returning an error when the division is not exact.
    pub fn div_exact(&self, rhs: &PolyQ) -> Result<PolyQ> {
        self.exact_div(rhs).ok_or(Error::NotDivisible)
    }

    /// Evaluates at an integer value of q.
    pub fn specialize(&self, q0: &ExactInteger) -> ExactInteger {
        // Horner over the sparse terms, highest exponent first.
        let mut acc = ExactInteger::zero();
        let mut last_exp: Option<usize> = None;
        for (&exp, coeff) in self.terms.iter().rev() {
            if let Some(prev) = last_exp {
                for _ in 0..(prev - exp) {
                    acc *= q0;
                }
            }
            acc += coeff;
            last_exp = Some(exp);
        }
        if let Some(e) = last_exp {
            for _ in 0..e {
                acc *= q0;
            }
        }
        acc
    }

    /// Image in Z[v, v^-1] under q -> v^2.
    pub fn to_laurent(&self) -> super::LaurentV {
        let mut out = super::LaurentV::new();
        for (&exp, coeff) in &self.terms {
            out = out.add(&super::LaurentV::monomial(2 * exp as i64, coeff.clone()));
        }
        out
    }
}

impl Ring for PolyQ {
    fn zero() -> Self {
        PolyQ::new()
    }

    fn one() -> Self {
        PolyQ::monomial(0, ExactInteger::from(1))
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
        PolyQ {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = PolyQ::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    /// Long division tracking exactness over Z: succeeds iff rhs divides self
    /// in Z[q] (leading-coefficient divisibility at every step and a zero
    /// final remainder).
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let rhs_deg = rhs.degree()?; // None for rhs = 0: not a valid divisor
        if self.is_zero() {
            return Some(PolyQ::new());
        }
        let rhs_lead = rhs.leading_coeff().expect("nonzero divisor has a leading term");
        let mut rem = self.clone();
        let mut quot = PolyQ::new();
        while let Some(deg) = rem.degree() {
            if deg < rhs_deg {
                return None;
            }
            let lead = rem.leading_coeff().expect("nonzero remainder has a leading term");
            if (lead % rhs_lead) != ExactInteger::zero() {
                return None;
            }
            let factor = PolyQ::monomial(deg - rhs_deg, lead / rhs_lead);
            rem = rem.sub(&factor.mul(rhs));
            quot = quot.add(&factor);
        }
        Some(quot)
    }

    fn from_int(n: i64) -> Self {
        PolyQ::monomial(0, ExactInteger::from(n))
    }

    fn q() -> Self {
        PolyQ::monomial(1, ExactInteger::from(1))
    }

    fn q_inv() -> Option<Self> {
        None
    }

    fn to_json(&self) -> serde_json::Value {
        exponent_map_json(self.terms.iter().map(|(&e, c)| (e as i64, c)))
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_exponent_terms(f, self.terms.iter().rev().map(|(&e, c)| (e as i64, c)), "q")
    }
}

/// Shared pretty-printer: terms arrive highest exponent first.
pub(crate) fn write_exponent_terms<'a, I>(
    f: &mut fmt::Formatter<'_>,
    terms: I,
    var: &str,
) -> fmt::Result
where
    I: Iterator<Item = (i64, &'a ExactInteger)>,
{
    let mut first = true;
    for (exp, coeff) in terms {
        let negative = coeff < &ExactInteger::zero();
        let abs = if negative { -coeff } else { coeff.clone() };
        if first {
            if negative {
                write!(f, "-")?;
            }
            first = false;
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let unit_coeff = abs == ExactInteger::from(1);
        if exp == 0 {
            write!(f, "{abs}")?;
        } else {
            if !unit_coeff {
                write!(f, "{abs}*")?;
            }
            if exp == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{exp}")?;
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> PolyQ {
        PolyQ::q()
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = q().sub(&q());
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(p, PolyQ::zero());
    }

    #[test]
    fn arithmetic_examples() {
        // (q - 1)(q + 1) = q^2 - 1
        let minus = q().sub(&PolyQ::one());
        let plus = q().add(&PolyQ::one());
        let prod = minus.mul(&plus);
        assert_eq!(prod, PolyQ::from_terms([(2, 1), (0, -1)]));
        assert_eq!(prod.degree(), Some(2));
    }

    #[test]
    fn exact_division_succeeds_and_fails() {
        let a = PolyQ::from_terms([(2, 1), (0, -1)]); // q^2 - 1
        let b = q().sub(&PolyQ::one());
        assert_eq!(a.exact_div(&b), Some(q().add(&PolyQ::one())));
        // q does not divide q + 1
        assert_eq!(q().add(&PolyQ::one()).exact_div(&q()), None);
        // 2 does not divide q + 1 (integer coefficient obstruction)
        assert_eq!(q().add(&PolyQ::one()).exact_div(&PolyQ::from_int(2)), None);
        // but 2 divides 2q + 4
        assert_eq!(
            PolyQ::from_terms([(1, 2), (0, 4)]).exact_div(&PolyQ::from_int(2)),
            Some(q().add(&PolyQ::from_int(2)))
        );
        assert_eq!(PolyQ::one().exact_div(&PolyQ::zero()), None);
        assert_eq!(
            PolyQ::from_terms([(1, 1), (0, 1)]).div_exact(&q()),
            Err(crate::error::Error::NotDivisible)
        );
    }

    #[test]
    fn specialization_is_evaluation() {
        let p = PolyQ::from_terms([(3, 2), (1, -1), (0, 5)]); // 2q^3 - q + 5
        let five = ExactInteger::from(5);
        assert_eq!(p.specialize(&five), ExactInteger::from(2 * 125 - 5 + 5));
        assert_eq!(p.specialize(&ExactInteger::from(0)), ExactInteger::from(5));
        assert_eq!(PolyQ::zero().specialize(&five), ExactInteger::zero());
    }

    #[test]
    fn display_format() {
        let p = PolyQ::from_terms([(2, 1), (1, -2), (0, 1)]);
        assert_eq!(p.to_string(), "q^2 - 2*q + 1");
        assert_eq!(PolyQ::zero().to_string(), "0");
        assert_eq!(PolyQ::from_int(-3).to_string(), "-3");
        assert_eq!(q().neg().to_string(), "-q");
    }

    #[test]
    fn json_shape() {
        let p = PolyQ::from_terms([(2, 1), (0, -1)]);
        assert_eq!(p.to_json().to_string(), r#"{"0":"-1","2":"1"}"#);
    }

    #[test]
    fn laurent_embedding_squares_exponents() {
        let p = PolyQ::from_terms([(1, 1), (0, -1)]); // q - 1
        let l = p.to_laurent();
        assert_eq!(l.to_string(), "v^2 - 1");
    }

    proptest::proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            // associativity and commutativity of both operations, distributivity
            proptest::prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            proptest::prop_assert_eq!(a.add(&b), b.add(&a));
            proptest::prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            proptest::prop_assert_eq!(a.mul(&b), b.mul(&a));
            proptest::prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            proptest::prop_assert_eq!(a.add(&a.neg()), PolyQ::zero());
            proptest::prop_assert_eq!(a.mul(&PolyQ::one()), a.clone());
            // exact division round-trip
            if !b.is_zero() {
                let prod = a.mul(&b);
                proptest::prop_assert_eq!(prod.exact_div(&b), Some(a.clone()));
            }
        }

        #[test]
        fn specialization_is_a_homomorphism(a in arb_poly(), b in arb_poly(), q0 in -6i64..7) {
            let q0 = ExactInteger::from(q0);
            proptest::prop_assert_eq!(a.mul(&b).specialize(&q0), a.specialize(&q0) * b.specialize(&q0));
            proptest::prop_assert_eq!(a.add(&b).specialize(&q0), a.specialize(&q0) + b.specialize(&q0));
        }
    }

    fn arb_poly() -> impl proptest::strategy::Strategy<Value = PolyQ> {
        proptest::collection::vec((0usize..6, -9i64..10), 0..5)
            .prop_map(PolyQ::from_terms)
    }

    use proptest::strategy::Strategy;
}
