//! Integer specializations of the coefficient rings: Z viewed as an algebra
//! over Z[q] via q -> Q for a fixed integer Q. Used by the base-change checks
//! that compare "multiply, then specialize" with "specialize, then multiply".

use std::fmt;

use num_traits::Zero;

use super::{ExactInteger, Ring};

/// An arbitrary-precision integer carrying the specialization q = Q at the
/// type level, so the algebra relations know which value q takes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntAtQ<const Q: i64>(pub ExactInteger);

impl<const Q: i64> IntAtQ<Q> {
    pub fn new(value: ExactInteger) -> Self {
        IntAtQ(value)
    }
}

impl<const Q: i64> Ring for IntAtQ<Q> {
    fn zero() -> Self {
        IntAtQ(ExactInteger::zero())
    }

    fn one() -> Self {
        IntAtQ(ExactInteger::from(1))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        IntAtQ(&self.0 + &rhs.0)
    }

    fn neg(&self) -> Self {
        IntAtQ(-&self.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        IntAtQ(&self.0 * &rhs.0)
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.0.is_zero() {
            return None;
        }
        if (&self.0 % &rhs.0).is_zero() {
            Some(IntAtQ(&self.0 / &rhs.0))
        } else {
            None
        }
    }

    fn from_int(n: i64) -> Self {
        IntAtQ(ExactInteger::from(n))
    }

    fn q() -> Self {
        IntAtQ(ExactInteger::from(Q))
    }

    fn q_inv() -> Option<Self> {
        // Only the units of Z invert q.
        match Q {
            1 => Some(IntAtQ(ExactInteger::from(1))),
            -1 => Some(IntAtQ(ExactInteger::from(-1))),
            _ => None,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.0.to_string())
    }
}

impl<const Q: i64> fmt::Display for IntAtQ<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_takes_the_declared_value() {
        assert_eq!(IntAtQ::<5>::q().0, ExactInteger::from(5));
        assert_eq!(IntAtQ::<1>::q_inv(), Some(IntAtQ::<1>::one()));
        assert_eq!(IntAtQ::<5>::q_inv(), None);
    }

    #[test]
    fn exact_division_checks_remainder() {
        let six = IntAtQ::<1>::from_int(6);
        let three = IntAtQ::<1>::from_int(3);
        let four = IntAtQ::<1>::from_int(4);
        assert_eq!(six.exact_div(&three), Some(IntAtQ::from_int(2)));
        assert_eq!(six.exact_div(&four), None);
        assert_eq!(six.exact_div(&IntAtQ::zero()), None);
    }
}
