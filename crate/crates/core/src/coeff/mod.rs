//! Exact coefficient arithmetic: integers, the polynomial ring Z[q], the
//! Laurent ring Z[v, v^-1] (with q = v^2), integer specializations, and
//! fraction-free linear algebra over any of these.
//!
//! Everything is exact: coefficients are arbitrary-precision integers, all
//! divisions are checked, and no floating point appears anywhere.

mod laurent;
mod matrix;
mod poly;
mod zq;

pub use laurent::LaurentV;
pub use matrix::{solve_in_span, PolyMatrix};
pub use poly::PolyQ;
pub use zq::IntAtQ;

/// Arbitrary-precision integer used for every coefficient in the crate.
pub type ExactInteger = num_bigint::BigInt;

/// Common interface of the coefficient rings.
///
/// All rings here are commutative with 1 and are integral domains, so exact
/// division is well defined where it succeeds. Each ring designates an image
/// of the distinguished parameter `q` (`v^2` in the Laurent ring, a fixed
/// integer in a specialization), which is what the algebra relations use.
pub trait Ring:
    Clone + PartialEq + Eq + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// Exact division: `Some(c)` with `self = rhs * c`, or `None` when `rhs`
    /// does not divide `self` (or `rhs` is zero).
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn from_int(n: i64) -> Self;

    /// The image of the parameter q in this ring.
    fn q() -> Self;

    /// The inverse of q, where it exists in the ring.
    fn q_inv() -> Option<Self>;

    /// JSON rendering of one coefficient (ring-specific shape).
    fn to_json(&self) -> serde_json::Value;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// q raised to a nonnegative power.
    fn q_pow(e: usize) -> Self {
        let q = Self::q();
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(&q);
        }
        acc
    }

    /// (-1)^e as a ring element.
    fn sign(e: usize) -> Self {
        if e % 2 == 0 {
            Self::one()
        } else {
            Self::one().neg()
        }
    }
}

/// Renders a map exponent -> coefficient as a JSON object with the exponents
/// as decimal-string keys in ascending numeric order (the map type preserves
/// insertion order).
pub(crate) fn exponent_map_json<'a, I>(terms: I) -> serde_json::Value
where
    I: Iterator<Item = (i64, &'a ExactInteger)>,
{
    let mut map = serde_json::Map::new();
    for (exp, coeff) in terms {
        map.insert(exp.to_string(), serde_json::Value::String(coeff.to_string()));
    }
    serde_json::Value::Object(map)
}
