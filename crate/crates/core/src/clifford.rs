//! The Clifford superalgebra C_r on odd generators c_1, ..., c_r with
//! c_j^2 = -1 and c_i c_j = -c_j c_i (i != j), over any coefficient ring,
//! together with the distinguished q-weighted sums used by the symmetrizer
//! theory.
//!
//! A monomial is encoded as a bitmask: bit j-1 set means the generator c_j is
//! present, and the monomial is the product of the present generators in
//! ascending index order.

use std::collections::BTreeMap;

use crate::coeff::Ring;
use crate::combinatorics::{Composition, DecoratedMatrix, Permutation};
use crate::error::{Error, Result};

/// Normal-ordered product of two Clifford monomials.
///
/// Returns the sign (+1/-1) and the resulting monomial mask (the symmetric
/// difference). The sign counts the transpositions needed to merge the two
/// ascending words plus one factor -1 per squared generator.
pub fn mono_mul(alpha: u32, beta: u32) -> (i8, u32) {
    let mut crossings = 0u32;
    let mut b = beta;
    while b != 0 {
        let j = b.trailing_zeros();
        // generators of alpha with index strictly greater than j
        crossings += (alpha >> (j + 1)).count_ones();
        b &= b - 1;
    }
    let squares = (alpha & beta).count_ones();
    let sign = if (crossings + squares) % 2 == 0 { 1 } else { -1 };
    (sign, alpha ^ beta)
}

/// The action of a permutation on a Clifford monomial:
/// w . (c_{j_1} ... c_{j_m}) = c_{w(j_1)} ... c_{w(j_m)}, normal-ordered.
///
/// Returns the sign from reordering and the image mask
/// {w(j) : j in the support}.
pub fn perm_act(w: &Permutation, alpha: u32) -> (i8, u32) {
    // images of the support, in the order of the original ascending word
    let mut images = Vec::with_capacity(alpha.count_ones() as usize);
    let mut a = alpha;
    while a != 0 {
        let j = a.trailing_zeros() as usize + 1; // 1-based generator index
        images.push(w.apply(j));
        a &= a - 1;
    }
    let mut inversions = 0usize;
    for s in 0..images.len() {
        for t in s + 1..images.len() {
            if images[s] > images[t] {
                inversions += 1;
            }
        }
    }
    let mut mask = 0u32;
    for &im in &images {
        mask |= 1 << (im - 1);
    }
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    (sign, mask)
}

/// A finitely supported sum of Clifford monomials with ring coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement<R: Ring> {
    r: usize,
    terms: BTreeMap<u32, R>,
}

impl<R: Ring> CliffordElement<R> {
    pub fn zero(r: usize) -> Self {
        assert!(r <= 31, "rank too large for the bitmask encoding");
        CliffordElement { r, terms: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        CliffordElement::monomial(r, 0, R::one())
    }

    /// A single generator c_j (1-based).
    pub fn generator(r: usize, j: usize) -> Self {
        assert!((1..=r).contains(&j), "generator index out of range");
        CliffordElement::monomial(r, 1 << (j - 1), R::one())
    }

    pub fn monomial(r: usize, mask: u32, coeff: R) -> Self {
        assert!(r <= 31, "rank too large for the bitmask encoding");
        assert!(mask < (1u32 << r), "monomial mask outside rank");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mask, coeff);
        }
        CliffordElement { r, terms }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &R)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn coeff(&self, mask: u32) -> R {
        self.terms.get(&mask).cloned().unwrap_or_else(R::zero)
    }

    fn add_term(&mut self, mask: u32, coeff: &R) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(R::zero);
        *entry = entry.add(coeff);
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.r, rhs.r, "ranks must match");
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        CliffordElement {
            r: self.r,
            terms: self.terms.iter().map(|(&m, c)| (m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = CliffordElement::zero(self.r);
        for (&m, c) in &self.terms {
            out.add_term(m, &c.mul(s));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.r, rhs.r, "ranks must match");
        let mut out = CliffordElement::zero(self.r);
        for (&m1, c1) in &self.terms {
            for (&m2, c2) in &rhs.terms {
                let (sign, m) = mono_mul(m1, m2);
                let mut c = c1.mul(c2);
                if sign < 0 {
                    c = c.neg();
                }
                out.add_term(m, &c);
            }
        }
        out
    }

    /// JSON: list of {alpha, coeff} with alpha the 0/1 exponent array, in
    /// ascending lexicographic order of that array.
    pub fn to_json(&self) -> serde_json::Value {
        let mut keys: Vec<u32> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&m| bit_reversed(m, self.r));
        serde_json::Value::Array(
            keys.into_iter()
                .map(|m| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("alpha".to_string(), mask_json(m, self.r));
                    obj.insert("coeff".to_string(), self.terms[&m].to_json());
                    serde_json::Value::Object(obj)
                })
                .collect(),
        )
    }
}

/// Bit-reversal within r bits: numeric order of the result is lexicographic
/// order of the exponent array (alpha_1 first).
pub(crate) fn bit_reversed(mask: u32, r: usize) -> u32 {
    let mut out = 0u32;
    for j in 0..r {
        if mask & (1 << j) != 0 {
            out |= 1 << (r - 1 - j);
        }
    }
    out
}

pub(crate) fn mask_json(mask: u32, r: usize) -> serde_json::Value {
    serde_json::Value::Array(
        (0..r)
            .map(|j| serde_json::Value::Number((((mask >> j) & 1) as u64).into()))
            .collect(),
    )
}

/// c_{q,i,j} = q^{j-i} c_i + q^{j-i-1} c_{i+1} + ... + q c_{j-1} + c_j
/// (1 <= i <= j <= r).
pub fn c_q<R: Ring>(r: usize, i: usize, j: usize) -> CliffordElement<R> {
    assert!(1 <= i && i <= j && j <= r, "interval out of range");
    let mut out = CliffordElement::zero(r);
    for l in i..=j {
        out.add_term(1 << (l - 1), &R::q_pow(j - l));
    }
    out
}

/// c'_{q,i,j} = c_i + q c_{i+1} + ... + q^{j-i} c_j (1 <= i <= j <= r).
pub fn c_q_prime<R: Ring>(r: usize, i: usize, j: usize) -> CliffordElement<R> {
    assert!(1 <= i && i <= j && j <= r, "interval out of range");
    let mut out = CliffordElement::zero(r);
    for l in i..=j {
        out.add_term(1 << (l - 1), &R::q_pow(l - i));
    }
    out
}

/// The block-decorated Clifford element c^alpha_lambda: the product, over the
/// blocks k of lambda with alpha_k = 1, of c_{q, start_k, end_k} (ascending
/// block order). The primed variant uses c'_{q, start_k, end_k}.
///
/// Errors with `BadDecoration` when alpha decorates an empty block.
pub fn c_lambda_alpha<R: Ring>(
    lambda: &Composition,
    alpha: &[u8],
    primed: bool,
) -> Result<CliffordElement<R>> {
    assert_eq!(
        alpha.len(),
        lambda.num_parts(),
        "decoration length must match the number of parts"
    );
    let r = lambda.sum();
    let mut out = CliffordElement::one(r);
    for (k, &(start, end)) in lambda.block_ranges().iter().enumerate() {
        match alpha[k] {
            0 => {}
            1 => {
                if end < start {
                    return Err(Error::BadDecoration);
                }
                let factor = if primed {
                    c_q_prime::<R>(r, start, end)
                } else {
                    c_q::<R>(r, start, end)
                };
                out = out.mul(&factor);
            }
            _ => panic!("decoration bits must be 0 or 1"),
        }
    }
    Ok(out)
}

/// The decorated-matrix Clifford element c_{A|B} = c^{alpha_B}_{nu_{A|B}}
/// where nu is the column reading of A + B and alpha_B the column reading of
/// B. The primed variant replaces each factor by its primed form.
pub fn c_decorated<R: Ring>(dm: &DecoratedMatrix, primed: bool) -> CliffordElement<R> {
    c_lambda_alpha(&dm.nu(), &dm.alpha(), primed)
        .expect("a decoration bit forces a nonzero block in A + B")
}

impl<R: Ring> std::fmt::Display for CliffordElement<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<u32> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&m| bit_reversed(m, self.r));
        for (idx, m) in keys.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let c = &self.terms[m];
            if *m == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*")?;
                let mut first = true;
                for j in 0..self.r {
                    if m & (1 << j) != 0 {
                        if !first {
                            write!(f, "*")?;
                        }
                        write!(f, "c{}", j + 1)?;
                        first = false;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::PolyQ;

    /// Brute-force reordering oracle: concatenate the two ascending words,
    /// bubble-sort with a sign per swap, cancel equal adjacent pairs with
    /// c^2 = -1.
    fn brute_mono_mul(alpha: u32, beta: u32) -> (i8, u32) {
        let mut word: Vec<u32> = Vec::new();
        for m in [alpha, beta] {
            for j in 0..32 {
                if m & (1 << j) != 0 {
                    word.push(j);
                }
            }
        }
        let mut sign = 1i8;
        loop {
            let mut swapped = false;
            for t in 0..word.len().saturating_sub(1) {
                if word[t] > word[t + 1] {
                    word.swap(t, t + 1);
                    sign = -sign;
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        let mut mask = 0u32;
        let mut idx = 0;
        while idx < word.len() {
            if idx + 1 < word.len() && word[idx] == word[idx + 1] {
                sign = -sign;
                idx += 2;
            } else {
                mask |= 1 << word[idx];
                idx += 1;
            }
        }
        (sign, mask)
    }

    #[test]
    fn mono_mul_matches_reordering_oracle() {
        for alpha in 0u32..16 {
            for beta in 0u32..16 {
                assert_eq!(
                    mono_mul(alpha, beta),
                    brute_mono_mul(alpha, beta),
                    "disagreement at alpha={alpha:b}, beta={beta:b}"
                );
            }
        }
    }

    #[test]
    fn defining_relations() {
        let r = 3;
        for j in 1..=r {
            let cj = CliffordElement::<PolyQ>::generator(r, j);
            assert_eq!(cj.mul(&cj), CliffordElement::one(r).neg(), "c_{j}^2 = -1");
        }
        for i in 1..=r {
            for j in 1..=r {
                if i != j {
                    let ci = CliffordElement::<PolyQ>::generator(r, i);
                    let cj = CliffordElement::<PolyQ>::generator(r, j);
                    assert_eq!(ci.mul(&cj), cj.mul(&ci).neg(), "anticommutation {i},{j}");
                }
            }
        }
    }

    #[test]
    fn element_mul_is_associative() {
        // exhaustive over single monomials r = 3 with unit coefficients
        let r = 3;
        for a in 0u32..8 {
            for b in 0u32..8 {
                for c in 0u32..8 {
                    let ea = CliffordElement::<PolyQ>::monomial(r, a, PolyQ::one());
                    let eb = CliffordElement::<PolyQ>::monomial(r, b, PolyQ::one());
                    let ec = CliffordElement::<PolyQ>::monomial(r, c, PolyQ::one());
                    assert_eq!(ea.mul(&eb).mul(&ec), ea.mul(&eb.mul(&ec)));
                }
            }
        }
    }

    #[test]
    fn perm_act_example() {
        // s_1 . (c_1 c_2) = c_2 c_1 = -c_1 c_2
        let s1 = Permutation::transposition(2, 1);
        assert_eq!(perm_act(&s1, 0b11), (-1, 0b11));
        // s_1 . c_1 = c_2
        assert_eq!(perm_act(&s1, 0b01), (1, 0b10));
    }

    #[test]
    fn perm_act_is_a_group_action() {
        for w in Permutation::all(3) {
            for u in Permutation::all(3) {
                for alpha in 0u32..8 {
                    let (s1, m1) = perm_act(&u, alpha);
                    let (s2, m2) = perm_act(&w, m1);
                    let (s3, m3) = perm_act(&w.compose(&u), alpha);
                    assert_eq!((s1 * s2, m2), (s3, m3), "action must compose");
                }
            }
        }
    }

    #[test]
    fn perm_act_is_an_algebra_map() {
        // w . (x * y) = (w . x) * (w . y) on monomials
        for w in Permutation::all(3) {
            for a in 0u32..8 {
                for b in 0u32..8 {
                    let (sp, p) = mono_mul(a, b);
                    let (swp, wp) = perm_act(&w, p);
                    let (sa, wa) = perm_act(&w, a);
                    let (sb, wb) = perm_act(&w, b);
                    let (sm, wm) = mono_mul(wa, wb);
                    assert_eq!((sp * swp, wp), (sa * sb * sm, wm));
                }
            }
        }
    }

    #[test]
    fn weighted_sum_examples() {
        // c_{q,1,2} = q c_1 + c_2
        let e = c_q::<PolyQ>(2, 1, 2);
        assert_eq!(e.coeff(0b01), PolyQ::q());
        assert_eq!(e.coeff(0b10), PolyQ::one());
        // c'_{q,1,2} = c_1 + q c_2
        let e = c_q_prime::<PolyQ>(2, 1, 2);
        assert_eq!(e.coeff(0b01), PolyQ::one());
        assert_eq!(e.coeff(0b10), PolyQ::q());
        // singleton intervals are bare generators
        assert_eq!(c_q::<PolyQ>(3, 2, 2), CliffordElement::generator(3, 2));
    }

    #[test]
    fn block_decorated_elements() {
        // lambda = (2,1), alpha = (1,0): c_{q,1,2}
        let lam = Composition::new(vec![2, 1]);
        let e = c_lambda_alpha::<PolyQ>(&lam, &[1, 0], false).unwrap();
        assert_eq!(e, c_q::<PolyQ>(3, 1, 2));
        // alpha = (1,1): c_{q,1,2} * c_{q,3,3}
        let e = c_lambda_alpha::<PolyQ>(&lam, &[1, 1], false).unwrap();
        assert_eq!(e, c_q::<PolyQ>(3, 1, 2).mul(&c_q::<PolyQ>(3, 3, 3)));
        // decorating an empty block fails
        let lam = Composition::new(vec![1, 0, 1]);
        assert_eq!(
            c_lambda_alpha::<PolyQ>(&lam, &[0, 1, 0], false).unwrap_err(),
            Error::BadDecoration
        );
    }

    #[test]
    fn decorated_matrix_element() {
        // A = [[1,0],[0,0]], B = [[0,0],[0,1]]: nu = (1,0,0,1),
        // alpha = (0,0,0,1), so c_{A|B} = c_{q,2,2} = c_2
        let dm = DecoratedMatrix::new(vec![vec![1, 0], vec![0, 0]], vec![vec![0, 0], vec![0, 1]]);
        let e = c_decorated::<PolyQ>(&dm, false);
        assert_eq!(e, CliffordElement::generator(2, 2));
    }

    #[test]
    fn display_and_json() {
        // exponent arrays sort lexicographically: (0,1) precedes (1,0)
        let e = c_q::<PolyQ>(2, 1, 2);
        assert_eq!(e.to_string(), "(1)*c2 + (q)*c1");
        assert_eq!(
            e.to_json().to_string(),
            r#"[{"alpha":[0,1],"coeff":{"0":"1"}},{"alpha":[1,0],"coeff":{"1":"1"}}]"#
        );
    }
}
