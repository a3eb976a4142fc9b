//! The Hecke-Clifford superalgebra H_r over a coefficient ring with a
//! distinguished parameter q.
//!
//! Generators: even T_1, ..., T_{r-1} and odd c_1, ..., c_r, subject to
//!
//! * (T_i - q)(T_i + 1) = 0,
//! * T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}, and T_i T_j = T_j T_i (|i-j| > 1),
//! * c_j^2 = -1, c_i c_j = -c_j c_i (i != j),
//! * T_i c_j = c_j T_i (j != i, i+1), T_i c_i = c_{i+1} T_i,
//!   T_i c_{i+1} = c_i T_i - (q-1)(c_i - c_{i+1}).
//!
//! Elements are stored in the normal form sum_{w, alpha} coeff * T_w c^alpha,
//! a free-module basis of rank 2^r * r!. Multiplication rewrites products
//! back into this basis exactly.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::clifford::{bit_reversed, mask_json, mono_mul, CliffordElement};
use crate::coeff::{PolyMatrix, Ring};
use crate::combinatorics::{min_coset_reps, Composition, Permutation};
use crate::error::{Error, Result};

/// A normal-form basis label T_w c^alpha.
///
/// Ordered by (one-line word of w lexicographically, then the exponent array
/// (alpha_1, ..., alpha_r) lexicographically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub w: Permutation,
    pub alpha: u32,
}

impl Term {
    pub fn new(w: Permutation, alpha: u32) -> Self {
        assert!(alpha < (1u32 << w.rank()), "exponent mask outside rank");
        Term { w, alpha }
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.w.cmp(&other.w).then_with(|| {
            let r = self.w.rank();
            bit_reversed(self.alpha, r).cmp(&bit_reversed(other.alpha, r))
        })
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent masks for rank r, in lexicographic order of the exponent
/// array (alpha_1 varies slowest).
pub fn masks_lex(r: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..(1u32 << r)).collect();
    masks.sort_by_key(|&m| bit_reversed(m, r));
    masks
}

/// The five standard (anti)automorphisms of H_r fixing the coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involution {
    /// Homomorphism: T_i -> -T_{r-i} + (q-1), c_j -> c_{r+1-j}.
    Phi,
    /// Homomorphism: T_i -> c_i T_i c_{i+1}, c_j -> c_j.
    Psi,
    /// Anti-homomorphism: T_i -> -T_i + (q-1), c_j -> c_j.
    Tau,
    /// Anti-homomorphism: T_i -> T_i - (q-1) c_i c_{i+1}, c_j -> c_j.
    Iota,
    /// Anti-homomorphism: T_i -> T_{r-i}, c_j -> c_{r+1-j}.
    Gamma,
}

impl Involution {
    pub const ALL: [Involution; 5] =
        [Involution::Phi, Involution::Psi, Involution::Tau, Involution::Iota, Involution::Gamma];

    pub fn is_anti(self) -> bool {
        matches!(self, Involution::Tau | Involution::Iota | Involution::Gamma)
    }

    pub fn name(self) -> &'static str {
        match self {
            Involution::Phi => "phi",
            Involution::Psi => "psi",
            Involution::Tau => "tau",
            Involution::Iota => "iota",
            Involution::Gamma => "gamma",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Involution::ALL.into_iter().find(|t| t.name() == name)
    }

    fn image_t<R: Ring>(self, r: usize, i: usize) -> HCElement<R> {
        let q_minus_1 = R::q().sub(&R::one());
        match self {
            Involution::Phi => HCElement::gen_t(r, r - i)
                .neg()
                .add(&HCElement::unit(r).scale(&q_minus_1)),
            Involution::Psi => HCElement::gen_c(r, i)
                .mul(&HCElement::gen_t(r, i))
                .mul(&HCElement::gen_c(r, i + 1)),
            Involution::Tau => {
                HCElement::gen_t(r, i).neg().add(&HCElement::unit(r).scale(&q_minus_1))
            }
            Involution::Iota => {
                let cc = HCElement::gen_c(r, i).mul(&HCElement::gen_c(r, i + 1));
                HCElement::gen_t(r, i).sub(&cc.scale(&q_minus_1))
            }
            Involution::Gamma => HCElement::gen_t(r, r - i),
        }
    }

    fn image_c<R: Ring>(self, r: usize, j: usize) -> HCElement<R> {
        match self {
            Involution::Phi | Involution::Gamma => HCElement::gen_c(r, r + 1 - j),
            _ => HCElement::gen_c(r, j),
        }
    }
}

/// An element of H_r in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HCElement<R: Ring> {
    r: usize,
    terms: BTreeMap<Term, R>,
}

impl<R: Ring> HCElement<R> {
    pub fn zero(r: usize) -> Self {
        assert!(r >= 1 && r <= 31, "rank out of supported range");
        HCElement { r, terms: BTreeMap::new() }
    }

    pub fn unit(r: usize) -> Self {
        HCElement::from_term(r, Permutation::identity(r), 0, R::one())
    }

    /// The generator T_i, 1 <= i <= r-1.
    pub fn gen_t(r: usize, i: usize) -> Self {
        assert!((1..r).contains(&i), "T generator index out of range");
        HCElement::from_term(r, Permutation::transposition(r, i), 0, R::one())
    }

    /// The generator c_j, 1 <= j <= r.
    pub fn gen_c(r: usize, j: usize) -> Self {
        assert!((1..=r).contains(&j), "c generator index out of range");
        HCElement::from_term(r, Permutation::identity(r), 1 << (j - 1), R::one())
    }

    /// The basis element T_w.
    pub fn from_perm(r: usize, w: &Permutation) -> Self {
        assert_eq!(w.rank(), r);
        HCElement::from_term(r, w.clone(), 0, R::one())
    }

    pub fn from_term(r: usize, w: Permutation, alpha: u32, coeff: R) -> Self {
        assert_eq!(w.rank(), r, "permutation rank must match");
        let mut out = HCElement::zero(r);
        out.add_term(w, alpha, &coeff);
        out
    }

    /// Embed a Clifford element as sum coeff * T_e c^alpha.
    pub fn from_clifford(ce: &CliffordElement<R>) -> Self {
        let r = ce.rank();
        let mut out = HCElement::zero(r);
        for (mask, coeff) in ce.terms() {
            out.add_term(Permutation::identity(r), mask, coeff);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation, alpha: u32) -> R {
        self.terms
            .get(&Term { w: w.clone(), alpha })
            .cloned()
            .unwrap_or_else(R::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Term> {
        self.terms.keys()
    }

    fn add_term(&mut self, w: Permutation, alpha: u32, coeff: &R) {
        if coeff.is_zero() {
            return;
        }
        let key = Term { w, alpha };
        let entry = self.terms.entry(key).or_insert_with(R::zero);
        *entry = entry.add(coeff);
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry just inserted");
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.r, rhs.r, "ranks must match");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.w.clone(), t.alpha, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        HCElement {
            r: self.r,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = HCElement::zero(self.r);
        for (t, c) in &self.terms {
            out.add_term(t.w.clone(), t.alpha, &c.mul(s));
        }
        out
    }

    fn add_scaled(&mut self, rhs: &Self, s: &R) {
        for (t, c) in &rhs.terms {
            self.add_term(t.w.clone(), t.alpha, &c.mul(s));
        }
    }

    /// Apply a coefficient map (e.g. specialization of q). Drops terms whose
    /// image is zero.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> HCElement<S> {
        let mut out = HCElement::zero(self.r);
        for (t, c) in &self.terms {
            out.add_term(t.w.clone(), t.alpha, &f(c));
        }
        out
    }

    /// Right multiplication by the generator T_i, term by term.
    ///
    /// For a term T_w c^alpha with a = alpha_i, b = alpha_{i+1}:
    /// c^alpha T_i = (-1)^{ab} T_i c^{alpha s_i}
    ///               + (q-1) X - (q-1)(-1)^{ab} c^{alpha s_i},
    /// where X = c^{alpha'} (the single odd bit moved to position i) when
    /// a + b = 1, X = -c^{alpha''} (both bits cleared) when a + b = 2, and
    /// the correction terms vanish when a = b = 0. The remaining T_w T_i is
    /// resolved by the length/quadratic rule.
    pub fn mul_gen_t_right(&self, i: usize) -> Self {
        assert!((1..self.r).contains(&i), "T generator index out of range");
        let q_minus_1 = R::q().sub(&R::one());
        let bit_lo = 1u32 << (i - 1); // position i
        let bit_hi = 1u32 << i; // position i+1
        let mut out = HCElement::zero(self.r);
        for (term, coeff) in &self.terms {
            let a = term.alpha & bit_lo != 0;
            let b = term.alpha & bit_hi != 0;
            if !a && !b {
                push_tw_ti(&mut out, &term.w, i, term.alpha, coeff);
                continue;
            }
            let swapped = {
                let rest = term.alpha & !(bit_lo | bit_hi);
                rest | if a { bit_hi } else { 0 } | if b { bit_lo } else { 0 }
            };
            let both = a && b;
            // main piece: (-1)^{ab} (T_w T_i) c^{alpha s_i}
            let main_coeff = if both { coeff.neg() } else { coeff.clone() };
            push_tw_ti(&mut out, &term.w, i, swapped, &main_coeff);
            // exchange piece: (q-1) X
            if both {
                // X = -c^{alpha with both bits cleared}
                let cleared = term.alpha & !(bit_lo | bit_hi);
                out.add_term(term.w.clone(), cleared, &coeff.mul(&q_minus_1).neg());
            } else {
                // X = c^{alpha with the odd bit moved to position i}
                let moved = (term.alpha & !(bit_lo | bit_hi)) | bit_lo;
                out.add_term(term.w.clone(), moved, &coeff.mul(&q_minus_1));
            }
            // correction piece: -(q-1) (-1)^{ab} c^{alpha s_i}
            let corr = if both {
                coeff.mul(&q_minus_1)
            } else {
                coeff.mul(&q_minus_1).neg()
            };
            out.add_term(term.w.clone(), swapped, &corr);
        }
        out
    }

    /// Right multiplication by the Clifford monomial c^beta.
    pub fn mul_mono_right(&self, beta: u32) -> Self {
        assert!(beta < (1u32 << self.r), "exponent mask outside rank");
        let mut out = HCElement::zero(self.r);
        for (term, coeff) in &self.terms {
            let (sign, merged) = mono_mul(term.alpha, beta);
            let c = if sign < 0 { coeff.neg() } else { coeff.clone() };
            out.add_term(term.w.clone(), merged, &c);
        }
        out
    }

    /// Right multiplication by a Clifford element.
    pub fn mul_clifford_right(&self, ce: &CliffordElement<R>) -> Self {
        assert_eq!(self.r, ce.rank(), "ranks must match");
        let mut out = HCElement::zero(self.r);
        for (beta, c) in ce.terms() {
            out.add_scaled(&self.mul_mono_right(beta), c);
        }
        out
    }

    /// Right multiplication by T_u (u an arbitrary permutation), by folding
    /// a reduced word of u.
    pub fn mul_perm_right(&self, u: &Permutation) -> Self {
        assert_eq!(self.r, u.rank(), "ranks must match");
        let mut z = self.clone();
        for i in u.reduced_word() {
            z = z.mul_gen_t_right(i);
        }
        z
    }

    /// The product in H_r.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.r, rhs.r, "ranks must match");
        let mut acc = HCElement::zero(self.r);
        for (term, coeff) in &rhs.terms {
            let z = self.mul_perm_right(&term.w).mul_mono_right(term.alpha);
            acc.add_scaled(&z, coeff);
        }
        acc
    }

    /// Apply one of the five standard (anti)automorphisms.
    pub fn involution(&self, tag: Involution) -> Self {
        let r = self.r;
        let images_t: Vec<HCElement<R>> = (1..r).map(|i| tag.image_t(r, i)).collect();
        let images_c: Vec<HCElement<R>> = (1..=r).map(|j| tag.image_c(r, j)).collect();
        let mut acc = HCElement::zero(r);
        for (term, coeff) in &self.terms {
            let mut factors: Vec<&HCElement<R>> = term
                .w
                .reduced_word()
                .into_iter()
                .map(|i| &images_t[i - 1])
                .collect();
            for j in 0..r {
                if term.alpha & (1 << j) != 0 {
                    factors.push(&images_c[j]);
                }
            }
            if tag.is_anti() {
                factors.reverse();
            }
            let mut z = HCElement::unit(r);
            for f in factors {
                z = z.mul(f);
            }
            acc.add_scaled(&z, coeff);
        }
        acc
    }

    /// JSON: list of {perm, alpha, coeff} in (perm lex, exponent-array lex)
    /// order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(t, c)| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("perm".to_string(), t.w.to_json());
                    obj.insert("alpha".to_string(), mask_json(t.alpha, self.r));
                    obj.insert("coeff".to_string(), c.to_json());
                    serde_json::Value::Object(obj)
                })
                .collect(),
        )
    }
}

fn push_tw_ti<R: Ring>(out: &mut HCElement<R>, w: &Permutation, i: usize, alpha: u32, coeff: &R) {
    let ws = w.times_s(i);
    if !w.descent_at(i) {
        out.add_term(ws, alpha, coeff);
    } else {
        let q = R::q();
        out.add_term(w.clone(), alpha, &coeff.mul(&q.sub(&R::one())));
        out.add_term(ws, alpha, &coeff.mul(&q));
    }
}

/// The q-symmetrizer x_lambda = sum_{w in S_lambda} T_w.
pub fn x_lambda<R: Ring>(lambda: &Composition) -> HCElement<R> {
    let r = lambda.sum();
    let mut out = HCElement::zero(r);
    for w in lambda.young_subgroup() {
        out.add_term(w, 0, &R::one());
    }
    out
}

/// The q-antisymmetrizer y_lambda = sum_{w in S_lambda} (-1/q)^{l(w)} T_w.
///
/// Requires q to be invertible in the coefficient ring.
pub fn y_lambda<R: Ring>(lambda: &Composition) -> Result<HCElement<R>> {
    let q_inv = R::q_inv().ok_or(Error::RingNotInvertible)?;
    let r = lambda.sum();
    let mut out = HCElement::zero(r);
    for w in lambda.young_subgroup() {
        let len = w.length();
        let mut c = R::one();
        for _ in 0..len {
            c = c.mul(&q_inv).neg();
        }
        out.add_term(w, 0, &c);
    }
    Ok(out)
}

/// Membership in x_lambda H_r: T_k h = q h for every simple generator
/// s_k of the Young subgroup S_lambda.
pub fn is_in_x_h<R: Ring>(h: &HCElement<R>, lambda: &Composition) -> bool {
    let r = h.rank();
    assert_eq!(lambda.sum(), r, "composition size must match rank");
    lambda
        .simple_generators()
        .into_iter()
        .all(|k| HCElement::gen_t(r, k).mul(h) == h.scale(&R::q()))
}

/// Membership in H_r x_mu: h T_k = q h for every simple generator of S_mu.
pub fn is_in_h_x<R: Ring>(h: &HCElement<R>, mu: &Composition) -> bool {
    let r = h.rank();
    assert_eq!(mu.sum(), r, "composition size must match rank");
    mu.simple_generators()
        .into_iter()
        .all(|k| h.mul_gen_t_right(k) == h.scale(&R::q()))
}

/// Membership in y_lambda H_r: T_k h = -h for every simple generator of
/// S_lambda.
pub fn is_in_y_h<R: Ring>(h: &HCElement<R>, lambda: &Composition) -> bool {
    let r = h.rank();
    assert_eq!(lambda.sum(), r, "composition size must match rank");
    lambda
        .simple_generators()
        .into_iter()
        .all(|k| HCElement::gen_t(r, k).mul(h) == h.neg())
}

/// Membership in H_r y_mu: h T_k = -h for every simple generator of S_mu.
pub fn is_in_h_y<R: Ring>(h: &HCElement<R>, mu: &Composition) -> bool {
    let r = h.rank();
    assert_eq!(mu.sum(), r, "composition size must match rank");
    mu.simple_generators()
        .into_iter()
        .all(|k| h.mul_gen_t_right(k) == h.neg())
}

/// The free basis {x_lambda T_d c^alpha} of x_lambda H_r, enumerated with d
/// running over the minimal coset representatives in lexicographic order and
/// alpha over exponent arrays in lexicographic order.
///
/// Distinct (d, alpha) give terms with pairwise disjoint supports, so
/// coordinates in this basis can be read off directly.
pub fn basis_of_x_h<R: Ring>(
    lambda: &Composition,
) -> Vec<(Permutation, u32, HCElement<R>)> {
    let r = lambda.sum();
    let x = x_lambda::<R>(lambda);
    let masks = masks_lex(r);
    let mut out = Vec::new();
    for d in min_coset_reps(lambda) {
        let xd = x.mul_perm_right(&d);
        for &mask in &masks {
            out.push((d.clone(), mask, xd.mul_mono_right(mask)));
        }
    }
    out
}

/// Coordinate matrix of a family of elements: rows are indexed by the sorted
/// union of their supports (returned alongside), columns by the elements.
pub fn coordinate_matrix<R: Ring>(elements: &[HCElement<R>]) -> (Vec<Term>, PolyMatrix<R>) {
    let mut keys: BTreeSet<Term> = BTreeSet::new();
    for e in elements {
        keys.extend(e.support().cloned());
    }
    let keys: Vec<Term> = keys.into_iter().collect();
    let index: BTreeMap<&Term, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = PolyMatrix::zero(keys.len(), elements.len());
    for (col, e) in elements.iter().enumerate() {
        for (t, c) in e.terms() {
            m.set(index[t], col, c.clone());
        }
    }
    (keys, m)
}

impl<R: Ring> std::fmt::Display for HCElement<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (t, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if !t.w.is_identity() {
                write!(f, "*T[")?;
                for (k, im) in t.w.one_line().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{im}")?;
                }
                write!(f, "]")?;
            }
            for j in 0..self.r {
                if t.alpha & (1 << j) != 0 {
                    write!(f, "*c{}", j + 1)?;
                }
            }
        }
        Ok(())
    }
}
