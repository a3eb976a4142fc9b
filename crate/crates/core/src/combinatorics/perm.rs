//! Permutations of {1, ..., r} in one-line notation.
//!
//! Composition convention: `(x.compose(&y))(i) = x(y(i))`. Under this
//! convention, right multiplication by the simple transposition s_i swaps
//! *positions* i, i+1 of the one-line word, and left multiplication swaps the
//! *values* i, i+1.

use crate::error::{Error, Result};

/// A permutation of {1, ..., r} stored as its one-line word
/// (w(1), ..., w(r)).
///
/// The derived order is lexicographic on the one-line word, which is the
/// canonical order used everywhere (key order, enumeration order, JSON).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        assert!(r <= u8::MAX as usize, "rank too large for the compact encoding");
        Permutation {
            images: (1..=r as u8).collect(),
        }
    }

    /// The simple transposition s_i swapping i and i+1 (1 <= i <= r-1).
    pub fn transposition(r: usize, i: usize) -> Self {
        assert!((1..r).contains(&i), "simple transposition index out of range");
        let mut p = Permutation::identity(r);
        p.images.swap(i - 1, i);
        p
    }

    /// Builds from a 1-based one-line word, validating bijectivity.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let r = images.len();
        if r > u8::MAX as usize {
            return Err(Error::IndexOutOfRange(format!("rank {r} exceeds the supported maximum")));
        }
        let mut seen = vec![false; r];
        for &v in images {
            if v == 0 || v > r {
                return Err(Error::IndexOutOfRange(format!(
                    "one-line entry {v} outside 1..={r}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::IndexOutOfRange(format!("one-line entry {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| v as u8).collect(),
        })
    }

    /// Number of letters moved (the rank r).
    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// w(i) for 1-based i.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn one_line(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&v| v as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    /// (self o other)(i) = self(other(i)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "composed permutations must share a rank");
        Permutation {
            images: other.images.iter().map(|&v| self.images[v as usize - 1]).collect(),
        }
    }

    /// Coxeter length = number of inversions of the one-line word.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// True when i is a (right) descent: w(i) > w(i+1), equivalently
    /// length(w * s_i) < length(w).
    pub fn descent_at(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// w * s_i (swap positions i, i+1 of the one-line word).
    pub fn times_s(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// s_i * w (swap the values i, i+1 wherever they occur).
    pub fn s_times(&self, i: usize) -> Self {
        let mut p = self.clone();
        for v in &mut p.images {
            if *v as usize == i {
                *v = i as u8 + 1;
            } else if *v as usize == i + 1 {
                *v = i as u8;
            }
        }
        p
    }

    /// The deterministic reduced word (i_1, ..., i_k) with
    /// w = s_{i_1} o ... o s_{i_k} and k = length(w).
    ///
    /// Computed by exchange sort: repeatedly right-multiply by the simple
    /// transposition at the leftmost descent (each step shortens the word by
    /// one), then reverse the collected indices.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut stripped = Vec::with_capacity(w.length());
        loop {
            let Some(i) = (1..w.rank()).find(|&i| w.descent_at(i)) else { break };
            stripped.push(i);
            w = w.times_s(i);
        }
        stripped.reverse();
        stripped
    }

    /// Bruhat order comparison via the prefix criterion: x <= y iff for every
    /// prefix length, the ascending sort of x's prefix is entrywise <= the
    /// ascending sort of y's prefix.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        assert_eq!(self.rank(), other.rank(), "compared permutations must share a rank");
        let r = self.rank();
        let mut xs: Vec<u8> = Vec::with_capacity(r);
        let mut ys: Vec<u8> = Vec::with_capacity(r);
        for i in 0..r {
            let (x, y) = (self.images[i], other.images[i]);
            let px = xs.partition_point(|&v| v < x);
            xs.insert(px, x);
            let py = ys.partition_point(|&v| v < y);
            ys.insert(py, y);
            if xs.iter().zip(&ys).any(|(a, b)| a > b) {
                return false;
            }
        }
        true
    }

    /// All permutations of rank r in ascending lexicographic order of the
    /// one-line word.
    pub fn all(r: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Permutation::identity(r);
        loop {
            out.push(current.clone());
            if !next_lex(&mut current.images) {
                break;
            }
        }
        out
    }

    /// JSON: the 1-based one-line word as an array of integers.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.images
                .iter()
                .map(|&v| serde_json::Value::Number(v.into()))
                .collect(),
        )
    }
}

/// Advances to the next permutation in lexicographic order; false at the end.
fn next_lex(xs: &mut [u8]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_line_validation() {
        assert!(Permutation::from_one_line(&[2, 1, 3]).is_ok());
        assert!(Permutation::from_one_line(&[2, 2, 3]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[1, 4, 2]).is_err());
    }

    #[test]
    fn composition_convention() {
        // (x o y)(i) = x(y(i))
        let x = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        let y = Permutation::from_one_line(&[1, 3, 2]).unwrap();
        let xy = x.compose(&y);
        for i in 1..=3 {
            assert_eq!(xy.apply(i), x.apply(y.apply(i)));
        }
        // right multiplication by s_i swaps positions
        let s1 = Permutation::transposition(3, 1);
        assert_eq!(x.compose(&s1), x.times_s(1));
        // left multiplication by s_i swaps values
        assert_eq!(s1.compose(&x), x.s_times(1));
    }

    #[test]
    fn inverse_and_length() {
        let w = Permutation::from_one_line(&[3, 1, 2]).unwrap();
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(3));
        assert_eq!(w.inverse().compose(&w), Permutation::identity(3));
        assert_eq!(w.length(), 2);
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::from_one_line(&[4, 3, 2, 1]).unwrap().length(), 6);
    }

    #[test]
    fn reduced_words_multiply_back() {
        for w in Permutation::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length(), "word must be reduced");
            let mut acc = Permutation::identity(4);
            for &i in &word {
                acc = acc.compose(&Permutation::transposition(4, i));
            }
            assert_eq!(acc, w, "reduced word must multiply back to w");
        }
    }

    #[test]
    fn reduced_word_example() {
        let w = Permutation::from_one_line(&[3, 1, 2]).unwrap();
        assert_eq!(w.reduced_word(), vec![2, 1]);
    }

    #[test]
    fn bruhat_examples() {
        let a = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        let b = Permutation::from_one_line(&[3, 1, 2]).unwrap();
        let c = Permutation::from_one_line(&[3, 2, 1]).unwrap();
        assert!(a.bruhat_leq(&b));
        assert!(!c.bruhat_leq(&a));
        assert!(a.bruhat_leq(&a));
        assert!(Permutation::identity(3).bruhat_leq(&c));
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        // Independent characterization: x <= y iff some subword of y's
        // reduced word multiplies to x.
        for r in 2..=4 {
            let all = Permutation::all(r);
            for y in &all {
                let word = y.reduced_word();
                // collect all subword products
                let mut reachable = std::collections::BTreeSet::new();
                for mask in 0u32..(1 << word.len()) {
                    let mut acc = Permutation::identity(r);
                    for (t, &i) in word.iter().enumerate() {
                        if mask & (1 << t) != 0 {
                            acc = acc.compose(&Permutation::transposition(r, i));
                        }
                    }
                    reachable.insert(acc);
                }
                for x in &all {
                    assert_eq!(
                        x.bruhat_leq(y),
                        reachable.contains(x),
                        "bruhat_leq disagrees with the subword oracle for x={x}, y={y}"
                    );
                }
            }
        }
    }

    #[test]
    fn lex_enumeration() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Permutation::identity(3));
        let words: Vec<Vec<usize>> = all.iter().map(|w| w.one_line().collect()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted, "enumeration must be lexicographically sorted");
        assert_eq!(Permutation::all(1).len(), 1);
        assert_eq!(Permutation::all(5).len(), 120);
    }

    #[test]
    fn descents_track_length() {
        for w in Permutation::all(4) {
            for i in 1..4 {
                let shorter = w.times_s(i).length() < w.length();
                assert_eq!(w.descent_at(i), shorter);
            }
        }
    }
}
