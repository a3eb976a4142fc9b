//! Compositions of r (ordered tuples of nonnegative parts) and their Young
//! subgroups.

use super::perm::Permutation;

/// A composition of some r: an ordered tuple of nonnegative parts. Parts may
/// be zero; the number of parts is meaningful.
///
/// The k-th block (1-based) is the interval of letters
/// {tilde(k-1)+1, ..., tilde(k)} where tilde is the prefix-sum; blocks of
/// zero parts are empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Prefix sum tilde(k) = parts[0] + ... + parts[k-1]; tilde(0) = 0.
    pub fn tilde(&self, k: usize) -> usize {
        self.parts[..k].iter().sum()
    }

    /// 1-based inclusive letter ranges of the blocks; empty blocks give
    /// (start, start-1).
    pub fn block_ranges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.parts.len());
        let mut start = 1;
        for &p in &self.parts {
            out.push((start, start + p - 1));
            start += p;
        }
        out
    }

    /// The block index (1-based) containing letter a (1-based); panics if a
    /// exceeds the sum.
    pub fn block_of(&self, a: usize) -> usize {
        let mut acc = 0;
        for (k, &p) in self.parts.iter().enumerate() {
            acc += p;
            if a <= acc {
                return k + 1;
            }
        }
        panic!("letter {a} beyond the composition's sum");
    }

    /// Indices i for which the simple transposition s_i lies in the Young
    /// subgroup (i and i+1 in the same block), ascending.
    pub fn simple_generators(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (start, end) in self.block_ranges() {
            for i in start..end {
                out.push(i);
            }
        }
        out
    }

    /// All elements of the Young subgroup S_lambda as permutations of rank
    /// sum(), in ascending lexicographic order of the one-line word.
    pub fn young_subgroup(&self) -> Vec<Permutation> {
        let r = self.sum();
        let mut out = vec![Permutation::identity(r)];
        for (start, end) in self.block_ranges() {
            if end <= start {
                continue;
            }
            let block = end - start + 1;
            let block_perms = Permutation::all(block);
            let mut next = Vec::with_capacity(out.len() * block_perms.len());
            for prefix in &out {
                for bp in &block_perms {
                    // embed bp into positions start..=end
                    let mut images: Vec<usize> = prefix.one_line().collect();
                    for offset in 0..block {
                        images[start - 1 + offset] = start - 1 + bp.apply(offset + 1);
                    }
                    next.push(
                        Permutation::from_one_line(&images)
                            .expect("block embedding preserves bijectivity"),
                    );
                }
            }
            out = next;
        }
        out
    }

    /// True when w permutes letters within blocks only.
    pub fn contains(&self, w: &Permutation) -> bool {
        debug_assert_eq!(w.rank(), self.sum());
        (1..=w.rank()).all(|i| self.block_of(i) == self.block_of(w.apply(i)))
    }

    /// All compositions of r into exactly n parts, ascending lexicographic.
    pub fn enumerate(n: usize, r: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        fn rec(n: usize, rest: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if current.len() == n {
                if rest == 0 {
                    out.push(Composition::new(current.clone()));
                }
                return;
            }
            if current.len() == n - 1 {
                current.push(rest);
                out.push(Composition::new(current.clone()));
                current.pop();
                return;
            }
            for first in 0..=rest {
                current.push(first);
                rec(n, rest - first, current, out);
                current.pop();
            }
        }
        if n == 0 {
            if r == 0 {
                out.push(Composition::new(vec![]));
            }
            return out;
        }
        rec(n, r, &mut current, &mut out);
        out
    }

    /// JSON: the parts as an array of integers.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.parts
                .iter()
                .map(|&p| serde_json::Value::Number(p.into()))
                .collect(),
        )
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_and_generators() {
        let lam = Composition::new(vec![2, 0, 3]);
        assert_eq!(lam.sum(), 5);
        assert_eq!(lam.block_ranges(), vec![(1, 2), (3, 2), (3, 5)]);
        assert_eq!(lam.simple_generators(), vec![1, 3, 4]);
        assert_eq!(lam.block_of(1), 1);
        assert_eq!(lam.block_of(3), 3);
        assert_eq!(lam.block_of(5), 3);
    }

    #[test]
    fn young_subgroup_size_and_membership() {
        let lam = Composition::new(vec![2, 1]);
        let grp = lam.young_subgroup();
        assert_eq!(grp.len(), 2);
        assert!(grp.iter().all(|w| lam.contains(w)));
        // S_(2,0,3) has order 2 * 6 = 12
        let lam = Composition::new(vec![2, 0, 3]);
        let grp = lam.young_subgroup();
        assert_eq!(grp.len(), 12);
        assert!(grp.iter().all(|w| lam.contains(w)));
        // brute-force cross-check against the membership filter
        let brute: Vec<Permutation> = Permutation::all(5)
            .into_iter()
            .filter(|w| lam.contains(w))
            .collect();
        assert_eq!(grp.len(), brute.len());
        let mut sorted = grp.clone();
        sorted.sort();
        assert_eq!(sorted, brute);
    }

    #[test]
    fn young_subgroup_is_lex_sorted() {
        let lam = Composition::new(vec![2, 2]);
        let grp = lam.young_subgroup();
        let mut sorted = grp.clone();
        sorted.sort();
        assert_eq!(grp, sorted);
        assert_eq!(grp.len(), 4);
    }

    #[test]
    fn enumerate_compositions() {
        let all = Composition::enumerate(2, 3);
        assert_eq!(
            all,
            vec![
                Composition::new(vec![0, 3]),
                Composition::new(vec![1, 2]),
                Composition::new(vec![2, 1]),
                Composition::new(vec![3, 0]),
            ]
        );
        assert_eq!(Composition::enumerate(3, 4).len(), 15); // C(6,2)
        assert_eq!(Composition::enumerate(0, 0).len(), 1);
        assert_eq!(Composition::enumerate(0, 2).len(), 0);
    }
}
