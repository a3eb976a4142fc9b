//! Minimal coset representatives and the bijection between nonnegative
//! integer matrices and double cosets of Young subgroups.
//!
//! Conventions: D_lambda denotes the minimal-length representatives of the
//! right cosets S_lambda \ S_r, characterized by "d^{-1} is increasing on
//! every lambda-block". Representatives of w S_mu are the inverses, i.e. the
//! permutations increasing on every mu-block.

use super::composition::Composition;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// A rectangular matrix of nonnegative integers (the double-coset side of the
/// bijection).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NonnegMatrix {
    entries: Vec<Vec<usize>>,
}

impl NonnegMatrix {
    pub fn new(entries: Vec<Vec<usize>>) -> Self {
        let cols = entries.first().map_or(0, Vec::len);
        assert!(
            entries.iter().all(|row| row.len() == cols),
            "matrix rows must have equal length"
        );
        NonnegMatrix { entries }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().flatten().sum()
    }

    /// Row sums as a composition (the left margin).
    pub fn row_margins(&self) -> Composition {
        Composition::new(self.entries.iter().map(|row| row.iter().sum()).collect())
    }

    /// Column sums as a composition (the right margin).
    pub fn col_margins(&self) -> Composition {
        Composition::new(
            (0..self.cols())
                .map(|j| self.entries.iter().map(|row| row[j]).sum())
                .collect(),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|&e| serde_json::Value::Number(e.into()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

/// True iff d^{-1} is increasing on every lambda-block, i.e. d is the minimal
/// element of S_lambda * d.
fn is_min_right_rep(lambda: &Composition, d: &Permutation) -> bool {
    let inv = d.inverse();
    lambda.block_ranges().iter().all(|&(start, end)| {
        (start..end).all(|a| inv.apply(a) < inv.apply(a + 1))
    })
}

/// True iff d is increasing on every mu-block, i.e. d is the minimal element
/// of d * S_mu.
fn is_min_left_rep(mu: &Composition, d: &Permutation) -> bool {
    mu.block_ranges()
        .iter()
        .all(|&(start, end)| (start..end).all(|b| d.apply(b) < d.apply(b + 1)))
}

/// D_lambda: minimal-length representatives of the cosets S_lambda * d, in
/// ascending lexicographic order of the one-line word.
pub fn min_coset_reps(lambda: &Composition) -> Vec<Permutation> {
    Permutation::all(lambda.sum())
        .into_iter()
        .filter(|d| is_min_right_rep(lambda, d))
        .collect()
}

/// D_mu^{-1}: minimal-length representatives of the cosets d * S_mu, in
/// ascending lexicographic order of the one-line word.
pub fn min_left_coset_reps(mu: &Composition) -> Vec<Permutation> {
    Permutation::all(mu.sum())
        .into_iter()
        .filter(|d| is_min_left_rep(mu, d))
        .collect()
}

/// D_{lambda,mu} = D_lambda intersect D_mu^{-1}: minimal-length double coset
/// representatives for S_lambda \ S_r / S_mu, ascending lexicographic.
pub fn double_coset_reps(lambda: &Composition, mu: &Composition) -> Vec<Permutation> {
    assert_eq!(lambda.sum(), mu.sum(), "margins must have equal sums");
    Permutation::all(lambda.sum())
        .into_iter()
        .filter(|d| is_min_right_rep(lambda, d) && is_min_left_rep(mu, d))
        .collect()
}

/// D_nu intersect S_mu: the elements of S_mu whose inverse is increasing on
/// every nu-block (minimal representatives of S_nu \ S_mu when
/// S_nu <= S_mu), ascending lexicographic.
pub fn reps_in_subgroup(nu: &Composition, mu: &Composition) -> Vec<Permutation> {
    assert_eq!(nu.sum(), mu.sum(), "compositions must have equal sums");
    mu.young_subgroup()
        .into_iter()
        .filter(|s| is_min_right_rep(nu, s))
        .collect()
}

/// D_nu^{-1} intersect S_lambda: the elements of S_lambda increasing on every
/// nu-block, ascending lexicographic.
pub fn reps_inv_in_subgroup(nu: &Composition, lambda: &Composition) -> Vec<Permutation> {
    assert_eq!(nu.sum(), lambda.sum(), "compositions must have equal sums");
    lambda
        .young_subgroup()
        .into_iter()
        .filter(|u| is_min_left_rep(nu, u))
        .collect()
}

/// Intersection counts m_ij = |R^lambda_i /\ d(R^mu_j)| as a matrix.
fn intersection_matrix(lambda: &Composition, d: &Permutation, mu: &Composition) -> NonnegMatrix {
    let mut entries = vec![vec![0usize; mu.num_parts()]; lambda.num_parts()];
    for (j, &(bs, be)) in mu.block_ranges().iter().enumerate() {
        // bs..=be is empty for an empty block (be = bs - 1)
        for b in bs..=be {
            let image = d.apply(b);
            entries[lambda.block_of(image) - 1][j] += 1;
        }
    }
    NonnegMatrix::new(entries)
}

/// Maps a nonnegative integer matrix to its double-coset triple
/// (row margin, minimal representative, column margin).
///
/// The representative is built constructively: the letters of each column
/// block are distributed, in ascending order, to the rows in ascending order,
/// filling each row block left to right. This is the unique
/// d in D_{lambda,mu} with |R^lambda_i /\ d(R^mu_j)| = m_ij.
pub fn matrix_to_triple(m: &NonnegMatrix) -> (Composition, Permutation, Composition) {
    let lambda = m.row_margins();
    let mu = m.col_margins();
    let r = m.sum();
    let mut images = vec![0usize; r];
    let mut next_slot: Vec<usize> = (0..m.rows()).map(|i| lambda.tilde(i) + 1).collect();
    let mut source = 1;
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            for _ in 0..m.get(i, j) {
                images[source - 1] = next_slot[i];
                next_slot[i] += 1;
                source += 1;
            }
        }
    }
    let d = Permutation::from_one_line(&images).expect("slot assignment is a bijection");
    debug_assert!(is_min_right_rep(&lambda, &d) && is_min_left_rep(&mu, &d));
    (lambda, d, mu)
}

/// Inverse of [`matrix_to_triple`]: recovers the matrix of intersection
/// counts. Errors with `NotMinimalRep` when d is not the minimal-length
/// representative of its (lambda, mu) double coset.
pub fn triple_to_matrix(
    lambda: &Composition,
    d: &Permutation,
    mu: &Composition,
) -> Result<NonnegMatrix> {
    assert_eq!(lambda.sum(), mu.sum(), "margins must have equal sums");
    assert_eq!(d.rank(), lambda.sum(), "representative rank must match the margins");
    if !is_min_right_rep(lambda, d) || !is_min_left_rep(mu, d) {
        return Err(Error::NotMinimalRep);
    }
    Ok(intersection_matrix(lambda, d, mu))
}

/// nu(d): the composition with S_nu = d^{-1} S_lambda d intersect S_mu, read
/// column-major from the intersection matrix (m_11, m_21, ..., m_12, ...).
///
/// Precondition: d in D_{lambda,mu} (asserted).
pub fn nu_of(lambda: &Composition, d: &Permutation, mu: &Composition) -> Composition {
    let m = triple_to_matrix(lambda, d, mu).expect("nu_of requires a minimal representative");
    let mut parts = Vec::with_capacity(m.rows() * m.cols());
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            parts.push(m.get(i, j));
        }
    }
    Composition::new(parts)
}

/// nu(d^{-1}): the composition with S_nu = d S_mu d^{-1} intersect S_lambda,
/// read row-major from the intersection matrix (m_11, m_12, ..., m_21, ...).
///
/// Precondition: d in D_{lambda,mu} (asserted).
pub fn nu_of_inverse(lambda: &Composition, d: &Permutation, mu: &Composition) -> Composition {
    let m = triple_to_matrix(lambda, d, mu).expect("nu_of_inverse requires a minimal representative");
    let mut parts = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            parts.push(m.get(i, j));
        }
    }
    Composition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn min_reps_example() {
        // lambda = (2,1) in S_3: D_lambda = {d : d^{-1}(1) < d^{-1}(2)}
        let reps = min_coset_reps(&comp(&[2, 1]));
        let brute: Vec<Permutation> = Permutation::all(3)
            .into_iter()
            .filter(|d| {
                let inv = d.inverse();
                inv.apply(1) < inv.apply(2)
            })
            .collect();
        assert_eq!(reps, brute);
        assert_eq!(reps.len(), 3); // |S_3| / |S_(2,1)|
    }

    #[test]
    fn coset_reps_are_minimal_and_cover() {
        // every coset S_lambda d contains exactly one representative, of
        // minimal length
        for lambda in [comp(&[2, 2]), comp(&[1, 3]), comp(&[2, 1, 1])] {
            let reps = min_coset_reps(&lambda);
            let subgroup = lambda.young_subgroup();
            assert_eq!(reps.len() * subgroup.len(), 24);
            let mut seen = std::collections::BTreeSet::new();
            for d in &reps {
                for u in &subgroup {
                    let w = u.compose(d);
                    assert!(seen.insert(w.clone()), "cosets must be disjoint");
                    assert!(
                        w.length() == u.length() + d.length(),
                        "lengths must be additive in S_lambda * d"
                    );
                }
            }
            assert_eq!(seen.len(), 24, "cosets must cover S_4");
        }
    }

    #[test]
    fn double_cosets_partition_the_group() {
        for r in 2..=4usize {
            let margins = Composition::enumerate(r.min(3), r);
            for lambda in &margins {
                for mu in &margins {
                    let reps = double_coset_reps(lambda, mu);
                    let mut seen = std::collections::BTreeSet::new();
                    for d in &reps {
                        for u in &lambda.young_subgroup() {
                            for s in &mu.young_subgroup() {
                                seen.insert(u.compose(d).compose(s));
                            }
                        }
                    }
                    let total: usize = (1..=r).product();
                    assert_eq!(seen.len(), total, "double cosets must cover S_{r}");
                }
            }
        }
    }

    #[test]
    fn unique_length_additive_decomposition() {
        // every w factors uniquely as u o d o sigma with u in S_lambda,
        // d in D_{lambda,mu}, sigma in D_{nu(d)} /\ S_mu, lengths additive
        let r = 4;
        for lambda in [comp(&[2, 2]), comp(&[1, 2, 1])] {
            for mu in [comp(&[2, 2]), comp(&[3, 1])] {
                let reps = double_coset_reps(&lambda, &mu);
                for w in Permutation::all(r) {
                    let mut found = Vec::new();
                    for d in &reps {
                        let nu = nu_of(&lambda, d, &mu);
                        for u in &lambda.young_subgroup() {
                            for sigma in &reps_in_subgroup(&nu, &mu) {
                                if u.compose(d).compose(sigma) == w {
                                    found.push((u.clone(), d.clone(), sigma.clone()));
                                }
                            }
                        }
                    }
                    assert_eq!(found.len(), 1, "decomposition of {w} must be unique");
                    let (u, d, sigma) = &found[0];
                    assert_eq!(
                        w.length(),
                        u.length() + d.length() + sigma.length(),
                        "lengths must be additive for {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn nu_matches_conjugated_intersection() {
        // S_{nu(d)} = d^{-1} S_lambda d /\ S_mu, elementwise, for r <= 4
        let r = 4;
        for lambda in [comp(&[2, 2]), comp(&[3, 1]), comp(&[1, 1, 2])] {
            for mu in [comp(&[2, 2]), comp(&[2, 1, 1])] {
                for d in double_coset_reps(&lambda, &mu) {
                    let nu = nu_of(&lambda, &d, &mu);
                    assert_eq!(nu.sum(), r);
                    let lhs: std::collections::BTreeSet<Permutation> =
                        nu.young_subgroup().into_iter().collect();
                    let rhs: std::collections::BTreeSet<Permutation> = mu
                        .young_subgroup()
                        .into_iter()
                        .filter(|s| lambda.contains(&d.compose(s).compose(&d.inverse())))
                        .collect();
                    assert_eq!(lhs, rhs, "nu(d) mismatch for lambda={lambda}, d={d}, mu={mu}");

                    // and the row-major version for d^{-1}
                    let nu_inv = nu_of_inverse(&lambda, &d, &mu);
                    let lhs: std::collections::BTreeSet<Permutation> =
                        nu_inv.young_subgroup().into_iter().collect();
                    let rhs: std::collections::BTreeSet<Permutation> = lambda
                        .young_subgroup()
                        .into_iter()
                        .filter(|u| mu.contains(&d.inverse().compose(u).compose(&d)))
                        .collect();
                    assert_eq!(lhs, rhs, "nu(d^-1) mismatch for lambda={lambda}, d={d}, mu={mu}");
                }
            }
        }
    }

    #[test]
    fn bijection_example() {
        let m = NonnegMatrix::new(vec![vec![1, 1], vec![1, 0]]);
        let (lambda, d, mu) = matrix_to_triple(&m);
        assert_eq!(lambda, comp(&[2, 1]));
        assert_eq!(mu, comp(&[2, 1]));
        assert_eq!(d, Permutation::from_one_line(&[1, 3, 2]).unwrap());
        assert_eq!(nu_of(&lambda, &d, &mu), comp(&[1, 1, 1, 0]));
        assert_eq!(triple_to_matrix(&lambda, &d, &mu).unwrap(), m);
    }

    #[test]
    fn bijection_antidiagonal_example() {
        let m = NonnegMatrix::new(vec![vec![0, 1], vec![1, 0]]);
        let (lambda, d, mu) = matrix_to_triple(&m);
        assert_eq!(lambda, comp(&[1, 1]));
        assert_eq!(mu, comp(&[1, 1]));
        assert_eq!(d, Permutation::from_one_line(&[2, 1]).unwrap());
    }

    #[test]
    fn triple_to_matrix_rejects_non_minimal() {
        // s_1 is inside S_(2) x anything, so it is not a minimal rep for
        // lambda = (2,1), mu = (2,1)
        let s1 = Permutation::transposition(3, 1);
        assert_eq!(
            triple_to_matrix(&comp(&[2, 1]), &s1, &comp(&[2, 1])),
            Err(Error::NotMinimalRep)
        );
    }

    #[test]
    fn bijection_round_trips() {
        // matrix -> triple -> matrix over all 2x2 and 2x3 matrices of sum <= 3
        let mut count = 0;
        for rows in [2usize, 3] {
            for cols in [2usize, 3] {
                for m in enumerate_matrices(rows, cols, 3) {
                    let (lambda, d, mu) = matrix_to_triple(&m);
                    assert_eq!(triple_to_matrix(&lambda, &d, &mu).unwrap(), m);
                    count += 1;
                }
            }
        }
        assert!(count > 50, "the round-trip test must actually cover cases");

        // triple -> matrix -> triple over all double cosets for r = 3
        let margins = Composition::enumerate(2, 3);
        for lambda in &margins {
            for mu in &margins {
                for d in double_coset_reps(lambda, mu) {
                    let m = triple_to_matrix(lambda, &d, mu).unwrap();
                    let (l2, d2, m2) = matrix_to_triple(&m);
                    assert_eq!((l2, d2, m2), (lambda.clone(), d, mu.clone()));
                }
            }
        }
    }

    #[test]
    fn constructive_rep_matches_search_oracle() {
        // d_M is the unique element of D_{lambda,mu} with the intersection
        // property: find it by exhaustive search and compare
        for m in enumerate_matrices(2, 2, 4) {
            let (lambda, d, mu) = matrix_to_triple(&m);
            let found: Vec<Permutation> = double_coset_reps(&lambda, &mu)
                .into_iter()
                .filter(|c| intersection_matrix(&lambda, c, &mu) == m)
                .collect();
            assert_eq!(found, vec![d], "search oracle disagrees for {m:?}");
        }
    }

    /// All rows x cols matrices with entries summing to exactly `sum`.
    fn enumerate_matrices(rows: usize, cols: usize, sum: usize) -> Vec<NonnegMatrix> {
        let cells = rows * cols;
        let mut out = Vec::new();
        let mut flat = vec![0usize; cells];
        fn rec(idx: usize, rest: usize, flat: &mut Vec<usize>, rows: usize, cols: usize, out: &mut Vec<NonnegMatrix>) {
            if idx + 1 == flat.len() {
                flat[idx] = rest;
                let entries: Vec<Vec<usize>> =
                    flat.chunks(cols).map(|c| c.to_vec()).collect();
                out.push(NonnegMatrix::new(entries));
                return;
            }
            for v in 0..=rest {
                flat[idx] = v;
                rec(idx + 1, rest - v, flat, rows, cols, out);
            }
        }
        if cells > 0 {
            rec(0, sum, &mut flat, rows, cols, &mut out);
        }
        out
    }
}
