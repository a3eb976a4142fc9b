//! Dense matrices over a coefficient ring with fraction-free (Bareiss)
//! elimination: exact rank over the fraction field, exact determinants, and a
//! certified solver that also decides integrality of the solution.
//!
//! Pivoting is deterministic: at every step the pivot is the first nonzero
//! entry of the remaining submatrix in row-major order.

use super::Ring;
use crate::error::{Error, Result};

/// A dense rows x cols matrix over a coefficient ring, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> PolyMatrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "all rows must have equal length"
        );
        PolyMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds from columns (each of equal length).
    pub fn from_columns(columns: &[Vec<R>]) -> Self {
        let ncols = columns.len();
        let nrows = columns.first().map_or(0, Vec::len);
        assert!(
            columns.iter().all(|c| c.len() == nrows),
            "all columns must have equal length"
        );
        let mut m = PolyMatrix::zero(nrows, ncols);
        for (j, col) in columns.iter().enumerate() {
            for (i, entry) in col.iter().enumerate() {
                m.set(i, j, entry.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[i * self.cols + j] = value;
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn stacked(&self, other: &PolyMatrix<R>) -> PolyMatrix<R> {
        assert_eq!(self.cols, other.cols, "stacked matrices need equal column counts");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        PolyMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Appends one extra column.
    pub fn with_column(&self, col: &[R]) -> PolyMatrix<R> {
        assert_eq!(col.len(), self.rows, "column length must match row count");
        let mut out = PolyMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            out.set(i, self.cols, col[i].clone());
        }
        out
    }

    /// Applies a ring map entrywise (e.g. an evaluation or base change).
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> PolyMatrix<S> {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Matrix-vector product self * x.
    pub fn mul_vec(&self, x: &[R]) -> Vec<R> {
        assert_eq!(x.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.get(i, j).mul(&x[j]));
                }
                acc
            })
            .collect()
    }

    /// Rank over the fraction field, computed fraction-free.
    pub fn exact_rank(&self) -> usize {
        self.eliminate().rank
    }

    /// Determinant of a square matrix, exact in the ring.
    pub fn determinant(&self) -> R {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        if self.rows == 0 {
            return R::one();
        }
        let elim = self.eliminate();
        if elim.rank < self.rows {
            return R::zero();
        }
        // The final pivot is det of the row/column-relabeled matrix; undo the
        // two relabeling signs.
        let mut det = elim.last_pivot;
        if (elim.row_swaps + permutation_inversions(&elim.pivot_cols)) % 2 == 1 {
            det = det.neg();
        }
        det
    }

    /// Fraction-free forward elimination on a working copy.
    fn eliminate(&self) -> Elimination<R> {
        let mut work: Vec<Vec<R>> = (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        // original index of the row currently in each position
        let mut origin: Vec<usize> = (0..self.rows).collect();
        let mut prev = R::one();
        let mut rank = 0;
        let mut row_swaps = 0;
        let mut pivot_cols = Vec::new();
        let mut pivot_rows = Vec::new();
        let mut last_pivot = R::one();

        loop {
            // first nonzero entry of the remaining submatrix, row-major
            let mut found = None;
            'scan: for i in rank..self.rows {
                for j in 0..self.cols {
                    if !work[i][j].is_zero() {
                        found = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((pi, pj)) = found else { break };
            if pi != rank {
                work.swap(rank, pi);
                origin.swap(rank, pi);
                row_swaps += 1;
            }
            let pivot = work[rank][pj].clone();
            for i in rank + 1..self.rows {
                if work[i].iter().all(R::is_zero) {
                    continue;
                }
                let factor = work[i][pj].clone();
                for j in 0..self.cols {
                    let num = pivot.mul(&work[i][j]).sub(&factor.mul(&work[rank][j]));
                    work[i][j] = num
                        .exact_div(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                work[i][pj] = R::zero();
            }
            pivot_rows.push(origin[rank]);
            pivot_cols.push(pj);
            prev = pivot.clone();
            last_pivot = pivot;
            rank += 1;
            if rank == self.rows {
                break;
            }
        }

        Elimination {
            rank,
            row_swaps,
            pivot_cols,
            pivot_rows,
            last_pivot,
        }
    }
}

struct Elimination<R> {
    rank: usize,
    row_swaps: usize,
    pivot_cols: Vec<usize>,
    /// Original indices of the pivot rows, in pivot order.
    pivot_rows: Vec<usize>,
    last_pivot: R,
}

fn permutation_inversions(xs: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] > xs[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// Solves columns * x = target exactly, requiring the solution to be integral
/// over the ring.
///
/// The columns must be linearly independent over the fraction field (that is
/// a caller contract and is asserted). Errors: `NotInSpan` when no solution
/// exists over the fraction field, `NotIntegral` when a solution exists but
/// some coordinate is not in the ring.
pub fn solve_in_span<R: Ring>(columns: &PolyMatrix<R>, target: &[R]) -> Result<Vec<R>> {
    assert_eq!(
        columns.rows(),
        target.len(),
        "target length must match the column height"
    );
    let k = columns.cols();
    if k == 0 {
        return if target.iter().all(R::is_zero) {
            Ok(Vec::new())
        } else {
            Err(Error::NotInSpan)
        };
    }
    let elim = columns.eliminate();
    assert!(
        elim.rank == k,
        "solve_in_span requires linearly independent columns"
    );

    // Cramer's rule on the square subsystem given by the pivot rows: the
    // unique fraction-field solution has x_i = det(A_i) / det(A), and x_i is
    // integral iff that division is exact in the ring.
    let square = PolyMatrix::from_rows(
        elim.pivot_rows
            .iter()
            .map(|&i| (0..k).map(|j| columns.get(i, j).clone()).collect())
            .collect(),
    );
    let sub_target: Vec<R> = elim.pivot_rows.iter().map(|&i| target[i].clone()).collect();
    let denom = square.determinant();
    let mut solution = Vec::with_capacity(k);
    for i in 0..k {
        let mut replaced = square.clone();
        for (row, value) in sub_target.iter().enumerate() {
            replaced.set(row, i, value.clone());
        }
        let numer = replaced.determinant();
        match numer.exact_div(&denom) {
            Some(x) => solution.push(x),
            None => {
                // Decide which failure this is: consistency is a rank question.
                return if columns.with_column(target).exact_rank() > k {
                    Err(Error::NotInSpan)
                } else {
                    Err(Error::NotIntegral)
                };
            }
        }
    }
    // The candidate came from the pivot rows only; verify every row.
    if columns.mul_vec(&solution) != target {
        return Err(Error::NotInSpan);
    }
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{ExactInteger, IntAtQ, PolyQ};

    fn p(terms: &[(usize, i64)]) -> PolyQ {
        PolyQ::from_terms(terms.iter().copied())
    }

    #[test]
    fn rank_of_hand_matrices() {
        let zero = PolyMatrix::<PolyQ>::zero(3, 2);
        assert_eq!(zero.exact_rank(), 0);

        // [[1, q], [q, q^2]] has rank 1
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[(0, 1)]), p(&[(1, 1)])],
            vec![p(&[(1, 1)]), p(&[(2, 1)])],
        ]);
        assert_eq!(m.exact_rank(), 1);

        // [[1, q], [q, q^2 + 1]] has rank 2
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[(0, 1)]), p(&[(1, 1)])],
            vec![p(&[(1, 1)]), p(&[(2, 1), (0, 1)])],
        ]);
        assert_eq!(m.exact_rank(), 2);

        // rectangular with a zero row in the middle
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[(0, 2)]), p(&[(0, 4)]), p(&[(0, 6)])],
            vec![PolyQ::zero(), PolyQ::zero(), PolyQ::zero()],
            vec![p(&[(0, 1)]), p(&[(0, 2)]), p(&[(0, 3)])],
            vec![p(&[(0, 1)]), p(&[(0, 0)]), p(&[(0, 1)])],
        ]);
        assert_eq!(m.exact_rank(), 2);
    }

    #[test]
    fn determinant_hand_checks() {
        // det [[q, 1], [1, q]] = q^2 - 1
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[(1, 1)]), p(&[(0, 1)])],
            vec![p(&[(0, 1)]), p(&[(1, 1)])],
        ]);
        assert_eq!(m.determinant(), p(&[(2, 1), (0, -1)]));

        // a singular matrix
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[(1, 1)]), p(&[(2, 1)])],
            vec![p(&[(0, 1)]), p(&[(1, 1)])],
        ]);
        assert_eq!(m.determinant(), PolyQ::zero());

        // 3x3 with integer entries: det = -306
        let rows = [[6, 1, 1], [4, -2, 5], [2, 8, 7]];
        let m = PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| PolyQ::from_int(c)).collect())
                .collect(),
        );
        assert_eq!(m.determinant(), PolyQ::from_int(-306));

        // leading zero forces a row swap; det [[0, 1], [1, 0]] = -1
        let m = PolyMatrix::from_rows(vec![
            vec![PolyQ::zero(), PolyQ::one()],
            vec![PolyQ::one(), PolyQ::zero()],
        ]);
        assert_eq!(m.determinant(), PolyQ::from_int(-1));
    }

    #[test]
    fn specialized_rank_never_exceeds_symbolic_rank() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let rows = rng.gen_range(1..5);
            let cols = rng.gen_range(1..5);
            let m = PolyMatrix::from_rows(
                (0..rows)
                    .map(|_| {
                        (0..cols)
                            .map(|_| {
                                p(&[
                                    (rng.gen_range(0..3), rng.gen_range(-2..3)),
                                    (rng.gen_range(0..3), rng.gen_range(-2..3)),
                                ])
                            })
                            .collect()
                    })
                    .collect(),
            );
            let symbolic = m.exact_rank();
            // Rank can only drop under evaluation, and generic points attain it.
            let mut best = 0;
            for q0 in [2i64, 3, 5, 7, 11] {
                let eval = m.map(|e| IntAtQ::<0>::new(e.specialize(&ExactInteger::from(q0))));
                let r = eval.exact_rank();
                assert!(r <= symbolic, "specialized rank exceeded symbolic rank");
                best = best.max(r);
            }
            assert_eq!(best, symbolic, "no sampled point attained the symbolic rank");
        }
    }

    #[test]
    fn solve_in_span_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            // random independent columns: start from a random matrix and keep
            // only if full column rank
            let rows = rng.gen_range(2..6);
            let cols = rng.gen_range(1..=rows);
            let m = PolyMatrix::from_rows(
                (0..rows)
                    .map(|_| {
                        (0..cols)
                            .map(|_| p(&[(rng.gen_range(0..2), rng.gen_range(-3..4))]))
                            .collect()
                    })
                    .collect(),
            );
            if m.exact_rank() < cols {
                continue;
            }
            let x: Vec<PolyQ> = (0..cols)
                .map(|_| p(&[(rng.gen_range(0..2), rng.gen_range(-3..4))]))
                .collect();
            let target = m.mul_vec(&x);
            assert_eq!(solve_in_span(&m, &target).expect("constructed solvable system"), x);
        }
    }

    #[test]
    fn solve_in_span_error_cases() {
        // target outside the span
        let columns = PolyMatrix::from_rows(vec![vec![PolyQ::one()], vec![PolyQ::zero()]]);
        let target = vec![PolyQ::zero(), PolyQ::one()];
        assert_eq!(solve_in_span(&columns, &target), Err(Error::NotInSpan));

        // in the span over Q(q), but not integrally: 1 = (1/q) * q
        let columns = PolyMatrix::from_rows(vec![vec![PolyQ::q()]]);
        let target = vec![PolyQ::one()];
        assert_eq!(solve_in_span(&columns, &target), Err(Error::NotIntegral));

        // integrality obstruction over Z: 1 = (1/2) * 2
        let columns = PolyMatrix::from_rows(vec![vec![PolyQ::from_int(2)]]);
        let target = vec![PolyQ::one()];
        assert_eq!(solve_in_span(&columns, &target), Err(Error::NotIntegral));

        // zero column count
        let columns = PolyMatrix::<PolyQ>::zero(2, 0);
        assert_eq!(solve_in_span(&columns, &[PolyQ::zero(), PolyQ::zero()]), Ok(vec![]));
        assert_eq!(
            solve_in_span(&columns, &[PolyQ::one(), PolyQ::zero()]),
            Err(Error::NotInSpan)
        );
    }

    #[test]
    fn determinant_is_multiplicative_on_random_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20 {
            let n = rng.gen_range(1..4);
            let rand_m = |rng: &mut rand_chacha::ChaCha8Rng| {
                PolyMatrix::from_rows(
                    (0..n)
                        .map(|_| {
                            (0..n)
                                .map(|_| p(&[(rng.gen_range(0..2), rng.gen_range(-2..3))]))
                                .collect()
                        })
                        .collect(),
                )
            };
            let a = rand_m(&mut rng);
            let b = rand_m(&mut rng);
            // product matrix
            let mut ab = PolyMatrix::zero(n, n);
            for i in 0..n {
                for j in 0..n {
                    let mut acc = PolyQ::zero();
                    for l in 0..n {
                        acc = acc.add(&a.get(i, l).mul(b.get(l, j)));
                    }
                    ab.set(i, j, acc);
                }
            }
            assert_eq!(ab.determinant(), a.determinant().mul(&b.determinant()));
        }
    }
}
