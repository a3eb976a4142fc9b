//! Combinatorics of the symmetric group underlying the algebra: permutations
//! with deterministic reduced words, compositions and their Young subgroups,
//! minimal (double) coset representatives, the bijection between nonnegative
//! integer matrices and double cosets, decorated matrices, and strict
//! partitions.
//!
//! Every enumeration in this module has a documented deterministic order, so
//! everything downstream is reproducible byte for byte.

mod composition;
mod coset;
mod decorated;
mod partition;
mod perm;

pub use composition::Composition;
pub use coset::{
    double_coset_reps, matrix_to_triple, min_coset_reps, min_left_coset_reps, nu_of,
    nu_of_inverse, reps_in_subgroup, reps_inv_in_subgroup, triple_to_matrix, NonnegMatrix,
};
pub use decorated::{enumerate_decorated, enumerate_decorated_margins, DecoratedMatrix};
pub use partition::{strict_partitions, IrrType, StrictPartition};
pub use perm::Permutation;
