//! Exact computer algebra for the Hecke-Clifford superalgebra H^c_r over
//! Z[q] (and Z[v, v^-1] with q = v^2) and for the queer q-Schur superalgebra
//! built from it as an endomorphism algebra, together with the defining
//! tensor-space representation.
//!
//! Everything is exact: integer coefficients are arbitrary precision, linear
//! algebra is fraction-free, and every enumeration is deterministic, so all
//! outputs are reproducible byte for byte.
//!
//! Module map:
//! - [`coeff`] — coefficient rings and fraction-free linear algebra;
//! - [`combinatorics`] — permutations, compositions, (double) coset
//!   representatives, the matrix <-> double-coset bijection, decorated
//!   matrices, strict partitions;
//! - [`clifford`] — the Clifford superalgebra C_r and its distinguished
//!   elements;
//! - [`hecke_clifford`] — H^c_r itself: normal-form arithmetic, involutions,
//!   symmetrizers, parabolic module membership and bases;
//! - [`schur`] — the q-Schur superalgebra: the double-coset basis of the
//!   bimodule intersections, operator application, and multiplication;
//! - [`tensor`] — the action on V^{\otimes r}, weights, the commutant, and
//!   the census of irreducible types;
//! - [`verify`] — the cross-cutting verification suite used by the
//!   acceptance tests and the command-line `verify` command.

pub mod clifford;
pub mod coeff;
pub mod combinatorics;
pub mod error;
pub mod hecke_clifford;
pub mod schur;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
