//! Exact arithmetic over prime and extension fields, dense matrices,
//! univariate polynomials and permutations, plus the Gaussian-elimination
//! and information-set machinery shared by every other module.

mod field;
mod matrix;
mod perm;
mod poly;
pub mod rng;
mod text;

pub use field::{Field, FieldElement};
pub use matrix::{is_information_set, systematic_form, Matrix, RrefResult};
pub use perm::Permutation;
pub use poly::Poly;
pub use text::{matrix_from_text, matrix_to_text};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum AlgebraError {
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("index set has the wrong size (expected {expected}, got {got})")]
    BadSetSize { expected: usize, got: usize },
    #[error("the given set is not an information set")]
    NotInformationSet,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("modulus must be monic of degree m over the prime subfield")]
    BadModulus,
    #[error("element encoding {0} is out of range for the field")]
    OutOfRange(u64),
    #[error("dimension mismatch: {0}")]
    Dim(String),
    #[error("malformed matrix text: {0}")]
    Parse(String),
}

/// Hamming weight of a vector of element encodings.
pub fn weight(v: &[u64]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Support of a vector: indices of the nonzero coordinates.
pub fn support(v: &[u64]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, _)| i)
        .collect()
}

/// Hamming distance between two equal-length vectors.
pub fn hamming_distance(a: &[u64], b: &[u64]) -> usize {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}
