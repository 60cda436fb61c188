use super::{AlgebraError, Field, Matrix};
use serde::{Deserialize, Serialize};

/// A permutation of {0, .., n-1}, stored as its image array.
///
/// The matrix of a permutation has a single 1 per row, at column
/// `image[i]` in row i, so that for a row vector x the product
/// `x * P` places x\[i\] at position `image[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Permutation, AlgebraError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(AlgebraError::Dim("image is not a bijection".into()));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn map(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0usize; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    /// x * P for a row vector x.
    pub fn apply_row(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.image.len());
        let mut out = vec![0u64; x.len()];
        for (i, &xi) in x.iter().enumerate() {
            out[self.image[i]] = xi;
        }
        out
    }

    /// 0/1 matrix with exactly one 1 per row and column.
    pub fn as_matrix(&self, field: &Field) -> Matrix {
        let n = self.image.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, &j) in self.image.iter().enumerate() {
            m.set(i, j, 1);
        }
        m
    }
}
