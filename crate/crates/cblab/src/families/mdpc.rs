use super::FamiliesError;
use crate::algebra::rng::SeededRng;
use crate::algebra::{weight, Field, Matrix};
use serde::{Deserialize, Serialize};

/// Moderate-density parity-check parameters: `blocks` circulant blocks of
/// size `r`, with total parity-check row weight `w` split evenly across
/// the blocks. The moderate-density regime w ~ sqrt(n log n) is a design
/// guideline, not enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdpcParams {
    pub blocks: usize,
    pub r: usize,
    pub w: usize,
}

impl MdpcParams {
    pub fn new(blocks: usize, r: usize, w: usize) -> Result<MdpcParams, FamiliesError> {
        if blocks == 0 || r == 0 || w == 0 || w % blocks != 0 || w / blocks > r {
            return Err(FamiliesError::BadParams(format!(
                "need blocks | w and w/blocks <= r, got blocks={blocks}, r={r}, w={w}"
            )));
        }
        Ok(MdpcParams { blocks, r, w })
    }

    pub fn n(&self) -> usize {
        self.blocks * self.r
    }

    /// Sample the sparse parity-check matrix: each block is the circulant
    /// of a random first row of weight w/blocks.
    pub fn sample_parity_check(&self, rng: &mut SeededRng) -> Matrix {
        let f2 = Field::prime(2).unwrap();
        let firsts: Vec<Vec<u64>> = (0..self.blocks)
            .map(|_| crate::algebra::rng::random_weight_vec(&f2, self.r, self.w / self.blocks, rng))
            .collect();
        circulant_blocks(&firsts)
    }
}

/// Stack circulant blocks horizontally: block b contributes entries
/// H\[i\]\[b*r + j\] = h_b\[(j - i) mod r\], so that H (x_0,..,x_{b-1})^T
/// computes the coefficients of sum_b x_b(X) h_b(X) mod X^r - 1.
pub fn circulant_blocks(firsts: &[Vec<u64>]) -> Matrix {
    let f2 = Field::prime(2).unwrap();
    let r = firsts[0].len();
    let mut h = Matrix::zeros(&f2, r, firsts.len() * r);
    for (b, first) in firsts.iter().enumerate() {
        assert_eq!(first.len(), r);
        for i in 0..r {
            for j in 0..r {
                h.set(i, b * r + j, first[(j + r - i) % r]);
            }
        }
    }
    h
}

/// Bit-Flipping decoding from a syndrome: find a low-weight e with
/// H e^T = s. Each round sweeps the bits in order; a bit whose number of
/// unsatisfied parity checks reaches the threshold (by default a strict
/// majority of its check degree) is flipped and the syndrome is updated
/// immediately. Failure after `max_iters` rounds without reaching the
/// zero syndrome.
pub fn bitflip_decode_syndrome(
    h: &Matrix,
    s: &[u64],
    threshold: Option<usize>,
    max_iters: usize,
) -> Result<Vec<u64>, FamiliesError> {
    assert_eq!(h.field().order(), 2, "Bit-Flipping is binary only");
    assert_eq!(s.len(), h.rows());
    let n = h.cols();
    let col_weight: Vec<usize> = (0..n)
        .map(|j| (0..h.rows()).filter(|&i| h.get(i, j) == 1).count())
        .collect();
    let mut e = vec![0u64; n];
    let mut syn = s.to_vec();
    if weight(&syn) == 0 {
        return Ok(e);
    }
    for _ in 0..max_iters {
        let mut flipped = false;
        for j in 0..n {
            let unsat = (0..h.rows())
                .filter(|&i| h.get(i, j) == 1 && syn[i] == 1)
                .count();
            let b = threshold.unwrap_or(col_weight[j] / 2 + 1);
            if unsat >= b.max(1) {
                e[j] ^= 1;
                flipped = true;
                for i in 0..h.rows() {
                    if h.get(i, j) == 1 {
                        syn[i] ^= 1;
                    }
                }
            }
        }
        if weight(&syn) == 0 {
            return Ok(e);
        }
        if !flipped {
            return Err(FamiliesError::DecodeFailure);
        }
    }
    Err(FamiliesError::DecodeFailure)
}

/// Bit-Flipping decoding of a received word `y`; returns the codeword.
pub fn bitflip_decode(
    h: &Matrix,
    y: &[u64],
    threshold: Option<usize>,
    max_iters: usize,
) -> Result<Vec<u64>, FamiliesError> {
    let s = h.mul_col(y);
    let e = bitflip_decode_syndrome(h, &s, threshold, max_iters)?;
    Ok(h.field().vec_sub(y, &e))
}
