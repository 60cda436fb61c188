//! Concrete code families and their decoders: generalized Reed-Solomon
//! codes with a rational-interpolation decoder, classical Goppa codes
//! decoded through their GRS supercode, MDPC codes with Bit-Flipping,
//! Reed-Muller codes, cyclic codes from generator polynomials, and the
//! rank-metric stack (Moore matrices, Gabidulin codes, brute-force rank
//! decoding).

mod cyclic;
mod goppa;
mod grs;
mod mdpc;
mod rankmetric;
mod reedmuller;

pub use cyclic::cyclic_from_genpoly;
pub use goppa::GoppaParams;
pub use grs::GrsParams;
pub use mdpc::{bitflip_decode, bitflip_decode_syndrome, circulant_blocks, MdpcParams};
pub use rankmetric::{
    bruteforce_rank_decode, expand, gabidulin_code, moore_matrix, rank_support, rank_weight,
    subspaces_of_dim, GabidulinParams,
};
pub use reedmuller::reed_muller_generator;

use crate::codes::{CodesError, LinearCode, ENUM_BUDGET};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum FamiliesError {
    #[error("evaluation points must be pairwise distinct")]
    DuplicatePoints,
    #[error("column multipliers must be nonzero")]
    ZeroMultiplier,
    #[error("decoding failure")]
    DecodeFailure,
    #[error("the Goppa polynomial vanishes on a support element")]
    RootInSupport,
    #[error("evaluation points are linearly dependent over the base field")]
    DependentPoints,
    #[error("polynomial does not divide x^n - 1")]
    NotADivisor,
    #[error("enumeration exceeds the budget")]
    TooLarge,
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Codes(#[from] CodesError),
}

/// Family parameters in their JSON-facing form: a family tag plus the
/// defining data as integers (field-element encodings).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyParams {
    Grs(GrsParams),
    Goppa(GoppaParams),
    Mdpc(MdpcParams),
    Gabidulin(GabidulinParams),
}

/// A decoding algorithm handle, bundled with codes inside key material.
#[derive(Debug, Clone)]
pub enum Decoder {
    /// Rational-interpolation decoding of a GRS code.
    Grs(GrsParams),
    /// Alternant decoding of a classical Goppa code via its GRS supercode.
    Goppa(GoppaParams),
    /// Exhaustive nearest-codeword search; exact for any code that fits
    /// the budget.
    NearestCodeword { budget: u128 },
    /// Majority vote for the binary repetition code.
    Repetition,
    /// Bit-Flipping on a sparse binary parity-check matrix.
    BitFlip { threshold: Option<usize>, max_iters: usize },
    /// Exhaustive rank-metric decoding.
    Rank { budget: u128 },
}

/// A linear code that can correct up to `t` errors through `decoder`.
#[derive(Debug, Clone)]
pub struct DecodableCode {
    pub code: LinearCode,
    pub t: usize,
    pub decoder: Decoder,
}

impl DecodableCode {
    /// Decode a received word to the nearest codeword within radius `t`.
    pub fn decode(&self, y: &[u64]) -> Result<Vec<u64>, FamiliesError> {
        let cw = match &self.decoder {
            Decoder::Grs(p) => p.decode(y)?,
            Decoder::Goppa(p) => p.decode(y)?,
            Decoder::NearestCodeword { budget } => {
                let (cw, d) = self.code.nearest_codeword_bruteforce(y, *budget)?;
                if d > self.t {
                    return Err(FamiliesError::DecodeFailure);
                }
                cw
            }
            Decoder::Repetition => {
                let ones = crate::algebra::weight(y);
                let bit = u64::from(2 * ones > y.len());
                vec![bit; y.len()]
            }
            Decoder::BitFlip { threshold, max_iters } => {
                bitflip_decode(self.code.parity_check(), y, *threshold, *max_iters)?
            }
            Decoder::Rank { budget } => bruteforce_rank_decode(&self.code, y, self.t, *budget)?,
        };
        Ok(cw)
    }

    /// Recover the message of a decoded word by solving x G = cw.
    pub fn unencode(&self, cw: &[u64]) -> Result<Vec<u64>, FamiliesError> {
        self.code
            .generator()
            .solve_row(cw)
            .map_err(|_| FamiliesError::DecodeFailure)
    }

    /// Syndrome decoding: find e with e H^T = s and wt(e) <= t, going
    /// through an arbitrary preimage and the codeword decoder.
    pub fn syndrome_decode(&self, s: &[u64]) -> Result<Vec<u64>, FamiliesError> {
        let h = self.code.parity_check();
        let v = h
            .transpose()
            .solve_row(s)
            .map_err(|_| FamiliesError::DecodeFailure)?;
        let cw = self.decode(&v)?;
        let e = self.code.field().vec_sub(&v, &cw);
        if crate::algebra::weight(&e) > self.t {
            return Err(FamiliesError::DecodeFailure);
        }
        Ok(e)
    }

    /// The binary repetition code of length n with majority decoding.
    pub fn repetition(n: usize) -> DecodableCode {
        let f2 = crate::algebra::Field::prime(2).unwrap();
        let g = crate::algebra::Matrix::from_rows(&f2, vec![vec![1; n]]);
        DecodableCode {
            code: LinearCode::from_generator(g).unwrap(),
            t: (n - 1) / 2,
            decoder: Decoder::Repetition,
        }
    }

    /// The [7,4] Hamming code (1-error correcting, perfect), decoded
    /// exhaustively.
    pub fn hamming_7_4() -> DecodableCode {
        let f2 = crate::algebra::Field::prime(2).unwrap();
        let g = crate::algebra::Matrix::from_rows(
            &f2,
            vec![
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        );
        DecodableCode {
            code: LinearCode::from_generator(g).unwrap(),
            t: 1,
            decoder: Decoder::NearestCodeword { budget: ENUM_BUDGET },
        }
    }
}
