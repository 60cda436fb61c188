use super::PkeError;
use crate::algebra::rng::{random_invertible_with, random_permutation_with, seeded};
use crate::algebra::{weight, Matrix, Permutation};
use crate::families::DecodableCode;
use serde::{Deserialize, Serialize};

/// Public part: the disguised parity-check matrix and the weight bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NiederreiterPublic {
    pub h_pub: Matrix,
    pub t: usize,
}

/// H' = S H P over the secret decodable code.
#[derive(Debug, Clone)]
pub struct NiederreiterKeyPair {
    pub public: NiederreiterPublic,
    pub code: DecodableCode,
    pub s: Matrix,
    pub p: Permutation,
}

/// Assemble from explicit parts, recomputing H' = S H P.
pub fn niederreiter_from_code(
    code: DecodableCode,
    s: Matrix,
    p: Permutation,
) -> Result<NiederreiterKeyPair, PkeError> {
    if s.inverse().is_none() {
        return Err(PkeError::BadParams("S is not invertible".into()));
    }
    let field = code.code.field().clone();
    let h_pub = s.mul(code.code.parity_check()).mul(&p.as_matrix(&field));
    Ok(NiederreiterKeyPair {
        public: NiederreiterPublic { h_pub, t: code.t },
        code,
        s,
        p,
    })
}

pub fn niederreiter_keygen(code: DecodableCode, seed: u64) -> NiederreiterKeyPair {
    let mut rng = seeded(seed);
    let r = code.code.length() - code.code.dimension();
    let n = code.code.length();
    let s = random_invertible_with(code.code.field(), r, &mut rng);
    let p = random_permutation_with(n, &mut rng);
    niederreiter_from_code(code, s, p).expect("sampled S is invertible")
}

/// The cipher is the syndrome c = m H'^T of a low-weight message.
pub fn niederreiter_encrypt(public: &NiederreiterPublic, m: &[u64]) -> Result<Vec<u64>, PkeError> {
    if weight(m) > public.t {
        return Err(PkeError::WeightTooHigh);
    }
    if m.len() != public.h_pub.cols() {
        return Err(PkeError::BadParams("dimension mismatch".into()));
    }
    Ok(public.h_pub.mul_col(m))
}

/// S^-1 c is a syndrome of the secret code; syndrome-decode and undo P.
pub fn niederreiter_decrypt(keys: &NiederreiterKeyPair, c: &[u64]) -> Result<Vec<u64>, PkeError> {
    let s_inv = keys.s.inverse().expect("S invertible by construction");
    let syn = s_inv.mul_col(c);
    let mp = keys.code.syndrome_decode(&syn)?;
    // mp = m P^T, and P^T P = Id
    Ok(keys.p.apply_row(&mp))
}
