use super::PkeError;
use crate::algebra::rng::{
    random_invertible_with, random_permutation_with, random_weight_vec, seeded,
};
use crate::algebra::{weight, Matrix, Permutation};
use crate::families::DecodableCode;
use serde::{Deserialize, Serialize};

/// Public part: the disguised generator matrix and the error weight.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct McEliecePublic {
    pub g_pub: Matrix,
    pub t: usize,
}

/// A full key pair: G' = S G P with an attached decoder for the secret
/// code.
#[derive(Debug, Clone)]
pub struct McElieceKeyPair {
    pub public: McEliecePublic,
    pub code: DecodableCode,
    pub s: Matrix,
    pub p: Permutation,
}

/// Assemble a key pair from explicit parts (used to replay pinned
/// examples); checks invertibility of S and recomputes G' = S G P.
pub fn mceliece_keypair_from_parts(
    code: DecodableCode,
    s: Matrix,
    p: Permutation,
) -> Result<McElieceKeyPair, PkeError> {
    if s.inverse().is_none() {
        return Err(PkeError::BadParams("S is not invertible".into()));
    }
    let field = code.code.field().clone();
    let g_pub = s.mul(code.code.generator()).mul(&p.as_matrix(&field));
    Ok(McElieceKeyPair {
        public: McEliecePublic { g_pub, t: code.t },
        code,
        s,
        p,
    })
}

/// Key generation: draw S in GL_k and an n x n permutation at random.
pub fn mceliece_keygen(code: DecodableCode, seed: u64) -> McElieceKeyPair {
    let mut rng = seeded(seed);
    let k = code.code.dimension();
    let n = code.code.length();
    let s = random_invertible_with(code.code.field(), k, &mut rng);
    let p = random_permutation_with(n, &mut rng);
    mceliece_keypair_from_parts(code, s, p).expect("sampled S is invertible")
}

/// c = m G' + e with wt(e) <= t.
pub fn mceliece_encrypt(
    public: &McEliecePublic,
    m: &[u64],
    e: &[u64],
) -> Result<Vec<u64>, PkeError> {
    if weight(e) > public.t {
        return Err(PkeError::WeightTooHigh);
    }
    if m.len() != public.g_pub.rows() || e.len() != public.g_pub.cols() {
        return Err(PkeError::BadParams("dimension mismatch".into()));
    }
    let f = public.g_pub.field();
    Ok(f.vec_add(&public.g_pub.row_mul(m), e))
}

/// Encrypt with a random weight-t error drawn from the seed.
pub fn mceliece_encrypt_seeded(
    public: &McEliecePublic,
    m: &[u64],
    seed: u64,
) -> Result<(Vec<u64>, Vec<u64>), PkeError> {
    let mut rng = seeded(seed);
    let e = random_weight_vec(public.g_pub.field(), public.g_pub.cols(), public.t, &mut rng);
    let c = mceliece_encrypt(public, m, &e)?;
    Ok((c, e))
}

/// Undo the permutation, decode in the secret code, unscramble S.
pub fn mceliece_decrypt(keys: &McElieceKeyPair, c: &[u64]) -> Result<Vec<u64>, PkeError> {
    let c_unperm = keys.p.inverse().apply_row(c);
    let codeword = keys.code.decode(&c_unperm)?;
    let ms = keys.code.unencode(&codeword)?;
    let s_inv = keys.s.inverse().expect("S invertible by construction");
    Ok(s_inv.row_mul(&ms))
}
