use super::{wire, PkeError};
use crate::algebra::rng::seeded;
use crate::algebra::{weight, Field, Matrix};
use crate::families::GoppaParams;
use serde::{Deserialize, Serialize};

/// Public part of the toy Niederreiter-with-binary-Goppa construction:
/// only the non-identity block T of the systematic parity-check
/// H = (Id | T) is published.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CmceToyPublic {
    pub t_block: Matrix,
    pub t: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CmceToyKeyPair {
    pub public: CmceToyPublic,
    pub goppa: GoppaParams,
    /// The full systematic parity-check (Id | T).
    pub h_sys: Matrix,
}

/// Key generation: draw (g, alpha) until the binary Goppa parity-check
/// has full rank m t and is systematic in its first m t columns without
/// any column permutation; failures resample the whole key material.
pub fn cmce_toy_keygen(m: u32, n: usize, t: usize, seed: u64) -> Result<CmceToyKeyPair, PkeError> {
    if (m as usize) * t >= n {
        return Err(PkeError::BadParams(format!("need m t < n, got m={m}, t={t}, n={n}")));
    }
    let ext = Field::extension(2, m).map_err(|e| PkeError::BadParams(e.to_string()))?;
    let mut rng = seeded(seed);
    let rows = m as usize * t;
    for _ in 0..10_000 {
        let goppa = GoppaParams::random(ext.clone(), n, t, &mut rng)?;
        let h_sub = goppa.parity_check_subfield();
        let res = h_sub.rref();
        // systematic without permutation: pivots must be 0..mt-1
        if res.pivots.len() != rows || res.pivots.iter().enumerate().any(|(i, &p)| p != i) {
            continue;
        }
        let h_sys = Matrix::from_rows(
            h_sub.field(),
            res.r.row_vecs().into_iter().take(rows).collect(),
        );
        let t_block = h_sys.columns(&(rows..n).collect::<Vec<_>>());
        return Ok(CmceToyKeyPair {
            public: CmceToyPublic { t_block, t },
            goppa,
            h_sys,
        });
    }
    Err(PkeError::SystematicFormFailure)
}

/// Reassemble H = (Id | T) from the public block.
pub fn cmce_public_parity(public: &CmceToyPublic) -> Matrix {
    let rows = public.t_block.rows();
    Matrix::identity(public.t_block.field(), rows).hstack(&public.t_block)
}

/// Encapsulate: encode the message bytes as a weight-t error and publish
/// its syndrome c0 = H e^T.
pub fn cmce_encaps(public: &CmceToyPublic, message: &[u8]) -> (Vec<u64>, Vec<u64>) {
    let h = cmce_public_parity(public);
    let n = h.cols();
    let e = wire::constant_weight_encode(n, public.t, message);
    (h.mul_col(&e), e)
}

/// Decapsulate: extend c0 by zeros to v, decode v in the Goppa code and
/// read the error off the difference; the syndrome and weight checks run
/// on the recovered vector.
pub fn cmce_decaps(keys: &CmceToyKeyPair, c0: &[u64]) -> Result<Vec<u64>, PkeError> {
    let h = &keys.h_sys;
    let n = h.cols();
    let mut v = vec![0u64; n];
    v[..c0.len()].copy_from_slice(c0);
    // H v^T = c0 by the identity block
    debug_assert_eq!(h.mul_col(&v), c0);
    let cw = keys.goppa.decode(&v)?;
    let f2 = h.field();
    let e = f2.vec_sub(&v, &cw);
    if weight(&e) != keys.public.t || h.mul_col(&e) != c0 {
        return Err(PkeError::DecodeFailure);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toy_encaps_decaps_round_trip() {
        let keys = cmce_toy_keygen(4, 12, 2, 7).unwrap();
        for i in 0..100u32 {
            let msg = i.to_le_bytes();
            let (c0, e) = cmce_encaps(&keys.public, &msg);
            assert_eq!(weight(&e), 2);
            let got = cmce_decaps(&keys, &c0).unwrap();
            assert_eq!(got, e, "message {i}");
        }
    }

    #[test]
    fn zero_extension_identity() {
        let keys = cmce_toy_keygen(4, 12, 2, 3).unwrap();
        let h = cmce_public_parity(&keys.public);
        let (c0, _) = cmce_encaps(&keys.public, b"x");
        let mut v = vec![0u64; h.cols()];
        v[..c0.len()].copy_from_slice(&c0);
        assert_eq!(h.mul_col(&v), c0);
    }

    #[test]
    fn public_block_matches_secret_parity() {
        let keys = cmce_toy_keygen(4, 12, 2, 11).unwrap();
        let h = cmce_public_parity(&keys.public);
        assert_eq!(h, keys.h_sys);
        // the systematic form is row equivalent to the subfield
        // parity-check of the Goppa parameters
        let raw = keys.goppa.parity_check_subfield();
        assert!(h.same_row_space(&raw));
    }

    #[test]
    fn parameter_guard() {
        assert!(matches!(
            cmce_toy_keygen(4, 12, 3, 0),
            Err(PkeError::BadParams(_))
        ));
    }
}
