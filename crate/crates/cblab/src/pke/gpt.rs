use super::PkeError;
use crate::algebra::rng::{random_invertible_with, random_matrix, seeded, SeededRng};
use crate::algebra::{Field, Matrix};
use crate::families::{bruteforce_rank_decode, gabidulin_code, rank_weight, GabidulinParams};
use crate::codes::LinearCode;
use serde::{Deserialize, Serialize};

/// Public part: the disguised generator over GF(q^m) and the rank
/// correction capacity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GptPublic {
    pub g_pub: Matrix,
    pub t: usize,
}

/// G' = S [X | G] P with a Gabidulin secret code; P is invertible over
/// the base field, fixing rank weights.
#[derive(Debug, Clone)]
pub struct GptKeyPair {
    pub public: GptPublic,
    pub gab: GabidulinParams,
    pub code: LinearCode,
    pub s: Matrix,
    pub x: Matrix,
    pub p_base: Matrix,
}

/// Embed a base-field matrix into the extension field (encodings of
/// GF(p) elements coincide with their embeddings).
fn embed(ext: &Field, m: &Matrix) -> Matrix {
    Matrix::from_rows(ext, m.row_vecs())
}

pub fn gpt_from_parts(
    gab: GabidulinParams,
    t: usize,
    s: Matrix,
    x: Matrix,
    p_base: Matrix,
) -> Result<GptKeyPair, PkeError> {
    let ext = gab.field().clone();
    if s.inverse().is_none() || p_base.inverse().is_none() {
        return Err(PkeError::BadParams("S and P must be invertible".into()));
    }
    let code = gabidulin_code(&gab);
    let xg = x.hstack(code.generator());
    let g_pub = s.mul(&xg).mul(&embed(&ext, &p_base));
    Ok(GptKeyPair { public: GptPublic { g_pub, t }, gab, code, s, x, p_base })
}

/// Key generation at rank capacity t = floor((n - k) / 2).
pub fn gpt_keygen(gab: GabidulinParams, lambda: usize, seed: u64) -> GptKeyPair {
    let mut rng = seeded(seed);
    let ext = gab.field().clone();
    let base = ext.prime_subfield();
    let (n, k) = (gab.n(), gab.k());
    let t = (n - k) / 2;
    let s = random_invertible_with(&ext, k, &mut rng);
    let x = random_matrix(&ext, k, lambda, &mut rng);
    let p_base = random_invertible_with(&base, n + lambda, &mut rng);
    gpt_from_parts(gab, t, s, x, p_base).expect("sampled S, P invertible")
}

/// c = m G' + e for a rank-t error over GF(q^m).
pub fn gpt_encrypt(public: &GptPublic, m: &[u64], e: &[u64]) -> Result<Vec<u64>, PkeError> {
    let f = public.g_pub.field();
    if rank_weight(f, e) > public.t {
        return Err(PkeError::WeightTooHigh);
    }
    if m.len() != public.g_pub.rows() || e.len() != public.g_pub.cols() {
        return Err(PkeError::BadParams("dimension mismatch".into()));
    }
    Ok(f.vec_add(&public.g_pub.row_mul(m), e))
}

/// Random error of rank weight exactly t.
pub fn random_rank_error(field: &Field, n: usize, t: usize, rng: &mut SeededRng) -> Vec<u64> {
    use rand::Rng;
    loop {
        // pick t independent support elements, then coordinates in their span
        let basis: Vec<u64> = (0..t).map(|_| rng.gen_range(1..field.order())).collect();
        if rank_weight(field, &basis) != t {
            continue;
        }
        let e: Vec<u64> = (0..n)
            .map(|_| {
                let mut acc = 0u64;
                for &b in &basis {
                    let coef = rng.gen_range(0..field.characteristic());
                    acc = field.add(acc, field.mul(coef, b));
                }
                acc
            })
            .collect();
        if rank_weight(field, &e) == t {
            return e;
        }
    }
}

/// Undo P, rank-decode the last n coordinates, unscramble S.
pub fn gpt_decrypt(keys: &GptKeyPair, c: &[u64]) -> Result<Vec<u64>, PkeError> {
    let ext = keys.gab.field().clone();
    let p_inv = embed(&ext, &keys.p_base.inverse().expect("P invertible"));
    let c_prime = p_inv.row_mul(c);
    let lambda = c.len() - keys.gab.n();
    let tail = &c_prime[lambda..];
    let cw = bruteforce_rank_decode(&keys.code, tail, keys.public.t, 1 << 22)?;
    let ms = keys
        .code
        .generator()
        .solve_row(&cw)
        .map_err(|_| PkeError::DecodeFailure)?;
    let s_inv = keys.s.inverse().expect("S invertible");
    Ok(s_inv.row_mul(&ms))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// GF(32) with x = the class of z; helpers for readable vectors.
    fn f32() -> Field {
        Field::extension(2, 5).unwrap()
    }

    fn toy() -> GptKeyPair {
        let f = f32();
        let x_el = f.from_coeffs(&[0, 1]);
        let g = vec![1, x_el, f.pow(x_el, 2), f.pow(x_el, 3)];
        let gab = GabidulinParams::new(f.clone(), g, 2, 1).unwrap();
        let s = Matrix::from_rows(&f, vec![vec![1, x_el], vec![0, 1]]);
        let x_col = Matrix::from_rows(&f, vec![vec![1], vec![f.add(f.pow(x_el, 2), 1)]]);
        let base = Field::prime(2).unwrap();
        let p = Matrix::from_rows(
            &base,
            vec![
                vec![0, 0, 1, 0, 0],
                vec![1, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0],
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 0, 1, 0],
            ],
        );
        gpt_from_parts(gab, 1, s, x_col, p).unwrap()
    }

    fn el(coeffs: &[u64]) -> u64 {
        f32().from_coeffs(coeffs)
    }

    #[test]
    fn toy_replay() {
        let keys = toy();
        // G' = S [X | G] P as printed
        let expect = Matrix::from_rows(
            &f32(),
            vec![
                vec![
                    el(&[1, 1]),
                    el(&[0, 1, 0, 1]),
                    el(&[1, 1, 0, 1]),
                    el(&[0, 0, 1, 1, 1]),
                    1,
                ],
                vec![1, el(&[0, 0, 1]), el(&[1, 0, 1]), el(&[0, 1, 0, 1]), el(&[0, 0, 0, 0, 1])],
            ],
        );
        assert_eq!(keys.public.g_pub, expect);

        let m = vec![el(&[1, 1]), el(&[1, 0, 1])];
        let e = vec![el(&[1, 0, 0, 1]), 0, el(&[1, 0, 0, 1]), el(&[1, 0, 0, 1]), 0];
        assert_eq!(rank_weight(&f32(), &e), 1);
        let c = gpt_encrypt(&keys.public, &m, &e).unwrap();
        let expect_c = vec![
            el(&[1, 0, 0, 1]),
            el(&[0, 1, 0, 1]),
            el(&[1, 0, 1]),
            el(&[1, 1, 1, 1]),
            el(&[1, 0, 0, 1, 1]),
        ];
        assert_eq!(c, expect_c);

        // c P^-1 as printed, then rank decoding of the last 4 positions
        let p_inv = keys.p_base.inverse().unwrap();
        let c_prime = Matrix::from_rows(&f32(), p_inv.row_vecs()).row_mul(&c);
        let expect_cp = vec![
            el(&[1, 0, 1]),
            el(&[1, 0, 0, 1]),
            el(&[0, 1, 0, 1]),
            el(&[1, 0, 0, 1, 1]),
            el(&[1, 1, 1, 1]),
        ];
        assert_eq!(c_prime, expect_cp);
        let cw = bruteforce_rank_decode(&keys.code, &c_prime[1..], 1, 1 << 22).unwrap();
        let ms = keys.code.generator().solve_row(&cw).unwrap();
        assert_eq!(ms, vec![el(&[1, 1]), el(&[1, 1])]);
        assert_eq!(gpt_decrypt(&keys, &c).unwrap(), m);
    }

    #[test]
    fn zero_error_decrypts_linearly() {
        let keys = toy();
        let m = vec![el(&[0, 1]), el(&[1, 1, 1])];
        let c = gpt_encrypt(&keys.public, &m, &[0; 5]).unwrap();
        assert_eq!(gpt_decrypt(&keys, &c).unwrap(), m);
    }

    #[test]
    fn heavy_rank_error_rejected() {
        let keys = toy();
        let e = vec![1, el(&[0, 1]), 0, 0, 0]; // rank 2
        assert_eq!(
            gpt_encrypt(&keys.public, &[1, 1], &e),
            Err(PkeError::WeightTooHigh)
        );
    }

    #[test]
    fn random_round_trips() {
        let f = f32();
        let x_el = f.from_coeffs(&[0, 1]);
        let g = vec![1, x_el, f.pow(x_el, 2), f.pow(x_el, 3)];
        let gab = GabidulinParams::new(f.clone(), g, 2, 1).unwrap();
        let keys = gpt_keygen(gab, 1, 2024);
        let mut rng = seeded(5);
        for trial in 0..50u64 {
            let m = vec![(trial * 7 + 3) % 32, (trial * 11 + 1) % 32];
            let e = random_rank_error(&f, 5, 1, &mut rng);
            let c = gpt_encrypt(&keys.public, &m, &e).unwrap();
            assert_eq!(gpt_decrypt(&keys, &c).unwrap(), m, "trial {trial}");
        }
    }
}
