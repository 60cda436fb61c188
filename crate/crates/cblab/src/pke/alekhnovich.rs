use super::PkeError;
use crate::algebra::rng::{random_matrix, random_vec, random_weight_vec, seeded, SeededRng};
use crate::algebra::{Field, Matrix};
use serde::{Deserialize, Serialize};

/// Public part of the first Alekhnovich variant: a generator of the
/// kernel code and the weight parameter.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlekhnovichPublic {
    pub g: Matrix,
    pub t: usize,
}

/// The secret is nothing but the planted error vector, which lies in the
/// dual of the published code.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlekhnovichKeyPair {
    pub public: AlekhnovichPublic,
    pub e: Vec<u64>,
}

/// Key generation per the first variant: H stacks a random matrix A with
/// one erroneous codeword x A + e, and the published code is ker(H).
/// Requires the low-noise regime t^2 < n.
pub fn alekhnovich1_keygen(n: usize, k: usize, t: usize, seed: u64) -> Result<AlekhnovichKeyPair, PkeError> {
    if t * t >= n {
        return Err(PkeError::BadParams(format!("need t^2 < n, got t={t}, n={n}")));
    }
    let f2 = Field::prime(2).unwrap();
    let mut rng = seeded(seed);
    loop {
        let a = random_matrix(&f2, k, n, &mut rng);
        let x = random_vec(&f2, k, &mut rng);
        let e = random_weight_vec(&f2, n, t, &mut rng);
        let y = f2.vec_add(&a.row_mul(&x), &e);
        let h = a.vstack(&Matrix::from_rows(&f2, vec![y]));
        let g = h.kernel_basis();
        if g.rows() == 0 {
            continue;
        }
        debug_assert!(g.row_vecs().iter().all(|r| f2.dot(r, &e) == 0));
        return Ok(AlekhnovichKeyPair { public: AlekhnovichPublic { g, t }, e });
    }
}

/// Build the toy-example key pair from an explicit A, x, e.
pub fn alekhnovich1_from_parts(a: Matrix, x: &[u64], e: Vec<u64>, t: usize) -> AlekhnovichKeyPair {
    let f2 = a.field().clone();
    let y = f2.vec_add(&a.row_mul(x), &e);
    let h = a.vstack(&Matrix::from_rows(&f2, vec![y]));
    let g = h.kernel_basis();
    AlekhnovichKeyPair { public: AlekhnovichPublic { g, t }, e }
}

/// Encrypt one bit: 0 becomes an erroneous codeword of the published
/// code, 1 becomes a uniformly random vector.
pub fn alekhnovich1_encrypt_bit(
    public: &AlekhnovichPublic,
    bit: u64,
    rng: &mut SeededRng,
) -> Vec<u64> {
    let f2 = public.g.field().clone();
    let n = public.g.cols();
    if bit == 0 {
        let a = random_vec(&f2, public.g.rows(), rng);
        let e_prime = random_weight_vec(&f2, n, public.t, rng);
        f2.vec_add(&public.g.row_mul(&a), &e_prime)
    } else {
        random_vec(&f2, n, rng)
    }
}

/// Decrypt one bit as the inner product with the secret error vector:
/// 0 decrypts correctly whenever <e, e'> = 0; an encryption of 1 reads
/// as 1 with probability 1/2 per trial.
pub fn alekhnovich1_decrypt_bit(keys: &AlekhnovichKeyPair, c: &[u64]) -> u64 {
    keys.public.g.field().dot(&keys.e, c)
}

/// Repetition encoding: `reps` independent encryptions of the same bit.
pub fn alekhnovich1_encrypt_repeated(
    public: &AlekhnovichPublic,
    bit: u64,
    reps: usize,
    rng: &mut SeededRng,
) -> Vec<Vec<u64>> {
    (0..reps).map(|_| alekhnovich1_encrypt_bit(public, bit, rng)).collect()
}

/// Decode a repetition bundle: declare 1 as soon as any single
/// inner product fires. A 1-bundle reads as 0 only if all `reps` fair
/// coins land zero (probability 2^-reps), while a 0-bundle stays 0
/// whenever the low-noise inner products <e, e'> all vanish.
pub fn alekhnovich1_decrypt_repeated(keys: &AlekhnovichKeyPair, bundle: &[Vec<u64>]) -> u64 {
    u64::from(bundle.iter().any(|c| alekhnovich1_decrypt_bit(keys, c) == 1))
}
