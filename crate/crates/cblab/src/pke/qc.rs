use super::PkeError;
use crate::algebra::rng::{random_vec, random_weight_vec, seeded};
use crate::algebra::{weight, Field};
use crate::families::DecodableCode;
use serde::{Deserialize, Serialize};

/// The polynomial ring GF(p)\[x\]/(x^n - 1); elements are coefficient
/// vectors of length n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QcRing {
    field: Field,
    n: usize,
}

impl QcRing {
    pub fn new(field: Field, n: usize) -> QcRing {
        assert_eq!(field.extension_degree(), 1, "the ring uses a prime field");
        QcRing { field, n }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.n]
    }

    /// The monomial x^i.
    pub fn monomial(&self, i: usize) -> Vec<u64> {
        let mut v = self.zero();
        v[i % self.n] = 1;
        v
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.field.vec_add(a, b)
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.field.vec_sub(a, b)
    }

    /// Cyclic convolution a(x) b(x) mod x^n - 1.
    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        assert_eq!(a.len(), self.n);
        assert_eq!(b.len(), self.n);
        let f = &self.field;
        let mut out = self.zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    let idx = (i + j) % self.n;
                    out[idx] = f.add(out[idx], f.mul(ai, bj));
                }
            }
        }
        out
    }

    /// Parse a list of (coefficient, exponent) pairs.
    pub fn from_terms(&self, terms: &[(u64, usize)]) -> Vec<u64> {
        let mut v = self.zero();
        for &(c, e) in terms {
            v[e % self.n] = self.field.add(v[e % self.n], c);
        }
        v
    }
}

/// Public part of the quasi-cyclic scheme: the decodable code (its
/// generator is public), the random ring element h, the masked secret
/// s = y + h z, and the noise weights.
#[derive(Debug, Clone)]
pub struct QcPublic {
    pub code: DecodableCode,
    pub ring: QcRing,
    pub h: Vec<u64>,
    pub s: Vec<u64>,
    pub w_e: usize,
    pub w_r: usize,
}

#[derive(Debug, Clone)]
pub struct QcKeyPair {
    pub public: QcPublic,
    pub y: Vec<u64>,
    pub z: Vec<u64>,
}

/// Key generation over a registered decodable code of length n = ring
/// degree: draw h at random and the secret (y, z) of weight w each.
pub fn qc_keygen(
    code: DecodableCode,
    w: usize,
    w_e: usize,
    w_r: usize,
    seed: u64,
) -> QcKeyPair {
    let ring = QcRing::new(code.code.field().clone(), code.code.length());
    let mut rng = seeded(seed);
    let h = random_vec(ring.field(), ring.n(), &mut rng);
    let y = random_weight_vec(ring.field(), ring.n(), w, &mut rng);
    let z = random_weight_vec(ring.field(), ring.n(), w, &mut rng);
    let s = ring.add(&y, &ring.mul(&h, &z));
    QcKeyPair { public: QcPublic { code, ring, h, s, w_e, w_r }, y, z }
}

/// Build a key pair from explicit components (for pinned examples).
pub fn qc_from_parts(
    code: DecodableCode,
    h: Vec<u64>,
    y: Vec<u64>,
    z: Vec<u64>,
    w_e: usize,
    w_r: usize,
) -> QcKeyPair {
    let ring = QcRing::new(code.code.field().clone(), code.code.length());
    let s = ring.add(&y, &ring.mul(&h, &z));
    QcKeyPair { public: QcPublic { code, ring, h, s, w_e, w_r }, y, z }
}

/// Encrypt with explicit noise: u = r1 + h r2 and v = m G + s r2 + e.
pub fn qc_encrypt_with(
    public: &QcPublic,
    m: &[u64],
    e: &[u64],
    r1: &[u64],
    r2: &[u64],
) -> Result<(Vec<u64>, Vec<u64>), PkeError> {
    if weight(e) != public.w_e || weight(r1) != public.w_r || weight(r2) != public.w_r {
        return Err(PkeError::WeightTooHigh);
    }
    let ring = &public.ring;
    let u = ring.add(r1, &ring.mul(&public.h, r2));
    let mg = public.code.code.encode(m).map_err(|e| PkeError::BadParams(e.to_string()))?;
    let v = ring.add(&ring.add(&mg, &ring.mul(&public.s, r2)), e);
    Ok((u, v))
}

/// Encrypt with seeded noise of the declared weights.
pub fn qc_encrypt(
    public: &QcPublic,
    m: &[u64],
    seed: u64,
) -> Result<(Vec<u64>, Vec<u64>), PkeError> {
    let mut rng = seeded(seed);
    let f = public.ring.field();
    let n = public.ring.n();
    let e = random_weight_vec(f, n, public.w_e, &mut rng);
    let r1 = random_weight_vec(f, n, public.w_r, &mut rng);
    let r2 = random_weight_vec(f, n, public.w_r, &mut rng);
    qc_encrypt_with(public, m, &e, &r1, &r2)
}

/// Decrypt: decode v - u z. Failure here is the scheme's legitimate
/// decoding-failure event; callers count it towards the DFR.
pub fn qc_decrypt(keys: &QcKeyPair, cipher: &(Vec<u64>, Vec<u64>)) -> Result<Vec<u64>, PkeError> {
    let ring = &keys.public.ring;
    let (u, v) = cipher;
    let c_prime = ring.sub(v, &ring.mul(u, &keys.z));
    let cw = keys.public.code.decode(&c_prime)?;
    Ok(keys.public.code.unencode(&cw)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{Decoder, MdpcParams};

    fn toy() -> QcKeyPair {
        // R = GF(2)[x]/(x^7 - 1) with the repetition code: h = 1 + x + x^2,
        // secret (1, x^3), all weights 1
        let code = DecodableCode::repetition(7);
        let ring = QcRing::new(Field::prime(2).unwrap(), 7);
        let h = ring.from_terms(&[(1, 0), (1, 1), (1, 2)]);
        let y = ring.monomial(0);
        let z = ring.monomial(3);
        qc_from_parts(code, h, y, z, 1, 1)
    }

    #[test]
    fn toy_replay() {
        let keys = toy();
        let ring = keys.public.ring.clone();
        // s = y + h z = 1 + x^3 + x^4 + x^5
        assert_eq!(
            keys.public.s,
            ring.from_terms(&[(1, 0), (1, 3), (1, 4), (1, 5)])
        );
        let e = ring.monomial(1);
        let r = ring.monomial(2);
        let (u, v) = qc_encrypt_with(&keys.public, &[1], &e, &r, &r).unwrap();
        assert_eq!(u, vec![0, 0, 0, 1, 1, 0, 0]);
        assert_eq!(v, vec![0, 0, 0, 1, 1, 0, 0]);
        // decryption: v - u z = (1,0,0,1,1,0,1), majority-decoded to the
        // all-ones codeword
        let c_prime = ring.sub(&v, &ring.mul(&u, &keys.z));
        assert_eq!(c_prime, vec![1, 0, 0, 1, 1, 0, 1]);
        assert_eq!(qc_decrypt(&keys, &(u, v)).unwrap(), vec![1]);
    }

    #[test]
    fn toy_exercise_alternate_randomness() {
        // same public data, fresh noise e = x^4, r1 = 1, r2 = x: the
        // effective error y r2 - r1 z + e has weight 3 = t, so the
        // decryption still succeeds
        let keys = toy();
        let ring = keys.public.ring.clone();
        let e = ring.monomial(4);
        let r1 = ring.monomial(0);
        let r2 = ring.monomial(1);
        let noise = ring.add(
            &ring.sub(&ring.mul(&keys.y, &r2), &ring.mul(&r1, &keys.z)),
            &e,
        );
        assert_eq!(weight(&noise), 3);
        let (u, v) = qc_encrypt_with(&keys.public, &[1], &e, &r1, &r2).unwrap();
        assert_eq!(qc_decrypt(&keys, &(u, v)).unwrap(), vec![1]);
    }

    #[test]
    fn zero_randomness_zero_message() {
        let keys = toy();
        let ring = keys.public.ring.clone();
        // weights must match the declared parameters, so pass monomials
        // but a zero message: the cipher decodes back to zero
        let e = ring.monomial(6);
        let r = ring.monomial(5);
        let (u, v) = qc_encrypt_with(&keys.public, &[0], &e, &r, &r).unwrap();
        assert_eq!(qc_decrypt(&keys, &(u, v)).unwrap(), vec![0]);
    }

    #[test]
    fn correctness_identity_is_algebraic() {
        // v - u z = m G + (y r2 - r1 z + e) holds for every input
        let keys = qc_keygen(DecodableCode::repetition(7), 2, 1, 2, 11);
        let ring = keys.public.ring.clone();
        let mut rng = seeded(3);
        for _ in 0..100 {
            let m = random_vec(ring.field(), 1, &mut rng);
            let e = random_weight_vec(ring.field(), 7, 1, &mut rng);
            let r1 = random_weight_vec(ring.field(), 7, 2, &mut rng);
            let r2 = random_weight_vec(ring.field(), 7, 2, &mut rng);
            let (u, v) = qc_encrypt_with(&keys.public, &m, &e, &r1, &r2).unwrap();
            let lhs = ring.sub(&v, &ring.mul(&u, &keys.z));
            let mg = keys.public.code.code.encode(&m).unwrap();
            let noise = ring.add(
                &ring.sub(&ring.mul(&keys.y, &r2), &ring.mul(&r1, &keys.z)),
                &e,
            );
            assert_eq!(lhs, ring.add(&mg, &noise));
        }
    }

    #[test]
    fn decryption_succeeds_iff_noise_fits_for_repetition() {
        let keys = qc_keygen(DecodableCode::repetition(7), 1, 1, 1, 42);
        let ring = keys.public.ring.clone();
        let t = keys.public.code.t;
        let mut rng = seeded(9);
        for _ in 0..200 {
            let m = random_vec(ring.field(), 1, &mut rng);
            let e = random_weight_vec(ring.field(), 7, 1, &mut rng);
            let r1 = random_weight_vec(ring.field(), 7, 1, &mut rng);
            let r2 = random_weight_vec(ring.field(), 7, 1, &mut rng);
            let noise = ring.add(
                &ring.sub(&ring.mul(&keys.y, &r2), &ring.mul(&r1, &keys.z)),
                &e,
            );
            let (u, v) = qc_encrypt_with(&keys.public, &m, &e, &r1, &r2).unwrap();
            let got = qc_decrypt(&keys, &(u, v));
            if weight(&noise) <= t {
                assert_eq!(got.unwrap(), m);
            } else {
                // majority decoding is exact for the repetition code
                assert_ne!(got.unwrap(), m);
            }
        }
    }

    #[test]
    fn mdpc_configuration_dfr_below_calibrated_bound() {
        // MDPC-backed configuration: block size 13 (n = 26), parity row
        // weight 4, noise weights 1. Measured over 400 seeded trials the
        // failure rate stays below the 5% calibration bound.
        let mut failures = 0u32;
        let trials = 400u32;
        for seed in 0..trials {
            let mut rng = seeded(u64::from(seed));
            let p = MdpcParams::new(2, 13, 4).unwrap();
            // weight-2 circulant blocks can be rank deficient; resample
            let code = loop {
                let h = p.sample_parity_check(&mut rng);
                if let Ok(code) = crate::codes::LinearCode::from_parity_check(h) {
                    break code;
                }
            };
            let k = code.dimension();
            let dc = DecodableCode {
                code,
                t: 2,
                decoder: Decoder::BitFlip { threshold: None, max_iters: 30 },
            };
            let keys = qc_keygen(dc, 1, 1, 1, u64::from(seed) + 1000);
            let m = random_vec(keys.public.ring.field(), k, &mut rng);
            let c = qc_encrypt(&keys.public, &m, u64::from(seed) + 2000).unwrap();
            match qc_decrypt(&keys, &c) {
                Ok(got) if got == m => {}
                _ => failures += 1,
            }
        }
        let rate = f64::from(failures) / f64::from(trials);
        assert!(rate < 0.05, "MDPC QC configuration DFR {rate}");
    }
}
