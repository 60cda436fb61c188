//! Wire formats: ciphertext hex packing and the JSON key envelope.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Pack a binary vector into lowercase hex, little-endian within bytes:
/// coordinate 0 is the least significant bit of the first byte.
pub fn pack_bits_hex(v: &[u64]) -> String {
    let mut bytes = vec![0u8; v.len().div_ceil(8)];
    for (i, &b) in v.iter().enumerate() {
        if b & 1 == 1 {
            bytes[i / 8] |= 1 << (i % 8);
        }
    }
    hex::encode(bytes)
}

/// Inverse of `pack_bits_hex` for a vector of known length.
pub fn unpack_bits_hex(s: &str, len: usize) -> Result<Vec<u64>, hex::FromHexError> {
    let bytes = hex::decode(s)?;
    Ok((0..len)
        .map(|i| u64::from(bytes.get(i / 8).map_or(0, |b| (b >> (i % 8)) & 1) == 1))
        .collect())
}

/// Pack a vector over a field with q <= 256 one byte per element.
pub fn pack_elements_hex(v: &[u64]) -> String {
    hex::encode(v.iter().map(|&x| x as u8).collect::<Vec<u8>>())
}

pub fn unpack_elements_hex(s: &str) -> Result<Vec<u64>, hex::FromHexError> {
    Ok(hex::decode(s)?.into_iter().map(u64::from).collect())
}

/// Hex packing keyed on the field size: bit-packed for GF(2), one byte
/// per element otherwise (fields used on the wire all have q <= 256).
pub fn pack_vector_hex(q: u64, v: &[u64]) -> String {
    if q == 2 {
        pack_bits_hex(v)
    } else {
        pack_elements_hex(v)
    }
}

pub fn unpack_vector_hex(q: u64, s: &str, len: usize) -> Result<Vec<u64>, hex::FromHexError> {
    if q == 2 {
        unpack_bits_hex(s, len)
    } else {
        unpack_elements_hex(s)
    }
}

/// The JSON envelope for key files: scheme tag, parameters, public part
/// and (for private key files) the secret part.
#[derive(Debug, Serialize, Deserialize)]
pub struct KeyEnvelope {
    pub scheme: String,
    pub params: serde_json::Value,
    pub public: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub secret: Option<serde_json::Value>,
}

/// Unrank a weight-t support on n positions in the combinatorial number
/// system: index x < C(n, t) maps to a unique t-subset. Used for the
/// fixed constant-weight message encodings.
pub fn unrank_support(n: usize, t: usize, x: &BigUint) -> Vec<usize> {
    let mut support = Vec::with_capacity(t);
    let mut x = x.clone();
    let mut n = n as u64;
    let mut t = t as u64;
    while t > 0 {
        // largest c with C(c, t) <= x
        let mut c = t - 1;
        while crate::estimate::binom(c + 1, t) <= x {
            c += 1;
        }
        support.push(c as usize);
        x -= crate::estimate::binom(c, t);
        n = c;
        t -= 1;
    }
    let _ = n;
    support.reverse();
    support
}

/// Rank of a support set, inverse of `unrank_support`.
pub fn rank_support(support: &[usize], t: usize) -> BigUint {
    let mut x = BigUint::zero();
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    for (i, &c) in sorted.iter().enumerate() {
        x += crate::estimate::binom(c as u64, i as u64 + 1);
    }
    let _ = t;
    x
}

/// A weight-t binary vector derived from arbitrary seed bytes: the byte
/// string is reduced modulo C(n, t) and unranked.
pub fn constant_weight_encode(n: usize, t: usize, seed_bytes: &[u8]) -> Vec<u64> {
    let total = crate::estimate::binom(n as u64, t as u64);
    let x = BigUint::from_bytes_le(seed_bytes) % total;
    let mut v = vec![0u64; n];
    for i in unrank_support(n, t, &x) {
        v[i] = 1;
    }
    v
}
