use super::{AlgebraError, Poly};
use serde::{Deserialize, Serialize};

/// A finite field GF(p^m), p prime, m >= 1.
///
/// Elements are passed around as `u64` encodings: the base-p digit expansion
/// of the encoding gives the coefficient vector of the element with respect
/// to the power basis 1, z, ..., z^(m-1) of the modulus polynomial. For
/// m = 1 the encoding is just the residue itself. Arithmetic works on the
/// coefficient vectors directly (no log tables), which keeps everything
/// exact and easy to audit at desk scale.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Field {
    p: u64,
    m: u32,
    /// Modulus coefficients c_0..c_m (monic, c_m = 1). Empty when m = 1.
    modulus: Vec<u64>,
    q: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Field { p, m: 1, modulus: Vec::new(), q: p })
    }

    /// GF(p^m) with the canonical modulus: the monic irreducible polynomial
    /// of degree m whose coefficient vector has the smallest base-p integer
    /// encoding. For p = 2 this picks z^3+z+1 for GF(8), z^5+z^2+1 for
    /// GF(32), z^6+z+1 for GF(64), and so on.
    pub fn extension(p: u64, m: u32) -> Result<Field, AlgebraError> {
        if m == 1 {
            return Field::prime(p);
        }
        let base = Field::prime(p)?;
        let q = p.checked_pow(m).expect("field size overflows u64");
        // Scan monic degree-m polynomials in encoding order; the low part
        // encodes c_0..c_(m-1).
        for low in 0..q {
            let mut coeffs: Vec<u64> = Vec::with_capacity(m as usize + 1);
            let mut v = low;
            for _ in 0..m {
                coeffs.push(v % p);
                v /= p;
            }
            coeffs.push(1);
            let cand = Poly::new(base.clone(), coeffs.clone());
            if cand.is_irreducible() {
                return Ok(Field { p, m, modulus: coeffs, q });
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    /// GF(p^m) with an explicit modulus, given as coefficients c_0..c_m.
    /// The modulus must be monic and irreducible (verified by exhaustive
    /// low-degree factor search).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Field, AlgebraError> {
        let base = Field::prime(p)?;
        let m = (modulus.len() - 1) as u32;
        if m < 1 || modulus.last() != Some(&1) || modulus.iter().any(|&c| c >= p) {
            return Err(AlgebraError::BadModulus);
        }
        if m == 1 {
            return Field::prime(p);
        }
        let poly = Poly::new(base, modulus.clone());
        if !poly.is_irreducible() {
            return Err(AlgebraError::NotIrreducible);
        }
        let q = p.checked_pow(m).expect("field size overflows u64");
        Ok(Field { p, m, modulus, q })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.m
    }

    /// Number of elements q = p^m.
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.modulus
    }

    /// The prime subfield GF(p).
    pub fn prime_subfield(&self) -> Field {
        Field { p: self.p, m: 1, modulus: Vec::new(), q: self.p }
    }

    pub fn contains(&self, x: u64) -> bool {
        x < self.q
    }

    /// Coefficient vector (length m) of an element over GF(p).
    pub fn coeffs(&self, x: u64) -> Vec<u64> {
        debug_assert!(self.contains(x));
        let mut v = x;
        let mut out = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    /// Inverse of `coeffs`.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> u64 {
        debug_assert!(coeffs.len() <= self.m as usize);
        let mut x = 0u64;
        for &c in coeffs.iter().rev() {
            debug_assert!(c < self.p);
            x = x * self.p + c;
        }
        x
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(self.contains(a) && self.contains(b));
        if self.m == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut out, mut pw) = (0u64, 1u64);
        let (mut a, mut b) = (a, b);
        for _ in 0..self.m {
            out += ((a + b) % self.p) * pw;
            a /= self.p;
            b /= self.p;
            pw *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(self.contains(a));
        if self.m == 1 {
            return (self.p - a) % self.p;
        }
        if self.p == 2 {
            return a;
        }
        let (mut out, mut pw) = (0u64, 1u64);
        let mut a = a;
        for _ in 0..self.m {
            out += ((self.p - a % self.p) % self.p) * pw;
            a /= self.p;
            pw *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(self.contains(a) && self.contains(b));
        if self.m == 1 {
            return (a as u128 * b as u128 % self.p as u128) as u64;
        }
        let m = self.m as usize;
        let (ac, bc) = (self.coeffs(a), self.coeffs(b));
        // Schoolbook convolution, then reduction by the monic modulus.
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &ai) in ac.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in bc.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            // z^i = z^(i-m) * (-(c_0 + c_1 z + ... + c_(m-1) z^(m-1)))
            for j in 0..m {
                let sub = c * self.modulus[j] % self.p;
                prod[i - m + j] = (prod[i - m + j] + self.p - sub) % self.p;
            }
        }
        self.from_coeffs(&prod[..m])
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64, AlgebraError> {
        if a == 0 {
            return Err(AlgebraError::InverseOfZero);
        }
        // a^(q-2); exponentiation keeps this simple and exact.
        Ok(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64, AlgebraError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The Frobenius power a^(p^i).
    pub fn frobenius(&self, a: u64, i: u32) -> u64 {
        let mut e = 1u64;
        for _ in 0..(i % self.m) {
            e = e.checked_mul(self.p).expect("frobenius exponent overflow");
        }
        self.pow(a, e)
    }

    /// Element with encoding `x`; panics if out of range.
    pub fn el(&self, x: u64) -> FieldElement {
        assert!(self.contains(x), "element {x} out of range");
        FieldElement { field: self.clone(), value: x }
    }

    // --- vector helpers (element encodings) ---

    pub fn vec_add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn vec_sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn vec_scale(&self, c: u64, a: &[u64]) -> Vec<u64> {
        a.iter().map(|&x| self.mul(c, x)).collect()
    }

    /// Component-wise (Schur) product.
    pub fn vec_star(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(&x, &y)| self.mul(x, y)).collect()
    }

    pub fn dot(&self, a: &[u64], b: &[u64]) -> u64 {
        assert_eq!(a.len(), b.len());
        let mut acc = 0u64;
        for (&x, &y) in a.iter().zip(b) {
            acc = self.add(acc, self.mul(x, y));
        }
        acc
    }
}

/// An element paired with its owning field; the checked public face of
/// element arithmetic. Hot paths use raw `u64` encodings plus a `&Field`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u64,
}

impl FieldElement {
    pub fn new(field: &Field, value: u64) -> Result<Self, AlgebraError> {
        if !field.contains(value) {
            return Err(AlgebraError::OutOfRange(value));
        }
        Ok(FieldElement { field: field.clone(), value })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> Vec<u64> {
        self.field.coeffs(self.value)
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::MixedFields);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(FieldElement { field: self.field.clone(), value: self.field.add(self.value, other.value) })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(FieldElement { field: self.field.clone(), value: self.field.mul(self.value, other.value) })
    }

    pub fn neg(&self) -> Self {
        FieldElement { field: self.field.clone(), value: self.field.neg(self.value) }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        Ok(FieldElement { field: self.field.clone(), value: self.field.inv(self.value)? })
    }
}
