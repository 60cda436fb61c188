use super::Field;
use serde::{Deserialize, Serialize};

/// A univariate polynomial over a field, stored as coefficients c_0..c_d
/// with no trailing zeros (the zero polynomial has an empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<u64>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![1] }
    }

    pub fn x(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![0, 1] }
    }

    /// x^n - 1.
    pub fn x_pow_minus_one(field: &Field, n: usize) -> Poly {
        let mut c = vec![0u64; n + 1];
        c[0] = field.neg(1);
        c[n] = 1;
        Poly::new(field.clone(), c)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).unwrap();
        Poly::new(
            self.field.clone(),
            self.coeffs.iter().map(|&c| self.field.mul(inv, c)).collect(),
        )
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.field.add(self.coeff(i), other.coeff(i));
        }
        Poly::new(self.field.clone(), out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.field.sub(self.coeff(i), other.coeff(i));
        }
        Poly::new(self.field.clone(), out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] = f.add(out[i + j], f.mul(a, b));
                }
            }
        }
        Poly::new(f.clone(), out)
    }

    pub fn scale(&self, c: u64) -> Poly {
        Poly::new(
            self.field.clone(),
            self.coeffs.iter().map(|&a| self.field.mul(c, a)).collect(),
        )
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn divmod(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let f = &self.field;
        let dd = divisor.degree();
        if self.degree() < dd {
            return (Poly::zero(f), self.clone());
        }
        let lead_inv = f.inv(divisor.leading()).unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; (self.degree() - dd + 1) as usize];
        for i in (dd as usize..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let qc = f.mul(c, lead_inv);
            quot[i - dd as usize] = qc;
            for (j, &dj) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd as usize + j;
                rem[idx] = f.sub(rem[idx], f.mul(qc, dj));
            }
        }
        (Poly::new(f.clone(), quot), Poly::new(f.clone(), rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divmod(divisor).1
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let out = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let mult = ((i + 1) as u64) % f.characteristic();
                f.mul(mult % f.order(), c)
            })
            .collect();
        Poly::new(f.clone(), out)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() <= 0
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// Exhaustive low-degree factor search: tries every monic divisor of
    /// degree 1..=deg/2. Fine for the desk-scale degrees used here.
    pub fn is_irreducible(&self) -> bool {
        let d = self.degree();
        if d < 1 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let f = &self.field;
        let q = f.order();
        for fd in 1..=(d as usize / 2) {
            // all monic polynomials of degree fd
            let count = q.pow(fd as u32);
            for enc in 0..count {
                let mut coeffs = Vec::with_capacity(fd + 1);
                let mut v = enc;
                for _ in 0..fd {
                    coeffs.push(v % q);
                    v /= q;
                }
                coeffs.push(1);
                let cand = Poly::new(f.clone(), coeffs);
                if cand.divides(self) {
                    return false;
                }
            }
        }
        true
    }
}
