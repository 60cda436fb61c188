//! Linear codes presented by a generator or parity-check matrix, the
//! transforms between them (dual, puncture, shorten, Schur products) and
//! the exhaustive baselines (minimum distance, nearest codeword) that act
//! as oracles for the decoders and attack modules.

use crate::algebra::{weight, Field, Matrix};
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum CodesError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("operation would leave a zero-dimensional code")]
    EmptyCode,
    #[error("enumeration of {0} codewords exceeds the budget")]
    TooLarge(u128),
    #[error("codes have different lengths")]
    LengthMismatch,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("presented matrix does not have full rank")]
    NotFullRank,
}

/// Default cap on brute-force codeword enumerations.
pub const ENUM_BUDGET: u128 = 1 << 24;

/// An \[n, k\] linear code over a finite field.
///
/// A code is constructed from one presentation (generator or parity-check
/// matrix); the complementary presentation is derived lazily by row
/// reduction and cached. Values are immutable after construction and safe
/// to share across threads.
#[derive(Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    k: usize,
    gen: OnceLock<Matrix>,
    pc: OnceLock<Matrix>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        let c = LinearCode {
            field: self.field.clone(),
            n: self.n,
            k: self.k,
            gen: OnceLock::new(),
            pc: OnceLock::new(),
        };
        if let Some(g) = self.gen.get() {
            let _ = c.gen.set(g.clone());
        }
        if let Some(h) = self.pc.get() {
            let _ = c.pc.set(h.clone());
        }
        c
    }
}

impl PartialEq for LinearCode {
    /// Equality of codes as sets, i.e. of generator row spaces.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.k == other.k
            && self.generator().same_row_space(other.generator())
    }
}

impl LinearCode {
    pub fn from_generator(g: Matrix) -> Result<LinearCode, CodesError> {
        let (k, n) = (g.rows(), g.cols());
        if k == 0 || k > n {
            return Err(CodesError::DimMismatch(format!("{k} x {n} generator")));
        }
        if g.rank() != k {
            return Err(CodesError::NotFullRank);
        }
        let code = LinearCode {
            field: g.field().clone(),
            n,
            k,
            gen: OnceLock::new(),
            pc: OnceLock::new(),
        };
        code.gen.set(g).unwrap();
        Ok(code)
    }

    pub fn from_parity_check(h: Matrix) -> Result<LinearCode, CodesError> {
        let (r, n) = (h.rows(), h.cols());
        if r >= n {
            return Err(CodesError::DimMismatch(format!("{r} x {n} parity check")));
        }
        if h.rank() != r {
            return Err(CodesError::NotFullRank);
        }
        let code = LinearCode {
            field: h.field().clone(),
            n,
            k: n - r,
            gen: OnceLock::new(),
            pc: OnceLock::new(),
        };
        code.pc.set(h).unwrap();
        Ok(code)
    }

    /// Code spanned by the rows of `m`, which may be linearly dependent;
    /// the dimension is the rank of `m`.
    pub fn from_span(m: &Matrix) -> Result<LinearCode, CodesError> {
        let res = m.rref();
        let k = res.pivots.len();
        if k == 0 {
            return Err(CodesError::EmptyCode);
        }
        let rows: Vec<Vec<u64>> = res.r.row_vecs().into_iter().take(k).collect();
        LinearCode::from_generator(Matrix::from_rows(m.field(), rows))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Matrix {
        self.gen.get_or_init(|| {
            let h = self.pc.get().expect("one presentation always exists");
            let g = h.kernel_basis();
            debug_assert_eq!(g.rows(), self.k);
            g
        })
    }

    pub fn parity_check(&self) -> &Matrix {
        self.pc.get_or_init(|| {
            let g = self.gen.get().expect("one presentation always exists");
            let h = g.kernel_basis();
            debug_assert_eq!(h.rows(), self.n - self.k);
            h
        })
    }

    pub fn encode(&self, m: &[u64]) -> Result<Vec<u64>, CodesError> {
        if m.len() != self.k {
            return Err(CodesError::DimMismatch(format!(
                "message length {} != dimension {}",
                m.len(),
                self.k
            )));
        }
        Ok(self.generator().row_mul(m))
    }

    /// Syndrome x H^T; zero exactly on codewords.
    pub fn syndrome(&self, x: &[u64]) -> Result<Vec<u64>, CodesError> {
        if x.len() != self.n {
            return Err(CodesError::DimMismatch(format!(
                "vector length {} != code length {}",
                x.len(),
                self.n
            )));
        }
        Ok(self.parity_check().mul_col(x))
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        matches!(self.syndrome(x), Ok(s) if s.iter().all(|&v| v == 0))
    }

    pub fn dual(&self) -> LinearCode {
        let c = LinearCode {
            field: self.field.clone(),
            n: self.n,
            k: self.n - self.k,
            gen: OnceLock::new(),
            pc: OnceLock::new(),
        };
        c.gen.set(self.parity_check().clone()).unwrap();
        if let Some(g) = self.gen.get() {
            let _ = c.pc.set(g.clone());
        }
        c
    }

    /// Delete the coordinates in `t_set` from every codeword.
    pub fn puncture(&self, t_set: &[usize]) -> Result<LinearCode, CodesError> {
        let keep: Vec<usize> = (0..self.n).filter(|j| !t_set.contains(j)).collect();
        if keep.is_empty() {
            return Err(CodesError::EmptyCode);
        }
        LinearCode::from_span(&self.generator().columns(&keep))
    }

    /// Restrict to the codewords vanishing on `t_set`, then puncture there.
    pub fn shorten(&self, t_set: &[usize]) -> Result<LinearCode, CodesError> {
        if t_set.is_empty() {
            return Ok(self.clone());
        }
        let g = self.generator();
        let gt = g.columns(t_set);
        // messages x with x * G_T = 0
        let sub = gt.transpose().kernel_basis();
        if sub.rows() == 0 {
            return Err(CodesError::EmptyCode);
        }
        let keep: Vec<usize> = (0..self.n).filter(|j| !t_set.contains(j)).collect();
        let rows: Vec<Vec<u64>> = (0..sub.rows())
            .map(|i| {
                let cw = g.row_mul(sub.row(i));
                keep.iter().map(|&j| cw[j]).collect()
            })
            .collect();
        LinearCode::from_span(&Matrix::from_rows(&self.field, rows))
    }

    /// Number of codewords as a u128, for budget checks.
    pub fn size(&self) -> u128 {
        (self.field.order() as u128).pow(self.k as u32)
    }

    /// Enumerate every codeword. Message counters decode big-endian so the
    /// enumeration is in lexicographic message order.
    pub fn all_codewords(&self, budget: u128) -> Result<Vec<Vec<u64>>, CodesError> {
        let total = self.size();
        if total > budget {
            return Err(CodesError::TooLarge(total));
        }
        let mut out = Vec::with_capacity(total as usize);
        let mut counter = 0u128;
        while counter < total {
            out.push(self.generator().row_mul(&self.message_from_counter(counter)));
            counter += 1;
        }
        Ok(out)
    }

    fn message_from_counter(&self, counter: u128) -> Vec<u64> {
        let q = self.field.order() as u128;
        let mut m = vec![0u64; self.k];
        let mut c = counter;
        for i in (0..self.k).rev() {
            m[i] = (c % q) as u64;
            c /= q;
        }
        m
    }

    /// Exact minimum Hamming distance by exhausting all nonzero codewords.
    pub fn min_distance_bruteforce(&self, budget: u128) -> Result<usize, CodesError> {
        let total = self.size();
        if total > budget {
            return Err(CodesError::TooLarge(total));
        }
        let mut best = self.n + 1;
        for counter in 1..total {
            let w = weight(&self.generator().row_mul(&self.message_from_counter(counter)));
            if w > 0 && w < best {
                best = w;
            }
        }
        Ok(best)
    }

    /// Codeword counts per Hamming weight (index = weight).
    pub fn weight_distribution(&self, budget: u128) -> Result<Vec<u64>, CodesError> {
        let mut dist = vec![0u64; self.n + 1];
        for cw in self.all_codewords(budget)? {
            dist[weight(&cw)] += 1;
        }
        Ok(dist)
    }

    /// Closest codeword to `x` and its distance, exhaustively; ties are
    /// broken towards the lexicographically smallest message.
    pub fn nearest_codeword_bruteforce(
        &self,
        x: &[u64],
        budget: u128,
    ) -> Result<(Vec<u64>, usize), CodesError> {
        if x.len() != self.n {
            return Err(CodesError::DimMismatch(format!(
                "vector length {} != code length {}",
                x.len(),
                self.n
            )));
        }
        let total = self.size();
        if total > budget {
            return Err(CodesError::TooLarge(total));
        }
        let mut best: Option<(Vec<u64>, usize)> = None;
        for counter in 0..total {
            let cw = self.generator().row_mul(&self.message_from_counter(counter));
            let d = crate::algebra::hamming_distance(&cw, x);
            if best.as_ref().is_none_or(|(_, bd)| d < *bd) {
                best = Some((cw, d));
            }
        }
        Ok(best.expect("at least the zero codeword exists"))
    }
}

/// Span of all coordinatewise products of codewords of `c1` and `c2`.
pub fn schur_product(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode, CodesError> {
    if c1.length() != c2.length() {
        return Err(CodesError::LengthMismatch);
    }
    if c1.field() != c2.field() {
        return Err(CodesError::FieldMismatch("Schur product operands".into()));
    }
    let f = c1.field();
    let (g1, g2) = (c1.generator(), c2.generator());
    let mut rows = Vec::with_capacity(g1.rows() * g2.rows());
    for i in 0..g1.rows() {
        for j in 0..g2.rows() {
            rows.push(f.vec_star(g1.row(i), g2.row(j)));
        }
    }
    LinearCode::from_span(&Matrix::from_rows(f, rows))
}

/// The square code C * C.
pub fn square_code(c: &LinearCode) -> Result<LinearCode, CodesError> {
    schur_product(c, c)
}

/// Concatenated encoding: the outer code lives over GF(q^k1), the inner
/// code over GF(q) with dimension k1, and each outer symbol is expanded to
/// its coefficient vector and encoded with the inner code.
pub fn concat_encode(
    outer: &LinearCode,
    inner: &LinearCode,
    m: &[u64],
) -> Result<Vec<u64>, CodesError> {
    let k1 = inner.dimension();
    let of = outer.field();
    if of.prime_subfield() != *inner.field() || of.extension_degree() as usize != k1 {
        return Err(CodesError::FieldMismatch(
            "inner dimension must equal the outer field's extension degree".into(),
        ));
    }
    let outer_word = outer.encode(m)?;
    let mut out = Vec::with_capacity(outer.length() * inner.length());
    for sym in outer_word {
        let bar = of.coeffs(sym);
        out.extend(inner.encode(&bar)?);
    }
    Ok(out)
}

/// A vector bundled with its cached Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedVector {
    vec: Vec<u64>,
    weight: usize,
}

impl WeightedVector {
    pub fn new(vec: Vec<u64>) -> Self {
        let weight = weight(&vec);
        WeightedVector { vec, weight }
    }

    pub fn vec(&self) -> &[u64] {
        &self.vec
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.vec
    }
}
