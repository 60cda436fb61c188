use super::FamiliesError;
use crate::algebra::{Field, Matrix};
use crate::codes::LinearCode;
use serde::{Deserialize, Serialize};

/// Expand a vector over GF(p^m) into its n x m coefficient matrix over
/// GF(p); row i holds the coefficient vector of the i-th entry.
pub fn expand(field: &Field, x: &[u64]) -> Matrix {
    let base = field.prime_subfield();
    let rows = x.iter().map(|&e| field.coeffs(e)).collect();
    let mut m = Matrix::from_rows(&base, rows);
    if x.is_empty() {
        m = Matrix::zeros(&base, 0, field.extension_degree() as usize);
    }
    m
}

/// Rank weight: the GF(p)-dimension of the span of the entries,
/// basis-independent.
pub fn rank_weight(field: &Field, x: &[u64]) -> usize {
    if x.is_empty() {
        return 0;
    }
    expand(field, x).rank()
}

/// A basis of the rank support (the GF(p)-span of the entries), returned
/// as field elements.
pub fn rank_support(field: &Field, x: &[u64]) -> Vec<u64> {
    let exp = expand(field, x);
    let res = exp.rref();
    (0..res.pivots.len())
        .map(|i| field.from_coeffs(res.r.row(i)))
        .collect()
}

/// The s-Moore matrix with entry (i, j) = g_j^(p^(s i)).
pub fn moore_matrix(field: &Field, s: u32, k: usize, g: &[u64]) -> Matrix {
    let mut m = Matrix::zeros(field, k, g.len());
    for (j, &gj) in g.iter().enumerate() {
        for i in 0..k {
            m.set(i, j, field.frobenius(gj, s * i as u32));
        }
    }
    m
}

/// A generalized Gabidulin code: the row span of the s-Moore matrix of
/// points that are linearly independent over the prime subfield.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GabidulinParams {
    field: Field,
    g: Vec<u64>,
    k: usize,
    s: u32,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl GabidulinParams {
    pub fn new(field: Field, g: Vec<u64>, k: usize, s: u32) -> Result<GabidulinParams, FamiliesError> {
        let n = g.len();
        let m = field.extension_degree() as usize;
        if k == 0 || k > n || n > m {
            return Err(FamiliesError::BadParams(format!(
                "need 0 < k <= n <= m, got k={k}, n={n}, m={m}"
            )));
        }
        if gcd(s as u64, m as u64) != 1 {
            return Err(FamiliesError::BadParams(format!("s={s} not coprime to m={m}")));
        }
        if rank_weight(&field, &g) != n {
            return Err(FamiliesError::DependentPoints);
        }
        Ok(GabidulinParams { field, g, k, s })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.g.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> Matrix {
        moore_matrix(&self.field, self.s, self.k, &self.g)
    }
}

/// The code generated by the Moore matrix of the parameters.
pub fn gabidulin_code(p: &GabidulinParams) -> LinearCode {
    LinearCode::from_generator(p.generator()).expect("Moore matrices of independent points have full rank")
}

/// All u-dimensional GF(p)-subspaces of GF(p^m), each given by a canonical
/// (row-reduced) basis of field elements.
pub fn subspaces_of_dim(field: &Field, u: usize, budget: u128) -> Result<Vec<Vec<u64>>, FamiliesError> {
    let m = field.extension_degree() as usize;
    if u == 0 {
        return Ok(vec![vec![]]);
    }
    if u > m {
        return Ok(vec![]);
    }
    let q = field.order();
    // crude budget estimate: subsets of nonzero elements examined
    let mut subsets = 1u128;
    for i in 0..u {
        subsets = subsets.saturating_mul((q - 1 - i as u64) as u128) / (i as u128 + 1);
    }
    if subsets > budget {
        return Err(FamiliesError::TooLarge);
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let max = q - 1; // candidates are the nonzero elements 1..=max
    let mut idx: Vec<u64> = (1..=u as u64).collect();
    'combos: loop {
        if rank_weight(field, &idx) == u {
            let canon = rank_support(field, &idx);
            if seen.insert(canon.clone()) {
                out.push(canon);
            }
        }
        let mut i = u;
        while i > 0 {
            i -= 1;
            let cap = max - (u as u64 - 1 - i as u64);
            if idx[i] < cap {
                idx[i] += 1;
                for j in i + 1..u {
                    idx[j] = idx[j - 1] + 1;
                }
                continue 'combos;
            }
        }
        break;
    }
    Ok(out)
}

/// Exhaustive rank-metric decoding: enumerate error supports of dimension
/// up to `t` and solve the syndrome equations over the prime subfield for
/// an error confined to each support.
pub fn bruteforce_rank_decode(
    code: &LinearCode,
    y: &[u64],
    t: usize,
    budget: u128,
) -> Result<Vec<u64>, FamiliesError> {
    let field = code.field();
    let base = field.prime_subfield();
    let m = field.extension_degree() as usize;
    let n = code.length();
    let s_y = code.syndrome(y)?;
    if s_y.iter().all(|&v| v == 0) {
        return Ok(y.to_vec());
    }
    let h = code.parity_check();
    let checks = h.rows();
    // right-hand side: base-field expansion of the syndrome
    let mut rhs = Vec::with_capacity(checks * m);
    for &s in &s_y {
        rhs.extend(field.coeffs(s));
    }
    for u in 1..=t {
        for basis in subspaces_of_dim(field, u, budget)? {
            // unknowns x_{l,i}: e_i = sum_l x_{l,i} basis_l
            let mut a = Matrix::zeros(&base, checks * m, u * n);
            for r in 0..checks {
                for i in 0..n {
                    for (l, &b) in basis.iter().enumerate() {
                        let coeff = field.mul(h.get(r, i), b);
                        for (c, cc) in field.coeffs(coeff).into_iter().enumerate() {
                            a.set(r * m + c, l * n + i, cc);
                        }
                    }
                }
            }
            if let Ok(x) = a.transpose().solve_row(&rhs) {
                let mut e = vec![0u64; n];
                for i in 0..n {
                    let mut acc = 0u64;
                    for (l, &b) in basis.iter().enumerate() {
                        acc = field.add(acc, field.mul(x[l * n + i], b));
                    }
                    e[i] = acc;
                }
                debug_assert_eq!(code.syndrome(&field.vec_sub(y, &e))?, vec![0; checks]);
                if rank_weight(field, &e) <= t {
                    return Ok(field.vec_sub(y, &e));
                }
            }
        }
    }
    Err(FamiliesError::DecodeFailure)
}
