use crate::algebra::{Field, Matrix};

/// Generator matrix of the binary Reed-Muller code RM(m, r): one row per
/// monomial of degree <= r in m variables, evaluated on all 2^m points.
///
/// Monomials are ordered graded-lexicographically (by degree, then by the
/// sorted variable-index tuple) and point j assigns variable x_i the bit
/// (j >> i) & 1, so generator matrices are reproducible.
pub fn reed_muller_generator(m: u32, r: u32) -> Matrix {
    assert!(r <= m && m <= 10, "need r <= m <= 10");
    let f2 = Field::prime(2).unwrap();
    let n = 1usize << m;
    let mut rows = Vec::new();
    for monomial in monomials(m, r) {
        let mut row = Vec::with_capacity(n);
        for point in 0..n {
            let mut val = 1u64;
            for &var in &monomial {
                val &= (point >> var) as u64 & 1;
            }
            row.push(val);
        }
        rows.push(row);
    }
    Matrix::from_rows(&f2, rows)
}

/// Variable-index sets of all monomials of degree <= r, graded lex.
fn monomials(m: u32, r: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for deg in 1..=r {
        let mut stack: Vec<Vec<u32>> = vec![vec![]];
        while let Some(cur) = stack.pop() {
            if cur.len() == deg as usize {
                out.push(cur);
                continue;
            }
            let start = cur.last().map_or(0, |&l| l + 1);
            // push in reverse so the pop order is lexicographic
            for v in (start..m).rev() {
                let mut next = cur.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    out
}
