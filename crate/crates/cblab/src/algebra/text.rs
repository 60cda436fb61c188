//! Text serialization for matrices: a header line `q m n_rows n_cols`
//! followed by the rows, each entry written as its m comma-separated
//! coefficients over the prime subfield. Extension fields are
//! reconstructed with the canonical modulus, so the header suffices.

use super::{AlgebraError, Field, Matrix};

pub fn matrix_to_text(m: &Matrix) -> String {
    let f = m.field();
    let mut out = format!(
        "{} {} {} {}\n",
        f.order(),
        f.extension_degree(),
        m.rows(),
        m.cols()
    );
    for i in 0..m.rows() {
        let row: Vec<String> = m
            .row(i)
            .iter()
            .map(|&x| {
                f.coeffs(x)
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn matrix_from_text(text: &str) -> Result<Matrix, AlgebraError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| AlgebraError::Parse("empty input".into()))?;
    let head: Vec<u64> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| AlgebraError::Parse(format!("bad header token {t}"))))
        .collect::<Result<_, _>>()?;
    let [q, m, rows, cols] = head[..] else {
        return Err(AlgebraError::Parse("header must be `q m rows cols`".into()));
    };
    let m = m as u32;
    let p = if m == 1 {
        q
    } else {
        let p = (q as f64).powf(1.0 / m as f64).round() as u64;
        if p.checked_pow(m) != Some(q) {
            return Err(AlgebraError::Parse(format!("q={q} is not a {m}-th power")));
        }
        p
    };
    let field = Field::extension(p, m)?;
    let mut data_rows = Vec::with_capacity(rows as usize);
    for _ in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| AlgebraError::Parse("missing matrix row".into()))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != cols as usize {
            return Err(AlgebraError::Parse(format!(
                "row has {} entries, expected {cols}",
                entries.len()
            )));
        }
        let mut row = Vec::with_capacity(cols as usize);
        for e in entries {
            let coeffs: Vec<u64> = e
                .split(',')
                .map(|t| t.parse().map_err(|_| AlgebraError::Parse(format!("bad entry {t}"))))
                .collect::<Result<_, _>>()?;
            if coeffs.len() != m as usize || coeffs.iter().any(|&c| c >= p) {
                return Err(AlgebraError::Parse(format!("entry `{e}` invalid for GF({q})")));
            }
            row.push(field.from_coeffs(&coeffs));
        }
        data_rows.push(row);
    }
    Ok(Matrix::from_rows(&field, data_rows))
}
