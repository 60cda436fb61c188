use super::FamiliesError;
use crate::algebra::{Matrix, Poly};
use crate::codes::LinearCode;

/// The cyclic code of length n generated by g(x), which must divide
/// x^n - 1. The generator matrix is the circulant of the coefficients of
/// g shifted across n - deg(g) rows.
pub fn cyclic_from_genpoly(g: &Poly, n: usize) -> Result<LinearCode, FamiliesError> {
    let r = g.degree();
    if r < 0 || r as usize >= n {
        return Err(FamiliesError::BadParams(format!(
            "generator degree {r} incompatible with length {n}"
        )));
    }
    let modulus = Poly::x_pow_minus_one(g.field(), n);
    if !g.divides(&modulus) {
        return Err(FamiliesError::NotADivisor);
    }
    let r = r as usize;
    let k = n - r;
    let mut rows = Vec::with_capacity(k);
    for shift in 0..k {
        let mut row = vec![0u64; n];
        for (i, &c) in g.coeffs().iter().enumerate() {
            row[shift + i] = c;
        }
        rows.push(row);
    }
    Ok(LinearCode::from_generator(Matrix::from_rows(g.field(), rows))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::codes::ENUM_BUDGET;

    #[test]
    fn unit_genpoly_gives_full_space() {
        let f2 = Field::prime(2).unwrap();
        let code = cyclic_from_genpoly(&Poly::one(&f2), 5).unwrap();
        assert_eq!(code.dimension(), 5);
    }

    #[test]
    fn non_divisor_rejected() {
        let f2 = Field::prime(2).unwrap();
        // x^2 + x + 1 does not divide x^5 - 1
        let g = Poly::new(f2, vec![1, 1, 1]);
        assert!(matches!(
            cyclic_from_genpoly(&g, 5),
            Err(FamiliesError::NotADivisor)
        ));
    }

    #[test]
    fn repetition_cofactor_and_dual_genpoly() {
        let f2 = Field::prime(2).unwrap();
        // g = (x^7 - 1)/(x - 1) = 1 + x + ... + x^6 generates the
        // repetition code; its cofactor h = x - 1 generates the dual.
        let g = Poly::new(f2.clone(), vec![1; 7]);
        let code = cyclic_from_genpoly(&g, 7).unwrap();
        assert_eq!(code.dimension(), 1);
        assert_eq!(code.generator().row(0), &[1; 7]);

        let h = Poly::x_pow_minus_one(&f2, 7).divmod(&g).0;
        assert_eq!(h.coeffs(), &[1, 1]);
        // g * h = x^7 - 1 exactly
        assert_eq!(g.mul(&h), Poly::x_pow_minus_one(&f2, 7));
        // and <h> is the dual code
        let dual = cyclic_from_genpoly(&h, 7).unwrap();
        assert_eq!(dual, code.dual());
    }

    #[test]
    fn gf3_exercise_code_is_cyclic_with_genpoly_x2_plus_1() {
        let f3 = Field::prime(3).unwrap();
        let g = Poly::new(f3.clone(), vec![1, 0, 1]);
        let code = cyclic_from_genpoly(&g, 4).unwrap();
        let expect = LinearCode::from_generator(Matrix::from_rows(
            &f3,
            vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]],
        ))
        .unwrap();
        assert_eq!(code, expect);
        // shift closure over all 9 codewords
        for cw in code.all_codewords(ENUM_BUDGET).unwrap() {
            let mut shifted = vec![0u64; 4];
            for i in 0..4 {
                shifted[(i + 1) % 4] = cw[i];
            }
            assert!(code.contains(&shifted));
        }
    }
}
