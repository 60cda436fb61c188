use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact binomial coefficient.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// log2 of a positive big integer, accurate to f64 precision.
pub fn log2_big(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "log2 of zero");
    let bits = x.bits();
    if bits <= 53 {
        let v: u64 = x.try_into().expect("fits in u64");
        return (v as f64).log2();
    }
    let shift = bits - 53;
    let top: u64 = (x >> shift).try_into().expect("53 bits fit");
    (top as f64).log2() + shift as f64
}

/// Exact volume of the Hamming ball of radius r in GF(q)^n:
/// sum_{i=0}^{r} C(n, i) (q-1)^i. A negative radius gives 0.
pub fn ball_volume_h(r: i64, n: u64, q: u64) -> BigUint {
    if r < 0 {
        return BigUint::zero();
    }
    let r = (r as u64).min(n);
    let qm1 = BigUint::from(q - 1);
    let mut acc = BigUint::zero();
    let mut pw = BigUint::one();
    for i in 0..=r {
        acc += binom(n, i) * &pw;
        pw *= &qm1;
    }
    acc
}

/// The q-ary entropy function
/// h_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x),
/// extended by continuity at the endpoints.
pub fn entropy_q(x: f64, q: u64) -> f64 {
    assert!((0.0..=1.0).contains(&x), "entropy argument out of [0,1]");
    let lq = (q as f64).ln();
    let term = |y: f64| if y <= 0.0 { 0.0 } else { -y * y.ln() / lq };
    x * ((q - 1) as f64).ln() / lq + term(x) + term(1.0 - x)
}

/// Inverse of h_q on [0, 1 - 1/q], by bisection.
pub fn entropy_q_inv(y: f64, q: u64) -> f64 {
    assert!((0.0..=1.0).contains(&y));
    let (mut lo, mut hi) = (0.0f64, 1.0 - 1.0 / q as f64);
    for _ in 0..find_iterations() {
        let mid = 0.5 * (lo + hi);
        if entropy_q(mid, q) < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn find_iterations() -> usize {
    80
}

/// The largest minimum distance d guaranteed by the Gilbert-Varshamov
/// condition V_H(d-2, n-1, q) < q^(n-k).
pub fn gv_distance(n: u64, k: u64, q: u64) -> u64 {
    assert!(k >= 1 && k <= n);
    let bound = BigUint::from(q).pow((n - k) as u32);
    let mut d = 1u64;
    while d < n + 1 {
        let next = d + 1;
        if ball_volume_h(next as i64 - 2, n - 1, q) < bound {
            d = next;
        } else {
            break;
        }
    }
    d
}
