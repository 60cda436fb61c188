//! Deterministic randomness: every randomized routine in the crate draws
//! from a ChaCha stream keyed by an explicit 64-bit seed. No ambient
//! randomness anywhere.

use super::{Field, Matrix, Permutation};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

pub type SeededRng = ChaCha12Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Independent stream `stream` of the master seed, for parallel workers.
pub fn seeded_stream(seed: u64, stream: u64) -> SeededRng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn random_element(field: &Field, rng: &mut SeededRng) -> u64 {
    rng.gen_range(0..field.order())
}

pub fn random_nonzero(field: &Field, rng: &mut SeededRng) -> u64 {
    rng.gen_range(1..field.order())
}

pub fn random_vec(field: &Field, n: usize, rng: &mut SeededRng) -> Vec<u64> {
    (0..n).map(|_| random_element(field, rng)).collect()
}

/// Uniform k-subset of {0..n-1}, ascending.
pub fn random_subset(n: usize, k: usize, rng: &mut SeededRng) -> Vec<usize> {
    assert!(k <= n);
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        idx.swap(i, j);
    }
    let mut out = idx[..k].to_vec();
    out.sort_unstable();
    out
}

/// Uniform vector of Hamming weight exactly `t`.
pub fn random_weight_vec(field: &Field, n: usize, t: usize, rng: &mut SeededRng) -> Vec<u64> {
    let mut v = vec![0u64; n];
    for i in random_subset(n, t, rng) {
        v[i] = random_nonzero(field, rng);
    }
    v
}

pub fn random_permutation_with(n: usize, rng: &mut SeededRng) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        image.swap(i, j);
    }
    Permutation::new(image).unwrap()
}

/// Deterministic random permutation of {0..n-1} under the given seed.
pub fn random_permutation(n: usize, seed: u64) -> Permutation {
    random_permutation_with(n, &mut seeded(seed))
}

pub fn random_matrix(field: &Field, rows: usize, cols: usize, rng: &mut SeededRng) -> Matrix {
    let mut m = Matrix::zeros(field, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, random_element(field, rng));
        }
    }
    m
}

/// Rejection-samples a matrix of full row rank.
pub fn random_full_rank_matrix(
    field: &Field,
    rows: usize,
    cols: usize,
    rng: &mut SeededRng,
) -> Matrix {
    assert!(rows <= cols);
    loop {
        let m = random_matrix(field, rows, cols, rng);
        if m.rank() == rows {
            return m;
        }
    }
}

pub fn random_invertible_with(field: &Field, k: usize, rng: &mut SeededRng) -> Matrix {
    loop {
        let m = random_matrix(field, k, k, rng);
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// Deterministic random invertible k x k matrix; invertibility is verified
/// by row reduction.
pub fn random_invertible(field: &Field, k: usize, seed: u64) -> Matrix {
    random_invertible_with(field, k, &mut seeded(seed))
}

/// A uniformly chosen information set of the code with parity-check `h`.
pub fn random_information_set(h: &Matrix, rng: &mut SeededRng) -> Vec<usize> {
    let n = h.cols();
    let k = n - h.rows();
    loop {
        let i_set = random_subset(n, k, rng);
        if super::matrix::is_information_set(h, &i_set).unwrap() {
            return i_set;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_under_seed() {
        let f = Field::prime(5).unwrap();
        let a = random_vec(&f, 10, &mut seeded(42));
        let b = random_vec(&f, 10, &mut seeded(42));
        assert_eq!(a, b);
        let c = random_vec(&f, 10, &mut seeded(43));
        assert_ne!(a, c);
    }

    #[test]
    fn random_invertible_has_full_rank() {
        let f = Field::prime(2).unwrap();
        for seed in 0..10 {
            let m = random_invertible(&f, 4, seed);
            assert_eq!(m.rank(), 4);
        }
    }

    #[test]
    fn weight_vec_has_exact_weight() {
        let f = Field::prime(3).unwrap();
        let mut rng = seeded(1);
        for t in 0..6 {
            let v = random_weight_vec(&f, 8, t, &mut rng);
            assert_eq!(super::super::weight(&v), t);
        }
    }
}
