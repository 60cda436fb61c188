use super::{IsdError, IsdSolution, SdpInstance};
use crate::algebra::rng::{random_permutation_with, seeded, SeededRng};
use crate::algebra::{Matrix, Permutation};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// BJMM parameters: partial-Gaussian window `ell`, inner weight `v`, and
/// the representation overlaps `eps1`, `eps2`. The merge widths default
/// to the representation counts: u_i = ceil(log2 U_i).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BjmmParams {
    pub ell: usize,
    pub v: usize,
    pub eps1: usize,
    pub eps2: usize,
    pub u1: Option<usize>,
    pub u2: Option<usize>,
}

/// Pack a 0/1 vector (length <= 64) into a bitmask, coordinate 0 at the
/// least significant bit.
pub fn mask_from_vec(v: &[u64]) -> u64 {
    assert!(v.len() <= 64);
    v.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &b)| acc | ((b & 1) << i))
}

/// Inverse of `mask_from_vec`.
pub fn vec_from_mask(mask: u64, len: usize) -> Vec<u64> {
    (0..len).map(|i| (mask >> i) & 1).collect()
}

fn key_of(b_rows: &[u64], x: u64, u: usize) -> u64 {
    let mut key = 0u64;
    for (i, &row) in b_rows.iter().take(u).enumerate() {
        key |= (((row & x).count_ones() as u64) & 1) << i;
    }
    key
}

/// Merge two lists of binary vectors (as bitmasks): keep every x + y with
/// (B x^T) and (B y^T) + target equal on the first `u` coordinates and
/// wt(x + y) = w. Sort-and-scan keeps the output order deterministic.
pub fn merge(l1: &[u64], l2: &[u64], u: usize, target: u64, w: usize, b_rows: &[u64]) -> Vec<u64> {
    assert!(u <= b_rows.len());
    let tmask = target & mask_bits(u);
    let mut left: Vec<(u64, u64)> = l1.iter().map(|&x| (key_of(b_rows, x, u), x)).collect();
    let mut right: Vec<(u64, u64)> = l2
        .iter()
        .map(|&y| ((key_of(b_rows, y, u) ^ tmask) & mask_bits(u), y))
        .collect();
    left.sort_unstable();
    right.sort_unstable();
    let mut out = Vec::new();
    let (mut i, mut j) = (0usize, 0usize);
    while i < left.len() && j < right.len() {
        match left[i].0.cmp(&right[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let key = left[i].0;
                let i_end = left[i..].iter().take_while(|e| e.0 == key).count() + i;
                let j_end = right[j..].iter().take_while(|e| e.0 == key).count() + j;
                for a in i..i_end {
                    for b in j..j_end {
                        let sum = left[a].1 ^ right[b].1;
                        if sum.count_ones() as usize == w {
                            out.push(sum);
                        }
                    }
                }
                i = i_end;
                j = j_end;
            }
        }
    }
    out
}

fn mask_bits(u: usize) -> u64 {
    if u >= 64 {
        u64::MAX
    } else {
        (1u64 << u) - 1
    }
}

/// All bitmasks with support inside `positions` and weight exactly `w`.
fn weight_masks(positions: &[usize], w: usize) -> Vec<u64> {
    let mut out = Vec::new();
    super::for_each_combination(positions.len(), w, |supp| {
        let mut m = 0u64;
        for &s in supp {
            m |= 1 << positions[s];
        }
        out.push(m);
        true
    });
    out
}

struct Pge {
    /// rows of A (n-k-ell) over the k+ell tail columns, as masks
    a_rows: Vec<u64>,
    /// rows of B (ell) over the k+ell tail columns, as masks
    b_rows: Vec<u64>,
    s1: Vec<u64>,
    s2_mask: u64,
    perm: Permutation,
}

/// Partial Gaussian elimination of H P to ((Id | A), (0 | B)) with an
/// ell-row bottom window; fails (None) when the chosen permutation puts a
/// singular block in front.
fn partial_gaussian(h: &Matrix, s: &[u64], ell: usize, rng: &mut SeededRng) -> Option<Pge> {
    let f = h.field();
    let n = h.cols();
    let rows = h.rows();
    let top = rows - ell;
    let perm = random_permutation_with(n, rng);
    let inv = perm.inverse();
    let order: Vec<usize> = (0..n).map(|c| inv.map(c)).collect();
    let mut m = h.columns(&order).hstack(&Matrix::from_rows(
        f,
        s.iter().map(|&x| vec![x]).collect(),
    ));
    // eliminate on the first `top` columns
    for col in 0..top {
        let pivot = (col..rows).find(|&r| m.get(r, col) == 1)?;
        if pivot != col {
            for j in 0..=n {
                let (a, b) = (m.get(col, j), m.get(pivot, j));
                m.set(col, j, b);
                m.set(pivot, j, a);
            }
        }
        for r in 0..rows {
            if r != col && m.get(r, col) == 1 {
                for j in 0..=n {
                    let v = m.get(r, j) ^ m.get(col, j);
                    m.set(r, j, v);
                }
            }
        }
    }
    let tail = n - top;
    let mask_row = |r: usize| -> u64 {
        let mut mask = 0u64;
        for c in 0..tail {
            mask |= (m.get(r, top + c) & 1) << c;
        }
        mask
    };
    let a_rows: Vec<u64> = (0..top).map(mask_row).collect();
    let b_rows: Vec<u64> = (top..rows).map(mask_row).collect();
    let s1: Vec<u64> = (0..top).map(|r| m.get(r, n)).collect();
    let mut s2_mask = 0u64;
    for (i, r) in (top..rows).enumerate() {
        s2_mask |= (m.get(r, n) & 1) << i;
    }
    Some(Pge { a_rows, b_rows, s1, s2_mask, perm })
}

/// The BJMM algorithm over GF(2): partial Gaussian elimination, two
/// levels of representation-technique merges, and an outer weight check.
pub fn bjmm(
    inst: &SdpInstance,
    params: &BjmmParams,
    seed: u64,
    max_iters: u64,
) -> Result<IsdSolution, IsdError> {
    let start = Instant::now();
    if inst.h().field().order() != 2 {
        return Err(IsdError::InfeasibleParams("BJMM is binary only".into()));
    }
    let Some(red) = inst.reduced() else {
        return Err(IsdError::IterationLimit { iterations: 0 });
    };
    let (n, k) = (red.n(), red.n() - red.h().rows());
    let t = red.t();
    let (ell, v) = (params.ell, params.v);
    if ell > n - k || v > t || t - v > n - k - ell || v % 2 != 0 {
        return Err(IsdError::InfeasibleParams(format!(
            "invalid BJMM parameters ell={ell}, v={v} for n={n}, k={k}, t={t}"
        )));
    }
    if k + ell > 64 {
        return Err(IsdError::InfeasibleParams(
            "bitmask implementation caps k + ell at 64".into(),
        ));
    }
    let v1 = v / 2 + params.eps1;
    if v1 % 2 != 0 {
        return Err(IsdError::InfeasibleParams(format!(
            "v1 = v/2 + eps1 = {v1} must be even"
        )));
    }
    let v2 = v1 / 2 + params.eps2;
    if v2 > k + ell || v1 > k + ell {
        return Err(IsdError::InfeasibleParams("inner weights exceed k + ell".into()));
    }
    let log2ceil = |x: u128| -> usize {
        if x <= 1 {
            0
        } else {
            (128 - (x - 1).leading_zeros()) as usize
        }
    };
    let reps1: u128 = binom_u128(v, v / 2) * binom_u128(k + ell - v, params.eps1);
    let reps2: u128 = binom_u128(v1, v1 / 2) * binom_u128(k + ell - v1, params.eps2);
    let u1 = params.u1.unwrap_or_else(|| log2ceil(reps1).min(ell));
    let u2 = params.u2.unwrap_or_else(|| log2ceil(reps2).min(ell));
    let u2 = u2.min(u1);
    if u1 > ell {
        return Err(IsdError::InfeasibleParams(format!("u1 = {u1} exceeds ell = {ell}")));
    }

    let mut rng = seeded(seed);
    let kl = k + ell;
    let half1: Vec<usize> = (0..kl / 2).collect();
    let half2: Vec<usize> = (kl / 2..kl).collect();
    // odd v2 splits as floor/ceil across the two disjoint halves
    let base1 = weight_masks(&half1, v2 / 2);
    let base2 = weight_masks(&half2, v2 - v2 / 2);

    for iteration in 1..=max_iters {
        // singular front blocks are redrawn without consuming an iteration
        let pge = loop {
            if let Some(p) = partial_gaussian(red.h(), red.s(), ell, &mut rng) {
                break p;
            }
        };
        let t1_1: u64 = rng.gen::<u64>() & mask_bits(u1);
        let t2_1 = (pge.s2_mask ^ t1_1) & mask_bits(u1);
        let t1_2: u64 = rng.gen::<u64>() & mask_bits(u2);
        let t3_2: u64 = rng.gen::<u64>() & mask_bits(u2);
        let t2_2 = (t1_1 ^ t1_2) & mask_bits(u2);
        let t4_2 = (t2_1 ^ t3_2) & mask_bits(u2);

        let targets2 = [t1_2, t2_2, t3_2, t4_2];
        let level2: Vec<Vec<u64>> = targets2
            .iter()
            .map(|&tg| merge(&base1, &base2, u2, tg, v2, &pge.b_rows))
            .collect();
        let l1a = merge(&level2[0], &level2[1], u1, t1_1, v1, &pge.b_rows);
        let l1b = merge(&level2[2], &level2[3], u1, t2_1, v1, &pge.b_rows);
        let mut final_list = merge(&l1a, &l1b, ell, pge.s2_mask, v, &pge.b_rows);
        final_list.sort_unstable();
        final_list.dedup();

        for e2 in final_list {
            // e1 = s1 + A e2^T
            let top = n - k - ell;
            let mut e1 = Vec::with_capacity(top);
            let mut w1 = 0usize;
            for r in 0..top {
                let bit = pge.s1[r] ^ ((pge.a_rows[r] & e2).count_ones() as u64 & 1);
                if bit == 1 {
                    w1 += 1;
                }
                e1.push(bit);
            }
            if w1 == t - v {
                let mut e_perm = vec![0u64; n];
                e_perm[..top].copy_from_slice(&e1);
                for c in 0..kl {
                    e_perm[top + c] = (e2 >> c) & 1;
                }
                // undo the column permutation
                let image = pge.perm.image();
                let e: Vec<u64> = (0..n).map(|i| e_perm[image[i]]).collect();
                return Ok(IsdSolution::checked(inst, e, iteration, start.elapsed()));
            }
        }
    }
    Err(IsdError::IterationLimit { iterations: max_iters })
}

fn binom_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i as u128 + 1);
    }
    acc
}

/// Expected size of the final BJMM list, C(k+ell, v) 2^(-ell).
pub fn bjmm_expected_final_list(k: usize, ell: usize, v: usize) -> f64 {
    binom_u128(k + ell, v) as f64 / 2f64.powi(ell as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rng::seeded;
    use crate::algebra::{weight, Field};
    use crate::isd::{brute_force_sdp, stern, SternParams};

    #[test]
    fn mask_round_trip() {
        let v = vec![1, 0, 1, 1, 0];
        assert_eq!(vec_from_mask(mask_from_vec(&v), 5), v);
    }

    #[test]
    fn merge_with_singleton_filters_by_weight() {
        // L2 = {0}, target 0, u = 0: the merge returns L1 filtered to
        // weight w
        let l1 = vec![0b101u64, 0b111, 0b1, 0b110];
        let out = merge(&l1, &[0], 0, 0, 2, &[0b11, 0b101]);
        assert_eq!(out, vec![0b101, 0b110]);
    }

    #[test]
    fn merge_matches_naive_double_loop() {
        let mut rng = seeded(17);
        for trial in 0..40 {
            let len = 9usize;
            let rows: Vec<u64> = (0..4).map(|_| rng.gen::<u64>() & mask_bits(len)).collect();
            let l1: Vec<u64> = (0..30).map(|_| rng.gen::<u64>() & mask_bits(len)).collect();
            let l2: Vec<u64> = (0..30).map(|_| rng.gen::<u64>() & mask_bits(len)).collect();
            let u = trial % 5;
            let target = rng.gen::<u64>() & mask_bits(u);
            let w = 2 + trial % 4;
            let mut got = merge(&l1, &l2, u, target, w, &rows);
            let mut naive = Vec::new();
            for &x in &l1 {
                for &y in &l2 {
                    let kx = key_of(&rows, x, u);
                    let ky = key_of(&rows, y, u);
                    if kx == (ky ^ target) & mask_bits(u) && (x ^ y).count_ones() as usize == w {
                        naive.push(x ^ y);
                    }
                }
            }
            got.sort_unstable();
            naive.sort_unstable();
            assert_eq!(got, naive);
        }
    }

    #[test]
    fn merge_output_size_concentrates() {
        // E|L| = |L1| |L2| / 2^u over random keys; check the sample mean
        // across seeds stays within 3 sigma (Poisson-style)
        let mut rng = seeded(5);
        let (n_lists, u, len) = (200usize, 6usize, 16usize);
        let mut total = 0usize;
        let trials = 60;
        for _ in 0..trials {
            let rows: Vec<u64> = (0..u).map(|_| rng.gen::<u64>() & mask_bits(len)).collect();
            let l1: Vec<u64> = (0..n_lists).map(|_| rng.gen::<u64>() & mask_bits(len)).collect();
            let l2: Vec<u64> = (0..n_lists).map(|_| rng.gen::<u64>() & mask_bits(len)).collect();
            // no weight filter: count all key collisions
            let mut cnt = 0usize;
            for w in 0..=len {
                cnt += merge(&l1, &l2, u, 0, w, &rows).len();
            }
            total += cnt;
        }
        let mean = total as f64 / trials as f64;
        let lambda = (n_lists * n_lists) as f64 / 2f64.powi(u as i32);
        let sigma = (lambda / trials as f64).sqrt();
        assert!(
            (mean - lambda).abs() <= 3.0 * sigma,
            "mean {mean} vs lambda {lambda} (sigma {sigma})"
        );
    }

    #[test]
    fn solves_toy_instances_and_matches_oracle() {
        let f2 = Field::prime(2).unwrap();
        let mut rng = seeded(66);
        let params = BjmmParams { ell: 4, v: 2, eps1: 1, eps2: 0, u1: None, u2: None };
        for trial in 0..40u64 {
            let (inst, _) = SdpInstance::random_solvable(&f2, 32, 16, 4, &mut rng);
            let sol = bjmm(&inst, &params, trial, 40_000).unwrap();
            let oracle = brute_force_sdp(&inst, 1 << 26).unwrap();
            assert!(weight(&sol.e) >= weight(&oracle.e));
        }
    }

    #[test]
    fn zero_overlap_collapse_agrees_with_stern() {
        // eps1 = eps2 = 0 degenerates the representation counts; both
        // solvers must still crack the same instances
        let f2 = Field::prime(2).unwrap();
        let mut rng = seeded(7);
        let bparams = BjmmParams { ell: 2, v: 4, eps1: 0, eps2: 0, u1: None, u2: None };
        let sparams = SternParams { ell: 2, v: 2, m1: None };
        for trial in 0..10u64 {
            let (inst, _) = SdpInstance::random_solvable(&f2, 24, 10, 5, &mut rng);
            let a = bjmm(&inst, &bparams, trial, 60_000).unwrap();
            let b = stern(&inst, &sparams, trial, 60_000).unwrap();
            assert!(inst.is_solution(&a.e));
            assert!(inst.is_solution(&b.e));
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let f2 = Field::prime(2).unwrap();
        let mut rng = seeded(2);
        let (inst, _) = SdpInstance::random_solvable(&f2, 20, 8, 3, &mut rng);
        // odd v
        let p = BjmmParams { ell: 2, v: 3, eps1: 0, eps2: 0, u1: None, u2: None };
        assert!(matches!(bjmm(&inst, &p, 0, 5), Err(IsdError::InfeasibleParams(_))));
        // odd v1
        let p = BjmmParams { ell: 2, v: 2, eps1: 2, eps2: 0, u1: None, u2: None };
        assert!(matches!(bjmm(&inst, &p, 0, 5), Err(IsdError::InfeasibleParams(_))));
    }
}
