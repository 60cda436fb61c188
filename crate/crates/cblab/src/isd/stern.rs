use super::{draw_systematic, for_each_combination, IsdError, IsdSolution, SdpInstance};
use crate::algebra::rng::{random_subset, seeded, SeededRng};
use crate::algebra::{Field, Matrix};
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Stern parameters: zero-window size `ell`, per-half weight `v`, and the
/// size `m1` of the first half of the information-set partition
/// (defaulting to floor(k/2) when absent).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SternParams {
    pub ell: usize,
    pub v: usize,
    pub m1: Option<usize>,
}

/// Speed-up toggles, on by default: early abort in the outer weight check
/// and intermediate sums in the set construction.
#[derive(Debug, Clone, Copy)]
pub struct SternOpts {
    pub early_abort: bool,
    pub intermediate_sums: bool,
}

impl Default for SternOpts {
    fn default() -> Self {
        SternOpts { early_abort: true, intermediate_sums: true }
    }
}

/// Counters from an instrumented run.
#[derive(Debug, Clone, Copy, Default)]
pub struct SternExperiment {
    pub iterations: u64,
    pub collisions: u64,
    pub successes: u64,
}

fn validate(inst: &SdpInstance, p: &SternParams) -> Result<(usize, usize), IsdError> {
    let (n, k) = (inst.n(), inst.n() - inst.h().rows());
    let t = inst.t();
    let m1 = p.m1.unwrap_or(k / 2);
    let m2 = k - m1;
    if p.ell >= n - k {
        return Err(IsdError::InfeasibleParams(format!(
            "ell = {} must be below n - k = {}",
            p.ell,
            n - k
        )));
    }
    if m1 == 0 || m1 >= k {
        return Err(IsdError::InfeasibleParams(format!("bad split m1 = {m1} of k = {k}")));
    }
    if p.v > m1.min(m2).min(t / 2) {
        return Err(IsdError::InfeasibleParams(format!(
            "v = {} exceeds min(m1, m2, t/2) = {}",
            p.v,
            m1.min(m2).min(t / 2)
        )));
    }
    if t - 2 * p.v > n - k - p.ell {
        return Err(IsdError::InfeasibleParams(format!(
            "outer weight {} cannot fit in {} positions",
            t - 2 * p.v,
            n - k - p.ell
        )));
    }
    Ok((m1, m2))
}

/// All pairs (key, sparse pattern) with key = x A^T (+ shift) over the
/// weight-v vectors x supported on `half` (indices into the information
/// set). With intermediate sums the keys grow incrementally along the
/// recursion; otherwise each key is recomputed from scratch.
#[allow(clippy::too_many_arguments)]
fn build_side(
    f: &Field,
    a: &Matrix,
    half: &[usize],
    v: usize,
    shift: Option<&[u64]>,
    negate: bool,
    opts: &SternOpts,
    out: &mut Vec<(Vec<u64>, Vec<(usize, u64)>)>,
) {
    let ell = a.rows();
    let base: Vec<u64> = shift.map_or(vec![0; ell], <[u64]>::to_vec);
    if opts.intermediate_sums {
        // depth-first over supports, adding one scaled column at a time
        fn recurse(
            f: &Field,
            a: &Matrix,
            half: &[usize],
            from: usize,
            left: usize,
            key: &Vec<u64>,
            pat: &mut Vec<(usize, u64)>,
            negate: bool,
            out: &mut Vec<(Vec<u64>, Vec<(usize, u64)>)>,
        ) {
            if left == 0 {
                out.push((key.clone(), pat.clone()));
                return;
            }
            for pos in from..=half.len() - left {
                let col = half[pos];
                for val in 1..f.order() {
                    let mut next = key.clone();
                    for (r, nx) in next.iter_mut().enumerate() {
                        let contrib = f.mul(val, a.get(r, col));
                        *nx = if negate { f.sub(*nx, contrib) } else { f.add(*nx, contrib) };
                    }
                    pat.push((col, val));
                    recurse(f, a, half, pos + 1, left - 1, &next, pat, negate, out);
                    pat.pop();
                }
            }
        }
        let mut pat = Vec::new();
        recurse(f, a, half, 0, v, &base, &mut pat, negate, out);
    } else {
        for_each_combination(half.len(), v, |supp| {
            let mut vals = vec![1u64; v];
            loop {
                let mut key = base.clone();
                for (pos, &si) in supp.iter().enumerate() {
                    let col = half[si];
                    for (r, kx) in key.iter_mut().enumerate() {
                        let contrib = f.mul(vals[pos], a.get(r, col));
                        *kx = if negate { f.sub(*kx, contrib) } else { f.add(*kx, contrib) };
                    }
                }
                let pat: Vec<(usize, u64)> = supp
                    .iter()
                    .enumerate()
                    .map(|(pos, &si)| (half[si], vals[pos]))
                    .collect();
                out.push((key, pat));
                let mut i = v;
                loop {
                    if i == 0 {
                        return true;
                    }
                    i -= 1;
                    if vals[i] < f.order() - 1 {
                        vals[i] += 1;
                        for x in vals.iter_mut().skip(i + 1) {
                            *x = 1;
                        }
                        break;
                    }
                }
            }
        });
    }
}

struct Iteration {
    solution: Option<Vec<u64>>,
    collisions: u64,
}

#[allow(clippy::too_many_arguments)]
fn stern_iteration(
    red: &SdpInstance,
    m1: usize,
    p: &SternParams,
    opts: &SternOpts,
    rng: &mut SeededRng,
) -> Iteration {
    let f = red.h().field().clone();
    let (n, k) = (red.n(), red.n() - red.h().rows());
    let t = red.t();
    let draw = draw_systematic(red.h(), red.s(), p.ell, rng);
    let uh = draw.u.mul(red.h());
    // rows 0..ell of the information-set columns form A, the rest form B
    let cols_i = uh.columns(&draw.i_set);
    let a = Matrix::from_rows(&f, (0..p.ell).map(|r| cols_i.row(r).to_vec()).collect());
    let b = Matrix::from_rows(
        &f,
        (p.ell..n - k).map(|r| cols_i.row(r).to_vec()).collect(),
    );
    let s1 = &draw.s_prime[..p.ell];
    let s2 = &draw.s_prime[p.ell..];

    // partition the information set into X and Y
    let x_pick = random_subset(k, m1, rng);
    let x_half: Vec<usize> = x_pick.clone();
    let y_half: Vec<usize> = (0..k).filter(|i| !x_pick.contains(i)).collect();

    let mut s_side = Vec::new();
    build_side(&f, &a, &x_half, p.v, None, false, opts, &mut s_side);
    let mut t_side = Vec::new();
    build_side(&f, &a, &y_half, p.v, Some(s1), true, opts, &mut t_side);

    // sort-and-scan join on the keys (deterministic ordering)
    s_side.sort();
    t_side.sort();

    let mut collisions = 0u64;
    let mut solution = None;
    let (mut i, mut j) = (0usize, 0usize);
    while i < s_side.len() && j < t_side.len() {
        match s_side[i].0.cmp(&t_side[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let i_end = (i..s_side.len()).take_while(|&x| s_side[x].0 == s_side[i].0).last().unwrap() + 1;
                let j_end = (j..t_side.len()).take_while(|&x| t_side[x].0 == t_side[j].0).last().unwrap() + 1;
                for si in i..i_end {
                    for tj in j..j_end {
                        collisions += 1;
                        if solution.is_some() {
                            continue;
                        }
                        // e_I = e_X + e_Y as sparse patterns over I
                        let mut e_i = vec![0u64; k];
                        for &(c, val) in &s_side[si].1 {
                            e_i[c] = f.add(e_i[c], val);
                        }
                        for &(c, val) in &t_side[tj].1 {
                            e_i[c] = f.add(e_i[c], val);
                        }
                        // outer part s2 - e_I B^T, with early abort
                        let limit = t - 2 * p.v;
                        let mut e_out = Vec::with_capacity(n - k - p.ell);
                        let mut w = 0usize;
                        let mut ok = true;
                        for r in 0..n - k - p.ell {
                            let mut acc = s2[r];
                            for (c, &ei) in e_i.iter().enumerate() {
                                if ei != 0 {
                                    acc = f.sub(acc, f.mul(ei, b.get(r, c)));
                                }
                            }
                            if acc != 0 {
                                w += 1;
                                if opts.early_abort && w > limit {
                                    ok = false;
                                    break;
                                }
                            }
                            e_out.push(acc);
                        }
                        if ok && w == limit {
                            let mut e = vec![0u64; n];
                            for (c, &ei) in e_i.iter().enumerate() {
                                e[draw.i_set[c]] = ei;
                            }
                            for (r, &j_col) in draw.j_set.iter().enumerate() {
                                e[j_col] = e_out[r];
                            }
                            solution = Some(e);
                        }
                    }
                }
                i = i_end;
                j = j_end;
            }
        }
    }
    Iteration { solution, collisions }
}

/// Stern's algorithm with explicit options.
pub fn stern_with_opts(
    inst: &SdpInstance,
    params: &SternParams,
    opts: &SternOpts,
    seed: u64,
    max_iters: u64,
) -> Result<IsdSolution, IsdError> {
    let start = Instant::now();
    let Some(red) = inst.reduced() else {
        return Err(IsdError::IterationLimit { iterations: 0 });
    };
    let (m1, _) = validate(&red, params)?;
    let mut rng = seeded(seed);
    for iteration in 1..=max_iters {
        let it = stern_iteration(&red, m1, params, opts, &mut rng);
        if let Some(e) = it.solution {
            return Ok(IsdSolution::checked(inst, e, iteration, start.elapsed()));
        }
    }
    Err(IsdError::IterationLimit { iterations: max_iters })
}

/// Stern's algorithm: collision decoding with a zero window of size ell
/// and v errors in each half of the information set.
pub fn stern(
    inst: &SdpInstance,
    params: &SternParams,
    seed: u64,
    max_iters: u64,
) -> Result<IsdSolution, IsdError> {
    stern_with_opts(inst, params, &SternOpts::default(), seed, max_iters)
}

/// Run exactly `iterations` Stern iterations (never stopping early) and
/// tally collisions and per-iteration successes, for comparing measured
/// behaviour against the cost-formula terms.
pub fn stern_experiment(
    inst: &SdpInstance,
    params: &SternParams,
    seed: u64,
    iterations: u64,
) -> Result<SternExperiment, IsdError> {
    let Some(red) = inst.reduced() else {
        return Err(IsdError::IterationLimit { iterations: 0 });
    };
    let (m1, _) = validate(&red, params)?;
    let opts = SternOpts::default();
    let mut rng = seeded(seed);
    let mut exp = SternExperiment::default();
    for _ in 0..iterations {
        let it = stern_iteration(&red, m1, params, &opts, &mut rng);
        exp.iterations += 1;
        exp.collisions += it.collisions;
        if it.solution.is_some() {
            exp.successes += 1;
        }
    }
    Ok(exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::weight;
    use crate::isd::{brute_force_sdp, prange};

    #[test]
    fn degenerate_parameters_match_prange() {
        let f2 = Field::prime(2).unwrap();
        let mut rng = seeded(3);
        let params = SternParams { ell: 0, v: 0, m1: None };
        for trial in 0..10u64 {
            let (inst, _) = SdpInstance::random_solvable(&f2, 16, 6, 2, &mut rng);
            let a = stern(&inst, &params, trial, 100_000).unwrap();
            let b = prange(&inst, trial, 100_000).unwrap();
            // same accept predicate per iteration; the RNG streams differ
            // (the partition draw), so compare the solutions by validity
            assert!(inst.is_solution(&a.e));
            assert!(inst.is_solution(&b.e));
        }
    }

    #[test]
    fn oracle_agreement_binary() {
        let f2 = Field::prime(2).unwrap();
        let mut rng = seeded(31);
        let params = SternParams { ell: 2, v: 1, m1: None };
        for trial in 0..60u64 {
            let (inst, _) = SdpInstance::random_solvable(&f2, 24, 12, 4, &mut rng);
            let sol = stern(&inst, &params, trial, 200_000).unwrap();
            let oracle = brute_force_sdp(&inst, 1 << 24).unwrap();
            assert!(weight(&sol.e) >= weight(&oracle.e));
        }
    }

    #[test]
    fn oracle_agreement_f5() {
        let f5 = Field::prime(5).unwrap();
        let mut rng = seeded(32);
        let params = SternParams { ell: 1, v: 1, m1: None };
        for trial in 0..25u64 {
            let (inst, _) = SdpInstance::random_solvable(&f5, 14, 6, 2, &mut rng);
            let sol = stern(&inst, &params, trial, 100_000).unwrap();
            let oracle = brute_force_sdp(&inst, 1 << 24).unwrap();
            assert!(weight(&sol.e) >= weight(&oracle.e));
        }
    }

    #[test]
    fn opts_do_not_change_results() {
        let f2 = Field::prime(2).unwrap();
        let mut rng = seeded(4);
        let params = SternParams { ell: 2, v: 1, m1: None };
        let plain = SternOpts { early_abort: false, intermediate_sums: false };
        for trial in 0..10u64 {
            let (inst, _) = SdpInstance::random_solvable(&f2, 20, 10, 3, &mut rng);
            let a = stern(&inst, &params, trial, 100_000).unwrap();
            let b = stern_with_opts(&inst, &params, &plain, trial, 100_000).unwrap();
            assert_eq!(a.e, b.e);
            assert_eq!(a.iterations, b.iterations);
        }
    }

    #[test]
    fn invalid_params_rejected() {
        let f2 = Field::prime(2).unwrap();
        let mut rng = seeded(6);
        let (inst, _) = SdpInstance::random_solvable(&f2, 16, 8, 4, &mut rng);
        for bad in [
            SternParams { ell: 8, v: 1, m1: None },
            SternParams { ell: 2, v: 5, m1: None },
            SternParams { ell: 2, v: 1, m1: Some(0) },
        ] {
            assert!(matches!(
                stern(&inst, &bad, 0, 10),
                Err(IsdError::InfeasibleParams(_))
            ));
        }
    }
}
