use super::{draw_systematic, for_each_combination, IsdError, IsdSolution, SdpInstance};
use crate::algebra::rng::seeded;
use crate::algebra::weight;
use std::time::Instant;

/// Lee-Brickell decoding: ask for exactly `v` errors inside the
/// information set and exactly t - v outside. `v = 0` degenerates to
/// Prange (the same accept predicate, and the same information-set
/// stream under a shared seed).
pub fn lee_brickell(
    inst: &SdpInstance,
    v: usize,
    seed: u64,
    max_iters: u64,
) -> Result<IsdSolution, IsdError> {
    let start = Instant::now();
    let Some(red) = inst.reduced() else {
        return Err(IsdError::IterationLimit { iterations: 0 });
    };
    let f = red.h().field().clone();
    let q = f.order();
    let (n, k) = (red.n(), red.n() - red.h().rows());
    let t = red.t();
    if v > k.min(t) {
        return Err(IsdError::InfeasibleParams(format!(
            "v = {v} exceeds min(k, t) = {}",
            k.min(t)
        )));
    }
    let mut rng = seeded(seed);
    for iteration in 1..=max_iters {
        let draw = draw_systematic(red.h(), red.s(), 0, &mut rng);
        let uh = draw.u.mul(red.h());
        let a = uh.columns(&draw.i_set);
        let mut found: Option<Vec<u64>> = None;
        for_each_combination(k, v, |supp| {
            let mut vals = vec![1u64; v];
            loop {
                // e_out = s' - x A^T for x supported on supp
                let mut e_out = draw.s_prime.clone();
                for (pos, &c) in supp.iter().enumerate() {
                    for (r, acc) in e_out.iter_mut().enumerate() {
                        *acc = f.sub(*acc, f.mul(vals[pos], a.get(r, c)));
                    }
                }
                if weight(&e_out) == t - v {
                    let mut e = vec![0u64; n];
                    for (pos, &c) in supp.iter().enumerate() {
                        e[draw.i_set[c]] = vals[pos];
                    }
                    for (r, &j) in draw.j_set.iter().enumerate() {
                        e[j] = e_out[r];
                    }
                    found = Some(e);
                    return false;
                }
                let mut i = v;
                loop {
                    if i == 0 {
                        return true;
                    }
                    i -= 1;
                    if vals[i] < q - 1 {
                        vals[i] += 1;
                        for x in vals.iter_mut().skip(i + 1) {
                            *x = 1;
                        }
                        break;
                    }
                }
            }
        });
        if let Some(e) = found {
            return Ok(IsdSolution::checked(inst, e, iteration, start.elapsed()));
        }
    }
    Err(IsdError::IterationLimit { iterations: max_iters })
}
