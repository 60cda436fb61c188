use super::{for_each_combination, IsdError, IsdSolution, SdpInstance};
use std::time::Instant;

/// Exhaustive syndrome decoding: the independent oracle every solver is
/// validated against. Scans weights 0..=t in order and returns the
/// lexicographically least solution of the minimum weight, or proves by
/// exhaustion that none exists.
pub fn brute_force_sdp(inst: &SdpInstance, budget: u128) -> Result<IsdSolution, IsdError> {
    let start = Instant::now();
    let f = inst.h().field().clone();
    let n = inst.n();
    let q = f.order();
    // candidate count: sum_{i<=t} C(n, i) (q-1)^i
    let mut total: u128 = 0;
    for i in 0..=inst.t() {
        let mut c: u128 = 1;
        for j in 0..i {
            c = c.saturating_mul((n - j) as u128) / (j as u128 + 1);
        }
        total = total.saturating_add(c.saturating_mul(((q - 1) as u128).pow(i as u32)));
    }
    if total > budget {
        return Err(IsdError::TooLarge(total));
    }

    let cols: Vec<Vec<u64>> = (0..n).map(|j| inst.h().col(j)).collect();
    let mut tested: u64 = 0;
    for w in 0..=inst.t() {
        let mut best: Option<Vec<u64>> = None;
        for_each_combination(n, w, |supp| {
            // odometer over the (q-1)^w nonzero value assignments
            let mut vals = vec![1u64; w];
            loop {
                tested += 1;
                let mut syn = vec![0u64; inst.s().len()];
                for (pos, &j) in supp.iter().enumerate() {
                    for (r, acc) in syn.iter_mut().enumerate() {
                        *acc = f.add(*acc, f.mul(vals[pos], cols[j][r]));
                    }
                }
                if syn == inst.s() {
                    let mut e = vec![0u64; n];
                    for (pos, &j) in supp.iter().enumerate() {
                        e[j] = vals[pos];
                    }
                    if best.as_ref().is_none_or(|b| e < *b) {
                        best = Some(e);
                    }
                }
                // advance values
                let mut i = w;
                loop {
                    if i == 0 {
                        return true;
                    }
                    i -= 1;
                    if vals[i] < q - 1 {
                        vals[i] += 1;
                        for v in vals.iter_mut().skip(i + 1) {
                            *v = 1;
                        }
                        break;
                    }
                }
            }
        });
        if let Some(e) = best {
            return Ok(IsdSolution::checked(inst, e, tested, start.elapsed()));
        }
    }
    Err(IsdError::NoSolution)
}
