//! Attack-cost estimation: exact bit-operation counts for the decoding
//! algorithms, combinatorial utilities (ball volumes, q-ary entropy, the
//! Gilbert-Varshamov distance), asymptotic exponent optimization, rank-ISD
//! cost formulas, and the key/ciphertext size calculators for the NIST
//! parameter sets.

mod asymptotic;
mod combinatorics;
mod cost;
mod nist;

pub use asymptotic::{asymptotic_exponent, exponent_at_rate, AsymptoticAlg, AsymptoticPoint};
pub use combinatorics::{ball_volume_h, binom, entropy_q, entropy_q_inv, gv_distance, log2_big};
pub use cost::{
    bjmm_cost, prange_cost, prange_cost_float, rank_isd_cost, stern_cost, stern_cost_opt,
    CostReport, RankIsdVariant,
};
pub use nist::{nist_rows, nist_sizes, nist_sizes_by_name, NistRow, NistScheme, NIST_ROWS};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum EstimateError {
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
    #[error("unknown parameter set: {0}")]
    UnknownParamSet(String),
}
