//! A desk-scale laboratory for code-based cryptography.
//!
//! The crate builds the classic public-key encryption frameworks
//! (McEliece, Niederreiter, Alekhnovich's first variant, the quasi-cyclic
//! scheme, GPT) and the CFS/CVE/AGS signature schemes, attacks them with
//! information-set-decoding solvers and algebraic distinguishers, estimates
//! concrete and asymptotic attack costs, and runs the NP-hardness reductions
//! from 3-dimensional matching. Everything is sized so that exhaustive
//! oracles stay feasible and every randomized routine is reproducible from
//! an explicit 64-bit seed.
//!
//! **Not for production use.** Parameters are deliberately tiny and nothing
//! is constant time.

pub mod algebra;
pub mod codes;
pub mod distinguish;
pub mod estimate;
pub mod families;
pub mod isd;
pub mod pke;
pub mod reductions;
pub mod sig;
