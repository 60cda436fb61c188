//! The public-key encryption frameworks: McEliece, Niederreiter,
//! Alekhnovich's first variant, the quasi-cyclic scheme and GPT, plus toy
//! instantiations of the BIKE and Classic McEliece style constructions.
//! Every scheme exposes keygen/encrypt/decrypt with explicit seeds.

mod alekhnovich;
mod bike;
mod cmce;
mod gpt;
mod mceliece;
mod niederreiter;
mod qc;
pub mod wire;

pub use alekhnovich::{
    alekhnovich1_decrypt_bit, alekhnovich1_decrypt_repeated, alekhnovich1_encrypt_bit,
    alekhnovich1_encrypt_repeated, alekhnovich1_from_parts, alekhnovich1_keygen,
    AlekhnovichKeyPair, AlekhnovichPublic,
};
pub use bike::{
    bike_decrypt, bike_encrypt, bike_keygen, check_bike_r, ring_element_invertible, BikeKeyPair,
    BikePublic,
};
pub use cmce::{
    cmce_decaps, cmce_encaps, cmce_public_parity, cmce_toy_keygen, CmceToyKeyPair, CmceToyPublic,
};
pub use gpt::{gpt_decrypt, gpt_encrypt, gpt_from_parts, gpt_keygen, random_rank_error, GptKeyPair, GptPublic};
pub use mceliece::{
    mceliece_decrypt, mceliece_encrypt, mceliece_encrypt_seeded, mceliece_keygen,
    mceliece_keypair_from_parts, McElieceKeyPair, McEliecePublic,
};
pub use niederreiter::{
    niederreiter_decrypt, niederreiter_encrypt, niederreiter_from_code, niederreiter_keygen,
    NiederreiterKeyPair, NiederreiterPublic,
};
pub use qc::{
    qc_decrypt, qc_encrypt, qc_encrypt_with, qc_from_parts, qc_keygen, QcKeyPair, QcPublic, QcRing,
};

use crate::families::FamiliesError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PkeError {
    #[error("error vector weight exceeds the correction capacity")]
    WeightTooHigh,
    #[error("decoding failure")]
    DecodeFailure,
    #[error("block size must be a prime with 2 primitive modulo r")]
    InvalidBlockSize,
    #[error("could not reach systematic form; resample the key material")]
    SystematicFormFailure,
    #[error("invalid parameters: {0}")]
    BadParams(String),
}

impl From<FamiliesError> for PkeError {
    fn from(e: FamiliesError) -> Self {
        match e {
            FamiliesError::DecodeFailure => PkeError::DecodeFailure,
            other => PkeError::BadParams(other.to_string()),
        }
    }
}
