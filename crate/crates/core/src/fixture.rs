//! The coin-flip model shipped with the crate.
//!
//! A friend sees a coin you cannot and reports "heads". States pair the coin
//! face with the friend's disposition: `acc` (reports accurately), `sh`
//! (always says heads), `st` (always says tails).
//!
//! | atom   | meaning                                                     |
//! |--------|-------------------------------------------------------------|
//! | `p`    | the report, first pass (incoherent)                         |
//! | `pbar` | the coherence closure of `p`                                |
//! | `h`    | the coin landed heads (constant)                            |
//! | `a`    | the friend is accurate (constant)                           |
//!
//! Measures: `pi` (accurate with probability 3/5, fair coin), `piPrime`
//! (certainly accurate) and `piZero` (certainly a tails-sayer, so the report
//! has probability 0).

use crate::document::{LoadedModel, ModelDocument};

pub const NAME: &str = "coinflip";

pub const COINFLIP_JSON: &str = include_str!("../fixtures/coinflip.json");

pub fn coinflip_document() -> ModelDocument {
    ModelDocument::from_json(COINFLIP_JSON).expect("shipped fixture parses")
}

pub fn coinflip() -> LoadedModel {
    coinflip_document()
        .build()
        .expect("shipped fixture is valid")
}
