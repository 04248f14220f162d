//! Logic of uncertain interpretation over finite state spaces.
//!
//! A proposition's meaning may itself be uncertain: a *variable valuation*
//! assigns each state the event that is the proposition's correct
//! interpretation there. On top of that this crate provides
//!
//! - truth sets, coherence and coherence closure ([`model`]),
//! - a formula language with negation, conjunction, the usual abbreviations
//!   and a *meaning entailment* connective `=>` ([`formula`], [`semantics`]),
//! - exact-rational probability, conditioning, evidentially supported belief,
//!   induced mass functions, Dempster's rule and pointwise evidence
//!   combination ([`belief`]),
//! - JSON model documents and a command-line front end ([`document`], [`cli`]).
//!
//! # Examples
//!
//! Each capability has a runnable example under `examples/`:
//!
//! ```text
//! cargo run --example truth_sets            # valuations, truth sets, coherence closure
//! cargo run --example formula_syntax        # parser, printer, strict vs extended mode
//! cargo run --example meaning_entailment    # `->` versus `=>` on the coin-flip model
//! cargo run --example evidential_belief     # conditioning tables and Bel
//! cargo run --example mass_functions        # induced mass functions, Bel_m = Bel
//! cargo run --example evidence_combination  # Dempster's rule vs pointwise combination
//! cargo run --example pointwise_conditioning  # exploratory weighted-average update
//! cargo run --example model_document        # building, saving and loading documents
//! ```
//!
//! ```
//! use uncertain_logic::{belief, fixture, formula::{parse, Mode}, rational, semantics::Evaluator};
//!
//! let loaded = fixture::coinflip();
//! let ev = Evaluator::new(&loaded.model);
//! let pbar = parse("pbar", Mode::Strict).unwrap();
//! let heads = ev.truth_set(&parse("h", Mode::Strict).unwrap()).unwrap();
//! let pi = loaded.measure("pi").unwrap();
//! assert_eq!(belief::bel(&ev, pi, &pbar, &heads).unwrap(), rational::ratio(3, 5));
//! ```

pub mod belief;
pub mod cli;
pub mod document;
pub mod error;
pub mod fixture;
pub mod formula;
pub mod model;
pub mod rational;
pub mod semantics;
pub mod state;

pub use belief::{MassFunction, ProbabilityMeasure};
pub use error::{Error, Result};
pub use formula::{Formula, Mode};
pub use model::{lift_event, Model, VariableValuation};
pub use rational::Rational;
pub use semantics::Evaluator;
pub use state::{StateSet, StateSpace};
