//! EXPLORATORY: a pointwise variant of conditioning.
//!
//! Updating on `ψ` is taken to be a weighted average of classical updates on
//! each candidate interpretation `E`, weighted by the prior probability that
//! `E` is the correct interpretation of `ψ`:
//!
//! ```text
//! π(φ | ψ) = Σ_E π(⟦φ⟧ | E) · π(ψ⁻¹(E))
//! ```
//!
//! Terms whose interpretation `E` has `π(E) = 0` (in particular `E = ∅`)
//! contribute nothing. Surviving weights are not renormalized, so when some
//! skipped term had positive weight the result can be smaller than the
//! classical value even for `⟦φ⟧ = X`. None of the belief-function
//! identities are claimed for this operation.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::rational::Rational;
use crate::semantics::Evaluator;

use super::ProbabilityMeasure;

pub fn pointwise_condition(
    ev: &Evaluator<'_>,
    pi: &ProbabilityMeasure,
    phi: &Formula,
    psi: &Formula,
) -> Result<Rational> {
    super::check_universe(ev, pi)?;
    let target = ev.truth_set(phi)?;
    let interp = ev.evidence_valuation(psi)?;
    let mut total = Rational::zero();
    let mut survivors = 0usize;
    for (interpretation, preimage) in interp.fibers() {
        let p_e = pi.probability(&interpretation);
        if p_e.is_zero() {
            continue;
        }
        survivors += 1;
        let cond = pi.probability(&target.intersection(&interpretation)) / p_e;
        total += cond * pi.probability(&preimage);
    }
    if survivors == 0 {
        return Err(Error::NoSurvivingTerms);
    }
    Ok(total)
}
