//! Probability, conditioning and evidentially supported belief.
//!
//! Given a prior `π` and evidence `ψ` with a variable interpretation, the
//! belief in an event `A` is the conditional probability, given that `ψ` is
//! true, that the interpretation of `ψ` entails `A`:
//!
//! ```text
//! Bel(A) = π({x : ψ(x) ⊆ A} | ⟦ψ⟧)
//! ```
//!
//! The same data induces a mass function `m(A) = π(ψ⁻¹(A) | ⟦ψ⟧)` whose
//! Dempster-Shafer belief function coincides with `Bel`.

mod mass;
mod measure;

pub mod exploratory;

pub use mass::{dempster_combine, MassFunction};
pub use measure::ProbabilityMeasure;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::rational::Rational;
use crate::semantics::Evaluator;
use crate::state::StateSet;

fn check_universe(ev: &Evaluator<'_>, pi: &ProbabilityMeasure) -> Result<()> {
    let n = ev.model().space().len();
    if pi.universe() != n {
        return Err(Error::SpaceMismatch {
            expected: n,
            found: pi.universe(),
        });
    }
    Ok(())
}

fn undefined_for(f: &Formula) -> Error {
    Error::UndefinedConditioning {
        what: format!("the truth set of `{f}`"),
    }
}

/// `π(⟦φ⟧)`.
pub fn degree(ev: &Evaluator<'_>, pi: &ProbabilityMeasure, phi: &Formula) -> Result<Rational> {
    check_universe(ev, pi)?;
    Ok(pi.probability(&ev.truth_set(phi)?))
}

/// `π(⟦φ⟧ | ⟦ψ⟧)`.
pub fn degree_given(
    ev: &Evaluator<'_>,
    pi: &ProbabilityMeasure,
    phi: &Formula,
    psi: &Formula,
) -> Result<Rational> {
    check_universe(ev, pi)?;
    let given = ev.truth_set(psi)?;
    let denom = pi.probability(&given);
    if denom.is_zero() {
        return Err(undefined_for(psi));
    }
    Ok(pi.probability(&ev.truth_set(phi)?.intersection(&given)) / denom)
}

/// The posterior `π(· | ⟦ψ⟧)`.
pub fn posterior(
    ev: &Evaluator<'_>,
    pi: &ProbabilityMeasure,
    psi: &Formula,
) -> Result<ProbabilityMeasure> {
    check_universe(ev, pi)?;
    pi.condition(&ev.truth_set(psi)?)
        .map_err(|_| undefined_for(psi))
}

/// Evidentially supported belief in `event` given evidence `psi`.
///
/// Undefined (an error, never 0) when `⟦ψ⟧` has prior probability 0.
pub fn bel(
    ev: &Evaluator<'_>,
    pi: &ProbabilityMeasure,
    psi: &Formula,
    event: &StateSet,
) -> Result<Rational> {
    check_universe(ev, pi)?;
    let interp = ev.evidence_valuation(psi)?;
    let truth = interp.truth_set();
    let denom = pi.probability(&truth);
    if denom.is_zero() {
        return Err(undefined_for(psi));
    }
    let supported = interp.entails(event).intersection(&truth);
    Ok(pi.probability(&supported) / denom)
}

/// The mass function induced by evidence: each set gets the conditional
/// probability, given `⟦ψ⟧`, that it is the interpretation of `ψ`.
pub fn mass_from_evidence(
    ev: &Evaluator<'_>,
    pi: &ProbabilityMeasure,
    psi: &Formula,
) -> Result<MassFunction> {
    check_universe(ev, pi)?;
    let interp = ev.evidence_valuation(psi)?;
    let truth = interp.truth_set();
    let denom = pi.probability(&truth);
    if denom.is_zero() {
        return Err(undefined_for(psi));
    }
    let mut masses: BTreeMap<StateSet, Rational> = BTreeMap::new();
    for x in truth.iter() {
        let w = pi.weight(x);
        if w.is_zero() {
            continue;
        }
        *masses
            .entry(interp.at(x).clone())
            .or_insert_with(Rational::zero) += w / &denom;
    }
    Ok(MassFunction::from_parts(interp.universe(), masses))
}

/// `Bel_m(A)`.
pub fn bel_from_mass(m: &MassFunction, event: &StateSet) -> Rational {
    m.belief(event)
}

/// Combines two bodies of evidence by conjoining them pointwise: the mass
/// function of `ψ1 & ψ2`, in which interpretations only meet when they are
/// indexed by the same state.
pub fn pointwise_combine(
    ev: &Evaluator<'_>,
    pi: &ProbabilityMeasure,
    psi1: &Formula,
    psi2: &Formula,
) -> Result<MassFunction> {
    mass_from_evidence(ev, pi, &Formula::and(psi1.clone(), psi2.clone()))
}
