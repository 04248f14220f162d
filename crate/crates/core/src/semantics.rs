//! Pointwise interpretation of formulas and their truth sets.
//!
//! Atoms are read off the model; `~φ` and `φ & ψ` are complement and
//! intersection state by state; `|` and `->` are evaluated through their
//! expansions `~(~φ & ~ψ)` and `~φ | ψ`. A formula is true at `x` when `x`
//! lies inside its interpretation at `x`. `φ => ψ` is true at `x` when the
//! interpretation of `φ` at `x` is a subset of that of `ψ` at `x`.

use crate::error::{Error, Result};
use crate::formula::{Formula, Mode};
use crate::model::{Model, VariableValuation};
use crate::state::StateSet;

/// Evaluates formulas against one model in one `=>` mode.
#[derive(Debug, Clone, Copy)]
pub struct Evaluator<'m> {
    model: &'m Model,
    mode: Mode,
}

impl<'m> Evaluator<'m> {
    pub fn new(model: &'m Model) -> Self {
        Self {
            model,
            mode: Mode::Strict,
        }
    }

    pub fn with_mode(model: &'m Model, mode: Mode) -> Self {
        Self { model, mode }
    }

    pub fn model(&self) -> &'m Model {
        self.model
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The interpretation `f(x)`.
    ///
    /// In strict mode `=>` has no pointwise interpretation and is rejected;
    /// in extended mode it is the constant value `⟦φ => ψ⟧`.
    pub fn interpret(&self, f: &Formula, state: usize) -> Result<StateSet> {
        assert!(
            state < self.model.space().len(),
            "state {state} out of range"
        );
        match f {
            Formula::Atom(name) => Ok(self.model.valuation(name)?.at(state).clone()),
            Formula::Not(g) => Ok(self.interpret(g, state)?.complement()),
            Formula::And(l, r) => Ok(self
                .interpret(l, state)?
                .intersection(&self.interpret(r, state)?)),
            Formula::Or(l, r) => {
                // ~(~l & ~r)
                let nl = self.interpret(l, state)?.complement();
                let nr = self.interpret(r, state)?.complement();
                Ok(nl.intersection(&nr).complement())
            }
            Formula::MaterialImp(l, r) => {
                // ~l | r
                let expanded = Formula::Or(Box::new(Formula::Not(l.clone())), r.clone());
                self.interpret(&expanded, state)
            }
            Formula::MeaningImp(l, r) => match self.mode {
                Mode::Strict => Err(Error::StrictEntailment),
                Mode::Extended => self.entailment_set(l, r),
            },
        }
    }

    /// `x ↦ f(x)` for every state.
    pub fn interpret_all(&self, f: &Formula) -> Result<VariableValuation> {
        let images = self
            .model
            .space()
            .states()
            .map(|x| self.interpret(f, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(VariableValuation::from_images(images))
    }

    /// `⟦f⟧`. A top-level `=>` is accepted in both modes.
    pub fn truth_set(&self, f: &Formula) -> Result<StateSet> {
        if let Formula::MeaningImp(l, r) = f {
            return self.entailment_set(l, r);
        }
        let n = self.model.space().len();
        let mut out = StateSet::empty(n);
        for x in 0..n {
            if self.interpret(f, x)?.contains(x) {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// `{x : lhs(x) ⊆ rhs(x)}`.
    fn entailment_set(&self, lhs: &Formula, rhs: &Formula) -> Result<StateSet> {
        if self.mode == Mode::Strict && !(lhs.is_entailment_free() && rhs.is_entailment_free()) {
            return Err(Error::StrictEntailment);
        }
        let n = self.model.space().len();
        let mut out = StateSet::empty(n);
        for x in 0..n {
            if self.interpret(lhs, x)?.is_subset(&self.interpret(rhs, x)?) {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// The valuation used as evidence: `ψ` itself must have a pointwise
    /// interpretation, so in strict mode it must be `=>`-free.
    pub fn evidence_valuation(&self, psi: &Formula) -> Result<VariableValuation> {
        if self.mode == Mode::Strict && !psi.is_entailment_free() {
            return Err(Error::StrictEntailment);
        }
        self.interpret_all(psi)
    }
}
