use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::state::{StateSet, StateSpace};

/// An exact probability measure: one nonnegative weight per state, summing to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityMeasure {
    weights: Vec<Rational>,
}

impl ProbabilityMeasure {
    /// Validates named weights against a space. `label` names the measure in errors.
    pub fn from_named_weights<'a, I>(label: &str, space: &StateSpace, weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, Rational)>,
    {
        let mut slots: Vec<Option<Rational>> = vec![None; space.len()];
        for (name, w) in weights {
            let idx = space.require(name)?;
            slots[idx] = Some(w);
        }
        let mut out = Vec::with_capacity(slots.len());
        for (idx, slot) in slots.into_iter().enumerate() {
            match slot {
                Some(w) => out.push(w),
                None => {
                    return Err(Error::MissingWeight {
                        measure: label.to_string(),
                        state: space.name(idx).to_string(),
                    })
                }
            }
        }
        Self::checked(label, out, |i| space.name(i).to_string())
    }

    /// Weights by state index.
    pub fn from_weights(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptySpace);
        }
        Self::checked("measure", weights, |i| i.to_string())
    }

    fn checked(
        label: &str,
        weights: Vec<Rational>,
        name: impl Fn(usize) -> String,
    ) -> Result<Self> {
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| rational::is_negative(w))
        {
            return Err(Error::NegativeWeight {
                measure: label.to_string(),
                state: name(i),
                weight: w.clone(),
            });
        }
        let total: Rational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::NotNormalized {
                measure: label.to_string(),
                total,
            });
        }
        Ok(Self { weights })
    }

    pub fn uniform(universe: usize) -> Self {
        assert!(universe > 0);
        Self {
            weights: vec![rational::ratio(1, universe as i64); universe],
        }
    }

    pub fn universe(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, state: usize) -> &Rational {
        &self.weights[state]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// States of positive weight.
    pub fn support(&self) -> StateSet {
        StateSet::from_indices(
            self.universe(),
            self.weights
                .iter()
                .enumerate()
                .filter(|(_, w)| !w.is_zero())
                .map(|(i, _)| i),
        )
    }

    /// `π(A) = Σ_{x ∈ A} π(x)`.
    pub fn probability(&self, event: &StateSet) -> Rational {
        assert_eq!(
            event.universe(),
            self.universe(),
            "event over a different space"
        );
        event.iter().map(|x| &self.weights[x]).sum()
    }

    /// `π(A | B)`; undefined when `π(B) = 0`.
    pub fn conditional(&self, event: &StateSet, given: &StateSet) -> Result<Rational> {
        let denom = self.probability(given);
        if denom.is_zero() {
            return Err(Error::UndefinedConditioning {
                what: "the given event".into(),
            });
        }
        Ok(self.probability(&event.intersection(given)) / denom)
    }

    /// The posterior `x ↦ π(x)/π(B)` on `B`, 0 elsewhere.
    pub fn condition(&self, given: &StateSet) -> Result<Self> {
        let denom = self.probability(given);
        if denom.is_zero() {
            return Err(Error::UndefinedConditioning {
                what: "the given event".into(),
            });
        }
        let weights = self
            .weights
            .iter()
            .enumerate()
            .map(|(x, w)| {
                if given.contains(x) {
                    w / &denom
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Ok(Self { weights })
    }
}
