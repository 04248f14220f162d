use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::state::StateSet;

/// A probability distribution over nonempty subsets of a finite space.
///
/// Only sets of positive mass are stored. Entries iterate in the canonical
/// set encoding order, so two mass functions are equal exactly when they
/// assign the same masses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MassFunction {
    universe: usize,
    masses: BTreeMap<StateSet, Rational>,
}

impl MassFunction {
    /// Builds a mass function; repeated sets have their masses added and
    /// zero-mass entries are dropped.
    pub fn new<I>(universe: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (StateSet, Rational)>,
    {
        let mut masses: BTreeMap<StateSet, Rational> = BTreeMap::new();
        for (set, mass) in entries {
            if set.universe() != universe {
                return Err(Error::SpaceMismatch {
                    expected: universe,
                    found: set.universe(),
                });
            }
            if rational::is_negative(&mass) {
                return Err(Error::InvalidMass(format!(
                    "negative mass {} on {set:?}",
                    rational::format(&mass)
                )));
            }
            *masses.entry(set).or_insert_with(Rational::zero) += mass;
        }
        masses.retain(|_, m| !m.is_zero());
        if masses.keys().any(StateSet::is_empty) {
            return Err(Error::InvalidMass(
                "the empty set carries positive mass".into(),
            ));
        }
        let total: Rational = masses.values().sum();
        if !total.is_one() {
            return Err(Error::InvalidMass(format!(
                "masses sum to {}, not 1",
                rational::format(&total)
            )));
        }
        Ok(Self { universe, masses })
    }

    pub(crate) fn from_parts(universe: usize, masses: BTreeMap<StateSet, Rational>) -> Self {
        debug_assert!(masses.values().all(|m| !m.is_zero()));
        debug_assert!(masses
            .keys()
            .all(|s| !s.is_empty() && s.universe() == universe));
        Self { universe, masses }
    }

    /// All mass on the whole space.
    pub fn vacuous(universe: usize) -> Self {
        Self::from_parts(
            universe,
            BTreeMap::from([(StateSet::full(universe), Rational::one())]),
        )
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn mass(&self, set: &StateSet) -> Rational {
        self.masses.get(set).cloned().unwrap_or_else(Rational::zero)
    }

    /// Focal sets with their masses, in encoding order.
    pub fn iter(&self) -> impl Iterator<Item = (&StateSet, &Rational)> {
        self.masses.iter()
    }

    pub fn focal_sets(&self) -> impl Iterator<Item = &StateSet> {
        self.masses.keys()
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    /// `Bel_m(A) = Σ_{B ⊆ A} m(B)`.
    pub fn belief(&self, event: &StateSet) -> Rational {
        assert_eq!(
            event.universe(),
            self.universe,
            "event over a different space"
        );
        self.masses
            .iter()
            .filter(|(b, _)| b.is_subset(event))
            .map(|(_, m)| m)
            .sum()
    }
}

/// Dempster's rule: products of masses accumulate on pairwise intersections,
/// then everything is renormalized by the mass of non-conflicting pairs.
pub fn dempster_combine(m1: &MassFunction, m2: &MassFunction) -> Result<MassFunction> {
    if m1.universe != m2.universe {
        return Err(Error::SpaceMismatch {
            expected: m1.universe,
            found: m2.universe,
        });
    }
    let mut combined: BTreeMap<StateSet, Rational> = BTreeMap::new();
    let mut normalizer = Rational::zero();
    for (a, ma) in &m1.masses {
        for (b, mb) in &m2.masses {
            let meet = a.intersection(b);
            if meet.is_empty() {
                continue;
            }
            let product = ma * mb;
            normalizer += &product;
            *combined.entry(meet).or_insert_with(Rational::zero) += product;
        }
    }
    if normalizer.is_zero() {
        return Err(Error::TotalConflict);
    }
    for m in combined.values_mut() {
        *m /= &normalizer;
    }
    Ok(MassFunction::from_parts(m1.universe, combined))
}
