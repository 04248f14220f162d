//! Variable valuations and models.
//!
//! A variable valuation assigns every state an event: the proposition's
//! correct interpretation at that state. A state belongs to the truth set
//! exactly when it lies inside its own interpretation.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::formula::is_identifier;
use crate::state::{StateSet, StateSpace};

/// A total map from the states of one space to state sets over that space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableValuation {
    images: Vec<StateSet>,
}

impl VariableValuation {
    /// `images[x]` is the interpretation at state `x`.
    ///
    /// Fails if there is no image per state or an image lives in another space.
    pub fn new(universe: usize, images: Vec<StateSet>) -> Result<Self> {
        if images.len() != universe {
            return Err(Error::SpaceMismatch {
                expected: universe,
                found: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|s| s.universe() != universe) {
            return Err(Error::SpaceMismatch {
                expected: universe,
                found: bad.universe(),
            });
        }
        if universe == 0 {
            return Err(Error::EmptySpace);
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images(images: Vec<StateSet>) -> Self {
        debug_assert!(!images.is_empty());
        debug_assert!(images.iter().all(|s| s.universe() == images.len()));
        Self { images }
    }

    /// The constant valuation `x ↦ value`.
    pub fn constant(value: StateSet) -> Self {
        let n = value.universe();
        assert!(n > 0, "constant valuation over an empty space");
        Self {
            images: vec![value; n],
        }
    }

    pub fn universe(&self) -> usize {
        self.images.len()
    }

    pub fn at(&self, state: usize) -> &StateSet {
        &self.images[state]
    }

    pub fn images(&self) -> &[StateSet] {
        &self.images
    }

    pub fn is_constant(&self) -> bool {
        self.images.windows(2).all(|w| w[0] == w[1])
    }

    /// `{x : x ∈ v(x)}`.
    pub fn truth_set(&self) -> StateSet {
        let n = self.universe();
        StateSet::from_indices(n, (0..n).filter(|&x| self.images[x].contains(x)))
    }

    /// Every interpretation is contained in the truth set.
    pub fn is_coherent(&self) -> bool {
        let truth = self.truth_set();
        self.images.iter().all(|img| img.is_subset(&truth))
    }

    /// The pointwise intersection `x ↦ v(x) ∩ ⟦v⟧`.
    ///
    /// The result is coherent and has the same truth set as `self`.
    pub fn coherence_closure(&self) -> Self {
        let truth = self.truth_set();
        Self {
            images: self
                .images
                .iter()
                .map(|img| img.intersection(&truth))
                .collect(),
        }
    }

    /// `{x : v(x) = target}`.
    pub fn preimage(&self, target: &StateSet) -> StateSet {
        let n = self.universe();
        StateSet::from_indices(n, (0..n).filter(|&x| &self.images[x] == target))
    }

    /// `{x : v(x) ⊆ target}`.
    pub fn entails(&self, target: &StateSet) -> StateSet {
        let n = self.universe();
        StateSet::from_indices(n, (0..n).filter(|&x| self.images[x].is_subset(target)))
    }

    /// The distinct interpretations, each with its preimage, in encoding order.
    pub fn fibers(&self) -> BTreeMap<StateSet, StateSet> {
        let n = self.universe();
        let mut out: BTreeMap<StateSet, StateSet> = BTreeMap::new();
        for (x, img) in self.images.iter().enumerate() {
            out.entry(img.clone())
                .or_insert_with(|| StateSet::empty(n))
                .insert(x);
        }
        out
    }
}

/// Lifts an event to the constant valuation `x ↦ event`; its truth set is `event`.
pub fn lift_event(space: &StateSpace, event: &StateSet) -> VariableValuation {
    assert_eq!(
        space.len(),
        event.universe(),
        "event over a different space"
    );
    VariableValuation::constant(event.clone())
}

/// A state space together with a valuation for each named atom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    space: StateSpace,
    atoms: BTreeMap<String, VariableValuation>,
}

impl Model {
    pub fn new(space: StateSpace) -> Self {
        Self {
            space,
            atoms: BTreeMap::new(),
        }
    }

    /// Adds an atom. Names must be formula identifiers and unique.
    pub fn add_atom(
        &mut self,
        name: impl Into<String>,
        valuation: VariableValuation,
    ) -> Result<()> {
        let name = name.into();
        if !is_identifier(&name) {
            return Err(Error::InvalidAtomName(name));
        }
        if valuation.universe() != self.space.len() {
            return Err(Error::SpaceMismatch {
                expected: self.space.len(),
                found: valuation.universe(),
            });
        }
        if self.atoms.contains_key(&name) {
            return Err(Error::DuplicateAtom(name));
        }
        self.atoms.insert(name, valuation);
        Ok(())
    }

    pub fn with_atom(
        mut self,
        name: impl Into<String>,
        valuation: VariableValuation,
    ) -> Result<Self> {
        self.add_atom(name, valuation)?;
        Ok(self)
    }

    /// Replaces (or inserts) an atom's valuation.
    pub fn set_atom(
        &mut self,
        name: impl Into<String>,
        valuation: VariableValuation,
    ) -> Result<()> {
        let name = name.into();
        self.atoms.remove(&name);
        self.add_atom(name, valuation)
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&str, &VariableValuation)> {
        self.atoms.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn valuation(&self, atom: &str) -> Result<&VariableValuation> {
        self.atoms
            .get(atom)
            .ok_or_else(|| Error::UnknownAtom(atom.to_string()))
    }

    pub fn truth_set_atom(&self, atom: &str) -> Result<StateSet> {
        Ok(self.valuation(atom)?.truth_set())
    }

    pub fn is_coherent(&self, atom: &str) -> Result<bool> {
        Ok(self.valuation(atom)?.is_coherent())
    }

    pub fn coherence_closure(&self, atom: &str) -> Result<VariableValuation> {
        Ok(self.valuation(atom)?.coherence_closure())
    }
}
