//! JSON model documents.
//!
//! ```json
//! {
//!   "states": ["s0", "s1"],
//!   "atoms": {
//!     "p": { "s0": ["s0"], "s1": [] },
//!     "c": { "*": ["s0", "s1"] }
//!   },
//!   "measures": { "pi": { "s0": "1/3", "s1": "2/3" } }
//! }
//! ```
//!
//! `states` fixes the canonical state order. Each atom maps every state to
//! its interpretation (a list of state names); the single key `"*"` gives a
//! constant valuation. Measure weights are rational strings, `"a/b"` or `"n"`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::belief::ProbabilityMeasure;
use crate::error::{Error, Result};
use crate::model::{Model, VariableValuation};
use crate::rational;
use crate::state::{StateSet, StateSpace};

pub const CONSTANT_KEY: &str = "*";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    pub states: Vec<String>,
    #[serde(default)]
    pub atoms: BTreeMap<String, BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    pub measures: BTreeMap<String, BTreeMap<String, String>>,
}

/// A validated document: the model plus its named measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedModel {
    pub model: Model,
    pub measures: BTreeMap<String, ProbabilityMeasure>,
}

impl LoadedModel {
    pub fn measure(&self, name: &str) -> Result<&ProbabilityMeasure> {
        self.measures
            .get(name)
            .ok_or_else(|| Error::UnknownMeasure(name.to_string()))
    }
}

impl ModelDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model documents always serialize")
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Document(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn build(&self) -> Result<LoadedModel> {
        let space = StateSpace::new(self.states.iter().cloned())?;
        let mut model = Model::new(space.clone());
        for (atom, table) in &self.atoms {
            model.add_atom(atom.clone(), valuation_from_table(&space, atom, table)?)?;
        }
        let mut measures = BTreeMap::new();
        for (name, table) in &self.measures {
            let mut weights = Vec::with_capacity(table.len());
            for (state, text) in table {
                weights.push((state.as_str(), rational::parse(text)?));
            }
            let pi = ProbabilityMeasure::from_named_weights(name, &space, weights)?;
            measures.insert(name.clone(), pi);
        }
        Ok(LoadedModel { model, measures })
    }

    /// Serializes a model and measures; constant valuations use `"*"`.
    pub fn from_model<'a, I>(model: &Model, measures: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, &'a ProbabilityMeasure)>,
    {
        let space = model.space();
        let names = |set: &StateSet| space.names_in(set).map(str::to_string).collect::<Vec<_>>();
        let atoms = model
            .atoms()
            .map(|(atom, v)| {
                let table = if v.is_constant() {
                    BTreeMap::from([(CONSTANT_KEY.to_string(), names(v.at(0)))])
                } else {
                    space
                        .states()
                        .map(|x| (space.name(x).to_string(), names(v.at(x))))
                        .collect()
                };
                (atom.to_string(), table)
            })
            .collect();
        let measures = measures
            .into_iter()
            .map(|(name, pi)| {
                let table = space
                    .states()
                    .map(|x| (space.name(x).to_string(), rational::format(pi.weight(x))))
                    .collect();
                (name.to_string(), table)
            })
            .collect();
        Self {
            states: space.names().to_vec(),
            atoms,
            measures,
        }
    }
}

fn valuation_from_table(
    space: &StateSpace,
    atom: &str,
    table: &BTreeMap<String, Vec<String>>,
) -> Result<VariableValuation> {
    if let Some(value) = table.get(CONSTANT_KEY) {
        if table.len() != 1 {
            return Err(Error::Document(format!(
                "atom `{atom}`: \"*\" must be the only key of a constant valuation"
            )));
        }
        return Ok(VariableValuation::constant(space.set_of(value)?));
    }
    for key in table.keys() {
        space.require(key)?;
    }
    let mut images = Vec::with_capacity(space.len());
    for x in space.states() {
        let name = space.name(x);
        let members = table
            .get(name)
            .ok_or_else(|| Error::MissingInterpretation {
                atom: atom.to_string(),
                state: name.to_string(),
            })?;
        images.push(space.set_of(members)?);
    }
    VariableValuation::new(space.len(), images)
}
