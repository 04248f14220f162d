//! Finite state spaces and bit-vector state sets.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// A nonempty, ordered set of named states.
///
/// Declaration order is canonical: the `i`-th name is state index `i`, and
/// every [`StateSet`] over this space is keyed by those indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpace {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl StateSpace {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidStateName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateState(name.clone()));
            }
        }
        Ok(Self { names, index })
    }

    /// A space of `n` states named `"0"`, `"1"`, ...
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, state: usize) -> &str {
        &self.names[state]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn states(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    pub fn empty_set(&self) -> StateSet {
        StateSet::empty(self.len())
    }

    pub fn full_set(&self) -> StateSet {
        StateSet::full(self.len())
    }

    /// Builds a set from state names, failing on the first undeclared name.
    pub fn set_of<I, S>(&self, names: I) -> Result<StateSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = self.empty_set();
        for name in names {
            set.insert(self.require(name.as_ref())?);
        }
        Ok(set)
    }

    pub fn names_in<'a>(&'a self, set: &'a StateSet) -> impl Iterator<Item = &'a str> + 'a {
        debug_assert_eq!(set.universe(), self.len());
        set.iter().map(move |i| self.name(i))
    }

    /// Renders a set as `{a, b, c}` in canonical state order.
    pub fn display_set(&self, set: &StateSet) -> String {
        let names: Vec<&str> = self.names_in(set).collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// A subset of a finite state space, stored as a fixed-width bit vector.
///
/// Ordering compares the universe size first and then the bit vector read
/// as an unsigned integer (state 0 is the least significant bit). That
/// integer is the canonical encoding used to sort mass-function entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    universe: usize,
    words: Vec<u64>,
}

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for w in &mut set.words {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    pub fn singleton(universe: usize, state: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(state);
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, states: I) -> Self {
        let mut set = Self::empty(universe);
        for s in states {
            set.insert(s);
        }
        set
    }

    /// Builds a set from the low `universe` bits of `bits`.
    ///
    /// Panics if `universe > 64` or if `bits` has a bit set at or above `universe`.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        assert!(
            universe <= WORD_BITS,
            "from_bits supports at most 64 states"
        );
        assert!(
            universe == WORD_BITS || bits >> universe == 0,
            "bit {} out of range for universe {universe}",
            WORD_BITS - 1 - bits.leading_zeros() as usize
        );
        let mut set = Self::empty(universe);
        if universe > 0 {
            set.words[0] = bits;
        }
        set
    }

    /// The low 64 bits of the encoding; exact for universes of at most 64 states.
    pub fn to_bits(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, state: usize) {
        assert!(
            state < self.universe,
            "state {state} out of range for universe {}",
            self.universe
        );
        self.words[state / WORD_BITS] |= 1 << (state % WORD_BITS);
    }

    pub fn remove(&mut self, state: usize) {
        if state < self.universe {
            self.words[state / WORD_BITS] &= !(1 << (state % WORD_BITS));
        }
    }

    pub fn contains(&self, state: usize) -> bool {
        state < self.universe && self.words[state / WORD_BITS] & (1 << (state % WORD_BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn complement(&self) -> Self {
        let mut out = Self {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.trim();
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + bit)
            })
        })
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_universe(other);
        Self {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "state sets over different spaces"
        );
    }

    fn trim(&mut self) {
        let tail = self.universe % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

impl Ord for StateSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for StateSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Every subset of a universe of at most 63 states, in encoding order.
pub fn powerset(universe: usize) -> impl Iterator<Item = StateSet> {
    assert!(
        universe < WORD_BITS,
        "powerset enumeration limited to 63 states"
    );
    (0..1u64 << universe).map(move |bits| StateSet::from_bits(universe, bits))
}
