//! Random generators and independent oracles shared by integration tests.
//!
//! Oracles here work on plain `u64` bitmasks and `BigRational`s and never
//! call the library's evaluation, belief or combination code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use uncertain_logic::{
    Formula, MassFunction, Model, ProbabilityMeasure, StateSet, StateSpace, VariableValuation,
};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn mask(set: &StateSet) -> u64 {
    set.to_bits()
}

pub fn full_mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

pub fn random_mask<R: Rng>(rng: &mut R, n: usize) -> u64 {
    rng.gen::<u64>() & full_mask(n)
}

pub fn random_set<R: Rng>(rng: &mut R, n: usize) -> StateSet {
    StateSet::from_bits(n, random_mask(rng, n))
}

/// Arbitrary valuations, with a bias towards the interesting cases
/// (constants, empty images, images containing their own state).
pub fn random_valuation<R: Rng>(rng: &mut R, n: usize) -> VariableValuation {
    match rng.gen_range(0..6) {
        0 => VariableValuation::constant(random_set(rng, n)),
        _ => {
            let images = (0..n)
                .map(|x| {
                    let mut s = random_set(rng, n);
                    match rng.gen_range(0..5) {
                        0 => s = StateSet::empty(n),
                        1 => s.insert(x),
                        _ => {}
                    }
                    s
                })
                .collect();
            VariableValuation::new(n, images).unwrap()
        }
    }
}

pub fn atom_names(k: usize) -> Vec<String> {
    (0..k).map(|i| format!("a{i}")).collect()
}

pub fn random_model<R: Rng>(rng: &mut R, n: usize, atoms: usize) -> Model {
    let mut model = Model::new(StateSpace::numbered(n).unwrap());
    for name in atom_names(atoms) {
        model.add_atom(name, random_valuation(rng, n)).unwrap();
    }
    model
}

pub fn random_constant_model<R: Rng>(rng: &mut R, n: usize, atoms: usize) -> Model {
    let mut model = Model::new(StateSpace::numbered(n).unwrap());
    for name in atom_names(atoms) {
        model
            .add_atom(name, VariableValuation::constant(random_set(rng, n)))
            .unwrap();
    }
    model
}

/// A `=>`-free formula of depth at most `depth`.
pub fn random_formula<R: Rng>(rng: &mut R, atoms: &[String], depth: usize) -> Formula {
    if depth == 0 || rng.gen_range(0..4) == 0 {
        return Formula::atom(atoms[rng.gen_range(0..atoms.len())].clone());
    }
    let sub = |rng: &mut R| random_formula(rng, atoms, depth - 1);
    match rng.gen_range(0..4) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        _ => Formula::implies(sub(rng), sub(rng)),
    }
}

/// Any AST, with `=>` allowed anywhere.
pub fn random_extended_formula<R: Rng>(rng: &mut R, atoms: &[String], depth: usize) -> Formula {
    if depth == 0 || rng.gen_range(0..4) == 0 {
        return Formula::atom(atoms[rng.gen_range(0..atoms.len())].clone());
    }
    let sub = |rng: &mut R| random_extended_formula(rng, atoms, depth - 1);
    match rng.gen_range(0..5) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        3 => Formula::implies(sub(rng), sub(rng)),
        _ => Formula::entails(sub(rng), sub(rng)),
    }
}

/// A formula admissible in strict mode: `=>`-free, or a single outermost `=>`.
pub fn random_strict_formula<R: Rng>(rng: &mut R, atoms: &[String], depth: usize) -> Formula {
    if depth > 0 && rng.gen_bool(0.3) {
        Formula::entails(
            random_formula(rng, atoms, depth - 1),
            random_formula(rng, atoms, depth - 1),
        )
    } else {
        random_formula(rng, atoms, depth)
    }
}

/// Integer weights in 0..=4, normalized; never all zero.
pub fn random_weights<R: Rng>(rng: &mut R, n: usize) -> Vec<Q> {
    let mut raw: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
    if raw.iter().all(|&w| w == 0) {
        raw[rng.gen_range(0..n)] = 1;
    }
    let total: i64 = raw.iter().sum();
    raw.into_iter().map(|w| q(w, total)).collect()
}

pub fn random_measure<R: Rng>(rng: &mut R, n: usize) -> ProbabilityMeasure {
    ProbabilityMeasure::from_weights(random_weights(rng, n)).unwrap()
}

/// A random mass function with 1..=4 focal sets.
pub fn random_mass<R: Rng>(rng: &mut R, n: usize) -> MassFunction {
    let k = rng.gen_range(1..=4);
    let mut entries = Vec::new();
    let weights: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=5)).collect();
    let total: i64 = weights.iter().sum();
    for w in weights {
        let mut bits = random_mask(rng, n);
        if bits == 0 {
            bits = 1 << rng.gen_range(0..n);
        }
        entries.push((StateSet::from_bits(n, bits), q(w, total)));
    }
    MassFunction::new(n, entries).unwrap()
}

pub fn set_mask(n: usize, bits: u64) -> StateSet {
    StateSet::from_bits(n, bits)
}

// ---------------------------------------------------------------- oracles

/// Textbook valuation semantics: each atom denotes one event, connectives
/// are set operations on those events.
pub fn classical_truth_set(f: &Formula, events: &BTreeMap<String, u64>, n: usize) -> u64 {
    let all = full_mask(n);
    match f {
        Formula::Atom(a) => events[a],
        Formula::Not(g) => all & !classical_truth_set(g, events, n),
        Formula::And(l, r) => classical_truth_set(l, events, n) & classical_truth_set(r, events, n),
        Formula::Or(l, r) => classical_truth_set(l, events, n) | classical_truth_set(r, events, n),
        Formula::MaterialImp(l, r) => {
            (all & !classical_truth_set(l, events, n)) | classical_truth_set(r, events, n)
        }
        Formula::MeaningImp(..) => panic!("classical oracle has no =>"),
    }
}

/// `∀x,y: y ∈ v(x) ⇒ y ∈ v(y)`.
pub fn coherent_pointwise(images: &[u64]) -> bool {
    let n = images.len();
    (0..n).all(|x| (0..n).all(|y| images[x] >> y & 1 == 0 || images[y] >> y & 1 == 1))
}

pub fn images_of(v: &VariableValuation) -> Vec<u64> {
    v.images().iter().map(mask).collect()
}

/// Naive pointwise interpretation over bitmasks (`=>`-free formulas).
pub fn oracle_interpret(
    f: &Formula,
    atoms: &BTreeMap<String, Vec<u64>>,
    x: usize,
    n: usize,
) -> u64 {
    let all = full_mask(n);
    match f {
        Formula::Atom(a) => atoms[a][x],
        Formula::Not(g) => all & !oracle_interpret(g, atoms, x, n),
        Formula::And(l, r) => oracle_interpret(l, atoms, x, n) & oracle_interpret(r, atoms, x, n),
        Formula::Or(l, r) => oracle_interpret(l, atoms, x, n) | oracle_interpret(r, atoms, x, n),
        Formula::MaterialImp(l, r) => {
            (all & !oracle_interpret(l, atoms, x, n)) | oracle_interpret(r, atoms, x, n)
        }
        Formula::MeaningImp(..) => panic!("oracle interpret has no =>"),
    }
}

pub fn atom_table(model: &Model) -> BTreeMap<String, Vec<u64>> {
    model
        .atoms()
        .map(|(name, v)| (name.to_string(), images_of(v)))
        .collect()
}

pub fn prob(weights: &[Q], bits: u64) -> Q {
    weights
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, w)| w.clone())
        .sum()
}

/// `m(A) = π(ψ⁻¹(A) ∩ ⟦ψ⟧) / π(⟦ψ⟧)` for every `A ⊆ X`, by enumeration.
pub fn mass_oracle(images: &[u64], weights: &[Q]) -> BTreeMap<u64, Q> {
    let n = images.len();
    let truth: u64 = (0..n)
        .filter(|&x| images[x] >> x & 1 == 1)
        .fold(0, |m, x| m | 1 << x);
    let denom = prob(weights, truth);
    assert!(!denom.is_zero());
    let mut out = BTreeMap::new();
    for a in 0..=full_mask(n) {
        let pre: u64 = (0..n)
            .filter(|&x| images[x] == a)
            .fold(0, |m, x| m | 1 << x);
        let m = prob(weights, pre & truth) / &denom;
        if !m.is_zero() {
            out.insert(a, m);
        }
    }
    out
}

/// Dempster's rule evaluated literally over the full powerset pair grid.
pub fn dempster_oracle(
    m1: &BTreeMap<u64, Q>,
    m2: &BTreeMap<u64, Q>,
    n: usize,
) -> Option<BTreeMap<u64, Q>> {
    let get = |m: &BTreeMap<u64, Q>, k: u64| m.get(&k).cloned().unwrap_or_else(Q::zero);
    let top = full_mask(n);
    let mut normalizer = Q::zero();
    for b1 in 0..=top {
        for b2 in 0..=top {
            if b1 & b2 != 0 {
                normalizer += get(m1, b1) * get(m2, b2);
            }
        }
    }
    if normalizer.is_zero() {
        return None;
    }
    let mut out = BTreeMap::new();
    for a in 1..=top {
        let mut num = Q::zero();
        for a1 in 0..=top {
            for a2 in 0..=top {
                if a1 & a2 == a {
                    num += get(m1, a1) * get(m2, a2);
                }
            }
        }
        if !num.is_zero() {
            out.insert(a, num / &normalizer);
        }
    }
    Some(out)
}

pub fn mass_table(m: &MassFunction) -> BTreeMap<u64, Q> {
    m.iter().map(|(s, v)| (mask(s), v.clone())).collect()
}
