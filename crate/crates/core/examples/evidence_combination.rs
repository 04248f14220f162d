//! Dempster's rule against pointwise combination of evidence.

use uncertain_logic::belief::{self, dempster_combine, MassFunction};
use uncertain_logic::fixture::coinflip;
use uncertain_logic::formula::{parse, Mode};
use uncertain_logic::rational::{format, ratio};
use uncertain_logic::{Error, Evaluator, Result, StateSet, StateSpace};

fn show(space: &StateSpace, label: &str, m: &MassFunction) {
    println!("{label}:");
    for (set, mass) in m.iter() {
        println!("  {:24} {}", space.display_set(set), format(mass));
    }
}

fn main() -> Result<()> {
    // A small hand-sized case on three states.
    let three = StateSpace::new(["1", "2", "3"])?;
    let m1 = MassFunction::new(
        3,
        [
            (three.set_of(["1", "2"])?, ratio(1, 2)),
            (three.full_set(), ratio(1, 2)),
        ],
    )?;
    let m2 = MassFunction::new(3, [(three.set_of(["2", "3"])?, ratio(1, 1))])?;
    show(&three, "m1 ⊕ m2", &dempster_combine(&m1, &m2)?);

    let a = MassFunction::new(3, [(StateSet::singleton(3, 0), ratio(1, 1))])?;
    let b = MassFunction::new(3, [(StateSet::singleton(3, 2), ratio(1, 1))])?;
    assert_eq!(dempster_combine(&a, &b), Err(Error::TotalConflict));

    // The same report heard twice.
    let loaded = coinflip();
    let space = loaded.model.space();
    let ev = Evaluator::new(&loaded.model);
    let pi = loaded.measure("pi")?;
    let pbar = parse("pbar", Mode::Strict)?;
    let m = belief::mass_from_evidence(&ev, pi, &pbar)?;
    show(space, "m", &m);
    show(space, "Dempster m ⊕ m", &dempster_combine(&m, &m)?);
    show(
        space,
        "pointwise pbar & pbar",
        &belief::pointwise_combine(&ev, pi, &pbar, &pbar)?,
    );
    show(
        space,
        "pointwise pbar & h",
        &belief::pointwise_combine(&ev, pi, &pbar, &parse("h", Mode::Strict)?)?,
    );
    Ok(())
}
