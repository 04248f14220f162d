//! Mass functions induced by evidence, and belief recovered from them.

use uncertain_logic::belief;
use uncertain_logic::fixture::coinflip;
use uncertain_logic::formula::{parse, Mode};
use uncertain_logic::rational::format;
use uncertain_logic::state::powerset;
use uncertain_logic::{Evaluator, Result};

fn main() -> Result<()> {
    let loaded = coinflip();
    let space = loaded.model.space();
    let ev = Evaluator::new(&loaded.model);
    let pi = loaded.measure("pi")?;
    let pbar = parse("pbar", Mode::Strict)?;

    let m = belief::mass_from_evidence(&ev, pi, &pbar)?;
    println!("mass of pbar under pi:");
    for (set, mass) in m.iter() {
        println!("  {:24} {}", space.display_set(set), format(mass));
    }

    // Summing masses of focal sets inside A gives back Bel for every A.
    let mut agree = 0;
    for event in powerset(space.len()) {
        assert_eq!(
            belief::bel_from_mass(&m, &event),
            belief::bel(&ev, pi, &pbar, &event)?
        );
        agree += 1;
    }
    println!("Bel_m = Bel on all {agree} events");
    Ok(())
}
