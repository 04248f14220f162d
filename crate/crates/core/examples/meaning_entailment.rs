//! The material conditional versus meaning entailment on the coin-flip model.

use uncertain_logic::fixture::coinflip;
use uncertain_logic::formula::{parse, Mode};
use uncertain_logic::{Evaluator, Result};

fn main() -> Result<()> {
    let loaded = coinflip();
    let space = loaded.model.space();
    let ev = Evaluator::new(&loaded.model);

    for text in ["pbar", "h", "pbar -> h", "pbar => h", "pbar => a"] {
        let f = parse(text, Mode::Strict)?;
        println!("⟦{text:9}⟧ = {}", space.display_set(&ev.truth_set(&f)?));
    }

    // `pbar -> h` holds at H-sh even though the report there does not mean
    // heads; `pbar => h` asks whether the report's meaning entails heads.
    let at = space.index_of("H-sh").expect("fixture state");
    let meaning = ev.interpret(&parse("pbar", Mode::Strict)?, at)?;
    println!("pbar at H-sh means {}", space.display_set(&meaning));

    // With nesting allowed, an inner `=>` denotes its (constant) truth set.
    let extended = Evaluator::with_mode(&loaded.model, Mode::Extended);
    let nested = parse("(pbar => h) & ~h", Mode::Extended)?;
    println!(
        "⟦(pbar => h) & ~h⟧ = {}",
        space.display_set(&extended.truth_set(&nested)?)
    );
    Ok(())
}
