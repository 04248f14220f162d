//! EXPLORATORY: averaging the updates on each possible meaning of the evidence.
//!
//! Each distinct interpretation E of ψ contributes π(⟦φ⟧ | E) weighted by the
//! prior probability of the states where ψ means E. Interpretations with
//! probability zero (including the empty one) are skipped without
//! renormalizing, so the weights need not sum to one.

use uncertain_logic::belief::{self, exploratory};
use uncertain_logic::fixture::coinflip;
use uncertain_logic::formula::{parse, Mode};
use uncertain_logic::rational::format;
use uncertain_logic::{Evaluator, Result};

fn main() -> Result<()> {
    let loaded = coinflip();
    let space = loaded.model.space();
    let ev = Evaluator::new(&loaded.model);
    let pi = loaded.measure("pi")?;
    let f = |t: &str| parse(t, Mode::Strict);
    let (h, pbar) = (f("h")?, f("pbar")?);

    for (meaning, states) in ev.interpret_all(&pbar)?.fibers() {
        println!(
            "pbar means {:24} at {:20} (weight {})",
            space.display_set(&meaning),
            space.display_set(&states),
            format(&pi.probability(&states))
        );
    }
    println!(
        "pointwise  P(h | pbar) = {}",
        format(&exploratory::pointwise_condition(&ev, pi, &h, &pbar)?)
    );
    println!(
        "classical  P(h | pbar) = {}",
        format(&belief::degree_given(&ev, pi, &h, &pbar)?)
    );
    println!(
        "pointwise  P(h or ~h | pbar) = {}",
        format(&exploratory::pointwise_condition(
            &ev,
            pi,
            &f("h | ~h")?,
            &pbar
        )?)
    );
    Ok(())
}
