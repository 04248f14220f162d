//! Conditioning on a report's truth set versus evidentially supported belief.

use uncertain_logic::belief;
use uncertain_logic::fixture::coinflip;
use uncertain_logic::formula::{parse, Mode};
use uncertain_logic::rational::format;
use uncertain_logic::{Evaluator, Result};

fn main() -> Result<()> {
    let loaded = coinflip();
    let space = loaded.model.space();
    let ev = Evaluator::new(&loaded.model);
    let f = |t: &str| parse(t, Mode::Strict);
    let (pbar, h, a) = (f("pbar")?, f("h")?, f("a")?);

    for name in ["pi", "piPrime"] {
        let prior = loaded.measure(name)?;
        let post = belief::posterior(&ev, prior, &pbar)?;
        println!("{name}:");
        for (x, state) in space.names().iter().enumerate() {
            println!(
                "  {state:5}  prior {:>4}  given ⟦pbar⟧ {:>4}",
                format(prior.weight(x)),
                format(post.weight(x))
            );
        }
        let heads = ev.truth_set(&h)?;
        let acc = ev.truth_set(&a)?;
        println!(
            "  P(h | pbar) = {:4}  Bel_pbar(h) = {}",
            format(&belief::degree_given(&ev, prior, &h, &pbar)?),
            format(&belief::bel(&ev, prior, &pbar, &heads)?)
        );
        println!(
            "  P(a | pbar) = {:4}  Bel_pbar(a) = {}",
            format(&belief::degree_given(&ev, prior, &a, &pbar)?),
            format(&belief::bel(&ev, prior, &pbar, &acc)?)
        );
    }

    // A prior that puts no weight on the report being true leaves belief undefined.
    let err = belief::bel(&ev, loaded.measure("piZero")?, &pbar, &space.full_set()).unwrap_err();
    println!("piZero: {err}");
    Ok(())
}
