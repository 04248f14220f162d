//! Variable valuations, truth sets and coherence closure.
//!
//! A witness reports on a coin toss. When they are accurate the report means
//! "heads"; when they only say "heads" it means nothing in particular; when
//! they stay silent it means nothing at all.

use uncertain_logic::{lift_event, Model, Result, StateSpace, VariableValuation};

fn main() -> Result<()> {
    let space = StateSpace::new(["H-acc", "H-sh", "H-st", "T-acc", "T-sh", "T-st"])?;
    let heads = space.set_of(["H-acc", "H-sh", "H-st"])?;
    let all = space.full_set();
    let none = space.empty_set();

    // The first-pass reading of the report, state by state.
    let p = VariableValuation::new(
        space.len(),
        vec![
            heads.clone(),
            all.clone(),
            none.clone(),
            heads.clone(),
            all,
            none,
        ],
    )?;
    println!("⟦p⟧            = {}", space.display_set(&p.truth_set()));
    println!("p coherent?    = {}", p.is_coherent());

    // Coherence closure intersects every interpretation with the truth set.
    let pbar = p.coherence_closure();
    println!("⟦pbar⟧         = {}", space.display_set(&pbar.truth_set()));
    println!("pbar coherent? = {}", pbar.is_coherent());
    for (x, name) in space.names().iter().enumerate() {
        println!("  pbar({name:5}) = {}", space.display_set(pbar.at(x)));
    }

    // Plain events lift to constant valuations; truth sets come back unchanged.
    let h = lift_event(&space, &heads);
    assert!(h.is_constant() && h.is_coherent());
    assert_eq!(h.truth_set(), heads);

    let model = Model::new(space).with_atom("p", p)?.with_atom("h", h)?;
    for (atom, v) in model.atoms() {
        println!(
            "atom {atom}: coherent={} constant={}",
            v.is_coherent(),
            v.is_constant()
        );
    }
    Ok(())
}
