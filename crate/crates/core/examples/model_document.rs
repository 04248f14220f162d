//! Building a model in code, writing it as JSON and loading it back.

use uncertain_logic::document::ModelDocument;
use uncertain_logic::formula::{parse, Mode};
use uncertain_logic::rational::{format, ratio};
use uncertain_logic::{
    belief, lift_event, Evaluator, Model, ProbabilityMeasure, Result, StateSpace, VariableValuation,
};

fn main() -> Result<()> {
    let space = StateSpace::new(["rain", "sun", "fog"])?;
    let wet = space.set_of(["rain", "fog"])?;
    // "The forecast says wet": on foggy days the forecaster's word is empty.
    let forecast = VariableValuation::new(3, vec![wet.clone(), wet.clone(), space.empty_set()])?;
    let model = Model::new(space.clone())
        .with_atom("forecast", forecast)?
        .with_atom("wet", lift_event(&space, &wet))?;
    let prior = ProbabilityMeasure::from_named_weights(
        "prior",
        &space,
        [
            ("rain", ratio(1, 2)),
            ("sun", ratio(1, 4)),
            ("fog", ratio(1, 4)),
        ],
    )?;

    let json = ModelDocument::from_model(&model, [("prior", &prior)]).to_json();
    println!("{json}");

    let loaded = ModelDocument::from_json(&json)?.build()?;
    assert_eq!(loaded.model, model);
    let ev = Evaluator::new(&loaded.model);
    let forecast = parse("forecast", Mode::Strict)?;
    let wet = ev.truth_set(&parse("wet", Mode::Strict)?)?;
    println!(
        "Bel_forecast(wet) = {}",
        format(&belief::bel(
            &ev,
            loaded.measure("prior")?,
            &forecast,
            &wet
        )?)
    );

    let broken = r#"{"states": ["a"], "atoms": {"x": {"a": ["b"]}}}"#;
    println!(
        "rejected: {}",
        ModelDocument::from_json(broken)?.build().unwrap_err()
    );
    Ok(())
}
