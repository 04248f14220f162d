//! Parsing and printing formulas, and the two parser modes.

use uncertain_logic::formula::{format, parse, Mode, ParseErrorKind};
use uncertain_logic::Formula;

fn main() {
    // ASCII and Unicode spellings parse to the same tree.
    let ascii = parse("~p & (q | r) -> s", Mode::Strict).unwrap();
    let unicode = parse("¬p ∧ (q ∨ r) → s", Mode::Strict).unwrap();
    assert_eq!(ascii, unicode);
    println!("printed:  {}", format(&ascii));

    // The printer emits only the parentheses the grammar needs.
    let built = Formula::implies(
        Formula::and(
            Formula::atom("a"),
            Formula::or(Formula::atom("b"), Formula::atom("c")),
        ),
        Formula::implies(Formula::atom("d"), Formula::atom("e")),
    );
    let text = format(&built);
    println!("built:    {text}");
    assert_eq!(parse(&text, Mode::Strict).unwrap(), built);

    // `=>` may appear only at the top in strict mode.
    println!("top-level: {}", parse("p & q => r", Mode::Strict).unwrap());
    for text in ["(p => q) & r", "p => q => r"] {
        let err = parse(text, Mode::Strict).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NestedEntailment);
        println!("strict rejects {text:14} ({err})");
        let nested = parse(text, Mode::Extended).unwrap();
        println!("extended reads {text:14} as {nested}");
    }

    let err = parse("p & (q", Mode::Strict).unwrap_err();
    println!("syntax error: {err}");
}
