//! Evaluating closed polymodal formulas over interval-topology semantics:
//! valuations are simple sets, so satisfiability and validity are decidable.
//!
//! ```bash
//! cargo run -p glpwb --example closed_fragment
//! ```

use glpwb::formula::{
    eval_closed, is_valid_closed, parse_formula, satisfy_witness, worm_to_formula,
};
use glpwb::ordinal::parse_ordinal;
use glpwb::worm::parse_worm;

fn main() {
    let theta = parse_ordinal("w^w").unwrap();

    // diamond towers carve out the Cantor-Bendixson strata
    for phi in ["<0>T", "<0><0>T", "<1>T", "<1><1>T"] {
        let f = parse_formula(phi).unwrap();
        let set = eval_closed(&f, &theta, false).unwrap();
        println!("[[{phi}]] over [0, w^w) = {set}");
    }
    println!();

    // condensation renames modal indices onto 0..N-1
    let phi = parse_formula("<w+1><w>T").unwrap();
    let (condensed, map) = phi.condense();
    println!("{phi} condenses to {condensed} with index map {map:?}");
    println!();

    // Loeb's axiom holds over every segment; its converse does not
    let loeb = parse_formula("[0]([0]F -> F) -> [0]F").unwrap();
    println!(
        "Loeb valid over [0, w^w): {}",
        is_valid_closed(&loeb, &theta, false).unwrap()
    );
    let reflection = parse_formula("[0]F -> F").unwrap();
    println!(
        "reflection valid over [0, w^w): {}",
        is_valid_closed(&reflection, &theta, false).unwrap()
    );
    println!();

    // worms become satisfiable exactly when the segment is tall enough
    let worm = parse_worm("<w>T").unwrap();
    let phi = worm_to_formula(&worm);
    for bound in ["e[w](1)", "e[w](1)+1"] {
        let theta = parse_ordinal(bound).unwrap();
        match satisfy_witness(&phi, &theta, false).unwrap() {
            Some(w) => println!("{worm} satisfied at {w} below {bound}"),
            None => println!("{worm} unsatisfiable below {bound}"),
        }
    }
}
