//! Finite Kripke frames for the logic J: validation, tree-likeness, model
//! checking, bounded countermodel search, and the frame argument showing
//! the full polymodal logic has no non-trivial Kripke frames.
//!
//! ```bash
//! cargo run -p glpwb --example j_logic
//! ```

use glpwb::formula::parse_formula;
use glpwb::jlogic::{bounded_sat, glp_frame_triviality, m_plus, JFrame, JModel};
use std::collections::{BTreeMap, BTreeSet};

fn main() {
    // the three-world frame: u <_0 w and v <_0 w
    let mut frame = JFrame::new(vec!["u".into(), "v".into(), "w".into()], 2);
    frame.relations[0].insert((0, 2));
    frame.relations[0].insert((1, 2));
    println!("violations: {:?}", frame.validate());
    println!("tree-like: {}", frame.is_treelike().unwrap());
    println!("frame JSON: {}", frame.to_json());
    println!();

    // model checking against a valuation
    let model = JModel {
        frame: frame.clone(),
        valuation: BTreeMap::from([("p".to_string(), BTreeSet::from([0usize]))]),
    };
    let w = model.frame.world_index("w").unwrap();
    for phi in ["<0>p", "[0]p", "<0>T & [1]F"] {
        let f = parse_formula(phi).unwrap();
        println!("w |= {phi}: {}", model.holds(w, &f).unwrap());
    }
    println!();

    // bounded search finds tree-like models of satisfiable formulas
    let phi = parse_formula("<1><0>T").unwrap();
    let goal = glpwb::formula::Formula::and(m_plus(&phi, None), phi);
    match bounded_sat(&goal, 4).unwrap() {
        Some((model, world)) => {
            println!(
                "M+ bridge model found at {}: {}",
                model.frame.worlds[world],
                model.to_json()
            );
        }
        None => println!("no model within 4 worlds"),
    }
    println!();

    // adding any upper-relation edge to a frame satisfying the full-logic
    // conditions forces reflexivity, so such frames are trivial
    let mut trivial = JFrame::new(vec!["a".into(), "b".into()], 2);
    trivial.relations[0].insert((0, 1));
    println!(
        "conditions hold with empty <_1: {}",
        glp_frame_triviality(&trivial)
    );
    trivial.relations[1].insert((0, 1));
    println!(
        "conditions after adding a <_1 edge: {}",
        glp_frame_triviality(&trivial)
    );
}
