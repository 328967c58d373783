//! Simple functions: systems of hyperlogarithm lower bounds and their least
//! solutions.
//!
//! ```bash
//! cargo run -p glpwb --example simple_functions
//! ```

use glpwb::ordinal::{hyper_log, parse_ordinal};
use glpwb::simplefn::{parse_simple_function, SimpleFunction};

fn main() {
    // the system l[0](x) >= eps_0, l[w](x) >= w^2, l[w+1](x) >= 2
    let r = parse_simple_function("{0:e[w](1), w:w^2, w+1:2}").unwrap();
    let solution = r.ceil();
    println!("r = {r}");
    println!("least solution: {solution}");
    for (idx, bound) in r.iter() {
        println!(
            "  l[{idx}]({solution}) = {}  (bound {bound})",
            hyper_log(idx, &solution)
        );
    }
    println!();

    // ceil_strict bumps the top constraint to force strict inequality
    let strict = r.ceil_strict().unwrap();
    println!("least strict solution: {strict}");
    println!();

    // joins take pointwise maxima
    let s = parse_simple_function("{w:w^3, w^2:1}").unwrap();
    println!("r join {s} = {}", r.join(&s));
    println!();

    // bound checks against candidate ordinals
    for candidate in ["e[w](1)", "e[w](w^2*2)", "e[w+1](1)"] {
        let alpha = parse_ordinal(candidate).unwrap();
        println!(
            "r bounded by {candidate}: {} (strictly: {})",
            r.bounded_by(&alpha, false),
            r.bounded_by(&alpha, true)
        );
    }

    // empty systems are satisfied everywhere and solved by zero
    println!("\nempty system solves to {}", SimpleFunction::new().ceil());
}
