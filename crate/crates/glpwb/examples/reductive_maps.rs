//! Reductive maps: collapsing `[0, e[L](T)]` onto `[0, e(T)]` while
//! preserving ranks, by diagonalizing through fundamental sequences.
//!
//! ```bash
//! cargo run -p glpwb --example reductive_maps
//! ```

use glpwb::ordinal::{hyper_exp, hyper_log, parse_ordinal, Ordinal};
use glpwb::reduction::{reductive_map_general, ReductionContext};

fn main() {
    // the map r with target height 2 and superscript w sends
    // [0, e[w](2)] onto [0, w^2]
    let ctx = ReductionContext::new(parse_ordinal("2").unwrap(), Ordinal::omega()).unwrap();
    println!(
        "domain [0, {}]  ->  [0, {}]",
        hyper_exp(&Ordinal::omega(), &parse_ordinal("2").unwrap()),
        hyper_exp(&Ordinal::one(), &parse_ordinal("2").unwrap()),
    );
    println!();

    for xi in ["0", "w", "e[w](1)", "e[w](1)+1", "w^(e[w](1)+1)", "e[w](2)"] {
        let point = parse_ordinal(xi).unwrap();
        let n = if point < hyper_exp(&Ordinal::omega(), &parse_ordinal("2").unwrap()) {
            Some(ctx.n_index(&point).unwrap())
        } else {
            None
        };
        let (value, trace) = ctx.reductive_map_traced(&point).unwrap();
        println!(
            "r({xi}) = {value}   index {}  recursion depth {}",
            n.map(|n| n.to_string()).unwrap_or_else(|| "-".into()),
            trace.len()
        );
        // ranks survive the collapse
        let before = hyper_log(&Ordinal::omega(), &point);
        let after = hyper_log(&Ordinal::one(), &value);
        println!("    rank before {before}, after {after}");
    }
    println!();

    // the partition blocks: where each index lives and where it lands
    for n in 0..4u64 {
        let (lo, hi) = ctx.sigma_block(n).unwrap();
        println!("index {n} lands in [{lo}, {hi})");
    }
    println!();

    // superscripts that are not additively indecomposable go through
    // hyperlogarithm composites
    let theta = parse_ordinal("2").unwrap();
    for lambda in ["0", "1", "2", "w", "w*2"] {
        let lam = parse_ordinal(lambda).unwrap();
        let xi = hyper_exp(
            &glpwb::ordinal::add(&Ordinal::one(), &lam),
            &parse_ordinal("1").unwrap(),
        );
        let value = reductive_map_general(&theta, &lam, &xi).unwrap();
        println!("general r[{lambda}]({xi}) = {value}");
    }
}
