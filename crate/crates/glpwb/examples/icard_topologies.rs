//! The interval topologies generated by hyperlogarithm bounds: membership,
//! Boolean algebra, emptiness witnesses and derived sets.
//!
//! ```bash
//! cargo run -p glpwb --example icard_topologies
//! ```

use glpwb::icard::{neighborhood, parse_simple_set, rank, SimpleSet};
use glpwb::ordinal::parse_ordinal;
use glpwb::simplefn::parse_simple_function;

fn main() {
    let theta = parse_ordinal("w^w").unwrap();

    // (0,w]_1 collects the points whose first hyperlogarithm is in (0, w]
    let s = parse_simple_set("(0,w]_1", theta.clone()).unwrap();
    for p in ["5", "w", "w+1", "w*2", "w^2"] {
        let point = parse_ordinal(p).unwrap();
        println!("{p:>5} in (0,w]_1: {}", s.member(&point).unwrap());
    }
    println!();

    // the algebra is closed under complement, union and intersection
    let c = s.complement();
    println!("complement: {c}");
    let both = s
        .intersect(&parse_simple_set("(-1,w^2]_0", theta.clone()).unwrap())
        .unwrap();
    println!("intersection with (-1,w^2]_0: {both}");
    println!();

    // emptiness is decidable: the least-solution witness either lands in
    // the set or nothing does
    println!(
        "witness of (0,w]_1: {:?}",
        s.witness().map(|w| w.to_string())
    );
    let empty = parse_simple_set("(w,w]_0", theta.clone()).unwrap();
    println!(
        "witness of (w,w]_0: {:?}",
        empty.witness().map(|w| w.to_string())
    );
    println!();

    // derived sets: limit points in the lambda-th topology
    let full = SimpleSet::full(theta.clone());
    println!(
        "d_0(full) = {}",
        full.derived_set(&parse_ordinal("0").unwrap())
    );
    println!(
        "d_1(full) = {}",
        full.derived_set(&parse_ordinal("1").unwrap())
    );
    println!(
        "d_2(full) = {}",
        full.derived_set(&parse_ordinal("2").unwrap())
    );
    println!();

    // ranks coincide with hyperlogarithms
    for (p, xi) in [("w^w", "1"), ("e[w](1)", "w")] {
        let point = parse_ordinal(p).unwrap();
        let xi = parse_ordinal(xi).unwrap();
        println!("rank of {p} in topology {xi}: {}", rank(&point, &xi));
    }
    println!();

    // basic neighborhoods carved out by strict bound systems
    let r = parse_simple_function("{0:0, 1:1}").unwrap();
    let alpha = parse_ordinal("w^w").unwrap();
    let b = neighborhood(&r, &alpha, parse_ordinal("e[w](1)").unwrap()).unwrap();
    println!("B_r({alpha}) = {b}");
}
