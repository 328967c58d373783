//! Hyperexponentials, hyperlogarithms, fundamental sequences and the
//! stabilization of hyperlogarithm sequences at limit superscripts.
//!
//! ```bash
//! cargo run -p glpwb --example hyperexponentials
//! ```

use glpwb::ordinal::{add, fund_seq, hyper_exp, hyper_log, parse_ordinal, stabilization, Ordinal};

fn main() {
    let one = Ordinal::one();
    let w = Ordinal::omega();

    // e[n](1) climbs the finite tower; e[w](1) is its limit
    for n in 0..=4u64 {
        println!("e[{n}](1) = {}", hyper_exp(&Ordinal::nat(n), &one));
    }
    println!("e[w](1) = {}", hyper_exp(&w, &one));
    println!("e[w](2) = {}", hyper_exp(&w, &Ordinal::nat(2)));
    println!("e[w](w) = {}", hyper_exp(&w, &w));
    println!();

    // the hyperlogarithm sequence of e[w](w*3) + e[w](w*2)
    let gamma = add(
        &hyper_exp(&w, &parse_ordinal("w*3").unwrap()),
        &hyper_exp(&w, &parse_ordinal("w*2").unwrap()),
    );
    println!("gamma = {gamma}");
    for xi in ["0", "1", "2", "w", "w+1", "w+2"] {
        let xi = parse_ordinal(xi).unwrap();
        println!("  l[{xi}](gamma) = {}", hyper_log(&xi, &gamma));
    }
    println!();

    // the sequence is constant from some witness below each limit
    let (witness, value) = stabilization(&w, &gamma).unwrap();
    println!("stable from l[{witness}] onward, value {value}");
    println!();

    // fundamental sequences converge from below
    for xi in ["w^2", "e[w](1)", "e[w^2](1)"] {
        let xi = parse_ordinal(xi).unwrap();
        let members: Vec<String> = (0..4)
            .map(|n| fund_seq(&xi, n).unwrap().to_string())
            .collect();
        println!("{xi}[0..4] = {}", members.join(", "));
    }
}
