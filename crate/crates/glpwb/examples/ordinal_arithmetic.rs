//! Parsing, comparing and combining ordinal notations.
//!
//! ```bash
//! cargo run -p glpwb --example ordinal_arithmetic
//! ```

use glpwb::ordinal::{add, divmod, left_subtract, mul, parse_ordinal, Ordinal};

fn main() {
    // every textual spelling normalizes to one canonical term
    for text in ["1+w", "w^0", "w+w", "w*2+w^2", "l[w](e[w](1))"] {
        let x = parse_ordinal(text).unwrap();
        println!("{text:>16}  =  {x}");
    }
    println!();

    let w = Ordinal::omega();
    let eps0 = parse_ordinal("e[w](1)").unwrap();

    // comparison is structural because terms are canonical
    println!(
        "w^w  vs  e[w](1):   {}",
        parse_ordinal("w^w").unwrap().compare(&eps0)
    );
    println!(
        "e[w](1)*2 vs e[w](2): {}",
        mul(&eps0, &Ordinal::nat(2)).compare(&parse_ordinal("e[w](2)").unwrap())
    );
    println!();

    // sums absorb on the left, products distribute on the right
    println!("1 + w        = {}", add(&Ordinal::one(), &w));
    println!("w + 1        = {}", add(&w, &Ordinal::one()));
    println!("(w+1) * w    = {}", mul(&parse_ordinal("w+1").unwrap(), &w));
    println!(
        "-w + w^2     = {}",
        left_subtract(&w, &parse_ordinal("w^2").unwrap()).unwrap()
    );

    // division recovers quotient and remainder
    let (q, r) = divmod(
        &parse_ordinal("w^3+w*2+1").unwrap(),
        &parse_ordinal("w^2").unwrap(),
    )
    .unwrap();
    println!("w^3+w*2+1 = w^2 * ({q}) + {r}");
}
