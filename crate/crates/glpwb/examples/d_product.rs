//! The d-product bound, its two components and the projections onto the
//! factors.
//!
//! ```bash
//! cargo run -p glpwb --example d_product
//! ```

use glpwb::dproduct::{Component, DProductContext};
use glpwb::ordinal::parse_ordinal;

fn main() {
    let ctx = DProductContext::new(parse_ordinal("w^2").unwrap(), parse_ordinal("w+1").unwrap());
    println!("Xi = {}, Theta = {}", ctx.xi, ctx.theta);
    println!("bound = {}", ctx.bound);
    println!();

    for p in ["0", "3", "w", "w^2", "w^2+3", "w^3", "w^3+w+3", "w^3+w^2"] {
        let point = parse_ordinal(p).unwrap();
        match ctx.component(&point).unwrap() {
            Component::G0 => println!(
                "{p:>10}  G0   pi0 = {:<6} pi1 = {}",
                ctx.pi0(&point).unwrap().to_string(),
                ctx.pi1(&point).unwrap()
            ),
            Component::G1 => println!(
                "{p:>10}  G1   pi0 undefined, pi1 = {}",
                ctx.pi1(&point).unwrap()
            ),
        }
    }
    println!();

    // each non-limit index below Theta carries an order copy of [0, Xi]
    let ctx = DProductContext::new(parse_ordinal("2").unwrap(), parse_ordinal("2").unwrap());
    println!("small product with Xi = 2, Theta = 2: bound {}", ctx.bound);
    for n in 0..=8u64 {
        let p = parse_ordinal(&n.to_string()).unwrap();
        if p > ctx.bound {
            break;
        }
        println!(
            "  {n}: fiber {} offset {}",
            ctx.pi1(&p).unwrap(),
            ctx.pi0(&p).unwrap()
        );
    }
}
