//! Worms: iterated consistency statements and their order types.
//!
//! ```bash
//! cargo run -p glpwb --example worms
//! ```

use glpwb::ordinal::parse_ordinal;
use glpwb::worm::{parse_worm, Worm};

fn main() {
    // order types of small worms
    for text in ["T", "<0>T", "<1>T", "<1><0><1>T", "<w>T", "<w+1><w><w+1>T"] {
        let w = parse_worm(text).unwrap();
        println!("o({text:>16}) = {}", w.order_type());
    }
    println!();

    // the two calculus operations: diamond concatenation and shift
    let v = parse_worm("<1>T").unwrap();
    let joined = v.diamond_concat(&v);
    println!("<1>T <> <1>T = {joined}  with o = {}", joined.order_type());
    let lifted = joined.uparrow(&parse_ordinal("w").unwrap());
    println!("w ^ {joined} = {lifted}  with o = {}", lifted.order_type());
    println!();

    // repeated entries climb e[l]: o(<l>^n T) = e[l](n)
    for n in 0..=4usize {
        let w = Worm::new(vec![parse_ordinal("w").unwrap(); n]);
        println!("o(<w>^{n} T) = {}", w.order_type());
    }
    println!();

    // the consistency-strength order, decided through order types
    let pairs = [("<1>T", "<0><0>T"), ("T", "<0>T"), ("<w>T", "<2><2>T")];
    for (a, b) in pairs {
        let wa = parse_worm(a).unwrap();
        let wb = parse_worm(b).unwrap();
        println!("{a} vs {b}: {}", wa.compare(&wb));
    }
}
