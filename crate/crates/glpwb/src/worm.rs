//! Worms: iterated consistency statements `<l0>...<lI>T`, their
//! concatenation and shift operations, and the order type `o` of the
//! consistency-strength well-order.

use crate::ordinal::{add, hyper_exp, left_subtract, OrdCompare, Ordinal};
use crate::Error;
use std::fmt;

/// A finite sequence of ordinal entries; the empty worm is `T`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Worm {
    pub entries: Vec<Ordinal>,
}

impl Worm {
    pub fn top() -> Self {
        Worm {
            entries: Vec::new(),
        }
    }

    pub fn new(entries: Vec<Ordinal>) -> Self {
        Worm { entries }
    }

    pub fn is_top(&self) -> bool {
        self.entries.is_empty()
    }

    /// `self <> other`: self, then a `<0>`, then other.
    pub fn diamond_concat(&self, other: &Worm) -> Worm {
        let mut entries = self.entries.clone();
        entries.push(Ordinal::Zero);
        entries.extend(other.entries.iter().cloned());
        Worm { entries }
    }

    /// `alpha ^ self`: adds `alpha` on the left of every entry.
    pub fn uparrow(&self, alpha: &Ordinal) -> Worm {
        Worm {
            entries: self.entries.iter().map(|e| add(alpha, e)).collect(),
        }
    }

    /// The order type under the consistency-strength well-order.
    ///
    /// Determined by `o(T) = 0`, `o(v <> w) = o(w) + 1 + o(v)` and
    /// `o(a ^ w) = e[a](o(w))`: factor out the minimal entry, split the
    /// remainder at its zeros, and fold.
    pub fn order_type(&self) -> Ordinal {
        if self.is_top() {
            return Ordinal::Zero;
        }
        let min = self.entries.iter().min().expect("non-empty");
        if !min.is_zero() {
            let shifted = Worm {
                entries: self
                    .entries
                    .iter()
                    .map(|e| left_subtract(min, e).expect("min entry"))
                    .collect(),
            };
            return hyper_exp(min, &shifted.order_type());
        }
        // split at zero entries: [s1, 0, s2, 0, ..., sk] denotes
        // s1 <> (s2 <> (... <> sk)); each segment has positive entries
        let mut segments: Vec<Vec<Ordinal>> = vec![Vec::new()];
        for e in &self.entries {
            if e.is_zero() {
                segments.push(Vec::new());
            } else {
                segments.last_mut().unwrap().push(e.clone());
            }
        }
        let mut acc = Worm::new(segments.pop().unwrap()).order_type();
        while let Some(seg) = segments.pop() {
            let head = Worm::new(seg).order_type();
            acc = add(&add(&acc, &Ordinal::one()), &head);
        }
        acc
    }

    /// Compares in the consistency-strength order, computed through `o`.
    pub fn compare(&self, other: &Worm) -> OrdCompare {
        self.order_type().compare(&other.order_type())
    }
}

/// Parses the `<ord><ord>...T` text form; `T` alone is the empty worm.
pub fn parse_worm(text: &str) -> Result<Worm, Error> {
    let mut p = crate::ordinal::parser(text);
    let mut entries = Vec::new();
    loop {
        if p.eat('<') {
            let e = p.ordinal(0)?;
            p.expect('>')?;
            entries.push(e);
        } else if p.eat_word("T") {
            break;
        } else {
            return Err(p.err("expected '<' or 'T'"));
        }
    }
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(Worm { entries })
}

impl fmt::Display for Worm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "<{e}>")?;
        }
        write!(f, "T")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::parse_ordinal;

    fn o(s: &str) -> Ordinal {
        parse_ordinal(s).unwrap()
    }

    fn w(s: &str) -> Worm {
        parse_worm(s).unwrap()
    }

    #[test]
    fn concat_examples() {
        assert_eq!(Worm::top().diamond_concat(&Worm::top()), w("<0>T"));
        assert_eq!(w("<1>T").diamond_concat(&w("<1>T")), w("<1><0><1>T"));
        assert_eq!(w("<w>T").diamond_concat(&Worm::top()), w("<w><0>T"));
    }

    #[test]
    fn uparrow_examples() {
        assert_eq!(w("<1><0><1>T").uparrow(&o("0")), w("<1><0><1>T"));
        assert_eq!(w("<1><0><1>T").uparrow(&o("w")), w("<w+1><w><w+1>T"));
        assert_eq!(Worm::top().uparrow(&o("w^2")), Worm::top());
    }

    #[test]
    fn order_type_examples() {
        assert_eq!(Worm::top().order_type(), o("0"));
        assert_eq!(w("<0>T").order_type(), o("1"));
        assert_eq!(w("<1>T").order_type(), o("w"));
        assert_eq!(w("<1><0><1>T").order_type(), o("w*2"));
        assert_eq!(
            w("<w+1><w><w+1>T").order_type(),
            hyper_exp(&o("w"), &o("w*2"))
        );
    }

    #[test]
    fn repeated_entry_identity() {
        // o(<l>^n T) = e[l](n)
        for lam in [o("0"), o("1"), o("w"), o("w+1"), o("w^2")] {
            for n in 0..=5u64 {
                let worm = Worm::new(vec![lam.clone(); n as usize]);
                assert_eq!(
                    worm.order_type(),
                    hyper_exp(&lam, &Ordinal::nat(n)),
                    "o(<{lam}>^{n} T)"
                );
            }
        }
    }

    #[test]
    fn compare_examples() {
        assert_eq!(Worm::top().compare(&w("<0>T")), OrdCompare::LT);
        assert_eq!(w("<1>T").compare(&w("<0><0>T")), OrdCompare::GT);
        for lam in [o("1"), o("w"), o("w^2")] {
            for n in 0..4usize {
                let shorter = Worm::new(vec![lam.clone(); n]);
                let longer = Worm::new(vec![lam.clone(); n + 1]);
                assert_eq!(shorter.compare(&longer), OrdCompare::LT);
            }
        }
    }

    #[test]
    fn order_type_laws_on_random_worms() {
        use rand::prelude::*;
        let mut rng = StdRng::seed_from_u64(0x90a7);
        let entry_pool = [
            o("0"),
            o("1"),
            o("2"),
            o("w"),
            o("w+1"),
            o("w*2"),
            o("w^2"),
            o("e[w](1)"),
        ];
        let random_worm = |rng: &mut StdRng| {
            let len = rng.gen_range(0..5);
            Worm::new(
                (0..len)
                    .map(|_| entry_pool[rng.gen_range(0..entry_pool.len())].clone())
                    .collect(),
            )
        };
        for _ in 0..200 {
            let v = random_worm(&mut rng);
            let wm = random_worm(&mut rng);
            // o(v <> w) = o(w) + 1 + o(v)
            let lhs = v.diamond_concat(&wm).order_type();
            let rhs = add(&add(&wm.order_type(), &Ordinal::one()), &v.order_type());
            assert_eq!(lhs, rhs, "concat law for {v} and {wm}");
            // o(a ^ w) = e[a](o(w))
            for alpha in [o("1"), o("w"), o("w^2")] {
                let lhs = wm.uparrow(&alpha).order_type();
                let rhs = hyper_exp(&alpha, &wm.order_type());
                assert_eq!(lhs, rhs, "uparrow law for {alpha} and {wm}");
            }
        }
    }

    #[test]
    fn single_entry_order_types_are_cofinal() {
        // o(<l>T) = e[l](1), increasing in l and cofinal below e[Lambda](1)
        for big in [o("w"), o("w^2")] {
            let mut prev = Ordinal::Zero;
            let bound = hyper_exp(&big, &Ordinal::one());
            let mut lam = Ordinal::Zero;
            let mut reached = Vec::new();
            for n in 0..6 {
                lam = crate::ordinal::fund_seq(&big, n).unwrap();
                let ot = Worm::new(vec![lam.clone()]).order_type();
                assert_eq!(ot, hyper_exp(&lam, &Ordinal::one()));
                assert!(ot < bound);
                assert!(ot >= prev);
                prev = ot.clone();
                reached.push(ot);
            }
            let _ = lam;
            // the tail dominates spot-check targets below the bound
            let target = hyper_exp(&crate::ordinal::fund_seq(&big, 4).unwrap(), &Ordinal::one());
            assert!(reached.iter().any(|v| *v >= target));
        }
    }

    #[test]
    fn text_round_trip() {
        for s in ["T", "<0>T", "<w+1><w><w+1>T", "<e[w](1)><0>T"] {
            let worm = w(s);
            assert_eq!(parse_worm(&worm.to_string()).unwrap(), worm);
        }
        assert!(parse_worm("<1>").is_err());
        assert!(parse_worm("<1>T extra").is_err());
    }
}
