//! Simple functions: finite maps from superscript ordinals to lower bounds
//! on hyperlogarithms, with the least-solution operator `ceil`.
//!
//! `s` is bounded by `alpha` (written `s ⊑ alpha`) when `s(x) < l[x](alpha)`
//! for every non-maximal index and `s(m) <= l[m](alpha)` at the maximal
//! index `m`; the strict variant asks for `<` at the maximum too. `ceil(s)`
//! is the least ordinal bounded in this sense.

use crate::ordinal::{add, hyper_exp, hyper_log, left_subtract, Ordinal};
use crate::Error;
use std::collections::BTreeMap;
use std::fmt;

/// A finite partial map from superscripts to ordinal bounds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleFunction {
    entries: BTreeMap<Ordinal, Ordinal>,
}

impl SimpleFunction {
    pub fn new() -> Self {
        SimpleFunction {
            entries: BTreeMap::new(),
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Ordinal, Ordinal)>) -> Self {
        SimpleFunction {
            entries: pairs.into_iter().collect(),
        }
    }

    pub fn insert(&mut self, index: Ordinal, bound: Ordinal) {
        self.entries.insert(index, bound);
    }

    pub fn get(&self, index: &Ordinal) -> Option<&Ordinal> {
        self.entries.get(index)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn max_index(&self) -> Option<&Ordinal> {
        self.entries.keys().next_back()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Ordinal, &Ordinal)> {
        self.entries.iter()
    }

    /// Pointwise join: union of domains, maximum on the overlap.
    pub fn join(&self, other: &SimpleFunction) -> SimpleFunction {
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.entries
                .entry(k.clone())
                .and_modify(|cur| {
                    if v > cur {
                        *cur = v.clone();
                    }
                })
                .or_insert_with(|| v.clone());
        }
        out
    }

    /// `self ⊑ alpha` (or `⊏` when `strict`). Vacuously true on an empty
    /// domain.
    pub fn bounded_by(&self, alpha: &Ordinal, strict: bool) -> bool {
        let Some(max) = self.max_index().cloned() else {
            return true;
        };
        for (idx, bound) in &self.entries {
            let level = hyper_log(idx, alpha);
            if *idx == max && !strict {
                if bound > &level {
                    return false;
                }
            } else if bound >= &level {
                return false;
            }
        }
        true
    }

    /// The least ordinal `self` is bounded by. Follows the recursion: strip
    /// the zero entry as `gamma`, shift the rest down by the least positive
    /// index `eta`, solve, and reassemble as `gamma + e[eta](inner)`.
    pub fn ceil(&self) -> Ordinal {
        let Some(max) = self.max_index() else {
            return Ordinal::Zero;
        };
        if max.is_zero() {
            // domain is exactly {0}
            return self.entries[&Ordinal::Zero].clone();
        }
        let gamma = match self.entries.get(&Ordinal::Zero) {
            Some(v) => add(v, &Ordinal::one()),
            None => Ordinal::Zero,
        };
        let eta = self
            .entries
            .keys()
            .find(|k| !k.is_zero())
            .expect("max index is positive")
            .clone();
        let shifted = SimpleFunction::from_pairs(self.entries.iter().filter_map(|(k, v)| {
            if k.is_zero() {
                None
            } else {
                let idx = left_subtract(&eta, k).expect("eta is the least positive index");
                Some((idx, v.clone()))
            }
        }));
        let inner = shifted.ceil();
        add(&gamma, &hyper_exp(&eta, &inner))
    }

    /// The least ordinal strictly bounding `self`: bump the maximal entry
    /// and take `ceil`. Errors on an empty domain.
    pub fn ceil_strict(&self) -> Result<Ordinal, Error> {
        let Some(max) = self.max_index().cloned() else {
            return Err(Error::domain(
                "ceil_strict needs a non-empty domain to bump",
            ));
        };
        let mut bumped = self.clone();
        let entry = bumped.entries.get_mut(&max).unwrap();
        *entry = add(entry, &Ordinal::one());
        Ok(bumped.ceil())
    }
}

/// Parses the `{index:bound, ...}` text form.
pub fn parse_simple_function(text: &str) -> Result<SimpleFunction, Error> {
    let mut p = crate::ordinal::parser(text);
    p.expect('{')?;
    let mut out = SimpleFunction::new();
    if !p.eat('}') {
        loop {
            let idx = p.ordinal(0)?;
            p.expect(':')?;
            let bound = p.ordinal(0)?;
            out.insert(idx, bound);
            if !p.eat(',') {
                break;
            }
        }
        p.expect('}')?;
    }
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

impl fmt::Display for SimpleFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (k, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}:{v}")?;
        }
        write!(f, "}}")
    }
}
