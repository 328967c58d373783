//! Canonical ordinal notations closed under sums, products, `w^x` and the
//! hyperexponentials `e[lambda](x)`.
//!
//! A term is one of:
//!
//! * `Zero`,
//! * a Cantor normal form `w^e1*c1 + ... + w^ek*ck` with strictly decreasing
//!   exponents and positive coefficients,
//! * a hyperexponential atom `e[lambda](x)`.
//!
//! Atoms are kept irreducible: `lambda` is additively indecomposable and at
//! least `w`, the argument is positive and is not fixed by `e[lambda]`, and a
//! value fixed by `w^x = x` never appears wrapped as `w^x` with coefficient 1.
//! Under these constraints structural equality coincides with ordinal
//! equality, so `==`, `Ord` and hashing are all semantic.

mod arith;
mod hyper;
mod parse;

pub use hyper::{fund_seq, hyper_exp, hyper_log, stabilization};
pub use parse::parse_ordinal;

use std::cmp::Ordering;
use std::fmt;

/// Canonical notation for an ordinal in the supported segment.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Ordinal {
    Zero,
    /// Cantor normal form: the pairs are `(exponent, coefficient)`.
    Cnf(Vec<(Ordinal, u64)>),
    /// Hyperexponential atom `e[lambda](arg)`.
    HypE(Box<Ordinal>, Box<Ordinal>),
}

/// Three-way comparison result, named to match the workbench vocabulary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrdCompare {
    LT,
    EQ,
    GT,
}

impl OrdCompare {
    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => OrdCompare::LT,
            Ordering::Equal => OrdCompare::EQ,
            Ordering::Greater => OrdCompare::GT,
        }
    }

    pub fn as_ordering(self) -> Ordering {
        match self {
            OrdCompare::LT => Ordering::Less,
            OrdCompare::EQ => Ordering::Equal,
            OrdCompare::GT => Ordering::Greater,
        }
    }
}

impl fmt::Display for OrdCompare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdCompare::LT => write!(f, "LT"),
            OrdCompare::EQ => write!(f, "EQ"),
            OrdCompare::GT => write!(f, "GT"),
        }
    }
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::Zero
    }

    pub fn one() -> Self {
        Ordinal::nat(1)
    }

    pub fn nat(n: u64) -> Self {
        if n == 0 {
            Ordinal::Zero
        } else {
            Ordinal::Cnf(vec![(Ordinal::Zero, n)])
        }
    }

    pub fn omega() -> Self {
        Ordinal::Cnf(vec![(Ordinal::one(), 1)])
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Ordinal::Zero)
    }

    /// The natural number denoted by this term, if it is finite.
    pub fn as_nat(&self) -> Option<u64> {
        match self {
            Ordinal::Zero => Some(0),
            Ordinal::Cnf(ts) => {
                if ts.len() == 1 && ts[0].0.is_zero() {
                    Some(ts[0].1)
                } else {
                    None
                }
            }
            Ordinal::HypE(..) => None,
        }
    }

    /// True for hyperexponential atoms, exactly the values with `w^x = x`.
    pub fn is_eps_like(&self) -> bool {
        matches!(self, Ordinal::HypE(..))
    }

    /// Additively indecomposable: a single `w^e` (coefficient 1), including 1
    /// and every atom.
    pub fn is_indecomposable(&self) -> bool {
        match self {
            Ordinal::Zero => false,
            Ordinal::HypE(..) => true,
            Ordinal::Cnf(ts) => ts.len() == 1 && ts[0].1 == 1,
        }
    }

    pub fn is_successor(&self) -> bool {
        match self.cnf_terms().last() {
            Some((e, _)) => e.is_zero(),
            None => false,
        }
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// The term viewed as a Cantor normal form: a list of
    /// `(exponent, coefficient)` pairs with strictly decreasing exponents.
    /// An atom `h` views as the single pair `(h, 1)` since `h = w^h`.
    pub fn cnf_terms(&self) -> Vec<(Ordinal, u64)> {
        match self {
            Ordinal::Zero => Vec::new(),
            Ordinal::Cnf(ts) => ts.clone(),
            Ordinal::HypE(..) => vec![(self.clone(), 1)],
        }
    }

    /// Rebuilds a canonical term from CNF pairs (assumed strictly decreasing).
    pub(crate) fn from_cnf_terms(terms: Vec<(Ordinal, u64)>) -> Ordinal {
        if terms.is_empty() {
            return Ordinal::Zero;
        }
        if terms.len() == 1 && terms[0].1 == 1 && terms[0].0.is_eps_like() {
            return terms.into_iter().next().unwrap().0;
        }
        debug_assert!(terms.iter().all(|(_, c)| *c >= 1));
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Ordinal::Cnf(terms)
    }

    /// `w^x`, collapsing fixed points: if `w^x = x` the result is `x` itself.
    pub fn omega_pow(&self) -> Ordinal {
        if self.is_eps_like() {
            self.clone()
        } else {
            Ordinal::Cnf(vec![(self.clone(), 1)])
        }
    }

    /// Leading CNF exponent. Zero has none.
    pub fn leading_exp(&self) -> Option<Ordinal> {
        self.cnf_terms().first().map(|(e, _)| e.clone())
    }

    /// The last CNF exponent: the unique `b` with `self = a + w^b`.
    /// Atoms are their own last exponent. Errors on zero.
    pub fn ell(&self) -> Result<Ordinal, crate::Error> {
        match self.cnf_terms().last() {
            Some((e, _)) => Ok(e.clone()),
            None => Err(crate::Error::domain("ell is undefined at 0")),
        }
    }

    /// Predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Ordinal> {
        let mut ts = self.cnf_terms();
        match ts.last_mut() {
            Some((e, c)) if e.is_zero() => {
                if *c == 1 {
                    ts.pop();
                } else {
                    *c -= 1;
                }
                Some(Ordinal::from_cnf_terms(ts))
            }
            _ => None,
        }
    }

    pub fn compare(&self, other: &Ordinal) -> OrdCompare {
        OrdCompare::from_ordering(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        use Ordinal::*;
        match (self, other) {
            (Zero, Zero) => Ordering::Equal,
            (Zero, _) => Ordering::Less,
            (_, Zero) => Ordering::Greater,
            (Cnf(a), Cnf(b)) => cmp_cnf(a, b),
            (HypE(a, x), HypE(b, y)) => match a.cmp(b) {
                // same level: normality reduces to the arguments
                Ordering::Equal => x.cmp(y),
                // e[b](y) is fixed by e[a], so e[a](x) vs e[b](y) follows
                // x vs e[b](y); canonicity rules out equality.
                Ordering::Less => match x.as_ref().cmp(other) {
                    Ordering::Less => Ordering::Less,
                    _ => Ordering::Greater,
                },
                Ordering::Greater => match self.cmp(y.as_ref()) {
                    Ordering::Greater => Ordering::Greater,
                    _ => Ordering::Less,
                },
            },
            // an atom h equals w^h; against a CNF compare h with the head
            // exponent, equality meaning the CNF strictly extends w^h.
            (HypE(..), Cnf(b)) => match self.cmp(&b[0].0) {
                Ordering::Greater => Ordering::Greater,
                _ => Ordering::Less,
            },
            (Cnf(a), HypE(..)) => match other.cmp(&a[0].0) {
                Ordering::Greater => Ordering::Less,
                _ => Ordering::Greater,
            },
        }
    }
}

fn cmp_cnf(a: &[(Ordinal, u64)], b: &[(Ordinal, u64)]) -> Ordering {
    for ((ea, ca), (eb, cb)) in a.iter().zip(b.iter()) {
        match ea.cmp(eb) {
            Ordering::Equal => {}
            o => return o,
        }
        match ca.cmp(cb) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::render(self))
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::render(self))
    }
}

pub use arith::{add, divmod, left_subtract, mul};

pub(crate) use parse::Parser;

pub(crate) fn parser(text: &str) -> Parser {
    Parser::new(text)
}

/// Every canonical term with at most `size` structural nodes, in increasing
/// order. The measure charges one node per constructor, per CNF exponent and
/// per coefficient above 1, so small sizes stay enumerable; useful as an
/// exhaustive oracle for order and minimality sweeps.
pub fn enumerate_terms(size: usize) -> Vec<Ordinal> {
    let mut by_size: Vec<Vec<Ordinal>> = vec![Vec::new(); size + 1];
    if size >= 1 {
        by_size[1].push(Ordinal::Zero);
    }
    for s in 2..=size {
        let mut batch = Vec::new();
        // CNF nodes: 1 + sum over terms of (size(exp) + extra for coeff > 1)
        let mut partial: Vec<(Vec<(Ordinal, u64)>, usize)> = vec![(Vec::new(), 1)];
        let mut complete = Vec::new();
        while let Some((terms, used)) = partial.pop() {
            if !terms.is_empty() && used == s {
                complete.push(terms.clone());
            }
            for exp_size in 1..=(s - used) {
                for exp in &by_size[exp_size] {
                    if let Some((last, _)) = terms.last() {
                        if exp >= last {
                            continue;
                        }
                    }
                    for coeff in [1u64, 2] {
                        let cost = exp_size + if coeff > 1 { 1 } else { 0 };
                        if used + cost <= s {
                            let mut next = terms.clone();
                            next.push((exp.clone(), coeff));
                            partial.push((next, used + cost));
                        }
                    }
                }
            }
        }
        for terms in complete {
            if terms.len() == 1 && terms[0].1 == 1 && terms[0].0.is_eps_like() {
                continue; // redundant wrapper, canonical form is the atom
            }
            batch.push(Ordinal::Cnf(terms));
        }
        // atoms e[w^mu](x): lambda indecomposable >= w, argument positive
        for lam_size in 1..s {
            for mu in &by_size[lam_size] {
                if mu.is_zero() {
                    continue;
                }
                let lam = Ordinal::from_cnf_terms(vec![(mu.clone(), 1)]);
                for arg_size in 1..=(s - 1 - lam_size) {
                    for arg in &by_size[arg_size] {
                        if arg.is_zero() {
                            continue;
                        }
                        if let Ordinal::HypE(al, _) = arg {
                            if al.as_ref() > &lam {
                                continue; // argument fixed by e[lam]
                            }
                        }
                        batch.push(Ordinal::HypE(Box::new(lam.clone()), Box::new(arg.clone())));
                    }
                }
            }
        }
        batch.sort();
        batch.dedup();
        by_size[s] = batch;
    }
    let mut all: Vec<Ordinal> = by_size.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    all
}

#[cfg(test)]
pub(crate) mod tests;
