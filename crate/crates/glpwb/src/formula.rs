//! Polymodal formulas with one modality per ordinal, condensation onto
//! natural indices, and the decidable evaluator for closed formulas over
//! the interval-topology semantics: `<l>` is the derived-set operator of
//! the `l`-th (or `1+l`-th, when shifted) topology, so closed valuations
//! stay inside the algebra of simple sets.

use crate::icard::SimpleSet;
use crate::ordinal::{add, Ordinal};
use crate::worm::Worm;
use crate::{max_depth, Error};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Bot,
    Var(String),
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Box_(Ordinal, Box<Formula>),
    Dia(Ordinal, Box<Formula>),
}

impl Formula {
    pub fn neg(f: Formula) -> Formula {
        Formula::Neg(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn boxed(l: Ordinal, f: Formula) -> Formula {
        Formula::Box_(l, Box::new(f))
    }

    pub fn dia(l: Ordinal, f: Formula) -> Formula {
        Formula::Dia(l, Box::new(f))
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Formula::Top | Formula::Bot => true,
            Formula::Var(_) => false,
            Formula::Neg(f) | Formula::Box_(_, f) | Formula::Dia(_, f) => f.is_closed(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.is_closed() && b.is_closed()
            }
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Neg(f) | Formula::Box_(_, f) | Formula::Dia(_, f) => f.collect_vars(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// The ordinals appearing as modal indices, in increasing order.
    pub fn appearing_ordinals(&self) -> Vec<Ordinal> {
        let mut set = BTreeSet::new();
        self.collect_ordinals(&mut set);
        set.into_iter().collect()
    }

    fn collect_ordinals(&self, out: &mut BTreeSet<Ordinal>) {
        match self {
            Formula::Top | Formula::Bot | Formula::Var(_) => {}
            Formula::Neg(f) => f.collect_ordinals(out),
            Formula::Box_(l, f) | Formula::Dia(l, f) => {
                out.insert(l.clone());
                f.collect_ordinals(out);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_ordinals(out);
                b.collect_ordinals(out);
            }
        }
    }

    fn map_indices(&self, f: &impl Fn(&Ordinal) -> Ordinal) -> Formula {
        match self {
            Formula::Top => Formula::Top,
            Formula::Bot => Formula::Bot,
            Formula::Var(v) => Formula::Var(v.clone()),
            Formula::Neg(x) => Formula::neg(x.map_indices(f)),
            Formula::And(a, b) => Formula::and(a.map_indices(f), b.map_indices(f)),
            Formula::Or(a, b) => Formula::or(a.map_indices(f), b.map_indices(f)),
            Formula::Imp(a, b) => Formula::imp(a.map_indices(f), b.map_indices(f)),
            Formula::Box_(l, x) => Formula::boxed(f(l), x.map_indices(f)),
            Formula::Dia(l, x) => Formula::dia(f(l), x.map_indices(f)),
        }
    }

    /// Replaces the n-th appearing ordinal with the index `n`; the returned
    /// map sends each index back to the original ordinal.
    pub fn condense(&self) -> (Formula, Vec<Ordinal>) {
        let appearing = self.appearing_ordinals();
        let condensed = self.map_indices(&|l| {
            let idx = appearing.iter().position(|a| a == l).expect("collected");
            Ordinal::nat(idx as u64)
        });
        (condensed, appearing)
    }
}

/// The conjunction `<l0>...<lI>T` as a formula.
pub fn worm_to_formula(w: &Worm) -> Formula {
    let mut f = Formula::Top;
    for entry in w.entries.iter().rev() {
        f = Formula::dia(entry.clone(), f);
    }
    f
}

/// A per-call valuation of closed formulas over `[0, theta)`, memoizing
/// subformula sets. Diamonds evaluate through the derived-set operator of
/// the `l`-th (or `1+l`-th, when shifted) topology.
pub struct ClosedValuation {
    theta: Ordinal,
    shifted: bool,
    memo: HashMap<Formula, SimpleSet>,
}

impl ClosedValuation {
    pub fn new(theta: Ordinal, shifted: bool) -> Self {
        ClosedValuation {
            theta,
            shifted,
            memo: HashMap::new(),
        }
    }

    pub fn eval(&mut self, phi: &Formula) -> Result<SimpleSet, Error> {
        self.eval_depth(phi, 0)
    }

    fn eval_depth(&mut self, phi: &Formula, depth: usize) -> Result<SimpleSet, Error> {
        if depth > max_depth() {
            return Err(Error::domain(
                "recursion depth exceeded (see GLPWB_MAX_DEPTH)",
            ));
        }
        if let Some(hit) = self.memo.get(phi) {
            return Ok(hit.clone());
        }
        let set = match phi {
            Formula::Top => SimpleSet::full(self.theta.clone()),
            Formula::Bot => SimpleSet::empty(self.theta.clone()),
            Formula::Var(v) => {
                return Err(Error::domain(format!(
                    "free variable {v}: only closed formulas have set valuations"
                )))
            }
            Formula::Neg(f) => self.eval_depth(f, depth + 1)?.complement(),
            Formula::And(a, b) => self
                .eval_depth(a, depth + 1)?
                .intersect(&self.eval_depth(b, depth + 1)?)?,
            Formula::Or(a, b) => self
                .eval_depth(a, depth + 1)?
                .union(&self.eval_depth(b, depth + 1)?)?,
            Formula::Imp(a, b) => self
                .eval_depth(a, depth + 1)?
                .complement()
                .union(&self.eval_depth(b, depth + 1)?)?,
            Formula::Dia(l, f) => {
                let sub = self.subscript(l);
                self.eval_depth(f, depth + 1)?.derived_set(&sub)
            }
            Formula::Box_(l, f) => {
                let sub = self.subscript(l);
                self.eval_depth(f, depth + 1)?
                    .complement()
                    .derived_set(&sub)
                    .complement()
            }
        };
        self.memo.insert(phi.clone(), set.clone());
        Ok(set)
    }

    fn subscript(&self, l: &Ordinal) -> Ordinal {
        if self.shifted {
            add(&Ordinal::one(), l)
        } else {
            l.clone()
        }
    }
}

/// Evaluates a closed formula to a simple set over `[0, theta)`. With
/// `shifted` the modality `l` uses the `1+l`-th topology.
pub fn eval_closed(phi: &Formula, theta: &Ordinal, shifted: bool) -> Result<SimpleSet, Error> {
    ClosedValuation::new(theta.clone(), shifted).eval(phi)
}

/// A closed formula is valid over `[0, theta)` when its complement has no
/// witness.
pub fn is_valid_closed(phi: &Formula, theta: &Ordinal, shifted: bool) -> Result<bool, Error> {
    Ok(eval_closed(phi, theta, shifted)?
        .complement()
        .witness()
        .is_none())
}

/// A point satisfying the closed formula, if any.
pub fn satisfy_witness(
    phi: &Formula,
    theta: &Ordinal,
    shifted: bool,
) -> Result<Option<Ordinal>, Error> {
    Ok(eval_closed(phi, theta, shifted)?.witness())
}

/// Parses `T`, `F`, identifiers, `~`, `&`, `|`, `->`, `[ord]`, `<ord>`;
/// implication is right-associative and binds loosest.
pub fn parse_formula(text: &str) -> Result<Formula, Error> {
    let mut p = crate::ordinal::parser(text);
    let f = parse_imp(&mut p, 0)?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

fn parse_imp(p: &mut crate::ordinal::Parser, depth: usize) -> Result<Formula, Error> {
    if depth > max_depth() {
        return Err(p.err("recursion depth exceeded (see GLPWB_MAX_DEPTH)"));
    }
    let lhs = parse_or(p, depth)?;
    p.skip_ws();
    if p.peek() == Some('-') {
        let save = p.pos;
        p.pos += 1;
        if p.eat('>') {
            let rhs = parse_imp(p, depth + 1)?;
            return Ok(Formula::imp(lhs, rhs));
        }
        p.pos = save;
    }
    Ok(lhs)
}

fn parse_or(p: &mut crate::ordinal::Parser, depth: usize) -> Result<Formula, Error> {
    let mut acc = parse_and(p, depth)?;
    while p.eat('|') {
        let rhs = parse_and(p, depth)?;
        acc = Formula::or(acc, rhs);
    }
    Ok(acc)
}

fn parse_and(p: &mut crate::ordinal::Parser, depth: usize) -> Result<Formula, Error> {
    let mut acc = parse_unary(p, depth)?;
    while p.eat('&') {
        let rhs = parse_unary(p, depth)?;
        acc = Formula::and(acc, rhs);
    }
    Ok(acc)
}

fn parse_unary(p: &mut crate::ordinal::Parser, depth: usize) -> Result<Formula, Error> {
    if depth > max_depth() {
        return Err(p.err("recursion depth exceeded (see GLPWB_MAX_DEPTH)"));
    }
    match p.peek() {
        Some('~') => {
            p.pos += 1;
            Ok(Formula::neg(parse_unary(p, depth + 1)?))
        }
        Some('[') => {
            p.pos += 1;
            let l = p.ordinal(0)?;
            p.expect(']')?;
            Ok(Formula::boxed(l, parse_unary(p, depth + 1)?))
        }
        Some('<') => {
            p.pos += 1;
            let l = p.ordinal(0)?;
            p.expect('>')?;
            Ok(Formula::dia(l, parse_unary(p, depth + 1)?))
        }
        Some('(') => {
            p.pos += 1;
            let inner = parse_imp(p, depth + 1)?;
            p.expect(')')?;
            Ok(inner)
        }
        Some(c) if c.is_ascii_alphabetic() => {
            let word = p.identifier();
            match word.as_str() {
                "T" => Ok(Formula::Top),
                "F" => Ok(Formula::Bot),
                _ => Ok(Formula::Var(word)),
            }
        }
        _ => Err(p.err("expected a formula")),
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Top => write!(f, "T"),
            Formula::Bot => write!(f, "F"),
            Formula::Var(v) => write!(f, "{v}"),
            Formula::Neg(x) => write!(f, "~{}", Paren(x)),
            Formula::And(a, b) => write!(f, "{} & {}", Paren(a), Paren(b)),
            Formula::Or(a, b) => write!(f, "{} | {}", Paren(a), Paren(b)),
            Formula::Imp(a, b) => write!(f, "{} -> {}", Paren(a), Paren(b)),
            Formula::Box_(l, x) => write!(f, "[{l}]{}", Paren(x)),
            Formula::Dia(l, x) => write!(f, "<{l}>{}", Paren(x)),
        }
    }
}

/// Wraps compound subformulas in parentheses when displayed.
struct Paren<'a>(&'a Formula);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Formula::Top | Formula::Bot | Formula::Var(_) => write!(f, "{}", self.0),
            Formula::Neg(_) | Formula::Box_(..) | Formula::Dia(..) => write!(f, "{}", self.0),
            _ => write!(f, "({})", self.0),
        }
    }
}
