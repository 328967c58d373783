//! Interval topologies generated by hyperlogarithm bounds, and the Boolean
//! algebra of simple sets over an ambient segment `[0, Theta)`.
//!
//! An interval `(a,b]_x` collects the points `t` with `a < l[x](t) <= b`.
//! The lower bound `-1` (no constraint) and an unbounded upper end are both
//! representable, so the algebra is closed under complement. A simple set is
//! a finite union of finite intersections of intervals; the derived-set
//! operator of the `lambda`-th topology maps simple sets to simple sets,
//! which is what makes the closed-fragment semantics decidable.

use crate::ordinal::{add, hyper_log, Ordinal};
use crate::simplefn::SimpleFunction;
use crate::Error;
use std::fmt;

/// One constraint `lower < l[subscript](t) <= upper`.
///
/// `lower = None` is the `-1` sentinel (no lower constraint); `upper = None`
/// leaves the value unbounded above within the ambient segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lower: Option<Ordinal>,
    pub upper: Option<Ordinal>,
    pub subscript: Ordinal,
}

impl Interval {
    pub fn new(lower: Option<Ordinal>, upper: Option<Ordinal>, subscript: Ordinal) -> Self {
        Interval {
            lower,
            upper,
            subscript,
        }
    }

    /// Does the hyperlogarithm value `v` satisfy this constraint?
    fn admits(&self, v: &Ordinal) -> bool {
        if let Some(lo) = &self.lower {
            if v <= lo {
                return false;
            }
        }
        if let Some(hi) = &self.upper {
            if v > hi {
                return false;
            }
        }
        true
    }

    fn holds_at(&self, theta: &Ordinal) -> bool {
        self.admits(&hyper_log(&self.subscript, theta))
    }

    /// No hyperlogarithm value satisfies the constraint.
    fn is_contradictory(&self) -> bool {
        match (&self.lower, &self.upper) {
            (Some(lo), Some(hi)) => lo >= hi,
            _ => false,
        }
    }
}

/// A finite union of finite intersections of intervals over `[0, Theta)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleSet {
    pub theta: Ordinal,
    /// Within each conjunction, subscripts are pairwise distinct and sorted.
    pub disjuncts: Vec<Vec<Interval>>,
}

/// Merges same-subscript constraints; `None` marks a contradictory
/// conjunction.
fn merge_conjunction(intervals: &[Interval]) -> Option<Vec<Interval>> {
    let mut sorted: Vec<Interval> = intervals.to_vec();
    sorted.sort_by(|a, b| a.subscript.cmp(&b.subscript));
    let mut out: Vec<Interval> = Vec::new();
    for iv in sorted {
        match out.last_mut() {
            Some(prev) if prev.subscript == iv.subscript => {
                prev.lower = match (prev.lower.take(), iv.lower) {
                    (Some(a), Some(b)) => Some(a.max(b)),
                    (a, b) => a.or(b),
                };
                prev.upper = match (prev.upper.take(), iv.upper) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
            }
            _ => out.push(iv),
        }
    }
    if out.iter().any(Interval::is_contradictory) {
        None
    } else {
        // fully unconstrained intervals carry no information
        out.retain(|iv| iv.lower.is_some() || iv.upper.is_some());
        Some(out)
    }
}

impl SimpleSet {
    pub fn empty(theta: Ordinal) -> Self {
        SimpleSet {
            theta,
            disjuncts: Vec::new(),
        }
    }

    pub fn full(theta: Ordinal) -> Self {
        SimpleSet {
            theta,
            disjuncts: vec![Vec::new()],
        }
    }

    pub fn from_conjunction(theta: Ordinal, intervals: Vec<Interval>) -> Self {
        match merge_conjunction(&intervals) {
            Some(conj) => SimpleSet {
                theta,
                disjuncts: vec![conj],
            },
            None => SimpleSet::empty(theta),
        }
    }

    pub fn from_interval(theta: Ordinal, interval: Interval) -> Self {
        SimpleSet::from_conjunction(theta, vec![interval])
    }

    pub fn is_syntactically_empty(&self) -> bool {
        self.disjuncts.is_empty()
    }

    /// Membership; errors when the point lies outside the ambient segment.
    pub fn member(&self, point: &Ordinal) -> Result<bool, Error> {
        if point >= &self.theta {
            return Err(Error::domain(format!(
                "{point} is outside the ambient segment [0, {})",
                self.theta
            )));
        }
        Ok(self
            .disjuncts
            .iter()
            .any(|conj| conj.iter().all(|iv| iv.holds_at(point))))
    }

    fn check_ambient(&self, other: &SimpleSet) -> Result<(), Error> {
        if self.theta != other.theta {
            Err(Error::domain(format!(
                "ambient bounds differ: {} vs {}",
                self.theta, other.theta
            )))
        } else {
            Ok(())
        }
    }

    pub fn union(&self, other: &SimpleSet) -> Result<SimpleSet, Error> {
        self.check_ambient(other)?;
        let mut disjuncts = self.disjuncts.clone();
        disjuncts.extend(other.disjuncts.clone());
        Ok(SimpleSet {
            theta: self.theta.clone(),
            disjuncts,
        })
    }

    pub fn intersect(&self, other: &SimpleSet) -> Result<SimpleSet, Error> {
        self.check_ambient(other)?;
        let mut disjuncts = Vec::new();
        for a in &self.disjuncts {
            for b in &other.disjuncts {
                let mut joined = a.clone();
                joined.extend(b.iter().cloned());
                if let Some(conj) = merge_conjunction(&joined) {
                    disjuncts.push(conj);
                }
            }
        }
        Ok(SimpleSet {
            theta: self.theta.clone(),
            disjuncts,
        })
    }

    pub fn complement(&self) -> SimpleSet {
        // De Morgan: intersect, over all conjunctions, the union of the
        // per-interval complements.
        let mut acc = SimpleSet::full(self.theta.clone());
        for conj in &self.disjuncts {
            let mut pieces = SimpleSet::empty(self.theta.clone());
            for iv in conj {
                if let Some(lo) = &iv.lower {
                    let below = Interval::new(None, Some(lo.clone()), iv.subscript.clone());
                    pieces = pieces
                        .union(&SimpleSet::from_interval(self.theta.clone(), below))
                        .expect("same ambient");
                }
                if let Some(hi) = &iv.upper {
                    let above = Interval::new(Some(hi.clone()), None, iv.subscript.clone());
                    pieces = pieces
                        .union(&SimpleSet::from_interval(self.theta.clone(), above))
                        .expect("same ambient");
                }
            }
            acc = acc.intersect(&pieces).expect("same ambient");
        }
        acc
    }

    /// Some point of the set below the ambient bound, if one exists.
    ///
    /// Per conjunction the candidate is the least solution of the strict
    /// lower-bound system; by minimality of `ceil` it lies in the
    /// conjunction whenever anything does, so the upper bounds and the
    /// ambient bound only need checking at the candidate.
    pub fn witness(&self) -> Option<Ordinal> {
        self.disjuncts
            .iter()
            .filter_map(|conj| Self::conjunction_witness(&self.theta, conj))
            .min()
    }

    fn conjunction_witness(theta: &Ordinal, conj: &[Interval]) -> Option<Ordinal> {
        let lowers = SimpleFunction::from_pairs(conj.iter().filter_map(|iv| {
            iv.lower
                .as_ref()
                .map(|lo| (iv.subscript.clone(), lo.clone()))
        }));
        let candidate = if lowers.is_empty() {
            Ordinal::Zero
        } else {
            lowers.ceil_strict().expect("non-empty domain")
        };
        if &candidate >= theta {
            return None;
        }
        if conj.iter().all(|iv| iv.holds_at(&candidate)) {
            Some(candidate)
        } else {
            None
        }
    }

    /// The derived set with respect to the `lambda`-th Icard topology.
    ///
    /// Distributes over disjuncts. Per conjunction: empty pieces vanish;
    /// otherwise every constraint at a subscript at or above `lambda`
    /// collapses into a single lower bound at `lambda`, computed as
    /// `l[lambda]` of the least solution of the conjunction's bumped
    /// lower-bound system.
    pub fn derived_set(&self, lambda: &Ordinal) -> SimpleSet {
        let mut out = SimpleSet::empty(self.theta.clone());
        for conj in &self.disjuncts {
            // the full conjunction behaves as the single vacuous interval
            // at subscript 0
            let base: Vec<Interval> = if conj.is_empty() {
                vec![Interval::new(None, None, Ordinal::Zero)]
            } else {
                conj.clone()
            };
            if Self::conjunction_witness(&self.theta, &base).is_none() {
                continue;
            }
            let max_sub = &base.last().expect("non-empty").subscript;
            let mut lowers = SimpleFunction::from_pairs(base.iter().filter_map(|iv| {
                iv.lower
                    .as_ref()
                    .map(|lo| (iv.subscript.clone(), lo.clone()))
            }));
            let bumped = match base.last().expect("non-empty").lower.as_ref() {
                Some(lo) => add(lo, &Ordinal::one()),
                None => Ordinal::Zero,
            };
            lowers.insert(max_sub.clone(), bumped);
            let alpha_star = hyper_log(lambda, &lowers.ceil());
            let mut intervals: Vec<Interval> = base
                .iter()
                .filter(|iv| iv.subscript < *lambda)
                .cloned()
                .collect();
            intervals.push(Interval::new(Some(alpha_star), None, lambda.clone()));
            if let Some(conj) = merge_conjunction(&intervals) {
                out.disjuncts.push(conj);
            }
        }
        out
    }
}

/// Cantor-Bendixson rank of `point` in the `xi`-th Icard topology; equals
/// the hyperlogarithm.
pub fn rank(point: &Ordinal, xi: &Ordinal) -> Ordinal {
    hyper_log(xi, point)
}

/// The basic neighborhood of `alpha` carved out by the strict bound system
/// `r`: the conjunction of `(r(x), l[x](alpha)]_x` over the domain of `r`.
pub fn neighborhood(
    r: &SimpleFunction,
    alpha: &Ordinal,
    theta: Ordinal,
) -> Result<SimpleSet, Error> {
    if !r.bounded_by(alpha, true) {
        return Err(Error::domain(format!(
            "{r} does not strictly bound {alpha}"
        )));
    }
    let intervals = r
        .iter()
        .map(|(idx, bound)| {
            Interval::new(
                Some(bound.clone()),
                Some(hyper_log(idx, alpha)),
                idx.clone(),
            )
        })
        .collect();
    Ok(SimpleSet::from_conjunction(theta, intervals))
}

impl fmt::Display for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.disjuncts.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self
            .disjuncts
            .iter()
            .map(|conj| {
                if conj.is_empty() {
                    "full".to_string()
                } else {
                    conj.iter()
                        .map(render_interval)
                        .collect::<Vec<_>>()
                        .join(" & ")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" | "))
    }
}

fn render_interval(iv: &Interval) -> String {
    let lower = match &iv.lower {
        Some(o) => o.to_string(),
        None => "-1".to_string(),
    };
    let (upper, close) = match &iv.upper {
        Some(o) => (o.to_string(), ']'),
        None => ("inf".to_string(), ')'),
    };
    let sub = iv.subscript.to_string();
    if sub.contains('+') || sub.contains('*') {
        format!("({lower},{upper}{close}_({sub})")
    } else {
        format!("({lower},{upper}{close}_{sub}")
    }
}

/// Parses the `(a,b]_x & ... | ...` text form (`-1` lower sentinel, `inf)`
/// for an unbounded upper end, `full` / `empty` for the extremes).
pub fn parse_simple_set(text: &str, theta: Ordinal) -> Result<SimpleSet, Error> {
    let mut p = crate::ordinal::parser(text);
    if p.eat_word("empty") {
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.err("unexpected trailing input"));
        }
        return Ok(SimpleSet::empty(theta));
    }
    let mut disjuncts = Vec::new();
    loop {
        let mut intervals = Vec::new();
        if !p.eat_word("full") {
            loop {
                intervals.push(parse_interval(&mut p)?);
                if !p.eat('&') {
                    break;
                }
            }
        }
        match merge_conjunction(&intervals) {
            Some(conj) => disjuncts.push(conj),
            None => {} // contradictory conjunction denotes the empty union member
        }
        if !p.eat('|') {
            break;
        }
    }
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(SimpleSet { theta, disjuncts })
}

fn parse_interval(p: &mut crate::ordinal::Parser) -> Result<Interval, Error> {
    p.expect('(')?;
    let lower = if p.eat('-') {
        p.expect('1')?;
        None
    } else {
        Some(p.ordinal(0)?)
    };
    p.expect(',')?;
    let (upper, closed) = if p.eat_word("inf") {
        (None, false)
    } else {
        (Some(p.ordinal(0)?), true)
    };
    if closed {
        p.expect(']')?;
    } else {
        p.expect(')')?;
    }
    p.expect('_')?;
    let subscript = if p.eat('(') {
        let s = p.ordinal(0)?;
        p.expect(')')?;
        s
    } else {
        p.atom_ordinal()?
    };
    Ok(Interval::new(lower, upper, subscript))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::{hyper_exp, parse_ordinal, stabilization};

    fn o(s: &str) -> Ordinal {
        parse_ordinal(s).unwrap()
    }

    fn set(text: &str, theta: &str) -> SimpleSet {
        parse_simple_set(text, o(theta)).unwrap()
    }

    /// A dense spread of sample points strictly below `theta`.
    fn sample_points(theta: &Ordinal) -> Vec<Ordinal> {
        let mut out = Vec::new();
        for a in 0..4u64 {
            for b in 0..4u64 {
                for c in 0..4u64 {
                    for d in 0..4u64 {
                        let mut terms = Vec::new();
                        if a > 0 {
                            terms.push((o("3"), a));
                        }
                        if b > 0 {
                            terms.push((o("2"), b));
                        }
                        if c > 0 {
                            terms.push((o("1"), c));
                        }
                        if d > 0 {
                            terms.push((Ordinal::Zero, d));
                        }
                        out.push(Ordinal::from_cnf_terms(terms));
                    }
                }
            }
        }
        for text in [
            "w^w",
            "w^w+1",
            "w^w+w",
            "w^w*2",
            "w^(w+1)",
            "w^(w+1)+w^w",
            "w^w^w",
            "w^(w*2)",
            "w^(w^2)",
            "e[w](1)",
            "e[w](1)+1",
            "e[w](1)+w",
            "w^(e[w](1)+1)",
            "e[w](2)",
            "e[w](w)",
            "e[w^2](1)",
        ] {
            out.push(o(text));
        }
        out.extend(crate::ordinal::tests::enumerate_terms(6));
        out.sort();
        out.dedup();
        out.retain(|t| t < theta);
        out
    }

    #[test]
    fn member_examples() {
        let s = set("(0,w]_1", "w^w");
        assert!(s.member(&o("w")).unwrap());
        assert!(!s.member(&o("5")).unwrap());
        assert!(s.member(&o("w^w")).is_err());

        let eps = |n: &str| hyper_exp(&o("w"), &o(n));
        let s = SimpleSet::from_interval(
            eps("w*3"),
            Interval::new(Some(o("w")), Some(o("w^2")), o("w")),
        );
        assert!(s.member(&eps("w*2")).unwrap(), "l[w] eps_(w*2) = w*2");
    }

    #[test]
    fn boolean_examples() {
        let empty = SimpleSet::empty(o("w^w"));
        let full = empty.complement();
        assert!(full.member(&o("0")).unwrap());
        assert!(full.member(&o("w^3")).unwrap());

        let a = set("(0,w]_1", "w^w");
        let b = set("(-1,w^2]_0", "w^w");
        let both = a.intersect(&b).unwrap();
        assert_eq!(both.disjuncts.len(), 1);
        assert_eq!(both.disjuncts[0].len(), 2);
        assert!(both.member(&o("w")).unwrap());
        assert!(!both.member(&o("w^3")).unwrap(), "above the 0-bound");

        let mismatched = SimpleSet::empty(o("w"));
        assert!(a.union(&mismatched).is_err());
    }

    #[test]
    fn complement_is_involutive_on_samples() {
        let points = sample_points(&o("w^w"));
        assert!(points.len() >= 100, "only {} sample points", points.len());
        let sets = [
            set("(0,w]_1", "w^w"),
            set("(1,w^2]_1 & (-1,w^3]_0", "w^w"),
            set("(0,w]_1 | (w,inf)_0", "w^w"),
            set("(-1,0]_2", "w^w"),
        ];
        for s in &sets {
            let cc = s.complement().complement();
            for p in &points {
                assert_eq!(
                    s.member(p).unwrap(),
                    cc.member(p).unwrap(),
                    "double complement at {p} of {s}"
                );
            }
        }
    }

    #[test]
    fn boolean_ops_agree_with_membership_on_samples() {
        use rand::prelude::*;
        let mut rng = StdRng::seed_from_u64(0x1c4d);
        let theta = o("w^w^w");
        let points = sample_points(&theta);
        let bounds: Vec<Ordinal> = points.clone();
        let random_set = |rng: &mut StdRng| {
            let mut disjuncts = Vec::new();
            for _ in 0..rng.gen_range(1..=2) {
                let mut conj = Vec::new();
                for _ in 0..rng.gen_range(1..=2) {
                    let sub = Ordinal::nat(rng.gen_range(0..3));
                    let lower = if rng.gen_bool(0.5) {
                        None
                    } else {
                        Some(bounds[rng.gen_range(0..bounds.len())].clone())
                    };
                    let upper = if rng.gen_bool(0.3) {
                        None
                    } else {
                        Some(bounds[rng.gen_range(0..bounds.len())].clone())
                    };
                    conj.push(Interval::new(lower, upper, sub));
                }
                if let Some(c) = merge_conjunction(&conj) {
                    disjuncts.push(c);
                }
            }
            SimpleSet {
                theta: theta.clone(),
                disjuncts,
            }
        };
        let mut checked = 0;
        while checked < 1000 {
            let a = random_set(&mut rng);
            let b = random_set(&mut rng);
            let p = &points[rng.gen_range(0..points.len())];
            let ma = a.member(p).unwrap();
            let mb = b.member(p).unwrap();
            assert_eq!(a.union(&b).unwrap().member(p).unwrap(), ma || mb);
            assert_eq!(a.intersect(&b).unwrap().member(p).unwrap(), ma && mb);
            assert_eq!(a.complement().member(p).unwrap(), !ma);
            checked += 3;
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(SimpleSet::full(o("w")).witness(), Some(o("0")));
        assert_eq!(set("(0,w]_1", "w^w").witness(), Some(o("w")));
        // lower >= upper after merge: contradiction
        assert_eq!(set("(w^w,w^w]_0", "w^w^w").witness(), None);
        assert_eq!(SimpleSet::empty(o("w")).witness(), None);
        // ambient bound too small for the constraint
        assert_eq!(set("(0,w]_1", "w").witness(), None);
    }

    #[test]
    fn witness_absent_iff_no_sampled_member() {
        let theta = o("w^w^w");
        let points = sample_points(&theta);
        let sets = [
            set("(0,w]_1 & (-1,w]_2", "w^w^w"),
            set("(w,w^2]_1", "w^w^w"),
            set("(0,0]_1", "w^w^w"),
            set("(w^w,inf)_1", "w^w^w"),
            set("(1,2]_2", "w^w^w"),
            set("(-1,0]_0", "w^w^w"),
        ];
        for s in &sets {
            match s.witness() {
                Some(w) => {
                    assert!(s.member(&w).unwrap(), "witness {w} not a member of {s}")
                }
                None => {
                    for p in &points {
                        assert!(!s.member(p).unwrap(), "{p} in {s} despite no witness");
                    }
                }
            }
        }
    }

    #[test]
    fn derived_set_examples() {
        let lambda = o("1");
        let empty = SimpleSet::empty(o("w^w"));
        assert!(empty.derived_set(&lambda).is_syntactically_empty());

        // limit points of the full space: the limit ordinals
        let full = SimpleSet::full(o("w^w"));
        let limits = full.derived_set(&o("1"));
        assert!(limits.member(&o("w")).unwrap());
        assert!(limits.member(&o("w^2+w*5")).unwrap());
        assert!(!limits.member(&o("w+1")).unwrap());
        assert!(!limits.member(&o("0")).unwrap());

        // in the 0-topology: everything above the minimum
        let above = full.derived_set(&o("0"));
        assert!(!above.member(&o("0")).unwrap());
        assert!(above.member(&o("1")).unwrap());
        assert!(above.member(&o("w")).unwrap());
    }

    #[test]
    fn derived_set_matches_rank_preimage_rule() {
        // d applied to a rank preimage keeps exactly the points whose rank
        // exceeds the least value in the preimage
        let theta = o("w^w^w");
        let points = sample_points(&theta);
        for xi in [o("0"), o("1"), o("2")] {
            for (lo, hi) in [
                (None, Some(o("2"))),
                (Some(o("1")), Some(o("w"))),
                (Some(o("2")), None),
            ] {
                let s = SimpleSet::from_interval(
                    theta.clone(),
                    Interval::new(lo.clone(), hi.clone(), xi.clone()),
                );
                if s.witness().is_none() {
                    continue;
                }
                let min_value = match &lo {
                    Some(l) => add(l, &Ordinal::one()),
                    None => Ordinal::Zero,
                };
                let ds = s.derived_set(&xi);
                for p in &points {
                    let expect = rank(p, &xi) > min_value;
                    assert_eq!(ds.member(p).unwrap(), expect, "i_{xi} of {s} at {p}");
                }
            }
        }
    }

    #[test]
    fn derived_set_is_shrinking_on_samples() {
        let theta = o("w^w^w");
        let points = sample_points(&theta);
        let sets = [
            SimpleSet::full(theta.clone()),
            set("(0,w^w]_1", "w^w^w"),
            set("(-1,w]_1 | (0,w]_2", "w^w^w"),
        ];
        for s in &sets {
            for lambda in [o("0"), o("1"), o("2")] {
                let once = s.derived_set(&lambda);
                let twice = once.derived_set(&lambda);
                for p in &points {
                    if twice.member(p).unwrap() {
                        assert!(once.member(p).unwrap(), "i_{lambda} grew at {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&o("w^w"), &o("1")), o("w"));
        assert_eq!(rank(&o("e[w](1)+w^2"), &o("0")), o("e[w](1)+w^2"));
        assert_eq!(rank(&o("e[w](1)"), &o("w")), o("1"));
    }

    #[test]
    fn neighborhood_examples() {
        let full = neighborhood(&SimpleFunction::new(), &o("w"), o("w^w")).unwrap();
        assert!(full.member(&o("3")).unwrap());

        let r = SimpleFunction::from_pairs([(o("0"), o("0"))]);
        let b = neighborhood(&r, &o("w"), o("w^w")).unwrap();
        assert!(b.member(&o("w")).unwrap());
        assert!(b.member(&o("1")).unwrap());
        assert!(!b.member(&o("w+1")).unwrap());

        let r = SimpleFunction::from_pairs([(o("1"), o("1"))]);
        let eps1 = hyper_exp(&o("w"), &o("2"));
        let b = neighborhood(&r, &o("e[w](1)"), eps1).unwrap();
        assert!(b.member(&o("e[w](1)")).unwrap(), "l(eps_0) = eps_0 > 1");
        assert!(
            b.member(&o("w^w")).unwrap(),
            "l(w^w) = w lands in (1, eps_0]"
        );
        assert!(!b.member(&o("w+1")).unwrap(), "l(w+1) = 0");

        // precondition: r must strictly bound alpha
        let r = SimpleFunction::from_pairs([(o("0"), o("w"))]);
        assert!(neighborhood(&r, &o("w"), o("w^w")).is_err());
    }

    /// Constructs, per the successor/limit recursion, a strict bound system
    /// whose neighborhood isolates `xi` among points of equal or larger
    /// rank at level `lambda`.
    fn isolating_bounds(xi: &Ordinal, lambda: &Ordinal) -> SimpleFunction {
        if lambda.is_zero() {
            return SimpleFunction::from_pairs([(Ordinal::Zero, Ordinal::Zero)]);
        }
        if let Some(alpha) = lambda.pred() {
            let here = hyper_log(&alpha, xi);
            let base = isolating_bounds(xi, &alpha);
            if here.is_zero() {
                return base;
            }
            // strip one principal term: here = head + w^b
            let mut ts = here.cnf_terms();
            let (e, c) = ts.pop().expect("here is positive");
            if c > 1 {
                ts.push((e, c - 1));
            }
            let head = Ordinal::from_cnf_terms(ts);
            return base.join(&SimpleFunction::from_pairs([(alpha, head)]));
        }
        let (witness, _) = stabilization(lambda, xi).expect("lambda is a limit");
        isolating_bounds(xi, &witness)
    }

    #[test]
    fn equal_rank_points_are_excluded_from_some_neighborhood() {
        let theta = o("w^w^w");
        let points = sample_points(&theta);
        for xi in [o("w"), o("w+1"), o("w^2"), o("w^2+w"), o("w^w")] {
            for lambda in [o("1"), o("2"), o("w")] {
                let r = isolating_bounds(&xi, &lambda);
                assert!(r.bounded_by(&xi, true), "r = {r} must strictly bound {xi}");
                let b = neighborhood(&r, &xi, theta.clone()).unwrap();
                assert!(b.member(&xi).unwrap());
                let here = hyper_log(&lambda, &xi);
                for p in points.iter().filter(|p| *p != &xi) {
                    if b.member(p).unwrap() {
                        assert!(
                            hyper_log(&lambda, p) < here,
                            "{p} in B_r({xi}) with rank not below l[{lambda}]({xi})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for text in [
            "empty",
            "full",
            "(0,w]_1",
            "(-1,w^2]_0 & (0,inf)_1",
            "(0,w]_1 | (w,w^2]_(w+1)",
        ] {
            let s = set(text, "w^w^w");
            let again = parse_simple_set(&s.to_string(), o("w^w^w")).unwrap();
            assert_eq!(s, again, "round trip through {s}");
        }
    }
}
