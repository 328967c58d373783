//! Reductive maps: rank-preserving surjections from `[0, e[L](T)]` onto
//! `[0, e(T)]` for infinite additively indecomposable `L`, diagonalized
//! through fundamental sequences, together with the index `N`, the partial
//! sums `sigma`, and the partition blocks they induce.

use crate::icard::{Interval, SimpleSet};
use crate::ordinal::{add, fund_seq, hyper_exp, hyper_log, Ordinal};
use crate::Error;

/// Parameters of one reduction: the target height `theta` and the
/// superscript `lambda`, which must be infinite and additively
/// indecomposable for the diagonal recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionContext {
    pub theta: Ordinal,
    pub lambda: Ordinal,
}

/// One layer of the recursion trace, for audit output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub theta: Ordinal,
    pub n: u64,
    pub sigma: Ordinal,
    pub argument: Ordinal,
}

impl ReductionContext {
    pub fn new(theta: Ordinal, lambda: Ordinal) -> Result<Self, Error> {
        if !lambda.is_indecomposable() || lambda < Ordinal::omega() {
            return Err(Error::domain(format!(
                "{lambda} must be infinite and additively indecomposable"
            )));
        }
        Ok(ReductionContext { theta, lambda })
    }

    fn top(&self) -> Ordinal {
        hyper_exp(&self.lambda, &self.theta)
    }

    /// The least `N` with `l[lambda[N]](point) <= e[lambda](theta[N])`.
    pub fn n_index(&self, point: &Ordinal) -> Result<u64, Error> {
        let top = self.top();
        if point >= &top {
            return Err(Error::domain(format!(
                "{point} is not below e[{}]({}) = {top}",
                self.lambda, self.theta
            )));
        }
        self.n_index_below(point)
    }

    fn n_index_below(&self, point: &Ordinal) -> Result<u64, Error> {
        for n in 0..100_000u64 {
            let level = fund_seq(&self.lambda, n)?;
            let bound = hyper_exp(&self.lambda, &fund_seq(&self.theta, n)?);
            if hyper_log(&level, point) <= bound {
                return Ok(n);
            }
        }
        Err(Error::domain("n_index did not converge"))
    }

    /// `sigma[N]`: the sum of `e(theta[n]) + 1` over `n < N`.
    pub fn sigma(&self, n: u64) -> Result<Ordinal, Error> {
        let mut acc = Ordinal::Zero;
        for k in 0..n {
            let step = hyper_exp(&Ordinal::one(), &fund_seq(&self.theta, k)?);
            acc = add(&add(&acc, &step), &Ordinal::one());
        }
        Ok(acc)
    }

    /// The reductive map, with its recursion trace.
    pub fn reductive_map_traced(&self, xi: &Ordinal) -> Result<(Ordinal, Vec<TraceStep>), Error> {
        let top = self.top();
        if xi > &top {
            return Err(Error::domain(format!(
                "{xi} is not in the domain [0, {top}]"
            )));
        }
        let mut trace = Vec::new();
        let value = self.descend(xi, &mut trace)?;
        Ok((value, trace))
    }

    pub fn reductive_map(&self, xi: &Ordinal) -> Result<Ordinal, Error> {
        Ok(self.reductive_map_traced(xi)?.0)
    }

    fn descend(&self, xi: &Ordinal, trace: &mut Vec<TraceStep>) -> Result<Ordinal, Error> {
        let top = self.top();
        if xi == &top {
            return Ok(hyper_exp(&Ordinal::one(), &self.theta));
        }
        let n = self.n_index_below(xi)?;
        let sigma = self.sigma(n)?;
        let level = fund_seq(&self.lambda, n)?;
        let argument = hyper_log(&level, xi);
        trace.push(TraceStep {
            theta: self.theta.clone(),
            n,
            sigma: sigma.clone(),
            argument: argument.clone(),
        });
        let inner = ReductionContext {
            theta: fund_seq(&self.theta, n)?,
            lambda: self.lambda.clone(),
        };
        let rest = inner.descend(&argument, trace)?;
        Ok(add(&sigma, &rest))
    }

    /// The block of points whose index is exactly `n`, as a simple set over
    /// `[0, e[lambda](theta))`: per-index lower bounds below `n` and the
    /// single upper bound at level `lambda[n]`.
    pub fn delta_block(&self, n: u64) -> Result<SimpleSet, Error> {
        let mut intervals = Vec::new();
        for k in 0..n {
            let level = fund_seq(&self.lambda, k)?;
            let bound = hyper_exp(&self.lambda, &fund_seq(&self.theta, k)?);
            intervals.push(Interval::new(Some(bound), None, level));
        }
        let level = fund_seq(&self.lambda, n)?;
        let bound = hyper_exp(&self.lambda, &fund_seq(&self.theta, n)?);
        intervals.push(Interval::new(None, Some(bound), level));
        Ok(SimpleSet::from_conjunction(self.top(), intervals))
    }

    /// The half-open target interval `[sigma[N], sigma[N+1])`.
    pub fn sigma_block(&self, n: u64) -> Result<(Ordinal, Ordinal), Error> {
        Ok((self.sigma(n)?, self.sigma(n + 1)?))
    }
}

/// The reductive map for an arbitrary superscript: identity at zero,
/// a plain hyperlogarithm at successors, the diagonal recursion at infinite
/// indecomposable superscripts, and the composite
/// `r[w^b] . l[a]` for decomposable limits `a + w^b`.
pub fn reductive_map_general(
    theta: &Ordinal,
    lambda: &Ordinal,
    xi: &Ordinal,
) -> Result<Ordinal, Error> {
    let effective = add(&Ordinal::one(), lambda);
    let top = hyper_exp(&effective, theta);
    if xi > &top {
        return Err(Error::domain(format!(
            "{xi} is not in the domain [0, {top}]"
        )));
    }
    if lambda.is_zero() {
        return Ok(xi.clone());
    }
    if let Some(mu) = effective.pred() {
        // 1 + lambda = mu + 1: the hyperlogarithm is already reductive
        return Ok(hyper_log(&mu, xi));
    }
    // lambda is a limit; split off the final indecomposable part
    let mut ts = lambda.cnf_terms();
    let (b_exp, c) = ts.pop().expect("limit ordinal is positive");
    if c > 1 {
        ts.push((b_exp.clone(), c - 1));
    }
    let head = Ordinal::from_cnf_terms(ts);
    let tail = Ordinal::from_cnf_terms(vec![(b_exp, 1)]);
    let ctx = ReductionContext::new(theta.clone(), tail)?;
    if head.is_zero() {
        ctx.reductive_map(xi)
    } else {
        ctx.reductive_map(&hyper_log(&head, xi))
    }
}
