//! Ordinal arithmetic of the d-product: the bound `-1 + (1+Xi)(1+Theta)`,
//! the component split into copies of `[0, Xi]` and the limit multiples of
//! `1 + Xi`, and the projections onto the factors.

use crate::ordinal::{add, divmod, left_subtract, mul, Ordinal};
use crate::Error;

/// Which component a point belongs to: `G0` carries the fiber copies of
/// `[0, Xi]`, `G1` the points `(1+Xi)*a` with `a` a limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    G0,
    G1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DProductContext {
    pub xi: Ordinal,
    pub theta: Ordinal,
    pub bound: Ordinal,
    one_plus_xi: Ordinal,
}

impl DProductContext {
    pub fn new(xi: Ordinal, theta: Ordinal) -> Self {
        let one_plus_xi = add(&Ordinal::one(), &xi);
        let product = mul(&one_plus_xi, &add(&Ordinal::one(), &theta));
        let bound = left_subtract(&Ordinal::one(), &product).expect("product is positive");
        DProductContext {
            xi,
            theta,
            bound,
            one_plus_xi,
        }
    }

    fn check_range(&self, point: &Ordinal) -> Result<(), Error> {
        if point > &self.bound {
            Err(Error::domain(format!(
                "{point} is outside [0, {}]",
                self.bound
            )))
        } else {
            Ok(())
        }
    }

    /// `G1` iff the point is `(1+Xi)*a` for a limit `a`.
    pub fn component(&self, point: &Ordinal) -> Result<Component, Error> {
        self.check_range(point)?;
        let (q, r) = divmod(point, &self.one_plus_xi)?;
        if r.is_zero() && q.is_limit() {
            Ok(Component::G1)
        } else {
            Ok(Component::G0)
        }
    }

    /// Decomposes a `G0` point as `-1 + (1+Xi)*a + (1+x0)`, returning
    /// `(a, x0)`.
    fn g0_decompose(&self, point: &Ordinal) -> (Ordinal, Ordinal) {
        let shifted = add(&Ordinal::one(), point);
        let (q, delta) = divmod(&shifted, &self.one_plus_xi).expect("1+Xi > 0");
        if delta.is_zero() {
            // the point tops a fiber: back up one full copy of 1+Xi
            let (q_limit, n) = divmod(&q, &Ordinal::omega()).expect("omega > 0");
            let n = n.as_nat().expect("remainder below omega is finite");
            debug_assert!(n > 0, "a zero finite part would put the point in G1");
            let alpha = add(&mul(&Ordinal::omega(), &q_limit), &Ordinal::nat(n - 1));
            (alpha, self.xi.clone())
        } else {
            let x0 = left_subtract(&Ordinal::one(), &delta).expect("delta is positive");
            (q, x0)
        }
    }

    /// First projection, defined on `G0` only.
    pub fn pi0(&self, point: &Ordinal) -> Result<Ordinal, Error> {
        self.check_range(point)?;
        if self.component(point)? == Component::G1 {
            return Err(Error::domain(format!(
                "pi0 is undefined on G1 (at {point})"
            )));
        }
        Ok(self.g0_decompose(point).1)
    }

    /// Second projection, defined everywhere.
    pub fn pi1(&self, point: &Ordinal) -> Result<Ordinal, Error> {
        self.check_range(point)?;
        if self.component(point)? == Component::G1 {
            let (q, _) = divmod(point, &self.one_plus_xi)?;
            return Ok(q);
        }
        let (alpha, _) = self.g0_decompose(point);
        // -1 + alpha + 1: shifts a finite alpha down to match the fiber index
        left_subtract(&Ordinal::one(), &add(&alpha, &Ordinal::one()))
    }
}
