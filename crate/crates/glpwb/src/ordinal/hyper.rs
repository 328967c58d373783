//! Hyperexponentials, hyperlogarithms, fundamental sequences and the
//! stabilization witness for hyperlogarithm sequences at limit superscripts.
//!
//! `e` is the map `x -> -1 + w^x` and `e[a+b] = e[a] . e[b]`; the family is
//! normal in its argument. Hyperlogarithms are the matching left inverses,
//! built from the last-exponent map `ell` by `l[a+b] = l[b] . l[a]`.

use super::{add, Ordinal};
use crate::Error;

/// `e[lambda](x)` in canonical form.
///
/// The superscript is peeled one additively indecomposable chunk at a time,
/// rightmost chunk applied first.
pub fn hyper_exp(lambda: &Ordinal, x: &Ordinal) -> Ordinal {
    let mut value = x.clone();
    let chunks = lambda.cnf_terms();
    for (exp, coeff) in chunks.into_iter().rev() {
        for _ in 0..coeff {
            value = hyper_exp_indecomposable(&exp, &value);
        }
    }
    value
}

/// `e[w^mu](x)`.
fn hyper_exp_indecomposable(mu: &Ordinal, x: &Ordinal) -> Ordinal {
    if x.is_zero() {
        return Ordinal::Zero;
    }
    if mu.is_zero() {
        // e(x) = w^x for positive x
        return x.omega_pow();
    }
    if let Ordinal::HypE(lam, _) = x {
        // x is already fixed by every e[w^delta] with w^delta < lam
        let level = Ordinal::from_cnf_terms(vec![(mu.clone(), 1)]);
        if **lam > level {
            return x.clone();
        }
        return Ordinal::HypE(Box::new(level), Box::new(x.clone()));
    }
    let level = Ordinal::from_cnf_terms(vec![(mu.clone(), 1)]);
    Ordinal::HypE(Box::new(level), Box::new(x.clone()))
}

/// `l[lambda](xi)` in canonical form, with `l[lambda](0) = 0`.
///
/// The superscript is peeled left to right: `l[a+b] = l[b] . l[a]`.
pub fn hyper_log(lambda: &Ordinal, xi: &Ordinal) -> Ordinal {
    let mut value = xi.clone();
    for (exp, coeff) in lambda.cnf_terms() {
        for _ in 0..coeff {
            if value.is_zero() {
                return Ordinal::Zero;
            }
            value = hyper_log_indecomposable(&exp, &value);
        }
    }
    value
}

/// `l[w^mu](xi)` for positive `xi`.
fn hyper_log_indecomposable(mu: &Ordinal, xi: &Ordinal) -> Ordinal {
    debug_assert!(!xi.is_zero());
    if mu.is_zero() {
        // plain ell: the last CNF exponent
        return xi.ell().expect("xi is positive");
    }
    // l[a](c + d) = l[a](d): only the last principal term matters
    let last = xi.cnf_terms().pop().expect("xi is positive");
    let principal = last.0.omega_pow();
    match &principal {
        Ordinal::HypE(lam, arg) => {
            let level = Ordinal::from_cnf_terms(vec![(mu.clone(), 1)]);
            match level.cmp(lam) {
                // l[w^mu] e[w^nu] = e[-w^mu + w^nu] = e[w^nu] when mu < nu
                std::cmp::Ordering::Less => principal.clone(),
                // exact left inverse
                std::cmp::Ordering::Equal => arg.as_ref().clone(),
                // l[w^mu] e[w^nu] = l[w^mu] when nu < mu
                std::cmp::Ordering::Greater => {
                    if arg.is_zero() {
                        Ordinal::Zero
                    } else {
                        hyper_log_indecomposable(mu, arg)
                    }
                }
            }
        }
        _ => {
            // principal = w^e with e not epsilon-like; l[w^mu] w^e = l[w^mu] e
            let e = principal.ell().expect("principal is positive");
            if e.is_zero() {
                // l[w^mu](1) = l[w^mu](l 1) = l[w^mu](0) = 0
                Ordinal::Zero
            } else {
                hyper_log_indecomposable(mu, &e)
            }
        }
    }
}

/// The `n`-th member of the canonical fundamental sequence.
///
/// Successors use the constant convention `(x+1)[n] = x`. Limits follow
/// `(a + w^(b+1))[n] = a + w^b * n`, `(a + w^lam)[n] = a + w^(lam[n])`, and
/// atoms follow the normality equations for `e[lambda]`:
/// `e[lam](x+1)[n] = e[lam[n]](e[lam](x) + 1)` and
/// `e[lam](x)[n] = e[lam](x[n])` for limit `x`.
pub fn fund_seq(xi: &Ordinal, n: u64) -> Result<Ordinal, Error> {
    if xi.is_zero() {
        return Err(Error::domain("0 has no fundamental sequence"));
    }
    if let Some(p) = xi.pred() {
        return Ok(p);
    }
    if let Ordinal::HypE(lam, arg) = xi {
        return Ok(atom_fund_seq(lam, arg, n));
    }
    // xi = head + w^e * c with e > 0; peel one w^e off the tail
    let mut ts = xi.cnf_terms();
    let (e, c) = ts.pop().expect("xi is positive");
    if c > 1 {
        ts.push((e.clone(), c - 1));
    }
    let head = Ordinal::from_cnf_terms(ts);
    let step = if let Some(e_pred) = e.pred() {
        // w^(e'+1): approximate with w^e' * n
        if n == 0 {
            Ordinal::Zero
        } else {
            Ordinal::from_cnf_terms(vec![(e_pred, n)])
        }
    } else if e.is_eps_like() {
        // the principal term is itself an atom
        let Ordinal::HypE(lam, arg) = &e else {
            unreachable!()
        };
        atom_fund_seq(lam, arg, n)
    } else {
        // w^e for limit e
        fund_seq(&e, n)?.omega_pow()
    };
    Ok(add(&head, &step))
}

fn atom_fund_seq(lam: &Ordinal, arg: &Ordinal, n: u64) -> Ordinal {
    debug_assert!(lam.is_limit());
    if let Some(arg_pred) = arg.pred() {
        let base = hyper_exp(lam, &arg_pred);
        let seed = add(&base, &Ordinal::one());
        let level = fund_seq(lam, n).expect("lambda is a limit");
        hyper_exp(&level, &seed)
    } else {
        let inner = fund_seq(arg, n).expect("argument is a limit");
        hyper_exp(lam, &inner)
    }
}

/// For a limit superscript `Lambda = a + w^b`, the hyperlogarithms
/// `l[t](xi)` are eventually constant on `t in [witness, Lambda)`; returns
/// the witness discovered by the descent together with the constant value
/// `e[w^b](l[Lambda](xi))`.
pub fn stabilization(lambda: &Ordinal, xi: &Ordinal) -> Result<(Ordinal, Ordinal), Error> {
    if !lambda.is_limit() {
        return Err(Error::domain(format!("{lambda} is not a limit ordinal")));
    }
    let mut ts = lambda.cnf_terms();
    let (b_exp, c) = ts.pop().expect("limit ordinal is positive");
    if c > 1 {
        ts.push((b_exp.clone(), c - 1));
    }
    let alpha = Ordinal::from_cnf_terms(ts);
    let omega_b = Ordinal::from_cnf_terms(vec![(b_exp.clone(), 1)]);

    let mut u = hyper_log(&alpha, xi);
    let value = hyper_exp(&omega_b, &hyper_log(&omega_b, &u));
    let mut eta = Ordinal::Zero;
    while u != value {
        // one reduction step below w^b; each strictly decreases u
        let last = u.cnf_terms().pop().expect("u > value >= 0");
        let principal = last.0.omega_pow();
        let next = match &principal {
            // a fixed-point plateau strictly below the target level is
            // cleared in one l[w^nu] jump
            Ordinal::HypE(lam, _) if lam.as_ref() < &omega_b => {
                eta = add(&eta, lam);
                hyper_log(lam, &u)
            }
            _ => {
                eta = add(&eta, &Ordinal::one());
                hyper_log(&Ordinal::one(), &u)
            }
        };
        debug_assert!(next < u, "each stabilization step must descend");
        u = next;
    }
    Ok((add(&alpha, &eta), value))
}
