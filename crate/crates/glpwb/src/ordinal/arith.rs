//! Ordinal sum, left subtraction, product and division on canonical terms.

use super::Ordinal;
use crate::Error;

/// Ordinal sum `a + b`. Terms of `a` below the leading exponent of `b` are
/// absorbed.
pub fn add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let mut left = a.cnf_terms();
    let right = b.cnf_terms();
    let head = &right[0].0;
    left.retain(|(e, _)| e >= head);
    let mut out = left;
    let mut rest = right.into_iter();
    let (e0, c0) = rest.next().unwrap();
    match out.last_mut() {
        Some((e, c)) if *e == e0 => *c += c0,
        _ => out.push((e0, c0)),
    }
    out.extend(rest);
    Ordinal::from_cnf_terms(out)
}

/// Left subtraction: the unique `eta` with `zeta + eta = xi`, extended with
/// `-x + x = 0`. Errors when `zeta > xi`.
pub fn left_subtract(zeta: &Ordinal, xi: &Ordinal) -> Result<Ordinal, Error> {
    if zeta > xi {
        return Err(Error::domain(format!(
            "left subtraction needs {zeta} <= {xi}"
        )));
    }
    let a = zeta.cnf_terms();
    let b = xi.cnf_terms();
    let mut i = 0;
    while i < a.len() {
        let (ea, ca) = &a[i];
        let (eb, cb) = &b[i];
        debug_assert!(ea <= eb);
        if ea < eb {
            // the remainder of zeta is absorbed by w^eb
            return Ok(Ordinal::from_cnf_terms(b[i..].to_vec()));
        }
        if ca < cb {
            let mut out = vec![(eb.clone(), cb - ca)];
            out.extend_from_slice(&b[i + 1..]);
            return Ok(Ordinal::from_cnf_terms(out));
        }
        debug_assert!(ca == cb, "zeta <= xi rules out a larger coefficient");
        i += 1;
    }
    Ok(Ordinal::from_cnf_terms(b[i..].to_vec()))
}

/// Ordinal product `a * b`.
pub fn mul(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if a.is_zero() || b.is_zero() {
        return Ordinal::Zero;
    }
    let left = a.cnf_terms();
    let (head_exp, head_coeff) = left[0].clone();
    let mut acc = Ordinal::Zero;
    for (e, c) in b.cnf_terms() {
        let piece = if e.is_zero() {
            // a * n = w^a1*(c1*n) + tail of a
            let mut ts = left.clone();
            ts[0].1 = head_coeff * c;
            Ordinal::from_cnf_terms(ts)
        } else {
            // a * w^e absorbs everything below the head of a
            let exp = add(&head_exp, &e);
            Ordinal::from_cnf_terms(vec![(exp, c)])
        };
        acc = add(&acc, &piece);
    }
    acc
}

/// Ordinal division: returns `(q, r)` with `xi = d*q + r` and `r < d`.
pub fn divmod(xi: &Ordinal, d: &Ordinal) -> Result<(Ordinal, Ordinal), Error> {
    if d.is_zero() {
        return Err(Error::domain("division by zero"));
    }
    let dt = d.cnf_terms();
    let (da, dc) = dt[0].clone();
    let mut q = Ordinal::Zero;
    let mut r = xi.clone();
    loop {
        if &r < d {
            return Ok((q, r));
        }
        let rt = r.cnf_terms();
        let (ra, rc) = rt[0].clone();
        if ra > da {
            // d * (w^(-da+ra) * rc) = w^ra * rc
            let delta = left_subtract(&da, &ra)?;
            let step_q = Ordinal::from_cnf_terms(vec![(delta, rc)]);
            q = add(&q, &step_q);
            r = Ordinal::from_cnf_terms(rt[1..].to_vec());
        } else {
            debug_assert!(ra == da, "r >= d forces the head exponents to match");
            let mut m = rc / dc;
            let step = mul(d, &Ordinal::nat(m));
            if step > r {
                m -= 1;
            }
            debug_assert!(m >= 1);
            let step = mul(d, &Ordinal::nat(m));
            q = add(&q, &Ordinal::nat(m));
            r = left_subtract(&step, &r)?;
            debug_assert!(&r < d);
        }
    }
}
