use super::*;

fn o(s: &str) -> Ordinal {
    parse_ordinal(s).unwrap()
}

pub use super::enumerate_terms;

#[test]
fn parse_examples() {
    assert_eq!(o("0"), Ordinal::Zero);
    assert_eq!(
        o("w^w"),
        Ordinal::Cnf(vec![(Ordinal::Cnf(vec![(Ordinal::one(), 1)]), 1)])
    );
    assert_eq!(
        o("e[w](1)"),
        Ordinal::HypE(Box::new(Ordinal::omega()), Box::new(Ordinal::one()))
    );
    // non-canonical spellings normalize
    assert_eq!(o("1+w"), o("w"));
    assert_eq!(o("w^0"), o("1"));
    assert_eq!(o("l[w](e[w](1))"), o("1"));
    assert!(parse_ordinal("w^").is_err());
    assert!(parse_ordinal("q").is_err());
}

#[test]
fn render_round_trips() {
    for s in [
        "0",
        "5",
        "w",
        "w*3",
        "w+1",
        "w^w",
        "w^(w+1)",
        "w^(w*2)",
        "w^w^w",
        "w^5+w*2+7",
        "e[w](1)",
        "e[w](2)*3+e[w](1)*2+w^(e[w](1)+1)",
        "e[w^2](w+1)",
        "e[w](e[w](1))",
    ] {
        let x = o(s);
        let text = x.to_string();
        assert_eq!(o(&text), x, "round trip through {text}");
    }
    for x in enumerate_terms(5) {
        let text = x.to_string();
        assert_eq!(o(&text), x, "round trip through {text}");
    }
}

#[test]
fn compare_examples() {
    assert_eq!(o("0").compare(&o("1")), OrdCompare::LT);
    // e[w](1) vs w^w: e^2(1) = w^w already, and e[w](1) = sup_n e^n(1)
    let mut tower = Ordinal::one();
    for _ in 0..2 {
        tower = hyper_exp(&Ordinal::one(), &tower);
    }
    assert_eq!(tower, o("w^w"));
    let mut higher = tower.clone();
    for _ in 0..3 {
        higher = hyper_exp(&Ordinal::one(), &higher);
        assert_eq!(o("e[w](1)").compare(&higher), OrdCompare::GT);
    }
    assert_eq!(o("e[w](1)").compare(&o("w^w")), OrdCompare::GT);
    // eps_0 * w <= w^(eps_0 + 1) < eps_1 by normality
    assert_eq!(o("w^(e[w](1))*2").compare(&o("e[w](2)")), OrdCompare::LT);
    assert_eq!(o("w^(e[w](1)+1)").compare(&o("e[w](2)")), OrdCompare::LT);
}

#[test]
fn order_is_total_and_transitive_on_small_terms() {
    // enumerate_terms returns terms sorted by cmp; verify every pair agrees
    // with the index order, which pins down totality and transitivity.
    let all = enumerate_terms(7);
    assert!(all.len() > 100, "expected a rich sample, got {}", all.len());
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            let expect = i.cmp(&j);
            assert_eq!(a.cmp(b), expect, "compare {a} vs {b}");
        }
    }
}

#[test]
fn add_examples() {
    assert_eq!(add(&o("1"), &o("w")), o("w"));
    assert_eq!(add(&o("w"), &o("1")), o("w+1"));
    let eps_w3 = hyper_exp(&Ordinal::omega(), &o("w*3"));
    let eps_w2 = hyper_exp(&Ordinal::omega(), &o("w*2"));
    let gamma = add(&eps_w3, &eps_w2);
    assert_eq!(
        gamma,
        Ordinal::Cnf(vec![(eps_w3.clone(), 1), (eps_w2.clone(), 1)])
    );
    assert_eq!(add(&eps_w2, &eps_w3), eps_w3, "smaller atom absorbed");
}

#[test]
fn add_is_associative_on_small_terms() {
    let all = enumerate_terms(4);
    for a in &all {
        for b in &all {
            for c in &all {
                let left = add(&add(a, b), c);
                let right = add(a, &add(b, c));
                assert_eq!(left, right, "({a} + {b}) + {c}");
            }
        }
    }
}

#[test]
fn left_subtract_examples() {
    assert_eq!(left_subtract(&o("w"), &o("w*2")).unwrap(), o("w"));
    let xi = o("e[w](1)+w^2");
    assert_eq!(left_subtract(&xi, &xi).unwrap(), Ordinal::Zero);
    // -w + (w + w^2): the oracle is the absorption law w + w^2 = w^2
    assert_eq!(add(&o("w"), &o("w^2")), o("w^2"));
    assert_eq!(left_subtract(&o("w"), &o("w+w^2")).unwrap(), o("w^2"));
    assert!(left_subtract(&o("w^2"), &o("w")).is_err());
}

#[test]
fn left_subtract_inverts_add() {
    let all = enumerate_terms(4);
    for a in &all {
        for b in &all {
            let sum = add(a, b);
            assert_eq!(left_subtract(a, &sum).unwrap(), *b, "-{a} + ({a}+{b})");
        }
    }
}

#[test]
fn mul_examples() {
    assert_eq!(mul(&o("w"), &o("2")), o("w*2"));
    assert_eq!(mul(&o("2"), &o("w")), o("w"));
    assert_eq!(mul(&add(&o("1"), &o("w^2")), &o("w")), o("w^3"));
    assert_eq!(mul(&o("w+1"), &o("w")), o("w^2"));
    assert_eq!(mul(&o("w+1"), &o("2")), o("w*2+1"));
    assert_eq!(mul(&o("w^2"), &o("w^w")), o("w^w"), "w^(2+w) = w^w");
}

#[test]
fn divmod_inverts_mul() {
    let all = enumerate_terms(4);
    for d in all.iter().filter(|d| !d.is_zero()) {
        for q in &all {
            for r in all.iter().filter(|r| *r < d) {
                let xi = add(&mul(d, q), r);
                let (q2, r2) = divmod(&xi, d).unwrap();
                assert_eq!((q2, r2), (q.clone(), r.clone()), "{xi} / {d}");
            }
        }
    }
}

#[test]
fn omega_pow_examples() {
    assert_eq!(o("0").omega_pow(), o("1"));
    assert_eq!(o("w").omega_pow(), o("w^w"));
    let eps0 = o("e[w](1)");
    assert_eq!(eps0.omega_pow(), eps0, "epsilon numbers are fixed");
    // fixed-point oracle: eps_0 is in the range of e[w], hence fixed by
    // every e[w^d] with d < 1, in particular by e itself
    assert_eq!(hyper_exp(&Ordinal::one(), &eps0), eps0);
}

#[test]
fn ell_examples() {
    assert_eq!(o("1").ell().unwrap(), o("0"));
    let gamma = add(
        &hyper_exp(&Ordinal::omega(), &o("w*3")),
        &hyper_exp(&Ordinal::omega(), &o("w*2")),
    );
    assert_eq!(
        gamma.ell().unwrap(),
        hyper_exp(&Ordinal::omega(), &o("w*2"))
    );
    assert_eq!(o("w*2+1").ell().unwrap(), o("0"));
    assert!(o("0").ell().is_err());
}

#[test]
fn hyper_exp_examples() {
    assert_eq!(hyper_exp(&o("w^2+w"), &o("0")), o("0"));
    assert_eq!(hyper_exp(&o("2"), &o("1")), o("w^w"));
    let eps1 = Ordinal::HypE(Box::new(Ordinal::omega()), Box::new(o("2")));
    assert_eq!(hyper_exp(&o("w"), &o("2")), eps1);
    // e^(w+1) 1 = e^w(e 1) = e^w(w) = eps_w
    assert_eq!(
        hyper_exp(&o("w+1"), &o("1")),
        Ordinal::HypE(Box::new(Ordinal::omega()), Box::new(o("w")))
    );
    // applying e[w] to a fixed point of a higher level collapses
    let big = hyper_exp(&o("w^2"), &o("1"));
    assert_eq!(hyper_exp(&o("w"), &big), big);
}

#[test]
fn hyper_exp_is_normal_in_argument() {
    let all = enumerate_terms(4);
    for lam in [o("w"), o("w+1"), o("w^2"), o("w*2")] {
        for x in &all {
            for y in &all {
                let ex = hyper_exp(&lam, x);
                let ey = hyper_exp(&lam, y);
                assert_eq!(x.cmp(y), ex.cmp(&ey), "e[{lam}] on {x} vs {y}");
            }
        }
    }
}

#[test]
fn hyper_log_examples() {
    let gamma = add(
        &hyper_exp(&Ordinal::omega(), &o("w*3")),
        &hyper_exp(&Ordinal::omega(), &o("w*2")),
    );
    assert_eq!(hyper_log(&o("0"), &gamma), gamma);
    assert_eq!(hyper_log(&o("w"), &gamma), o("w*2"));
    assert_eq!(hyper_log(&o("w+2"), &gamma), o("0"));
    // the full displayed sequence
    let eps_w2 = hyper_exp(&Ordinal::omega(), &o("w*2"));
    assert_eq!(hyper_log(&o("1"), &gamma), eps_w2);
    assert_eq!(hyper_log(&o("2"), &gamma), eps_w2);
    assert_eq!(hyper_log(&o("w+1"), &gamma), o("1"));
    assert_eq!(hyper_log(&o("w+3"), &gamma), o("0"));
}

#[test]
fn hyper_log_inverts_hyper_exp() {
    let all = enumerate_terms(4);
    let sups = [o("1"), o("2"), o("w"), o("w+1"), o("w*2"), o("w^2")];
    for lam in &sups {
        for x in &all {
            let e = hyper_exp(lam, x);
            assert_eq!(hyper_log(lam, &e), *x, "l[{lam}] e[{lam}] {x}");
        }
    }
}

#[test]
fn hyper_log_composes() {
    let all = enumerate_terms(4);
    let sups = [o("1"), o("w"), o("w+1"), o("w^2")];
    for a in &sups {
        for b in &sups {
            for x in &all {
                let composite = hyper_log(&add(a, b), x);
                let staged = hyper_log(b, &hyper_log(a, x));
                assert_eq!(composite, staged, "l[{a}+{b}] {x}");
            }
        }
    }
}

#[test]
fn hyper_log_non_increasing() {
    let all = enumerate_terms(5);
    for x in &all {
        let mut prev = x.clone();
        for _ in 0..6 {
            let next = hyper_log(&Ordinal::one(), &prev);
            assert!(next <= prev);
            prev = next;
        }
    }
}

#[test]
fn range_membership_matches_fixed_points() {
    // x in range(e[w^g]) iff e[w^d] x = x for all d < g
    let candidates = enumerate_terms(5);
    for x in &candidates {
        for g in [o("1"), o("2"), o("3")] {
            let in_range = x.is_zero()
                || match x {
                    Ordinal::HypE(lam, _) => {
                        lam.as_ref() >= &Ordinal::from_cnf_terms(vec![(g.clone(), 1)])
                    }
                    _ => false,
                };
            let mut fixed = true;
            let mut d = Ordinal::Zero;
            while d < g {
                let level = Ordinal::from_cnf_terms(vec![(d.clone(), 1)]);
                if hyper_exp(&level, x) != *x {
                    fixed = false;
                    break;
                }
                d = add(&d, &Ordinal::one());
            }
            assert_eq!(in_range, fixed, "range test for {x} at level {g}");
        }
    }
}

#[test]
fn fund_seq_examples() {
    for n in 0..5 {
        assert_eq!(fund_seq(&o("w"), n).unwrap(), Ordinal::nat(n));
    }
    let xi = o("w^2+w+1");
    for n in 0..3 {
        assert_eq!(fund_seq(&xi, n).unwrap(), o("w^2+w"));
    }
    // eps_0[3] = e^3(1) = w^w^w
    assert_eq!(fund_seq(&o("e[w](1)"), 3).unwrap(), o("w^w^w"));
    assert!(fund_seq(&o("0"), 1).is_err());
}

#[test]
fn fund_seq_is_increasing_and_below() {
    let limits = [
        o("w"),
        o("w*2"),
        o("w^2"),
        o("w^w"),
        o("w^(w+1)"),
        o("e[w](1)"),
        o("e[w](2)"),
        o("e[w](w)"),
        o("e[w^2](1)"),
        o("w^(e[w](1)+1)"),
    ];
    for xi in &limits {
        assert!(xi.is_limit());
        let mut prev = None;
        for n in 0..6 {
            let member = fund_seq(xi, n).unwrap();
            assert!(member < *xi, "{xi}[{n}] = {member}");
            if let Some(p) = prev {
                assert!(p < member, "{xi}[{}] vs {xi}[{n}]", n - 1);
            }
            prev = Some(member);
        }
    }
}

#[test]
fn fund_seq_is_cofinal_at_spot_checks() {
    // targets below each limit are eventually dominated
    let cases = [
        (o("w^w"), o("w^5*9+w^3")),
        (o("e[w](1)"), o("w^w^w^w")),
        (o("e[w](w)"), hyper_exp(&o("w"), &o("4"))),
    ];
    for (xi, target) in &cases {
        assert!(target < xi);
        let mut dominated = false;
        for n in 0..12 {
            if fund_seq(xi, n).unwrap() > *target {
                dominated = true;
                break;
            }
        }
        assert!(dominated, "{xi}[n] never passed {target}");
    }
}

#[test]
fn stabilization_examples() {
    let gamma = add(
        &hyper_exp(&Ordinal::omega(), &o("w*3")),
        &hyper_exp(&Ordinal::omega(), &o("w*2")),
    );
    let (lam, value) = stabilization(&o("w"), &gamma).unwrap();
    assert_eq!(value, hyper_exp(&Ordinal::omega(), &o("w*2")));
    assert!(lam >= o("1") && lam < o("w"));

    assert_eq!(
        stabilization(&o("w"), &o("0")).unwrap(),
        (Ordinal::Zero, Ordinal::Zero)
    );

    let (lam, value) = stabilization(&o("w^2"), &o("e[w](1)")).unwrap();
    assert_eq!(value, Ordinal::Zero);
    assert_eq!(lam, o("w+1"));

    assert!(stabilization(&o("w+1"), &o("w")).is_err());
}

#[test]
fn stabilization_witness_is_stable() {
    // oracle: iterate hyperlogarithms along a ladder of superscripts in
    // [witness, Lambda) and check they all equal the reported value
    let samples = [
        (o("w"), o("e[w](2)+w^w*3")),
        (o("w"), o("w^(w*2)+w^w")),
        (o("w^2"), o("e[w](w+1)")),
        (o("w^2"), o("e[w^2](1)+e[w](2)")),
        (o("w*2"), o("e[w](e[w](1))")),
    ];
    for (lambda, xi) in &samples {
        let (witness, value) = stabilization(lambda, xi).unwrap();
        assert!(witness < *lambda);
        assert_eq!(hyper_log(&witness, xi), value);
        // a few strictly larger superscripts below lambda
        let mut probe = add(&witness, &Ordinal::one());
        for _ in 0..3 {
            if probe >= *lambda {
                break;
            }
            assert_eq!(hyper_log(&probe, xi), value, "l[{probe}] {xi}");
            probe = add(&probe, &Ordinal::one());
        }
        if let Ok(mid) = fund_seq(lambda, 4) {
            if mid > witness {
                assert_eq!(hyper_log(&mid, xi), value);
            }
        }
    }
}
