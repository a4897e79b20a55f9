use proptest::prelude::*;
use qsl2::qarith::{q_binom, q_fact, q_int, ratio, rational, LaurentPoly, Rational};

fn lp(t: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_int_terms(t)
}

/// Independent oracle: `[n]` at a rational point from the closed form
/// `(x^n - x^-n) / (x - x^-1)`, valid for `x != +-1`.
fn q_int_at(n: i64, x: &Rational) -> Rational {
    let pow = |e: i64| -> Rational {
        let b = if e < 0 { x.recip() } else { x.clone() };
        (0..e.abs()).fold(rational(1), |acc, _| acc * &b)
    };
    (pow(n) - pow(-n)) / (x - x.recip())
}

fn binomial(n: i64, k: i64) -> Rational {
    (0..k).fold(rational(1), |acc, i| {
        acc * rational(n - i) / rational(i + 1)
    })
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -9i64..=9, 1i64..=4), 0..5).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(e, n, d)| (e, ratio(n, d))))
    })
}

#[test]
fn q_int_closed_form() {
    let v_minus = lp(&[(1, 1), (-1, -1)]);
    for n in 1..=12 {
        assert_eq!(&q_int(n) * &v_minus, lp(&[(n, 1), (-n, -1)]), "n = {n}");
        assert_eq!(q_int(-n), -q_int(n));
    }
}

#[test]
fn q_values_match_rational_point_oracle() {
    for x in [rational(2), ratio(-1, 3)] {
        for n in 0..=10 {
            assert_eq!(q_int(n).eval(&x).unwrap(), q_int_at(n, &x), "[{n}] at {x}");
            let fact = (1..=n).fold(rational(1), |acc, k| acc * q_int_at(k, &x));
            assert_eq!(q_fact(n).unwrap().eval(&x).unwrap(), fact);
            for k in 0..=n {
                let expect = fact.clone()
                    / ((1..=k).fold(rational(1), |a, j| a * q_int_at(j, &x))
                        * (1..=n - k).fold(rational(1), |a, j| a * q_int_at(j, &x)));
                assert_eq!(q_binom(n, k).unwrap().eval(&x).unwrap(), expect);
            }
        }
    }
}

#[test]
fn classical_limits() {
    let mut fact = rational(1);
    for n in 0..=12 {
        if n > 0 {
            fact *= rational(n);
        }
        assert_eq!(q_int(n).specialize_one(), rational(n));
        assert_eq!(q_fact(n).unwrap().specialize_one(), fact);
        for k in 0..=n {
            assert_eq!(
                q_binom(n, k).unwrap().specialize_one(),
                binomial(n, k),
                "({n} {k})"
            );
        }
    }
}

#[test]
fn q_pascal() {
    for n in 2..=12 {
        for k in 1..n {
            let lhs = q_binom(n, k).unwrap();
            let rhs =
                &q_binom(n - 1, k).unwrap().shift(k) + &q_binom(n - 1, k - 1).unwrap().shift(k - n);
            assert_eq!(lhs, rhs, "({n} {k})");
        }
    }
}

#[test]
fn bar_symmetry() {
    for n in -12..=12 {
        assert_eq!(q_int(n).bar(), q_int(n));
    }
    for n in 0..=12 {
        assert_eq!(q_fact(n).unwrap().bar(), q_fact(n).unwrap());
        for k in -1..=n + 1 {
            let b = q_binom(n, k).unwrap();
            assert_eq!(b.bar(), b);
        }
    }
}

#[test]
fn q_binom_outside_range_is_zero() {
    assert!(q_binom(5, 6).unwrap().is_zero());
    assert!(q_binom(5, -2).unwrap().is_zero());
    assert!(q_fact(-3).is_err());
}

proptest! {
    #[test]
    fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn canonical_form_has_no_zero_terms(a in arb_poly(), b in arb_poly()) {
        let s = &(&a * &b) - &(&b * &a);
        prop_assert_eq!(s.num_terms(), 0);
        for (_, c) in (&a + &b).terms() {
            prop_assert!(*c != rational(0));
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn specialization_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!((&a * &b).specialize_one(), a.specialize_one() * b.specialize_one());
        prop_assert_eq!((&a + &b).specialize_one(), a.specialize_one() + b.specialize_one());
    }

    #[test]
    fn gcd_divides_both(a in arb_poly(), b in arb_poly(), f in arb_poly()) {
        prop_assume!(!f.is_zero() && !(a.is_zero() && b.is_zero()));
        let (x, y) = (&a * &f, &b * &f);
        let g = x.gcd(&y);
        prop_assert!(x.div_exact(&g).is_ok());
        prop_assert!(y.div_exact(&g).is_ok());
        prop_assert!(g.div_exact(&f.normalize_unit()).is_ok());
    }
}
