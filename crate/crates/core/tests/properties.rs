use num_bigint::BigInt;
use proptest::prelude::*;
use quadwalk::series::{rat, LaurentPoly, LaurentSeries, Rational, Series, UnivariateSeries, Var};
use quadwalk::walks::{count_walks, verify_functional_equation, StepModel};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn univariate() -> impl Strategy<Value = UnivariateSeries> {
    (-2i64..=2, prop::collection::vec(rational(), 1..8), 6i64..12)
        .prop_map(|(start, coeffs, order)| Series::new(start, coeffs, order))
}

fn laurent_poly() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(rational(), 0..5)).prop_map(|(lo, c)| LaurentPoly::new(Var::X, lo, c))
}

fn laurent_series() -> impl Strategy<Value = LaurentSeries> {
    (-1i64..=1, prop::collection::vec(laurent_poly(), 1..5), 4i64..8)
        .prop_map(|(start, coeffs, order)| Series::new(start, coeffs, order))
}

fn unit() -> impl Strategy<Value = UnivariateSeries> {
    // constant term 1, as the square root requires
    (prop::collection::vec(rational(), 0..6), 6i64..10).prop_map(|(mut rest, order)| {
        rest.insert(0, rat(1, 1));
        Series::new(0, rest, order)
    })
}

fn small_model() -> impl Strategy<Value = StepModel> {
    prop::collection::vec((-1i64..=1, -1i64..=1, 1u32..=3), 1..6).prop_filter_map("needs a step", |steps| {
        let steps: Vec<_> = steps.into_iter().filter(|(a, b, _)| (*a, *b) != (0, 0)).map(|(a, b, m)| ((a, b), m)).collect();
        StepModel::new("random", steps).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in univariate(), b in univariate(), c in univariate()) {
        prop_assert!(a.mul(&b).eq_to_order(&b.mul(&a)));
        prop_assert!(a.mul(&b).mul(&c).eq_to_order(&a.mul(&b.mul(&c))));
        prop_assert!(a.mul(&b.add(&c)).eq_to_order(&a.mul(&b).add(&a.mul(&c))));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn inverse_and_sqrt(u in unit()) {
        let inv = u.inverse().unwrap();
        prop_assert!(u.mul(&inv).eq_to_order(&Series::one().truncate(u.order())));
        let r = u.sqrt().unwrap();
        prop_assert!(r.mul(&r).eq_to_order(&u));
    }

    #[test]
    fn laurent_text_and_json_round_trip(s in laurent_series()) {
        prop_assert_eq!(LaurentSeries::from_text(&s.to_text()).unwrap(), s.clone());
        prop_assert_eq!(LaurentSeries::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn reflection_is_an_involution(s in laurent_series()) {
        prop_assert_eq!(s.reflect().reflect(), s.clone());
        prop_assert!(s.mul(&s).reflect().eq_to_order(&s.reflect().mul(&s.reflect())));
    }

    #[test]
    fn counts_satisfy_the_kernel_equation(m in small_model()) {
        let t = count_walks(&m, 7);
        prop_assert!(verify_functional_equation(&t).pass);
        let total: BigInt = t.totals()[7].clone();
        prop_assert!(total <= BigInt::from(m.num_steps()).pow(7));
    }

    #[test]
    fn transposed_model_transposes_counts(m in small_model()) {
        let a = count_walks(&m, 6);
        let b = count_walks(&m.transpose(), 6);
        for (n, i, j, c) in a.nonzero() {
            prop_assert_eq!(b.get(n, j, i), c);
        }
    }
}
