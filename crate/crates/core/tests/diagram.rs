use proptest::prelude::*;
use skeinlab::chebyshev::{cheb_s, PolyZ};
use skeinlab::diagram::{
    builtin, classify_component, from_json, thread_polynomial, to_json, Builtin, Diagram, Smoothing, BUILTIN_NAMES,
};
use skeinlab::rings::{lambda_k, LaurentInt, Poly, SkeinPoly};

fn d(name: &str) -> Diagram {
    match builtin(name).unwrap() {
        Builtin::Diagram(d) => d,
        _ => panic!("{name} is not a diagram"),
    }
}

fn diagrams() -> Vec<&'static str> {
    BUILTIN_NAMES.iter().copied().filter(|n| matches!(builtin(n), Ok(Builtin::Diagram(_)))).collect()
}

/// Bracket by smoothing crossings one at a time with geometric surgery.
fn bracket_by_surgery(d: &Diagram) -> SkeinPoly<LaurentInt> {
    if d.crossing_count() == 0 {
        let mut acc = SkeinPoly::one(2);
        for s in d.strands() {
            let mask = classify_component(s, d.disk()).unwrap();
            let factor = if mask == 0 { SkeinPoly::constant(2, lambda_k(0)) } else { SkeinPoly::generator(2, mask) };
            acc = acc * factor;
        }
        return acc;
    }
    let a = bracket_by_surgery(&d.smooth_crossing(0, Smoothing::A).unwrap());
    let b = bracket_by_surgery(&d.smooth_crossing(0, Smoothing::B).unwrap());
    a.scale(&LaurentInt::t(1)) + b.scale(&LaurentInt::t(-1))
}

#[test]
fn state_sum_matches_recursive_surgery() {
    for name in diagrams() {
        let base = d(name);
        let top = if base.crossing_count() <= 1 { 2 } else { 1 };
        for j in 1..=top {
            let c = base.cable(&vec![j; base.component_count()]).unwrap();
            assert_eq!(c.evaluate().unwrap(), bracket_by_surgery(&c), "{name}^({j})");
        }
    }
}

#[test]
fn gamma_resolves_to_both_smoothings() {
    let mut expected = SkeinPoly::x1() * SkeinPoly::x2();
    expected = expected.scale(&LaurentInt::t(1)) + SkeinPoly::y().scale(&LaurentInt::t(-1));
    assert_eq!(d("gamma").evaluate().unwrap(), expected);
    assert_eq!(d("gamma_bar").evaluate().unwrap(), expected.invert_t());
}

#[test]
fn json_round_trip_preserves_diagrams() {
    for name in diagrams() {
        let base = d(name);
        let text = to_json(&base);
        let back = from_json(&text).unwrap();
        assert_eq!(to_json(&back), text, "{name}");
        assert_eq!(back.evaluate().unwrap(), base.evaluate().unwrap(), "{name}");
    }
}

#[test]
fn mirror_inverts_t() {
    for name in diagrams() {
        let base = d(name);
        assert_eq!(base.mirror().evaluate().unwrap(), base.evaluate().unwrap().invert_t(), "{name}");
    }
}

#[test]
fn state_cap_is_enforced() {
    let c = d("gamma").cable(&[5]).unwrap();
    assert!(c.evaluate_with(1 << 10).is_err());
}

fn small_poly() -> impl Strategy<Value = PolyZ> {
    prop::collection::vec(-3i64..=3, 0..4).prop_map(|cs| Poly::new(cs.into_iter().map(LaurentInt::constant).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn threading_separated_components_is_substitution(p in small_poly(), q in small_poly()) {
        let got = thread_polynomial(&d("x1x2"), &[p.clone(), q.clone()]).unwrap();
        let want = SkeinPoly::apply_poly(&p, &SkeinPoly::x1()) * SkeinPoly::apply_poly(&q, &SkeinPoly::x2());
        prop_assert_eq!(got, want);
    }

    #[test]
    fn cabling_a_crossingless_curve_is_a_power(j in 0usize..5) {
        let c = d("y").cable(&[j]).unwrap();
        let mut want = SkeinPoly::one(2);
        for _ in 0..j {
            want = want * SkeinPoly::y();
        }
        prop_assert_eq!(c.evaluate().unwrap(), want);
    }

    #[test]
    fn second_kind_threading_sees_framing_as_a_scalar(k in 0i64..4) {
        let plain = thread_polynomial(&d("unknot"), &[cheb_s(k)]).unwrap();
        let curled = thread_polynomial(&d("curl"), &[cheb_s(k)]).unwrap();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(curled, plain.scale(&LaurentInt::mono(sign, k * k + 2 * k)));
    }
}
