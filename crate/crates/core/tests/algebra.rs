use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use skeinlab::annulus::{commutator_closed_form, commutator_generic, core_bullet_left, core_bullet_right, AioElt};
use skeinlab::chebyshev::{cheb_s, cheb_t, to_t_basis, PolyZ};
use skeinlab::rings::{lambda_k, LaurentInt, Poly};
use skeinlab::tl::{encircle, tl_mul, Matching, TLElement};

fn float_eval(p: &Poly<BigInt>, x: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap())
}

fn laurent() -> impl Strategy<Value = LaurentInt> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..4).prop_map(LaurentInt::from_terms)
}

fn poly_z() -> impl Strategy<Value = PolyZ> {
    prop::collection::vec(laurent(), 0..5).prop_map(Poly::new)
}

fn aio() -> impl Strategy<Value = AioElt<LaurentInt>> {
    prop::collection::vec((-4i64..=4, laurent()), 0..4).prop_map(|ts| {
        let mut x = AioElt::zero();
        for (k, c) in ts {
            x.add_term(k, c);
        }
        x
    })
}

#[test]
fn chebyshev_first_kind_matches_cosines() {
    for n in 0..=20u32 {
        let p = cheb_t::<BigInt>(n);
        for i in 1..10 {
            let th = i as f64 * 0.3;
            let want = 2.0 * (n as f64 * th).cos();
            assert!((float_eval(&p, 2.0 * th.cos()) - want).abs() < 1e-6, "T_{n}");
        }
    }
}

#[test]
fn chebyshev_second_kind_matches_sine_ratio() {
    for n in 0..=20i64 {
        let p = cheb_s::<BigInt>(n);
        for i in 1..10 {
            let th = i as f64 * 0.3;
            let want = ((n + 1) as f64 * th).sin() / th.sin();
            assert!((float_eval(&p, 2.0 * th.cos()) - want).abs() < 1e-6, "S_{n}");
        }
    }
}

#[test]
fn chebyshev_product_rule() {
    for m in 0..=10u32 {
        for n in 0..=m {
            let lhs = cheb_t::<BigInt>(m) * cheb_t::<BigInt>(n);
            assert_eq!(lhs, cheb_t::<BigInt>(m + n) + cheb_t::<BigInt>(m - n), "T_{m} T_{n}");
        }
    }
}

fn catalan(k: usize) -> usize {
    (0..k).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

#[test]
fn matchings_are_counted_by_catalan_numbers() {
    for k in 0..=9 {
        let all = Matching::enumerate(k);
        assert_eq!(all.len(), catalan(k), "k = {k}");
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn encircled_single_strand() {
    let e = encircle(1);
    assert_eq!(e, TLElement::identity(1).scale(&lambda_k(1)));
}

#[test]
fn encircle_is_mirror_symmetric() {
    for k in 1..=5 {
        let e = encircle(k);
        assert_eq!(e.mirror(), e, "k = {k}");
    }
}

proptest! {
    #[test]
    fn t_basis_round_trip(coeffs in prop::collection::vec(-9i64..=9, 0..12)) {
        let p = Poly::<BigInt>::from_ints(&coeffs);
        prop_assert_eq!(to_t_basis(&p).expand(), p);
    }

    #[test]
    fn tl_multiplication_is_associative(k in 1usize..=5, i in 0usize..42, j in 0usize..42, l in 0usize..42) {
        let basis = Matching::enumerate(k);
        let pick = |n: usize| TLElement::basis(basis[n % basis.len()].clone());
        let (a, b, c) = (pick(i), pick(j), pick(l));
        let left = tl_mul(&tl_mul(&a, &b).unwrap(), &c).unwrap();
        let right = tl_mul(&a, &tl_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tl_identity_is_neutral(k in 0usize..=6, i in 0usize..132) {
        let basis = Matching::enumerate(k);
        let a = TLElement::basis(basis[i % basis.len()].clone());
        let id = TLElement::identity(k);
        prop_assert_eq!(tl_mul(&id, &a).unwrap(), a.clone());
        prop_assert_eq!(tl_mul(&a, &id).unwrap(), a);
    }

    #[test]
    fn core_actions_are_module_actions(p in poly_z(), q in poly_z(), x in aio()) {
        let pq = p.clone() * q.clone();
        prop_assert_eq!(core_bullet_left(&pq, &x), core_bullet_left(&p, &core_bullet_left(&q, &x)));
        prop_assert_eq!(core_bullet_right(&x, &pq), core_bullet_right(&core_bullet_right(&x, &p), &q));
        prop_assert_eq!(
            core_bullet_left(&p, &core_bullet_right(&x, &q)),
            core_bullet_right(&core_bullet_left(&p, &x), &q)
        );
    }

    #[test]
    fn commutator_closed_form_agrees(p in poly_z()) {
        prop_assert_eq!(commutator_generic(&p), commutator_closed_form(&p));
    }
}
