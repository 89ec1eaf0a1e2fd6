use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;
use skeinlab::rings::{cyclotomic_polynomial, lambda_k, lambda_k_at, specialize, CycNum, LaurentInt, Ring, RootSpec};

fn laurent() -> impl Strategy<Value = LaurentInt> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..6).prop_map(LaurentInt::from_terms)
}

fn root() -> impl Strategy<Value = RootSpec> {
    (1u32..=30, 0i64..30).prop_map(|(n, a)| RootSpec::new(n, a).unwrap())
}

fn numeric(p: &LaurentInt, xi: RootSpec) -> Complex64 {
    let w = Complex64::from_polar(1.0, std::f64::consts::TAU * xi.exponent() as f64 / xi.level() as f64);
    p.terms().map(|(k, c)| w.powi(k as i32) * c.to_f64().unwrap()).sum()
}

fn numeric_cyc(c: &CycNum) -> Complex64 {
    let w = Complex64::from_polar(1.0, std::f64::consts::TAU / c.level() as f64);
    c.representative().iter().enumerate().map(|(i, r)| w.powi(i as i32) * r.to_f64().unwrap()).sum()
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.invert_t().invert_t(), a.clone());
        prop_assert_eq!((&a * &b).invert_t(), &a.invert_t() * &b.invert_t());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn specialization_is_a_ring_map(a in laurent(), b in laurent(), xi in root()) {
        prop_assert_eq!(specialize(&(&a * &b), xi), specialize(&a, xi) * specialize(&b, xi));
        prop_assert_eq!(specialize(&(&a + &b), xi), specialize(&a, xi) + specialize(&b, xi));
    }

    #[test]
    fn specialization_matches_complex_evaluation(a in laurent(), xi in root()) {
        let exact = numeric_cyc(&specialize(&a, xi));
        let float = numeric(&a, xi);
        prop_assert!((exact - float).norm() < 1e-8, "{} vs {}", exact, float);
    }

    #[test]
    fn zero_test_agrees_with_complex_evaluation(a in laurent(), xi in root()) {
        let vanishes = specialize(&a, xi).is_zero();
        prop_assert_eq!(vanishes, numeric(&a, xi).norm() < 1e-6);
    }

    #[test]
    fn lambda_at_root_is_specialized_lambda(k in 0u32..12, xi in root()) {
        prop_assert_eq!(lambda_k_at(k, xi), specialize(&lambda_k(k), xi));
    }
}

#[test]
fn cyclotomic_polynomials_divide_x_to_n_minus_one() {
    // x^n - 1 = prod over d | n of Phi_d
    for n in 1..=40u32 {
        let mut prod = vec![BigInt::one()];
        for d in (1..=n).filter(|d| n % d == 0) {
            let phi = cyclotomic_polynomial(d);
            let mut next = vec![BigInt::zero(); prod.len() + phi.len() - 1];
            for (i, a) in prod.iter().enumerate() {
                for (j, b) in phi.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            prod = next;
        }
        let mut expected = vec![BigInt::zero(); n as usize + 1];
        expected[0] = BigInt::from(-1);
        expected[n as usize] = BigInt::one();
        assert_eq!(prod, expected, "n = {n}");
    }
}

#[test]
fn root_powers_have_the_right_order() {
    for n in 1..=24u32 {
        for a in 0..n as i64 {
            let xi = RootSpec::new(n, a).unwrap();
            let ord = xi.order();
            assert!(xi.power(ord as i64).is_one());
            for m in 1..ord {
                assert!(!xi.power(m as i64).is_one(), "{xi}^{m}");
            }
        }
    }
}

#[test]
fn unknot_value() {
    assert_eq!(lambda_k(0), -(LaurentInt::t(2) + LaurentInt::t(-2)));
    assert_eq!(LaurentInt::from_int(3).pow(2), LaurentInt::constant(9));
}
