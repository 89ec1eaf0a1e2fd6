//! Suites that need no diagrams: centrality, skew-transparency, Temperley-Lieb
//! encircling, the marked annuli, and root-of-unity arithmetic.

use std::time::Instant;

use num_traits::One;

use super::{Config, Recorder};
use crate::annulus::{
    commutator_closed_form, commutator_generic, core_bullet_left, core_bullet_right, is_central, psi, psi_closed_form,
    skew_closed_form, skew_test, u_k, u_recursion_rhs, v_k, v_recursion_rhs, AioElt,
};
use crate::chebyshev::{cheb_t, is_in_c_tn, PolyZ};
use crate::rings::{lambda_k, lambda_k_at, order_of_power, CycNum, LaurentInt, RootSpec};
use crate::tl::{encircle, tl_mul, Matching, TLElement};

fn t_poly(j: u32) -> PolyZ {
    cheb_t::<LaurentInt>(j)
}

fn z_pow(j: usize) -> PolyZ {
    PolyZ::mono(LaurentInt::one(), j)
}

pub(super) fn theorem1(cfg: &Config, rec: &mut Recorder<'_>) {
    let n_max = cfg.n_max.unwrap_or(24);
    rec.param("n_max", n_max);
    let started = Instant::now();
    let mut bad = Vec::new();
    let mut checked = 0usize;
    for xi in cfg.roots(n_max) {
        let big_n = order_of_power(xi, 2) as u32;
        let mut tests: Vec<(String, PolyZ)> = Vec::new();
        for j in 0..=2 * big_n {
            tests.push((format!("T_{j}"), t_poly(j)));
            tests.push((format!("z^{j}"), z_pow(j as usize)));
        }
        tests.push((format!("T_{big_n}^2"), t_poly(big_n) * t_poly(big_n)));
        tests.push((format!("T_{big_n}+T_{}", 2 * big_n), t_poly(big_n) + t_poly(2 * big_n)));
        tests.push((format!("T_{}", big_n + 1), t_poly(big_n + 1)));
        for (name, p) in tests {
            let (central, _) = is_central(&p, xi);
            let expected = p.degree().unwrap_or(0) == 0 || is_in_c_tn(&p, big_n);
            checked += 1;
            if central != expected {
                bad.push(format!("xi={xi} N={big_n} p={name} central={central}"));
            }
        }
    }
    rec.note(
        "centrality.equivalence",
        "p(z) • e = e • p(z) at t = xi  <=>  p constant or p in C[T_N], N = ord(xi^2)",
        format!("n <= {n_max}"),
        bad,
        format!("{checked} (xi, p) pairs"),
        started,
    );
    for j in 0..=12usize {
        for (name, p) in [(format!("z^{j}"), z_pow(j)), (format!("T_{j}"), t_poly(j as u32))] {
            let started = Instant::now();
            let res = commutator_generic(&p).sub(&commutator_closed_form(&p));
            rec.zero(
                "centrality.commutator",
                "p • e - e • p = sum_j c_j (t^j - t^-j)(u^j - u^-j)",
                format!("p = {name}"),
                res,
                started,
            );
        }
    }
}

pub(super) fn skew(cfg: &Config, rec: &mut Recorder<'_>) {
    let n_max = cfg.n_max.unwrap_or(24);
    let k_max = cfg.big_n_max.unwrap_or(6);
    rec.param("n_max", n_max);
    rec.param("N_max", k_max);
    let started = Instant::now();
    let (mut bad_iff, mut bad_form) = (Vec::new(), Vec::new());
    let minus_one = -CycNum::one();
    for xi in cfg.roots(n_max) {
        for big_n in 1..=k_max {
            let s = skew_test(big_n, xi);
            let skew = xi.power(2 * big_n as i64) == minus_one;
            if s.is_zero() != skew {
                bad_iff.push(format!("xi={xi} N={big_n}"));
            }
            if s != skew_closed_form(big_n, xi) {
                bad_form.push(format!("xi={xi} N={big_n}"));
            }
        }
    }
    rec.none_of(
        "skew.vanishing",
        "T_N • e + e • T_N = 0 at t = xi  <=>  xi^2N = -1",
        format!("n <= {n_max}, N <= {k_max}"),
        bad_iff,
        started,
    );
    rec.none_of(
        "skew.closed_form",
        "T_N • e + e • T_N = (xi^N + xi^-N)(u^N + u^-N)",
        format!("n <= {n_max}, N <= {k_max}"),
        bad_form,
        started,
    );
}

fn tl_sub(a: &TLElement, b: &TLElement) -> TLElement {
    a.add(&b.scale(&-LaurentInt::one()))
}

pub(super) fn tl(cfg: &Config, rec: &mut Recorder<'_>) {
    let ks = cfg.ks(1, 6);
    rec.param("k", ks.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
    for &k in &ks {
        let started = Instant::now();
        let e = encircle(k as usize);
        let id = Matching::identity(k as usize);
        let res = e.coeff(&id) - lambda_k(k);
        rec.zero("tl.encircle_top", "coeff(encircle(k), identity) = lambda_k", format!("k = {k}"), res, started);
        let started = Instant::now();
        let bad: Vec<String> = e
            .terms()
            .filter(|(m, _)| **m != id && m.through_strands() >= k as usize)
            .map(|(m, _)| m.to_string())
            .collect();
        rec.none_of(
            "tl.encircle_lower",
            "every other matching in encircle(k) has fewer than k through-strands",
            format!("k = {k}"),
            bad,
            started,
        );
        let started = Instant::now();
        rec.zero(
            "tl.encircle_mirror",
            "encircle(k) is invariant under the left-right mirror",
            format!("k = {k}"),
            tl_sub(&e.mirror(), &e),
            started,
        );
    }
    let started = Instant::now();
    let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
    let bad: Vec<String> = (0..=8)
        .filter(|&k| Matching::enumerate(k).len() != catalan[k])
        .map(|k| format!("k={k}: {}", Matching::enumerate(k).len()))
        .collect();
    rec.none_of("tl.dimension", "number of matchings of 2k points = Catalan(k)", "k <= 8".into(), bad, started);
    for k in 1..=4usize {
        let started = Instant::now();
        let basis = Matching::enumerate(k);
        let mut bad = Vec::new();
        for a in &basis {
            for b in &basis {
                let ab = tl_mul(&TLElement::basis(a.clone()), &TLElement::basis(b.clone())).expect("same k");
                for c in &basis {
                    let cc = TLElement::basis(c.clone());
                    let left = tl_mul(&ab, &cc).expect("same k");
                    let bc = tl_mul(&TLElement::basis(b.clone()), &cc).expect("same k");
                    let right = tl_mul(&TLElement::basis(a.clone()), &bc).expect("same k");
                    if left != right {
                        bad.push(format!("{a}*{b}*{c}"));
                    }
                }
            }
        }
        rec.none_of("tl.associativity", "(ab)c = a(bc) on basis triples", format!("k = {k}"), bad, started);
    }
}

pub(super) fn annulus(cfg: &Config, rec: &mut Recorder<'_>) {
    let k_max = cfg.k_max.unwrap_or(15);
    rec.param("k_max", k_max);
    let e = AioElt::<LaurentInt>::e();
    for j in 0..=k_max {
        let started = Instant::now();
        let p = t_poly(j);
        let (a, b) = (LaurentInt::t(j as i64), LaurentInt::t(-(j as i64)));
        let pair = |x: &LaurentInt, y: &LaurentInt| {
            let mut r = AioElt::mono(x.clone(), j as i64);
            r.add_term(-(j as i64), y.clone());
            r
        };
        let left = core_bullet_left(&p, &e).sub(&pair(&a, &b));
        let right = core_bullet_right(&e, &p).sub(&pair(&b, &a));
        rec.zero("annulus.core_left", "T_j(z) • e = t^j u^j + t^-j u^-j", format!("j = {j}"), left, started);
        rec.zero("annulus.core_right", "e • T_j(z) = t^-j u^j + t^j u^-j", format!("j = {j}"), right, started);
    }
    let started = Instant::now();
    let x = AioElt::mono(LaurentInt::from_terms([(1, 2), (-3, -1)]), 2).add(&AioElt::mono(LaurentInt::constant(5), -1));
    let z = PolyZ::z();
    let lr = core_bullet_right(&core_bullet_left(&z, &x), &z).sub(&core_bullet_left(&z, &core_bullet_right(&x, &z)));
    rec.zero("annulus.actions_commute", "(z • x) • z = z • (x • z)", format!("x = {x}"), lr, started);
    for k in 1..=k_max {
        let started = Instant::now();
        let res = psi(&t_poly(k)).expect("no constant term").sub(&psi_closed_form(k));
        rec.zero(
            "annulus.psi",
            "-t^(k+3) u_k + t^-k v_k = u1[t^2(t^-2k - t^2k)S_(k-1)] + u0[t^-2k S_k - t^2k S_(k-2)]",
            format!("k = {k}"),
            res,
            started,
        );
    }
    let started = Instant::now();
    let diff = u_k(2).expect("k >= 1").sub(&u_recursion_rhs(2));
    let bad = if diff.is_zero() { vec!["the recursion holds at k = 2".to_string()] } else { vec![] };
    rec.note(
        "annulus.u_recursion_fails",
        "u_2 != t u_1 z - t^2 u_0",
        "k = 2".into(),
        bad,
        format!("u_2 - (t u_1 z - t^2 u_0) = {diff}"),
        started,
    );
    for k in 3..=k_max {
        let started = Instant::now();
        let res = u_k(k).expect("k >= 1").sub(&u_recursion_rhs(k));
        rec.zero("annulus.u_recursion", "u_k = t u_(k-1) z - t^2 u_(k-2)", format!("k = {k}"), res, started);
    }
    for k in 2..=k_max {
        let started = Instant::now();
        let res = v_k(k).sub(&v_recursion_rhs(k));
        rec.zero("annulus.v_recursion", "v_k = t^-1 v_(k-1) z - t^-2 v_(k-2)", format!("k = {k}"), res, started);
    }
}

/// `N = ord(xi^4)`.
fn big_n(xi: RootSpec) -> u64 {
    order_of_power(xi, 4)
}

pub(super) fn lemma62(cfg: &Config, rec: &mut Recorder<'_>) {
    let n_max = cfg.n_max.unwrap_or(48);
    rec.param("n_max", n_max);
    let roots = cfg.roots(n_max);
    let minus_one = -CycNum::one();
    let params = format!("n <= {n_max}, 1 <= k <= N-1");

    let started = Instant::now();
    let mut bad = Vec::new();
    for &xi in &roots {
        let n = big_n(xi) as u32;
        let l0 = lambda_k_at(0, xi);
        for k in 1..n {
            if (lambda_k_at(2 * k, xi) == l0) != (k == n - 1) {
                bad.push(format!("xi={xi} k={k}"));
            }
        }
    }
    rec.none_of("roots.lambda_2k", "lambda_2k = lambda_0  <=>  k = N - 1", params.clone(), bad, started);

    let started = Instant::now();
    let mut bad = Vec::new();
    for &xi in &roots {
        let n = big_n(xi) as u32;
        let rhs = xi.power(2 * n as i64) * lambda_k_at(0, xi);
        for k in 1..n {
            if lambda_k_at(k, xi) == rhs && k + 2 != n {
                bad.push(format!("xi={xi} k={k}"));
            }
        }
    }
    rec.none_of("roots.lambda_k", "lambda_k = xi^2N lambda_0  =>  k = N - 2", params, bad, started);

    let started = Instant::now();
    let bad: Vec<String> = roots
        .iter()
        .filter(|&&xi| big_n(xi).is_multiple_of(2) && xi.power(2 * big_n(xi) as i64) != minus_one)
        .map(|xi| format!("xi={xi}"))
        .collect();
    rec.none_of("roots.even_order", "N even  =>  xi^2N = -1", format!("n <= {n_max}"), bad, started);

    let started = Instant::now();
    let bad: Vec<String> = roots
        .iter()
        .filter(|&&xi| {
            let n = big_n(xi) as i64;
            let sign = if n % 2 == 1 { CycNum::one() } else { minus_one.clone() };
            xi.power(2 * n * n + 2 * n) != sign
        })
        .map(|xi| format!("xi={xi}"))
        .collect();
    rec.none_of("roots.sign", "xi^(2N^2 + 2N) = (-1)^(N+1)", format!("n <= {n_max}"), bad, started);
}
