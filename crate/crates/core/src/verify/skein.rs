//! Suites built on diagram evaluation in the twice-punctured disk.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::One;

use super::{Config, Recorder, Residual};
use crate::chebyshev::{cheb_s, cheb_t, PolyZ};
use crate::diagram::{arc, diagram, thread_then, Diagram, DiagramError, Smoothing};
use crate::rings::{
    lambda_k, order_of_power, specialize, specialize_skein, CycNum, Degrees, LaurentInt, Monomial, RootSpec, SkeinPoly,
};

type Skein = SkeinPoly<LaurentInt>;
type SkeinXi = SkeinPoly<CycNum>;

fn t_poly(n: u32) -> PolyZ {
    cheb_t::<LaurentInt>(n)
}

/// `p` threaded through every component of `d`, then `op`, then evaluated.
fn thread_op(
    d: &Diagram,
    p: &PolyZ,
    op: impl Fn(Diagram) -> Result<Diagram, DiagramError>,
    cfg: &Config,
) -> Result<Skein, DiagramError> {
    thread_then(d, &vec![p.clone(); d.component_count()], op, cfg.max_states)
}

fn thread(d: &Diagram, p: &PolyZ, cfg: &Config) -> Result<Skein, DiagramError> {
    thread_op(d, p, Ok, cfg)
}

/// `T_N` of a crossing-free generator, computed in the algebra.
fn t_of_generator(n: u32, g: Skein) -> Skein {
    SkeinPoly::apply_poly(&t_poly(n), &g)
}

fn at(p: &Skein, xi: RootSpec) -> SkeinXi {
    specialize_skein(p, xi)
}

/// Roots of level `<= n_max` grouped by `N = ord(xi^4)`; a requested root
/// with `N` above the cap is returned separately.
type RootsByN = (BTreeMap<u32, Vec<RootSpec>>, Vec<(RootSpec, u32)>);

fn roots_by_n(cfg: &Config, n_max: u32, cap: u32) -> RootsByN {
    let mut groups: BTreeMap<u32, Vec<RootSpec>> = BTreeMap::new();
    let mut over = Vec::new();
    for xi in cfg.roots(n_max) {
        let n = order_of_power(xi, 4) as u32;
        if n <= cap {
            groups.entry(n).or_default().push(xi);
        } else if cfg.xi.is_some() {
            over.push((xi, n));
        }
    }
    (groups, over)
}

fn refuse_over_cap(rec: &mut Recorder<'_>, id: &str, identity: &str, over: &[(RootSpec, u32)], cap: u32) {
    for &(xi, n) in over {
        let started = Instant::now();
        let states = 1u128.checked_shl(n * n).map_or_else(|| format!("2^{}", n * n), |s| s.to_string());
        rec.finish(
            id,
            identity,
            format!("xi = {xi}, N = {n}"),
            super::Status::Refused,
            "n/a".into(),
            Some(format!("state space too large: the top cable has {states} states (2^{}); cap is N <= {cap}", n * n)),
            started,
        );
    }
}

fn root_list(roots: &[RootSpec]) -> String {
    if roots.len() == 1 {
        format!("xi = {}", roots[0])
    } else {
        format!("{} roots", roots.len())
    }
}

/// One check asserting `residual(xi) = 0` for each root; reports the first
/// non-zero residual.
fn zero_over_roots(
    rec: &mut Recorder<'_>,
    id: &str,
    identity: &str,
    params: String,
    roots: &[RootSpec],
    residual: impl Fn(RootSpec) -> SkeinXi,
    started: Instant,
) {
    let mut first: Option<SkeinXi> = None;
    let mut failing = Vec::new();
    for &xi in roots {
        let r = residual(xi);
        if !r.vanishes() {
            failing.push(format!("xi={xi}"));
            first.get_or_insert(r);
        }
    }
    let params = format!("{params}, {}", root_list(roots));
    match first {
        None => rec.zero(id, identity, params, SkeinPoly::<CycNum>::zero(2), started),
        Some(r) => {
            let detail = format!("fails at {}", failing.join(", "));
            rec.finish(id, identity, params, super::Status::Fail, r.to_string(), Some(detail), started);
        }
    }
}

pub(super) fn framing(cfg: &Config, rec: &mut Recorder<'_>) {
    let ks = cfg.ks(0, 4);
    rec.param("k", ks.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
    let unknot = diagram("unknot");
    let curl = diagram("curl");
    let gamma = diagram("gamma");
    let denom = LaurentInt::from_terms([(2, 1), (-2, -1)]);
    for &k in &ks {
        let sk = cheb_s::<LaurentInt>(k as i64);
        let sign = if k % 2 == 0 { LaurentInt::one() } else { -LaurentInt::one() };
        let e = 2 * k as i64 + 2;
        let numer = &sign * &LaurentInt::from_terms([(e, 1), (-e, -1)]);
        let started = Instant::now();
        let identity = "S_k(U) = (-1)^k (t^(2k+2) - t^(-2k-2)) / (t^2 - t^-2)";
        match (numer.div_exact(&denom), thread(&unknot, &sk, cfg)) {
            (Some(quot), Ok(v)) => {
                rec.zero("framing.unknot", identity, format!("k = {k}"), v - Skein::constant(2, quot), started)
            }
            (None, _) => rec.none_of(
                "framing.unknot",
                identity,
                format!("k = {k}"),
                vec!["numerator not divisible by t^2 - t^-2".into()],
                started,
            ),
            (_, Err(err)) => rec.error("framing.unknot", identity, format!("k = {k}"), &err, started),
        }

        let started = Instant::now();
        let identity = "L ⊔ S_k(U) = (-1)^k (t^(2k+2) - t^(-2k-2)) / (t^2 - t^-2) L";
        let res = gamma.disjoint_union(&unknot).and_then(|d| {
            let with = thread_then(&d, &[PolyZ::z(), sk.clone()], Ok, cfg.max_states)?;
            let alone = gamma.evaluate_with(cfg.max_states)?;
            let quot = numer.div_exact(&denom).expect("numerator divisible by t^2 - t^-2");
            Ok(with - alone.scale(&quot))
        });
        match res {
            Ok(r) => rec.zero("framing.unknot_beside", identity, format!("k = {k}, L = gamma"), r, started),
            Err(err) => rec.error("framing.unknot_beside", identity, format!("k = {k}, L = gamma"), &err, started),
        }

        let started = Instant::now();
        let identity = "S_k(curled K) = (-1)^k t^(k^2+2k) S_k(K)";
        let factor = &sign * &LaurentInt::t((k * k + 2 * k) as i64);
        let res = thread(&curl, &sk, cfg).and_then(|c| Ok(c - thread(&unknot, &sk, cfg)?.scale(&factor)));
        match res {
            Ok(r) => rec.zero("framing.curl", identity, format!("k = {k}"), r, started),
            Err(err) => rec.error("framing.curl", identity, format!("k = {k}"), &err, started),
        }
    }
}

/// Per-monomial degree bounds and parities against arc counts.
fn degree_violations(name: &str, d: &Diagram, v: &Skein) -> Result<Vec<String>, DiagramError> {
    let k1 = d.arc_count(&arc("alpha1"))? as u32;
    let k2 = d.arc_count(&arc("alpha2"))? as u32;
    let k3 = d.arc_count(&arc("alpha3"))? as u32;
    let mut bad = Vec::new();
    for (m, _) in v.terms() {
        let g = Degrees::of_monomial(m);
        if g.left > k1 || !(k1 - g.left).is_multiple_of(2) {
            bad.push(format!("{name}: deg_l {} vs {k1} crossings with alpha1", g.left));
        }
        if g.right > k2 || !(k2 - g.right).is_multiple_of(2) {
            bad.push(format!("{name}: deg_r {} vs {k2} crossings with alpha2", g.right));
        }
        if 2 * g.y > k3 {
            bad.push(format!("{name}: 2 deg_y {} vs {k3} crossings with alpha3", 2 * g.y));
        }
    }
    Ok(bad)
}

pub(super) fn degrees(cfg: &Config, rec: &mut Recorder<'_>) {
    let cap = cfg.big_n_max.unwrap_or(4);
    rec.param("N_max", cap);
    let started = Instant::now();
    let mut bad = Vec::new();
    let mut samples: Vec<(String, Diagram)> = ["gamma", "gamma_bar", "x1", "x2", "y", "x1x2", "clasp", "curl", "unknot"]
        .iter()
        .map(|n| (n.to_string(), diagram(n)))
        .collect();
    for (name, j) in [("gamma", 2), ("gamma", 3), ("gamma_bar", 2), ("y", 2), ("clasp", 2)] {
        let d = diagram(name);
        let mult = vec![j; d.component_count()];
        match d.cable(&mult) {
            Ok(c) => samples.push((format!("{name}^({j})"), c)),
            Err(err) => bad.push(format!("{name}^({j}): {err}")),
        }
    }
    for (name, d) in &samples {
        match d.evaluate_with(cfg.max_states).and_then(|v| degree_violations(name, d, &v)) {
            Ok(b) => bad.extend(b),
            Err(err) => bad.push(format!("{name}: {err}")),
        }
    }
    rec.none_of(
        "degrees.arc_bounds",
        "deg_l <= #(L ∩ alpha1), deg_r <= #(L ∩ alpha2), both with matching parity; 2 deg_y <= #(L ∩ alpha3)",
        format!("{} diagrams", samples.len()),
        bad,
        started,
    );

    for n in 1..=cap {
        for name in ["gamma", "gamma_bar"] {
            let started = Instant::now();
            let identity = "T_N(L) lies in V_N (deg_l, deg_r <= N, even double degree)";
            match thread(&diagram(name), &t_poly(n), cfg) {
                Ok(v) => {
                    let bad = if v.in_v_n(n) { vec![] } else { vec![format!("degrees {:?}", v.degrees())] };
                    rec.none_of("degrees.v_n", identity, format!("N = {n}, L = {name}"), bad, started);
                }
                Err(err) => rec.error("degrees.v_n", identity, format!("N = {n}, L = {name}"), &err, started),
            }
        }
    }

    let y = diagram("y");
    for k in 1..=4u32 {
        let started = Instant::now();
        let identity = "encircling y^k along alpha3: top coefficient lambda_2k, y-degree <= k";
        let res = y.cable(&[k as usize]).and_then(|c| c.attach_loop(&arc("alpha3"), false)?.evaluate_with(cfg.max_states));
        match res {
            Ok(v) => {
                let mut r = v.y_slice(k) - Skein::term(2, Monomial::x1x2y(0, 0, k), lambda_k(2 * k));
                for b in k + 1..=v.degrees().y {
                    r = r + v.y_slice(b);
                }
                rec.zero("degrees.filtration", identity, format!("k = {k}"), r, started);
            }
            Err(err) => rec.error("degrees.filtration", identity, format!("k = {k}"), &err, started),
        }
    }
}

pub(super) fn lemma68(cfg: &Config, rec: &mut Recorder<'_>) {
    let cap = cfg.big_n_max.unwrap_or(4);
    rec.param("N_max", cap);
    let gamma = diagram("gamma");
    let gamma_bar = diagram("gamma_bar");
    for n in 1..=cap {
        let started = Instant::now();
        let sq = (n * n) as i64;
        match thread(&gamma, &t_poly(n), cfg) {
            Ok(v) => {
                let y = v.coeff(&Monomial::x1x2y(0, 0, n)) - LaurentInt::t(-sq);
                let x = v.coeff(&Monomial::x1x2y(n, n, 0)) - LaurentInt::t(sq);
                rec.zero("extremal.y", "coeff(T_N(gamma), y^N) = t^(-N^2)", format!("N = {n}"), y, started);
                rec.zero("extremal.x1x2", "coeff(T_N(gamma), x1^N x2^N) = t^(N^2)", format!("N = {n}"), x, started);
                let started = Instant::now();
                match thread(&gamma_bar, &t_poly(n), cfg) {
                    Ok(b) => rec.zero(
                        "extremal.mirror",
                        "T_N(gamma_bar) = T_N(gamma) with t -> t^-1",
                        format!("N = {n}"),
                        b - v.invert_t(),
                        started,
                    ),
                    Err(err) => rec.error("extremal.mirror", "T_N(gamma_bar) mirror", format!("N = {n}"), &err, started),
                }
            }
            Err(err) => rec.error("extremal.y", "coeff(T_N(gamma), y^N) = t^(-N^2)", format!("N = {n}"), &err, started),
        }
    }
}

pub(super) fn prop61(cfg: &Config, rec: &mut Recorder<'_>) {
    let n_max = cfg.n_max.unwrap_or(16);
    let cap = cfg.big_n_max.unwrap_or(4);
    rec.param("n_max", n_max);
    rec.param("N_max", cap);
    let id_g = "T_N(gamma) = xi^(-N^2) T_N(y) + xi^(N^2) T_N(x1) T_N(x2)";
    let id_b = "T_N(gamma_bar) = xi^(N^2) T_N(y) + xi^(-N^2) T_N(x1) T_N(x2)";
    let (groups, over) = roots_by_n(cfg, n_max, cap);
    refuse_over_cap(rec, "threading.gamma", id_g, &over, cap);
    for (&n, roots) in &groups {
        let started = Instant::now();
        let ty = t_of_generator(n, Skein::y());
        let tx = t_of_generator(n, Skein::x1()) * t_of_generator(n, Skein::x2());
        let sq = (n * n) as i64;
        for (id, name, plus) in [("threading.gamma", "gamma", false), ("threading.gamma_bar", "gamma_bar", true)] {
            let identity = if plus { id_b } else { id_g };
            match thread(&diagram(name), &t_poly(n), cfg) {
                Ok(v) => {
                    let s = if plus { -sq } else { sq };
                    zero_over_roots(
                        rec,
                        id,
                        identity,
                        format!("N = {n}"),
                        roots,
                        |xi| at(&v, xi) - at(&ty, xi).scale(&xi.power(-s)) - at(&tx, xi).scale(&xi.power(s)),
                        started,
                    );
                    let started = Instant::now();
                    let bad = if v.in_v_n(n) { vec![] } else { vec![format!("degrees {:?}", v.degrees())] };
                    rec.none_of(&format!("{id}.v_n"), "T_N(L) lies in V_N", format!("N = {n}"), bad, started);
                }
                Err(err) => rec.error(id, identity, format!("N = {n}"), &err, started),
            }
        }
    }
}

/// An operator on threaded diagrams and its expected eigenvalue at `xi`.
struct Operator {
    name: &'static str,
    identity: &'static str,
    apply: fn(Diagram) -> Result<Diagram, DiagramError>,
    expected: fn(RootSpec, u32, &SkeinXi) -> SkeinXi,
}

fn mu(xi: RootSpec, n: u32) -> CycNum {
    xi.power(2 * n as i64)
}

fn lambda0(xi: RootSpec) -> CycNum {
    specialize(&lambda_k(0), xi)
}

fn operators() -> Vec<Operator> {
    vec![
        Operator {
            name: "phi0",
            identity: "Phi_alpha0(E) = lambda_0 E",
            apply: |d| d.attach_loop(&arc("alpha0"), false),
            expected: |xi, _, e| e.scale(&lambda0(xi)),
        },
        Operator {
            name: "phi1",
            identity: "Phi_alpha1(E) = xi^2N lambda_0 E",
            apply: |d| d.attach_loop(&arc("alpha1"), false),
            expected: |xi, n, e| e.scale(&(mu(xi, n) * lambda0(xi))),
        },
        Operator {
            name: "phi3",
            identity: "Phi_alpha3(E) = lambda_0 E",
            apply: |d| d.attach_loop(&arc("alpha3"), false),
            expected: |xi, _, e| e.scale(&lambda0(xi)),
        },
        Operator {
            name: "phi4",
            identity: "Phi_4(E) = xi^2N x1 E",
            apply: |d| d.attach_phi4(false),
            expected: |xi, n, e| (SkeinPoly::x1() * e.clone()).scale(&mu(xi, n)),
        },
        Operator {
            name: "sigma",
            identity: "half-turn(E) = E",
            apply: |d| Ok(d.rotate180()),
            expected: |_, _, e| e.clone(),
        },
    ]
}

/// The threaded elements on which the operators act by scalars.
fn eigen_elements() -> Vec<(&'static str, &'static str)> {
    vec![("T_N(gamma)", "gamma"), ("T_N(gamma_bar)", "gamma_bar"), ("T_N(y)", "y"), ("T_N(x1)T_N(x2)", "x1x2")]
}

pub(super) fn prop63(cfg: &Config, rec: &mut Recorder<'_>) {
    let n_max = cfg.n_max.unwrap_or(16);
    let cap = cfg.big_n_max.unwrap_or(3);
    rec.param("n_max", n_max);
    rec.param("N_max", cap);
    let (groups, over) = roots_by_n(cfg, n_max, cap);
    refuse_over_cap(rec, "eigen", "boundary loops act on E by scalars", &over, cap);
    let ops = operators();
    for (&n, roots) in &groups {
        let tn = t_poly(n);
        for (ename, dname) in eigen_elements() {
            let d = diagram(dname);
            let started = Instant::now();
            let e = match thread(&d, &tn, cfg) {
                Ok(e) => e,
                Err(err) => {
                    rec.error("eigen.E", "threaded element", format!("N = {n}, E = {ename}"), &err, started);
                    continue;
                }
            };
            for op in &ops {
                let started = Instant::now();
                let id = format!("eigen.{}", op.name);
                let params = format!("N = {n}, E = {ename}");
                let image = match thread_op(&d, &tn, op.apply, cfg) {
                    Ok(v) => v,
                    Err(err) => {
                        rec.error(&id, op.identity, params, &err, started);
                        continue;
                    }
                };
                zero_over_roots(rec, &id, op.identity, params.clone(), roots, |xi| at(&image, xi) - (op.expected)(xi, n, &at(&e, xi)), started);
                if op.name == "phi4" {
                    let started = Instant::now();
                    let (lhs, rhs) = (image.degrees().double, e.degrees().double);
                    let bad = if lhs <= rhs + 1 { vec![] } else { vec![format!("deg_lr {lhs} > {rhs} + 1")] };
                    rec.none_of("eigen.phi4_degree", "deg_lr(Phi_4(E)) <= deg_lr(E) + 1", params, bad, started);
                } else if n <= 2 && op.name != "sigma" {
                    let started = Instant::now();
                    let arc_name = format!("alpha{}", &op.name[3..]);
                    let flipped = thread_op(&d, &tn, |c| c.attach_loop(&arc(&arc_name), true), cfg);
                    match flipped {
                        Ok(f) => rec.zero(
                            &format!("{id}.flip"),
                            "the loop evaluates the same with over and under sides exchanged",
                            params,
                            f - image,
                            started,
                        ),
                        Err(err) => rec.error(&format!("{id}.flip"), "flipped loop", params, &err, started),
                    }
                }
            }
        }
    }
}

/// `T_N(L) - eps T_N(L_A) - eps^-1 T_N(L_B)` for a crossing of `d`.
#[allow(clippy::too_many_arguments)]
fn crossing_relation(
    rec: &mut Recorder<'_>,
    id: &str,
    d: &Diagram,
    crossing: usize,
    n: u32,
    roots: &[RootSpec],
    cfg: &Config,
    params: String,
) {
    let identity = "T_N(L) = eps T_N(L_A) + eps^-1 T_N(L_B), eps = xi^(N^2)";
    let started = Instant::now();
    let tn = t_poly(n);
    let res = (|| {
        let a = d.smooth_crossing(crossing, Smoothing::A)?;
        let b = d.smooth_crossing(crossing, Smoothing::B)?;
        Ok::<_, DiagramError>((thread(d, &tn, cfg)?, thread(&a, &tn, cfg)?, thread(&b, &tn, cfg)?))
    })();
    match res {
        Ok((l, la, lb)) => {
            let sq = (n * n) as i64;
            zero_over_roots(
                rec,
                id,
                identity,
                params,
                roots,
                |xi| at(&l, xi) - at(&la, xi).scale(&xi.power(sq)) - at(&lb, xi).scale(&xi.power(-sq)),
                started,
            );
        }
        Err(err) => rec.error(id, identity, params, &err, started),
    }
}

pub(super) fn chebhom(cfg: &Config, rec: &mut Recorder<'_>) {
    let n_max = cfg.n_max.unwrap_or(16);
    let cap = cfg.big_n_max.unwrap_or(3);
    rec.param("n_max", n_max);
    rec.param("N_max", cap);
    let (groups, over) = roots_by_n(cfg, n_max, cap);
    refuse_over_cap(rec, "chebyshev.crossing", "T_N preserves the skein relations", &over, cap);
    let gamma = diagram("gamma");
    let clasp = diagram("clasp");
    let unknot = diagram("unknot");
    let curl = diagram("curl");
    for (&n, roots) in &groups {
        let p = |what: &str| format!("N = {n}, {what}");
        crossing_relation(rec, "chebyshev.crossing", &gamma, 0, n, roots, cfg, p("L = gamma"));
        crossing_relation(rec, "chebyshev.crossing", &clasp, 0, n, roots, cfg, p("L = clasp"));

        let started = Instant::now();
        let tn = t_poly(n);
        let sq = (n * n) as i64;
        let sign = if n % 2 == 0 { CycNum::one() } else { -CycNum::one() };
        let res = (|| {
            let both = gamma.disjoint_union(&unknot)?;
            Ok::<_, DiagramError>((thread(&both, &tn, cfg)?, thread(&gamma, &tn, cfg)?))
        })();
        match res {
            Ok((with_u, alone)) => {
                zero_over_roots(
                    rec,
                    "chebyshev.unknot",
                    "T_N(L ⊔ U) = -(eps^2 + eps^-2) T_N(L)",
                    p("L = gamma"),
                    roots,
                    |xi| {
                        let eps2 = xi.power(2 * sq) + xi.power(-2 * sq);
                        at(&with_u, xi) + at(&alone, xi).scale(&eps2)
                    },
                    started,
                );
                zero_over_roots(
                    rec,
                    "chebyshev.unknot_sign",
                    "T_N(L ⊔ U) = 2 (-1)^N xi^2N T_N(L)",
                    p("L = gamma"),
                    roots,
                    |xi| {
                        let f = CycNum::integer(2) * sign.clone() * xi.power(2 * n as i64);
                        at(&with_u, xi) - at(&alone, xi).scale(&f)
                    },
                    started,
                );
            }
            Err(err) => rec.error("chebyshev.unknot", "T_N(L ⊔ U)", p("L = gamma"), &err, started),
        }

        let started = Instant::now();
        match thread(&curl, &tn, cfg).and_then(|c| Ok((c, thread(&unknot, &tn, cfg)?))) {
            Ok((c, u)) => {
                zero_over_roots(
                    rec,
                    "chebyshev.curl",
                    "T_N(curled U) = (-1)^N xi^(N^2+2N) T_N(U)",
                    p("curl"),
                    roots,
                    |xi| at(&c, xi) - at(&u, xi).scale(&(sign.clone() * xi.power(sq + 2 * n as i64))),
                    started,
                );
                zero_over_roots(
                    rec,
                    "chebyshev.curl_sign",
                    "T_N(curled U) = -xi^(-N^2) T_N(U)",
                    p("curl"),
                    roots,
                    |xi| at(&c, xi) + at(&u, xi).scale(&xi.power(-sq)),
                    started,
                );
            }
            Err(err) => rec.error("chebyshev.curl", "T_N(curled U)", p("curl"), &err, started),
        }
    }
}

pub(super) fn phi0(cfg: &Config, rec: &mut Recorder<'_>) {
    let started = Instant::now();
    let identity = "Phi_alpha0(x1 x2) = (1 - t^4)(1 - t^-4) y + (terms without y)";
    let d = diagram("x1x2");
    match d.attach_loop(&arc("alpha0"), false).and_then(|l| l.evaluate_with(cfg.max_states)) {
        Ok(v) => {
            let c = &LaurentInt::from_terms([(0, 1), (4, -1)]) * &LaurentInt::from_terms([(0, 1), (-4, -1)]);
            let mut r = v.y_slice(1) - Skein::term(2, Monomial::x1x2y(0, 0, 1), c);
            for b in 2..=v.degrees().y {
                r = r + v.y_slice(b);
            }
            rec.zero("loop.alpha0_on_x1x2", identity, "L = x1 x2".into(), r, started);
        }
        Err(err) => rec.error("loop.alpha0_on_x1x2", identity, "L = x1 x2".into(), &err, started),
    }
}
