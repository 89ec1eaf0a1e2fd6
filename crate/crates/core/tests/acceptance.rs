//! One line per acceptance criterion; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use skeinlab::diagram::{builtin, BoundaryCurve, Builtin, Diagram, Pass, Point, BUILTIN_NAMES};
use skeinlab::rings::{lambda_k, LaurentInt, SkeinPoly};
use skeinlab::verify::{run_suite, Config, SuiteReport};

struct Outcome {
    ok: bool,
    summary: String,
}

fn suite(name: &str, cfg: &Config) -> SuiteReport {
    run_suite(name, cfg).unwrap_or_else(|e| panic!("suite {name}: {e}"))
}

/// Passes iff every selected check of the suite passes within `budget`.
fn from_suite(name: &str, keep: &dyn Fn(&str) -> bool, budget: Option<Duration>) -> Outcome {
    let started = Instant::now();
    let report = suite(name, &Config::default());
    let elapsed = started.elapsed();
    let checks: Vec<_> = report.checks.iter().filter(|c| keep(&c.id)).collect();
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| c.status != skeinlab::verify::Status::Pass)
        .map(|c| format!("{} ({})", c.id, c.params))
        .collect();
    let over = budget.is_some_and(|b| elapsed > b);
    let mut summary = format!("{} checks, {} not passing, {:.2} s", checks.len(), failed.len(), elapsed.as_secs_f64());
    if let Some(b) = budget {
        summary.push_str(&format!(" (budget {} s)", b.as_secs()));
    }
    if !failed.is_empty() {
        summary.push_str(&format!("; first: {}", failed[0]));
    }
    Outcome { ok: !checks.is_empty() && failed.is_empty() && !over, summary }
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn all(_: &str) -> bool {
    true
}

fn d(name: &str) -> Diagram {
    match builtin(name).expect("known builtin") {
        Builtin::Diagram(d) => d,
        _ => panic!("{name} is not a diagram"),
    }
}

fn diagram_names() -> Vec<&'static str> {
    BUILTIN_NAMES.iter().copied().filter(|n| matches!(builtin(n), Ok(Builtin::Diagram(_)))).collect()
}

fn eval(d: &Diagram) -> SkeinPoly<LaurentInt> {
    d.evaluate().expect("small diagram")
}

fn lambda0_times(p: &SkeinPoly<LaurentInt>) -> SkeinPoly<LaurentInt> {
    p.scale(&lambda_k(0))
}

fn rect(x0: Point, x1: Point, mode: Pass) -> BoundaryCurve {
    let points = vec![x0.clone(), Point::new(x1.x.clone(), x0.y.clone()), x1.clone(), Point::new(x0.x.clone(), x1.y.clone())];
    BoundaryCurve { points, modes: vec![mode; 4] }
}

/// Records `name` as a failure unless `f` returns no complaint.
fn tally(bad: &mut Vec<String>, name: String, f: impl FnOnce() -> Result<bool, String>) {
    match f() {
        Ok(true) => {}
        Ok(false) => bad.push(name),
        Err(e) => bad.push(format!("{name}: {e}")),
    }
}

fn pt(x: i64, y: i64, den: i64) -> Point {
    Point::frac(x, y, den)
}

fn reidemeister(bad: &mut Vec<String>) {
    tally(bad, "x1_over_x2 = x1 x2".into(), || Ok(eval(&d("x1_over_x2")) == eval(&d("x1")) * eval(&d("x2"))));
    // a strip laid over (or under) everything meets each strand in canceling pairs
    for name in diagram_names() {
        for mode in [Pass::Over, Pass::Under] {
            tally(bad, format!("strip {mode:?} {name}"), || {
                let base = d(name);
                let with = base.attach_curve(&rect(pt(-3, -40, 16), pt(-1, 40, 16), mode)).map_err(|e| e.to_string())?;
                Ok(eval(&with) == lambda0_times(&eval(&base)))
            });
        }
    }
    // sliding a strand across the crossing of gamma from one side to the other
    for name in ["gamma", "gamma_bar"] {
        for mode in [Pass::Over, Pass::Under] {
            let mut sides = Vec::new();
            for h in [3, 1] {
                let base = d(name);
                match base.attach_curve(&rect(pt(-6, -4, 8), pt(2, h, 8), mode)) {
                    Ok(with) => sides.push(eval(&with)),
                    Err(e) => bad.push(format!("triangle {name} {mode:?} h={h}/8: {e}")),
                }
            }
            let expected = lambda0_times(&eval(&d(name)));
            if sides.len() == 2 && !(sides[0] == expected && sides[1] == expected) {
                bad.push(format!("triangle {name} {mode:?}"));
            }
        }
    }
}

fn curls(bad: &mut Vec<String>) {
    for name in diagram_names() {
        let base = d(name);
        let v = eval(&base);
        for strand in 0..base.component_count() {
            for negative in [false, true] {
                tally(bad, format!("curl {name}/{strand}/{negative}"), || {
                    let segments = base.strands()[strand].len();
                    let curled = (0..segments)
                        .find_map(|s| base.add_curl(strand, s, negative).ok())
                        .ok_or("no segment takes a curl")?;
                    let factor = -LaurentInt::t(if negative { -3 } else { 3 });
                    Ok(eval(&curled) == v.scale(&factor))
                });
            }
        }
    }
}

fn disjoint(bad: &mut Vec<String>) {
    let pairs = [("x1", "x2"), ("x1", "y"), ("x2", "y"), ("gamma", "unknot"), ("clasp", "unknot"), ("y", "unknot"), ("x1x2", "unknot")];
    for (a, b) in pairs {
        tally(bad, format!("{a} + {b}"), || {
            let u = d(a).disjoint_union(&d(b)).map_err(|e| e.to_string())?;
            Ok(eval(&u) == eval(&d(a)) * eval(&d(b)))
        });
    }
}

fn sigma(bad: &mut Vec<String>) {
    for name in diagram_names() {
        let base = d(name);
        for j in 1..=3 {
            tally(bad, format!("sigma {name}^({j})"), || {
                let c = base.cable(&vec![j; base.component_count()]).map_err(|e| e.to_string())?;
                Ok(eval(&c.rotate180()) == eval(&c).swap_sigma())
            });
        }
    }
}

fn render(cfg: &Config) -> String {
    let names = ["prop61", "framing", "tl", "degrees", "annulus"];
    let reports: Vec<SuiteReport> = names.iter().map(|n| suite(n, cfg)).collect();
    let text: String = reports.iter().map(|r| r.to_string()).collect();
    text + &serde_json::to_string(&reports).expect("serializable")
}

fn determinism(bad: &mut Vec<String>) {
    let cfg = Config { big_n_max: Some(3), k_max: Some(4), ..Config::default() };
    let outputs: Vec<(usize, String)> = [1, 2, 4, 7]
        .into_iter()
        .map(|w| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(w).build().expect("thread pool");
            (w, pool.install(|| render(&cfg)))
        })
        .collect();
    for (w, out) in &outputs[1..] {
        if *out != outputs[0].1 {
            bad.push(format!("report with {w} workers differs from 1 worker"));
        }
    }
}

fn engine_sanity() -> Outcome {
    let mut bad = Vec::new();
    reidemeister(&mut bad);
    curls(&mut bad);
    disjoint(&mut bad);
    sigma(&mut bad);
    determinism(&mut bad);
    let summary = match bad.first() {
        None => "Reidemeister II/III, curls, disjoint unions, half-turn symmetry, worker-count determinism".to_string(),
        Some(first) => {
            for b in &bad {
                eprintln!("engine sanity failure: {b}");
            }
            format!("{} failures; first: {first}", bad.len())
        }
    };
    Outcome { ok: bad.is_empty(), summary }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        ("gamma threading identities at all roots with N <= 4", Box::new(move || from_suite("prop61", &all, Some(secs(60))))),
        ("extremal coefficients of threaded gamma, N <= 4", Box::new(|| from_suite("lemma68", &all, None))),
        ("threaded gamma and its mirror lie in V_N, N <= 4", Box::new(|| {
            from_suite("degrees", &|id| id == "degrees.v_n" || id == "degrees.arc_bounds", None)
        })),
        ("eigen-equations of the half-turn and boundary loops, N <= 3", Box::new(move || {
            from_suite("prop63", &all, Some(secs(120)))
        })),
        ("encircling the identity matching, 1 <= k <= 6", Box::new(move || {
            from_suite("tl", &|id| id.starts_with("tl.encircle"), Some(secs(10)))
        })),
        ("centrality exactly on C[T_N], n <= 24", Box::new(|| from_suite("theorem1", &all, None))),
        ("anticommutator vanishes iff xi^(2N) = -1, n <= 24, N <= 6", Box::new(|| from_suite("skew", &all, None))),
        ("annulus closed forms and recursions, k <= 15", Box::new(|| from_suite("annulus", &all, None))),
        ("threaded unknot quotient and curl factor, k <= 4", Box::new(|| from_suite("framing", &all, None))),
        ("Chebyshev homomorphism relations, N <= 3", Box::new(|| from_suite("chebhom", &all, None))),
        ("root-of-unity sign and lambda identities, order <= 48", Box::new(|| from_suite("lemma62", &all, None))),
        ("engine sanity", Box::new(engine_sanity)),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let out = run();
        if !out.ok {
            failed += 1;
        }
        println!("criterion {:>2} {}: {} [{}]", i + 1, if out.ok { "PASS" } else { "FAIL" }, title, out.summary);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
