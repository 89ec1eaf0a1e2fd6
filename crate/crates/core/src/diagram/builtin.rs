//! Canonical diagrams and arcs of the standard twice-punctured disk.

use std::collections::BTreeMap;

use super::geom::{q, qi, Point};
use super::loops::{phi4_curve, Arc, BoundaryCurve};
use super::{Diagram, DiagramError, PuncturedDisk, SegRef};

pub const BUILTIN_NAMES: &[&str] = &[
    "gamma", "gamma_bar", "x1", "x2", "y", "x1x2", "unknot", "curl", "clasp", "x1_over_x2", "alpha0", "alpha1", "alpha2", "alpha3",
    "phi4",
];

#[derive(Clone, Debug)]
pub enum Builtin {
    Diagram(Diagram),
    Arc(Arc),
    Curve(BoundaryCurve),
}

fn p(x: i64, y: i64, d: i64) -> Point {
    Point::frac(x, y, d)
}

fn disk() -> PuncturedDisk {
    PuncturedDisk::standard()
}

fn plain(strands: Vec<Vec<Point>>) -> Diagram {
    Diagram::new(disk(), strands, vec![]).expect("builtin geometry is valid")
}

/// Figure-eight curve around both punctures with one crossing at `(-1/4, 1/4)`.
fn gamma_points() -> Vec<Point> {
    vec![
        p(3, 5, 4),
        p(-5, -3, 4),
        p(-2, -2, 1),
        p(-6, -3, 2),
        p(-7, -1, 2),
        p(-7, 1, 2),
        p(-6, 3, 2),
        p(-2, 2, 1),
        p(-5, 5, 4),
        p(3, -3, 4),
        p(2, -2, 1),
        p(6, -3, 2),
        p(7, -1, 2),
        p(7, 1, 2),
        p(6, 3, 2),
        p(2, 2, 1),
    ]
}

pub(crate) fn gamma() -> Diagram {
    Diagram::new(disk(), vec![gamma_points()], vec![(p(-1, 1, 4), SegRef { strand: 0, segment: 0 })])
        .expect("builtin geometry is valid")
}

fn x1_points() -> Vec<Point> {
    vec![p(-2, -3, 2), p(-1, -1, 2), p(-1, 1, 2), p(-2, 3, 2), p(-7, 1, 2), p(-7, -1, 2)]
}

fn x2_points() -> Vec<Point> {
    x1_points().iter().map(Point::neg).collect()
}

fn y_points() -> Vec<Point> {
    vec![p(-3, -2, 1), p(3, -2, 1), p(15, -2, 4), p(15, 2, 4), p(3, 2, 1), p(-3, 2, 1), p(-15, 2, 4), p(-15, -2, 4)]
}

pub(crate) fn unknot_points() -> Vec<Point> {
    vec![p(-1, 11, 4), p(1, 11, 4), p(1, 13, 4), p(-1, 13, 4)]
}

/// The x1 curve pushed right so that it meets the x2 curve twice.
pub(crate) fn bulged_x1_points() -> Vec<Point> {
    vec![p(-2, -3, 2), p(-1, -1, 2), p(7, -2, 8), p(7, 2, 8), p(-1, 1, 2), p(-2, 3, 2), p(-7, 1, 2), p(-7, -1, 2)]
}

/// Bulged x1 over x2 at both crossings (`layered`) or at one of them.
pub(crate) fn x1_on_x2(layered: bool) -> Diagram {
    let strands = vec![bulged_x1_points(), x2_points()];
    Diagram::assemble(disk(), strands, &|a, b, at| {
        let (x1, x2) = if a.strand == 0 { (a, b) } else { (b, a) };
        Ok(if layered || at.y > qi(0) { x1 } else { x2 })
    })
    .expect("builtin geometry is valid")
}

pub fn builtin(name: &str) -> Result<Builtin, DiagramError> {
    let d = match name {
        "gamma" => gamma(),
        "gamma_bar" => gamma().mirror(),
        "x1" => plain(vec![x1_points()]),
        "x2" => plain(vec![x2_points()]),
        "y" => plain(vec![y_points()]),
        "x1x2" => plain(vec![x1_points(), x2_points()]),
        "unknot" => plain(vec![unknot_points()]),
        "curl" => plain(vec![unknot_points()]).add_curl(0, 0, false)?,
        "clasp" => x1_on_x2(false),
        "x1_over_x2" => x1_on_x2(true),
        "phi4" => return Ok(Builtin::Curve(phi4_curve(&q(1, 8), false))),
        other => return builtin_arc(other).map(Builtin::Arc),
    };
    Ok(Builtin::Diagram(d))
}

pub fn builtin_arc(name: &str) -> Result<Arc, DiagramError> {
    let arcs: BTreeMap<&str, Arc> = [
        ("alpha1", Arc::new(p(-4, 0, 1), p(-3, 0, 1))),
        ("alpha0", Arc::new(p(-1, 0, 1), p(1, 0, 1))),
        ("alpha2", Arc::new(p(3, 0, 1), p(4, 0, 1))),
        ("alpha3", Arc::new(p(0, -4, 1), p(0, 4, 1))),
    ]
    .into_iter()
    .collect();
    arcs.get(name).cloned().ok_or_else(|| DiagramError::UnknownBuiltin(name.to_string()))
}

impl Builtin {
    pub fn diagram(self) -> Option<Diagram> {
        match self {
            Builtin::Diagram(d) => Some(d),
            _ => None,
        }
    }
}

/// Shorthand for a builtin known to be a diagram.
pub(crate) fn diagram(name: &str) -> Diagram {
    builtin(name).ok().and_then(Builtin::diagram).unwrap_or_else(|| panic!("{name} is a builtin diagram"))
}

/// Shorthand for a builtin arc.
pub(crate) fn arc(name: &str) -> Arc {
    builtin_arc(name).unwrap_or_else(|_| panic!("{name} is a builtin arc"))
}
