//! Boundary loops: closed curves laid over and under an existing diagram.

use num_traits::{One, Zero};

use super::geom::{self, meet, q, qi, Point, Q, SegMeet};
use super::{seg, Diagram, DiagramError};

/// A straight arc of the punctured disk.
#[derive(Clone, Debug, PartialEq)]
pub struct Arc {
    pub start: Point,
    pub end: Point,
}

impl Arc {
    pub fn new(start: Point, end: Point) -> Self {
        Self { start, end }
    }
}

/// How a boundary curve segment meets the strands of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pass {
    Over,
    Under,
    /// Must not meet the diagram at all.
    Clear,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryCurve {
    pub points: Vec<Point>,
    /// `modes[i]` applies to the segment from `points[i]` to `points[i + 1]`.
    pub modes: Vec<Pass>,
}

fn inside_convex(poly: &[Point], p: &Point) -> bool {
    let n = poly.len();
    let signs: Vec<Q> = (0..n).map(|i| geom::cross(&poly[(i + 1) % n].sub(&poly[i]), &p.sub(&poly[i]))).collect();
    signs.iter().all(|s| *s >= Q::zero()) || signs.iter().all(|s| *s <= Q::zero())
}

impl Diagram {
    /// Adds a curve whose segments pass over, under, or clear of every strand.
    pub fn attach_curve(&self, curve: &BoundaryCurve) -> Result<Diagram, DiagramError> {
        assert_eq!(curve.points.len(), curve.modes.len());
        let new = self.strands.len();
        let mut strands = self.strands.clone();
        strands.push(curve.points.clone());
        self.inherit(strands, &|r| (r.strand < new).then_some(r), &|a, b, at| {
            let (c, other) = match (a.strand == new, b.strand == new) {
                (true, false) => (a, b),
                (false, true) => (b, a),
                _ => return Err(DiagramError::MissingCrossing { at: at.clone() }),
            };
            match curve.modes[c.segment] {
                Pass::Over => Ok(c),
                Pass::Under => Ok(other),
                Pass::Clear => Err(DiagramError::NonTransverse { at: at.clone() }),
            }
        })
    }

    /// Adds the boundary of a thin band around `arc`: the left side passes
    /// over every strand, the right side under (swapped when `flip`).
    pub fn attach_loop(&self, arc: &Arc, flip: bool) -> Result<Diagram, DiagramError> {
        let dir = arc.end.sub(&arc.start);
        let unit = dir.scale(&(Q::one() / dir.l1()));
        let normal = dir.left_normal_l1();
        let mut w = q(1, 8);
        for _ in 0..40 {
            let l0 = arc.start.add(&unit.scale(&w)).add(&normal.scale(&w));
            let l1 = arc.end.sub(&unit.scale(&w)).add(&normal.scale(&w));
            let r1 = arc.end.sub(&unit.scale(&w)).sub(&normal.scale(&w));
            let r0 = arc.start.add(&unit.scale(&w)).sub(&normal.scale(&w));
            let band = [l0.clone(), l1.clone(), r1.clone(), r0.clone()];
            let (top, bottom) = if flip { (Pass::Under, Pass::Over) } else { (Pass::Over, Pass::Under) };
            let curve = BoundaryCurve { points: band.to_vec(), modes: vec![top, Pass::Clear, bottom, Pass::Clear] };
            if self.band_is_clean(&band) {
                if let Ok(d) = self.attach_curve(&curve) {
                    return Ok(d);
                }
            }
            w /= qi(2);
        }
        Err(DiagramError::Placement("boundary loop".into()))
    }

    /// No vertex or crossing of the diagram inside or on the convex region.
    fn band_is_clean(&self, band: &[Point]) -> bool {
        self.strands.iter().flatten().chain(self.crossings.iter().map(|c| &c.at)).all(|p| !inside_convex(band, p))
    }

    /// Whether `curve` meets no strand on its `Clear` segments (cheap pre-test).
    #[allow(dead_code)]
    pub(crate) fn clear_ok(&self, curve: &BoundaryCurve) -> bool {
        let n = curve.points.len();
        (0..n).filter(|&i| curve.modes[i] == Pass::Clear).all(|i| {
            let (a, b) = (&curve.points[i], &curve.points[(i + 1) % n]);
            self.strands.iter().all(|pts| (0..pts.len()).all(|k| {
                let (c, d) = seg(pts, k);
                meet(a, b, c, d) == SegMeet::Disjoint
            }))
        })
    }

    /// The curve running along the outer rim and around the second puncture
    /// of the standard disk, with its two parallel tracks over and under.
    pub fn attach_phi4(&self, flip: bool) -> Result<Diagram, DiagramError> {
        let mut w = q(1, 8);
        for _ in 0..40 {
            let curve = phi4_curve(&w, flip);
            let track = [
                Point::new(q(5, 2), w.clone()),
                Point::new(q(31, 8), w.clone()),
                Point::new(q(31, 8), -w.clone()),
                Point::new(q(5, 2), -w.clone()),
            ];
            if self.band_is_clean(&track) {
                if let Ok(d) = self.attach_curve(&curve) {
                    return Ok(d);
                }
            }
            w /= qi(2);
        }
        Err(DiagramError::Placement("rim curve".into()))
    }
}

/// Rational point on the circle of radius `r` at parameter `s = tan(theta/2)`.
fn circle_point(r: &Q, s: &Q) -> Point {
    let s2 = s * s;
    let den = Q::one() + &s2;
    Point::new(r * (Q::one() - &s2) / &den, r * (qi(2) * s) / den)
}

pub(crate) fn phi4_curve(w: &Q, flip: bool) -> BoundaryCurve {
    let (top, bottom) = if flip { (Pass::Under, Pass::Over) } else { (Pass::Over, Pass::Under) };
    let mut points = Vec::new();
    let mut modes = Vec::new();
    let mut push = |p: Point, m: Pass| {
        points.push(p);
        modes.push(m);
    };
    let half = q(1, 2);
    push(Point::new(q(31, 8), w.clone()), top);
    push(Point::new(q(5, 2), w.clone()), Pass::Clear);
    push(Point::new(q(5, 2), half.clone()), Pass::Clear);
    push(Point::new(q(3, 2), half.clone()), Pass::Clear);
    push(Point::new(q(3, 2), -half.clone()), Pass::Clear);
    push(Point::new(q(5, 2), -half), Pass::Clear);
    push(Point::new(q(5, 2), -w.clone()), bottom);
    push(Point::new(q(31, 8), -w.clone()), Pass::Clear);
    // clockwise along the rim from just below the positive axis
    let r = q(39, 10);
    let params: [(i64, i64); 13] =
        [(1, 16), (1, 8), (1, 4), (3, 8), (1, 2), (3, 4), (1, 1), (4, 3), (2, 1), (8, 3), (4, 1), (8, 1), (16, 1)];
    for &(a, b) in &params {
        push(circle_point(&r, &q(-a, b)), Pass::Clear);
    }
    push(Point::new(-r.clone(), Q::zero()), Pass::Clear);
    for &(a, b) in params.iter().rev() {
        push(circle_point(&r, &q(a, b)), Pass::Clear);
    }
    BoundaryCurve { points, modes }
}
