//! Planar link diagrams in a punctured disk with exact rational coordinates.

mod builtin;
mod cable;
pub mod geom;
mod io;
mod loops;
pub(crate) mod statesum;
mod surgery;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::chebyshev::{thread_plan_multi, PolyZ};
use crate::rings::{LaurentInt, SkeinPoly};

pub use builtin::{builtin, builtin_arc, Builtin, BUILTIN_NAMES};
pub(crate) use builtin::{arc, diagram};
pub use geom::{Point, Q};
pub use io::{from_json, to_json, FormatError};
pub use loops::{Arc, BoundaryCurve, Pass};
pub use statesum::{StateSpaceTooLarge, DEFAULT_MAX_STATES, HARD_STATE_LIMIT};
pub use surgery::Smoothing;

use geom::{meet, point_on_segment, qi, winding_parity, Ray, SegMeet};
use statesum::{crossing_pairings, StateModel, OVER_IN, OVER_OUT, UNDER_IN, UNDER_OUT};

#[derive(Clone, Debug, PartialEq)]
pub struct PuncturedDisk {
    pub outer_radius: Q,
    pub punctures: Vec<Point>,
}

impl PuncturedDisk {
    /// Radius 4 with punctures at `(-2, 0)` and `(2, 0)`.
    pub fn standard() -> Self {
        Self { outer_radius: qi(4), punctures: vec![Point::new(qi(-2), qi(0)), Point::new(qi(2), qi(0))] }
    }

    pub fn validate(&self) -> Result<(), DiagramError> {
        let r2 = &self.outer_radius * &self.outer_radius;
        if self.outer_radius <= Q::zero() {
            return Err(DiagramError::BadDisk("outer radius must be positive".into()));
        }
        for (i, p) in self.punctures.iter().enumerate() {
            if p.norm_sq() >= r2 {
                return Err(DiagramError::BadDisk(format!("puncture {p} is not inside the outer circle")));
            }
            if self.punctures[..i].contains(p) {
                return Err(DiagramError::BadDisk(format!("puncture {p} is repeated")));
            }
        }
        if self.punctures.len() > 8 {
            return Err(DiagramError::BadDisk("at most 8 punctures are supported".into()));
        }
        Ok(())
    }

    fn contains_strictly(&self, p: &Point) -> bool {
        p.norm_sq() < &self.outer_radius * &self.outer_radius
    }
}

/// Segment `segment` of strand `strand` runs from vertex `segment` to the next one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegRef {
    pub strand: usize,
    pub segment: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Crossing {
    pub at: Point,
    pub over: SegRef,
    pub under: SegRef,
    over_param: Q,
    under_param: Q,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DiagramError {
    #[error("invalid disk: {0}")]
    BadDisk(String),
    #[error("strand {strand} needs at least 3 distinct vertices")]
    TooFewVertices { strand: usize },
    #[error("strand {strand} repeats vertex {at}")]
    RepeatedVertex { strand: usize, at: Point },
    #[error("vertex {at} is not strictly inside the outer circle")]
    OutsideDisk { at: Point },
    #[error("strand {strand} passes through puncture {at}")]
    ThroughPuncture { strand: usize, at: Point },
    #[error("non-transverse contact at {at}")]
    NonTransverse { at: Point },
    #[error("triple point at {at}")]
    TriplePoint { at: Point },
    #[error("intersection at {at} has no crossing record")]
    MissingCrossing { at: Point },
    #[error("crossing record at {at} matches no intersection")]
    UnmatchedCrossing { at: Point },
    #[error("crossing at {at}: over segment is not one of the two crossing segments")]
    BadOver { at: Point },
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
    #[error("could not place {0} without degenerate contacts")]
    Placement(String),
    #[error(transparent)]
    StateSpace(#[from] StateSpaceTooLarge),
}

/// A validated diagram. Each strand is a closed polyline and its own component.
#[derive(Clone, PartialEq)]
pub struct Diagram {
    disk: PuncturedDisk,
    strands: Vec<Vec<Point>>,
    crossings: Vec<Crossing>,
}

/// Which of two segments meeting at a point passes over.
pub(crate) type OverRule<'a> = dyn Fn(SegRef, SegRef, &Point) -> Result<SegRef, DiagramError> + 'a;

fn seg(strand: &[Point], i: usize) -> (&Point, &Point) {
    (&strand[i], &strand[(i + 1) % strand.len()])
}

fn adjacent(n: usize, i: usize, j: usize) -> bool {
    (i + 1) % n == j || (j + 1) % n == i
}

impl Diagram {
    pub fn empty(disk: PuncturedDisk) -> Self {
        Self { disk, strands: Vec::new(), crossings: Vec::new() }
    }

    /// Builds a diagram from strands and crossing records `(at, over)`.
    /// Every intersection must be listed exactly once.
    pub fn new(disk: PuncturedDisk, strands: Vec<Vec<Point>>, records: Vec<(Point, SegRef)>) -> Result<Self, DiagramError> {
        let mut by_at: BTreeMap<Point, SegRef> = BTreeMap::new();
        for (at, over) in records {
            if by_at.insert(at.clone(), over).is_some() {
                return Err(DiagramError::TriplePoint { at });
            }
        }
        let used = std::cell::RefCell::new(0usize);
        let d = Self::assemble(disk, strands, &|a, b, at| {
            let over = *by_at.get(at).ok_or_else(|| DiagramError::MissingCrossing { at: at.clone() })?;
            if over != a && over != b {
                return Err(DiagramError::BadOver { at: at.clone() });
            }
            *used.borrow_mut() += 1;
            Ok(over)
        })?;
        if *used.borrow() != by_at.len() {
            let missing = by_at.keys().find(|p| !d.crossings.iter().any(|c| &c.at == *p)).unwrap();
            return Err(DiagramError::UnmatchedCrossing { at: missing.clone() });
        }
        Ok(d)
    }

    /// Validates the geometry and records every intersection, asking `rule`
    /// which segment is over.
    pub(crate) fn assemble(disk: PuncturedDisk, strands: Vec<Vec<Point>>, rule: &OverRule<'_>) -> Result<Self, DiagramError> {
        disk.validate()?;
        for (s, pts) in strands.iter().enumerate() {
            if pts.len() < 3 {
                return Err(DiagramError::TooFewVertices { strand: s });
            }
            for i in 0..pts.len() {
                if pts[i] == pts[(i + 1) % pts.len()] {
                    return Err(DiagramError::RepeatedVertex { strand: s, at: pts[i].clone() });
                }
                if !disk.contains_strictly(&pts[i]) {
                    return Err(DiagramError::OutsideDisk { at: pts[i].clone() });
                }
                let (a, b) = seg(pts, i);
                if let Some(p) = disk.punctures.iter().find(|p| point_on_segment(p, a, b)) {
                    return Err(DiagramError::ThroughPuncture { strand: s, at: p.clone() });
                }
            }
        }
        let segs: Vec<(SegRef, &Point, &Point)> = strands
            .iter()
            .enumerate()
            .flat_map(|(s, pts)| (0..pts.len()).map(move |i| {
                let (a, b) = seg(pts, i);
                (SegRef { strand: s, segment: i }, a, b)
            }))
            .collect();
        let mut crossings = Vec::new();
        for x in 0..segs.len() {
            let (ra, a0, a1) = segs[x];
            for &(rb, b0, b1) in &segs[x + 1..] {
                if ra.strand == rb.strand && adjacent(strands[ra.strand].len(), ra.segment, rb.segment) {
                    let (d1, d2) = (a1.sub(a0), b1.sub(b0));
                    if geom::cross(&d1, &d2).is_zero() && geom::dot(&d1, &d2) < Q::zero() {
                        let at = if a1 == b0 { a1.clone() } else { a0.clone() };
                        return Err(DiagramError::NonTransverse { at });
                    }
                    continue;
                }
                match meet(a0, a1, b0, b1) {
                    SegMeet::Disjoint => {}
                    SegMeet::Degenerate { at } => return Err(DiagramError::NonTransverse { at }),
                    SegMeet::Proper { at, s, u } => {
                        let over = rule(ra, rb, &at)?;
                        let (over, under, op, up) = if over == ra { (ra, rb, s, u) } else { (rb, ra, u, s) };
                        crossings.push(Crossing { at, over, under, over_param: op, under_param: up });
                    }
                }
            }
        }
        crossings.sort_by(|a, b| a.at.cmp(&b.at));
        if let Some(w) = crossings.windows(2).find(|w| w[0].at == w[1].at) {
            return Err(DiagramError::TriplePoint { at: w[0].at.clone() });
        }
        Ok(Self { disk, strands, crossings })
    }

    /// Re-assembles new geometry. `origin` maps each new segment to the old
    /// segment it lies on; crossings at old crossing points keep their over
    /// flag, all others are decided by `fallback`.
    pub(crate) fn inherit(
        &self,
        strands: Vec<Vec<Point>>,
        origin: &dyn Fn(SegRef) -> Option<SegRef>,
        fallback: &OverRule<'_>,
    ) -> Result<Self, DiagramError> {
        let old: BTreeMap<&Point, &Crossing> = self.crossings.iter().map(|c| (&c.at, c)).collect();
        Self::assemble(self.disk.clone(), strands, &|a, b, at| match old.get(at) {
            Some(c) => {
                let (oa, ob) = (origin(a), origin(b));
                if oa == Some(c.over) && ob == Some(c.under) {
                    Ok(a)
                } else if ob == Some(c.over) && oa == Some(c.under) {
                    Ok(b)
                } else {
                    fallback(a, b, at)
                }
            }
            None => fallback(a, b, at),
        })
    }

    pub fn disk(&self) -> &PuncturedDisk {
        &self.disk
    }

    pub fn strands(&self) -> &[Vec<Point>] {
        &self.strands
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.strands.len()
    }

    /// Union with a diagram disjoint from this one.
    pub fn disjoint_union(&self, other: &Diagram) -> Result<Self, DiagramError> {
        let offset = self.strands.len();
        let mut strands = self.strands.clone();
        strands.extend(other.strands.iter().cloned());
        let over_of: BTreeMap<Point, SegRef> = self
            .crossings
            .iter()
            .map(|c| (c.at.clone(), c.over))
            .chain(other.crossings.iter().map(|c| {
                (c.at.clone(), SegRef { strand: c.over.strand + offset, segment: c.over.segment })
            }))
            .collect();
        let d = Self::assemble(self.disk.clone(), strands, &|a, b, at| {
            let over = over_of.get(at).copied().ok_or_else(|| DiagramError::MissingCrossing { at: at.clone() })?;
            if over != a && over != b {
                return Err(DiagramError::MissingCrossing { at: at.clone() });
            }
            Ok(over)
        })?;
        Ok(d)
    }

    /// Same geometry with every crossing flipped.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        for c in &mut d.crossings {
            std::mem::swap(&mut c.over, &mut c.under);
            std::mem::swap(&mut c.over_param, &mut c.under_param);
        }
        d
    }

    /// Half-turn about the origin. If the disk is symmetric under the
    /// half-turn the result lives on the same disk, so puncture labels are
    /// permuted; otherwise the punctures are carried along.
    pub fn rotate180(&self) -> Self {
        let mut d = self.clone();
        let turned: Vec<Point> = self.disk.punctures.iter().map(Point::neg).collect();
        if !turned.iter().all(|p| self.disk.punctures.contains(p)) {
            d.disk.punctures = turned;
        }
        d.strands = self.strands.iter().map(|s| s.iter().map(Point::neg).collect()).collect();
        for c in &mut d.crossings {
            c.at = c.at.neg();
        }
        d.crossings.sort_by(|a, b| a.at.cmp(&b.at));
        d
    }

    fn point_at(&self, r: SegRef, param: &Q) -> Point {
        let (a, b) = seg(&self.strands[r.strand], r.segment);
        a.add(&b.sub(a).scale(param))
    }

    #[allow(dead_code)]
    fn check_crossing_points(&self) -> bool {
        self.crossings.iter().all(|c| self.point_at(c.over, &c.over_param) == c.at && self.point_at(c.under, &c.under_param) == c.at)
    }

    /// Compiles the diagram into the combinatorial form used by the state sum.
    pub(crate) fn state_model(&self) -> StateModel {
        let n_p = self.disk.punctures.len();
        let avoid: Vec<&Point> = self.strands.iter().flatten().chain(self.crossings.iter().map(|c| &c.at)).collect();
        let rays: Vec<Ray> =
            self.disk.punctures.iter().map(|p| Ray::avoiding(p, avoid.iter().copied())).collect();

        // per strand: sorted events (segment, param, kind)
        #[derive(Clone)]
        enum Ev {
            Visit { crossing: usize, over: bool },
            Hit { puncture: usize },
        }
        let mut events: Vec<Vec<(usize, Q, Ev)>> = vec![Vec::new(); self.strands.len()];
        for (c, x) in self.crossings.iter().enumerate() {
            events[x.over.strand].push((x.over.segment, x.over_param.clone(), Ev::Visit { crossing: c, over: true }));
            events[x.under.strand].push((x.under.segment, x.under_param.clone(), Ev::Visit { crossing: c, over: false }));
        }
        for (s, pts) in self.strands.iter().enumerate() {
            for i in 0..pts.len() {
                let (a, b) = seg(pts, i);
                for (p, ray) in rays.iter().enumerate() {
                    if let Some(mu) = ray.hit(a, b) {
                        events[s].push((i, mu, Ev::Hit { puncture: p }));
                    }
                }
            }
        }
        let mut model = StateModel {
            punctures: n_p as u32,
            pairings: Vec::new(),
            end_piece: vec![usize::MAX; 4 * self.crossings.len()],
            piece_mask: Vec::new(),
            boundary_piece: Vec::new(),
            free_loops: Vec::new(),
        };
        for evs in &mut events {
            evs.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
            let first_visit = evs.iter().position(|e| matches!(e.2, Ev::Visit { .. }));
            let Some(start) = first_visit else {
                let mask = evs.iter().fold(0u32, |m, e| match e.2 {
                    Ev::Hit { puncture } => m ^ (1 << puncture),
                    _ => m,
                });
                model.free_loops.push(mask);
                continue;
            };
            let k = evs.len();
            let mut piece = usize::MAX;
            for step in 0..=k {
                let (_, _, ev) = &evs[(start + step) % k];
                match *ev {
                    Ev::Hit { puncture } => model.piece_mask[piece] ^= 1 << puncture,
                    Ev::Visit { crossing, over } => {
                        let (in_end, out_end) = if over { (OVER_IN, OVER_OUT) } else { (UNDER_IN, UNDER_OUT) };
                        if step > 0 {
                            model.end_piece[4 * crossing + in_end] = piece;
                        }
                        if step == k {
                            break;
                        }
                        piece = model.piece_mask.len();
                        model.piece_mask.push(0);
                        model.end_piece[4 * crossing + out_end] = piece;
                    }
                }
            }
        }
        for (c, x) in self.crossings.iter().enumerate() {
            let (o0, o1) = seg(&self.strands[x.over.strand], x.over.segment);
            let (u0, u1) = seg(&self.strands[x.under.strand], x.under.segment);
            let ccw = geom::cross(&o1.sub(o0), &u1.sub(u0)) > Q::zero();
            model.pairings.push(crossing_pairings(c, ccw));
        }
        debug_assert!(model.end_piece.iter().all(|&p| p != usize::MAX));
        model
    }

    pub fn evaluate(&self) -> Result<SkeinPoly<LaurentInt>, DiagramError> {
        self.evaluate_with(DEFAULT_MAX_STATES)
    }

    pub fn evaluate_with(&self, max_states: u64) -> Result<SkeinPoly<LaurentInt>, DiagramError> {
        let model = self.state_model();
        Ok(model.enumerate(max_states)?.into_skein(self.disk.punctures.len() as u32))
    }

    /// Number of intersections with `arc`, a crossing on the arc counting twice.
    pub fn arc_count(&self, arc: &Arc) -> Result<usize, DiagramError> {
        let mut count = 0;
        for pts in &self.strands {
            for i in 0..pts.len() {
                let (a, b) = seg(pts, i);
                match meet(a, b, &arc.start, &arc.end) {
                    SegMeet::Disjoint => {}
                    SegMeet::Degenerate { at } => return Err(DiagramError::NonTransverse { at }),
                    SegMeet::Proper { .. } => count += 1,
                }
            }
        }
        Ok(count)
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Diagram")
            .field("strands", &self.strands)
            .field("crossings", &self.crossings.iter().map(|c| (&c.at, c.over)).collect::<Vec<_>>())
            .finish()
    }
}

/// Subset of punctures, as a bitmask, that a closed embedded polyline
/// winds around an odd number of times.
pub fn classify_component(poly: &[Point], disk: &PuncturedDisk) -> Result<u32, DiagramError> {
    let mut mask = 0;
    for (p, c) in disk.punctures.iter().enumerate() {
        for i in 0..poly.len() {
            let (a, b) = seg(poly, i);
            if point_on_segment(c, a, b) {
                return Err(DiagramError::ThroughPuncture { strand: 0, at: c.clone() });
            }
        }
        if winding_parity(poly, c) {
            mask |= 1 << p;
        }
    }
    Ok(mask)
}

/// `p(L)` by cabling: `sum over multi-indices of (prod a_j) * eval(cable(L, j))`.
pub fn thread_polynomial(d: &Diagram, polys: &[PolyZ]) -> Result<SkeinPoly<LaurentInt>, DiagramError> {
    thread_then(d, polys, Ok, DEFAULT_MAX_STATES)
}

/// Threads `polys` through `d`, applies `op` to each cabled diagram, and sums.
pub fn thread_then(
    d: &Diagram,
    polys: &[PolyZ],
    op: impl Fn(Diagram) -> Result<Diagram, DiagramError>,
    max_states: u64,
) -> Result<SkeinPoly<LaurentInt>, DiagramError> {
    assert_eq!(polys.len(), d.component_count(), "one polynomial per component");
    let plan = thread_plan_multi(polys);
    let mut acc = SkeinPoly::zero(d.disk.punctures.len() as u32);
    for term in plan.terms {
        let cabled = op(d.cable(&term.multiplicities)?)?;
        acc = acc + cabled.evaluate_with(max_states)?.scale(&term.coeff);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(cx: i64, cy: i64, h: i64, d: i64) -> Vec<Point> {
        vec![
            Point::frac(cx - h, cy - h, d),
            Point::frac(cx + h, cy - h, d),
            Point::frac(cx + h, cy + h, d),
            Point::frac(cx - h, cy + h, d),
        ]
    }

    #[test]
    fn circle_classes() {
        let disk = PuncturedDisk::standard();
        assert_eq!(classify_component(&sq(-2, 0, 1, 1), &disk).unwrap(), 1);
        assert_eq!(classify_component(&sq(2, 0, 1, 1), &disk).unwrap(), 2);
        assert_eq!(classify_component(&sq(0, 0, 3, 1), &disk).unwrap(), 3);
        assert_eq!(classify_component(&sq(0, 3, 1, 2), &disk).unwrap(), 0);
        assert!(classify_component(&sq(-1, 0, 1, 1), &disk).is_err());
    }

    #[test]
    fn crossing_free_evaluation() {
        let d = Diagram::new(PuncturedDisk::standard(), vec![sq(-2, 0, 1, 1)], vec![]).unwrap();
        assert_eq!(d.evaluate().unwrap(), SkeinPoly::x1());
        let u = Diagram::new(PuncturedDisk::standard(), vec![sq(0, 6, 1, 2)], vec![]).unwrap();
        assert_eq!(u.evaluate().unwrap(), SkeinPoly::constant(2, crate::rings::lambda_k(0)));
    }

    #[test]
    fn missing_crossing_is_rejected() {
        let strands = vec![sq(0, 8, 2, 4), sq(2, 9, 2, 4)];
        let err = Diagram::new(PuncturedDisk::standard(), strands, vec![]).unwrap_err();
        assert!(matches!(err, DiagramError::MissingCrossing { .. }), "{err:?}");
    }

    #[test]
    fn touching_strands_are_rejected() {
        let strands = vec![sq(0, 6, 1, 2), sq(2, 6, 1, 2)];
        let err = Diagram::new(PuncturedDisk::standard(), strands, vec![]).unwrap_err();
        assert!(matches!(err, DiagramError::NonTransverse { .. }));
    }
}
