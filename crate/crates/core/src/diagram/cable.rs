//! Blackboard-framed parallel copies of diagram components.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::geom::{self, point_segment_dist, pow2_floor, q, winding_parity, Point, Q};
use super::{seg, Diagram, DiagramError, SegRef};

/// Offsets the closed polyline `pts` by `s` along its left normals, joining
/// consecutive offset edges at their miter points.
pub(crate) fn offset_polyline(pts: &[Point], s: &Q) -> Vec<Point> {
    if s.is_zero() {
        return pts.to_vec();
    }
    let n = pts.len();
    (0..n)
        .map(|k| {
            let prev = &pts[(k + n - 1) % n];
            let cur = &pts[k];
            let next = &pts[(k + 1) % n];
            let e_in = cur.sub(prev);
            let e_out = next.sub(cur);
            let a = cur.add(&e_in.left_normal_l1().scale(s));
            let b = cur.add(&e_out.left_normal_l1().scale(s));
            let den = geom::cross(&e_in, &e_out);
            if den.is_zero() {
                return b;
            }
            // a + lam * e_in = b + mu * e_out
            let lam = geom::cross(&b.sub(&a), &e_out) / den;
            a.add(&e_in.scale(&lam))
        })
        .collect()
}

/// Smallest distance between features that cable copies must not bridge.
fn feature_separation(d: &Diagram) -> f64 {
    let mut best = f64::INFINITY;
    let r = geom::Point::new(d.disk.outer_radius.clone(), Q::zero()).to_f64().0;
    let crossing_pts: Vec<(f64, f64)> = d.crossings.iter().map(|c| c.at.to_f64()).collect();
    let puncture_pts: Vec<(f64, f64)> = d.disk.punctures.iter().map(Point::to_f64).collect();
    for (s, pts) in d.strands.iter().enumerate() {
        for v in pts {
            let (x, y) = v.to_f64();
            best = best.min(r - (x * x + y * y).sqrt());
        }
        for i in 0..pts.len() {
            let (a, b) = seg(pts, i);
            let (a, b) = (a.to_f64(), b.to_f64());
            for p in puncture_pts.iter().chain(&crossing_pts) {
                let dist = point_segment_dist(*p, a, b);
                if dist > 0.0 {
                    best = best.min(dist);
                }
            }
            for (s2, pts2) in d.strands.iter().enumerate() {
                for (k, v) in pts2.iter().enumerate() {
                    if s2 == s && (k == i || k == (i + 1) % pts.len()) {
                        continue;
                    }
                    best = best.min(point_segment_dist(v.to_f64(), a, b));
                }
            }
        }
    }
    for c in &crossing_pts {
        for pts in &d.strands {
            for v in pts {
                let (x, y) = v.to_f64();
                best = best.min(((x - c.0).powi(2) + (y - c.1).powi(2)).sqrt());
            }
        }
    }
    best
}

impl Diagram {
    /// Replaces strand `i` by `mult[i]` parallel copies; 0 deletes it.
    pub fn cable(&self, mult: &[usize]) -> Result<Diagram, DiagramError> {
        assert_eq!(mult.len(), self.strands.len(), "one multiplicity per component");
        if mult.iter().all(|&m| m == 1) {
            return Ok(self.clone());
        }
        let jmax = *mult.iter().max().unwrap_or(&1);
        let sep = feature_separation(self);
        let mut delta = if sep.is_finite() && sep > 0.0 { pow2_floor(sep / (4.0 * jmax.max(1) as f64)) } else { q(1, 16) };
        for _ in 0..40 {
            if let Some(d) = self.try_cable(mult, &delta)? {
                return Ok(d);
            }
            delta /= Q::from_integer(2.into());
        }
        Err(DiagramError::Placement("cable copies".into()))
    }

    fn try_cable(&self, mult: &[usize], delta: &Q) -> Result<Option<Diagram>, DiagramError> {
        let mut strands = Vec::new();
        let mut origin = Vec::new();
        for (s, pts) in self.strands.iter().enumerate() {
            let j = mult[s];
            for c in 0..j {
                // offsets (c - (j-1)/2) * delta
                let s_off = (Q::from_integer((2 * c as i64 - (j as i64 - 1)).into()) / Q::from_integer(2.into())) * delta;
                let copy = offset_polyline(pts, &s_off);
                for p in &self.disk.punctures {
                    if winding_parity(&copy, p) != winding_parity(pts, p) {
                        return Ok(None);
                    }
                }
                strands.push(copy);
                origin.push(s);
            }
        }
        let by_segs: BTreeMap<(SegRef, SegRef), &super::Crossing> = self
            .crossings
            .iter()
            .flat_map(|c| [((c.over, c.under), c), ((c.under, c.over), c)])
            .collect();
        let built = Diagram::assemble(self.disk.clone(), strands, &|a, b, at| {
            let oa = SegRef { strand: origin[a.strand], segment: a.segment };
            let ob = SegRef { strand: origin[b.strand], segment: b.segment };
            match by_segs.get(&(oa, ob)) {
                Some(c) if c.over == oa => Ok(a),
                Some(_) => Ok(b),
                None => Err(DiagramError::MissingCrossing { at: at.clone() }),
            }
        });
        let built = match built {
            Ok(d) => d,
            Err(DiagramError::MissingCrossing { .. } | DiagramError::NonTransverse { .. } | DiagramError::TriplePoint { .. }) => {
                return Ok(None)
            }
            Err(DiagramError::OutsideDisk { .. } | DiagramError::ThroughPuncture { .. }) => return Ok(None),
            Err(e) => return Err(e),
        };
        let expected: usize = self.crossings.iter().map(|c| mult[c.over.strand] * mult[c.under.strand]).sum();
        if built.crossings.len() != expected {
            return Ok(None);
        }
        Ok(Some(built))
    }
}
