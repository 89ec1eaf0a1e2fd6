//! Local modifications: smoothing a crossing and inserting a curl.

use num_traits::{One, ToPrimitive, Zero};

use super::geom::{dot, pow2_floor, q, qi, Point, Q};
use super::statesum::{OVER_IN, OVER_OUT, UNDER_IN, UNDER_OUT};
use super::{seg, Diagram, DiagramError, SegRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothing {
    /// The resolution with weight `t`.
    A,
    /// The resolution with weight `t^-1`.
    B,
}

/// A polyline between two crossing ends, with the old segment of each piece.
struct Path {
    from: usize,
    to: usize,
    points: Vec<Point>,
    origins: Vec<Option<SegRef>>,
}

impl Diagram {
    /// Replaces crossing `c` by one of its two smoothings.
    pub fn smooth_crossing(&self, c: usize, kind: Smoothing) -> Result<Diagram, DiagramError> {
        let x = &self.crossings[c];
        let model = self.state_model();
        let pairs = model.pairings[c][if kind == Smoothing::A { 0 } else { 1 }];
        let mut r = self.clearance(&x.at, [x.over, x.under]).min(q(1, 64));
        for _ in 0..40 {
            if let Ok(d) = self.try_smooth(x.over, x.under, &x.at, pairs, &r, c) {
                return Ok(d);
            }
            r /= qi(2);
        }
        Err(DiagramError::Placement("smoothing".into()))
    }

    /// A power of two below a quarter of the distance from `at` to every
    /// vertex, every other crossing and every segment not in `skip`.
    fn clearance(&self, at: &Point, skip: [SegRef; 2]) -> Q {
        let mut best: Option<Q> = None;
        let mut consider = |d2: Q| {
            if best.as_ref().is_none_or(|b| d2 < *b) {
                best = Some(d2);
            }
        };
        for (s, pts) in self.strands.iter().enumerate() {
            for i in 0..pts.len() {
                let (a, b) = seg(pts, i);
                consider(a.sub(at).norm_sq());
                if !skip.contains(&SegRef { strand: s, segment: i }) {
                    consider(segment_dist_sq(at, a, b));
                }
            }
        }
        for x in self.crossings.iter().filter(|x| x.at != *at) {
            consider(x.at.sub(at).norm_sq());
        }
        let d2 = best.and_then(|d2| d2.to_f64()).unwrap_or(1.0);
        pow2_floor(d2.sqrt() / 4.0)
    }

    fn try_smooth(
        &self,
        over: SegRef,
        under: SegRef,
        at: &Point,
        pairs: [(usize, usize); 2],
        r: &Q,
        c: usize,
    ) -> Result<Diagram, DiagramError> {
        // end points around the crossing
        let dir = |s: SegRef| {
            let pts = &self.strands[s.strand];
            let d = pts[(s.segment + 1) % pts.len()].sub(&pts[s.segment]);
            d.scale(&(Q::one() / d.l1()))
        };
        let (dover, dunder) = (dir(over), dir(under));
        let mut end_pt = vec![Point::new(Q::zero(), Q::zero()); 4];
        end_pt[OVER_OUT] = at.add(&dover.scale(r));
        end_pt[OVER_IN] = at.sub(&dover.scale(r));
        end_pt[UNDER_OUT] = at.add(&dunder.scale(r));
        end_pt[UNDER_IN] = at.sub(&dunder.scale(r));

        // cut strands at the crossing and collect the paths between ends
        let cr = &self.crossings[c];
        let mut paths = Vec::new();
        let involved: Vec<usize> = if over.strand == under.strand { vec![over.strand] } else { vec![over.strand, under.strand] };
        for &s in &involved {
            let pts = &self.strands[s];
            let n = pts.len();
            // (segment, param, out end, in end)
            let mut cuts: Vec<(usize, Q, usize, usize)> = Vec::new();
            if over.strand == s {
                cuts.push((over.segment, cr.over_param.clone(), OVER_OUT, OVER_IN));
            }
            if under.strand == s {
                cuts.push((under.segment, cr.under_param.clone(), UNDER_OUT, UNDER_IN));
            }
            cuts.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
            for i in 0..cuts.len() {
                let (seg_a, ref pa, out_end, _) = cuts[i];
                let (seg_b, ref pb, _, in_end) = cuts[(i + 1) % cuts.len()];
                let diff = (seg_b + n - seg_a) % n;
                let m = if diff == 0 && (cuts.len() == 1 || pb < pa) { n } else { diff };
                let mut points = vec![end_pt[out_end].clone()];
                let mut origins = vec![Some(SegRef { strand: s, segment: seg_a })];
                for k in 1..=m {
                    points.push(pts[(seg_a + k) % n].clone());
                    origins.push(Some(SegRef { strand: s, segment: (seg_a + k) % n }));
                }
                points.push(end_pt[in_end].clone());
                paths.push(Path { from: out_end, to: in_end, points, origins });
            }
        }

        // trace cycles: each end lies on one path and one chord
        let partner = |e: usize| {
            pairs.iter().find_map(|&(a, b)| if a == e { Some(b) } else if b == e { Some(a) } else { None }).unwrap()
        };
        let mut used = vec![false; paths.len()];
        let mut new_strands: Vec<Vec<Point>> = Vec::new();
        let mut new_origins: Vec<Vec<Option<SegRef>>> = Vec::new();
        for first in 0..paths.len() {
            if used[first] {
                continue;
            }
            let mut pts: Vec<Point> = Vec::new();
            let mut ors: Vec<Option<SegRef>> = Vec::new();
            let (mut cur, mut forward) = (first, true);
            while !used[cur] {
                used[cur] = true;
                let p = &paths[cur];
                let exit = if forward {
                    pts.extend(p.points.iter().cloned());
                    ors.extend(p.origins.iter().cloned());
                    p.to
                } else {
                    pts.extend(p.points.iter().rev().cloned());
                    ors.extend(p.origins.iter().rev().cloned());
                    p.from
                };
                ors.push(None);
                let next_end = partner(exit);
                let (np, nf) = paths
                    .iter()
                    .enumerate()
                    .find_map(|(i, q)| match () {
                        _ if q.from == next_end => Some((i, true)),
                        _ if q.to == next_end => Some((i, false)),
                        _ => None,
                    })
                    .unwrap();
                cur = np;
                forward = nf;
            }
            new_strands.push(pts);
            new_origins.push(ors);
        }
        let keep: Vec<usize> = (0..self.strands.len()).filter(|s| !involved.contains(s)).collect();
        let base = keep.len();
        let mut strands: Vec<Vec<Point>> = keep.iter().map(|&s| self.strands[s].clone()).collect();
        strands.extend(new_strands);
        self.inherit(
            strands,
            &|r| {
                if r.strand < base {
                    Some(SegRef { strand: keep[r.strand], segment: r.segment })
                } else {
                    new_origins[r.strand - base][r.segment]
                }
            },
            &|_, _, at| Err(DiagramError::MissingCrossing { at: at.clone() }),
        )
    }

    /// Inserts a small kink into the middle of segment `segment` of strand
    /// `strand`, multiplying the evaluation by `-t^3` (or `-t^-3` if
    /// `negative`).
    pub fn add_curl(&self, strand: usize, segment: usize, negative: bool) -> Result<Diagram, DiagramError> {
        let pts = &self.strands[strand];
        let n = pts.len();
        let a = &pts[segment];
        let b = &pts[(segment + 1) % n];
        let d = b.sub(a);
        let u = d.scale(&(Q::one() / d.l1()));
        let v = d.left_normal_l1();
        let mid = a.add(&d.scale(&q(1, 2)));
        let mut eps = q(1, 16);
        for _ in 0..40 {
            let at = |x: i64, y: i64| mid.add(&u.scale(&(&eps * qi(x)))).add(&v.scale(&(&eps * qi(y))));
            let kink = [at(-1, 0), at(1, 2), at(-1, 2), at(1, 0)];
            let mut new_pts = pts[..=segment].to_vec();
            new_pts.extend(kink.iter().cloned());
            new_pts.extend(pts[segment + 1..].iter().cloned());
            let mut strands = self.strands.clone();
            strands[strand] = new_pts;
            let ins = segment + 1;
            let origin = |r: SegRef| {
                if r.strand != strand {
                    return Some(r);
                }
                match r.segment {
                    s if s < segment => Some(r),
                    s if s == segment || (ins..ins + 4).contains(&s) => Some(SegRef { strand, segment }),
                    s => Some(SegRef { strand, segment: s - 4 }),
                }
            };
            let crossing = at(0, 1);
            let res = self.inherit(strands, &origin, &|p, r, x| {
                if *x != crossing {
                    return Err(DiagramError::MissingCrossing { at: x.clone() });
                }
                // p and r are the segments S->A (ins) and B->C (ins + 2)
                let first = if p.segment < r.segment { p } else { r };
                let second = if p.segment < r.segment { r } else { p };
                Ok(if negative { first } else { second })
            });
            if let Ok(d) = res {
                if d.crossings.len() == self.crossings.len() + 1 {
                    return Ok(d);
                }
            }
            eps /= qi(2);
        }
        Err(DiagramError::Placement("curl".into()))
    }
}

/// Exact squared distance from `p` to the segment `ab`.
fn segment_dist_sq(p: &Point, a: &Point, b: &Point) -> Q {
    let ab = b.sub(a);
    let len2 = ab.norm_sq();
    let t = if len2.is_zero() { Q::zero() } else { (dot(&p.sub(a), &ab) / len2).clamp(Q::zero(), Q::one()) };
    a.add(&ab.scale(&t)).sub(p).norm_sq()
}
