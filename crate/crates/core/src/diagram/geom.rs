//! Exact planar geometry over the rationals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `"p/q"` text form used by the diagram file format.
pub fn format_q(v: &Q) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl Point {
    pub fn new(x: Q, y: Q) -> Self {
        Self { x, y }
    }

    /// Point with coordinates `xn/d`, `yn/d`.
    pub fn frac(xn: i64, yn: i64, d: i64) -> Self {
        Self { x: q(xn, d), y: q(yn, d) }
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, s: &Q) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    pub fn neg(&self) -> Point {
        Point::new(-&self.x, -&self.y)
    }

    pub fn norm_sq(&self) -> Q {
        &self.x * &self.x + &self.y * &self.y
    }

    pub fn l1(&self) -> Q {
        self.x.abs() + self.y.abs()
    }

    /// Left normal, scaled to unit L1 length.
    pub fn left_normal_l1(&self) -> Point {
        let n = self.l1();
        Point::new(-&self.y / &n, &self.x / &n)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64().unwrap_or(f64::NAN), self.y.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_q(&self.x), format_q(&self.y))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn cross(a: &Point, b: &Point) -> Q {
    &a.x * &b.y - &a.y * &b.x
}

pub fn dot(a: &Point, b: &Point) -> Q {
    &a.x * &b.x + &a.y * &b.y
}

/// How two closed segments meet.
#[derive(Debug, Clone, PartialEq)]
pub enum SegMeet {
    Disjoint,
    /// Transverse intersection interior to both; parameters along each.
    Proper { at: Point, s: Q, u: Q },
    /// Any other contact (endpoint touching, collinear overlap).
    Degenerate { at: Point },
}

pub fn meet(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> SegMeet {
    let d1 = a1.sub(a0);
    let d2 = b1.sub(b0);
    let w = b0.sub(a0);
    let denom = cross(&d1, &d2);
    if denom.is_zero() {
        if !cross(&d1, &w).is_zero() {
            return SegMeet::Disjoint;
        }
        // collinear: compare projections on d1
        let len = dot(&d1, &d1);
        let t0 = dot(&w, &d1) / &len;
        let t1 = dot(&b1.sub(a0), &d1) / &len;
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        if hi < Q::zero() || lo > Q::one() {
            return SegMeet::Disjoint;
        }
        let t = if lo > Q::zero() { lo } else { Q::zero() };
        return SegMeet::Degenerate { at: a0.add(&d1.scale(&t)) };
    }
    let s = cross(&w, &d2) / &denom;
    let u = cross(&w, &d1) / &denom;
    let zero = Q::zero();
    let one = Q::one();
    if s < zero || s > one || u < zero || u > one {
        return SegMeet::Disjoint;
    }
    let at = a0.add(&d1.scale(&s));
    if s == zero || s == one || u == zero || u == one {
        return SegMeet::Degenerate { at };
    }
    SegMeet::Proper { at, s, u }
}

pub fn point_on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    let d = b.sub(a);
    let w = p.sub(a);
    if !cross(&d, &w).is_zero() {
        return false;
    }
    let t = dot(&w, &d);
    t >= Q::zero() && t <= dot(&d, &d)
}

/// Parameter of `p` along segment `a -> b` (p assumed on the segment).
pub fn param_on(p: &Point, a: &Point, b: &Point) -> Q {
    let d = b.sub(a);
    dot(&p.sub(a), &d) / dot(&d, &d)
}

/// A ray from `origin` in direction `dir`.
#[derive(Clone, Debug)]
pub struct Ray {
    pub origin: Point,
    pub dir: Point,
}

impl Ray {
    pub fn contains(&self, p: &Point) -> bool {
        let w = p.sub(&self.origin);
        cross(&self.dir, &w).is_zero() && dot(&self.dir, &w) >= Q::zero()
    }

    /// Parameter along `a -> b` at which the segment crosses the ray, if it
    /// does. Endpoints must not lie on the ray's line.
    pub fn hit(&self, a: &Point, b: &Point) -> Option<Q> {
        let ca = cross(&self.dir, &a.sub(&self.origin));
        let cb = cross(&self.dir, &b.sub(&self.origin));
        if ca.signum() == cb.signum() || ca.is_zero() || cb.is_zero() {
            return None;
        }
        let d = b.sub(a);
        let mu = &ca / (&ca - &cb);
        let den = cross(&self.dir, &d);
        // position along the ray
        let lam = cross(&a.sub(&self.origin), &d) / den;
        (lam > Q::zero()).then_some(mu)
    }

    /// A ray from `origin` avoiding every point in `avoid`.
    pub fn avoiding<'a>(origin: &Point, avoid: impl Iterator<Item = &'a Point> + Clone) -> Ray {
        for i in 0i64.. {
            let k = if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 };
            let ray = Ray { origin: origin.clone(), dir: Point::new(qi(97), qi(k)) };
            let mut pts = avoid.clone();
            if !pts.any(|p| p != origin && ray.contains(p)) {
                return ray;
            }
        }
        unreachable!()
    }
}

/// Parity of ray crossings of a closed polyline, i.e. its winding number
/// mod 2 around the ray origin.
pub fn winding_parity(poly: &[Point], origin: &Point) -> bool {
    let ray = Ray::avoiding(origin, poly.iter());
    let n = poly.len();
    (0..n).filter(|&i| ray.hit(&poly[i], &poly[(i + 1) % n]).is_some()).count() % 2 == 1
}

pub fn point_segment_dist(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 { 0.0 } else { (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0) };
    let (cx, cy) = (a.0 + t * dx, a.1 + t * dy);
    ((p.0 - cx).powi(2) + (p.1 - cy).powi(2)).sqrt()
}

/// Largest power of two not exceeding `x` (x > 0), as an exact rational.
pub fn pow2_floor(x: f64) -> Q {
    assert!(x > 0.0 && x.is_finite());
    let e = x.log2().floor() as i32;
    if e >= 0 {
        Q::from_integer(BigInt::from(1) << e as usize)
    } else {
        Q::new(BigInt::one(), BigInt::from(1) << (-e) as usize)
    }
}

pub fn cmp_q(a: &Q, b: &Q) -> Ordering {
    a.cmp(b)
}
