use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{LaurentInt, Poly, Ring};

/// Monomial in the curve classes of a punctured disk.
///
/// Entry `i` is the exponent of the class enclosing the puncture subset with
/// bitmask `i + 1`. For two punctures the order is `(x1, x2, y)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit(punctures: u32) -> Self {
        Self(vec![0; class_count(punctures)])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of the class with the given non-empty puncture bitmask.
    pub fn exponent(&self, mask: u32) -> u32 {
        self.0[mask as usize - 1]
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Standard twice-punctured disk: `x1^a x2^b y^c`.
    pub fn x1x2y(a: u32, b: u32, c: u32) -> Self {
        Self(vec![a, b, c])
    }
}

pub(crate) fn class_count(punctures: u32) -> usize {
    (1usize << punctures) - 1
}

/// Left, right, double and `y`-degree of an element of `R[x1, x2, y]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Degrees {
    pub left: u32,
    pub right: u32,
    pub double: u32,
    pub y: u32,
}

impl Degrees {
    pub fn of_monomial(m: &Monomial) -> Self {
        let e = m.exponents();
        assert_eq!(e.len(), 3, "degrees are defined on the twice-punctured disk");
        let (a1, a2, b) = (e[0], e[1], e[2]);
        Self { left: a1 + b, right: a2 + b, double: a1 + a2 + 2 * b, y: b }
    }
}

/// Polynomial in the curve classes of a disk with `punctures` punctures.
#[derive(Clone, PartialEq)]
pub struct SkeinPoly<C> {
    punctures: u32,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> SkeinPoly<C> {
    pub fn zero(punctures: u32) -> Self {
        Self { punctures, terms: BTreeMap::new() }
    }

    pub fn constant(punctures: u32, c: C) -> Self {
        Self::term(punctures, Monomial::unit(punctures), c)
    }

    pub fn one(punctures: u32) -> Self {
        Self::constant(punctures, C::one())
    }

    pub fn term(punctures: u32, m: Monomial, c: C) -> Self {
        assert_eq!(m.0.len(), class_count(punctures));
        let mut res = Self::zero(punctures);
        res.add_term(m, c);
        res
    }

    /// The class of a simple closed curve enclosing the punctures in `mask`.
    pub fn generator(punctures: u32, mask: u32) -> Self {
        assert!(mask > 0 && (mask as usize) <= class_count(punctures));
        let mut m = Monomial::unit(punctures);
        m.0[mask as usize - 1] = 1;
        Self::term(punctures, m, C::one())
    }

    pub fn x1() -> Self {
        Self::generator(2, 1)
    }

    pub fn x2() -> Self {
        Self::generator(2, 2)
    }

    pub fn y() -> Self {
        Self::generator(2, 3)
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut res = Self::zero(self.punctures);
        for (m, a) in &self.terms {
            res.add_term(m.clone(), a.clone() * c.clone());
        }
        res
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> SkeinPoly<D> {
        let mut res = SkeinPoly::zero(self.punctures);
        for (m, c) in &self.terms {
            res.add_term(m.clone(), f(c));
        }
        res
    }

    /// Exchange of `x1` and `x2` induced by the half-turn of the standard disk.
    pub fn swap_sigma(&self) -> Self {
        assert_eq!(self.punctures, 2);
        let mut res = Self::zero(2);
        for (m, c) in &self.terms {
            let e = &m.0;
            res.add_term(Monomial(vec![e[1], e[0], e[2]]), c.clone());
        }
        res
    }

    /// Maximal degrees over all monomials with non-zero coefficient.
    pub fn degrees(&self) -> Degrees {
        self.terms.keys().map(Degrees::of_monomial).fold(Degrees::default(), |a, d| Degrees {
            left: a.left.max(d.left),
            right: a.right.max(d.right),
            double: a.double.max(d.double),
            y: a.y.max(d.y),
        })
    }

    /// Membership in the span of `x1^a1 x2^a2 y^b` with `a_i + b <= n` and
    /// even double degree.
    pub fn in_v_n(&self, n: u32) -> bool {
        self.terms.keys().map(Degrees::of_monomial).all(|d| d.left <= n && d.right <= n && d.double % 2 == 0)
    }

    /// The part whose `y`-exponent equals `b`.
    pub fn y_slice(&self, b: u32) -> Self {
        let mut res = Self::zero(self.punctures);
        for (m, c) in &self.terms {
            if m.0[2] == b {
                res.add_term(m.clone(), c.clone());
            }
        }
        res
    }

    /// `p(x)` computed with the algebra structure (Horner's rule).
    pub fn apply_poly(p: &Poly<C>, x: &Self) -> Self {
        let mut acc = Self::zero(x.punctures);
        for c in p.coeffs().iter().rev() {
            acc = acc * x.clone() + Self::constant(x.punctures, c.clone());
        }
        acc
    }

    fn class_name(punctures: u32, idx: usize) -> String {
        if punctures == 2 {
            return ["x1", "x2", "y"][idx].to_string();
        }
        let mask = idx + 1;
        let members: Vec<String> =
            (0..punctures as usize).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
        format!("c{{{}}}", members.join(","))
    }
}

impl SkeinPoly<LaurentInt> {
    /// Image under `t -> t^-1`.
    pub fn invert_t(&self) -> Self {
        self.map_coeffs(|c| c.invert_t())
    }
}

impl<C: Ring> Add for SkeinPoly<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.punctures, rhs.punctures);
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: Ring> Neg for SkeinPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { punctures: self.punctures, terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<C: Ring> Sub for SkeinPoly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Ring> Mul for SkeinPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.punctures, rhs.punctures);
        let mut res = Self::zero(self.punctures);
        for (m1, a) in &self.terms {
            for (m2, b) in &rhs.terms {
                res.add_term(m1.mul(m2), a.clone() * b.clone());
            }
        }
        res
    }
}

impl<C: Ring> fmt::Display for SkeinPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (idx, e) in m.0.iter().enumerate() {
                write!(f, "*{}^{e}", Self::class_name(self.punctures, idx))?;
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for SkeinPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = SkeinPoly<LaurentInt>;

    #[test]
    fn degrees_of_x1_squared_y() {
        let d = Degrees::of_monomial(&Monomial::x1x2y(2, 0, 1));
        assert_eq!((d.left, d.right, d.double, d.y), (3, 1, 4, 1));
        assert_eq!(S::one(2).degrees(), Degrees::default());
    }

    #[test]
    fn sigma_swaps_x1_x2_and_fixes_y() {
        let y3 = S::y() * S::y() * S::y();
        assert_eq!(y3.swap_sigma(), y3);
        assert_eq!(S::x1().swap_sigma(), S::x2());
    }

    #[test]
    fn display_form() {
        let p = S::x1() * S::x2().scale(&LaurentInt::t(1)) + S::y().scale(&LaurentInt::t(-1));
        assert_eq!(p.to_string(), "(1*t^-1)*x1^0*x2^0*y^1 + (1*t^1)*x1^1*x2^1*y^0");
    }

    #[test]
    fn v_n_membership() {
        let p = S::x1() * S::x2() + S::y();
        assert!(p.in_v_n(1));
        assert!(!(S::x1()).in_v_n(1));
        assert!(!(S::y() * S::y()).in_v_n(1));
    }
}
