//! Skein algebras of marked annuli.
//!
//! [`AioElt`] is a Laurent polynomial in `u` (one marked point on each
//! boundary circle); closed cores act on it from either side through the
//! bullet products. [`AooElt`] is an element `b1(z) u1 + b0(z) u0` of the
//! free module for two marked points on one boundary circle.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::chebyshev::{cheb_s, cheb_t, to_t_basis, PolyZ};
use crate::rings::{specialize, CycNum, LaurentInt, Poly, RootSpec, Ring};

/// Laurent polynomial in `u` with coefficients in `C`.
#[derive(Clone, PartialEq, Eq)]
pub struct AioElt<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Ring> AioElt<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// `c u^k`.
    pub fn mono(c: C, k: i64) -> Self {
        let mut r = Self::zero();
        r.add_term(k, c);
        r
    }

    /// The unit `e = u^0`.
    pub fn e() -> Self {
        Self::mono(C::one(), 0)
    }

    pub fn add_term(&mut self, k: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let cur = self.terms.remove(&k).unwrap_or_else(C::zero) + c;
        if !cur.is_zero() {
            self.terms.insert(k, cur);
        }
    }

    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &other.terms {
            r.add_term(*k, c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut r = Self::zero();
        for (k, a) in &self.terms {
            r.add_term(*k, a.clone() * c.clone());
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                r.add_term(i + j, a.clone() * b.clone());
            }
        }
        r
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> AioElt<D> {
        let mut r = AioElt::zero();
        for (k, c) in &self.terms {
            r.add_term(*k, f(c));
        }
        r
    }
}

impl AioElt<LaurentInt> {
    /// `a u^k + b u^-k`, the pattern of every closed form below.
    fn pair(k: i64, a: LaurentInt, b: LaurentInt) -> Self {
        let mut r = Self::zero();
        r.add_term(k, a);
        r.add_term(-k, b);
        r
    }

    pub fn specialize(&self, xi: RootSpec) -> AioElt<CycNum> {
        self.map(|c| specialize(c, xi))
    }
}

/// `z • x` with `z • u^k = t u^(k+1) + t^-1 u^(k-1)`.
fn z_left(x: &AioElt<LaurentInt>) -> AioElt<LaurentInt> {
    let mut r = AioElt::zero();
    for (k, c) in x.terms() {
        r.add_term(k + 1, c.shift(1));
        r.add_term(k - 1, c.shift(-1));
    }
    r
}

/// `x • z` with `u^k • z = t^-1 u^(k+1) + t u^(k-1)`.
fn z_right(x: &AioElt<LaurentInt>) -> AioElt<LaurentInt> {
    let mut r = AioElt::zero();
    for (k, c) in x.terms() {
        r.add_term(k + 1, c.shift(-1));
        r.add_term(k - 1, c.shift(1));
    }
    r
}

fn horner(p: &PolyZ, x: &AioElt<LaurentInt>, step: fn(&AioElt<LaurentInt>) -> AioElt<LaurentInt>) -> AioElt<LaurentInt> {
    let mut acc = AioElt::zero();
    for c in p.coeffs().iter().rev() {
        acc = step(&acc).add(&x.scale(c));
    }
    acc
}

/// `p(z) • x`: the closed core placed on the inner side of `x`.
pub fn core_bullet_left(p: &PolyZ, x: &AioElt<LaurentInt>) -> AioElt<LaurentInt> {
    horner(p, x, z_left)
}

/// `x • p(z)`.
pub fn core_bullet_right(x: &AioElt<LaurentInt>, p: &PolyZ) -> AioElt<LaurentInt> {
    horner(p, x, z_right)
}

/// `p • e - e • p` over the ground ring.
pub fn commutator_generic(p: &PolyZ) -> AioElt<LaurentInt> {
    let e = AioElt::e();
    core_bullet_left(p, &e).sub(&core_bullet_right(&e, p))
}

/// `sum_j c_j (t^j - t^-j)(u^j - u^-j)` for `p = const + sum_j c_j T_j`.
pub fn commutator_closed_form(p: &PolyZ) -> AioElt<LaurentInt> {
    let exp = to_t_basis(p);
    let mut r = AioElt::zero();
    for j in exp.support() {
        let j = j as i64;
        let f = &exp.coeffs[j as usize] * &LaurentInt::from_terms([(j, 1), (-j, -1)]);
        r = r.add(&AioElt::pair(j, f.clone(), -f));
    }
    r
}

pub fn commutator(p: &PolyZ, xi: RootSpec) -> AioElt<CycNum> {
    commutator_generic(p).specialize(xi)
}

/// Whether `p(z)` commutes with `e` at `t = xi`; the commutator is returned
/// as the certificate either way.
pub fn is_central(p: &PolyZ, xi: RootSpec) -> (bool, AioElt<CycNum>) {
    let c = commutator(p, xi);
    (c.is_zero(), c)
}

/// `T_N • e + e • T_N` at `t = xi`.
pub fn skew_test(big_n: u32, xi: RootSpec) -> AioElt<CycNum> {
    let p = cheb_t::<LaurentInt>(big_n);
    let e = AioElt::e();
    core_bullet_left(&p, &e).add(&core_bullet_right(&e, &p)).specialize(xi)
}

/// `(xi^N + xi^-N)(u^N + u^-N)`.
pub fn skew_closed_form(big_n: u32, xi: RootSpec) -> AioElt<CycNum> {
    let n = big_n as i64;
    let f = xi.power(n) + xi.power(-n);
    let mut r = AioElt::zero();
    r.add_term(n, f.clone());
    r.add_term(-n, f);
    r
}

impl<C: Ring> fmt::Display for AioElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*u^{k}")?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for AioElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnnulusError {
    #[error("u_k is only given by its closed form for k >= 1; the arc u_0 differs from it by a framing factor")]
    UkAtZero,
    #[error("psi is defined on polynomials without a constant T-component (constant {0})")]
    ConstantTerm(String),
}

/// `b1(z) u1 + b0(z) u0`.
#[derive(Clone, PartialEq)]
pub struct AooElt {
    pub b1: PolyZ,
    pub b0: PolyZ,
}

impl AooElt {
    pub fn new(b1: PolyZ, b0: PolyZ) -> Self {
        Self { b1, b0 }
    }

    pub fn zero() -> Self {
        Self::new(Poly::zero(), Poly::zero())
    }

    pub fn u0() -> Self {
        Self::new(Poly::zero(), Poly::one())
    }

    pub fn u1() -> Self {
        Self::new(Poly::one(), Poly::zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.b1.clone() + o.b1.clone(), self.b0.clone() + o.b0.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.b1.clone() - o.b1.clone(), self.b0.clone() - o.b0.clone())
    }

    pub fn scale(&self, c: &LaurentInt) -> Self {
        Self::new(self.b1.scale(c), self.b0.scale(c))
    }

    /// Module action of the core: multiply both coordinates by `z`.
    pub fn times_z(&self) -> Self {
        Self::new(self.b1.shift_z(), self.b0.shift_z())
    }

    pub fn is_zero(&self) -> bool {
        self.b1.is_zero() && self.b0.is_zero()
    }
}

impl fmt::Display for AooElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*u1 + ({})*u0", self.b1, self.b0)
    }
}

impl fmt::Debug for AooElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn s(k: i64) -> PolyZ {
    cheb_s::<LaurentInt>(k)
}

/// `u_k = t^(k-1) S_(k-1)(z) u1 + t^(k-3) S_(k-2)(z) u0`.
pub fn u_k(k: u32) -> Result<AooElt, AnnulusError> {
    if k == 0 {
        return Err(AnnulusError::UkAtZero);
    }
    let k = k as i64;
    Ok(AooElt::new(s(k - 1).scale(&LaurentInt::t(k - 1)), s(k - 2).scale(&LaurentInt::t(k - 3))))
}

/// `v_k = t^(2-k) S_(k-1)(z) u1 + t^-k S_k(z) u0`.
pub fn v_k(k: u32) -> AooElt {
    let k = k as i64;
    AooElt::new(s(k - 1).scale(&LaurentInt::t(2 - k)), s(k).scale(&LaurentInt::t(-k)))
}

/// `Psi(T_k) = -t^(k+3) u_k + t^-k v_k`, extended linearly.
pub fn psi(p: &PolyZ) -> Result<AooElt, AnnulusError> {
    let exp = to_t_basis(p);
    if !exp.constant.is_zero() {
        return Err(AnnulusError::ConstantTerm(exp.constant.to_string()));
    }
    let mut r = AooElt::zero();
    for j in exp.support() {
        let k = j as u32;
        let term = v_k(k).scale(&LaurentInt::t(-(k as i64))).sub(&u_k(k)?.scale(&LaurentInt::t(k as i64 + 3)));
        r = r.add(&term.scale(&exp.coeffs[j]));
    }
    Ok(r)
}

/// `u1 [t^2 (t^-2k - t^2k) S_(k-1)] + u0 [t^-2k S_k - t^2k S_(k-2)]`.
pub fn psi_closed_form(k: u32) -> AooElt {
    let k = k as i64;
    let a = LaurentInt::from_terms([(2 - 2 * k, 1), (2 + 2 * k, -1)]);
    AooElt::new(s(k - 1).scale(&a), s(k).scale(&LaurentInt::t(-2 * k)) - s(k - 2).scale(&LaurentInt::t(2 * k)))
}

/// `t u_(k-1) z - t^2 u_(k-2)`, reading `u_0` as the basis arc.
pub fn u_recursion_rhs(k: u32) -> AooElt {
    assert!(k >= 2);
    let u = |j: u32| if j == 0 { Ok(AooElt::u0()) } else { u_k(j) };
    let prev = u(k - 1).expect("k - 1 >= 1");
    let prev2 = u(k - 2).expect("basis arc or closed form");
    prev.times_z().scale(&LaurentInt::t(1)).sub(&prev2.scale(&LaurentInt::t(2)))
}

/// `t^-1 v_(k-1) z - t^-2 v_(k-2)`.
pub fn v_recursion_rhs(k: u32) -> AooElt {
    assert!(k >= 2);
    v_k(k - 1).times_z().scale(&LaurentInt::t(-1)).sub(&v_k(k - 2).scale(&LaurentInt::t(-2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(terms: &[(i64, i64)]) -> LaurentInt {
        LaurentInt::from_terms(terms.iter().copied())
    }

    #[test]
    fn core_on_unit() {
        let z = PolyZ::z();
        let e = AioElt::e();
        assert_eq!(core_bullet_left(&z, &e), AioElt::pair(1, l(&[(1, 1)]), l(&[(-1, 1)])));
        let t2 = cheb_t::<LaurentInt>(2);
        assert_eq!(core_bullet_left(&t2, &e), AioElt::pair(2, l(&[(2, 1)]), l(&[(-2, 1)])));
        let five = PolyZ::constant(LaurentInt::constant(5));
        assert_eq!(core_bullet_left(&five, &e), e.scale(&LaurentInt::constant(5)));
    }

    #[test]
    fn small_closed_forms() {
        assert_eq!(u_k(2).unwrap(), AooElt::new(PolyZ::z().scale(&LaurentInt::t(1)), PolyZ::constant(LaurentInt::t(-1))));
        assert_eq!(v_k(1), AooElt::new(PolyZ::constant(LaurentInt::t(1)), PolyZ::z().scale(&LaurentInt::t(-1))));
        assert_eq!(v_k(0), AooElt::u0());
        assert_eq!(u_k(0), Err(AnnulusError::UkAtZero));
        let psi1 = psi(&PolyZ::z()).unwrap();
        assert_eq!(psi1, AooElt::new(PolyZ::constant(l(&[(0, 1), (4, -1)])), PolyZ::z().scale(&LaurentInt::t(-2))));
        assert!(psi(&cheb_t(0)).is_err());
    }

    #[test]
    fn u_recursion_fails_at_two() {
        assert_ne!(u_recursion_rhs(2), u_k(2).unwrap());
        assert_eq!(u_recursion_rhs(3), u_k(3).unwrap());
    }
}
