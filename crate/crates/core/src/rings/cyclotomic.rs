use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{LaurentInt, Poly, Ring, SkeinPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSpecError {
    #[error("cyclotomic level must be positive")]
    ZeroLevel,
    #[error("malformed root of unity `{0}` (expected n/a)")]
    Malformed(String),
}

/// The root of unity `zeta_n^a`, with `a` reduced mod `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSpec {
    n: u32,
    a: u32,
}

impl RootSpec {
    pub fn new(n: u32, a: i64) -> Result<Self, RootSpecError> {
        if n == 0 {
            return Err(RootSpecError::ZeroLevel);
        }
        Ok(Self { n, a: a.rem_euclid(n as i64) as u32 })
    }

    /// `zeta_n`.
    pub fn primitive(n: u32) -> Self {
        Self::new(n, 1).expect("positive level")
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    pub fn exponent(&self) -> u32 {
        self.a
    }

    /// Multiplicative order of the root itself.
    pub fn order(&self) -> u64 {
        order_of_power(*self, 1)
    }

    /// `xi^k` as an element of `Z[zeta_n]`.
    pub fn power(&self, k: i64) -> CycNum {
        CycNum::zeta_pow(self.n, k * self.a as i64)
    }

    /// Every `zeta_n^a` with `1 <= n <= max_level` and `0 <= a < n`.
    pub fn all_up_to(max_level: u32) -> impl Iterator<Item = RootSpec> {
        (1..=max_level).flat_map(|n| (0..n).map(move |a| RootSpec { n, a }))
    }
}

impl fmt::Display for RootSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.n, self.a)
    }
}

impl FromStr for RootSpec {
    type Err = RootSpecError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootSpecError::Malformed(s.to_string());
        let (n, a) = s.split_once('/').ok_or_else(bad)?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        RootSpec::new(n, a)
    }
}

/// Multiplicative order of `xi^m`.
pub fn order_of_power(xi: RootSpec, m: i64) -> u64 {
    let n = xi.n as i64;
    let e = (xi.a as i64 * m.rem_euclid(n)).rem_euclid(n);
    (n / n.gcd(&e)) as u64
}

/// `N = ord(xi^4)` and `epsilon = xi^(N^2)`.
pub fn epsilon_of(xi: RootSpec) -> (u64, CycNum) {
    let big_n = order_of_power(xi, 4);
    let sq = (big_n * big_n) as i64;
    (big_n, xi.power(sq))
}

/// `lambda_k = -(t^(2k+2) + t^(-2k-2))`.
pub fn lambda_k(k: u32) -> LaurentInt {
    let e = 2 * k as i64 + 2;
    LaurentInt::from_terms([(e, -1), (-e, -1)])
}

pub fn lambda_k_at(k: u32, xi: RootSpec) -> CycNum {
    specialize(&lambda_k(k), xi)
}

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached_phi(n: u32) -> Arc<Vec<BigInt>> {
    if let Some(p) = phi_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let p = Arc::new(compute_cyclotomic(n));
    phi_cache().write().unwrap().insert(n, p.clone());
    p
}

fn compute_cyclotomic(n: u32) -> Vec<BigInt> {
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let div = cached_phi(d);
        num = div_monic(&num, &div);
    }
    num
}

// Exact division by a monic polynomial; callers guarantee divisibility.
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// The `n`-th cyclotomic polynomial, coefficients in ascending degree.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic level must be positive");
    cached_phi(n).as_ref().clone()
}

/// Element of `Z[zeta_n]`, stored as its reduced representative modulo the
/// `n`-th cyclotomic polynomial.
///
/// Level 0 marks an integer constant, which is compatible with every level.
#[derive(Clone, Default)]
pub struct CycNum {
    level: u32,
    rep: Vec<BigInt>,
}

impl CycNum {
    pub fn integer(c: impl Into<BigInt>) -> Self {
        let mut res = Self { level: 0, rep: vec![c.into()] };
        res.trim();
        res
    }

    /// `zeta_n^k`.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut rep = vec![BigInt::zero(); e + 1];
        rep[e] = BigInt::one();
        Self::reduced(n, rep)
    }

    /// Reduces an arbitrary coefficient vector (ascending powers of `zeta_n`).
    pub fn reduced(n: u32, raw: Vec<BigInt>) -> Self {
        assert!(n >= 1);
        let nn = n as usize;
        // fold mod x^n - 1 first; Phi_n divides it
        let mut folded = vec![BigInt::zero(); nn.min(raw.len()).max(1)];
        for (i, c) in raw.into_iter().enumerate() {
            if !c.is_zero() {
                folded[i % nn] += c;
            }
        }
        let phi = cached_phi(n);
        let d = phi.len() - 1;
        for i in (d..folded.len()).rev() {
            let c = std::mem::take(&mut folded[i]);
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                folded[i - d + j] -= &c * &phi[j];
            }
        }
        folded.truncate(d.max(1));
        let mut res = Self { level: n, rep: folded };
        res.trim();
        res
    }

    fn trim(&mut self) {
        while self.rep.last().is_some_and(|c| c.is_zero()) {
            self.rep.pop();
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Coefficients of the reduced representative.
    pub fn representative(&self) -> &[BigInt] {
        &self.rep
    }

    fn join_level(a: u32, b: u32) -> u32 {
        match (a, b) {
            (0, l) | (l, 0) => l,
            (l, m) => {
                assert_eq!(l, m, "mixing cyclotomic levels {l} and {m}");
                l
            }
        }
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.rep.len() > 1 && other.rep.len() > 1 && self.level != other.level {
            return false;
        }
        self.rep == other.rep
    }
}

impl Eq for CycNum {}

impl Zero for CycNum {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.rep.is_empty()
    }
}

impl One for CycNum {
    fn one() -> Self {
        Self::integer(1)
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        let level = Self::join_level(self.level, rhs.level);
        let (mut long, short) = if self.rep.len() >= rhs.rep.len() {
            (self.rep, rhs.rep)
        } else {
            (rhs.rep, self.rep)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] += c;
        }
        let mut res = CycNum { level, rep: long };
        res.trim();
        res
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(mut self) -> CycNum {
        for c in &mut self.rep {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        self + (-rhs)
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        if self.is_zero() || rhs.is_zero() {
            return CycNum::zero();
        }
        let level = Self::join_level(self.level, rhs.level);
        let mut raw = vec![BigInt::zero(); self.rep.len() + rhs.rep.len() - 1];
        for (i, a) in self.rep.iter().enumerate() {
            for (j, b) in rhs.rep.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        if level == 0 {
            let mut res = CycNum { level, rep: raw };
            res.trim();
            res
        } else {
            CycNum::reduced(level, raw)
        }
    }
}

impl Ring for CycNum {
    fn from_int(n: i64) -> Self {
        Self::integer(n)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.rep.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*w^{k}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[w=zeta{}] {}", self.level, self)
    }
}

/// The ring map `Z[t, t^-1] -> Z[zeta_n]` sending `t` to `xi`.
pub fn specialize(p: &LaurentInt, xi: RootSpec) -> CycNum {
    let n = xi.n as i64;
    let mut raw = vec![BigInt::zero(); xi.n as usize];
    for (k, c) in p.terms() {
        let e = (k.rem_euclid(n) * xi.a as i64).rem_euclid(n) as usize;
        raw[e] += c;
    }
    CycNum::reduced(xi.n, raw)
}

pub fn specialize_poly(p: &Poly<LaurentInt>, xi: RootSpec) -> Poly<CycNum> {
    Poly::new(p.coeffs().iter().map(|c| specialize(c, xi)).collect())
}

pub fn specialize_skein(p: &SkeinPoly<LaurentInt>, xi: RootSpec) -> SkeinPoly<CycNum> {
    p.map_coeffs(|c| specialize(c, xi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_vanishes_at_its_root() {
        for n in 1..=48u32 {
            let phi = cyclotomic_polynomial(n);
            let mut acc = CycNum::zero();
            for (k, c) in phi.iter().enumerate() {
                acc = acc + CycNum::zeta_pow(n, k as i64) * CycNum::integer(c.clone());
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta_{n}) != 0");
        }
    }

    #[test]
    fn lambda_zero_specializations() {
        let l0 = lambda_k(0);
        assert_eq!(specialize(&l0, RootSpec::primitive(4)), CycNum::integer(2));
        assert!(specialize(&l0, RootSpec::primitive(8)).is_zero());
        assert_eq!(lambda_k_at(1, RootSpec::primitive(8)), CycNum::integer(2));
        assert_eq!(lambda_k(2), LaurentInt::from_terms([(6, -1), (-6, -1)]));
    }

    #[test]
    fn specialization_at_one_sums_coefficients() {
        let p = LaurentInt::from_terms([(-3, 4), (2, -9), (7, 1)]);
        assert_eq!(specialize(&p, RootSpec::primitive(1)), CycNum::integer(-4));
    }

    #[test]
    fn orders() {
        assert_eq!(order_of_power(RootSpec::primitive(12), 4), 3);
        assert_eq!(order_of_power(RootSpec::primitive(4), 2), 2);
        assert_eq!(order_of_power(RootSpec::new(8, 3).unwrap(), 4), 2);
        assert_eq!(RootSpec::new(12, 4).unwrap().order(), 3);
        assert_eq!(RootSpec::new(5, 0).unwrap().order(), 1);
    }

    #[test]
    fn epsilon_examples() {
        let (n, e) = epsilon_of(RootSpec::primitive(4));
        assert_eq!((n, e), (1, CycNum::zeta_pow(4, 1)));
        let (n, e) = epsilon_of(RootSpec::primitive(8));
        assert_eq!((n, e), (2, CycNum::integer(-1)));
        let (n, e) = epsilon_of(RootSpec::primitive(12));
        assert_eq!((n, e), (3, CycNum::zeta_pow(12, 9)));
    }

    #[test]
    fn epsilon_is_a_fourth_root_of_one() {
        for xi in RootSpec::all_up_to(48) {
            let (_, e) = epsilon_of(xi);
            assert!(e.pow(4) == CycNum::one(), "{xi}");
        }
    }

    #[test]
    fn parse_root_spec() {
        assert_eq!("8/3".parse::<RootSpec>().unwrap(), RootSpec::new(8, 3).unwrap());
        assert_eq!("12/-1".parse::<RootSpec>().unwrap(), RootSpec::new(12, 11).unwrap());
        assert!("0/1".parse::<RootSpec>().is_err());
        assert!("8".parse::<RootSpec>().is_err());
    }
}
