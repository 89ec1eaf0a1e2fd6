use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Ring;

/// Laurent polynomial in `t` with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentInt {
    /// `c * t^k`.
    pub fn mono(c: impl Into<BigInt>, k: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    /// `t^k`.
    pub fn t(k: i64) -> Self {
        Self::mono(1, k)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::mono(c, 0)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut res = Self::zero();
        for (k, c) in terms {
            res.add_term(k, c.into());
        }
        res
    }

    pub fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Sum of all coefficients, i.e. the value at `t = 1`.
    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// The image under `t -> t^-1`.
    pub fn invert_t(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder in `Z[t, t^-1]`.
    pub fn div_exact(&self, divisor: &LaurentInt) -> Option<LaurentInt> {
        let (dmin, dmax) = (divisor.min_degree()?, divisor.max_degree()?);
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = divisor.coeff(dmax);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division on the top degree; each step strictly lowers it.
        while let Some(rmax) = rem.max_degree() {
            let rmin = rem.min_degree().unwrap();
            if rmax - rmin < dmax - dmin {
                return None;
            }
            let (q, r) = rem.coeff(rmax).div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let k = rmax - dmax;
            let step = LaurentInt::mono(q, k);
            rem = rem - divisor.clone() * step.clone();
            quot += &step;
        }
        Some(quot)
    }
}

impl Zero for LaurentInt {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentInt {
    fn one() -> Self {
        Self::t(0)
    }
}

impl From<i64> for LaurentInt {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentInt {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl<'a> AddAssign<&'a LaurentInt> for LaurentInt {
    fn add_assign(&mut self, rhs: &'a LaurentInt) {
        for (k, c) in &rhs.coeffs {
            self.add_term(*k, c.clone());
        }
    }
}

impl Add for LaurentInt {
    type Output = LaurentInt;
    fn add(mut self, rhs: LaurentInt) -> LaurentInt {
        self += &rhs;
        self
    }
}

impl<'a> Add<&'a LaurentInt> for &'a LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &'a LaurentInt) -> LaurentInt {
        let mut res = self.clone();
        res += rhs;
        res
    }
}

impl Neg for LaurentInt {
    type Output = LaurentInt;
    fn neg(mut self) -> LaurentInt {
        for c in self.coeffs.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: LaurentInt) -> LaurentInt {
        self + (-rhs)
    }
}

impl<'a> Sub<&'a LaurentInt> for &'a LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &'a LaurentInt) -> LaurentInt {
        self.clone() - rhs.clone()
    }
}

impl<'a> Mul<&'a LaurentInt> for &'a LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &'a LaurentInt) -> LaurentInt {
        let mut res = LaurentInt::zero();
        for (i, a) in &self.coeffs {
            for (j, b) in &rhs.coeffs {
                res.add_term(i + j, a * b);
            }
        }
        res
    }
}

impl Mul for LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: LaurentInt) -> LaurentInt {
        &self * &rhs
    }
}

impl Ring for LaurentInt {
    fn from_int(n: i64) -> Self {
        Self::constant(n)
    }
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*t^{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_canonical_form() {
        let p = LaurentInt::from_terms([(2, -1), (-2, -1)]);
        assert_eq!(p.to_string(), "-1*t^-2 + -1*t^2");
        assert_eq!(LaurentInt::zero().to_string(), "0");
    }

    #[test]
    fn unit_law() {
        for k in -20..20 {
            assert_eq!(LaurentInt::t(k) * LaurentInt::t(-k), LaurentInt::one());
        }
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = LaurentInt::from_terms([(1, 3), (1, -3)]);
        assert!(p.is_zero());
    }

    #[test]
    fn exact_division() {
        // (t^4 - t^-4) / (t^2 - t^-2) = t^2 + t^-2
        let num = LaurentInt::from_terms([(4, 1), (-4, -1)]);
        let den = LaurentInt::from_terms([(2, 1), (-2, -1)]);
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, LaurentInt::from_terms([(2, 1), (-2, 1)]));
        let bad = LaurentInt::from_terms([(3, 1), (0, 1)]);
        assert_eq!(bad.div_exact(&den), None);
        assert_eq!(num.div_exact(&LaurentInt::zero()), None);
    }

    #[test]
    fn invert_t_is_involution() {
        let p = LaurentInt::from_terms([(5, 2), (-1, 7), (0, -3)]);
        assert_eq!(p.invert_t().invert_t(), p);
        assert_eq!(p.invert_t().coeff(-5), BigInt::from(2));
    }
}
