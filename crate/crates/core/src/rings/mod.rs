//! Exact coefficient rings.
//!
//! The ground ring is `Z[t, t^-1]` ([`LaurentInt`]). Identities at roots of
//! unity are checked after pushing coefficients into `Z[zeta_n]`
//! ([`CycNum`]) through [`specialize`].

mod cyclotomic;
mod laurent;
mod poly;
mod skein;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use cyclotomic::{
    cyclotomic_polynomial, epsilon_of, lambda_k, lambda_k_at, order_of_power, specialize,
    specialize_poly, specialize_skein, CycNum, RootSpec, RootSpecError,
};
pub use laurent::LaurentInt;
pub use poly::Poly;
pub use skein::{Degrees, Monomial, SkeinPoly};

/// Commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc + one.clone();
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }

    fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
}
