//! Chebyshev polynomials, the `T`-basis expansion, and threading plans.

use num_traits::{One, Zero};

use crate::rings::{LaurentInt, Poly, Ring};

/// Polynomial in the core variable `z` over the ground ring.
pub type PolyZ = Poly<LaurentInt>;

/// Type-1 Chebyshev polynomial: `T_0 = 2`, `T_1 = z`, `T_n = z T_{n-1} - T_{n-2}`.
pub fn cheb_t<C: Ring>(n: u32) -> Poly<C> {
    let mut prev = Poly::constant(C::from_int(2));
    if n == 0 {
        return prev;
    }
    let mut cur = Poly::z();
    for _ in 1..n {
        let next = cur.shift_z() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Type-2 Chebyshev polynomial, extended backwards so that `S_{-1} = 0` and
/// `S_{-2} = -1`.
pub fn cheb_s<C: Ring>(n: i64) -> Poly<C> {
    assert!(n >= -2, "S_n is only extended down to n = -2");
    match n {
        -2 => return Poly::constant(-C::one()),
        -1 => return Poly::zero(),
        0 => return Poly::one(),
        _ => {}
    }
    let mut prev = Poly::one();
    let mut cur = Poly::z();
    for _ in 1..n {
        let next = cur.shift_z() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Expansion `p = constant + sum_{j >= 1} c_j T_j`.
///
/// The `T_0`-component is kept as the constant it contributes
/// (`c_0 T_0 = 2 c_0`), so integer input stays integral.
#[derive(Clone, Debug, PartialEq)]
pub struct TExpansion<C> {
    pub constant: C,
    /// `coeffs[j]` is `c_j`; index 0 is unused and always zero.
    pub coeffs: Vec<C>,
}

impl<C: Ring> TExpansion<C> {
    pub fn c(&self, j: usize) -> C {
        if j == 0 {
            return C::zero();
        }
        self.coeffs.get(j).cloned().unwrap_or_else(C::zero)
    }

    /// Indices `j >= 1` with non-zero `c_j`.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().skip(1).filter(|(_, c)| !c.is_zero()).map(|(j, _)| j)
    }

    pub fn expand(&self) -> Poly<C> {
        let mut acc = Poly::constant(self.constant.clone());
        for j in self.support() {
            acc = acc + cheb_t::<C>(j as u32).scale(&self.coeffs[j]);
        }
        acc
    }
}

pub fn to_t_basis<C: Ring>(p: &Poly<C>) -> TExpansion<C> {
    let deg = p.degree().unwrap_or(0);
    let mut coeffs = vec![C::zero(); deg + 1];
    let mut rem = p.clone();
    // T_j is monic of degree j for j >= 1
    while let Some(d) = rem.degree() {
        if d == 0 {
            break;
        }
        let lead = rem.coeff(d);
        rem = rem - cheb_t::<C>(d as u32).scale(&lead);
        coeffs[d] = lead;
    }
    TExpansion { constant: rem.coeff(0), coeffs }
}

/// Whether `p` lies in the span of `{T_{Nj}}`, i.e. in `C[T_N(z)]`.
pub fn is_in_c_tn<C: Ring>(p: &Poly<C>, big_n: u32) -> bool {
    assert!(big_n >= 1);
    to_t_basis(p).support().all(|j| j % big_n as usize == 0)
}

/// Checks `T_n(u + u^-1) = u^n + u^-n` in `Z[u, u^-1]`.
pub fn cheb_t_laurent_identity(n: u32) -> bool {
    let u_sum = LaurentInt::from_terms([(1, 1), (-1, 1)]);
    let lhs = cheb_t::<LaurentInt>(n).eval(&u_sum);
    let rhs = if n == 0 { LaurentInt::constant(2) } else { LaurentInt::from_terms([(n as i64, 1), (-(n as i64), 1)]) };
    lhs == rhs
}

/// One multi-index of a threading expansion and its scalar weight.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreadTerm<C> {
    pub multiplicities: Vec<usize>,
    pub coeff: C,
}

/// `p(L) = sum over (j_1..j_m) of (prod a_{j_k}) * (union of j_k parallels of L_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreadPlan<C> {
    pub terms: Vec<ThreadTerm<C>>,
}

/// Threading plan applying `polys[k]` to component `k`.
pub fn thread_plan_multi<C: Ring>(polys: &[Poly<C>]) -> ThreadPlan<C> {
    let mut terms = vec![ThreadTerm { multiplicities: Vec::new(), coeff: C::one() }];
    for p in polys {
        let mut next = Vec::new();
        for t in &terms {
            for (j, a) in p.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut mult = t.multiplicities.clone();
                mult.push(j);
                next.push(ThreadTerm { multiplicities: mult, coeff: t.coeff.clone() * a.clone() });
            }
        }
        terms = next;
    }
    terms.retain(|t| !t.coeff.is_zero());
    ThreadPlan { terms }
}

/// Threading plan applying the same polynomial to each of `m` components.
pub fn thread_plan<C: Ring>(p: &Poly<C>, m: usize) -> ThreadPlan<C> {
    thread_plan_multi(&vec![p.clone(); m])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Poly<BigInt>;

    #[test]
    fn t_examples() {
        assert_eq!(cheb_t::<BigInt>(0), P::from_ints(&[2]));
        assert_eq!(cheb_t::<BigInt>(1), P::from_ints(&[0, 1]));
        assert_eq!(cheb_t::<BigInt>(4), P::from_ints(&[2, 0, -4, 0, 1]));
    }

    #[test]
    fn s_examples() {
        assert_eq!(cheb_s::<BigInt>(2), P::from_ints(&[-1, 0, 1]));
        assert_eq!(cheb_s::<BigInt>(-1), P::zero());
        assert_eq!(cheb_s::<BigInt>(-2), P::from_ints(&[-1]));
        assert_eq!(cheb_s::<BigInt>(3), P::from_ints(&[0, -2, 0, 1]));
    }

    #[test]
    fn t_is_s_minus_shifted_s() {
        for n in 0..=20i64 {
            assert_eq!(cheb_t::<BigInt>(n as u32), cheb_s::<BigInt>(n) - cheb_s::<BigInt>(n - 2), "n = {n}");
        }
    }

    #[test]
    fn laurent_identity() {
        for n in 0..=15 {
            assert!(cheb_t_laurent_identity(n), "n = {n}");
        }
    }

    #[test]
    fn t_basis_examples() {
        let e = to_t_basis(&P::from_ints(&[0, 0, 1]));
        assert_eq!(e.c(2), BigInt::from(1));
        // c_0 = 1, i.e. the T_0 part contributes the constant 2
        assert_eq!(e.constant, BigInt::from(2));
        assert_eq!(e.expand(), P::from_ints(&[0, 0, 1]));
        let e = to_t_basis(&P::z());
        assert_eq!(e.support().collect::<Vec<_>>(), vec![1]);
        let e = to_t_basis(&cheb_t::<BigInt>(5));
        assert_eq!(e.support().collect::<Vec<_>>(), vec![5]);
        assert!(e.constant.is_zero());
    }

    #[test]
    fn membership_in_c_tn() {
        assert!(is_in_c_tn(&cheb_t::<BigInt>(4), 2));
        assert!(!is_in_c_tn(&P::z(), 2));
        for n in 1..6 {
            assert!(is_in_c_tn(&P::from_ints(&[7]), n));
        }
    }

    #[test]
    fn plan_examples() {
        let plan = thread_plan(&cheb_t::<BigInt>(2), 1);
        let got: Vec<_> = plan.terms.iter().map(|t| (t.multiplicities.clone(), t.coeff.clone())).collect();
        assert_eq!(got, vec![(vec![0], BigInt::from(-2)), (vec![2], BigInt::from(1))]);
        let plan = thread_plan(&P::z(), 2);
        assert_eq!(plan.terms, vec![ThreadTerm { multiplicities: vec![1, 1], coeff: BigInt::from(1) }]);
        let plan = thread_plan(&P::from_ints(&[0, 0, 1]), 2);
        assert_eq!(plan.terms, vec![ThreadTerm { multiplicities: vec![2, 2], coeff: BigInt::from(1) }]);
        let plan = thread_plan(&P::from_ints(&[3, 1]), 0);
        assert_eq!(plan.terms, vec![ThreadTerm { multiplicities: vec![], coeff: BigInt::from(1) }]);
    }
}
