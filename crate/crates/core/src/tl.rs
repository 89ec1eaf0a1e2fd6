//! Temperley-Lieb algebras on the planar matching basis.
//!
//! Boundary points are numbered `0..k` along the top edge and `k..2k`
//! along the bottom edge, both left to right.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::diagram::statesum::{crossing_pairings, StateModel, DEFAULT_MAX_STATES, OVER_IN, OVER_OUT, UNDER_IN, UNDER_OUT};
use crate::rings::{lambda_k, LaurentInt, Ring};

/// A non-crossing perfect matching of the `2k` boundary points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    partner: Vec<u16>,
}

impl Matching {
    pub fn k(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn identity(k: usize) -> Self {
        Self { partner: (0..2 * k).map(|i| if i < k { (i + k) as u16 } else { (i - k) as u16 }).collect() }
    }

    /// `None` unless `partner` is a fixed-point-free non-crossing involution.
    pub fn from_partners(partner: Vec<u16>) -> Option<Self> {
        let n = partner.len();
        if !n.is_multiple_of(2) {
            return None;
        }
        for (i, &p) in partner.iter().enumerate() {
            if p as usize >= n || p as usize == i || partner[p as usize] as usize != i {
                return None;
            }
        }
        let m = Self { partner };
        m.is_planar().then_some(m)
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    /// Position of boundary point `i` going around the square: the top edge
    /// left to right, then the bottom edge right to left.
    fn cyclic_pos(&self, i: usize) -> usize {
        let k = self.k();
        if i < k {
            i
        } else {
            3 * k - 1 - i
        }
    }

    fn is_planar(&self) -> bool {
        let n = self.partner.len();
        let mut at = vec![0usize; n];
        for i in 0..n {
            at[self.cyclic_pos(i)] = i;
        }
        let mut stack = Vec::new();
        for &i in &at {
            let p = self.partner(i);
            if self.cyclic_pos(p) > self.cyclic_pos(i) {
                stack.push(i);
            } else if stack.pop() != Some(p) {
                return false;
            }
        }
        true
    }

    /// Balanced-parenthesis word in cyclic boundary order.
    pub fn parens(&self) -> String {
        let n = self.partner.len();
        let mut out = vec![' '; n];
        for i in 0..n {
            let (a, b) = (self.cyclic_pos(i), self.cyclic_pos(self.partner(i)));
            out[a] = if a < b { '(' } else { ')' };
        }
        out.into_iter().collect()
    }

    /// Pairs joining a top point to a bottom point.
    pub fn through_strands(&self) -> usize {
        let k = self.k();
        (0..k).filter(|&i| self.partner(i) >= k).count()
    }

    /// Left-right reflection of the square.
    pub fn mirror(&self) -> Self {
        let k = self.k();
        let flip = |i: usize| if i < k { k - 1 - i } else { 3 * k - 1 - i };
        let mut partner = vec![0u16; 2 * k];
        for i in 0..2 * k {
            partner[flip(i)] = flip(self.partner(i)) as u16;
        }
        Self { partner }
    }

    /// All `Catalan(k)` matchings in canonical order.
    pub fn enumerate(k: usize) -> Vec<Matching> {
        fn words(open: usize, close: usize, cur: &mut String, out: &mut Vec<String>) {
            if open == 0 && close == 0 {
                out.push(cur.clone());
                return;
            }
            if open > 0 {
                cur.push('(');
                words(open - 1, close + 1, cur, out);
                cur.pop();
            }
            if close > 0 {
                cur.push(')');
                words(open, close - 1, cur, out);
                cur.pop();
            }
        }
        let mut ws = Vec::new();
        words(k, 0, &mut String::new(), &mut ws);
        let mut ms: Vec<Matching> = ws.iter().map(|w| Self::from_parens(w).expect("Dyck words are matchings")).collect();
        ms.sort();
        ms
    }

    pub fn from_parens(word: &str) -> Option<Self> {
        let n = word.len();
        if !n.is_multiple_of(2) {
            return None;
        }
        let k = n / 2;
        let point = |pos: usize| if pos < k { pos } else { 3 * k - 1 - pos };
        let mut partner = vec![0u16; n];
        let mut stack = Vec::new();
        for (pos, ch) in word.chars().enumerate() {
            match ch {
                '(' => stack.push(pos),
                ')' => {
                    let open = stack.pop()?;
                    partner[point(open)] = point(pos) as u16;
                    partner[point(pos)] = point(open) as u16;
                }
                _ => return None,
            }
        }
        stack.is_empty().then_some(Self { partner })
    }

    /// Stacks `self` on top of `other`; returns the product matching and the
    /// number of closed loops formed.
    pub fn compose(&self, other: &Matching) -> (Matching, usize) {
        let k = self.k();
        assert_eq!(k, other.k(), "matchings of different size");
        // middle point m is self's bottom k+m and other's top m
        let mut partner = vec![0u16; 2 * k];
        let mut seen_mid = vec![false; k];
        let follow = |start_in_self: bool, start: usize, seen_mid: &mut Vec<bool>| -> usize {
            let (mut in_self, mut p) = (start_in_self, start);
            loop {
                if in_self {
                    let q = self.partner(p);
                    if q < k {
                        return q;
                    }
                    seen_mid[q - k] = true;
                    in_self = false;
                    p = q - k;
                } else {
                    let q = other.partner(p);
                    if q >= k {
                        return q;
                    }
                    seen_mid[q] = true;
                    in_self = true;
                    p = q + k;
                }
            }
        };
        for i in 0..k {
            let end = follow(true, i, &mut seen_mid);
            partner[i] = end as u16;
            partner[end] = i as u16;
        }
        for i in 0..k {
            let end = follow(false, k + i, &mut seen_mid);
            partner[k + i] = end as u16;
            partner[end] = (k + i) as u16;
        }
        let mut loops = 0;
        for m in 0..k {
            if seen_mid[m] {
                continue;
            }
            loops += 1;
            // walk the loop through middle points
            let mut p = m;
            loop {
                seen_mid[p] = true;
                let q = other.partner(p);
                seen_mid[q] = true;
                let r = self.partner(q + k) - k;
                if r == m {
                    break;
                }
                p = r;
            }
        }
        (Matching { partner }, loops)
    }
}

impl PartialOrd for Matching {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matching {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k(), self.parens()).cmp(&(other.k(), other.parens()))
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.partner.is_empty() {
            return write!(f, "<empty>");
        }
        write!(f, "{}", self.parens())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of `TL_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct TLElement {
    k: usize,
    terms: BTreeMap<Matching, LaurentInt>,
}

impl TLElement {
    pub fn zero(k: usize) -> Self {
        Self { k, terms: BTreeMap::new() }
    }

    pub fn basis(m: Matching) -> Self {
        let mut e = Self::zero(m.k());
        e.add_term(m, LaurentInt::one());
        e
    }

    pub fn identity(k: usize) -> Self {
        Self::basis(Matching::identity(k))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn add_term(&mut self, m: Matching, c: LaurentInt) {
        assert_eq!(m.k(), self.k);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(LaurentInt::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn coeff(&self, m: &Matching) -> LaurentInt {
        self.terms.get(m).cloned().unwrap_or_else(LaurentInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &LaurentInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TLElement) -> TLElement {
        assert_eq!(self.k, other.k, "mismatched k");
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &LaurentInt) -> TLElement {
        let mut r = TLElement::zero(self.k);
        for (m, a) in &self.terms {
            r.add_term(m.clone(), a * c);
        }
        r
    }

    pub fn mirror(&self) -> TLElement {
        let mut r = TLElement::zero(self.k);
        for (m, c) in &self.terms {
            r.add_term(m.mirror(), c.clone());
        }
        r
    }

    pub fn invert_t(&self) -> TLElement {
        let mut r = TLElement::zero(self.k);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), c.invert_t());
        }
        r
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot multiply elements of TL_{0} and TL_{1}")]
pub struct MismatchedK(pub usize, pub usize);

/// `a` stacked on top of `b`; every closed loop contributes `lambda_0`.
pub fn tl_mul(a: &TLElement, b: &TLElement) -> Result<TLElement, MismatchedK> {
    if a.k != b.k {
        return Err(MismatchedK(a.k, b.k));
    }
    let l0 = lambda_k(0);
    let mut r = TLElement::zero(a.k);
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let (m, loops) = ma.compose(mb);
            r.add_term(m, ca * cb * l0.pow(loops as u32));
        }
    }
    Ok(r)
}

/// State model of the identity of `TL_k` encircled by one loop that passes
/// over the strands above the midline and under them below it.
fn encircle_model(k: usize) -> StateModel {
    if k == 0 {
        return StateModel {
            punctures: 0,
            pairings: vec![],
            end_piece: vec![],
            piece_mask: vec![],
            boundary_piece: vec![],
            free_loops: vec![0],
        };
    }
    // crossings: upper U_i = i, lower L_i = k + i
    let (up, lo) = (|i: usize| i, |i: usize| k + i);
    // pieces: strand top / middle / bottom, then loop pieces
    let top = |i: usize| 3 * i;
    let mid = |i: usize| 3 * i + 1;
    let bot = |i: usize| 3 * i + 2;
    let upper = |i: usize| 3 * k + i; // from U_i to U_{i+1}; i = k-1 runs over the right cap to L_{k-1}
    let lower = |i: usize| 4 * k + i; // from L_i to L_{i-1}; i = 0 runs over the left cap to U_0
    let mut end_piece = vec![0; 8 * k];
    let mut set = |c: usize, role: usize, piece: usize| end_piece[4 * c + role] = piece;
    for i in 0..k {
        // U_i: loop over, running right; strand under, running down
        set(up(i), OVER_IN, if i == 0 { lower(0) } else { upper(i - 1) });
        set(up(i), OVER_OUT, upper(i));
        set(up(i), UNDER_IN, top(i));
        set(up(i), UNDER_OUT, mid(i));
        // L_i: strand over, running down; loop under, running left
        set(lo(i), OVER_IN, mid(i));
        set(lo(i), OVER_OUT, bot(i));
        set(lo(i), UNDER_IN, if i == k - 1 { upper(k - 1) } else { lower(i + 1) });
        set(lo(i), UNDER_OUT, lower(i));
    }
    let pairings = (0..2 * k).map(|c| crossing_pairings(c, false)).collect();
    let boundary_piece = (0..k).map(top).chain((0..k).map(bot)).collect();
    StateModel { punctures: 0, pairings, end_piece, piece_mask: vec![0; 5 * k], boundary_piece, free_loops: vec![] }
}

/// Kauffman expansion of the encircled identity of `TL_k`.
pub fn encircle(k: usize) -> TLElement {
    let counts = encircle_model(k).enumerate(DEFAULT_MAX_STATES).expect("2^(2k) states fit for k <= 12");
    let mut r = TLElement::zero(k);
    for (partners, c) in counts.into_matchings() {
        let m = Matching::from_partners(partners).expect("smoothings of a planar diagram are planar");
        r.add_term(m, c);
    }
    r
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*[{m}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hook() -> Matching {
        Matching::from_parens("()()").unwrap()
    }

    #[test]
    fn catalan_counts() {
        let cat = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (k, &c) in cat.iter().enumerate() {
            assert_eq!(Matching::enumerate(k).len(), c, "k = {k}");
        }
    }

    #[test]
    fn hook_squared_is_lambda0_hook() {
        let e = TLElement::basis(hook());
        assert_eq!(tl_mul(&e, &e).unwrap(), e.scale(&lambda_k(0)));
        assert_eq!(hook().through_strands(), 0);
    }

    #[test]
    fn identity_laws() {
        let id = TLElement::identity(2);
        let e = TLElement::basis(hook());
        assert_eq!(tl_mul(&id, &id).unwrap(), id);
        assert_eq!(tl_mul(&id, &e).unwrap(), e);
        assert_eq!(Matching::identity(3).through_strands(), 3);
        assert_eq!(Matching::identity(2).parens(), "(())");
    }

    #[test]
    fn encircle_small() {
        assert_eq!(encircle(0), TLElement::basis(Matching::identity(0)).scale(&lambda_k(0)));
        assert_eq!(encircle(1), TLElement::identity(1).scale(&lambda_k(1)));
        assert_eq!(encircle(2).coeff(&Matching::identity(2)), lambda_k(2));
    }

    #[test]
    fn rejects_crossing_pairs() {
        // top 0 with bottom 1 and top 1 with bottom 0
        assert!(Matching::from_partners(vec![3, 2, 1, 0]).is_none());
        assert!(tl_mul(&TLElement::identity(2), &TLElement::identity(3)).is_err());
    }
}
