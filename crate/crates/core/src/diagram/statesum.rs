//! Kauffman state-sum enumeration over a combinatorial crossing model.
//!
//! A model is a set of pieces (arcs of the diagram between crossings) whose
//! ends are attached either to crossing ends or to boundary points. Each
//! state picks one of two pairings of the four ends at every crossing; the
//! resulting connected components are either closed loops, classified by
//! the parity mask of the punctures they enclose, or arcs joining two
//! boundary points.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::rings::{lambda_k, LaurentInt, Monomial, SkeinPoly};

/// Hard ceiling for any single enumeration.
pub const HARD_STATE_LIMIT: u64 = 1 << 30;

/// Default ceiling, adjustable per call.
pub const DEFAULT_MAX_STATES: u64 = 1 << 24;

/// Ends of crossing `c` are numbered `4c + k` with `k` in
/// `{over-forward, over-backward, under-forward, under-backward}`.
pub(crate) const OVER_OUT: usize = 0;
pub(crate) const OVER_IN: usize = 1;
pub(crate) const UNDER_OUT: usize = 2;
pub(crate) const UNDER_IN: usize = 3;

#[derive(Debug, Clone)]
pub(crate) struct StateModel {
    pub punctures: u32,
    /// `pairings[c][0]` is the A-smoothing (weight `t`), `[1]` the B-smoothing.
    pub pairings: Vec<[[(usize, usize); 2]; 2]>,
    pub end_piece: Vec<usize>,
    pub piece_mask: Vec<u32>,
    pub boundary_piece: Vec<usize>,
    /// Crossing-free closed components, by puncture mask.
    pub free_loops: Vec<u32>,
}

/// Pairings at one crossing given whether the under-strand's forward
/// direction lies counterclockwise of the over-strand's (`ccw`).
///
/// Rotating the over-strand counterclockwise sweeps the two A-regions; the
/// A-smoothing joins them, so each new arc bounds a B-region.
pub(crate) fn crossing_pairings(c: usize, under_is_ccw: bool) -> [[(usize, usize); 2]; 2] {
    let b = 4 * c;
    let (x, y) = if under_is_ccw { (UNDER_OUT, UNDER_IN) } else { (UNDER_IN, UNDER_OUT) };
    [[(b + x, b + OVER_IN), (b + y, b + OVER_OUT)], [(b + OVER_OUT, b + x), (b + OVER_IN, b + y)]]
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("state space too large: {crossings} crossings give {states} states (limit {limit})")]
pub struct StateSpaceTooLarge {
    pub crossings: usize,
    pub states: u128,
    pub limit: u64,
}

/// Raw enumeration result: key layout is
/// `[b_count, trivial_loops, class counts..., boundary partners...]`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct StateCounts {
    pub crossings: usize,
    pub classes: usize,
    pub entries: BTreeMap<Vec<u16>, u64>,
}

struct Scratch {
    parent: Vec<usize>,
    mask: Vec<u32>,
    tagged: Vec<bool>,
    first: Vec<usize>,
    key: Vec<u16>,
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

impl StateModel {
    fn classes(&self) -> usize {
        (1usize << self.punctures) - 1
    }

    fn scratch(&self) -> Scratch {
        let n = self.piece_mask.len();
        Scratch {
            parent: vec![0; n],
            mask: vec![0; n],
            tagged: vec![false; n],
            first: vec![usize::MAX; n],
            key: vec![0; 2 + self.classes() + self.boundary_piece.len()],
        }
    }

    fn state_key(&self, state: u64, s: &mut Scratch) {
        let n = self.piece_mask.len();
        let classes = self.classes();
        for i in 0..n {
            s.parent[i] = i;
            s.mask[i] = 0;
            s.tagged[i] = false;
            s.first[i] = usize::MAX;
        }
        for (c, pairs) in self.pairings.iter().enumerate() {
            let choice = &pairs[(state >> c & 1) as usize];
            for &(e1, e2) in choice {
                let a = find(&mut s.parent, self.end_piece[e1]);
                let b = find(&mut s.parent, self.end_piece[e2]);
                if a != b {
                    s.parent[a] = b;
                }
            }
        }
        for i in 0..n {
            let r = find(&mut s.parent, i);
            s.mask[r] ^= self.piece_mask[i];
        }
        s.key.iter_mut().for_each(|k| *k = 0);
        s.key[0] = state.count_ones() as u16;
        for (b, &piece) in self.boundary_piece.iter().enumerate() {
            let r = find(&mut s.parent, piece);
            s.tagged[r] = true;
            if s.first[r] == usize::MAX {
                s.first[r] = b;
            } else {
                let a = s.first[r];
                s.key[2 + classes + a] = b as u16;
                s.key[2 + classes + b] = a as u16;
            }
        }
        for i in 0..n {
            if s.parent[i] == i && !s.tagged[i] {
                match s.mask[i] {
                    0 => s.key[1] += 1,
                    m => s.key[1 + m as usize] += 1,
                }
            }
        }
        for &m in &self.free_loops {
            match m {
                0 => s.key[1] += 1,
                m => s.key[1 + m as usize] += 1,
            }
        }
    }

    /// Enumerates all `2^c` states, splitting the range across worker threads.
    /// The counts are exact, so the result does not depend on the split.
    pub fn enumerate(&self, max_states: u64) -> Result<StateCounts, StateSpaceTooLarge> {
        let c = self.pairings.len();
        let limit = max_states.min(HARD_STATE_LIMIT);
        let states: u128 = 1u128 << c;
        if states > limit as u128 {
            return Err(StateSpaceTooLarge { crossings: c, states, limit });
        }
        let total = states as u64;
        let chunk_bits = c.saturating_sub(10).max(c.min(4)).min(c);
        let chunk = 1u64 << chunk_bits;
        let chunks = total / chunk;
        let merged = (0..chunks)
            .into_par_iter()
            .fold(HashMap::<Vec<u16>, u64>::new, |mut acc, ch| {
                let mut s = self.scratch();
                for st in ch * chunk..(ch + 1) * chunk {
                    self.state_key(st, &mut s);
                    match acc.get_mut(s.key.as_slice()) {
                        Some(v) => *v += 1,
                        None => {
                            acc.insert(s.key.clone(), 1);
                        }
                    }
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            });
        Ok(StateCounts { crossings: c, classes: self.classes(), entries: merged.into_iter().collect() })
    }
}

fn lambda0_powers(max: usize) -> Vec<LaurentInt> {
    let l0 = lambda_k(0);
    let mut v = vec![LaurentInt::one()];
    for i in 1..=max {
        let next = &v[i - 1] * &l0;
        v.push(next);
    }
    v
}

impl StateCounts {
    /// Weight of a state with `b` B-smoothings: `t^(c - 2b)`.
    fn weight(&self, b: u16, count: u64) -> LaurentInt {
        LaurentInt::mono(BigInt::from(count), self.crossings as i64 - 2 * b as i64)
    }

    pub fn into_skein(self, punctures: u32) -> SkeinPoly<LaurentInt> {
        let max_triv = self.entries.keys().map(|k| k[1] as usize).max().unwrap_or(0);
        let pows = lambda0_powers(max_triv);
        // group by monomial first so each lambda power is multiplied once
        let mut grouped: BTreeMap<(Vec<u32>, u16), LaurentInt> = BTreeMap::new();
        for (key, count) in &self.entries {
            let exps: Vec<u32> = key[2..2 + self.classes].iter().map(|&e| e as u32).collect();
            let slot = grouped.entry((exps, key[1])).or_insert_with(LaurentInt::zero);
            *slot += &self.weight(key[0], *count);
        }
        let mut res = SkeinPoly::zero(punctures);
        for ((exps, triv), coeff) in grouped {
            res.add_term(Monomial::from_exponents(exps), coeff * pows[triv as usize].clone());
        }
        res
    }

    /// Result for models with boundary points: a map from the partner array of
    /// the boundary matching to its coefficient.
    pub fn into_matchings(self) -> BTreeMap<Vec<u16>, LaurentInt> {
        let max_triv = self.entries.keys().map(|k| k[1] as usize).max().unwrap_or(0);
        let pows = lambda0_powers(max_triv);
        let mut out: BTreeMap<Vec<u16>, LaurentInt> = BTreeMap::new();
        for (key, count) in &self.entries {
            let partners = key[2 + self.classes..].to_vec();
            let term = self.weight(key[0], *count) * pows[key[1] as usize].clone();
            let slot = out.entry(partners).or_insert_with(LaurentInt::zero);
            *slot += &term;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // A single kink: one crossing whose two strand halves close up on
    // themselves. Pieces: 0 joins over-out to under-in, 1 joins under-out
    // to over-in.
    fn kink(under_is_ccw: bool) -> StateModel {
        let mut end_piece = vec![0; 4];
        end_piece[OVER_OUT] = 0;
        end_piece[UNDER_IN] = 0;
        end_piece[UNDER_OUT] = 1;
        end_piece[OVER_IN] = 1;
        StateModel {
            punctures: 0,
            pairings: vec![crossing_pairings(0, under_is_ccw)],
            end_piece,
            piece_mask: vec![0, 0],
            boundary_piece: vec![],
            free_loops: vec![],
        }
    }

    #[test]
    fn kink_gives_framing_factor() {
        let a = kink(true).enumerate(DEFAULT_MAX_STATES).unwrap().into_skein(0);
        let b = kink(false).enumerate(DEFAULT_MAX_STATES).unwrap().into_skein(0);
        let plus = SkeinPoly::constant(0, LaurentInt::from_terms([(5, 1), (1, 1)]));
        let minus = SkeinPoly::constant(0, LaurentInt::from_terms([(-5, 1), (-1, 1)]));
        assert!((a == plus && b == minus) || (a == minus && b == plus));
    }

    #[test]
    fn state_limit_is_enforced() {
        let m = kink(true);
        assert!(m.enumerate(1).is_err());
        assert!(m.enumerate(2).is_ok());
    }
}
