//! Checking, searching and enumerating pseudoperiods.
//!
//! A tuple `p_1 < ... < p_k` is a pseudoperiod of `w` when
//! `w[i] ∈ {w[i + p_1], ..., w[i + p_k]}` for every `0 <= i < |w| - p_k`.
//! When `|w| <= p_k` the range is empty and the tuple holds vacuously.
//!
//! On a prefix of an infinite word these checks are evidence, not proof: a
//! tuple that holds on the prefix is only *consistent* with the infinite word.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::word::runs;

/// A strictly increasing tuple of positive offsets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PpTuple(Vec<usize>);

impl PpTuple {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("a pseudoperiod needs at least one entry"));
        }
        if entries[0] == 0 || entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!(
                "pseudoperiod entries must be positive and strictly increasing, got {entries:?}"
            )));
        }
        Ok(PpTuple(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn largest(&self) -> usize {
        *self.0.last().expect("nonempty")
    }

    pub fn contains(&self, p: usize) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    /// Every entry multiplied by `factor`.
    pub fn scaled(&self, factor: usize) -> PpTuple {
        PpTuple(self.0.iter().map(|p| p * factor).collect())
    }
}

impl fmt::Display for PpTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for PpTuple {
    type Err = Error;

    /// Accepts `(1,8,9)` as well as a bare `1,8,9`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(inner);
        let entries = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(1, format!("`{tok}` is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        PpTuple::new(entries)
    }
}

impl TryFrom<&[usize]> for PpTuple {
    type Error = Error;

    fn try_from(entries: &[usize]) -> Result<Self> {
        PpTuple::new(entries.to_vec())
    }
}

/// Number of positions the tuple constrains in a word of length `len`.
pub fn constrained_len(len: usize, t: &PpTuple) -> usize {
    len.saturating_sub(t.largest())
}

#[inline]
fn holds_at(w: &[u8], t: &PpTuple, i: usize) -> bool {
    t.0.iter().any(|&p| w[i + p] == w[i])
}

pub fn is_pseudoperiod(w: &[u8], t: &PpTuple) -> bool {
    first_violation(w, t).is_none()
}

/// Smallest constrained `n` with `w[n] ∉ {w[n + p] : p ∈ t}`.
pub fn first_violation(w: &[u8], t: &PpTuple) -> Option<usize> {
    (0..constrained_len(w.len(), t)).find(|&i| !holds_at(w, t, i))
}

/// Checks `t` by looking at each distinct factor of length `max(t) + 1` once,
/// at its first position. Agrees with [`is_pseudoperiod`] on every word.
pub fn is_pseudoperiod_by_factors(w: &[u8], t: &PpTuple) -> bool {
    let span = t.largest() + 1;
    if w.len() < span {
        return true;
    }
    let factors: HashSet<&[u8]> = w.windows(span).collect();
    factors.into_iter().all(|f| t.0.iter().any(|&p| f[p] == f[0]))
}

/// For each position, the set of offsets `p <= bound` with `w[i + p] = w[i]`,
/// kept once per distinct set with its earliest position.
struct MatchMasks {
    len: usize,
    bound: usize,
    earliest: Vec<(u128, usize)>,
}

impl MatchMasks {
    const MAX_BOUND: usize = 128;

    fn new(w: &[u8], bound: usize) -> Self {
        debug_assert!(bound <= Self::MAX_BOUND);
        let mut first: BTreeMap<u128, usize> = BTreeMap::new();
        for i in 0..w.len() {
            let mut mask = 0u128;
            for p in 1..=bound.min(w.len() - 1 - i) {
                if w[i + p] == w[i] {
                    mask |= 1 << (p - 1);
                }
            }
            first.entry(mask).or_insert(i);
        }
        let mut earliest: Vec<(u128, usize)> = first.into_iter().collect();
        earliest.sort_by_key(|&(_, i)| i);
        MatchMasks {
            len: w.len(),
            bound,
            earliest,
        }
    }

    fn bits(entries: &[usize]) -> u128 {
        entries.iter().fold(0, |m, &p| m | 1 << (p - 1))
    }

    /// Exact check for a full tuple given as a bit set with maximum `max`.
    fn holds(&self, set: u128, max: usize) -> bool {
        let limit = self.len.saturating_sub(max);
        self.earliest
            .iter()
            .take_while(|&&(_, i)| i < limit)
            .all(|&(mask, _)| mask & set != 0)
    }

    /// Whether some completion of `chosen` with offsets above `last` (all at most
    /// `bound`) could still work. Only positions constrained by every tuple count.
    fn viable(&self, chosen: u128, last: usize) -> bool {
        let above = if last >= self.bound {
            0
        } else {
            (!0u128 >> (128 - self.bound)) & !((1u128 << last) - 1)
        };
        self.holds(chosen | above, self.bound)
    }

    fn search(&self, k: usize, first: usize, stop_at_first: bool, out: &mut Vec<PpTuple>) {
        let mut stack = vec![first];
        self.extend(k, &mut stack, stop_at_first, out);
    }

    fn extend(&self, k: usize, chosen: &mut Vec<usize>, stop_at_first: bool, out: &mut Vec<PpTuple>) -> bool {
        let set = Self::bits(chosen);
        let last = *chosen.last().expect("nonempty");
        if chosen.len() == k {
            if self.holds(set, last) {
                out.push(PpTuple(chosen.clone()));
                return stop_at_first;
            }
            return false;
        }
        if !self.viable(set, last) {
            return false;
        }
        let remaining = k - chosen.len();
        for p in last + 1..=self.bound + 1 - remaining {
            chosen.push(p);
            let done = self.extend(k, chosen, stop_at_first, out);
            chosen.pop();
            if done {
                return true;
            }
        }
        false
    }
}

/// All `k`-tuples with entries in `1..=bound` that are pseudoperiods of `w`,
/// in lexicographic order.
pub fn enumerate_pseudoperiods(w: &[u8], k: usize, bound: usize) -> Vec<PpTuple> {
    if k == 0 || bound < k {
        return Vec::new();
    }
    if bound > MatchMasks::MAX_BOUND {
        return combinations(bound, k)
            .filter_map(|c| PpTuple::new(c).ok())
            .filter(|t| is_pseudoperiod(w, t))
            .collect();
    }
    let masks = MatchMasks::new(w, bound);
    let firsts: Vec<usize> = (1..=bound + 1 - k).collect();
    let run = |&p1: &usize| {
        let mut out = Vec::new();
        masks.search(k, p1, false, &mut out);
        out
    };
    #[cfg(feature = "parallel")]
    let parts: Vec<Vec<PpTuple>> = firsts.par_iter().map(run).collect();
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Vec<PpTuple>> = firsts.iter().map(run).collect();
    parts.into_iter().flatten().collect()
}

/// Lexicographically least `k`-tuple within `1..=bound`, if any.
pub fn first_pseudoperiod(w: &[u8], k: usize, bound: usize) -> Option<PpTuple> {
    if k == 0 || bound < k {
        return None;
    }
    if bound > MatchMasks::MAX_BOUND {
        return combinations(bound, k)
            .filter_map(|c| PpTuple::new(c).ok())
            .find(|t| is_pseudoperiod(w, t));
    }
    let masks = MatchMasks::new(w, bound);
    let mut out = Vec::new();
    for p1 in 1..=bound + 1 - k {
        masks.search(k, p1, true, &mut out);
        if let Some(t) = out.pop() {
            return Some(t);
        }
    }
    None
}

/// Smallest `k <= bound` for which some `k`-tuple within `1..=bound` works.
pub fn min_pseudoperiod_size(w: &[u8], bound: usize) -> Option<usize> {
    (1..=bound).find(|&k| first_pseudoperiod(w, k, bound).is_some())
}

/// Strictly increasing `k`-subsets of `1..=n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (k >= 1 && k <= n).then(|| (1..=k).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let c = current.as_mut().expect("present");
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if c[i] < n - (k - 1 - i) {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Largest distance between consecutive occurrences of the same letter, over
/// letters that occur at least twice (0 if no letter repeats).
pub fn max_gap(w: &[u8]) -> Result<usize> {
    if w.len() < 2 {
        return Err(Error::domain("max_gap needs a word of length at least 2"));
    }
    let mut last = [usize::MAX; 256];
    let mut gap = 0;
    for (i, &s) in w.iter().enumerate() {
        if last[s as usize] != usize::MAX {
            gap = gap.max(i - last[s as usize]);
        }
        last[s as usize] = i;
    }
    Ok(gap)
}

/// Largest distance from a position to the next occurrence of its letter,
/// counting the end of the word as an occurrence. `(1, ..., R)` is a
/// pseudoperiod of every word with this bound `R`.
pub fn recurrence_bound(w: &[u8]) -> usize {
    let mut next = [w.len(); 256];
    let mut bound = 0;
    for (i, &s) in w.iter().enumerate().rev() {
        bound = bound.max(next[s as usize] - i);
        next[s as usize] = i;
    }
    bound
}

/// `(1, 2, ..., B + 1)` where `B` is the longest non-initial run of a binary word.
pub fn run_length_tuple(w: &[u8]) -> Result<PpTuple> {
    if w.iter().any(|&s| s > 1) {
        return Err(Error::domain("run-length tuple needs a binary word"));
    }
    let rs = runs(w);
    if rs.len() < 2 {
        return Err(Error::domain("run-length tuple needs at least two runs"));
    }
    let longest = rs[1..].iter().map(|r| r.length).max().expect("two runs");
    PpTuple::new((1..=longest + 1).collect())
}

/// Whether `w` has the shape `a^* (ab)^* (a + ε)` for distinct letters `a, b`
/// (empty and unary words included).
pub fn matches_pp12_form(w: &[u8]) -> bool {
    let Some(&a) = w.first() else {
        return true;
    };
    let lead = w.iter().take_while(|&&s| s == a).count();
    if lead == w.len() {
        return true;
    }
    // the last leading `a` opens the (ab)^* part
    let b = w[lead];
    w[lead - 1..]
        .iter()
        .enumerate()
        .all(|(j, &s)| s == if j % 2 == 0 { a } else { b })
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::generators::{apply_morphism, Morphism};
    use proptest::prelude::*;

    fn tuple_strategy(max: usize) -> impl Strategy<Value = PpTuple> {
        proptest::collection::btree_set(1..=max, 1..4).prop_map(|s| PpTuple::new(s.into_iter().collect()).unwrap())
    }

    fn binary(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(0u8..2, 0..max_len)
    }

    proptest! {
        #[test]
        fn superset_tuples_still_hold(w in binary(60), t in tuple_strategy(8), extra in 1usize..12) {
            let mut bigger = t.entries().to_vec();
            if !bigger.contains(&extra) {
                bigger.push(extra);
                bigger.sort();
            }
            if is_pseudoperiod(&w, &t) {
                prop_assert!(is_pseudoperiod(&w, &PpTuple::new(bigger).unwrap()));
            }
        }

        #[test]
        fn failures_persist_under_extension(w in binary(60), tail in binary(20), t in tuple_strategy(8)) {
            if !is_pseudoperiod(&w, &t) {
                let mut longer = w.clone();
                longer.extend(tail);
                prop_assert!(!is_pseudoperiod(&longer, &t));
            }
        }

        #[test]
        fn factor_checker_agrees(w in proptest::collection::vec(0u8..3, 0..80), t in tuple_strategy(10)) {
            prop_assert_eq!(is_pseudoperiod_by_factors(&w, &t), is_pseudoperiod(&w, &t));
        }

        #[test]
        fn doubling_transports_pseudoperiods(w in binary(64), t in tuple_strategy(6)) {
            let mu: Morphism = "0->01 1->10".parse().unwrap();
            if is_pseudoperiod(&w, &t) {
                prop_assert!(is_pseudoperiod(&apply_morphism(&mu, &w).unwrap(), &t.scaled(2)));
            }
        }

        #[test]
        fn recurrence_bound_gives_a_pseudoperiod(w in proptest::collection::vec(0u8..3, 1..80)) {
            let r = recurrence_bound(&w);
            prop_assert!(is_pseudoperiod(&w, &PpTuple::new((1..=r).collect()).unwrap()));
        }

        #[test]
        fn max_entry_bounds_constrained_gaps(w in proptest::collection::vec(0u8..3, 1..80), t in tuple_strategy(8)) {
            if is_pseudoperiod(&w, &t) {
                let m = t.largest();
                for i in 0..constrained_len(w.len(), &t) {
                    prop_assert!((1..=m).any(|d| w[i + d] == w[i]));
                }
            }
        }

        #[test]
        fn letter_count_bounded_by_max_entry(w in proptest::collection::vec(0u8..4, 0..80), t in tuple_strategy(5)) {
            let m = t.largest();
            if is_pseudoperiod(&w, &t) && w.len() >= 4 * m {
                let mut seen = [false; 4];
                for &s in &w[m..] { seen[s as usize] = true; }
                let letters = seen.iter().filter(|&&b| b).count();
                prop_assert!(letters <= m);
                if letters == m {
                    // position where the last new letter first shows up
                    let mut first = [usize::MAX; 4];
                    for (i, &s) in w.iter().enumerate() { first[s as usize] = first[s as usize].min(i); }
                    let f = first.iter().copied().filter(|&i| i != usize::MAX).max().unwrap();
                    if f + m < w.len() {
                        let tail = &w[f + 1 - m..];
                        prop_assert!((0..tail.len() - m).all(|i| tail[i] == tail[i + m]));
                    }
                }
            }
        }
    }
}
