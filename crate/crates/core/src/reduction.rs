//! HITTING SET reduces to deciding whether a binary word has a pseudoperiod of
//! a given size with entries at most `B`. This module builds the gadget word,
//! solves both problems by exhaustive search, and maps solutions back.
//!
//! Positions are 0-based throughout; `z_i[1 + p]` in 1-based notation is
//! `z[p]` here.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pseudoperiod::{combinations, first_pseudoperiod, is_pseudoperiod, PpTuple};
use crate::word::Word;

/// Subset counts above this are refused.
pub const DEFAULT_GUARD: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    n: usize,
    sets: Vec<Vec<usize>>,
    k_prime: usize,
}

impl HittingSetInstance {
    /// Sets are sorted and deduplicated.
    pub fn new(n: usize, sets: Vec<Vec<usize>>, k_prime: usize) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::domain("need at least one set"));
        }
        if !(1..=n).contains(&k_prime) {
            return Err(Error::domain(format!("k' = {k_prime} is outside 1..={n}")));
        }
        let mut clean = Vec::with_capacity(sets.len());
        for (i, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(Error::domain(format!("set {} is empty", i + 1)));
            }
            if let Some(&x) = s.iter().find(|&&x| x == 0 || x > n) {
                return Err(Error::domain(format!("element {x} of set {} is outside 1..={n}", i + 1)));
            }
            clean.push(s);
        }
        Ok(HittingSetInstance { n, sets: clean, k_prime })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn k_prime(&self) -> usize {
        self.k_prime
    }

    pub fn is_hit_by(&self, h: &[usize]) -> bool {
        self.sets.iter().all(|s| s.iter().any(|x| h.contains(x)))
    }
}

impl FromStr for HittingSetInstance {
    type Err = Error;

    /// First line `n m k'`, then `m` lines of space-separated elements.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (l0, header) = lines.next().ok_or_else(|| Error::parse(1, "empty instance"))?;
        let nums = |line: usize, text: &str| -> Result<Vec<usize>> {
            text.split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::parse(line, format!("bad number `{t}`"))))
                .collect()
        };
        let head = nums(l0 + 1, header)?;
        let [n, m, k_prime] = head[..] else {
            return Err(Error::parse(l0 + 1, "expected `n m k'`"));
        };
        let sets = lines
            .take(m)
            .map(|(i, l)| nums(i + 1, l))
            .collect::<Result<Vec<_>>>()?;
        if sets.len() != m {
            return Err(Error::parse(l0 + 1, format!("expected {m} sets, found {}", sets.len())));
        }
        HittingSetInstance::new(n, sets, k_prime)
    }
}

impl fmt::Display for HittingSetInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.n, self.sets.len(), self.k_prime)?;
        for s in &self.sets {
            let items: Vec<String> = s.iter().map(usize::to_string).collect();
            writeln!(f, "{}", items.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoperiodInstance {
    pub x: Word,
    pub k: usize,
    pub bound: usize,
}

impl PseudoperiodInstance {
    pub fn new(x: Word, k: usize, bound: usize) -> Result<Self> {
        if k == 0 || bound < k {
            return Err(Error::domain(format!("need 1 <= k <= B, got k = {k}, B = {bound}")));
        }
        Ok(PseudoperiodInstance { x, k, bound })
    }
}

impl FromStr for PseudoperiodInstance {
    type Err = Error;

    /// The word on the first line, then `k B`.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, word) = lines.next().ok_or_else(|| Error::parse(1, "empty instance"))?;
        let x: Word = word.trim().parse()?;
        let (i, params) = lines.next().ok_or_else(|| Error::parse(2, "missing `k B` line"))?;
        let nums: Vec<usize> = params
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::parse(i + 1, format!("bad number `{t}`"))))
            .collect::<Result<_>>()?;
        let [k, bound] = nums[..] else {
            return Err(Error::parse(i + 1, "expected `k B`"));
        };
        PseudoperiodInstance::new(x, k, bound)
    }
}

impl fmt::Display for PseudoperiodInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.x.to_text())?;
        writeln!(f, "{} {}", self.k, self.bound)
    }
}

/// `z` for one set: a 1, then `a_l` at offset `4l`, then `0000 (0011)^n 0`.
fn set_gadget(n: usize, set: &[usize]) -> Vec<u8> {
    let mut z = vec![1];
    for l in 1..=n {
        z.extend_from_slice(&[0, 0, 0]);
        z.push(u8::from(set.contains(&l)));
    }
    z.extend_from_slice(&[0, 0, 0, 0]);
    for _ in 0..n {
        z.extend_from_slice(&[0, 0, 1, 1]);
    }
    z.push(0);
    z
}

/// Length of the gadget word for universe size `n` and `m` sets.
pub fn gadget_len(n: usize, m: usize) -> usize {
    (4 * n + 5) + (4 * n + 6) + (4 * n + 7) + m * (8 * n + 6)
}

pub fn build_pp_instance(h: &HittingSetInstance) -> PseudoperiodInstance {
    let n = h.n;
    let zeros = vec![0u8; 4 * n + 3];
    let mut x = Vec::with_capacity(gadget_len(n, h.sets.len()));
    for head in [&[1u8, 1][..], &[1, 0, 1], &[1, 0, 0, 1]] {
        x.extend_from_slice(head);
        x.extend_from_slice(&zeros);
    }
    for s in &h.sets {
        x.extend(set_gadget(n, s));
    }
    PseudoperiodInstance {
        x: Word::with_alphabet(x, 2).expect("binary"),
        k: h.k_prime + 4,
        bound: 4 * n + 5,
    }
}

/// `C(n, k)`, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

fn guard_check(n: usize, k: usize, guard: u128) -> Result<()> {
    let subsets = binomial(n, k);
    if subsets > guard {
        return Err(Error::Explosion { subsets, guard });
    }
    Ok(())
}

/// Lexicographically least `k`-subset of `1..=B` that is a pseudoperiod of `x`.
pub fn solve_pseudoperiod(inst: &PseudoperiodInstance, guard: u128) -> Result<Option<PpTuple>> {
    guard_check(inst.bound, inst.k, guard)?;
    Ok(first_pseudoperiod(&inst.x, inst.k, inst.bound))
}

/// Lexicographically least hitting set of size `k'`.
pub fn solve_hitting_set(h: &HittingSetInstance, guard: u128) -> Result<Option<Vec<usize>>> {
    guard_check(h.n, h.k_prime, guard)?;
    Ok(combinations(h.n, h.k_prime).find(|c| h.is_hit_by(c)))
}

/// Recovers the HITTING SET instance a gadget word was built from.
pub fn decode_instance(inst: &PseudoperiodInstance) -> Result<HittingSetInstance> {
    let b = inst.bound;
    if b < 9 || !(b - 5).is_multiple_of(4) {
        return Err(Error::Structural(format!("bound {b} is not of the form 4n + 5")));
    }
    let n = (b - 5) / 4;
    let head = gadget_len(n, 0);
    let z = 8 * n + 6;
    let x = inst.x.symbols();
    if x.len() <= head || !(x.len() - head).is_multiple_of(z) || inst.k < 5 {
        return Err(Error::Structural(format!("word of length {} with k = {} is not a gadget for n = {n}", x.len(), inst.k)));
    }
    let sets: Vec<Vec<usize>> = x[head..]
        .chunks(z)
        .map(|c| (1..=n).filter(|&l| c[4 * l] == 1).collect())
        .collect();
    let h = HittingSetInstance::new(n, sets, inst.k - 4).map_err(|e| Error::Structural(format!("decoded sets: {e}")))?;
    if build_pp_instance(&h) != *inst {
        return Err(Error::Structural("word does not match the gadget of its decoded sets".into()));
    }
    Ok(h)
}

/// Maps a solution of a built instance back to a hitting set of size `k'`.
///
/// Entries `4h` with `1 <= h <= n` become `h`; entries other than those and
/// the scaffold `1, 2, 3, 4n + 4` only fill the tuple up to size `k`, and are
/// replaced by the smallest unused elements.
pub fn extract_hitting_set(inst: &PseudoperiodInstance, solution: &PpTuple) -> Result<Vec<usize>> {
    let h = decode_instance(inst)?;
    if solution.size() != inst.k || solution.largest() > inst.bound || !is_pseudoperiod(&inst.x, solution) {
        return Err(Error::Precondition(format!("{solution} does not solve the instance")));
    }
    let n = h.n();
    let scaffold = [1, 2, 3, 4 * n + 4];
    if let Some(p) = scaffold.iter().find(|&&p| !solution.contains(p)) {
        return Err(Error::Structural(format!("{solution} lacks {p}")));
    }
    let mut hits: Vec<usize> = solution
        .entries()
        .iter()
        .filter(|&&p| !scaffold.contains(&p) && p % 4 == 0 && p <= 4 * n)
        .map(|p| p / 4)
        .collect();
    let spare: Vec<usize> = (1..=n).filter(|e| !hits.contains(e)).collect();
    let missing = h.k_prime().saturating_sub(hits.len());
    hits.extend(spare.into_iter().take(missing));
    hits.sort_unstable();
    if !h.is_hit_by(&hits) {
        return Err(Error::Structural(format!("{hits:?} from {solution} misses a set")));
    }
    Ok(hits)
}
