//! Deterministic automata over tuples of base-2 digits, read most significant
//! digit first, in the Walnut text format:
//!
//! ```text
//! msd_2 msd_2 msd_2
//!
//! 0 0
//! 0 0 1 -> 1
//! ```
//!
//! The header names one numeration per tuple component. Each state block starts
//! with `state accepting` and lists `d_1 ... d_k -> target` transitions. Missing
//! transitions reject.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// The automaton accepting exactly the pseudoperiod triples of the Thue-Morse word.
pub const TM_TRIPLE_DFA: &str = include_str!("../data/triple.dfa");

const BASE: u32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleDfa {
    arity: usize,
    accepting: Vec<bool>,
    /// `transitions[state][column]`, where `column` packs the digits with the
    /// first component as the most significant bit.
    transitions: Vec<Vec<Option<u32>>>,
}

impl TupleDfa {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn transition(&self, state: usize, digits: &[u8]) -> Option<usize> {
        if digits.len() != self.arity || digits.iter().any(|&d| d as u32 >= BASE) {
            return None;
        }
        self.transitions[state][pack(digits)].map(|s| s as usize)
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.iter().flatten().filter(|t| t.is_some()).count()
    }

    fn step(&self, state: usize, column: usize) -> Option<usize> {
        self.transitions[state][column].map(|s| s as usize)
    }

    /// States from which some accepting state is reachable.
    fn live_states(&self) -> Vec<bool> {
        let mut live = self.accepting.clone();
        loop {
            let mut changed = false;
            for (s, row) in self.transitions.iter().enumerate() {
                if !live[s] && row.iter().flatten().any(|&t| live[t as usize]) {
                    live[s] = true;
                    changed = true;
                }
            }
            if !changed {
                return live;
            }
        }
    }

    /// The shipped Thue-Morse triple automaton.
    pub fn thue_morse_triples() -> TupleDfa {
        parse_walnut_dfa(TM_TRIPLE_DFA).expect("vendored automaton parses")
    }
}

fn pack(digits: &[u8]) -> usize {
    digits.iter().fold(0, |acc, &d| acc * BASE as usize + d as usize)
}

pub fn parse_walnut_dfa(text: &str) -> Result<TupleDfa> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty());

    let (header_line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let tags: Vec<&str> = header.split_whitespace().collect();
    if let Some(bad) = tags.iter().find(|&&t| t != "msd_2") {
        return Err(Error::parse(header_line, format!("unsupported numeration `{bad}`, expected msd_2")));
    }
    let arity = tags.len();
    let columns = (BASE as usize).pow(arity as u32);

    let mut accepting: Vec<Option<bool>> = Vec::new();
    let mut transitions: Vec<Vec<Option<u32>>> = Vec::new();
    // (line, target) pairs to validate once every block is known
    let mut targets: Vec<(usize, usize)> = Vec::new();
    let mut current: Option<usize> = None;

    for (lineno, line) in lines {
        if let Some((lhs, rhs)) = line.split_once("->") {
            let state = current.ok_or_else(|| Error::parse(lineno, "transition before any state block"))?;
            let digits = lhs
                .split_whitespace()
                .map(|d| {
                    d.parse::<u32>()
                        .ok()
                        .filter(|&d| d < BASE)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::parse(lineno, format!("digit `{d}` is not in base {BASE}")))
                })
                .collect::<Result<Vec<u8>>>()?;
            if digits.len() != arity {
                return Err(Error::parse(
                    lineno,
                    format!("expected {arity} digits, found {}", digits.len()),
                ));
            }
            let target: usize = rhs
                .trim()
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad target state `{}`", rhs.trim())))?;
            let slot = &mut transitions[state][pack(&digits)];
            if slot.is_some() {
                return Err(Error::parse(lineno, "duplicate transition"));
            }
            *slot = Some(target as u32);
            targets.push((lineno, target));
        } else {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let (state, acc) = match fields.as_slice() {
                [s, a] => (
                    s.parse::<usize>()
                        .map_err(|_| Error::parse(lineno, format!("bad state id `{s}`")))?,
                    match *a {
                        "0" => false,
                        "1" => true,
                        _ => return Err(Error::parse(lineno, format!("bad acceptance flag `{a}`"))),
                    },
                ),
                _ => return Err(Error::parse(lineno, format!("expected `state accepting`, got `{line}`"))),
            };
            if state >= accepting.len() {
                accepting.resize(state + 1, None);
                transitions.resize(state + 1, vec![None; columns]);
            }
            if accepting[state].replace(acc).is_some() {
                return Err(Error::parse(lineno, format!("duplicate block for state {state}")));
            }
            current = Some(state);
        }
    }

    if accepting.is_empty() {
        return Err(Error::parse(header_line, "no states"));
    }
    if let Some(missing) = accepting.iter().position(Option::is_none) {
        return Err(Error::parse(header_line, format!("state ids are not contiguous: {missing} is missing")));
    }
    if let Some(&(lineno, t)) = targets.iter().find(|&&(_, t)| t >= accepting.len()) {
        return Err(Error::parse(lineno, format!("transition to undefined state {t}")));
    }
    Ok(TupleDfa {
        arity,
        accepting: accepting.into_iter().map(|a| a.expect("checked")).collect(),
        transitions,
    })
}

/// Binary digits of every component, left-padded with zeros to a common length.
fn columns_of(tuple: &[u64]) -> Vec<usize> {
    let width = tuple.iter().map(|&v| 64 - v.leading_zeros()).max().unwrap_or(0);
    (0..width)
        .rev()
        .map(|bit| tuple.iter().fold(0, |acc, &v| acc * 2 + ((v >> bit) & 1) as usize))
        .collect()
}

pub fn dfa_accepts(d: &TupleDfa, tuple: &[u64]) -> Result<bool> {
    if tuple.len() != d.arity {
        return Err(Error::ArityMismatch {
            expected: d.arity,
            got: tuple.len(),
        });
    }
    let mut state = 0;
    for column in columns_of(tuple) {
        match d.step(state, column) {
            Some(next) => state = next,
            None => return Ok(false),
        }
    }
    Ok(d.accepting[state])
}

/// Every accepted tuple with all components in `0..=bound`, in lexicographic
/// order. Each tuple is run on its shortest representation, as in
/// [`dfa_accepts`].
pub fn dfa_enumerate(d: &TupleDfa, bound: u64) -> Vec<Vec<u64>> {
    let live = d.live_states();
    let width = 64 - bound.leading_zeros() as usize;
    let mut out = Vec::new();
    let mut values = vec![0u64; d.arity];
    // Leading zero columns are not fed to the automaton: `started` flips at the
    // first nonzero column.
    struct Walk<'a> {
        d: &'a TupleDfa,
        live: &'a [bool],
        bound: u64,
        out: &'a mut Vec<Vec<u64>>,
    }
    impl Walk<'_> {
        fn go(&mut self, remaining: usize, state: usize, started: bool, values: &mut [u64]) {
            if started && !self.live[state] {
                return;
            }
            if remaining == 0 {
                if self.d.accepting[state] {
                    self.out.push(values.to_vec());
                }
                return;
            }
            let shift = remaining - 1;
            let arity = self.d.arity;
            for column in 0..(1usize << arity) {
                let next_values: Vec<u64> = (0..arity)
                    .map(|c| values[c] | (((column >> (arity - 1 - c)) & 1) as u64) << shift)
                    .collect();
                // prune once any component's high bits already exceed the bound
                if next_values.iter().any(|&v| v >> shift > self.bound >> shift) {
                    continue;
                }
                let (next_state, next_started) = if !started && column == 0 {
                    (state, false)
                } else {
                    match self.d.step(state, column) {
                        Some(s) => (s, true),
                        None => continue,
                    }
                };
                let mut nv = next_values;
                self.go(shift, next_state, next_started, &mut nv);
            }
        }
    }
    Walk {
        d,
        live: &live,
        bound,
        out: &mut out,
    }
    .go(width, 0, false, &mut values);
    out.sort();
    out
}

fn is_power_of_two(x: u64) -> bool {
    x != 0 && x & (x - 1) == 0
}

/// `a >= 1` and `(b, c) = (a + 2^k, a + 2^{k+1})` for some `k >= 0`.
pub fn shev_cond(a: u64, b: u64, c: u64) -> bool {
    a >= 1 && b > a && is_power_of_two(b - a) && c.checked_sub(a) == Some(2 * (b - a))
}

/// Strips trailing zero bits (the `2^i` factor).
fn odd_part(n: u64) -> u64 {
    n >> n.trailing_zeros()
}

/// Membership of `n` in the two distance sets of Thue-Morse pseudoperiod triples:
/// `parta` for `b - a`, `partb` for `c - b`.
///
/// * parta: `(2^j - 1) 2^i`, `(2^{2j-1} + 1) 2^i` or `11 * 2^i`
/// * partb: `(2^j - 1) 2^i` or `(2^j + 1) 2^i`
pub fn tm_distance_predicates(n: u64) -> (bool, bool) {
    if n == 0 {
        return (false, false);
    }
    let odd = odd_part(n);
    let all_ones = is_power_of_two(odd + 1);
    let plus_one = odd > 1 && is_power_of_two(odd - 1);
    let odd_exponent = plus_one && (odd - 1).trailing_zeros() % 2 == 1;
    let parta = all_ones || odd_exponent || odd == 11;
    let partb = all_ones || plus_one;
    (parta, partb)
}

/// The three closed-form families of pseudoperiod triples of the ternary
/// Thue-Morse word.
pub fn vtm_triple_predicate(a: u64, b: u64, c: u64) -> bool {
    if !(1 <= a && a < b && b < c) {
        return false;
    }
    vtm_triples_up_to(c).contains(&(a, b, c))
}

/// All family members with largest entry at most `limit`, sorted.
pub fn vtm_triples_up_to(limit: u64) -> BTreeSet<(u64, u64, u64)> {
    let mut out = BTreeSet::new();
    let pow = |e: u32| 1u128.checked_shl(e).filter(|&v| v <= 1 << 100);
    // exponents are bounded once 2^{2i} or 2^{2j} exceed the limit
    let max_e = 2 + 64 - limit.leading_zeros();
    for i in 0..=max_e / 2 {
        for j in 0..=max_e / 2 {
            let fams = [
                (
                    pow(2 * i + 1).map(|x| (x - 1) * pow(2 * j + 1).unwrap()),
                    pow(2 * i + 2).map(|x| (x - 1) * pow(2 * j).unwrap()),
                    pow(2 * i + 2 * j + 2),
                ),
                (
                    Some(3 * pow(2 * j).unwrap()),
                    pow(2 * i + 2).map(|x| (x + 1) * pow(2 * j + 1).unwrap()),
                    pow(2 * i + 1).map(|x| (x + 1) * pow(2 * j + 2).unwrap()),
                ),
                (
                    pow(2 * i + 2 * j + 3),
                    pow(2 * i + 3).map(|x| (x + 1) * pow(2 * j).unwrap()),
                    pow(2 * i + 2).map(|x| (x + 1) * pow(2 * j + 1).unwrap()),
                ),
            ];
            for (x, y, z) in fams {
                if let (Some(x), Some(y), Some(z)) = (x, y, z) {
                    if z <= limit as u128 && x <= limit as u128 && y <= limit as u128 {
                        out.insert((x as u64, y as u64, z as u64));
                    }
                }
            }
        }
    }
    out
}
