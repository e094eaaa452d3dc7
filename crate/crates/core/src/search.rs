//! Exhaustive searches over words constrained by a pseudoperiod and a
//! forbidden power, backtracking generation of power-free words, and bounded
//! verification of morphic constructions.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generators::{apply_morphism, sequence_prefix, Morphism, Sequence};
use crate::powers::{avoids, contains_power_at_least, suffix_reaches, PowerWitness};
use crate::pseudoperiod::{first_violation, PpTuple};
use crate::word::{Exponent, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub alphabet_size: usize,
    pub pp: PpTuple,
    /// Words containing a factor that reaches this exponent are pruned.
    pub forbidden: Exponent,
    /// Words are never extended past this length.
    pub depth_cap: usize,
}

impl SearchSpec {
    pub fn new(alphabet_size: usize, pp: PpTuple, forbidden: Exponent, depth_cap: usize) -> Result<Self> {
        if !(2..=10).contains(&alphabet_size) {
            return Err(Error::domain(format!("alphabet size {alphabet_size} is outside 2..=10")));
        }
        if depth_cap < pp.largest() {
            return Err(Error::domain(format!(
                "depth cap {depth_cap} is below the largest period {}",
                pp.largest()
            )));
        }
        if !forbidden.at_least_one() {
            return Err(Error::domain(format!("exponent {forbidden} is below 1")));
        }
        Ok(SearchSpec {
            alphabet_size,
            pp,
            forbidden,
            depth_cap,
        })
    }

    /// Binary words, default cap of 10000.
    pub fn binary(pp: PpTuple, forbidden: Exponent) -> Result<Self> {
        SearchSpec::new(2, pp, forbidden, 10_000)
    }

    /// Whether `w` stays in the tree, given that `w[..len - 1]` does.
    fn extends(&self, w: &[u8]) -> bool {
        let last = w.len() - 1;
        if let Some(i) = last.checked_sub(self.pp.largest()) {
            if !self.pp.entries().iter().any(|&p| w[i + p] == w[i]) {
                return false;
            }
        }
        !suffix_reaches(w, &self.forbidden)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    FiniteTree,
    CapExceeded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::FiniteTree => "finite tree",
            Verdict::CapExceeded => "cap exceeded",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub longest_length: usize,
    /// Lexicographically least word of length `longest_length`.
    pub witness_word: Word,
    /// Number of tree nodes visited.
    pub nodes: u64,
}

#[derive(Debug, Clone)]
struct Best {
    word: Vec<u8>,
    capped: bool,
    nodes: u64,
}

impl Best {
    fn merge(mut self, other: Best) -> Best {
        if other.word.len() > self.word.len()
            || (other.word.len() == self.word.len() && other.word < self.word)
        {
            self.word = other.word;
        }
        self.capped |= other.capped;
        self.nodes += other.nodes;
        self
    }
}

/// Depth-first walk below `start`, smallest symbol first. With `halt`, stops
/// at the first word of length `depth_cap`; otherwise such words are visited
/// but not extended, and the walk moves on to their siblings.
fn explore(spec: &SearchSpec, start: &[u8], halt: bool, visit: &mut dyn FnMut(&[u8])) -> Best {
    let mut w = start.to_vec();
    let mut best = Best {
        word: w.clone(),
        capped: w.len() >= spec.depth_cap,
        nodes: 1,
    };
    visit(&w);
    if best.capped {
        return best;
    }
    let base = w.len();
    let k = spec.alphabet_size as u8;
    w.push(0);
    loop {
        let depth = w.len();
        let symbol = w[depth - 1];
        if symbol == k {
            w.pop();
            if w.len() == base {
                return best;
            }
            *w.last_mut().expect("above base") += 1;
            continue;
        }
        if spec.extends(&w) {
            best.nodes += 1;
            visit(&w);
            if depth > best.word.len() {
                best.word = w.clone();
            }
            if depth >= spec.depth_cap {
                best.capped = true;
                if halt {
                    return best;
                }
                *w.last_mut().expect("nonempty") += 1;
            } else {
                w.push(0);
            }
        } else {
            *w.last_mut().expect("nonempty") += 1;
        }
    }
}

/// Every surviving word, in depth-first lexicographic order.
pub fn for_each_constrained_word(spec: &SearchSpec, mut visit: impl FnMut(&[u8])) -> SearchOutcome {
    outcome(explore(spec, &[], true, &mut visit))
}

fn outcome(best: Best) -> SearchOutcome {
    SearchOutcome {
        verdict: if best.capped {
            Verdict::CapExceeded
        } else {
            Verdict::FiniteTree
        },
        longest_length: best.word.len(),
        witness_word: Word::new(best.word),
        nodes: best.nodes,
    }
}

/// Length of the longest word having pseudoperiod `spec.pp` and avoiding the
/// forbidden exponent, with a lexicographically least witness.
pub fn longest_constrained_word(spec: &SearchSpec) -> SearchOutcome {
    // Frontier of survivors at a fixed small depth, searched independently.
    const SPLIT_DEPTH: usize = 10;
    let split = SPLIT_DEPTH.min(spec.depth_cap);
    let mut frontier = Vec::new();
    let mut shallow = explore(
        &SearchSpec {
            depth_cap: split,
            ..spec.clone()
        },
        &[],
        false,
        &mut |w: &[u8]| {
            if w.len() == split {
                frontier.push(w.to_vec());
            }
        },
    );
    if split == spec.depth_cap || frontier.is_empty() {
        return outcome(shallow);
    }
    shallow.capped = false;
    // frontier nodes are visited again as subtree roots
    shallow.nodes -= frontier.len() as u64;
    let run = |root: &Vec<u8>| explore(spec, root, true, &mut |_: &[u8]| {});
    #[cfg(feature = "parallel")]
    let parts: Vec<Best> = frontier.par_iter().map(run).collect();
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Best> = frontier.iter().map(run).collect();
    outcome(parts.into_iter().fold(shallow, Best::merge))
}

/// Outcome of checking a morphic construction on a finite prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub prefix_len: usize,
    pub pp_violation: Option<usize>,
    pub power_witness: Option<PowerWitness>,
}

impl ConstructionReport {
    pub fn pp_holds(&self) -> bool {
        self.pp_violation.is_none()
    }

    pub fn power_free(&self) -> bool {
        self.power_witness.is_none()
    }

    pub fn passed(&self) -> bool {
        self.pp_holds() && self.power_free()
    }
}

/// First `len` symbols of `m` applied to the named sequence.
pub fn image_prefix(m: &Morphism, base: Sequence, len: usize) -> Result<Vec<u8>> {
    let shortest = m.images().iter().map(Vec::len).min().expect("nonempty");
    let mut image = apply_morphism(m, &sequence_prefix(base, len.div_ceil(shortest)))?;
    image.truncate(len);
    Ok(image)
}

/// Checks pseudoperiod `pp` and avoidance of `free_at` on the first
/// `prefix_len` symbols of `m(base)`.
pub fn verify_construction(
    m: &Morphism,
    base: Sequence,
    pp: &PpTuple,
    free_at: &Exponent,
    prefix_len: usize,
) -> Result<ConstructionReport> {
    if prefix_len < 10 * pp.largest() {
        return Err(Error::Precondition(format!(
            "prefix length {prefix_len} is below 10 * {}",
            pp.largest()
        )));
    }
    let w = image_prefix(m, base, prefix_len)?;
    Ok(ConstructionReport {
        prefix_len,
        pp_violation: first_violation(&w, pp),
        power_witness: contains_power_at_least(&w, free_at)?,
    })
}

/// For each sample `a`, whether `m(t)` has pseudoperiod `(1, a)` and is
/// `3+`-free on its first `prefix_len` symbols.
pub fn verify_residue_class(
    m: &Morphism,
    i: usize,
    n: usize,
    samples: &[usize],
    prefix_len: usize,
) -> Result<Vec<(usize, ConstructionReport)>> {
    if m.uniform_length() != Some(n) {
        return Err(Error::Precondition(format!("morphism is not {n}-uniform")));
    }
    if let Some(a) = samples.iter().find(|&&a| a % n != i % n || a < 2) {
        return Err(Error::Precondition(format!("{a} is not in the class {i} mod {n}")));
    }
    let w = image_prefix(m, Sequence::ThueMorse, prefix_len)?;
    let power_witness = contains_power_at_least(&w, &Exponent::integer(3).with_plus(true))?;
    samples
        .iter()
        .map(|&a| {
            let pp = PpTuple::new(vec![1, a])?;
            Ok((
                a,
                ConstructionReport {
                    prefix_len,
                    pp_violation: first_violation(&w, &pp),
                    power_witness,
                },
            ))
        })
        .collect()
}

/// Number of residues modulo `lcm(n)` lying in at least one class `i mod n`.
pub fn residue_coverage(classes: &[(usize, usize)]) -> (u64, u64) {
    let modulus = classes.iter().fold(1u64, |acc, &(_, n)| acc.lcm(&(n as u64)));
    let covered = (0..modulus)
        .filter(|&r| classes.iter().any(|&(i, n)| r % n as u64 == i as u64 % n as u64))
        .count() as u64;
    (covered, modulus)
}

/// Known repetition thresholds: `7/4` for 3 letters, `7/5` for 4, `k/(k-1)`
/// otherwise.
pub fn repetition_threshold(k: usize) -> Result<Exponent> {
    match k {
        0 | 1 => Err(Error::domain("repetition threshold needs at least 2 letters")),
        3 => Exponent::new(7, 4, false),
        4 => Exponent::new(7, 5, false),
        _ => Exponent::new(k as u64, k as u64 - 1, false),
    }
}

/// Lexicographically least word of length `target_len` over `k` letters that
/// avoids `e` (plain or plus, as `e` says). `cap` bounds the number of
/// backtracking steps.
pub fn generate_threshold_word(k: usize, e: &Exponent, target_len: usize, cap: u64) -> Result<Word> {
    if !(1..=10).contains(&k) {
        return Err(Error::domain(format!("alphabet size {k} is outside 1..=10")));
    }
    if !e.at_least_one() {
        return Err(Error::domain(format!("exponent {e} is below 1")));
    }
    let mut w: Vec<u8> = Vec::with_capacity(target_len);
    let mut next = 0u8;
    let mut steps = 0u64;
    while w.len() < target_len {
        if next as usize == k {
            let last = w.pop().ok_or_else(|| {
                Error::Precondition(format!("no word of length {target_len} over {k} letters avoids {e}"))
            })?;
            next = last + 1;
            steps += 1;
            if steps > cap {
                return Err(Error::CapExhausted(cap));
            }
            continue;
        }
        w.push(next);
        if suffix_reaches(&w, e) {
            w.pop();
            next += 1;
        } else {
            next = 0;
        }
    }
    Word::with_alphabet(w, k)
}

/// A uniform morphism with a common prefix on every image, together with the
/// properties its images are claimed to have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformConstruction {
    pub pp: PpTuple,
    pub avoids: Exponent,
    pub source_alphabet: usize,
    pub prefix: Vec<u8>,
    pub morphism: Morphism,
}

impl UniformConstruction {
    pub fn length(&self) -> usize {
        self.morphism.uniform_length().expect("uniform by construction")
    }
}

fn digits(s: &str, line: usize) -> Result<Vec<u8>> {
    s.bytes()
        .map(|b| {
            b.is_ascii_digit()
                .then_some(b - b'0')
                .ok_or_else(|| Error::parse(line, format!("bad digit string `{s}`")))
        })
        .collect()
}

impl FromStr for UniformConstruction {
    type Err = Error;

    /// ```text
    /// uniform 84
    /// pseudoperiod (9,19)
    /// avoids 4/3+
    /// source-alphabet 5
    /// prefix 043012032142
    /// 0 <image of 0 after the prefix>
    /// ...
    /// ```
    fn from_str(s: &str) -> Result<Self> {
        let mut length = None;
        let mut pp = None;
        let mut avoids = None;
        let mut source = None;
        let mut prefix = None;
        let mut images: Vec<(usize, usize, Vec<u8>)> = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let lineno = i + 1;
            let Some((key, value)) = line.trim().split_once(' ') else {
                if line.trim().is_empty() {
                    continue;
                }
                return Err(Error::parse(lineno, format!("expected `key value`, got `{line}`")));
            };
            let value = value.trim();
            let bad = |what: &str| Error::parse(lineno, format!("bad {what} `{value}`"));
            match key {
                "uniform" => length = Some(value.parse::<usize>().map_err(|_| bad("length"))?),
                "pseudoperiod" => pp = Some(value.parse::<PpTuple>()?),
                "avoids" => avoids = Some(value.parse::<Exponent>()?),
                "source-alphabet" => source = Some(value.parse::<usize>().map_err(|_| bad("alphabet size"))?),
                "prefix" => prefix = Some(digits(value, lineno)?),
                symbol => {
                    let symbol = symbol.parse::<usize>().map_err(|_| Error::parse(lineno, format!("unknown key `{symbol}`")))?;
                    images.push((lineno, symbol, digits(value, lineno)?));
                }
            }
        }
        let missing = |what: &str| Error::parse(1, format!("missing `{what}` line"));
        let length = length.ok_or_else(|| missing("uniform"))?;
        let prefix = prefix.ok_or_else(|| missing("prefix"))?;
        let source_alphabet = source.ok_or_else(|| missing("source-alphabet"))?;
        if images.len() != source_alphabet || images.iter().enumerate().any(|(s, im)| im.1 != s) {
            return Err(Error::parse(1, format!("expected images for 0..{source_alphabet} in order")));
        }
        let mut full = Vec::with_capacity(images.len());
        for (lineno, symbol, tail) in images {
            let image = [prefix.as_slice(), &tail].concat();
            if image.len() != length {
                return Err(Error::Structural(format!(
                    "line {lineno}: image of {symbol} has length {}, expected {length}",
                    image.len()
                )));
            }
            full.push(image);
        }
        Ok(UniformConstruction {
            pp: pp.ok_or_else(|| missing("pseudoperiod"))?,
            avoids: avoids.ok_or_else(|| missing("avoids"))?,
            source_alphabet,
            prefix,
            morphism: Morphism::new(full)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LargeAlphabetTheorem {
    Pp18_37,
    Pp4_10,
    Pp9_19,
}

impl LargeAlphabetTheorem {
    pub const ALL: [LargeAlphabetTheorem; 3] = [Self::Pp18_37, Self::Pp4_10, Self::Pp9_19];

    pub fn name(self) -> &'static str {
        match self {
            Self::Pp18_37 => "18_37",
            Self::Pp4_10 => "4_10",
            Self::Pp9_19 => "9_19",
        }
    }

    pub fn source(self) -> &'static str {
        match self {
            Self::Pp18_37 => include_str!("../data/morphisms/uniform_18_37.txt"),
            Self::Pp4_10 => include_str!("../data/morphisms/uniform_4_10.txt"),
            Self::Pp9_19 => include_str!("../data/morphisms/uniform_9_19.txt"),
        }
    }

    pub fn expected_length(self) -> usize {
        match self {
            Self::Pp18_37 => 188,
            Self::Pp4_10 => 170,
            Self::Pp9_19 => 84,
        }
    }

    pub fn construction(self) -> Result<UniformConstruction> {
        let c: UniformConstruction = self.source().parse()?;
        if c.length() != self.expected_length() {
            return Err(Error::Structural(format!(
                "{}-uniform morphism found, expected {}",
                c.length(),
                self.expected_length()
            )));
        }
        Ok(c)
    }
}

impl FromStr for LargeAlphabetTheorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown theorem `{s}` (known: 18_37 4_10 9_19)")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub base_word: Word,
    pub image_len: usize,
    pub pp_violation: Option<usize>,
    pub power_witness: Option<PowerWitness>,
    /// Occurrences of the common prefix at positions that are not multiples of
    /// the image length.
    pub misplaced_prefixes: Vec<usize>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.pp_violation.is_none() && self.power_witness.is_none() && self.misplaced_prefixes.is_empty()
    }
}

/// Applies the theorem's morphism to a threshold word of length `base_len`
/// and checks the image.
pub fn verify_large_alphabet_theorem(which: LargeAlphabetTheorem, base_len: usize) -> Result<TheoremReport> {
    let c = which.construction()?;
    let threshold = repetition_threshold(c.source_alphabet)?.with_plus(true);
    let base = generate_threshold_word(c.source_alphabet, &threshold, base_len, 10_000_000)?;
    let image = apply_morphism(&c.morphism, &base)?;
    let misplaced_prefixes = image
        .windows(c.prefix.len())
        .enumerate()
        .filter(|&(i, f)| f == c.prefix.as_slice() && i % c.length() != 0)
        .map(|(i, _)| i)
        .collect();
    Ok(TheoremReport {
        image_len: image.len(),
        pp_violation: first_violation(&image, &c.pp),
        power_witness: contains_power_at_least(&image, &c.avoids)?,
        misplaced_prefixes,
        base_word: base,
    })
}

/// A vendored morphism and the sequence it is applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InventoryEntry {
    pub name: &'static str,
    pub morphism: Morphism,
    pub base: Sequence,
}

const VENDORED: [(&str, &str); 22] = [
    ("sha3", include_str!("../data/morphisms/sha3.txt")),
    ("h_1_6", include_str!("../data/morphisms/h_1_6.txt")),
    ("mu", include_str!("../data/morphisms/mu.txt")),
    ("res_4_5", include_str!("../data/morphisms/res_4_5.txt")),
    ("res_3_7", include_str!("../data/morphisms/res_3_7.txt")),
    ("res_4_9", include_str!("../data/morphisms/res_4_9.txt")),
    ("res_8_9", include_str!("../data/morphisms/res_8_9.txt")),
    ("res_4_11", include_str!("../data/morphisms/res_4_11.txt")),
    ("res_5_11", include_str!("../data/morphisms/res_5_11.txt")),
    ("res_7_11", include_str!("../data/morphisms/res_7_11.txt")),
    ("res_8_11", include_str!("../data/morphisms/res_8_11.txt")),
    ("res_10_11", include_str!("../data/morphisms/res_10_11.txt")),
    ("res_5_13", include_str!("../data/morphisms/res_5_13.txt")),
    ("res_8_13", include_str!("../data/morphisms/res_8_13.txt")),
    ("res_4_14", include_str!("../data/morphisms/res_4_14.txt")),
    ("res_9_14", include_str!("../data/morphisms/res_9_14.txt")),
    ("res_13_14", include_str!("../data/morphisms/res_13_14.txt")),
    ("res_7_15", include_str!("../data/morphisms/res_7_15.txt")),
    ("res_4_16", include_str!("../data/morphisms/res_4_16.txt")),
    ("res_6_16", include_str!("../data/morphisms/res_6_16.txt")),
    ("res_10_16", include_str!("../data/morphisms/res_10_16.txt")),
    ("res_15_16", include_str!("../data/morphisms/res_15_16.txt")),
];

const ALIASES: [(&str, &str); 2] = [("a45", "res_4_5"), ("h_1_5", "sha3")];

/// Every vendored morphism with its base sequence (`vtm` for `h_1_6`, `t`
/// otherwise).
pub fn inventory() -> Vec<InventoryEntry> {
    VENDORED
        .iter()
        .map(|&(name, text)| InventoryEntry {
            name,
            morphism: text.parse().expect("vendored morphism parses"),
            base: if name == "h_1_6" {
                Sequence::TernaryThueMorse
            } else {
                Sequence::ThueMorse
            },
        })
        .collect()
}

pub fn inventory_entry(name: &str) -> Result<InventoryEntry> {
    let name = ALIASES
        .iter()
        .find(|&&(alias, _)| alias == name)
        .map_or(name, |&(_, target)| target);
    inventory()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::domain(format!("no vendored morphism named `{name}`")))
}

/// The `(i, n)` classes with a vendored residue-class morphism.
pub fn residue_classes() -> Vec<(usize, usize, InventoryEntry)> {
    inventory()
        .into_iter()
        .filter_map(|e| {
            let rest = e.name.strip_prefix("res_")?;
            let (i, n) = rest.split_once('_')?;
            Some((i.parse().ok()?, n.parse().ok()?, e))
        })
        .collect()
}

/// One finite cell of the table of optimal critical exponents for binary
/// words with pseudoperiod `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptimalCell {
    pub a: usize,
    pub b: usize,
    /// Words avoiding this exponent form a finite tree.
    pub exponent: &'static str,
    pub longest: usize,
    /// The morphic word realizing the exponent, as written in the table.
    pub construction: &'static str,
}

macro_rules! cells {
    ($(($a:expr, $b:expr, $e:expr, $l:expr, $c:expr)),* $(,)?) => {
        &[$(OptimalCell { a: $a, b: $b, exponent: $e, longest: $l, construction: $c }),*]
    };
}

pub const OPTIMAL_EXPONENTS: &[OptimalCell] = cells![
    (1, 3, "5/2", 33, "h_1_3(t)"),
    (1, 4, "3", 11, "h_1_4(t)"),
    (1, 5, "13/5", 29, "h_1_5(t)"),
    (1, 6, "7/3", 15, "h_1_6(vtm)"),
    (1, 7, "3", 61, "h_1_7(t)"),
    (1, 8, "3", 45, "h_1_8(t)"),
    (1, 9, "5/2", 43, "h_1_9(t)"),
    (1, 10, "5/2", 33, "h_1_10(t)"),
    (1, 11, "5/2", 52, "h_1_11(t)"),
    (1, 12, "5/2", 57, "h_1_12(t)"),
    (2, 3, "13/5", 30, "h_1_5(t)"),
    (2, 5, "3", 15, "h_2_5(t)"),
    (2, 6, "5/2", 66, "mu(h_1_3(t))"),
    (2, 7, "13/5", 84, "h_2_7(t)"),
    (2, 8, "13/5", 30, "h_1_5(t)"),
    (2, 9, "5/2", 19, "h_2_9(t)"),
    (2, 10, "13/5", 60, "mu(h_1_5(t))"),
    (2, 11, "5/2", 20, "h_2_11(t)"),
    (2, 12, "7/3", 31, "mu(h_1_6(vtm))"),
    (3, 4, "5/2", 33, "h_1_3(t)"),
    (3, 5, "13/5", 34, "h_1_5(t)"),
    (3, 7, "13/5", 98, "h_1_5(t)"),
    (3, 8, "5/2", 42, "h_1_3(t)"),
    (3, 9, "8/3", 28, "h_3_9(t)"),
    (3, 10, "13/5", 69, "h_1_5(t)"),
    (3, 11, "5/2", 59, "h_1_3(t)"),
    (3, 12, "8/3", 72, "h_3_12(t)"),
    (4, 5, "3", 21, "h_4_5(t)"),
    (4, 6, "7/3", 40, "h_4_6(t)"),
    (4, 7, "3", 61, "h_1_7(t)"),
    (4, 9, "7/3", 18, "h_1_6(vtm)"),
    (4, 10, "5/2", 33, "h_1_10(t)"),
    (4, 11, "5/2", 19, "h_4_11(t)"),
    (4, 12, "5/2", 141, "mu(mu(h_1_3(t)))"),
    (5, 6, "5/2", 66, "h_5_6(t)"),
    (5, 7, "3", 68, "h_2_5(t)"),
    (5, 8, "13/5", 33, "h_1_5(t)"),
    (5, 9, "5/2", 66, "h_2_6(t)"),
    (5, 11, "5/2", 20, "h_2_11(t)"),
    (5, 12, "18/7", 158, "h_5_12(t)"),
    (6, 7, "7/3", 40, "h_4_6(t)"),
    (6, 8, "5/2", 60, "mu(h_1_3(t))"),
    (6, 9, "17/6", 89, "h_6_9(t)"),
    (6, 10, "7/3", 48, "h_6_10(t)"),
    (6, 11, "5/2", 69, "h_1_11(t)"),
    (7, 8, "13/5", 50, "h_1_5(t)"),
    (7, 9, "7/3", 41, "h_4_6(t)"),
    (7, 10, "13/5", 92, "h_2_7(t)"),
    (7, 11, "13/5", 84, "h_7_11(t)"),
    (7, 12, "7/3", 31, "h_1_6(vtm)"),
    (8, 9, "5/2", 66, "h_8_9(t)"),
    (8, 10, "5/2", 33, "h_1_10(t)"),
    (8, 11, "3", 65, "h_8_11(t)"),
    (8, 12, "7/3", 82, "mu(h_4_6(t))"),
    (9, 10, "7/3", 40, "h_6_10(t)"),
    (9, 11, "5/2", 57, "h_9_11(t)"),
    (9, 12, "55/21", 200, "h_9_12(t)"),
    (10, 11, "5/2", 33, "h_1_10(t)"),
    (10, 12, "7/3", 54, "h_10_12(t)"),
    (11, 12, "7/3", 31, "h_11_12(vtm)"),
];

pub fn optimal_cell(a: usize, b: usize) -> Option<&'static OptimalCell> {
    OPTIMAL_EXPONENTS.iter().find(|c| c.a == a && c.b == b)
}

/// Search specification for a table cell: binary words with pseudoperiod
/// `(a, b)` avoiding the cell's exponent (plain, not plus).
pub fn cell_spec(cell: &OptimalCell) -> SearchSpec {
    SearchSpec::binary(
        PpTuple::new(vec![cell.a, cell.b]).expect("a < b"),
        cell.exponent.parse().expect("valid exponent"),
    )
    .expect("valid spec")
}

/// A morphic word from the inventory, possibly doubled by `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub label: String,
    pub morphism: Morphism,
    pub base: Sequence,
}

/// Inventory entries (other than `mu`) applied directly and under `mu`.
pub fn constructions() -> Vec<Construction> {
    let mu = inventory_entry("mu").expect("vendored").morphism;
    let mut out = Vec::new();
    for e in inventory().into_iter().filter(|e| e.name != "mu") {
        let doubled = mu.compose(&e.morphism).expect("binary images");
        out.push(Construction {
            label: format!("{}({})", e.name, e.base),
            morphism: e.morphism,
            base: e.base,
        });
        out.push(Construction {
            label: format!("mu({}({}))", e.name, e.base),
            morphism: doubled,
            base: e.base,
        });
    }
    out
}

/// For one pair `(a, b)`: the first construction whose image prefix has the
/// pseudoperiod and is `3+`-free, or `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageRow {
    pub a: usize,
    pub b: usize,
    pub construction: Option<String>,
}

/// Tries every construction on every pair `1 <= a < b <= max_b`, `b != 2a`.
pub fn cube_plus_coverage(max_b: usize, prefix_len: usize) -> Result<Vec<CoverageRow>> {
    let cube_plus = Exponent::integer(3).with_plus(true);
    let candidates: Vec<(String, Vec<u8>)> = constructions()
        .into_iter()
        .map(|c| Ok((c.label, image_prefix(&c.morphism, c.base, prefix_len)?)))
        .collect::<Result<Vec<_>>>()?;
    let check = |(label, w): (String, Vec<u8>)| -> Result<Option<(String, Vec<u8>)>> {
        Ok(avoids(&w, &cube_plus)?.then_some((label, w)))
    };
    #[cfg(feature = "parallel")]
    let free: Vec<Option<(String, Vec<u8>)>> = candidates.into_par_iter().map(check).collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let free: Vec<Option<(String, Vec<u8>)>> = candidates.into_iter().map(check).collect::<Result<_>>()?;
    let free: Vec<(String, Vec<u8>)> = free.into_iter().flatten().collect();
    let mut rows = Vec::new();
    for b in 2..=max_b {
        for a in (1..b).filter(|&a| b != 2 * a) {
            let pp = PpTuple::new(vec![a, b])?;
            let construction = free
                .iter()
                .find(|(_, w)| first_violation(w, &pp).is_none())
                .map(|(label, _)| label.clone());
            rows.push(CoverageRow { a, b, construction });
        }
    }
    rows.sort_by_key(|r| (r.a, r.b));
    Ok(rows)
}
