//! Finite words over small integer alphabets, and the basic vocabulary built on
//! them: periods, exponents, fractional powers and runs.
//!
//! Words are indexed from 0. Most operations in the crate take plain `&[u8]`
//! slices; [`Word`] adds an explicit alphabet size and text (de)serialization.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet_size: usize,
}

/// How to read a word from text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WordFormat {
    /// Whitespace inside the text selects [`WordFormat::Integers`], a string of
    /// decimal digits selects [`WordFormat::Digits`], anything else is coded
    /// letter by letter.
    #[default]
    Auto,
    Digits,
    Integers,
    /// Each distinct character gets the next free symbol, in order of first
    /// appearance.
    Letters,
}

impl Word {
    /// Builds a word whose alphabet is `0..=max(symbols)` (size 1 for the empty word).
    pub fn new(symbols: Vec<u8>) -> Self {
        let alphabet_size = symbols.iter().map(|&s| s as usize + 1).max().unwrap_or(1);
        Word {
            symbols,
            alphabet_size,
        }
    }

    pub fn with_alphabet(symbols: Vec<u8>, alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 || alphabet_size > 256 {
            return Err(Error::domain("alphabet size must be in 1..=256"));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s as usize >= alphabet_size) {
            return Err(Error::domain(format!(
                "symbol {s} does not fit alphabet of size {alphabet_size}"
            )));
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    /// Codes arbitrary text letter by letter. Returns the word and the letter
    /// assigned to each symbol, for display.
    pub fn encode_letters(text: &str) -> (Word, Vec<char>) {
        let mut letters: Vec<char> = Vec::new();
        let symbols = text
            .chars()
            .map(|c| match letters.iter().position(|&l| l == c) {
                Some(i) => i as u8,
                None => {
                    letters.push(c);
                    (letters.len() - 1) as u8
                }
            })
            .collect();
        (Word::new(symbols), letters)
    }

    pub fn parse(text: &str, format: WordFormat) -> Result<Self> {
        let text = text.trim();
        let format = match format {
            WordFormat::Auto if text.split_whitespace().nth(1).is_some() => WordFormat::Integers,
            WordFormat::Auto if text.bytes().all(|b| b.is_ascii_digit()) => WordFormat::Digits,
            WordFormat::Auto => WordFormat::Letters,
            f => f,
        };
        match format {
            WordFormat::Digits => text
                .bytes()
                .map(|b| {
                    if b.is_ascii_digit() {
                        Ok(b - b'0')
                    } else {
                        Err(Error::parse(1, format!("`{}` is not a digit", b as char)))
                    }
                })
                .collect::<Result<Vec<_>>>()
                .map(Word::new),
            WordFormat::Integers => text
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u8>()
                        .map_err(|_| Error::parse(1, format!("`{tok}` is not a symbol in 0..=255")))
                })
                .collect::<Result<Vec<_>>>()
                .map(Word::new),
            WordFormat::Letters => Ok(Word::encode_letters(text).0),
            WordFormat::Auto => unreachable!(),
        }
    }

    /// Digits when every symbol is below 10, whitespace-separated integers otherwise.
    pub fn to_text(&self) -> String {
        format_symbols(&self.symbols)
    }
}

pub fn format_symbols(symbols: &[u8]) -> String {
    if symbols.iter().all(|&s| s < 10) {
        symbols.iter().map(|&s| (b'0' + s) as char).collect()
    } else {
        symbols
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.symbols
    }
}

impl From<Vec<u8>> for Word {
    fn from(symbols: Vec<u8>) -> Self {
        Word::new(symbols)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s, WordFormat::Auto)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// An exact rational exponent, optionally "plus": `e+` sits strictly between
/// `e` and every rational larger than `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponent {
    num: u64,
    den: u64,
    plus: bool,
}

impl Exponent {
    pub fn new(num: u64, den: u64, plus: bool) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::domain("exponent needs a positive numerator and denominator"));
        }
        let g = num.gcd(&den);
        Ok(Exponent {
            num: num / g,
            den: den / g,
            plus,
        })
    }

    pub fn integer(n: u64) -> Self {
        Exponent::new(n.max(1), 1, false).expect("positive")
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn is_plus(&self) -> bool {
        self.plus
    }

    pub fn with_plus(self, plus: bool) -> Self {
        Exponent { plus, ..self }
    }

    /// True when the rational value is at least 1.
    pub fn at_least_one(&self) -> bool {
        self.num >= self.den
    }

    /// Whether a factor of length `len` with period `period` has exponent at or
    /// beyond this threshold (`>=` for plain thresholds, `>` for plus ones).
    pub fn reached_by(&self, len: usize, period: usize) -> bool {
        let lhs = len as u128 * self.den as u128;
        let rhs = self.num as u128 * period as u128;
        if self.plus {
            lhs > rhs
        } else {
            lhs >= rhs
        }
    }

    /// Shortest factor length with the given period that reaches this threshold.
    pub fn min_length(&self, period: usize) -> usize {
        let scaled = self.num as u128 * period as u128;
        let den = self.den as u128;
        let len = if self.plus {
            scaled / den + 1
        } else {
            scaled.div_ceil(den)
        };
        len as usize
    }

    /// Compares the rational parts only.
    fn cmp_value(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other).then(self.plus.cmp(&other.plus))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)?;
        if self.plus {
            f.write_str("+")?;
        }
        Ok(())
    }
}

impl FromStr for Exponent {
    type Err = Error;

    /// Accepts `7/3`, `7/3+`, `3` and `3+`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, plus) = match s.strip_suffix('+') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let bad = || Error::parse(1, format!("`{s}` is not an exponent like 7/3 or 7/3+"));
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ),
            None => (body.parse().map_err(|_| bad())?, 1),
        };
        Exponent::new(num, den, plus).map_err(|_| bad())
    }
}

/// A maximal block of equal consecutive symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub symbol: u8,
    pub start: usize,
    pub length: usize,
}

/// All periods `p` in `1..=|w|`, ascending.
pub fn periods(w: &[u8]) -> Result<Vec<usize>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    // p is a period iff |w| - p is a border length.
    let border = failure_function(w);
    let n = w.len();
    let mut out = Vec::new();
    let mut b = border[n];
    while b > 0 {
        out.push(n - b);
        b = border[b];
    }
    out.push(n);
    Ok(out)
}

pub fn smallest_period(w: &[u8]) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(w.len() - failure_function(w)[w.len()])
}

/// `border[i]` is the length of the longest proper border of `w[..i]`.
fn failure_function(w: &[u8]) -> Vec<usize> {
    let mut border = vec![0usize; w.len() + 1];
    let mut k = 0;
    for i in 1..w.len() {
        while k > 0 && w[i] != w[k] {
            k = border[k];
        }
        if w[i] == w[k] {
            k += 1;
        }
        border[i + 1] = k;
    }
    border
}

/// `|w|` over the smallest period of `w`.
pub fn exponent(w: &[u8]) -> Result<Exponent> {
    let p = smallest_period(w)?;
    Exponent::new(w.len() as u64, p as u64, false)
}

/// The prefix of `x^ω` of length `num * |x| / den`.
pub fn fractional_power(x: &[u8], num: usize, den: usize) -> Result<Vec<u8>> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    if den == 0 || !x.len().is_multiple_of(den) {
        return Err(Error::domain(format!(
            "denominator {den} does not divide |x| = {}",
            x.len()
        )));
    }
    if num < den {
        return Err(Error::domain("fractional power needs num >= den"));
    }
    let len = num * (x.len() / den);
    Ok(x.iter().copied().cycle().take(len).collect())
}

/// Decomposition into maximal runs, left to right.
pub fn runs(w: &[u8]) -> Vec<Run> {
    let mut out: Vec<Run> = Vec::new();
    for (i, &s) in w.iter().enumerate() {
        match out.last_mut() {
            Some(run) if run.symbol == s => run.length += 1,
            _ => out.push(Run {
                symbol: s,
                start: i,
                length: 1,
            }),
        }
    }
    out
}
