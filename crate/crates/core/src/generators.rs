//! Exact prefixes of the infinite words studied here: morphic fixed points,
//! Rudin-Shapiro, paperfolding words and characteristic Sturmian words.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use crate::error::{Error, Result};

/// A substitution on `0..images.len()`; every image is nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    images: Vec<Vec<u8>>,
    uniform_length: Option<usize>,
}

impl Morphism {
    pub fn new(images: Vec<Vec<u8>>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::domain("morphism needs at least one image"));
        }
        if let Some(s) = images.iter().position(|im| im.is_empty()) {
            return Err(Error::domain(format!("image of {s} is empty")));
        }
        let first = images[0].len();
        let uniform_length = images.iter().all(|im| im.len() == first).then_some(first);
        Ok(Morphism {
            images,
            uniform_length,
        })
    }

    pub fn image(&self, symbol: u8) -> Option<&[u8]> {
        self.images.get(symbol as usize).map(Vec::as_slice)
    }

    pub fn images(&self) -> &[Vec<u8>] {
        &self.images
    }

    /// Number of source symbols.
    pub fn domain_size(&self) -> usize {
        self.images.len()
    }

    pub fn uniform_length(&self) -> Option<usize> {
        self.uniform_length
    }

    /// Largest image length.
    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_prolongable_on(&self, seed: u8) -> bool {
        self.image(seed)
            .is_some_and(|im| im.len() >= 2 && im[0] == seed)
    }

    /// `self ∘ inner`: first apply `inner`, then `self`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        let images = inner
            .images
            .iter()
            .map(|im| apply_morphism(self, im))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(images)
    }
}

impl FromStr for Morphism {
    type Err = Error;

    /// Parses `0->01 1->10`: whitespace-separated `symbol->image` pairs with
    /// decimal-digit symbols. Symbols must be exactly `0..k`, in any order.
    fn from_str(s: &str) -> Result<Self> {
        let mut images: Vec<Option<Vec<u8>>> = Vec::new();
        for (lineno, line) in s.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            for pair in line.split_whitespace() {
                let (lhs, rhs) = pair
                    .split_once("->")
                    .ok_or_else(|| Error::parse(lineno + 1, format!("expected symbol->image, got `{pair}`")))?;
                let symbol: usize = lhs
                    .parse()
                    .map_err(|_| Error::parse(lineno + 1, format!("bad symbol `{lhs}`")))?;
                let image = rhs
                    .bytes()
                    .map(|b| {
                        if b.is_ascii_digit() {
                            Ok(b - b'0')
                        } else {
                            Err(Error::parse(lineno + 1, format!("bad image `{rhs}`")))
                        }
                    })
                    .collect::<Result<Vec<u8>>>()?;
                if image.is_empty() {
                    return Err(Error::parse(lineno + 1, format!("empty image for {symbol}")));
                }
                if symbol >= images.len() {
                    images.resize(symbol + 1, None);
                }
                if images[symbol].replace(image).is_some() {
                    return Err(Error::parse(lineno + 1, format!("symbol {symbol} defined twice")));
                }
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(s, im)| im.ok_or_else(|| Error::parse(1, format!("no image for symbol {s}"))))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(images)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, im) in self.images.iter().enumerate() {
            if s > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}->{}", crate::word::format_symbols(im).replace(' ', ""))?;
        }
        Ok(())
    }
}

pub fn apply_morphism(m: &Morphism, w: &[u8]) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(w.len() * m.max_image_len());
    for &s in w {
        out.extend_from_slice(m.image(s).ok_or(Error::SymbolOutOfDomain(s))?);
    }
    Ok(out)
}

/// First `n` symbols of the fixed point of `m` that starts with `seed`.
pub fn fixed_point_prefix(m: &Morphism, seed: u8, n: usize) -> Result<Vec<u8>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if !m.is_prolongable_on(seed) {
        return Err(Error::NotProlongable(seed));
    }
    // out = m(x[..j]) is always a prefix of the fixed point x, and j < out.len().
    let mut out = m.image(seed).expect("checked above").to_vec();
    let mut j = 1;
    while out.len() < n {
        let s = out[j];
        out.extend_from_slice(m.image(s).ok_or(Error::SymbolOutOfDomain(s))?);
        j += 1;
    }
    out.truncate(n);
    Ok(out)
}

/// `r[i]` is the parity of the number of (possibly overlapping) `11` blocks in
/// the binary expansion of `i`.
pub fn rudin_shapiro_prefix(n: usize) -> Vec<u8> {
    (0..n).map(|i| ((i & (i >> 1)).count_ones() & 1) as u8).collect()
}

/// The sequences in the registry, by their short names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sequence {
    ThueMorse,
    Fibonacci,
    Tribonacci,
    TernaryThueMorse,
    MephistoWaltz,
    PeriodDoubling,
    RudinShapiro,
}

impl Sequence {
    pub const ALL: [Sequence; 7] = [
        Sequence::ThueMorse,
        Sequence::Fibonacci,
        Sequence::Tribonacci,
        Sequence::TernaryThueMorse,
        Sequence::MephistoWaltz,
        Sequence::PeriodDoubling,
        Sequence::RudinShapiro,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::ThueMorse => "t",
            Sequence::Fibonacci => "f",
            Sequence::Tribonacci => "tr",
            Sequence::TernaryThueMorse => "vtm",
            Sequence::MephistoWaltz => "mw",
            Sequence::PeriodDoubling => "pd",
            Sequence::RudinShapiro => "rs",
        }
    }

    pub fn alphabet_size(self) -> usize {
        match self {
            Sequence::Tribonacci | Sequence::TernaryThueMorse => 3,
            _ => 2,
        }
    }

    /// The generating morphism and seed, for the morphic ones.
    pub fn morphism(self) -> Option<(Morphism, u8)> {
        let (text, seed) = match self {
            Sequence::ThueMorse => ("0->01 1->10", 0),
            Sequence::Fibonacci => ("0->01 1->0", 0),
            Sequence::Tribonacci => ("0->01 1->02 2->0", 0),
            Sequence::TernaryThueMorse => ("0->1 1->20 2->210", 2),
            Sequence::MephistoWaltz => ("0->001 1->110", 0),
            Sequence::PeriodDoubling => ("0->11 1->10", 1),
            Sequence::RudinShapiro => return None,
        };
        Some((text.parse().expect("built-in morphism"), seed))
    }

    fn index(self) -> usize {
        self as usize
    }

    /// Generates the prefix from scratch, bypassing the cache.
    pub fn generate(self, n: usize) -> Vec<u8> {
        match self.morphism() {
            Some((m, seed)) => fixed_point_prefix(&m, seed, n).expect("built-in morphisms are prolongable"),
            None => rudin_shapiro_prefix(n),
        }
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Sequence::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

static CACHE: [RwLock<Vec<u8>>; 7] = [const { RwLock::new(Vec::new()) }; 7];

/// Cached prefix of a registry sequence. The cache grows to the next power of
/// two at or above `n`, so repeated requests are served by slicing.
pub fn sequence_prefix(seq: Sequence, n: usize) -> Vec<u8> {
    let slot = &CACHE[seq.index()];
    {
        let cached = slot.read().unwrap_or_else(|e| e.into_inner());
        if cached.len() >= n {
            return cached[..n].to_vec();
        }
    }
    let mut cached = slot.write().unwrap_or_else(|e| e.into_inner());
    if cached.len() < n {
        *cached = seq.generate(n.next_power_of_two().max(1024));
    }
    cached[..n].to_vec()
}

/// Prefix of length `n` of the registry sequence called `name`
/// (`t f tr vtm mw pd rs`).
pub fn named_sequence(name: &str, n: usize) -> Result<Vec<u8>> {
    Ok(sequence_prefix(name.parse()?, n))
}

/// Symbol written for a `+1` unfolding instruction; `-1` writes the other one.
pub const FOLD_PLUS_SYMBOL: u8 = 1;
pub const FOLD_MINUS_SYMBOL: u8 = 0;

/// A finite sequence of unfolding instructions, each `+1` or `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperfoldingCode(Vec<i8>);

impl PaperfoldingCode {
    pub fn new(instructions: Vec<i8>) -> Result<Self> {
        if instructions.is_empty() {
            return Err(Error::domain("paperfolding code needs at least one instruction"));
        }
        if instructions.iter().any(|&f| f != 1 && f != -1) {
            return Err(Error::domain("unfolding instructions must be +1 or -1"));
        }
        Ok(PaperfoldingCode(instructions))
    }

    /// Code number `bits` of length `len`: bit `j` set means instruction `j` is `-1`.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        PaperfoldingCode::new((0..len).map(|j| if bits >> j & 1 == 1 { -1 } else { 1 }).collect())
    }

    pub fn instructions(&self) -> &[i8] {
        &self.0
    }
}

/// The finite paperfolding word of length `2^|code| - 1`:
/// `P_1 = b(f_1)`, `P_{j+1} = P_j b(f_{j+1}) complement(reverse(P_j))`.
pub fn paperfolding_word(code: &PaperfoldingCode) -> Vec<u8> {
    let fold = |f: i8| if f > 0 { FOLD_PLUS_SYMBOL } else { FOLD_MINUS_SYMBOL };
    let mut word = Vec::with_capacity((1usize << code.0.len()) - 1);
    for &f in &code.0 {
        let tail: Vec<u8> = word.iter().rev().map(|&s| 1 - s).collect();
        word.push(fold(f));
        word.extend(tail);
    }
    word
}

/// Partial quotients `c_1, c_2, ...` of a slope `[0; c_1, c_2, ...]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction(Vec<u32>);

impl ContinuedFraction {
    pub fn new(partial_quotients: Vec<u32>) -> Result<Self> {
        if partial_quotients.is_empty() || partial_quotients.contains(&0) {
            return Err(Error::domain("partial quotients must be a nonempty list of positive integers"));
        }
        Ok(ContinuedFraction(partial_quotients))
    }

    pub fn partial_quotients(&self) -> &[u32] {
        &self.0
    }
}

/// Prefix of the characteristic Sturmian word with the given slope, built
/// from the standard words `s_{-1} = 1`, `s_0 = 0`, `s_1 = 0^{c_1 - 1} 1`,
/// `s_j = s_{j-1}^{c_j} s_{j-2}`.
pub fn sturmian_characteristic(cf: &ContinuedFraction, n: usize) -> Result<Vec<u8>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut older = vec![1u8];
    let mut old = vec![0u8];
    for (j, &c) in cf.0.iter().enumerate() {
        // the first step uses exponent c_1 - 1 with s_{-1} = 1 as the tail
        let reps = if j == 0 { c - 1 } else { c } as usize;
        let mut next = Vec::with_capacity(old.len() * reps + older.len());
        for _ in 0..reps {
            next.extend_from_slice(&old);
        }
        next.extend_from_slice(&older);
        older = std::mem::replace(&mut old, next);
        if old.len() >= n {
            old.truncate(n);
            return Ok(old);
        }
    }
    Err(Error::InsufficientQuotients(n))
}
