//! Browser bindings for a small demo page: check a tuple on a sequence
//! prefix, draw the triple automaton as a grid, and search finite trees.
//!
//! The `*_impl` functions hold the logic and run natively in tests; the
//! exported wrappers only convert errors.

use pseudoperiodic::{
    dfa_accepts, first_violation, longest_constrained_word, named_sequence, shev_cond, PpTuple, SearchSpec, TupleDfa,
    Verdict,
};
use wasm_bindgen::prelude::*;

/// Longest prefix the page will ask for.
pub const MAX_PREFIX: usize = 1 << 16;
/// Depth cap for searches started from the page.
pub const SEARCH_CAP: usize = 2_000;

#[wasm_bindgen]
pub struct PrefixCheck {
    word: String,
    violation: Option<usize>,
    tuple: Vec<usize>,
}

#[wasm_bindgen]
impl PrefixCheck {
    /// The prefix as digits.
    #[wasm_bindgen(getter)]
    pub fn word(&self) -> String {
        self.word.clone()
    }

    /// First position where the tuple fails, if any.
    #[wasm_bindgen(getter)]
    pub fn violation(&self) -> Option<u32> {
        self.violation.map(|v| v as u32)
    }

    /// Positions compared at the violation: `i` and `i + p` for each entry.
    #[wasm_bindgen(getter)]
    pub fn highlight(&self) -> Vec<u32> {
        match self.violation {
            None => Vec::new(),
            Some(i) => std::iter::once(i).chain(self.tuple.iter().map(|p| i + p)).map(|x| x as u32).collect(),
        }
    }

    #[wasm_bindgen(getter)]
    pub fn label(&self) -> String {
        match self.violation {
            None => format!("consistent-on-prefix: true (prefix length {})", self.word.len()),
            Some(i) => format!("violation-found at {i} (prefix length {})", self.word.len()),
        }
    }
}

pub fn check_prefix_impl(name: &str, len: usize, tuple: &str) -> Result<PrefixCheck, String> {
    if len > MAX_PREFIX {
        return Err(format!("prefix length is limited to {MAX_PREFIX}"));
    }
    let w = named_sequence(name, len).map_err(|e| e.to_string())?;
    let t: PpTuple = tuple.parse().map_err(|e: pseudoperiodic::Error| e.to_string())?;
    Ok(PrefixCheck {
        word: w.iter().map(|&s| char::from(b'0' + s)).collect(),
        violation: first_violation(&w, &t),
        tuple: t.entries().to_vec(),
    })
}

#[wasm_bindgen]
pub fn check_prefix(name: &str, len: usize, tuple: &str) -> Result<PrefixCheck, JsError> {
    check_prefix_impl(name, len, tuple).map_err(|e| JsError::new(&e))
}

/// Cell codes for the grid over `(b, c)` with `a` fixed, row-major in `b`,
/// both running over `0..size`: 0 rejected or not increasing, 1 accepted,
/// 2 accepted and of the form `(a, a + 2^k, a + 2^{k+1})`.
pub fn triple_grid_impl(a: u64, size: usize) -> Vec<u8> {
    let d = TupleDfa::thue_morse_triples();
    let mut out = Vec::with_capacity(size * size);
    for b in 0..size as u64 {
        for c in 0..size as u64 {
            let cell = if a >= 1 && a < b && b < c && dfa_accepts(&d, &[a, b, c]).unwrap_or(false) {
                1 + shev_cond(a, b, c) as u8
            } else {
                0
            };
            out.push(cell);
        }
    }
    out
}

#[wasm_bindgen]
pub fn triple_grid(a: u32, size: u32) -> Vec<u8> {
    triple_grid_impl(a as u64, size.min(512) as usize)
}

#[wasm_bindgen]
pub struct LongestResult {
    finite: bool,
    length: usize,
    witness: String,
    nodes: u64,
}

#[wasm_bindgen]
impl LongestResult {
    #[wasm_bindgen(getter)]
    pub fn finite(&self) -> bool {
        self.finite
    }

    #[wasm_bindgen(getter)]
    pub fn length(&self) -> u32 {
        self.length as u32
    }

    #[wasm_bindgen(getter)]
    pub fn witness(&self) -> String {
        self.witness.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn nodes(&self) -> f64 {
        self.nodes as f64
    }

    #[wasm_bindgen(getter)]
    pub fn summary(&self) -> String {
        if self.finite {
            format!("finite tree; longest = {}", self.length)
        } else {
            format!("cap exceeded; reached depth {}", self.length)
        }
    }
}

pub fn longest_impl(pp: &str, exponent: &str, alphabet: usize) -> Result<LongestResult, String> {
    let pp: PpTuple = pp.parse().map_err(|e: pseudoperiodic::Error| e.to_string())?;
    let e = exponent.parse().map_err(|e: pseudoperiodic::Error| e.to_string())?;
    let spec = SearchSpec::new(alphabet, pp, e, SEARCH_CAP).map_err(|e| e.to_string())?;
    let out = longest_constrained_word(&spec);
    Ok(LongestResult {
        finite: out.verdict == Verdict::FiniteTree,
        length: out.longest_length,
        witness: out.witness_word.to_text(),
        nodes: out.nodes,
    })
}

#[wasm_bindgen]
pub fn longest(pp: &str, exponent: &str, alphabet: usize) -> Result<LongestResult, JsError> {
    longest_impl(pp, exponent, alphabet).map_err(|e| JsError::new(&e))
}
