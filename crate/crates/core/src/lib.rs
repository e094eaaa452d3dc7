//! Pseudoperiodic words.
//!
//! A tuple `(p_1 < ... < p_k)` is a pseudoperiod of a word `w` when every
//! constrained position `i` (those with `i + p_k < |w|`) satisfies
//! `w[i] ∈ {w[i + p_1], ..., w[i + p_k]}`. This crate checks and enumerates
//! pseudoperiods, detects fractional powers, evaluates tuple automata in
//! base 2, searches trees of constrained words and verifies morphic
//! constructions on finite prefixes.
//!
//! ```
//! use pseudoperiodic::{named_sequence, is_pseudoperiod, PpTuple};
//!
//! let t = named_sequence("t", 1 << 12).unwrap();
//! assert!(is_pseudoperiod(&t, &PpTuple::new(vec![1, 8, 9]).unwrap()));
//! assert!(!is_pseudoperiod(&t, &PpTuple::new(vec![1, 8]).unwrap()));
//! ```

pub mod automata;
pub mod error;
pub mod generators;
pub mod powers;
pub mod pseudoperiod;
pub mod reduction;
pub mod search;
pub mod word;

pub use automata::{dfa_accepts, dfa_enumerate, parse_walnut_dfa, shev_cond, tm_distance_predicates, vtm_triple_predicate, TupleDfa};
pub use error::{Error, Result};
pub use generators::{
    apply_morphism, fixed_point_prefix, named_sequence, paperfolding_word, sequence_prefix, sturmian_characteristic,
    ContinuedFraction, Morphism, PaperfoldingCode, Sequence,
};
pub use powers::{avoids, contains_power_at_least, critical_exponent, is_e_free, is_e_plus_free, PowerWitness};
pub use pseudoperiod::{
    enumerate_pseudoperiods, first_pseudoperiod, first_violation, is_pseudoperiod, max_gap, min_pseudoperiod_size,
    run_length_tuple, PpTuple,
};
pub use search::{longest_constrained_word, SearchOutcome, SearchSpec, Verdict};
pub use word::{Exponent, Word, WordFormat};
