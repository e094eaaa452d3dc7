//! Fractional powers in finite words: witnesses, e-freeness and critical
//! exponents. All comparisons are exact.
//!
//! Every factor with period `p` sits inside a maximal stretch of positions
//! where `w[i] = w[i + p]`, so scanning those stretches for each period finds
//! every repetition.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::word::Exponent;

/// A factor `w[start..start + length]` with period `period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerWitness {
    pub start: usize,
    pub length: usize,
    pub period: usize,
}

impl PowerWitness {
    pub fn exponent(&self) -> Exponent {
        Exponent::new(self.length as u64, self.period as u64, false).expect("positive")
    }
}

/// Earliest occurrence of a factor with period `p` that reaches `e`, or `None`.
fn first_at_period(w: &[u8], e: &Exponent, p: usize) -> Option<PowerWitness> {
    let length = e.min_length(p).max(p);
    if length > w.len() {
        return None;
    }
    let need = length - p;
    if need == 0 {
        return Some(PowerWitness { start: 0, length, period: p });
    }
    let mut run = 0;
    for i in 0..w.len() - p {
        if w[i] == w[i + p] {
            run += 1;
            if run == need {
                return Some(PowerWitness {
                    start: i + 1 - need,
                    length,
                    period: p,
                });
            }
        } else {
            run = 0;
        }
    }
    None
}

fn check_threshold(e: &Exponent) -> Result<()> {
    if e.at_least_one() {
        Ok(())
    } else {
        Err(Error::domain(format!("exponent {e} is below 1")))
    }
}

/// A factor whose exponent is `>= e` (or `> e` when `e` is a plus exponent):
/// the leftmost one, and among those the shortest. The reported period is the
/// witness's smallest period.
pub fn contains_power_at_least(w: &[u8], e: &Exponent) -> Result<Option<PowerWitness>> {
    check_threshold(e)?;
    let periods = 1..=w.len();
    let best = |p: usize| first_at_period(w, e, p).map(|x| (x.start, x.length, x.period));
    #[cfg(feature = "parallel")]
    let found = if w.len() >= 2048 {
        periods.into_par_iter().filter_map(best).min()
    } else {
        periods.filter_map(best).min()
    };
    #[cfg(not(feature = "parallel"))]
    let found = periods.filter_map(best).min();
    Ok(found.map(|(start, length, period)| PowerWitness { start, length, period }))
}

/// Every nonempty factor has exponent `< e`.
pub fn is_e_free(w: &[u8], e: &Exponent) -> Result<bool> {
    Ok(contains_power_at_least(w, &e.with_plus(false))?.is_none())
}

/// Every nonempty factor has exponent `<= e`.
pub fn is_e_plus_free(w: &[u8], e: &Exponent) -> Result<bool> {
    Ok(contains_power_at_least(w, &e.with_plus(true))?.is_none())
}

/// Avoids `e` in the sense carried by `e` itself: `e`-free for a plain
/// exponent, `e+`-free for a plus one.
pub fn avoids(w: &[u8], e: &Exponent) -> Result<bool> {
    Ok(contains_power_at_least(w, e)?.is_none())
}

/// Largest exponent of a nonempty factor of `w`.
pub fn critical_exponent(w: &[u8]) -> Result<Exponent> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let best_at = |p: usize| {
        let mut run = 0;
        let mut longest = 0;
        for i in 0..w.len() - p {
            if w[i] == w[i + p] {
                run += 1;
                longest = longest.max(run);
            } else {
                run = 0;
            }
        }
        (longest + p, p)
    };
    let better = |a: (usize, usize), b: (usize, usize)| {
        if (a.0 as u128) * (b.1 as u128) >= (b.0 as u128) * (a.1 as u128) {
            a
        } else {
            b
        }
    };
    let (len, p) = (1..=w.len()).map(best_at).fold((1, 1), better);
    Exponent::new(len as u64, p as u64, false)
}

/// Whether some suffix of `w` reaches `e`. Used when words grow one symbol at
/// a time: if `w[..len - 1]` avoided `e`, only suffixes can introduce a power.
pub fn suffix_reaches(w: &[u8], e: &Exponent) -> bool {
    let n = w.len();
    for p in 1..=n {
        let length = e.min_length(p).max(p);
        if length > n {
            // min_length never decreases with p
            break;
        }
        let need = length - p;
        if (0..need).all(|j| w[n - 1 - j] == w[n - 1 - j - p]) {
            return true;
        }
    }
    false
}

#[cfg(test)]
pub(crate) mod oracle {
    use crate::word::{smallest_period, Exponent};

    /// Every factor with its exponent, computed from its own smallest period.
    pub fn factor_exponents(w: &[u8]) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..w.len()).flat_map(move |s| {
            (1..=w.len() - s).map(move |len| (s, len, smallest_period(&w[s..s + len]).unwrap()))
        })
    }

    pub fn critical_exponent(w: &[u8]) -> Exponent {
        factor_exponents(w)
            .map(|(_, len, p)| Exponent::new(len as u64, p as u64, false).unwrap())
            .max()
            .unwrap()
    }

    pub fn leftmost_shortest(w: &[u8], e: &Exponent) -> Option<(usize, usize, usize)> {
        factor_exponents(w)
            .filter(|&(_, len, p)| e.reached_by(len, p))
            .min_by_key(|&(s, len, _)| (s, len))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named_sequence;
    use crate::word::Word;

    fn ex(s: &str) -> Exponent {
        s.parse().unwrap()
    }

    #[test]
    fn entente_is_its_own_witness() {
        let w = Word::encode_letters("entente").0;
        let wit = contains_power_at_least(&w, &ex("7/3")).unwrap().unwrap();
        assert_eq!(wit, PowerWitness { start: 0, length: 7, period: 3 });
        assert_eq!(critical_exponent(&w).unwrap(), ex("7/3"));
    }

    #[test]
    fn thue_morse_is_overlap_free() {
        let t = named_sequence("t", 4096).unwrap();
        assert_eq!(contains_power_at_least(&t, &ex("2+")).unwrap(), None);
        assert_eq!(critical_exponent(&t).unwrap(), ex("2"));
        // squares are there
        assert!(!is_e_free(&t, &ex("2")).unwrap());
        assert!(is_e_plus_free(&t, &ex("2")).unwrap());
    }

    #[test]
    fn letter_cubes() {
        let wit = contains_power_at_least(&[0, 0, 0], &ex("3")).unwrap().unwrap();
        assert_eq!(wit.period, 1);
        assert_eq!(critical_exponent(&[0, 0, 0]).unwrap(), ex("3"));
        assert!(!is_e_free(&[0, 0], &ex("2")).unwrap());
        assert!(contains_power_at_least(&[0, 0], &ex("1/2")).is_err());
        assert!(critical_exponent(&[]).is_err());
    }

    #[test]
    fn plus_threshold_one() {
        let wit = contains_power_at_least(&[0, 1, 2, 0], &ex("1+")).unwrap().unwrap();
        assert_eq!(wit, PowerWitness { start: 0, length: 4, period: 3 });
        assert_eq!(contains_power_at_least(&[0, 1, 2], &ex("1+")).unwrap(), None);
        let wit = contains_power_at_least(&[0, 1], &ex("1")).unwrap().unwrap();
        assert_eq!(wit, PowerWitness { start: 0, length: 1, period: 1 });
    }

    #[test]
    fn suffix_check_matches_full_scan() {
        let exps = ["2", "2+", "7/3", "5/2", "3", "3+", "7/5+", "1+"];
        let mut rng = 12345u64;
        for _ in 0..400 {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let len = 1 + (rng >> 40) as usize % 24;
            let w: Vec<u8> = (0..len).map(|i| ((rng >> i) & 1) as u8).collect();
            for e in exps {
                let e = ex(e);
                let suffix_only = oracle::factor_exponents(&w)
                    .any(|(s, l, p)| s + l == w.len() && e.reached_by(l, p));
                assert_eq!(suffix_reaches(&w, &e), suffix_only, "{w:?} {e}");
            }
        }
    }
}
