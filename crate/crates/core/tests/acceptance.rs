//! End-to-end acceptance checks. Each test prints one `criterion NN PASS|FAIL`
//! line straight to stdout, so the summary shows up even when libtest
//! captures output.
//!
//! Where a value can be recomputed cheaply, the test does so with a naive
//! oracle written here rather than trusting the library twice.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use pseudoperiodic::reduction::{
    build_pp_instance, extract_hitting_set, solve_hitting_set, solve_pseudoperiod, HittingSetInstance,
    DEFAULT_GUARD,
};
use pseudoperiodic::search::{
    inventory_entry, residue_classes, verify_construction, verify_large_alphabet_theorem, verify_residue_class,
    LargeAlphabetTheorem,
};
use pseudoperiodic::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use regex::Regex;

type Check = std::result::Result<String, String>;

fn report(n: u32, title: &str, body: impl FnOnce() -> Check) {
    let outcome = match catch_unwind(AssertUnwindSafe(body)) {
        Ok(r) => r,
        Err(e) => Err(e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into())),
    };
    let line = match &outcome {
        Ok(detail) => format!("criterion {n:02} PASS {title}: {detail}"),
        Err(detail) => format!("criterion {n:02} FAIL {title}: {detail}"),
    };
    // bypasses libtest's capture on purpose
    let _ = writeln!(std::io::stdout().lock(), "{line}");
    if let Err(detail) = outcome {
        panic!("criterion {n} failed: {detail}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tuple(entries: &[usize]) -> PpTuple {
    PpTuple::new(entries.to_vec()).unwrap()
}

// ---- oracles ----

fn thue_morse(n: usize) -> Vec<u8> {
    (0..n).map(|i| (i.count_ones() & 1) as u8).collect()
}

/// Counts of 1s between consecutive 0s of Thue-Morse, via `t[i+1] - t[i] + 1`.
fn ternary_thue_morse(n: usize) -> Vec<u8> {
    let t = thue_morse(n + 1);
    (0..n).map(|i| (t[i + 1] as i8 - t[i] as i8 + 1) as u8).collect()
}

fn naive_violation(w: &[u8], t: &[usize]) -> Option<usize> {
    let m = *t.last().unwrap();
    (0..w.len().saturating_sub(m)).find(|&i| !t.iter().any(|&p| w[i + p] == w[i]))
}

fn naive_smallest_period(f: &[u8]) -> usize {
    (1..=f.len()).find(|&p| (p..f.len()).all(|i| f[i] == f[i - p])).unwrap()
}

/// Whether some factor reaches `num/den` (strictly exceeds it when `plus`).
fn naive_reaches(w: &[u8], num: usize, den: usize, plus: bool) -> bool {
    (0..w.len()).any(|s| {
        (s + 1..=w.len()).any(|e| {
            let p = naive_smallest_period(&w[s..e]);
            let (l, r) = ((e - s) * den, num * p);
            if plus {
                l > r
            } else {
                l >= r
            }
        })
    })
}

fn naive_suffix_reaches(w: &[u8], num: usize, den: usize, plus: bool) -> bool {
    let n = w.len();
    (0..n).any(|s| {
        let p = naive_smallest_period(&w[s..]);
        let (l, r) = ((n - s) * den, num * p);
        if plus {
            l > r
        } else {
            l >= r
        }
    })
}

fn parse_ratio(e: &str) -> (usize, usize) {
    match e.split_once('/') {
        Some((a, b)) => (a.parse().unwrap(), b.parse().unwrap()),
        None => (e.parse().unwrap(), 1),
    }
}

/// Level-by-level enumeration of binary words with pseudoperiod `(a, b)` and
/// no factor of exponent `>= num/den`. Returns the longest length reached and
/// the lexicographically least word of that length, or `None` past `cap`.
fn naive_longest(a: usize, b: usize, num: usize, den: usize, cap: usize) -> Option<(usize, Vec<u8>)> {
    let mut level: Vec<Vec<u8>> = vec![vec![]];
    let mut last = level.clone();
    while !level.is_empty() {
        if level[0].len() > cap {
            return None;
        }
        last = level.clone();
        let mut next = Vec::new();
        for w in &level {
            for s in 0..2u8 {
                let mut x = w.clone();
                x.push(s);
                let n = x.len();
                if n > b && naive_violation(&x[n - 1 - b..], &[a, b]).is_some() {
                    continue;
                }
                if naive_suffix_reaches(&x, num, den, false) {
                    continue;
                }
                next.push(x);
            }
        }
        level = next;
    }
    last.sort();
    Some((last[0].len(), last[0].clone()))
}

// ---- criteria ----

#[test]
fn criterion_01_optimal_exponent_table_cells() {
    report(1, "finite trees for eight table cells", || {
        let cells = [
            (1, 3, "5/2", 33),
            (1, 4, "3", 11),
            (1, 5, "13/5", 29),
            (1, 6, "7/3", 15),
            (2, 3, "13/5", 30),
            (2, 5, "3", 15),
            (3, 4, "5/2", 33),
            (4, 5, "3", 21),
        ];
        let mut seen = Vec::new();
        for (a, b, e, expected) in cells {
            let spec = SearchSpec::binary(tuple(&[a, b]), e.parse().unwrap()).unwrap();
            let out = longest_constrained_word(&spec);
            ensure(out.verdict == Verdict::FiniteTree, || format!("({a},{b}) at {e}: {}", out.verdict))?;
            ensure(out.longest_length == expected, || {
                format!("({a},{b}) at {e}: longest {} want {expected}", out.longest_length)
            })?;
            let w = out.witness_word.symbols();
            let (num, den) = parse_ratio(e);
            ensure(w.len() == expected, || format!("({a},{b}) witness length {}", w.len()))?;
            ensure(naive_violation(w, &[a, b]).is_none(), || format!("({a},{b}) witness violates"))?;
            ensure(!naive_reaches(w, num, den, false), || format!("({a},{b}) witness has a {e} power"))?;
            let oracle = naive_longest(a, b, num, den, 200).ok_or_else(|| format!("({a},{b}) oracle ran away"))?;
            ensure(oracle.0 == expected, || format!("({a},{b}) oracle longest {}", oracle.0))?;
            ensure(oracle.1 == w, || format!("({a},{b}) witness is not the least longest word"))?;
            seen.push(format!("({a},{b})={expected}"));
        }
        Ok(seen.join(" "))
    });
}

#[test]
fn criterion_02_thue_morse_violation_bound() {
    report(2, "Thue-Morse pairs fail by 5b/3, and the bound is tight", || {
        let t = thue_morse(1 << 12);
        let mut worst = (0.0f64, 0, 0);
        for b in 2..=64usize {
            let len = 2 * (5 * b).div_ceil(3) + b + 2;
            for a in 1..b {
                let n = first_violation(&t[..len], &tuple(&[a, b]))
                    .ok_or_else(|| format!("({a},{b}) has no violation on the prefix"))?;
                ensure(Some(n) == naive_violation(&t[..len], &[a, b]), || format!("({a},{b}) oracle disagrees"))?;
                ensure(3 * n <= 5 * b, || format!("({a},{b}) first violation {n} > 5b/3"))?;
                let ratio = n as f64 / b as f64;
                if ratio > worst.0 {
                    worst = (ratio, a, b);
                }
            }
        }
        // tightness: large b whose pairs survive every i with 3i < 5b
        let mut witnesses = Vec::new();
        for m in 1..=32usize {
            let hit = (m + 1..=512).find_map(|b| {
                (1..b)
                    .find(|&a| {
                        let reach = (5 * b - 1) / 3;
                        (0..=reach).all(|i| t[i] == t[i + a] || t[i] == t[i + b])
                    })
                    .map(|a| (a, b))
            });
            let (a, b) = hit.ok_or_else(|| format!("no tight pair with b > {m}"))?;
            witnesses.push((a, b));
        }
        let distinct: BTreeSet<_> = witnesses.into_iter().collect();
        Ok(format!(
            "worst n/b = {:.3} at ({},{}); tight pairs {:?}",
            worst.0, worst.1, worst.2, distinct
        ))
    });
}

#[test]
fn criterion_03_triple_automaton() {
    report(3, "53-state triple automaton against Thue-Morse", || {
        let d = TupleDfa::thue_morse_triples();
        ensure(d.state_count() == 53, || format!("{} states", d.state_count()))?;
        ensure(dfa_accepts(&d, &[1, 8, 9]).unwrap(), || "rejects (1,8,9)".into())?;
        let mut shev = 0;
        for a in 1..512u64 {
            for k in 0..10 {
                let c = a + (2 << k);
                if c > 512 {
                    break;
                }
                ensure(dfa_accepts(&d, &[a, a + (1 << k), c]).unwrap(), || {
                    format!("rejects ({a},{},{c})", a + (1 << k))
                })?;
                shev += 1;
            }
        }
        let t = thue_morse(1 << 15);
        let mut accepted = 0;
        for c in 3..=40usize {
            for b in 2..c {
                for a in 1..b {
                    let dfa = dfa_accepts(&d, &[a as u64, b as u64, c as u64]).unwrap();
                    let prefix = naive_violation(&t, &[a, b, c]).is_none();
                    ensure(dfa == prefix, || format!("({a},{b},{c}) automaton {dfa}, prefix {prefix}"))?;
                    accepted += dfa as usize;
                }
            }
        }
        Ok(format!("{shev} power-of-two triples accepted; {accepted} accepted triples with c <= 40 agree"))
    });
}

#[test]
fn criterion_04_scaling_and_distinct_letter_triples() {
    report(4, "scaling and the distinct-letter triples", || {
        let d = TupleDfa::thue_morse_triples();
        let t = thue_morse(1 << 15);
        let mut equal = 0;
        for c in 3..=64u64 {
            for b in 2..c {
                for a in 1..b {
                    let one = dfa_accepts(&d, &[a, b, c]).unwrap();
                    let two = dfa_accepts(&d, &[2 * a, 2 * b, 2 * c]).unwrap();
                    ensure(one == two, || format!("({a},{b},{c}) {one} but doubled {two}"))?;
                    let (ua, ub, uc) = (a as usize, b as usize, c as usize);
                    let distinct = (0..t.len() - uc).all(|i| !(t[i + ua] == t[i + ub] && t[i + ub] == t[i + uc]));
                    let lhs = one && distinct;
                    ensure(lhs == shev_cond(a, b, c), || {
                        format!("({a},{b},{c}) accepted+distinct {lhs}, power-of-two form {}", shev_cond(a, b, c))
                    })?;
                    equal += lhs as usize;
                }
            }
        }
        Ok(format!("{equal} triples with c <= 64 match the power-of-two form"))
    });
}

/// Search bound for the distance-set enumeration. Distances up to 127 need
/// triples whose largest entry goes past 127, so 128 is not enough.
const DISTANCE_ENUM_BOUND: u64 = 1024;

#[test]
fn criterion_05_distance_sets() {
    report(5, "distance sets of accepted triples", || {
        let d = TupleDfa::thue_morse_triples();
        let triples = dfa_enumerate(&d, DISTANCE_ENUM_BOUND);
        let first: BTreeSet<u64> = triples.iter().map(|v| v[1] - v[0]).filter(|&n| n <= 127).collect();
        let second: BTreeSet<u64> = triples.iter().map(|v| v[2] - v[1]).filter(|&n| n <= 127).collect();
        let ra = Regex::new("^(0*11*0*|0*1(00)*10*|0*10110*)$").unwrap();
        let rb = Regex::new("^(0*100*10*|0*11*0*)$").unwrap();
        let want_a: BTreeSet<u64> = (1..=127).filter(|n| ra.is_match(&format!("{n:b}"))).collect();
        let want_b: BTreeSet<u64> = (1..=127).filter(|n| rb.is_match(&format!("{n:b}"))).collect();
        let pred_a: BTreeSet<u64> = (1..=127).filter(|&n| tm_distance_predicates(n).0).collect();
        let pred_b: BTreeSet<u64> = (1..=127).filter(|&n| tm_distance_predicates(n).1).collect();
        ensure(pred_a == want_a && pred_b == want_b, || "predicates disagree with the patterns".into())?;
        ensure(first == want_a, || format!("b-a: extra {:?} missing {:?}", diff(&first, &want_a), diff(&want_a, &first)))?;
        ensure(second == want_b, || {
            format!("c-b: extra {:?} missing {:?}", diff(&second, &want_b), diff(&want_b, &second))
        })?;
        Ok(format!(
            "{} triples up to {DISTANCE_ENUM_BOUND}; |b-a set| = {}, |c-b set| = {}",
            triples.len(),
            first.len(),
            second.len()
        ))
    });
}

fn diff(a: &BTreeSet<u64>, b: &BTreeSet<u64>) -> Vec<u64> {
    a.difference(b).copied().collect()
}

#[test]
fn criterion_06_per_sequence_facts() {
    report(6, "bounded facts about named sequences", || {
        let n = 1 << 15;
        let t = named_sequence("t", n).unwrap();
        ensure(t == thue_morse(n), || "Thue-Morse prefix differs from the digit-sum oracle".into())?;
        ensure(min_pseudoperiod_size(&t, 8) == Some(3), || format!("t min size {:?}", min_pseudoperiod_size(&t, 8)))?;
        ensure(naive_violation(&t, &[1, 8, 9]).is_none(), || "t fails (1,8,9)".into())?;

        let mut notes = Vec::new();
        for name in ["mw", "pd"] {
            let w = named_sequence(name, n).unwrap();
            let pairs = enumerate_pseudoperiods(&w, 2, 64);
            ensure(pairs.is_empty(), || format!("{name} has pair {:?}", pairs.first()))?;
            let three = first_pseudoperiod(&w, 3, 64).ok_or_else(|| format!("{name} has no triple up to 64"))?;
            ensure(naive_violation(&w, three.entries()).is_none(), || format!("{name} oracle rejects {three:?}"))?;
            notes.push(format!("{name} {:?}", three.entries()));
        }

        let rs = named_sequence("rs", n).unwrap();
        let rs_oracle = {
            let mut r = vec![0u8; n];
            for i in 1..n {
                r[i] = match i % 4 {
                    0 | 2 => r[i / 2],
                    1 => r[i / 4],
                    _ => 1 - r[i / 2],
                };
            }
            r
        };
        ensure(rs == rs_oracle, || "Rudin-Shapiro prefix differs from the recurrence".into())?;
        ensure(naive_violation(&rs, &[2, 3, 4, 5]).is_none(), || "rs fails (2,3,4,5)".into())?;
        let rs3 = enumerate_pseudoperiods(&rs, 3, 16);
        ensure(rs3.is_empty(), || format!("rs has triple {:?}", rs3.first()))?;

        let tr = named_sequence("tr", n).unwrap();
        let pp = tuple(&[4, 6, 7]);
        ensure(pseudoperiod::is_pseudoperiod_by_factors(&tr, &pp), || "tr fails (4,6,7) on factors".into())?;
        let factors: BTreeSet<&[u8]> = tr.windows(8).collect();
        ensure(factors.iter().all(|f| f[0] == f[4] || f[0] == f[6] || f[0] == f[7]), || {
            "a length-8 factor of tr breaks (4,6,7)".into()
        })?;
        ensure(naive_violation(&tr, &[4, 6, 7]).is_none(), || "tr fails (4,6,7)".into())?;

        let f = named_sequence("f", n).unwrap();
        ensure(naive_violation(&f, &[2, 3]).is_none(), || "f fails (2,3)".into())?;
        Ok(format!(
            "t size 3; {}; rs (2,3,4,5); tr (4,6,7) over {} factors; f (2,3)",
            notes.join(", "),
            factors.len()
        ))
    });
}

#[test]
fn criterion_07_paperfolding() {
    report(7, "paperfolding words", || {
        let mut words = 0;
        for len in 1..=8 {
            for bits in 0..1u64 << len {
                let w = paperfolding_word(&PaperfoldingCode::from_bits(bits, len).unwrap());
                ensure(w.len() == (1 << len) - 1, || format!("code {bits:b} gives length {}", w.len()))?;
                ensure(naive_violation(&w, &[1, 3, 4]).is_none(), || format!("code {bits:0len$b} fails (1,3,4)"))?;
                words += 1;
            }
        }
        let mut contrast = Vec::new();
        for len in 6..=14 {
            let mut mixed = vec![1i8; len];
            mixed[0] = -1;
            let good = paperfolding_word(&PaperfoldingCode::new(mixed).unwrap());
            ensure(naive_violation(&good, &[1, 2, 16]).is_none(), || format!("(-1,+1,...) of length {len} fails (1,2,16)"))?;
            for sign in [1i8, -1] {
                let same = paperfolding_word(&PaperfoldingCode::new(vec![sign; len]).unwrap());
                if len >= 6 {
                    let v = naive_violation(&same, &[1, 2, 16]);
                    ensure(v.is_some(), || format!("all-{sign} code of length {len} passes (1,2,16)"))?;
                    if len == 14 {
                        contrast.push(format!("all {sign:+} fails at {}", v.unwrap()));
                    }
                }
            }
        }
        Ok(format!("{words} codes pass (1,3,4); (-1,+1,...) passes (1,2,16); {}", contrast.join(", ")))
    });
}

#[test]
fn criterion_08_ternary_thue_morse_triples() {
    report(8, "ternary Thue-Morse triple characterization", || {
        let n = 1 << 15;
        let v = named_sequence("vtm", n).unwrap();
        ensure(v == ternary_thue_morse(n), || "vtm prefix differs from the Thue-Morse difference oracle".into())?;
        let mut found = Vec::new();
        for c in 3..=64usize {
            for b in 2..c {
                for a in 1..b {
                    let pred = vtm_triple_predicate(a as u64, b as u64, c as u64);
                    let holds = naive_violation(&v, &[a, b, c]).is_none();
                    ensure(pred == holds, || format!("({a},{b},{c}) predicate {pred}, prefix {holds}"))?;
                    if holds {
                        found.push((a, b, c));
                    }
                }
            }
        }
        Ok(format!("{} triples with c <= 64, e.g. {:?}", found.len(), &found[..found.len().min(4)]))
    });
}

#[test]
fn criterion_09_morphism_verifications() {
    report(9, "morphic constructions on long prefixes", || {
        let len = 10_000;
        let sha3 = inventory_entry("sha3").unwrap();
        let cube_plus = Exponent::integer(3).with_plus(true);
        let r = verify_construction(&sha3.morphism, sha3.base, &tuple(&[1, 5]), &cube_plus, len).unwrap();
        ensure(r.passed(), || format!("sha3: {r:?}"))?;
        let h = inventory_entry("h_1_6").unwrap();
        let e = Exponent::new(7, 3, true).unwrap();
        let r = verify_construction(&h.morphism, h.base, &tuple(&[1, 6]), &e, len).unwrap();
        ensure(r.passed(), || format!("h_1_6: {r:?}"))?;
        let image = search::image_prefix(&h.morphism, h.base, 2000).unwrap();
        ensure(naive_violation(&image, &[1, 6]).is_none(), || "h_1_6 oracle violation".into())?;

        let classes = residue_classes();
        let mut checked = 0;
        for (i, n, entry) in &classes {
            let start = if *i >= 2 { *i } else { i + n };
            let samples: Vec<usize> = (0..3).map(|j| start + j * n).collect();
            for (a, rep) in verify_residue_class(&entry.morphism, *i, *n, &samples, len).unwrap() {
                ensure(rep.passed(), || format!("{} with a = {a}: {rep:?}", entry.name))?;
                checked += 1;
            }
        }
        ensure(classes.len() == 19, || format!("{} residue classes", classes.len()))?;
        Ok(format!("sha3, h_1_6 and {} residue classes ({checked} samples) on {len} symbols", classes.len()))
    });
}

#[test]
fn criterion_10_large_alphabet_theorems() {
    report(10, "uniform morphisms on threshold words", || {
        let mut notes = Vec::new();
        for which in LargeAlphabetTheorem::ALL {
            let rep = verify_large_alphabet_theorem(which, 50).unwrap();
            let c = which.construction().unwrap();
            ensure(rep.passed(), || format!("{}: {rep:?}", which.name()))?;
            ensure(rep.image_len == 50 * which.expected_length(), || format!("{} image {}", which.name(), rep.image_len))?;
            ensure(rep.base_word.len() == 50, || format!("{} base {}", which.name(), rep.base_word.len()))?;
            let image = apply_morphism(&c.morphism, rep.base_word.symbols()).unwrap();
            ensure(naive_violation(&image, c.pp.entries()).is_none(), || format!("{} oracle violation", which.name()))?;
            notes.push(format!("{} ({} symbols)", which.name(), rep.image_len));
        }
        Ok(notes.join(", "))
    });
}

#[test]
fn criterion_11_reduction_equivalence() {
    report(11, "hitting set reduction", || {
        let mut instances = 0;
        let mut yes = 0;
        for n in 1..=4usize {
            let subsets: Vec<Vec<usize>> = (1..1u32 << n)
                .map(|mask| (1..=n).filter(|&e| mask >> (e - 1) & 1 == 1).collect())
                .collect();
            for m in 1..=3u32 {
                let count = subsets.len().pow(m);
                for code in 0..count {
                    let sets: Vec<Vec<usize>> = (0..m)
                        .map(|j| subsets[code / subsets.len().pow(j) % subsets.len()].clone())
                        .collect();
                    for k in 1..=n.min(2) {
                        let h = HittingSetInstance::new(n, sets.clone(), k).unwrap();
                        let inst = build_pp_instance(&h);
                        let direct = solve_hitting_set(&h, DEFAULT_GUARD).unwrap();
                        let via = solve_pseudoperiod(&inst, DEFAULT_GUARD).unwrap();
                        ensure(direct.is_some() == via.is_some(), || format!("{h}: direct {direct:?} via {via:?}"))?;
                        instances += 1;
                        if let Some(hs) = direct {
                            yes += 1;
                            let mut fwd = vec![1, 2, 3, 4 * n + 4];
                            fwd.extend(hs.iter().map(|&e| 4 * e));
                            fwd.sort();
                            ensure(naive_violation(inst.x.symbols(), &fwd).is_none(), || {
                                format!("{h}: forward tuple {fwd:?} fails")
                            })?;
                            let sol = via.unwrap();
                            let back = extract_hitting_set(&inst, &sol).map_err(|e| format!("{h}: {e}"))?;
                            ensure(back.len() == k && h.is_hit_by(&back), || format!("{h}: extracted {back:?}"))?;
                        }
                    }
                }
            }
        }
        Ok(format!("{instances} instances, {yes} solvable, all agree"))
    });
}

#[test]
fn criterion_12_property_suites() {
    report(12, "structural properties on random and exhaustive words", || {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..10_000 {
            let len = rng.gen_range(2..=64);
            let w: Vec<u8> = (0..len).map(|_| rng.gen_range(0..2)).collect();
            // letters recur within R, so (1..=R) is a pseudoperiod
            let r = pseudoperiod::recurrence_bound(&w);
            let all: Vec<usize> = (1..=r).collect();
            ensure(naive_violation(&w, &all).is_none(), || format!("{w:?}: (1..={r}) fails"))?;
            // any pseudoperiod with largest entry M bounds constrained gaps by M
            if let Some(pp) = first_pseudoperiod(&w, 2, 8) {
                let m = pp.largest();
                let gap_ok = (0..w.len() - m).all(|i| (i + 1..=i + m).any(|j| w[j] == w[i]));
                ensure(gap_ok, || format!("{w:?}: {pp:?} but a gap exceeds {m}"))?;
            }
            if let Ok(rl) = run_length_tuple(&w) {
                ensure(naive_violation(&w, rl.entries()).is_none(), || format!("{w:?}: run-length tuple fails"))?;
            }
            let form = matches_form(&w);
            ensure(pseudoperiod::matches_pp12_form(&w) == form, || format!("{w:?}: form check disagrees"))?;
            ensure(is_pseudoperiod(&w, &tuple(&[1, 2])) == form, || format!("{w:?}: (1,2) vs form"))?;
        }
        let mut exhaustive = 0;
        for len in 0..=12 {
            for bits in 0..1u32 << len {
                let w: Vec<u8> = (0..len).map(|i| (bits >> i & 1) as u8).collect();
                let pp = len < 3 || naive_violation(&w, &[1, 2]).is_none();
                ensure(pp == matches_form(&w), || format!("{w:?}: (1,2) {pp}"))?;
                exhaustive += 1;
            }
        }
        let mu: Morphism = "0->01 1->10".parse().unwrap();
        let mut free_cases = 0;
        for _ in 0..1000 {
            let k = rng.gen_range(1..=3);
            let mut entries: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=10)).collect();
            entries.sort();
            entries.dedup();
            let len = rng.gen_range(1..=48);
            let w = word_with_pseudoperiod(&mut rng, &entries, len);
            let doubled = apply_morphism(&mu, &w).unwrap();
            let twice: Vec<usize> = entries.iter().map(|p| 2 * p).collect();
            ensure(naive_violation(&w, &entries).is_none(), || "generator broke its tuple".into())?;
            ensure(naive_violation(&doubled, &twice).is_none(), || format!("{w:?}: mu image fails {twice:?}"))?;
            let short: Vec<u8> = (0..rng.gen_range(1..=18)).map(|_| rng.gen_range(0..2)).collect();
            for (num, den, plus) in [(2, 1, true), (7, 3, false), (7, 3, true), (3, 1, false), (3, 1, true)] {
                if !naive_reaches(&short, num, den, plus) {
                    free_cases += 1;
                    let img = apply_morphism(&mu, &short).unwrap();
                    ensure(!naive_reaches(&img, num, den, plus), || format!("{short:?}: mu image reaches {num}/{den}"))?;
                }
            }
        }
        Ok(format!("10000 random words, {exhaustive} exhaustive words, 1000 doubling cases ({free_cases} power cases)"))
    });
}

/// `a* (ab)* (a + ε)` over the binary alphabet, as a regular expression.
fn matches_form(w: &[u8]) -> bool {
    let text: String = w.iter().map(|&s| char::from(b'0' + s)).collect();
    let re = Regex::new("^(0*(01)*0?|1*(10)*1?)$").unwrap();
    re.is_match(&text)
}

/// Builds a word right to left so that every constrained position copies one
/// of its offsets.
fn word_with_pseudoperiod(rng: &mut StdRng, entries: &[usize], len: usize) -> Vec<u8> {
    let m = *entries.last().unwrap();
    let mut w = vec![0u8; len];
    for i in (0..len).rev() {
        w[i] = if i + m < len {
            w[i + entries[rng.gen_range(0..entries.len())]]
        } else {
            rng.gen_range(0..2)
        };
    }
    w
}
