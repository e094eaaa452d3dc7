use clap::ValueEnum;
use pseudoperiodic::reduction::{build_pp_instance, solve_hitting_set, solve_pseudoperiod, HittingSetInstance, DEFAULT_GUARD};
use pseudoperiodic::search::{cell_spec, OPTIMAL_EXPONENTS};
use pseudoperiodic::*;
use serde_json::{json, Value};

use crate::output::Report;

#[derive(Clone, Copy, ValueEnum)]
pub enum Target {
    Table1,
    Shevelev,
    Vtm,
    Paperfolding,
    Reduction,
}

/// Collects named checks and turns them into a report.
struct Run {
    checks: Vec<(String, bool, String)>,
}

impl Run {
    fn new() -> Self {
        Run { checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push((name.into(), ok, detail.into()));
    }

    fn finish(self, target: &str) -> Report {
        let failed = self.checks.iter().filter(|c| !c.1).count();
        let json_checks: Vec<Value> = self
            .checks
            .iter()
            .map(|(n, ok, d)| json!({ "check": n, "pass": ok, "detail": d }))
            .collect();
        let lines: Vec<String> = self
            .checks
            .iter()
            .map(|(n, ok, d)| format!("{} {n}: {d}", if *ok { "PASS" } else { "FAIL" }))
            .collect();
        let total = self.checks.len();
        Report::new(json!({ "target": target, "checks": json_checks, "failed": failed }))
            .lines(lines)
            .line(format!("{target}: {} of {total} checks passed", total - failed))
            .fail_if(failed > 0)
    }
}

pub fn run(target: Target, all: bool) -> Report {
    match target {
        Target::Table1 => table1(all),
        Target::Shevelev => shevelev(),
        Target::Vtm => vtm(),
        Target::Paperfolding => paperfolding(),
        Target::Reduction => reduction(),
    }
}

const HEADLINE: [(usize, usize); 8] = [(1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 5), (3, 4), (4, 5)];

fn table1(all: bool) -> Report {
    let mut run = Run::new();
    for cell in OPTIMAL_EXPONENTS.iter().filter(|c| all || HEADLINE.contains(&(c.a, c.b))) {
        let out = longest_constrained_word(&cell_spec(cell));
        let ok = out.verdict == Verdict::FiniteTree && out.longest_length == cell.longest;
        run.check(
            format!("({},{}) at {}", cell.a, cell.b, cell.exponent),
            ok,
            format!("{}; longest = {} (table: {})", out.verdict, out.longest_length, cell.longest),
        );
    }
    run.finish("table1")
}

fn shevelev() -> Report {
    let mut run = Run::new();
    let t = named_sequence("t", 1 << 15).expect("registry");
    let min = min_pseudoperiod_size(&t, 8);
    run.check("t has no 2-tuple, has a 3-tuple (entries <= 8)", min == Some(3), format!("min size {min:?}"));
    run.check(
        "t has (1,8,9)",
        is_pseudoperiod(&t, &PpTuple::new(vec![1, 8, 9]).expect("tuple")),
        "consistent-on-prefix 32768",
    );
    let mut worst = 0usize;
    let mut bad = Vec::new();
    for b in 2..=64usize {
        let len = 2 * (5 * b).div_ceil(3) + b + 2;
        for a in 1..b {
            match first_violation(&t[..len], &PpTuple::new(vec![a, b]).expect("a < b")) {
                Some(n) if 3 * n <= 5 * b => worst = worst.max(n),
                other => bad.push((a, b, other)),
            }
        }
    }
    run.check(
        "every (a,b) with b <= 64 fails by 5b/3",
        bad.is_empty(),
        format!("latest first violation {worst}; exceptions {bad:?}"),
    );
    let d = TupleDfa::thue_morse_triples();
    run.check("automaton size", d.state_count() == 53, format!("{} states", d.state_count()));
    let mut disagree = Vec::new();
    for c in 3..=40u64 {
        for b in 2..c {
            for a in 1..b {
                let acc = dfa_accepts(&d, &[a, b, c]).expect("arity 3");
                let pp = PpTuple::new(vec![a as usize, b as usize, c as usize]).expect("tuple");
                if acc != is_pseudoperiod(&t, &pp) {
                    disagree.push((a, b, c));
                }
            }
        }
    }
    run.check(
        "automaton agrees with the prefix for c <= 40",
        disagree.is_empty(),
        format!("disagreements {disagree:?}"),
    );
    let mut scaling = Vec::new();
    for c in 3..=64u64 {
        for b in 2..c {
            for a in 1..b {
                if dfa_accepts(&d, &[a, b, c]).ok() != dfa_accepts(&d, &[2 * a, 2 * b, 2 * c]).ok() {
                    scaling.push((a, b, c));
                }
            }
        }
    }
    run.check("doubling a triple keeps acceptance (c <= 64)", scaling.is_empty(), format!("{scaling:?}"));
    run.finish("shevelev")
}

fn vtm() -> Report {
    let mut run = Run::new();
    let v = named_sequence("vtm", 1 << 15).expect("registry");
    let mut found = 0;
    let mut wrong = Vec::new();
    for c in 3..=64usize {
        for b in 2..c {
            for a in 1..b {
                let holds = is_pseudoperiod(&v, &PpTuple::new(vec![a, b, c]).expect("tuple"));
                found += holds as usize;
                if holds != vtm_triple_predicate(a as u64, b as u64, c as u64) {
                    wrong.push((a, b, c));
                }
            }
        }
    }
    run.check(
        "triples with c <= 64 are exactly the three families",
        wrong.is_empty(),
        format!("{found} triples hold on the prefix; mismatches {wrong:?}"),
    );
    run.finish("vtm")
}

fn paperfolding() -> Report {
    let mut run = Run::new();
    let t134 = PpTuple::new(vec![1, 3, 4]).expect("tuple");
    let t1216 = PpTuple::new(vec![1, 2, 16]).expect("tuple");
    let mut failing = Vec::new();
    let mut count = 0;
    for len in 1..=8 {
        for bits in 0..1u64 << len {
            let w = paperfolding_word(&PaperfoldingCode::from_bits(bits, len).expect("code"));
            count += 1;
            if !is_pseudoperiod(&w, &t134) {
                failing.push((len, bits));
            }
        }
    }
    run.check(
        "(1,3,4) for every code of length <= 8",
        failing.is_empty(),
        format!("{count} codes; failing {failing:?}"),
    );
    let mut code = vec![1i8; 12];
    code[0] = -1;
    let mixed = paperfolding_word(&PaperfoldingCode::new(code).expect("code"));
    let v = first_violation(&mixed, &t1216);
    run.check("(1,2,16) for the code -+++...", v.is_none(), format!("violation {v:?}"));
    let same = paperfolding_word(&PaperfoldingCode::new(vec![1; 12]).expect("code"));
    let v = first_violation(&same, &t1216);
    run.check("(1,2,16) fails for the code ++++...", v.is_some(), format!("violation {v:?}"));
    run.finish("paperfolding")
}

fn reduction() -> Report {
    let mut run = Run::new();
    let mut total = 0;
    let mut mismatches = Vec::new();
    for n in 1..=4usize {
        let subsets: Vec<Vec<usize>> = (1..1u32 << n)
            .map(|mask| (1..=n).filter(|&e| mask >> (e - 1) & 1 == 1).collect())
            .collect();
        for m in 1..=3u32 {
            for code in 0..subsets.len().pow(m) {
                let sets: Vec<Vec<usize>> = (0..m)
                    .map(|j| subsets[code / subsets.len().pow(j) % subsets.len()].clone())
                    .collect();
                for k in 1..=n.min(2) {
                    let h = HittingSetInstance::new(n, sets.clone(), k).expect("valid instance");
                    let direct = solve_hitting_set(&h, DEFAULT_GUARD).expect("small").is_some();
                    let via = solve_pseudoperiod(&build_pp_instance(&h), DEFAULT_GUARD).expect("small").is_some();
                    total += 1;
                    if direct != via {
                        mismatches.push(h.to_string().replace('\n', "; "));
                    }
                }
            }
        }
    }
    run.check(
        "hitting set solvable iff its pseudoperiod instance is (n <= 4, m <= 3, k' <= 2)",
        mismatches.is_empty(),
        format!("{total} instances; mismatches {mismatches:?}"),
    );
    run.finish("reduction")
}
