use std::error::Error as StdError;
use std::fs;
use std::path::Path;

use pseudoperiodic::automata::TM_TRIPLE_DFA;
use pseudoperiodic::reduction::{
    build_pp_instance, extract_hitting_set, solve_hitting_set, solve_pseudoperiod, HittingSetInstance,
    PseudoperiodInstance,
};
use pseudoperiodic::search::{
    inventory_entry, residue_classes, verify_construction, verify_large_alphabet_theorem, verify_residue_class,
    LargeAlphabetTheorem,
};
use pseudoperiodic::*;
use serde_json::json;

use crate::output::{prefix_label, Report};
use crate::{Command, DfaCommand, GenArgs, LongestArgs, PowerCommand, PpCommand, ReduceCommand, Source, VerifyCommand};

pub type CliResult<T> = std::result::Result<T, Box<dyn StdError>>;

pub fn run(cmd: Command) -> CliResult<Report> {
    match cmd {
        Command::Gen(args) => generate(args),
        Command::Pp(c) => pp(c),
        Command::Power(c) => power(c),
        Command::Dfa(c) => dfa(c),
        Command::Longest(args) => longest(args),
        Command::Verify(c) => verify(c),
        Command::Reduce(c) => reduce(c),
        Command::Reproduce { what, all } => Ok(crate::reproduce::run(what, all)),
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn generate(args: GenArgs) -> CliResult<Report> {
    let (label, word) = if let Some(file) = &args.morphism {
        let m: Morphism = read(file)?.parse()?;
        let seed = args.seed.expect("clap requires --seed");
        (format!("{file:?} from {seed}"), fixed_point_prefix(&m, seed, args.len)?)
    } else if let Some(code) = &args.fold {
        let instr = code
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(format!("fold code takes + and - only, got `{c}`")),
            })
            .collect::<std::result::Result<Vec<i8>, _>>()?;
        let mut w = paperfolding_word(&PaperfoldingCode::new(instr)?);
        if args.len > w.len() {
            return Err(format!("code of length {} gives only {} symbols", code.len(), w.len()).into());
        }
        w.truncate(args.len);
        (format!("paperfolding {code}"), w)
    } else if let Some(cf) = &args.cf {
        let w = sturmian_characteristic(&ContinuedFraction::new(cf.clone())?, args.len)?;
        (format!("sturmian {cf:?}"), w)
    } else if let Some(name) = &args.name {
        (name.clone(), named_sequence(name, args.len)?)
    } else {
        return Err("give a sequence name, --morphism, --fold or --cf".into());
    };
    let text = Word::new(word).to_text();
    Ok(Report::new(json!({ "source": label, "length": args.len, "word": text })).line(text))
}

impl Source {
    fn load(&self) -> CliResult<(String, Vec<u8>)> {
        if let Some(name) = &self.seq {
            let len = self.len.expect("clap requires --len");
            return Ok((name.clone(), named_sequence(name, len)?));
        }
        let (label, text) = match (&self.word, &self.file) {
            (Some(w), _) => ("word".to_string(), w.clone()),
            (None, Some(f)) => (f.display().to_string(), read(f)?),
            (None, None) => return Err("give --seq, --word or --file".into()),
        };
        let mut w = text.trim().parse::<Word>()?.into_symbols();
        if let Some(n) = self.len {
            w.truncate(n);
        }
        Ok((label, w))
    }
}

fn pp(cmd: PpCommand) -> CliResult<Report> {
    match cmd {
        PpCommand::Check { source, tuple } => {
            let (label, w) = source.load()?;
            let t: PpTuple = tuple.parse()?;
            let v = first_violation(&w, &t);
            let line = format!("{} ({label}, prefix length {}, tuple {t})", prefix_label(v), w.len());
            Ok(Report::new(json!({
                "source": label,
                "prefix_length": w.len(),
                "tuple": t.entries(),
                "consistent_on_prefix": v.is_none(),
                "violation": v,
            }))
            .line(line)
            .fail_if(v.is_some()))
        }
        PpCommand::Find { source, k, bound } => {
            let (label, w) = source.load()?;
            let found = first_pseudoperiod(&w, k, bound);
            let line = match &found {
                Some(t) => format!("{t} consistent-on-prefix ({label}, prefix length {})", w.len()),
                None => format!("no {k}-tuple with entries <= {bound} ({label}, prefix length {})", w.len()),
            };
            Ok(Report::new(json!({
                "source": label,
                "prefix_length": w.len(),
                "k": k,
                "bound": bound,
                "tuple": found.as_ref().map(|t| t.entries().to_vec()),
            }))
            .line(line))
        }
        PpCommand::Enum { source, k, bound } => {
            let (label, w) = source.load()?;
            let all = enumerate_pseudoperiods(&w, k, bound);
            let lines: Vec<String> = all.iter().map(|t| t.to_string()).collect();
            let summary = format!("{} tuples consistent-on-prefix ({label}, prefix length {})", all.len(), w.len());
            Ok(Report::new(json!({
                "source": label,
                "prefix_length": w.len(),
                "k": k,
                "bound": bound,
                "tuples": all.iter().map(|t| t.entries().to_vec()).collect::<Vec<_>>(),
            }))
            .lines(lines)
            .line(summary))
        }
        PpCommand::Min { source, bound } => {
            let (label, w) = source.load()?;
            let size = min_pseudoperiod_size(&w, bound);
            let line = match size {
                Some(k) => format!("min size {k} with entries <= {bound} ({label}, prefix length {})", w.len()),
                None => format!("no tuple with entries <= {bound} ({label}, prefix length {})", w.len()),
            };
            Ok(Report::new(json!({ "source": label, "prefix_length": w.len(), "bound": bound, "min_size": size }))
                .line(line))
        }
    }
}

fn power(cmd: PowerCommand) -> CliResult<Report> {
    match cmd {
        PowerCommand::Check { source, exponent } => {
            let (label, w) = source.load()?;
            let e: Exponent = exponent.parse()?;
            let wit = contains_power_at_least(&w, &e)?;
            let line = match &wit {
                None => format!("avoids {e} ({label}, prefix length {})", w.len()),
                Some(x) => format!(
                    "power found at {}: length {}, period {}, exponent {} ({label}, prefix length {})",
                    x.start,
                    x.length,
                    x.period,
                    x.exponent(),
                    w.len()
                ),
            };
            Ok(Report::new(json!({
                "source": label,
                "prefix_length": w.len(),
                "exponent": e.to_string(),
                "avoids": wit.is_none(),
                "witness": wit.map(|x| json!({ "start": x.start, "length": x.length, "period": x.period })),
            }))
            .line(line)
            .fail_if(wit.is_some()))
        }
        PowerCommand::Critexp { source } => {
            let (label, w) = source.load()?;
            let e = critical_exponent(&w)?;
            Ok(
                Report::new(json!({ "source": label, "prefix_length": w.len(), "critical_exponent": e.to_string() }))
                    .line(format!("critical exponent {e} ({label}, prefix length {})", w.len())),
            )
        }
    }
}

fn load_dfa(file: &str) -> CliResult<TupleDfa> {
    let text = if file == "@triple" {
        TM_TRIPLE_DFA.to_string()
    } else {
        read(Path::new(file))?
    };
    Ok(parse_walnut_dfa(&text)?)
}

fn parse_list(s: &str) -> CliResult<Vec<u64>> {
    s.trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| format!("bad number `{t}`").into()))
        .collect()
}

fn dfa(cmd: DfaCommand) -> CliResult<Report> {
    match cmd {
        DfaCommand::Accepts { file, tuple } => {
            let d = load_dfa(&file)?;
            let t = parse_list(&tuple)?;
            let ok = dfa_accepts(&d, &t)?;
            Ok(Report::new(json!({ "tuple": t, "accepted": ok })).line(ok.to_string()))
        }
        DfaCommand::Enum { file, bound } => {
            let d = load_dfa(&file)?;
            let all = dfa_enumerate(&d, bound);
            let lines: Vec<String> = all
                .iter()
                .map(|t| t.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
                .collect();
            let summary = format!("{} accepted tuples with entries <= {bound}", all.len());
            Ok(Report::new(json!({ "bound": bound, "tuples": all })).lines(lines).line(summary))
        }
    }
}

fn longest(args: LongestArgs) -> CliResult<Report> {
    let spec = SearchSpec::new(args.alphabet, args.pp.parse()?, args.exponent.parse()?, args.cap)?;
    let out = longest_constrained_word(&spec);
    let head = match out.verdict {
        Verdict::FiniteTree => format!("finite tree; longest = {}", out.longest_length),
        Verdict::CapExceeded => format!("cap exceeded; reached depth {}", out.longest_length),
    };
    Ok(Report::new(json!({
        "pp": spec.pp.entries(),
        "exponent": spec.forbidden.to_string(),
        "alphabet": spec.alphabet_size,
        "verdict": out.verdict.to_string(),
        "longest": out.longest_length,
        "witness": out.witness_word.to_text(),
        "nodes": out.nodes,
    }))
    .line(head)
    .line(format!("witness: {}", out.witness_word))
    .line(format!("nodes: {}", out.nodes)))
}

fn verify(cmd: VerifyCommand) -> CliResult<Report> {
    match cmd {
        VerifyCommand::Morphism {
            name,
            file,
            base,
            doubled,
            pp,
            exponent,
            len,
        } => {
            let (mut label, mut m, mut seq) = match (&name, &file) {
                (Some(n), _) => {
                    let e = inventory_entry(n)?;
                    (n.clone(), e.morphism, e.base)
                }
                (None, Some(f)) => (f.display().to_string(), read(f)?.parse()?, Sequence::ThueMorse),
                (None, None) => return Err("give --name or --file".into()),
            };
            if let Some(b) = &base {
                seq = b.parse()?;
            }
            if doubled {
                m = inventory_entry("mu")?.morphism.compose(&m)?;
                label = format!("mu({label})");
            }
            let t: PpTuple = pp.parse()?;
            let e: Exponent = exponent.parse()?;
            let r = verify_construction(&m, seq, &t, &e, len)?;
            let power_line = match r.power_witness {
                None => format!("avoids {e} on prefix: true"),
                Some(x) => format!("avoids {e} on prefix: false (length {} period {} at {})", x.length, x.period, x.start),
            };
            Ok(Report::new(json!({
                "construction": format!("{label}({seq})"),
                "prefix_length": len,
                "tuple": t.entries(),
                "exponent": e.to_string(),
                "consistent_on_prefix": r.pp_holds(),
                "violation": r.pp_violation,
                "avoids": r.power_free(),
            }))
            .line(format!("{label}({seq}), prefix length {len}"))
            .line(format!("tuple {t}: {}", prefix_label(r.pp_violation)))
            .line(power_line)
            .fail_if(!r.passed()))
        }
        VerifyCommand::Residue { name, samples, len } => {
            let (i, n, entry) = residue_classes()
                .into_iter()
                .find(|(_, _, e)| e.name == name || inventory_entry(&name).is_ok_and(|x| x.name == e.name))
                .ok_or_else(|| format!("`{name}` is not a residue-class morphism"))?;
            let samples = if samples.is_empty() {
                let start = if i >= 2 { i } else { i + n };
                (0..3).map(|j| start + j * n).collect()
            } else {
                samples
            };
            let reports = verify_residue_class(&entry.morphism, i, n, &samples, len)?;
            let cube_free = reports.first().is_some_and(|(_, r)| r.power_free());
            let mut report = Report::new(json!({
                "name": entry.name,
                "class": [i, n],
                "prefix_length": len,
                "samples": reports.iter().map(|(a, r)| json!({ "a": a, "violation": r.pp_violation })).collect::<Vec<_>>(),
                "avoids_3plus": cube_free,
            }))
            .line(format!("{} on t: class {i} mod {n}, prefix length {len}", entry.name))
            .line(format!("avoids 3+ on prefix: {cube_free}"));
            for (a, r) in &reports {
                report = report
                    .line(format!("tuple (1,{a}): {}", prefix_label(r.pp_violation)))
                    .fail_if(!r.passed());
            }
            Ok(report)
        }
        VerifyCommand::Theorem { which, base_len } => {
            let th: LargeAlphabetTheorem = which.parse()?;
            let c = th.construction()?;
            let r = verify_large_alphabet_theorem(th, base_len)?;
            Ok(Report::new(json!({
                "theorem": th.name(),
                "uniform_length": c.length(),
                "base_word": r.base_word.to_text(),
                "image_length": r.image_len,
                "tuple": c.pp.entries(),
                "avoids": c.avoids.to_string(),
                "consistent": r.pp_violation.is_none(),
                "violation": r.pp_violation,
                "power_free": r.power_witness.is_none(),
                "misplaced_prefixes": r.misplaced_prefixes,
            }))
            .line(format!("{}-uniform morphism on a {}-letter word of length {base_len}", c.length(), c.source_alphabet))
            .line(format!("base word: {}", r.base_word))
            .line(format!("image length {}: tuple {}: {}", r.image_len, c.pp, prefix_label(r.pp_violation)))
            .line(format!("avoids {}: {}", c.avoids, r.power_witness.is_none()))
            .line(format!("misplaced prefix occurrences: {}", r.misplaced_prefixes.len()))
            .fail_if(!r.passed()))
        }
    }
}

fn reduce(cmd: ReduceCommand) -> CliResult<Report> {
    match cmd {
        ReduceCommand::Build { file } => {
            let h: HittingSetInstance = read(&file)?.parse()?;
            let inst = build_pp_instance(&h);
            let text = inst.to_string();
            Ok(Report::new(json!({ "word": inst.x.to_text(), "k": inst.k, "bound": inst.bound }))
                .line(text.trim_end().to_string()))
        }
        ReduceCommand::Solve {
            file,
            hitting_set,
            guard,
        } => {
            let text = read(&file)?;
            if hitting_set {
                let h: HittingSetInstance = text.parse()?;
                let sol = solve_hitting_set(&h, guard)?;
                let line = match &sol {
                    Some(s) => format!("hitting set {s:?}"),
                    None => "no hitting set".to_string(),
                };
                Ok(Report::new(json!({ "solution": sol })).line(line))
            } else {
                let inst: PseudoperiodInstance = text.parse()?;
                let sol = solve_pseudoperiod(&inst, guard)?;
                let line = match &sol {
                    Some(t) => format!("pseudoperiod {t}"),
                    None => "no pseudoperiod".to_string(),
                };
                Ok(Report::new(json!({ "solution": sol.as_ref().map(|t| t.entries().to_vec()) })).line(line))
            }
        }
        ReduceCommand::Extract { file, solution } => {
            let inst: PseudoperiodInstance = read(&file)?.parse()?;
            let t: PpTuple = solution.parse()?;
            let h = extract_hitting_set(&inst, &t)?;
            Ok(Report::new(json!({ "hitting_set": h })).line(format!("hitting set {h:?}")))
        }
    }
}
