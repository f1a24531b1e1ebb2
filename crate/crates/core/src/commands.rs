use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::json;

use widthlab::cdisk::{
    self, alternating_levels, check_theorem, check_width_chain, fact_reports, normalize_tau, region_counts,
    thinness_certificate, CDiskSchematic, DiskKind,
};
use widthlab::dsl::{parse_schematic, parse_word, serialize_schematic, serialize_word, to_value, Report};
use widthlab::morse::{self, braid_boxes, classify_levels, components, Level, LevelKind, MorseWord};
use widthlab::moves::{exchange, exchange_delta, orbit_min_width, push_block, Direction, MoveStep, MoveTrace};
use widthlab::presets;

use crate::{CdiskMode, Input};

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

type CmdResult = Result<Output, String>;

fn finish(input: &Input, report: &Report, text: String, code: u8) -> CmdResult {
    let stdout = if input.json { report.to_json() + "\n" } else { text };
    Ok(Output { stdout, code })
}

fn read_source(input: &Input) -> Result<(String, String), String> {
    match (&input.file, &input.preset) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| format!("error: cannot read {}: {e}", path.display()))?;
            Ok((path.display().to_string(), text))
        }
        (None, Some(name)) => {
            let text = presets::word_preset(name)
                .map(|p| p.text)
                .or_else(|| presets::schematic_preset(name).map(|p| p.text))
                .ok_or_else(|| format!("error: unknown preset `{name}` (see `widthlab presets`)"))?;
            Ok((format!("preset:{name}"), text.to_string()))
        }
        (None, None) => Err("error: give a FILE or --preset NAME".to_string()),
    }
}

fn load_word(input: &Input) -> Result<MorseWord, String> {
    let (origin, text) = read_source(input)?;
    parse_word(&text).map_err(|e| format!("{origin}\n{}", e.render(&text)))
}

fn load_schematic(input: &Input) -> Result<CDiskSchematic, String> {
    let (origin, text) = read_source(input)?;
    parse_schematic(&text).map_err(|e| format!("{origin}\n{}", e.render(&text)))
}

fn level_name(level: &Level) -> String {
    match level {
        Level::Bottom => "bottom".into(),
        Level::Top => "top".into(),
        Level::Between { below, above } => format!("{below}-{above}"),
    }
}

fn kind_name(kind: LevelKind) -> &'static str {
    match kind {
        LevelKind::Thin => "thin",
        LevelKind::Thick => "thick",
        LevelKind::Neither => "-",
        LevelKind::BoundaryThin => "boundary-thin",
    }
}

fn level_table(word: &MorseWord, only_marked: bool) -> String {
    let mut out = format!("{:<10} {:>7}  class\n", "level", "strands");
    for l in classify_levels(word) {
        if only_marked && l.class == LevelKind::Neither {
            continue;
        }
        writeln!(out, "{:<10} {:>7}  {}", level_name(&l.level), l.strand_count, kind_name(l.class)).unwrap();
    }
    out
}

fn level_values(word: &MorseWord) -> Vec<serde_json::Value> {
    classify_levels(word).iter().map(to_value).collect()
}

pub fn width(input: &Input) -> CmdResult {
    let w = load_word(input)?;
    let report = Report { levels: level_values(&w), ..Report::new(morse::width(&w)) };
    let text = format!("width {}\n{}", morse::width(&w), level_table(&w, false));
    finish(input, &report, text, 0)
}

pub fn levels(input: &Input) -> CmdResult {
    let w = load_word(input)?;
    let report = Report { levels: level_values(&w), ..Report::new(morse::width(&w)) };
    let marked = classify_levels(&w).iter().filter(|l| l.class != LevelKind::Neither).count();
    let text = if marked == 0 {
        "no thin or thick levels\n".to_string()
    } else {
        level_table(&w, true)
    };
    finish(input, &report, text, 0)
}

pub fn boxes(input: &Input, selected: Option<Vec<usize>>) -> CmdResult {
    let w = load_word(input)?;
    let subset: Option<BTreeSet<usize>> = selected.map(|v| v.into_iter().collect());
    if let Some(set) = &subset {
        let count = components(&w).count();
        if let Some(bad) = set.iter().find(|&&c| c >= count) {
            return Err(format!("error: component {bad} does not exist (word has {count})"));
        }
    }
    let p = braid_boxes(&w, subset.as_ref());
    let report = Report {
        levels: level_values(&w),
        boxes: p.boxes.iter().map(to_value).collect(),
        ..Report::new(morse::width(&w))
    }
    .with_extra("unboxed", &p.unboxed)
    .with_extra("proper_certified", &p.proper_certified);
    let mut text = String::new();
    for (i, b) in p.boxes.iter().enumerate() {
        let events: Vec<String> = b.events.iter().map(ToString::to_string).collect();
        writeln!(
            text,
            "box {}: events {} (m={}, M={}) between {} and {}",
            i + 1,
            events.join(","),
            b.minima,
            b.maxima,
            level_name(&b.lower),
            level_name(&b.upper)
        )
        .unwrap();
    }
    if !p.unboxed.is_empty() {
        let events: Vec<String> = p.unboxed.iter().map(ToString::to_string).collect();
        writeln!(text, "unboxed: {}", events.join(",")).unwrap();
    }
    if !p.proper_certified {
        text.push_str("not proper-certified: lowest critical event is not a cup or highest is not a cap\n");
    }
    finish(input, &report, text, 0)
}

fn parse_push(args: &[String]) -> Result<(std::ops::RangeInclusive<usize>, Direction, usize), String> {
    let bad = |what: &str| format!("error: bad --push {what}: `{}`", args.join(" "));
    let (a, b) = args[0].split_once("..").ok_or_else(|| bad("range (want A..B)"))?;
    let a: usize = a.parse().map_err(|_| bad("range start"))?;
    let b: usize = b.parse().map_err(|_| bad("range end"))?;
    let dir = match args[1].as_str() {
        "up" => Direction::Up,
        "down" => Direction::Down,
        _ => return Err(bad("direction (want up or down)")),
    };
    let past: usize = args[2].parse().map_err(|_| bad("target event"))?;
    Ok((a..=b, dir, past))
}

fn trace_text(trace: &MoveTrace) -> String {
    let mut out = String::new();
    for MoveStep { exchange, predicted, recomputed } in &trace.steps {
        writeln!(out, "  exchange {exchange}: predicted {predicted:+}, recomputed {recomputed:+}").unwrap();
    }
    writeln!(out, "total delta {:+}", trace.total_delta).unwrap();
    out
}

pub fn moves(input: &Input, site: Option<usize>, push: Option<Vec<String>>) -> CmdResult {
    let w = load_word(input)?;
    let before = morse::width(&w);
    let (after, trace) = match (site, push) {
        (Some(k), _) => {
            let out = exchange(&w, k).map_err(|e| format!("error: {e}"))?;
            let predicted = exchange_delta(&w, k).map_err(|e| format!("error: {e}"))?;
            let recomputed = morse::width(&out) as i64 - before as i64;
            let mut t = MoveTrace::new();
            t.push(MoveStep { exchange: k, predicted, recomputed });
            (out, t)
        }
        (None, Some(args)) => {
            let (range, dir, past) = parse_push(&args)?;
            push_block(&w, range, dir, past).map_err(|e| format!("error: {e}"))?
        }
        (None, None) => return Err("error: give --exchange K or --push A..B up|down L".into()),
    };
    let report = Report {
        levels: level_values(&after),
        moves: trace.steps.iter().map(to_value).collect(),
        ..Report::new(morse::width(&after))
    }
    .with_extra("before_width", &before)
    .with_extra("total_delta", &trace.total_delta)
    .with_extra("word", &serialize_word(&after));
    let text = format!("{}width {before} -> {}\n{}", trace_text(&trace), morse::width(&after), serialize_word(&after));
    finish(input, &report, text, 0)
}

fn witness_path(file: &Path) -> PathBuf {
    let stem = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let stem = stem.strip_suffix(".min").unwrap_or(&stem).to_string();
    file.with_file_name(format!("{stem}.min.morse"))
}

pub fn orbit(input: &Input, budget: usize) -> CmdResult {
    let w = load_word(input)?;
    let r = orbit_min_width(&w, budget);
    let written = match &input.file {
        Some(path) => {
            let out = witness_path(path);
            fs::write(&out, &r.witness).map_err(|e| format!("error: cannot write {}: {e}", out.display()))?;
            Some(out.display().to_string())
        }
        None => None,
    };
    let report = Report::new(r.min_width)
        .with_extra("start_width", &morse::width(&w))
        .with_extra("min_width", &r.min_width)
        .with_extra("exhausted", &r.exhausted)
        .with_extra("states", &r.states)
        .with_extra("witness", &r.witness)
        .with_extra("witness_file", &written)
        .with_extra("note", &"orbit minimum over far-commutation exchanges; an upper bound on the true width");
    let mut text = format!(
        "min width {} (start {}), {} states, {}\n",
        r.min_width,
        morse::width(&w),
        r.states,
        if r.exhausted { "exhausted" } else { "budget reached, not exhausted" }
    );
    match &written {
        Some(p) => writeln!(text, "witness written to {p}").unwrap(),
        None => text.push_str(&r.witness),
    }
    finish(input, &report, text, 0)
}

pub fn cdisk(input: &Input, mode: CdiskMode) -> CmdResult {
    let original = load_schematic(input)?;
    let fail = |e: cdisk::CDiskError| format!("error: {e}");
    let mut s = original.clone();
    let mut normalized = false;
    if s.disk == DiskKind::Cut && alternating_levels(&s).is_err() {
        s = normalize_tau(&s).map_err(fail)?;
        normalized = true;
    }
    let levels = alternating_levels(&s).map_err(fail)?;
    let all_widths = s.level_widths();
    let level_values: Vec<serde_json::Value> = levels
        .gaps
        .iter()
        .enumerate()
        .map(|(i, &g)| json!({ "index": i, "gap": g, "width": all_widths[g] }))
        .collect();
    let regions = region_counts(&s).map_err(fail)?;
    let cert = thinness_certificate(&s).map_err(fail)?;

    let mut report = Report {
        levels: level_values,
        certificate: cert.certificate.as_ref().map(to_value),
        moves: cert.certificate.iter().flat_map(|c| c.moves.steps.iter().map(to_value)).collect(),
        ..Report::new(s.relative_width())
    }
    .with_extra("n", &levels.n())
    .with_extra("r", &levels.r)
    .with_extra("regions", &regions)
    .with_extra("normalized_tau", &normalized)
    .with_extra("possibly_fake", &cert.possibly_fake);
    if normalized {
        report = report.with_extra("schematic", &serialize_schematic(&s));
    }

    let mut text = format!("relative width {}  n={} r={}\n", s.relative_width(), levels.n(), levels.r);
    if normalized {
        text.push_str("transfer moved into its alternating gap\n");
    }
    if mode.facts {
        let facts = fact_reports(&s).map_err(fail)?;
        for f in &facts {
            writeln!(
                text,
                "fact {} at region {}: predicted {:+}, recomputed {:+}{}",
                f.fact,
                f.region,
                f.predicted_delta,
                f.recomputed_delta,
                if f.pattern_holds() { "" } else { "  (pattern fails)" }
            )
            .unwrap();
        }
        if facts.is_empty() {
            text.push_str("no fact applies\n");
        }
        report = report.with_extra("facts", &facts);
    } else if mode.theorem {
        let t = check_theorem(&s).map_err(fail)?;
        writeln!(text, "case {}", t.case.map_or("none".to_string(), |c| to_value(&c).as_str().unwrap_or("").to_string())).unwrap();
        for rc in &t.regions {
            writeln!(text, "  region {} ({}): M={} m={}", rc.index, rc.side, rc.maxima, rc.minima).unwrap();
        }
        writeln!(text, "conclusions {}", if t.holds() { "hold" } else { "fail" }).unwrap();
        report = report.with_extra("theorem", &t);
    } else if mode.chain {
        let c = check_width_chain(&s).map_err(fail)?;
        let ws: Vec<String> = c.widths.iter().map(ToString::to_string).collect();
        writeln!(text, "w(S_0..P) = {}", ws.join(" ")).unwrap();
        writeln!(text, "chain {}, identity {}", if c.holds { "holds" } else { "fails" }, if c.identity_holds { "holds" } else { "fails" }).unwrap();
        report = report.with_extra("chain", &c);
    }
    if cert.possibly_fake {
        text.push_str("possibly fake cut-disk\n");
    }
    match &cert.certificate {
        Some(c) => {
            writeln!(text, "certificate: fact {} at region {}, width {:+}", c.fact, c.region, c.total_delta).unwrap();
            text.push_str(&trace_text(&c.moves));
            text.push_str(&serialize_schematic(&c.result));
        }
        None => text.push_str("no certificate\n"),
    }
    let code = if cert.certificate.is_some() { 2 } else { 0 };
    finish(input, &report, text, code)
}

pub fn presets(json: bool) -> CmdResult {
    let words: Vec<serde_json::Value> = presets::WORDS
        .iter()
        .map(|p| json!({ "name": p.name, "kind": "word", "expected_width": p.expected_width, "note": p.note }))
        .collect();
    let schematics: Vec<serde_json::Value> = presets::SCHEMATICS
        .iter()
        .map(|p| json!({ "name": p.name, "kind": "cdisk", "relative_width": p.schematic().relative_width(), "note": p.note }))
        .collect();
    if json {
        let report = Report::new(0).with_extra("presets", &[words, schematics].concat());
        return Ok(Output { stdout: report.to_json() + "\n", code: 0 });
    }
    let mut text = String::new();
    for p in presets::WORDS {
        writeln!(text, "{:<18} width {:>2}  {}", p.name, p.expected_width, p.note).unwrap();
    }
    for p in presets::SCHEMATICS {
        writeln!(text, "{:<18} cdisk     {}", p.name, p.note).unwrap();
    }
    Ok(Output { stdout: text, code: 0 })
}
