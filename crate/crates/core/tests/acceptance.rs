//! Acceptance criteria, one PASS/FAIL line each.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use widthlab::cdisk::{self, CDiskSchematic, DiskKind};
use widthlab::dsl::{self, serialize_word};
use widthlab::morse::{self, Event, EventKind, Extremum, MorseWord};
use widthlab::moves::{self, orbit_min_width};
use widthlab::presets;

const RANDOM_WORDS: usize = 1000;
const RANDOM_SEED: u64 = 0x5eed_0001;
const SCHEMATIC_EVENTS: usize = 10;
const SCHEMATIC_FALLBACK: usize = 8;
const SCHEMATIC_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() -> ExitCode {
    let words = word_suite();
    let schematics = SchematicSuite::collect();
    let criteria: Vec<(&str, Check<'_>)> = vec![
        ("width fixtures", Box::new(width_fixtures)),
        ("exchange delta law", Box::new(|| delta_law(&words))),
        ("involution and conservation", Box::new(|| involution(&words))),
        ("braid-box partition", Box::new(|| box_partition(&words))),
        ("fact formula oracle", Box::new(|| fact_oracle(&schematics))),
        ("telescoping identity", Box::new(|| telescoping(&schematics))),
        ("certificate soundness and completeness", Box::new(|| certificates(&schematics))),
        ("normalization", Box::new(|| normalization(&schematics))),
        ("parser", Box::new(|| parser(&words))),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({detail}; {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({detail}; {secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Exhaustive link words up to eight events followed by seeded random words.
fn word_suite() -> Vec<MorseWord> {
    let mut words = common::all_link_words(8);
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    words.extend((0..RANDOM_WORDS).map(|_| common::random_link_word(&mut rng, 20)));
    words
}

/// Width from first principles: strands summed over the gaps between
/// consecutive critical events.
fn oracle_width(w: &MorseWord) -> usize {
    let mut strands = w.bottom();
    let mut total = 0;
    let mut seen_critical = false;
    let mut pending = 0;
    for e in w.events() {
        if e.is_critical() {
            if seen_critical {
                total += pending;
            }
            seen_critical = true;
        }
        strands = strands + e.outputs() - e.inputs();
        if e.is_critical() {
            pending = strands;
        }
    }
    total
}

fn classified_delta(lower: &Event, upper: &Event) -> i64 {
    match (lower.kind, upper.kind) {
        (EventKind::Cup, EventKind::Cap) => -4,
        (EventKind::Cap, EventKind::Cup) => 4,
        _ => 0,
    }
}

fn width_fixtures() -> Outcome {
    let unknot = presets::word_preset("unknot").unwrap().word();
    ensure(morse::width(&unknot) == 2, || format!("unknot width {}", morse::width(&unknot)))?;
    let started = Instant::now();
    let mut detail = vec!["unknot 2".to_string()];
    for name in ["trefoil-plat", "figure-eight-plat"] {
        let w = presets::word_preset(name).unwrap().word();
        let orbit = orbit_min_width(&w, 100_000);
        ensure(morse::width(&w) == 8 && orbit.min_width == 8 && orbit.exhausted, || {
            format!("{name}: width {} orbit min {} exhausted {}", morse::width(&w), orbit.min_width, orbit.exhausted)
        })?;
        detail.push(format!("{name} 8 over {} states", orbit.states));
    }
    ensure(started.elapsed() < Duration::from_secs(10), || "orbit search over 10s".into())?;
    Ok(detail.join(", "))
}

fn delta_law(words: &[MorseWord]) -> Outcome {
    let mut sites = 0;
    let mut seen = BTreeSet::new();
    for w in words {
        let before = oracle_width(w);
        for k in moves::legal_sites(w) {
            let after = moves::exchange(w, k).map_err(|e| format!("{}: {e}", serialize_word(w)))?;
            let recomputed = oracle_width(&after) as i64 - before as i64;
            let expected = classified_delta(&w.events()[k - 1], &w.events()[k]);
            let predicted = moves::exchange_delta(w, k).map_err(|e| e.to_string())?;
            ensure(recomputed == expected && predicted == expected, || {
                format!("site {k} of {:?}: table {expected}, predicted {predicted}, recomputed {recomputed}", serialize_word(w))
            })?;
            seen.insert(expected);
            sites += 1;
        }
    }
    ensure(seen == BTreeSet::from([-4, 0, 4]), || format!("deltas seen {seen:?}"))?;
    Ok(format!("{} words, {sites} legal sites, zero mismatches", words.len()))
}

fn involution(words: &[MorseWord]) -> Outcome {
    let mut sites = 0;
    for w in words {
        let profile = morse::strand_profile(w);
        let comps = morse::components(w);
        let mut kinds: Vec<EventKind> = w.events().iter().map(|e| e.kind).collect();
        kinds.sort();
        for k in moves::legal_sites(w) {
            let text = serialize_word(w);
            let x = moves::exchange(w, k).map_err(|e| e.to_string())?;
            let back = moves::exchange(&x, k).map_err(|e| format!("{text}: inverse at {k}: {e}"))?;
            ensure(back == *w, || format!("{text}: exchange {k} twice is not the identity"))?;

            let mut after: Vec<EventKind> = x.events().iter().map(|e| e.kind).collect();
            after.sort();
            ensure(after == kinds, || format!("{text}: event multiset changed at {k}"))?;

            let p = morse::strand_profile(&x);
            let off_site = (0..profile.len()).filter(|&i| i != k).all(|i| profile[i] == p[i]);
            ensure(off_site, || format!("{text}: profile changed away from site {k}"))?;

            let swap = |i: usize| if i == k { k + 1 } else if i == k + 1 { k } else { i };
            let moved: BTreeSet<BTreeSet<usize>> = comps
                .critical_partition()
                .into_iter()
                .map(|g| g.into_iter().map(swap).collect())
                .collect();
            let cx = morse::components(&x);
            ensure(cx.count() == comps.count() && cx.critical_partition() == moved, || {
                format!("{text}: components changed at {k}")
            })?;
            sites += 1;
        }
    }
    Ok(format!("{sites} sites, zero violations"))
}

/// Checks one partition against the selection it was computed from.
fn check_boxes(w: &MorseWord, selection: &[usize], part: &morse::BoxPartition) -> Result<(), String> {
    let text = serialize_word(w);
    let ext = |k: usize| w.event(k).and_then(Event::extremum);
    let mut covered: Vec<usize> = part.boxes.iter().flat_map(|b| b.events.iter().copied()).collect();
    covered.extend(&part.unboxed);
    covered.sort_unstable();
    ensure(covered == selection, || format!("{text}: boxes do not partition {selection:?}"))?;
    for b in &part.boxes {
        let last_cup = b.events.iter().filter(|&&k| ext(k) == Some(Extremum::Min)).max();
        let first_cap = b.events.iter().filter(|&&k| ext(k) == Some(Extremum::Max)).min();
        let ordered = matches!((last_cup, first_cap), (Some(c), Some(a)) if c < a);
        ensure(ordered, || format!("{text}: box {:?} mixes cups and caps", b.events))?;
    }
    let proper = match (selection.first(), selection.last()) {
        (Some(&lo), Some(&hi)) => ext(lo) == Some(Extremum::Min) && ext(hi) == Some(Extremum::Max),
        _ => true,
    };
    ensure(part.proper_certified == proper, || format!("{text}: properness flag wrong"))?;
    ensure(!proper || part.unboxed.is_empty(), || format!("{text}: proper selection left events unboxed"))?;
    Ok(())
}

fn box_partition(words: &[MorseWord]) -> Outcome {
    let (mut proper, mut flagged, mut selections) = (0, 0, 0);
    let mut tally = |w: &MorseWord, sel: &[usize], part: &morse::BoxPartition| -> Result<(), String> {
        check_boxes(w, sel, part)?;
        selections += 1;
        if part.proper_certified {
            proper += 1;
        } else {
            flagged += 1;
        }
        Ok(())
    };
    for w in words {
        let crit = morse::critical_indices(w);
        tally(w, &crit, &morse::braid_boxes(w, None))?;
        let comps = morse::components(w);
        for c in 0..comps.count() {
            let sel: Vec<usize> = crit.iter().copied().filter(|&k| comps.of_critical(k) == Some(c)).collect();
            tally(w, &sel, &morse::braid_boxes(w, Some(&BTreeSet::from([c]))))?;
        }
        // Interior windows are tangles and may fail the properness proxy.
        if w.len() >= 4 {
            let profile = morse::strand_profile(w);
            let (lo, hi) = (1, w.len() - 1);
            let t = MorseWord::new(w.events()[lo..hi].to_vec(), profile[lo], profile[hi])
                .map_err(|e| format!("window of {}: {e:?}", serialize_word(w)))?;
            tally(&t, &morse::critical_indices(&t), &morse::braid_boxes(&t, None))?;
        }
    }
    ensure(flagged > 0, || "no improper selection exercised".into())?;
    Ok(format!("{selections} selections, {proper} proper, {flagged} flagged"))
}

/// Every valid normalized link schematic up to the event bound.
struct SchematicSuite {
    max_events: usize,
    normalized: Vec<CDiskSchematic>,
    /// Valid schematics seen, normalized or not.
    seen: usize,
}

impl SchematicSuite {
    fn collect() -> Self {
        let started = Instant::now();
        let suite = Self::with_bound(SCHEMATIC_EVENTS);
        let elapsed = started.elapsed();
        if elapsed <= SCHEMATIC_BUDGET {
            println!(
                "schematic suite: {} normalized of {} valid schematics with at most {} events ({:.2}s)",
                suite.normalized.len(),
                suite.seen,
                suite.max_events,
                elapsed.as_secs_f64()
            );
            return suite;
        }
        let suite = Self::with_bound(SCHEMATIC_FALLBACK);
        println!(
            "schematic suite: bound {SCHEMATIC_EVENTS} took {:.2}s, over budget; reduced to {} events ({} normalized)",
            elapsed.as_secs_f64(),
            SCHEMATIC_FALLBACK,
            suite.normalized.len()
        );
        suite
    }

    fn with_bound(max_events: usize) -> Self {
        let mut normalized = Vec::new();
        let mut seen = 0;
        common::for_each_schematic(max_events, &mut |s| {
            seen += 1;
            if is_normalized(s) {
                normalized.push(s.clone());
            }
        });
        SchematicSuite { max_events, normalized, seen }
    }
}

fn is_normalized(s: &CDiskSchematic) -> bool {
    let tau_ok = s.disk == DiskKind::Compress || cdisk::normalize_tau(s).ok().as_ref() == Some(s);
    tau_ok && cdisk::alternating_levels(s).is_ok()
}

/// Total strand count after each critical event, from the base counts.
fn oracle_gap_totals(s: &CDiskSchematic) -> Vec<i64> {
    let mut total = (s.base.alpha + s.base.beta) as i64;
    let mut out = vec![total];
    for e in &s.events {
        match e.extremum() {
            Some(Extremum::Min) => total += 2,
            Some(Extremum::Max) => total -= 2,
            None => continue,
        }
        out.push(total);
    }
    out
}

/// Relative width: strands summed over the gaps strictly between critical events.
fn oracle_width_of(s: &CDiskSchematic) -> i64 {
    let totals = oracle_gap_totals(s);
    totals[1..totals.len().saturating_sub(1)].iter().sum()
}

fn fact_oracle(suite: &SchematicSuite) -> Outcome {
    let mut checked = 0;
    let mut by_fact = [0usize; 5];
    for s in &suite.normalized {
        let reports = cdisk::fact_reports(s).map_err(|e| format!("{}: {e}", dsl::serialize_schematic(s)))?;
        for r in reports {
            let oracle = oracle_width_of(&r.result) - oracle_width_of(&r.start);
            ensure(r.predicted_delta == r.recomputed_delta && r.recomputed_delta == oracle, || {
                format!(
                    "fact {} region {} of\n{}predicted {}, recomputed {}, oracle {oracle}",
                    r.fact,
                    r.region,
                    dsl::serialize_schematic(s),
                    r.predicted_delta,
                    r.recomputed_delta
                )
            })?;
            ensure(r.result.check().is_ok(), || format!("fact {} leaves an invalid schematic", r.fact))?;
            by_fact[r.fact as usize] += 1;
            checked += 1;
        }
    }
    ensure(by_fact[1..].iter().all(|&c| c > 0), || format!("some fact never applied: {by_fact:?}"))?;
    Ok(format!(
        "{} schematics up to {} events, {checked} fact moves (1: {}, 2: {}, 3: {}, 4: {}), zero mismatches",
        suite.normalized.len(),
        suite.max_events,
        by_fact[1],
        by_fact[2],
        by_fact[3],
        by_fact[4]
    ))
}

fn telescoping(suite: &SchematicSuite) -> Outcome {
    let mut steps = 0;
    for s in &suite.normalized {
        let text = dsl::serialize_schematic(s);
        let levels = cdisk::alternating_levels(s).map_err(|e| e.to_string())?;
        let regions = cdisk::region_counts(s).map_err(|e| e.to_string())?;
        let totals = oracle_gap_totals(s);
        for i in 1..=levels.n() {
            let lhs = totals[levels.gap(i - 1)] - totals[levels.gap(i)];
            let rc = &regions[i - 1];
            let rhs = 2 * (rc.minima as i64 - rc.maxima as i64);
            ensure(lhs == rhs, || format!("step {i} of\n{text}: {lhs} != {rhs}"))?;
            steps += 1;
        }
        if let Ok(chain) = cdisk::check_width_chain(s) {
            ensure(chain.identity_holds, || format!("chain report disagrees on\n{text}"))?;
        }
    }
    Ok(format!("{} schematics, {steps} steps", suite.normalized.len()))
}

/// The base case of the inequalities is topological: the inside side must
/// meet the first alternating level below the top one. Counts cannot
/// witness it, so completeness is only asked of schematics that satisfy it.
fn base_premise(s: &CDiskSchematic) -> bool {
    let levels = cdisk::alternating_levels(s).expect("normalized");
    levels.n() == 0 || s.gap_counts()[levels.gap(1)].get(s.inside) > 0
}

fn certificates(suite: &SchematicSuite) -> Outcome {
    let (mut issued, mut violating, mut outside_premise) = (0, 0, 0);
    for s in &suite.normalized {
        let text = dsl::serialize_schematic(s);
        let report = cdisk::thinness_certificate(s).map_err(|e| format!("{text}: {e}"))?;
        if let Some(cert) = &report.certificate {
            let replayed = cert.replay();
            ensure(replayed == cert.result && replayed.check().is_ok(), || format!("replay mismatch on\n{text}"))?;
            let drop = oracle_width_of(&replayed) - oracle_width_of(s);
            ensure(drop < 0 && drop == cert.total_delta, || {
                format!("certificate on\n{text}does not lower the width (delta {drop})")
            })?;
            issued += 1;
        }
        let Ok(theorem) = cdisk::check_theorem(s) else { continue };
        let fails = !theorem.conclusion1.holds
            || theorem.conclusion3.as_ref().is_some_and(|c| !c.holds)
            || theorem.conclusion4.as_ref().is_some_and(|c| !c.holds);
        if !fails {
            continue;
        }
        if !base_premise(s) {
            outside_premise += 1;
            continue;
        }
        violating += 1;
        ensure(report.certificate.is_some(), || format!("no certificate for violating\n{text}"))?;
    }
    Ok(format!(
        "{issued} certificates replayed, {violating} violating schematics all certified, \
         {outside_premise} violations outside the base premise skipped"
    ))
}

fn normalization(suite: &SchematicSuite) -> Outcome {
    let (mut tau, mut first_max) = (0, 0);
    let mut failure = None;
    common::for_each_schematic(suite.max_events, &mut |s| {
        if failure.is_some() || s.disk != DiskKind::Cut {
            return;
        }
        let text = dsl::serialize_schematic(s);
        if let Ok(n) = cdisk::normalize_tau(s) {
            tau += 1;
            if n.level_widths() != s.level_widths() {
                failure = Some(format!("normalize_tau changed level widths of\n{text}"));
            } else if cdisk::normalize_tau(&n).as_ref() != Ok(&n) {
                failure = Some(format!("normalize_tau not idempotent on\n{text}"));
            }
        }
        if is_normalized(s) {
            if let Ok(n) = cdisk::normalize_first_tau_max(s) {
                first_max += 1;
                if n.level_widths() != s.level_widths() {
                    failure = Some(format!("normalize_first_tau_max changed level widths of\n{text}"));
                } else if cdisk::normalize_first_tau_max(&n).as_ref() != Ok(&n) {
                    failure = Some(format!("normalize_first_tau_max not idempotent on\n{text}"));
                }
            }
        }
    });
    match failure {
        Some(f) => Err(f),
        None => Ok(format!("{tau} tau normalizations, {first_max} first-max normalizations")),
    }
}

/// Malformed inputs and the exact span (line, column, length) each must report.
const MALFORMED_WORDS: &[(&str, (usize, usize, usize))] = &[
    ("", (1, 1, 1)),
    ("cup 0\ncap 0\n", (1, 1, 3)),
    ("knot\ncup 0\n", (1, 1, 4)),
    ("link extra\n", (1, 6, 5)),
    ("tangle\n", (1, 7, 1)),
    ("tangle bottom=2\n", (1, 16, 1)),
    ("tangle bottom=x top=0\n", (1, 15, 1)),
    ("tangle top=0 bottom=0\n", (1, 8, 5)),
    ("link\ncup 0\nfoo 1\n", (3, 1, 3)),
    ("link\ncup\n", (2, 4, 1)),
    ("link\ncup -1\n", (2, 5, 2)),
    ("link\ncup 0 0\n", (2, 7, 1)),
    ("link\ncup 0\ncap 1\n", (3, 1, 5)),
    ("link\n   x+ 0\n", (2, 4, 4)),
];

const MALFORMED_SCHEMATICS: &[(&str, (usize, usize, usize))] = &[
    ("cdisk\n", (1, 6, 1)),
    ("cdisk flat\n", (1, 7, 4)),
    ("cdisk compress\nbase alpha=1\n", (2, 13, 1)),
    ("cdisk cut\nbase alpha=0 beta=0\ninside=gamma\n", (3, 8, 5)),
    ("cdisk compress\nbase alpha=0 beta=0\ninside=beta\nmin gamma\n", (4, 5, 5)),
    ("cdisk compress\nbase alpha=0 beta=0\ninside=beta\nmin beta up\n", (4, 10, 2)),
];

fn check_span(kind: &str, text: &str, err: Option<dsl::ParseError>, want: (usize, usize, usize)) -> Result<(), String> {
    let err = err.ok_or_else(|| format!("{kind} {text:?} parsed"))?;
    let got = (err.span.line, err.span.column, err.span.length);
    ensure(got == want, || format!("{kind} {text:?}: span {got:?}, expected {want:?} ({err})"))
}

fn parser(words: &[MorseWord]) -> Outcome {
    for p in presets::WORDS {
        let w = p.word();
        ensure(dsl::parse_word(&serialize_word(&w)).as_ref() == Ok(&w), || format!("preset {}", p.name))?;
    }
    for p in presets::SCHEMATICS {
        let s = p.schematic();
        let back = dsl::parse_schematic(&dsl::serialize_schematic(&s));
        ensure(back.as_ref() == Ok(&s), || format!("preset {}", p.name))?;
    }
    let random = &words[words.len() - RANDOM_WORDS..];
    for w in random {
        let text = serialize_word(w);
        ensure(dsl::parse_word(&text).as_ref() == Ok(w), || format!("round trip of {text:?}"))?;
        let crlf = text.replace('\n', "\r\n");
        ensure(dsl::parse_word(&crlf).as_ref() == Ok(w), || format!("CRLF round trip of {text:?}"))?;
    }
    for &(text, want) in MALFORMED_WORDS {
        check_span("word", text, dsl::parse_word(text).err(), want)?;
    }
    for &(text, want) in MALFORMED_SCHEMATICS {
        check_span("schematic", text, dsl::parse_schematic(text).err(), want)?;
    }
    Ok(format!(
        "{} presets, {} random words (LF and CRLF), {} malformed inputs with exact spans",
        presets::WORDS.len() + presets::SCHEMATICS.len(),
        random.len(),
        MALFORMED_WORDS.len() + MALFORMED_SCHEMATICS.len()
    ))
}

/// One JSON document covering the orbit presets, the exchange deltas of the
/// exhaustive words and every fact report and certificate of the
/// schematics up to eight events.
fn suite_json() -> String {
    let orbits: Vec<_> = presets::WORDS.iter().map(|p| orbit_min_width(&p.word(), 100_000)).collect();
    let deltas: Vec<Vec<i64>> = common::all_link_words(6)
        .iter()
        .map(|w| moves::legal_sites(w).iter().map(|&k| moves::recomputed_delta(w, k).unwrap()).collect())
        .collect();
    let mut schematics = Vec::new();
    common::for_each_schematic(SCHEMATIC_FALLBACK, &mut |s| {
        if is_normalized(s) {
            let facts = cdisk::fact_reports(s).unwrap();
            let cert = cdisk::thinness_certificate(s).unwrap();
            schematics.push(serde_json::json!({ "facts": facts, "certificate": cert }));
        }
    });
    serde_json::json!({ "orbits": orbits, "deltas": deltas, "schematics": schematics }).to_string()
}

fn determinism() -> Outcome {
    let first = suite_json();
    let second = suite_json();
    ensure(first == second, || "reports differ between runs".into())?;
    Ok(format!("two runs, {} identical bytes", first.len()))
}
