//! Shared generators for the integration suites.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use widthlab::cdisk::{CDiskSchematic, DiskKind, SchematicEvent, Side, SideCounts};
use widthlab::morse::{Event, MorseWord, Sign};

/// Every valid link word with at most `max_events` events, in a fixed order.
pub fn all_link_words(max_events: usize) -> Vec<MorseWord> {
    let mut out = Vec::new();
    let mut events = Vec::new();
    extend_words(max_events, 0, &mut events, &mut out);
    out
}

fn extend_words(left: usize, strands: usize, events: &mut Vec<Event>, out: &mut Vec<MorseWord>) {
    if strands == 0 && !events.is_empty() {
        out.push(MorseWord::link(events.clone()).expect("generator emits valid words"));
    }
    if left == 0 || strands / 2 > left {
        return;
    }
    // Closing k strands takes k/2 caps, so a cup needs room for one more.
    let mut options = Vec::new();
    if (strands + 2) / 2 < left {
        options.extend((0..=strands).map(Event::cup));
    }
    if strands >= 2 {
        for p in 0..strands - 1 {
            options.push(Event::cap(p));
            if strands / 2 < left {
                options.push(Event::cross(p, Sign::Pos));
                options.push(Event::cross(p, Sign::Neg));
            }
        }
    }
    for e in options {
        let next = match e.kind {
            widthlab::morse::EventKind::Cup => strands + 2,
            widthlab::morse::EventKind::Cap => strands - 2,
            widthlab::morse::EventKind::Cross(_) => strands,
        };
        events.push(e);
        extend_words(left - 1, next, events, out);
        events.pop();
    }
}

/// A random valid link word with between 2 and `max_events` events.
pub fn random_link_word(rng: &mut ChaCha8Rng, max_events: usize) -> MorseWord {
    let target = rng.gen_range(2..=max_events);
    let mut events = Vec::new();
    let mut strands = 0usize;
    loop {
        let left = target - events.len();
        if strands == 0 && !events.is_empty() && (left < 2 || rng.gen_bool(0.1)) {
            break;
        }
        let can_cup = (strands + 2) / 2 < left;
        let can_cross = strands >= 2 && strands / 2 < left;
        let must_cap = !can_cup && !can_cross;
        let e = match rng.gen_range(0..3) {
            _ if must_cap => Event::cap(rng.gen_range(0..strands - 1)),
            0 if can_cup => Event::cup(rng.gen_range(0..=strands)),
            1 if can_cross => {
                let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
                Event::cross(rng.gen_range(0..strands - 1), sign)
            }
            _ if strands >= 2 => Event::cap(rng.gen_range(0..strands - 1)),
            _ => Event::cup(rng.gen_range(0..=strands)),
        };
        strands = match e.kind {
            widthlab::morse::EventKind::Cup => strands + 2,
            widthlab::morse::EventKind::Cap => strands - 2,
            widthlab::morse::EventKind::Cross(_) => strands,
        };
        events.push(e);
    }
    MorseWord::link(events).expect("generator emits valid words")
}

/// Every valid link schematic (top counts zero) with at most `max_events`
/// events, calling `f` on each. Cut schematics carry exactly one transfer
/// and at most one tau flag, on an alpha maximum above the transfer.
pub fn for_each_schematic(max_events: usize, f: &mut impl FnMut(&CDiskSchematic)) {
    for disk in [DiskKind::Compress, DiskKind::Cut] {
        for inside in [Side::Alpha, Side::Beta] {
            let mut rev = Vec::new();
            grow(disk, inside, max_events, &mut rev, (0, 0), f);
        }
    }
}

// Built from the top down: below a maximum the count grows by two.
fn grow(
    disk: DiskKind,
    inside: Side,
    left: usize,
    rev: &mut Vec<SchematicEvent>,
    counts: (i64, i64),
    f: &mut impl FnMut(&CDiskSchematic),
) {
    let has_transfer = rev.contains(&SchematicEvent::Transfer);
    if !rev.is_empty() && (disk == DiskKind::Compress || has_transfer) {
        let s = CDiskSchematic {
            disk,
            base: SideCounts::new(counts.0 as usize, counts.1 as usize),
            top: SideCounts::default(),
            inside,
            events: rev.iter().rev().copied().collect(),
        };
        if s.check().is_ok() {
            f(&s);
        }
    }
    if left == 0 {
        return;
    }
    let mut options = vec![
        (SchematicEvent::max(Side::Alpha), (2, 0)),
        (SchematicEvent::min(Side::Alpha), (-2, 0)),
        (SchematicEvent::max(Side::Beta), (0, 2)),
        (SchematicEvent::min(Side::Beta), (0, -2)),
    ];
    if disk == DiskKind::Cut && !has_transfer {
        if !rev.iter().any(SchematicEvent::on_tau) {
            options.push((SchematicEvent::max(Side::Alpha).tau(), (2, 0)));
        }
        options.push((SchematicEvent::Transfer, (-1, 1)));
    }
    for (e, (da, db)) in options {
        let next = (counts.0 + da, counts.1 + db);
        if next.0 < 0 || next.1 < 0 {
            continue;
        }
        rev.push(e);
        grow(disk, inside, left - 1, rev, next, f);
        rev.pop();
    }
}
