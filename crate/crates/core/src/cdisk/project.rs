use std::collections::BTreeSet;

use serde::Serialize;

use crate::morse::{components, strand_profile, EventKind, Extremum, MorseWord};

use super::schematic::{validate_schematic, CDiskError, CDiskSchematic, DiskKind, SchematicEvent, Side, SideCounts};

/// How to read a Morse word as a schematic above a level `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Labeling {
    pub disk: DiskKind,
    pub inside: Side,
    /// Strands of `P` on the alpha side; the rest are beta.
    pub base_alpha: usize,
    /// Side and tau flag for each event (1-based index `k` at `[k - 1]`).
    /// Crossings and events below `P` are ignored.
    pub sides: Vec<Option<(Side, bool)>>,
    /// The transfer sits just above this event (0 means directly above `P`).
    pub transfer_after: Option<usize>,
}

/// Projects the part of `word` above `P` (which lies after the first
/// `p_level` events) onto a schematic, dropping positions and crossings.
pub fn to_schematic(word: &MorseWord, labeling: &Labeling, p_level: usize) -> Result<CDiskSchematic, CDiskError> {
    let bad = |event: usize, reason: &str| CDiskError::Labeling { event, reason: reason.to_string() };
    if p_level > word.len() {
        return Err(bad(p_level, "P lies above the word"));
    }
    let at_p = strand_profile(word)[p_level];
    if labeling.base_alpha > at_p {
        return Err(bad(p_level, "more alpha strands than P meets"));
    }
    let comps = components(word);
    let mut tau_components = BTreeSet::new();
    let mut events = Vec::new();
    if labeling.transfer_after == Some(p_level) {
        events.push(SchematicEvent::Transfer);
    }
    for k in p_level + 1..=word.len() {
        let e = word.event(k).expect("in range");
        let extremum = match e.kind {
            EventKind::Cup => Extremum::Min,
            EventKind::Cap => Extremum::Max,
            EventKind::Cross(_) => {
                if labeling.transfer_after == Some(k) {
                    events.push(SchematicEvent::Transfer);
                }
                continue;
            }
        };
        let Some((side, on_tau)) = labeling.sides.get(k - 1).copied().flatten() else {
            return Err(bad(k, "critical event has no side"));
        };
        if on_tau {
            tau_components.extend(comps.of_critical(k));
        }
        events.push(SchematicEvent::Critical { extremum, side, on_tau });
        if labeling.transfer_after == Some(k) {
            events.push(SchematicEvent::Transfer);
        }
    }
    if let Some(t) = labeling.transfer_after.filter(|&t| t < p_level || t > word.len()) {
        return Err(bad(t, "transfer lies outside the part above P"));
    }
    if tau_components.len() > 1 {
        let first = (p_level + 1..=word.len())
            .filter(|&k| labeling.sides.get(k - 1).copied().flatten().is_some_and(|(_, t)| t))
            .nth(1)
            .unwrap_or(p_level);
        return Err(bad(first, "tau events lie on more than one component"));
    }

    let mut s = CDiskSchematic {
        disk: labeling.disk,
        base: SideCounts::new(labeling.base_alpha, at_p - labeling.base_alpha),
        top: SideCounts::default(),
        inside: labeling.inside,
        events,
    };
    let (a, b) = super::schematic::running_counts(&s).last().copied().expect("nonempty");
    if a < 0 || b < 0 {
        return Err(bad(word.len(), "side counts go negative"));
    }
    s.top = SideCounts::new(a as usize, b as usize);
    let report = validate_schematic(&s);
    if let Some(v) = report.violations.first() {
        // Map the schematic index back to the word.
        let event = v.event.map_or(word.len(), |i| schematic_to_word(word, p_level, labeling, i));
        return Err(bad(event, &v.kind.to_string()));
    }
    Ok(s)
}

fn schematic_to_word(word: &MorseWord, p_level: usize, labeling: &Labeling, i: usize) -> usize {
    let mut seen = usize::from(labeling.transfer_after == Some(p_level));
    if seen >= i {
        return p_level;
    }
    for k in p_level + 1..=word.len() {
        let critical = word.event(k).is_some_and(|e| e.is_critical());
        seen += usize::from(critical) + usize::from(labeling.transfer_after == Some(k));
        if seen >= i {
            return k;
        }
    }
    word.len()
}
