use serde::Serialize;

use super::event::Extremum;
use super::word::{strand_profile, MorseWord};

/// A regular level, identified by the critical events around it.
///
/// Event indices are 1-based heights in the word. Crossings never delimit a
/// level, so `below` and `above` are always cups or caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "at", rename_all = "snake_case")]
pub enum Level {
    Bottom,
    Between { below: usize, above: usize },
    Top,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelKind {
    Thin,
    Thick,
    Neither,
    BoundaryThin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LevelClass {
    pub level: Level,
    pub strand_count: usize,
    pub class: LevelKind,
}

/// 1-based indices of the cups and caps of `word`, bottom to top.
pub fn critical_indices(word: &MorseWord) -> Vec<usize> {
    word.events()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_critical())
        .map(|(i, _)| i + 1)
        .collect()
}

/// Presentation width: the strand count of one regular level per gap between
/// consecutive critical events, summed. Boundary gaps are not counted.
pub fn width(word: &MorseWord) -> usize {
    let profile = strand_profile(word);
    let crit = critical_indices(word);
    crit.windows(2).map(|pair| profile[pair[0]]).sum()
}

/// Thin/thick classification of every inter-critical level, plus the two
/// boundary levels when the word is a tangle.
pub fn classify_levels(word: &MorseWord) -> Vec<LevelClass> {
    let profile = strand_profile(word);
    let crit = critical_indices(word);
    let ext = |k: usize| word.event(k).and_then(|e| e.extremum());
    let mut out = Vec::new();

    let tangle = !word.is_link();
    if tangle {
        let class = match crit.first().and_then(|&k| ext(k)) {
            Some(Extremum::Min) => LevelKind::BoundaryThin,
            _ => LevelKind::Neither,
        };
        out.push(LevelClass { level: Level::Bottom, strand_count: word.bottom(), class });
    }
    for pair in crit.windows(2) {
        let (below, above) = (pair[0], pair[1]);
        let class = match (ext(below), ext(above)) {
            (Some(Extremum::Max), Some(Extremum::Min)) => LevelKind::Thin,
            (Some(Extremum::Min), Some(Extremum::Max)) => LevelKind::Thick,
            _ => LevelKind::Neither,
        };
        out.push(LevelClass {
            level: Level::Between { below, above },
            strand_count: profile[below],
            class,
        });
    }
    if tangle {
        let class = match crit.last().and_then(|&k| ext(k)) {
            Some(Extremum::Max) => LevelKind::BoundaryThin,
            _ => LevelKind::Neither,
        };
        out.push(LevelClass { level: Level::Top, strand_count: word.top(), class });
    }
    out
}

/// Thin levels only, in height order.
pub fn thin_levels(word: &MorseWord) -> Vec<LevelClass> {
    classify_levels(word)
        .into_iter()
        .filter(|l| matches!(l.class, LevelKind::Thin))
        .collect()
}
