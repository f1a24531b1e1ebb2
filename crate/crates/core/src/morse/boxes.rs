//! Braid boxes: maximal height intervals of a strand family in which every
//! minimum lies below every maximum, cut out by the family's thin levels.

use std::collections::BTreeSet;

use serde::Serialize;

use super::components::components;
use super::event::Extremum;
use super::levels::{critical_indices, Level};
use super::word::MorseWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidBox {
    /// 1-based indices of the critical events in the box, bottom to top.
    pub events: Vec<usize>,
    pub minima: usize,
    pub maxima: usize,
    /// Level of the whole word directly below the lowest minimum of the box.
    pub lower: Level,
    /// Level of the whole word directly above the highest maximum of the box.
    pub upper: Level,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoxPartition {
    pub boxes: Vec<BraidBox>,
    /// Critical events of the selection that fall in no box.
    pub unboxed: Vec<usize>,
    /// Lowest selected critical event is a cup and the highest a cap.
    pub proper_certified: bool,
}

/// Groups the critical events of `word` (or of the selected components) into
/// braid boxes, bottom-up.
///
/// The selection's critical sequence splits at its thin levels (a maximum
/// directly followed by a minimum). Every piece that contains both a cup and
/// a cap is one box; a leading run of caps or a trailing run of cups belongs
/// to no box and breaks properness.
pub fn braid_boxes(word: &MorseWord, subset: Option<&BTreeSet<usize>>) -> BoxPartition {
    let all = critical_indices(word);
    let selected: Vec<usize> = match subset {
        None => all.clone(),
        Some(set) => {
            let comps = components(word);
            all.iter()
                .copied()
                .filter(|&k| comps.of_critical(k).is_some_and(|c| set.contains(&c)))
                .collect()
        }
    };
    let ext = |k: usize| word.event(k).and_then(|e| e.extremum());

    let proper_certified = match (selected.first(), selected.last()) {
        (Some(&lo), Some(&hi)) => ext(lo) == Some(Extremum::Min) && ext(hi) == Some(Extremum::Max),
        _ => true,
    };

    let mut pieces: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for &k in &selected {
        if let Some(&prev) = current.last() {
            if ext(prev) == Some(Extremum::Max) && ext(k) == Some(Extremum::Min) {
                pieces.push(std::mem::take(&mut current));
            }
        }
        current.push(k);
    }
    if !current.is_empty() {
        pieces.push(current);
    }

    // Position of each critical event in the whole word's critical order.
    let rank = |k: usize| all.binary_search(&k).expect("critical index");
    let level_below = |k: usize| match rank(k) {
        0 => Level::Bottom,
        r => Level::Between { below: all[r - 1], above: k },
    };
    let level_above = |k: usize| match all.get(rank(k) + 1) {
        None => Level::Top,
        Some(&next) => Level::Between { below: k, above: next },
    };

    let mut boxes = Vec::new();
    let mut unboxed = Vec::new();
    for piece in pieces {
        let minima = piece.iter().filter(|&&k| ext(k) == Some(Extremum::Min)).count();
        let maxima = piece.len() - minima;
        if minima > 0 && maxima > 0 {
            boxes.push(BraidBox {
                lower: level_below(piece[0]),
                upper: level_above(piece[piece.len() - 1]),
                events: piece,
                minima,
                maxima,
            });
        } else {
            unboxed.extend(piece);
        }
    }
    BoxPartition { boxes, unboxed, proper_certified }
}
