use serde::Serialize;

use crate::morse::Extremum;

use super::schematic::{running_counts, CDiskError, CDiskSchematic, DiskKind, SchematicEvent, Side};

/// Alternating levels, as gaps (number of critical events below), listed
/// from the top: `gaps[0]` is `S_0` and `gaps[n]` is `P` (gap 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternatingLevels {
    pub gaps: Vec<usize>,
    /// Index of the alternating level carrying the transfer; `n` for a
    /// compressing disk.
    pub r: usize,
}

impl AlternatingLevels {
    pub fn n(&self) -> usize {
        self.gaps.len() - 1
    }

    /// Gap of `S_i`.
    pub fn gap(&self, i: usize) -> usize {
        self.gaps[i]
    }

    /// Index `i` of the alternating level at `gap`, if any.
    pub fn index_of(&self, gap: usize) -> Option<usize> {
        self.gaps.iter().position(|&g| g == gap)
    }

    /// Region `i` (1-based from the top), as the 1-based critical indices
    /// strictly above `S_i` and up to `S_{i-1}`.
    pub fn region(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        self.gaps[i] + 1..=self.gaps[i - 1]
    }

    /// The region (1-based) containing critical event `c`.
    pub fn region_of(&self, c: usize) -> Option<usize> {
        (1..=self.n()).find(|&i| self.region(i).contains(&c))
    }
}

fn sides(s: &CDiskSchematic) -> Vec<Side> {
    s.events.iter().filter_map(SchematicEvent::side).collect()
}

/// Alternating gaps ignoring where the transfer sits, highest first.
fn alternating_gaps(s: &CDiskSchematic) -> Vec<usize> {
    let sides = sides(s);
    let top = sides.iter().rposition(|&x| x == s.inside).map_or(0, |p| p + 1);
    let mut gaps = vec![top];
    for g in (1..top).rev() {
        if sides[g - 1] != sides[g] {
            gaps.push(g);
        }
    }
    if top != 0 {
        gaps.push(0);
    }
    gaps
}

/// Whether the transfer may sit in `gap`: beta (or nothing) directly below,
/// alpha (or nothing) directly above.
fn qualifies(sides: &[Side], gap: usize) -> bool {
    let below = gap.checked_sub(1).map(|i| sides[i]);
    let above = sides.get(gap).copied();
    below != Some(Side::Alpha) && above != Some(Side::Beta)
}

pub fn alternating_levels(s: &CDiskSchematic) -> Result<AlternatingLevels, CDiskError> {
    s.check()?;
    let gaps = alternating_gaps(s);
    let n = gaps.len() - 1;
    let r = match (s.disk, s.transfer_gap()) {
        (DiskKind::Compress, _) => n,
        (DiskKind::Cut, Some(g)) if qualifies(&sides(s), g) => {
            gaps.iter().position(|&x| x == g).ok_or(CDiskError::NotNormalized)?
        }
        (DiskKind::Cut, _) => return Err(CDiskError::NotNormalized),
    };
    Ok(AlternatingLevels { gaps, r })
}

fn with_transfer_at(s: &CDiskSchematic, gap: usize) -> CDiskSchematic {
    let mut events: Vec<SchematicEvent> =
        s.events.iter().copied().filter(SchematicEvent::is_critical).collect();
    events.insert(crit_insert_position(&events, gap), SchematicEvent::Transfer);
    CDiskSchematic { events, ..s.clone() }
}

/// Index in `events` just below critical event `gap + 1` (or the end).
fn crit_insert_position(events: &[SchematicEvent], gap: usize) -> usize {
    events
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_critical())
        .nth(gap)
        .map_or(events.len(), |(i, _)| i)
}

fn counts_valid(s: &CDiskSchematic) -> bool {
    running_counts(s).iter().all(|&(a, b)| a >= 0 && b >= 0)
}

/// Moves the transfer into the nearest alternating gap where it can sit
/// (beta below, alpha above), ties going up. The transfer is a horizontal
/// slide, so every level width is unchanged.
pub fn normalize_tau(s: &CDiskSchematic) -> Result<CDiskSchematic, CDiskError> {
    s.check()?;
    let current = match (s.disk, s.transfer_gap()) {
        (DiskKind::Cut, Some(g)) => g,
        _ => return Err(CDiskError::NoTau),
    };
    let sides = sides(s);
    let mut candidates: Vec<usize> = alternating_gaps(s)
        .into_iter()
        .filter(|&g| qualifies(&sides, g))
        .filter(|&g| g == current || counts_valid(&with_transfer_at(s, g)))
        .collect();
    candidates.sort_by_key(|&g| (g.abs_diff(current), std::cmp::Reverse(g)));
    match candidates.first() {
        Some(&g) if g == current => Ok(s.clone()),
        Some(&g) => Ok(with_transfer_at(s, g)),
        None => Err(CDiskError::NoQualifyingGap),
    }
}

/// The lowest alpha maximum on tau above the transfer, and the highest
/// alpha maximum in the unbroken run of alpha maxima starting there. Both
/// are 1-based critical indices.
pub fn first_tau_alpha_max(s: &CDiskSchematic) -> Option<(usize, usize)> {
    let gap = s.transfer_gap()?;
    let crit: Vec<SchematicEvent> = s.events.iter().copied().filter(SchematicEvent::is_critical).collect();
    let is_alpha_max =
        |e: &SchematicEvent| e.side() == Some(Side::Alpha) && e.extremum() == Some(Extremum::Max);
    let first = (gap..crit.len()).find(|&i| is_alpha_max(&crit[i]) && crit[i].on_tau())?;
    let mut effective = first;
    for (i, e) in crit.iter().enumerate().skip(first + 1) {
        if e.side() != Some(Side::Alpha) {
            continue;
        }
        if !is_alpha_max(e) {
            break;
        }
        effective = i;
    }
    Some((first + 1, effective + 1))
}

/// Gap of `R`: the lowest alpha-thin level above the first tau maximum,
/// or the top when alpha has no critical event above it.
pub fn r_gap(s: &CDiskSchematic) -> Option<usize> {
    let (_, effective) = first_tau_alpha_max(s)?;
    let sides = sides(s);
    let any_alpha_above = sides[effective..].contains(&Side::Alpha);
    Some(if any_alpha_above { effective } else { sides.len() })
}

/// Slides the first tau maximum of alpha to the top of its run of alpha
/// maxima. Maxima passing maxima leave every width alone, so only the tau
/// flags change.
pub fn normalize_first_tau_max(s: &CDiskSchematic) -> Result<CDiskSchematic, CDiskError> {
    s.check()?;
    let Some((first, effective)) = first_tau_alpha_max(s) else {
        return Ok(s.clone());
    };
    let pos = s.critical_positions();
    let mut out = s.clone();
    out.events.swap(pos[first - 1], pos[effective - 1]);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegionCounts {
    pub index: usize,
    pub side: Side,
    pub maxima: usize,
    pub minima: usize,
}

/// Maxima and minima between consecutive alternating levels, from the top.
pub fn region_counts(s: &CDiskSchematic) -> Result<Vec<RegionCounts>, CDiskError> {
    let levels = alternating_levels(s)?;
    Ok(regions(s, &levels))
}

pub(crate) fn regions(s: &CDiskSchematic, levels: &AlternatingLevels) -> Vec<RegionCounts> {
    let crit: Vec<SchematicEvent> = s.events.iter().copied().filter(SchematicEvent::is_critical).collect();
    (1..=levels.n())
        .map(|i| {
            let events = &crit[levels.gap(i)..levels.gap(i - 1)];
            let side = events[0].side().expect("critical");
            assert!(events.iter().all(|e| e.side() == Some(side)), "region {i} is two-sided");
            let maxima = events.iter().filter(|e| e.extremum() == Some(Extremum::Max)).count();
            RegionCounts { index: i, side, maxima, minima: events.len() - maxima }
        })
        .collect()
}
