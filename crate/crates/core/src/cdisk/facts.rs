use std::ops::RangeInclusive;

use serde::Serialize;

use crate::morse::Extremum;
use crate::moves::{pair_delta, MoveStep, MoveTrace};

use super::levels::{alternating_levels, first_tau_alpha_max, normalize_first_tau_max, r_gap, regions, AlternatingLevels};
use super::schematic::{running_counts, CDiskError, CDiskSchematic, DiskKind, Side};

/// Relative width from signed running counts, so that a trace may pass
/// through intermediate schematics without clamping.
fn signed_width(s: &CDiskSchematic) -> i64 {
    let counts = running_counts(s);
    let crit: Vec<i64> = s
        .events
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_critical())
        .map(|(i, _)| counts[i + 1].0 + counts[i + 1].1)
        .collect();
    match crit.len() {
        0 => 0,
        c => crit[..c - 1].iter().sum(),
    }
}

/// Moves the events `block` (0-based, half-open, into `s.events`) so that
/// they sit directly before the event now at `dest` (or at the end when
/// `dest == s.events.len()`). Every adjacent swap is recorded.
pub(crate) fn relocate(
    s: &CDiskSchematic,
    block: std::ops::Range<usize>,
    dest: usize,
) -> (CDiskSchematic, MoveTrace) {
    let mut cur = s.clone();
    let mut trace = MoveTrace::new();
    let (mut lo, mut hi) = (block.start, block.end);
    let mut step = |cur: &mut CDiskSchematic, k: usize| {
        let before = signed_width(cur);
        let predicted = pair_delta(cur.events[k].extremum(), cur.events[k + 1].extremum());
        cur.events.swap(k, k + 1);
        let recomputed = signed_width(cur) - before;
        trace.push(MoveStep { exchange: k + 1, predicted, recomputed });
    };
    if lo == hi {
        return (cur, MoveTrace::new());
    }
    if dest >= hi {
        while hi < dest {
            for k in (lo..hi).rev() {
                step(&mut cur, k);
            }
            lo += 1;
            hi += 1;
        }
    } else {
        while lo > dest {
            for k in lo - 1..hi - 1 {
                step(&mut cur, k);
            }
            lo -= 1;
            hi -= 1;
        }
    }
    (cur, trace)
}

/// Index into `events` of critical event `c` (1-based), or the end.
fn event_index(s: &CDiskSchematic, c: usize) -> usize {
    s.critical_positions().get(c - 1).copied().unwrap_or(s.events.len())
}

/// Events of critical range `block` (1-based, inclusive) as a slice range.
fn block_span(s: &CDiskSchematic, block: &RangeInclusive<usize>) -> std::ops::Range<usize> {
    let pos = s.critical_positions();
    pos[block.start() - 1]..pos[block.end() - 1] + 1
}

/// Pipes a block of beta critical events (1-based critical indices) up
/// along the connecting strand to sit just below `target_gap`. No critical
/// point is created or destroyed.
pub fn pipe(
    s: &CDiskSchematic,
    block: RangeInclusive<usize>,
    target_gap: usize,
) -> Result<(CDiskSchematic, MoveTrace), CDiskError> {
    s.check()?;
    let Some(transfer) = s.transfer_gap().filter(|_| s.disk == DiskKind::Cut) else {
        return Err(CDiskError::NoTau);
    };
    if block.is_empty() {
        return Ok((s.clone(), MoveTrace::new()));
    }
    let c = s.critical_count();
    let (a, b) = (*block.start(), *block.end());
    if a == 0 || b > c {
        return Err(CDiskError::IllegalPipe(format!("block {a}..{b} outside 1..{c}")));
    }
    if (a..=b).any(|k| s.critical(k).and_then(|e| e.side()) != Some(Side::Beta)) {
        return Err(CDiskError::IllegalPipe("block must be all beta".into()));
    }
    if b > transfer {
        return Err(CDiskError::IllegalPipe("block must lie below the transfer".into()));
    }
    if target_gap < b || target_gap > c {
        return Err(CDiskError::IllegalPipe(format!("target gap {target_gap} is not above the block")));
    }
    if target_gap > r_gap(s).unwrap_or(c) {
        return Err(CDiskError::IllegalPipe(
            "target lies above the thin level over the first tau maximum".into(),
        ));
    }
    let (out, trace) = relocate(s, block_span(s, &block), event_index(s, target_gap + 1));
    out.check().map_err(|e| CDiskError::IllegalPipe(e.to_string()))?;
    Ok((out, trace))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitCounts {
    pub max_below: usize,
    pub min_below: usize,
    pub max_above: usize,
    pub min_above: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FactCounts {
    pub max_alpha: usize,
    pub min_alpha: usize,
    pub max_beta: usize,
    pub min_beta: usize,
    /// Alpha counts of region `r` below and above `R` (Fact 4 only).
    pub split: Option<SplitCounts>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactReport {
    pub fact: u8,
    pub region: usize,
    pub counts: FactCounts,
    pub predicted_delta: i64,
    pub recomputed_delta: i64,
    pub moves: MoveTrace,
    /// The schematic the moves start from (after any flag normalization).
    #[serde(skip)]
    pub start: CDiskSchematic,
    #[serde(skip)]
    pub result: CDiskSchematic,
}

impl FactReport {
    /// The inequality the Fact derives from thinness: premise region `i`
    /// implies a bound on region `i + 1`. `false` means the schematic
    /// contradicts it.
    pub fn pattern_holds(&self) -> bool {
        let c = &self.counts;
        let (pm, pn, cm, cn) = match self.fact {
            1 => (c.max_beta, c.min_beta, c.max_alpha, c.min_alpha),
            _ => (c.max_alpha, c.min_alpha, c.max_beta, c.min_beta),
        };
        match self.fact {
            4 => !(pm > pn) || cm >= cn,
            _ if pm > pn => cm > cn,
            _ if pm == pn && pm != 0 => cm >= cn,
            _ => true,
        }
    }
}

/// Which Fact governs region `i` and the one below it, if any.
pub fn applicable_fact(s: &CDiskSchematic, levels: &AlternatingLevels, i: usize) -> Option<u8> {
    let n = levels.n();
    if i == 0 || i >= n {
        return None;
    }
    let rc = regions(s, levels);
    let (upper, lower) = (rc[i - 1].side, rc[i].side);
    if s.disk == DiskKind::Cut && i == levels.r {
        let in_region = effective_tau_max(s).is_some_and(|c| levels.region(i).contains(&c));
        return Some(if in_region { 4 } else { 3 });
    }
    match (upper, lower) {
        (Side::Beta, Side::Alpha) => Some(1),
        (Side::Alpha, Side::Beta) => Some(2),
        _ => None,
    }
}

fn effective_tau_max(s: &CDiskSchematic) -> Option<usize> {
    first_tau_alpha_max(s).map(|(_, e)| e)
}

fn side_counts(s: &CDiskSchematic, range: RangeInclusive<usize>) -> (usize, usize) {
    let mut max = 0;
    let mut min = 0;
    for c in range {
        match s.critical(c).and_then(|e| e.extremum()) {
            Some(Extremum::Max) => max += 1,
            Some(Extremum::Min) => min += 1,
            None => {}
        }
    }
    (max, min)
}

/// Builds the width-changing move behind Fact `fact` at region `i` and
/// checks its closed-form delta against a recomputation.
pub fn fact_delta(s: &CDiskSchematic, fact: u8, i: usize) -> Result<FactReport, CDiskError> {
    let levels = alternating_levels(s)?;
    let found = applicable_fact(s, &levels, i);
    if found != Some(fact) {
        let why = match (fact, found) {
            (2, Some(3 | 4)) => "fact 2 needs i != r".to_string(),
            (3 | 4, _) if s.disk == DiskKind::Compress => "needs a cut-disk".to_string(),
            (3 | 4, _) if levels.r == 0 => "needs r != 0".to_string(),
            (3 | 4, _) if i != levels.r => format!("needs i == r (r = {})", levels.r),
            (3, Some(4)) => "first tau maximum lies in region r".to_string(),
            (4, Some(3)) => "first tau maximum does not lie in region r".to_string(),
            (_, Some(f)) => format!("region {i} is governed by fact {f}"),
            (_, None) => format!("no fact applies at region {i} (n = {})", levels.n()),
        };
        return Err(CDiskError::NotApplicable(why));
    }

    let upper = levels.region(i);
    let lower = levels.region(i + 1);
    let (mu, nu) = side_counts(s, upper.clone());
    let (ml, nl) = side_counts(s, lower.clone());
    let counts = |max_alpha, min_alpha, max_beta, min_beta, split| FactCounts {
        max_alpha,
        min_alpha,
        max_beta,
        min_beta,
        split,
    };

    let (counts, predicted, start, result, moves) = match fact {
        1 | 2 => {
            // Push the upper region down past the lower one.
            let c = if fact == 1 { counts(ml, nl, mu, nu, None) } else { counts(mu, nu, ml, nl, None) };
            let predicted = 4 * (nu as i64 * ml as i64 - mu as i64 * nl as i64);
            let dest = event_index(s, *lower.start());
            let (out, trace) = relocate(s, block_span(s, &upper), dest);
            (c, predicted, s.clone(), out, trace)
        }
        3 => {
            let c = counts(mu, nu, ml, nl, None);
            let predicted = 4 * (ml as i64 * nu as i64 - nl as i64 * mu as i64);
            let dest = event_index(s, upper.end() + 1);
            let (out, trace) = relocate(s, block_span(s, &lower), dest);
            (c, predicted, s.clone(), out, trace)
        }
        _ => {
            let t = normalize_first_tau_max(s)?;
            let tau_max = effective_tau_max(&t).expect("fact 4 has a tau maximum");
            let r_at = r_gap(&t).expect("tau maximum").min(*upper.end());
            let (max_below, min_below) = side_counts(&t, *upper.start()..=r_at);
            let (max_above, min_above) = side_counts(&t, r_at + 1..=*upper.end());
            let split = SplitCounts { max_below, min_below, max_above, min_above };
            let c = counts(mu, nu, ml, nl, Some(split));
            let predicted = 4
                * (ml as i64 * nu as i64 + min_above as i64 - nl as i64 * (mu as i64 - 1));
            let (mid, mut trace) = relocate(&t, block_span(&t, &lower), event_index(&t, tau_max));
            // The block now sits directly below the tau maximum; carry both up.
            let block_len = lower.clone().count();
            let tau_pos = event_index(&mid, tau_max);
            let dest = event_index(&mid, upper.end() + 1);
            let (out, tail) = relocate(&mid, tau_pos - block_len..tau_pos + 1, dest);
            trace.extend(tail);
            (c, predicted, t, out, trace)
        }
    };

    let recomputed = signed_width(&result) - signed_width(&start);
    Ok(FactReport {
        fact,
        region: i,
        counts,
        predicted_delta: predicted,
        recomputed_delta: recomputed,
        moves,
        start,
        result,
    })
}

/// All Facts that apply to a normalized schematic, one per region `1..n`.
pub fn fact_reports(s: &CDiskSchematic) -> Result<Vec<FactReport>, CDiskError> {
    let levels = alternating_levels(s)?;
    (1..levels.n())
        .filter_map(|i| applicable_fact(s, &levels, i).map(|f| fact_delta(s, f, i)))
        .collect()
}
