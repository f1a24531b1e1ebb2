use serde::Serialize;

use crate::morse::Extremum;

use super::facts::applicable_fact;
use super::levels::{alternating_levels, regions, AlternatingLevels, RegionCounts};
use super::schematic::{CDiskError, CDiskSchematic, DiskKind, SchematicEvent};

/// Alternating levels (by index `i`) that are not thin: each must have a
/// maximum directly below and a minimum directly above, where those exist.
pub fn non_thin_levels(s: &CDiskSchematic, levels: &AlternatingLevels) -> Vec<usize> {
    let crit: Vec<SchematicEvent> = s.events.iter().copied().filter(SchematicEvent::is_critical).collect();
    levels
        .gaps
        .iter()
        .enumerate()
        .filter(|&(_, &g)| {
            let below_ok = g == 0 || crit[g - 1].extremum() == Some(Extremum::Max);
            let above_ok = g == crit.len() || crit[g].extremum() == Some(Extremum::Min);
            !(below_ok && above_ok)
        })
        .map(|(i, _)| i)
        .collect()
}

fn thin_levels_or_err(s: &CDiskSchematic) -> Result<AlternatingLevels, CDiskError> {
    let levels = alternating_levels(s)?;
    if let Some(&i) = non_thin_levels(s, &levels).first() {
        return Err(CDiskError::NotApplicable(format!(
            "alternating level S_{i} (gap {}) is not thin",
            levels.gap(i)
        )));
    }
    Ok(levels)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremCase {
    #[serde(rename = "3a")]
    A3,
    #[serde(rename = "3b")]
    B3,
    #[serde(rename = "4a")]
    A4,
    #[serde(rename = "4b")]
    B4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConclusionCheck {
    pub holds: bool,
    /// Region indices where the inequality fails.
    pub failing: Vec<usize>,
}

impl ConclusionCheck {
    fn from_failing(failing: Vec<usize>) -> Self {
        ConclusionCheck { holds: failing.is_empty(), failing }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityCheck {
    pub holds: bool,
    pub equality: bool,
    /// One inside strand at `S_1`: the count shadow of a decomposing sphere.
    pub decomposing_proxy: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub r: usize,
    pub case: Option<TheoremCase>,
    pub regions: Vec<RegionCounts>,
    pub conclusion1: ConclusionCheck,
    pub conclusion2: Option<EqualityCheck>,
    pub conclusion3: Option<ConclusionCheck>,
    pub conclusion4: Option<ConclusionCheck>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.conclusion1.holds
            && self.conclusion2.as_ref().is_none_or(|c| c.holds)
            && self.conclusion3.as_ref().is_none_or(|c| c.holds)
            && self.conclusion4.as_ref().is_none_or(|c| c.holds)
    }
}

/// Evaluates the inequality patterns on the region counts of a normalized
/// schematic whose alternating levels are all thin.
pub fn check_theorem(s: &CDiskSchematic) -> Result<TheoremReport, CDiskError> {
    let levels = thin_levels_or_err(s)?;
    let (n, r) = (levels.n(), levels.r);
    let rc = regions(s, &levels);
    let strict = |i: usize| rc[i - 1].maxima > rc[i - 1].minima;
    let weak = |i: usize| rc[i - 1].maxima >= rc[i - 1].minima;

    let conclusion1 = ConclusionCheck::from_failing((1..=r.min(n)).filter(|&i| !strict(i)).collect());

    let conclusion2 = (r == 0 && n >= 1).then(|| {
        let inside_at_s1 = s.gap_counts()[levels.gap(1)].get(s.inside);
        EqualityCheck {
            holds: weak(1),
            equality: rc[0].maxima == rc[0].minima,
            decomposing_proxy: inside_at_s1 == 1,
        }
    });

    let case = match (s.disk, r) {
        (DiskKind::Compress, _) => Some(TheoremCase::A3),
        (DiskKind::Cut, 0) if n == 0 => None,
        (DiskKind::Cut, 0) if strict(1) => Some(TheoremCase::B3),
        (DiskKind::Cut, 0) if weak(1) => Some(TheoremCase::B4),
        (DiskKind::Cut, 0) => None,
        (DiskKind::Cut, _) if r >= n => Some(TheoremCase::A3),
        (DiskKind::Cut, _) => match applicable_fact(s, &levels, r) {
            Some(4) => Some(TheoremCase::A4),
            _ => Some(TheoremCase::A3),
        },
    };

    let (conclusion3, conclusion4) = match case {
        Some(TheoremCase::A3 | TheoremCase::B3) => {
            (Some(ConclusionCheck::from_failing((1..=n).filter(|&i| !strict(i)).collect())), None)
        }
        Some(TheoremCase::A4 | TheoremCase::B4) => {
            let mut failing: Vec<usize> = (r + 1..=n).filter(|&i| !weak(i)).collect();
            if let Some(j) = (r + 1..=n).find(|&j| strict(j)) {
                failing.extend((j..=n).filter(|&i| !strict(i) && weak(i)));
            }
            failing.sort_unstable();
            (None, Some(ConclusionCheck::from_failing(failing)))
        }
        None => (None, None),
    };

    Ok(TheoremReport { n, r, case, regions: rc, conclusion1, conclusion2, conclusion3, conclusion4 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WidthChainReport {
    /// `w(S_i)` for `i = 0..=n`; the last entry is `w(P)`.
    pub widths: Vec<usize>,
    pub r: usize,
    /// Steps `i` (comparing `S_{i-1}` with `S_i`) that break the chain.
    pub violations: Vec<usize>,
    pub holds: bool,
    /// `w(S_{i-1}) - w(S_i) = 2(m_i - M_i)` for every `i`.
    pub identity_holds: bool,
}

/// Checks `w(S_0) < .. < w(S_r) <= .. <= w(P)`, with strictness
/// propagating past the first strict step beyond `r`.
pub fn check_width_chain(s: &CDiskSchematic) -> Result<WidthChainReport, CDiskError> {
    let levels = thin_levels_or_err(s)?;
    let (n, r) = (levels.n(), levels.r);
    let all = s.level_widths();
    let widths: Vec<usize> = levels.gaps.iter().map(|&g| all[g]).collect();
    let rc = regions(s, &levels);

    let lt = |i: usize| widths[i - 1] < widths[i];
    let le = |i: usize| widths[i - 1] <= widths[i];
    let first_strict_after_r = (r + 1..=n).find(|&i| lt(i));
    let violations: Vec<usize> = (1..=n)
        .filter(|&i| {
            let strict = i <= r || first_strict_after_r.is_some_and(|j| i > j);
            if strict {
                !lt(i)
            } else {
                !le(i)
            }
        })
        .collect();
    let identity_holds = (1..=n).all(|i| {
        let diff = widths[i - 1] as i64 - widths[i] as i64;
        diff == 2 * (rc[i - 1].minima as i64 - rc[i - 1].maxima as i64)
    });
    Ok(WidthChainReport { widths, r, holds: violations.is_empty(), violations, identity_holds })
}
