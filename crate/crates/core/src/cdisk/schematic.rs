use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::morse::Extremum;

/// The two sides of the vertical disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Alpha,
    Beta,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Alpha => Side::Beta,
            Side::Beta => Side::Alpha,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Alpha => "alpha",
            Side::Beta => "beta",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiskKind {
    Compress,
    Cut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SchematicEvent {
    Critical { extremum: Extremum, side: Side, on_tau: bool },
    /// The connecting strand crosses the disk, leaving beta for alpha going up.
    Transfer,
}

impl SchematicEvent {
    pub const fn min(side: Side) -> Self {
        SchematicEvent::Critical { extremum: Extremum::Min, side, on_tau: false }
    }

    pub const fn max(side: Side) -> Self {
        SchematicEvent::Critical { extremum: Extremum::Max, side, on_tau: false }
    }

    pub const fn tau(self) -> Self {
        match self {
            SchematicEvent::Critical { extremum, side, .. } => {
                SchematicEvent::Critical { extremum, side, on_tau: true }
            }
            SchematicEvent::Transfer => SchematicEvent::Transfer,
        }
    }

    pub fn extremum(&self) -> Option<Extremum> {
        match self {
            SchematicEvent::Critical { extremum, .. } => Some(*extremum),
            SchematicEvent::Transfer => None,
        }
    }

    pub fn side(&self) -> Option<Side> {
        match self {
            SchematicEvent::Critical { side, .. } => Some(*side),
            SchematicEvent::Transfer => None,
        }
    }

    pub fn on_tau(&self) -> bool {
        matches!(self, SchematicEvent::Critical { on_tau: true, .. })
    }

    pub fn is_critical(&self) -> bool {
        !matches!(self, SchematicEvent::Transfer)
    }
}

/// Strand counts on each side of the disk at one level.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SideCounts {
    pub alpha: usize,
    pub beta: usize,
}

impl SideCounts {
    pub const fn new(alpha: usize, beta: usize) -> Self {
        SideCounts { alpha, beta }
    }

    pub fn total(&self) -> usize {
        self.alpha + self.beta
    }

    pub fn get(&self, side: Side) -> usize {
        match side {
            Side::Alpha => self.alpha,
            Side::Beta => self.beta,
        }
    }
}

/// The part of a link above a thin sphere `P`, seen through a vertical disk:
/// which side each critical point lies on, bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CDiskSchematic {
    pub disk: DiskKind,
    /// Counts at `P`.
    pub base: SideCounts,
    /// Counts at the top boundary; zero for a link.
    pub top: SideCounts,
    pub inside: Side,
    pub events: Vec<SchematicEvent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SchematicViolationKind {
    NegativeCount { side: Side },
    TopMismatch { side: Side, declared: usize, actual: i64 },
    TransferCount { found: usize },
    TransferInCompress,
    TauInCompress,
}

impl fmt::Display for SchematicViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NegativeCount { side } => write!(f, "{side} count goes negative"),
            Self::TopMismatch { side, declared, actual } => {
                write!(f, "declared top {side}={declared} but schematic ends with {actual}")
            }
            Self::TransferCount { found } => {
                write!(f, "cut-disk needs exactly one transfer (found {found})")
            }
            Self::TransferInCompress => write!(f, "compressing disk has no transfer"),
            Self::TauInCompress => write!(f, "compressing disk has no tau strand"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchematicViolation {
    /// 1-based event index, if one event is to blame.
    pub event: Option<usize>,
    #[serde(flatten)]
    pub kind: SchematicViolationKind,
}

impl fmt::Display for SchematicViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.event {
            Some(k) => write!(f, "event {k}: {}", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SchematicReport {
    pub violations: Vec<SchematicViolation>,
}

impl SchematicReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CDiskError {
    #[error("invalid schematic: {}", .0.violations.first().map(ToString::to_string).unwrap_or_default())]
    Invalid(SchematicReport),
    #[error("transfer is not in a qualifying alternating gap; normalize it first")]
    NotNormalized,
    #[error("no tau to normalize")]
    NoTau,
    #[error("no alternating gap can hold the transfer")]
    NoQualifyingGap,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("illegal pipe: {0}")]
    IllegalPipe(String),
    #[error("inconsistent labeling at event {event}: {reason}")]
    Labeling { event: usize, reason: String },
}

/// Signed per-side running counts after each event, starting at `base`.
pub(crate) fn running_counts(s: &CDiskSchematic) -> Vec<(i64, i64)> {
    let mut cur = (s.base.alpha as i64, s.base.beta as i64);
    let mut out = Vec::with_capacity(s.events.len() + 1);
    out.push(cur);
    for e in &s.events {
        match *e {
            SchematicEvent::Critical { extremum, side, .. } => {
                let d = if extremum == Extremum::Min { 2 } else { -2 };
                match side {
                    Side::Alpha => cur.0 += d,
                    Side::Beta => cur.1 += d,
                }
            }
            SchematicEvent::Transfer => {
                cur.0 += 1;
                cur.1 -= 1;
            }
        }
        out.push(cur);
    }
    out
}

pub fn validate_schematic(s: &CDiskSchematic) -> SchematicReport {
    let mut violations = Vec::new();
    let counts = running_counts(s);
    for (i, &(a, b)) in counts.iter().enumerate().skip(1) {
        for (v, side) in [(a, Side::Alpha), (b, Side::Beta)] {
            // Only report the event that first drives a side negative.
            let (pa, pb) = counts[i - 1];
            let prev = if side == Side::Alpha { pa } else { pb };
            if v < 0 && prev >= 0 {
                violations.push(SchematicViolation {
                    event: Some(i),
                    kind: SchematicViolationKind::NegativeCount { side },
                });
            }
        }
    }
    let &(a, b) = counts.last().expect("nonempty");
    for (actual, side) in [(a, Side::Alpha), (b, Side::Beta)] {
        let declared = s.top.get(side);
        if actual != declared as i64 {
            violations.push(SchematicViolation {
                event: None,
                kind: SchematicViolationKind::TopMismatch { side, declared, actual },
            });
        }
    }
    let transfers: Vec<usize> = s
        .events
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_critical())
        .map(|(i, _)| i + 1)
        .collect();
    match s.disk {
        DiskKind::Cut if transfers.len() != 1 => violations.push(SchematicViolation {
            event: transfers.get(1).copied(),
            kind: SchematicViolationKind::TransferCount { found: transfers.len() },
        }),
        DiskKind::Compress => {
            for &t in &transfers {
                violations.push(SchematicViolation {
                    event: Some(t),
                    kind: SchematicViolationKind::TransferInCompress,
                });
            }
            for (i, e) in s.events.iter().enumerate() {
                if e.on_tau() {
                    violations.push(SchematicViolation {
                        event: Some(i + 1),
                        kind: SchematicViolationKind::TauInCompress,
                    });
                }
            }
        }
        DiskKind::Cut => {}
    }
    SchematicReport { violations }
}

impl CDiskSchematic {
    pub fn check(&self) -> Result<(), CDiskError> {
        let report = validate_schematic(self);
        if report.ok() {
            Ok(())
        } else {
            Err(CDiskError::Invalid(report))
        }
    }

    /// 0-based indices into `events` of the critical events, bottom to top.
    pub fn critical_positions(&self) -> Vec<usize> {
        (0..self.events.len()).filter(|&i| self.events[i].is_critical()).collect()
    }

    pub fn critical_count(&self) -> usize {
        self.events.iter().filter(|e| e.is_critical()).count()
    }

    /// Critical event `c` (1-based among critical events).
    pub fn critical(&self, c: usize) -> Option<SchematicEvent> {
        self.events.iter().filter(|e| e.is_critical()).nth(c.checked_sub(1)?).copied()
    }

    /// Gap holding the transfer: the number of critical events below it.
    pub fn transfer_gap(&self) -> Option<usize> {
        let t = self.events.iter().position(|e| !e.is_critical())?;
        Some(self.events[..t].iter().filter(|e| e.is_critical()).count())
    }

    /// Per-side counts in every gap `0..=C`, read just above the lower
    /// critical event (before a transfer sharing the gap).
    pub fn gap_counts(&self) -> Vec<SideCounts> {
        let counts = running_counts(self);
        let mut out = vec![self.base];
        for (i, e) in self.events.iter().enumerate() {
            if e.is_critical() {
                let (a, b) = counts[i + 1];
                out.push(SideCounts::new(a.max(0) as usize, b.max(0) as usize));
            }
        }
        out
    }

    /// Strand count in each gap, `P` first.
    pub fn level_widths(&self) -> Vec<usize> {
        self.gap_counts().iter().map(SideCounts::total).collect()
    }

    /// Sum of the strand counts strictly between consecutive critical events.
    /// Everything below `P` is a constant and left out.
    pub fn relative_width(&self) -> usize {
        let w = self.level_widths();
        if w.len() <= 2 {
            return 0;
        }
        w[1..w.len() - 1].iter().sum()
    }

    /// Event counts per side and extremum, for conservation checks.
    pub fn census(&self) -> [usize; 5] {
        let mut c = [0; 5];
        for e in &self.events {
            let slot = match e {
                SchematicEvent::Critical { extremum: Extremum::Min, side: Side::Alpha, .. } => 0,
                SchematicEvent::Critical { extremum: Extremum::Max, side: Side::Alpha, .. } => 1,
                SchematicEvent::Critical { extremum: Extremum::Min, side: Side::Beta, .. } => 2,
                SchematicEvent::Critical { extremum: Extremum::Max, side: Side::Beta, .. } => 3,
                SchematicEvent::Transfer => 4,
            };
            c[slot] += 1;
        }
        c
    }
}
