use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::event::{Event, EventKind};

/// A link or tangle in Morse position, read bottom to top.
///
/// Event `k` (1-based) sits at height `k`; `bottom` and `top` are the strand
/// counts at the boundary spheres. A word with `bottom == top == 0` is a link.
/// Values of this type are always valid: construct them with [`MorseWord::new`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MorseWord {
    events: Vec<Event>,
    bottom: usize,
    top: usize,
}

/// Why a word failed validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationKind {
    CapUnderflow { strands: usize },
    CrossUnderflow { strands: usize },
    PositionOutOfRange { position: usize, max: usize },
    TopMismatch { declared: usize, actual: usize },
    /// Warning only: an interior level meets no strand.
    SplitLevel,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::CapUnderflow { strands } => {
                write!(f, "cap needs ≥2 strands (level has {strands})")
            }
            ViolationKind::CrossUnderflow { strands } => {
                write!(f, "crossing needs ≥2 strands (level has {strands})")
            }
            ViolationKind::PositionOutOfRange { position, max } => {
                write!(f, "position {position} out of range (max {max})")
            }
            ViolationKind::TopMismatch { declared, actual } => {
                write!(f, "declared top={declared} but word ends with {actual} strands")
            }
            ViolationKind::SplitLevel => write!(f, "interior level meets no strand (split link)"),
        }
    }
}

/// A violation, tagged with the 1-based index of the offending event
/// (`None` for boundary problems).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub event: Option<usize>,
    #[serde(flatten)]
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.event {
            Some(k) => write!(f, "event {k}: {}", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("invalid Morse word: {}", .0.violations.first().map(ToString::to_string).unwrap_or_default())]
pub struct InvalidWord(pub ValidationReport);

/// Checks the strand-count and position rules for a raw event list.
pub fn validate(events: &[Event], bottom: usize, top: usize) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut n = bottom;
    for (i, e) in events.iter().enumerate() {
        let index = Some(i + 1);
        let mut fail = |kind| report.violations.push(Violation { event: index, kind });
        match e.kind {
            EventKind::Cup => {
                if e.position > n {
                    fail(ViolationKind::PositionOutOfRange { position: e.position, max: n });
                }
                n += 2;
            }
            EventKind::Cap | EventKind::Cross(_) => {
                if n < 2 {
                    fail(if e.kind == EventKind::Cap {
                        ViolationKind::CapUnderflow { strands: n }
                    } else {
                        ViolationKind::CrossUnderflow { strands: n }
                    });
                } else if e.position > n - 2 {
                    fail(ViolationKind::PositionOutOfRange { position: e.position, max: n - 2 });
                }
                if e.kind == EventKind::Cap {
                    n = n.saturating_sub(2);
                }
            }
        }
        if n == 0 && i + 1 < events.len() {
            report.warnings.push(Violation { event: index, kind: ViolationKind::SplitLevel });
        }
    }
    if n != top {
        report.violations.push(Violation {
            event: None,
            kind: ViolationKind::TopMismatch { declared: top, actual: n },
        });
    }
    report
}

impl MorseWord {
    pub fn new(events: Vec<Event>, bottom: usize, top: usize) -> Result<Self, InvalidWord> {
        let report = validate(&events, bottom, top);
        if report.ok() {
            Ok(MorseWord { events, bottom, top })
        } else {
            Err(InvalidWord(report))
        }
    }

    /// A closed link: both boundaries empty.
    pub fn link(events: Vec<Event>) -> Result<Self, InvalidWord> {
        Self::new(events, 0, 0)
    }

    /// Builds a word the caller has already proven valid.
    pub(crate) fn from_valid(events: Vec<Event>, bottom: usize, top: usize) -> Self {
        debug_assert!(validate(&events, bottom, top).ok());
        MorseWord { events, bottom, top }
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// 1-based event access, matching the height numbering.
    pub fn event(&self, k: usize) -> Option<&Event> {
        k.checked_sub(1).and_then(|i| self.events.get(i))
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_link(&self) -> bool {
        self.bottom == 0 && self.top == 0
    }

    /// Warnings (split levels) recorded against an otherwise valid word.
    pub fn warnings(&self) -> Vec<Violation> {
        validate(&self.events, self.bottom, self.top).warnings
    }

    pub fn into_events(self) -> Vec<Event> {
        self.events
    }
}

/// Running strand counts `n_0 … n_last`, one per level between events.
pub fn strand_profile(word: &MorseWord) -> Vec<usize> {
    let mut out = Vec::with_capacity(word.len() + 1);
    let mut n = word.bottom();
    out.push(n);
    for e in word.events() {
        n = n + e.outputs() - e.inputs();
        out.push(n);
    }
    out
}
