use std::fmt;

use serde::Serialize;

/// Crossing sign. Carried for fidelity of presets; never read by the width calculus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Pos,
    Neg,
}

/// Which kind of elementary piece sits at one height.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EventKind {
    /// A local minimum: two new strands are born at `{p, p+1}`.
    Cup,
    /// A local maximum: strands `{p, p+1}` die.
    Cap,
    /// Strands `{p, p+1}` cross. Regular for the height function.
    Cross(Sign),
}

/// Minimum or maximum of the height function restricted to the link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremum {
    Min,
    Max,
}

/// One event of a Morse word: a birth, a death or a crossing at a planar
/// strand position (0-based, counted left to right at the level below).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Event {
    pub kind: EventKind,
    pub position: usize,
}

impl Event {
    pub const fn cup(position: usize) -> Self {
        Event { kind: EventKind::Cup, position }
    }

    pub const fn cap(position: usize) -> Self {
        Event { kind: EventKind::Cap, position }
    }

    pub const fn cross(position: usize, sign: Sign) -> Self {
        Event { kind: EventKind::Cross(sign), position }
    }

    pub fn is_critical(&self) -> bool {
        self.extremum().is_some()
    }

    pub fn extremum(&self) -> Option<Extremum> {
        match self.kind {
            EventKind::Cup => Some(Extremum::Min),
            EventKind::Cap => Some(Extremum::Max),
            EventKind::Cross(_) => None,
        }
    }

    /// Number of strands the event consumes from the level below.
    pub fn inputs(&self) -> usize {
        match self.kind {
            EventKind::Cup => 0,
            EventKind::Cap | EventKind::Cross(_) => 2,
        }
    }

    /// Number of strands the event hands to the level above.
    pub fn outputs(&self) -> usize {
        match self.kind {
            EventKind::Cap => 0,
            EventKind::Cup | EventKind::Cross(_) => 2,
        }
    }

    /// Same kind, different position.
    pub fn at(self, position: usize) -> Self {
        Event { position, ..self }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            EventKind::Cup => write!(f, "cup {}", self.position),
            EventKind::Cap => write!(f, "cap {}", self.position),
            EventKind::Cross(Sign::Pos) => write!(f, "x+ {}", self.position),
            EventKind::Cross(Sign::Neg) => write!(f, "x- {}", self.position),
        }
    }
}
