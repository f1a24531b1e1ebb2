//! Morse words and their exact width calculus.

mod boxes;
mod components;
mod event;
mod levels;
mod word;

pub use boxes::{braid_boxes, BoxPartition, BraidBox};
pub use components::{components, Components};
pub use event::{Event, EventKind, Extremum, Sign};
pub use levels::{classify_levels, critical_indices, thin_levels, width, Level, LevelClass, LevelKind};
pub use word::{strand_profile, validate, InvalidWord, MorseWord, ValidationReport, Violation, ViolationKind};
