//! Text formats for words and schematics, and the JSON report layout.
//!
//! Both formats are line oriented: one item per line, `#` starts a comment,
//! LF or CRLF line endings. The serializers emit a canonical LF form that
//! parses back to the same value.

mod error;
mod lexer;
mod report;
mod schematic;
mod word;

pub use error::{ParseError, SourceSpan};
pub use report::{to_value, validate_report_json, Report};
pub use schematic::{parse_schematic, serialize_schematic};
pub use word::{parse_word, serialize_word};
