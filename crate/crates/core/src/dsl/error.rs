use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// A 1-based region of the source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl SourceSpan {
    pub fn new(line: usize, column: usize, length: usize) -> Self {
        SourceSpan { line, column, length: length.max(1) }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq, Serialize)]
#[error("{span}: {message}{}", fmt_expected(.expected))]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
    pub expected: Option<Vec<String>>,
}

fn fmt_expected(expected: &Option<Vec<String>>) -> String {
    match expected {
        Some(set) if !set.is_empty() => format!(" (expected {})", set.join(" | ")),
        _ => String::new(),
    }
}

impl ParseError {
    pub(crate) fn new(span: SourceSpan, message: impl Into<String>) -> Self {
        ParseError { span, message: message.into(), expected: None }
    }

    pub(crate) fn expecting(span: SourceSpan, message: impl Into<String>, expected: &[&str]) -> Self {
        ParseError {
            span,
            message: message.into(),
            expected: Some(expected.iter().map(|s| s.to_string()).collect()),
        }
    }

    /// Renders the offending line with a caret underline.
    pub fn render(&self, source: &str) -> String {
        let line = source.lines().nth(self.span.line - 1).unwrap_or("").trim_end_matches('\r');
        let pad = " ".repeat(self.span.column - 1);
        let marks = "^".repeat(self.span.length);
        format!("error: {self}\n  | {line}\n  | {pad}{marks}")
    }
}
