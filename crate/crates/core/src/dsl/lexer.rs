use super::error::{ParseError, SourceSpan};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    /// 1-based character column.
    pub column: usize,
}

impl<'a> Token<'a> {
    pub fn span(&self) -> SourceSpan {
        SourceSpan::new(self.line, self.column, self.text.chars().count())
    }

    /// Span of the part after `prefix` (for `key=value` tokens).
    pub fn value_span(&self, prefix: &str) -> SourceSpan {
        let skip = prefix.chars().count();
        SourceSpan::new(self.line, self.column + skip, self.text.chars().count() - skip)
    }

    /// Span just past the end of the token.
    pub fn after(&self) -> SourceSpan {
        SourceSpan::new(self.line, self.column + self.text.chars().count(), 1)
    }
}

/// A line with at least one token after comments are removed.
pub(crate) struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    /// Span covering every token on the line.
    pub fn span(&self) -> SourceSpan {
        let first = self.tokens[0];
        let last = self.tokens[self.tokens.len() - 1];
        let end = last.column + last.text.chars().count();
        SourceSpan::new(self.number, first.column, end - first.column)
    }
}

pub(crate) fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.split('\n').enumerate() {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start: Option<(usize, usize)> = None;
        for (col, (byte, ch)) in content.char_indices().enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some((byte, col)),
                (true, Some((b, c))) => {
                    tokens.push(Token { text: &content[b..byte], line: i + 1, column: c + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some((b, c)) = start {
            tokens.push(Token { text: &content[b..], line: i + 1, column: c + 1 });
        }
        if !tokens.is_empty() {
            out.push(Line { number: i + 1, tokens });
        }
    }
    out
}

pub(crate) fn integer(tok: &Token<'_>, span: SourceSpan, text: &str) -> Result<usize, ParseError> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::expecting(span, format!("`{}` is not an integer", tok.text), &["integer"]));
    }
    text.parse().map_err(|_| ParseError::new(span, "integer too large"))
}

/// Parses a `key=INT` token.
pub(crate) fn keyed_integer(tok: &Token<'_>, key: &str) -> Result<usize, ParseError> {
    let prefix = format!("{key}=");
    match tok.text.strip_prefix(&prefix) {
        Some(value) if !value.is_empty() => integer(tok, tok.value_span(&prefix), value),
        Some(_) => Err(ParseError::expecting(tok.after(), format!("missing value for `{key}`"), &["integer"])),
        None => Err(ParseError::expecting(tok.span(), format!("unexpected `{}`", tok.text), &[&prefix])),
    }
}

pub(crate) fn no_more(line: &Line<'_>, used: usize) -> Result<(), ParseError> {
    match line.tokens.get(used) {
        Some(extra) => Err(ParseError::expecting(extra.span(), format!("unexpected `{}`", extra.text), &["end of line"])),
        None => Ok(()),
    }
}
