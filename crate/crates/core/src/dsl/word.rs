use std::fmt::Write as _;

use crate::morse::{validate, Event, MorseWord, Sign};

use super::error::{ParseError, SourceSpan};
use super::lexer::{integer, keyed_integer, lines, no_more, Line};

const EVENT_KEYWORDS: &[&str] = &["cup", "cap", "x+", "x-"];

fn header(line: &Line<'_>) -> Result<(usize, usize), ParseError> {
    let head = line.tokens[0];
    match head.text {
        "link" => {
            no_more(line, 1)?;
            Ok((0, 0))
        }
        "tangle" => {
            let bottom = line
                .tokens
                .get(1)
                .ok_or_else(|| ParseError::expecting(head.after(), "missing bottom count", &["bottom="]))?;
            let bottom = keyed_integer(bottom, "bottom")?;
            let top = line
                .tokens
                .get(2)
                .ok_or_else(|| ParseError::expecting(line.tokens[1].after(), "missing top count", &["top="]))?;
            let top = keyed_integer(top, "top")?;
            no_more(line, 3)?;
            Ok((bottom, top))
        }
        other if EVENT_KEYWORDS.contains(&other) => {
            Err(ParseError::expecting(head.span(), "missing header", &["link", "tangle"]))
        }
        other => Err(ParseError::expecting(head.span(), format!("unknown header `{other}`"), &["link", "tangle"])),
    }
}

fn event(line: &Line<'_>) -> Result<Event, ParseError> {
    let kw = line.tokens[0];
    let make: fn(usize) -> Event = match kw.text {
        "cup" => Event::cup,
        "cap" => Event::cap,
        "x+" => |p| Event::cross(p, Sign::Pos),
        "x-" => |p| Event::cross(p, Sign::Neg),
        other => {
            return Err(ParseError::expecting(kw.span(), format!("unknown event `{other}`"), EVENT_KEYWORDS));
        }
    };
    let pos = line
        .tokens
        .get(1)
        .ok_or_else(|| ParseError::expecting(kw.after(), "missing position", &["integer"]))?;
    let p = integer(pos, pos.span(), pos.text)?;
    no_more(line, 2)?;
    Ok(make(p))
}

/// Parses the line-oriented `.morse` format and validates the result.
///
/// ```
/// let w = widthlab::dsl::parse_word("link\ncup 0\ncap 0\n").unwrap();
/// assert_eq!(widthlab::morse::width(&w), 2);
/// ```
pub fn parse_word(text: &str) -> Result<MorseWord, ParseError> {
    let ls = lines(text);
    let Some(first) = ls.first() else {
        return Err(ParseError::expecting(SourceSpan::new(1, 1, 1), "missing header", &["link", "tangle"]));
    };
    let (bottom, top) = header(first)?;
    let mut events = Vec::with_capacity(ls.len() - 1);
    for line in &ls[1..] {
        events.push(event(line)?);
    }
    let report = validate(&events, bottom, top);
    if let Some(v) = report.violations.first() {
        let span = match v.event {
            Some(k) => ls[k].span(),
            None => first.span(),
        };
        return Err(ParseError::new(span, v.kind.to_string()));
    }
    Ok(MorseWord::from_valid(events, bottom, top))
}

/// Canonical text: header, then one event per line, LF endings.
pub fn serialize_word(word: &MorseWord) -> String {
    let mut out = if word.is_link() {
        String::from("link\n")
    } else {
        format!("tangle bottom={} top={}\n", word.bottom(), word.top())
    };
    for e in word.events() {
        writeln!(out, "{e}").expect("string write");
    }
    out
}
