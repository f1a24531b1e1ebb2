use std::fmt::Write as _;

use crate::cdisk::{running_counts, validate_schematic, CDiskSchematic, DiskKind, SchematicEvent, Side, SideCounts};
use crate::morse::Extremum;

use super::error::{ParseError, SourceSpan};
use super::lexer::{keyed_integer, lines, no_more, Line};

fn side(span: SourceSpan, text: &str) -> Result<Side, ParseError> {
    match text {
        "alpha" => Ok(Side::Alpha),
        "beta" => Ok(Side::Beta),
        other => Err(ParseError::expecting(span, format!("unknown side `{other}`"), &["alpha", "beta"])),
    }
}

fn counts_line(line: &Line<'_>, keyword: &str) -> Result<SideCounts, ParseError> {
    let head = line.tokens[0];
    if head.text != keyword {
        return Err(ParseError::expecting(head.span(), format!("unexpected `{}`", head.text), &[keyword]));
    }
    let a = line.tokens.get(1).ok_or_else(|| ParseError::expecting(head.after(), "missing alpha count", &["alpha="]))?;
    let alpha = keyed_integer(a, "alpha")?;
    let b = line.tokens.get(2).ok_or_else(|| ParseError::expecting(a.after(), "missing beta count", &["beta="]))?;
    let beta = keyed_integer(b, "beta")?;
    no_more(line, 3)?;
    Ok(SideCounts::new(alpha, beta))
}

fn event(line: &Line<'_>) -> Result<SchematicEvent, ParseError> {
    let kw = line.tokens[0];
    let extremum = match kw.text {
        "transfer" => {
            no_more(line, 1)?;
            return Ok(SchematicEvent::Transfer);
        }
        "min" => Extremum::Min,
        "max" => Extremum::Max,
        other => {
            return Err(ParseError::expecting(
                kw.span(),
                format!("unknown event `{other}`"),
                &["min", "max", "transfer"],
            ))
        }
    };
    let s = line.tokens.get(1).ok_or_else(|| ParseError::expecting(kw.after(), "missing side", &["alpha", "beta"]))?;
    let side = side(s.span(), s.text)?;
    let on_tau = match line.tokens.get(2) {
        None => false,
        Some(t) if t.text == "tau" => true,
        Some(t) => {
            return Err(ParseError::expecting(t.span(), format!("unexpected `{}`", t.text), &["tau", "end of line"]))
        }
    };
    no_more(line, if on_tau { 3 } else { 2 })?;
    Ok(SchematicEvent::Critical { extremum, side, on_tau })
}

/// Parses the `.cdisk` format and validates the schematic.
pub fn parse_schematic(text: &str) -> Result<CDiskSchematic, ParseError> {
    let ls = lines(text);
    let mut it = ls.iter();
    let missing = |what: &str, expected: &[&str]| {
        let line = ls.last().map_or(1, |l| l.number + 1);
        ParseError::expecting(SourceSpan::new(line, 1, 1), format!("missing {what}"), expected)
    };

    let head = it.next().ok_or_else(|| missing("header", &["cdisk"]))?;
    let h = head.tokens[0];
    if h.text != "cdisk" {
        return Err(ParseError::expecting(h.span(), format!("unknown header `{}`", h.text), &["cdisk"]));
    }
    let kind_tok = head.tokens.get(1).ok_or_else(|| ParseError::expecting(h.after(), "missing disk kind", &["compress", "cut"]))?;
    let disk = match kind_tok.text {
        "compress" => DiskKind::Compress,
        "cut" => DiskKind::Cut,
        other => {
            return Err(ParseError::expecting(kind_tok.span(), format!("unknown disk kind `{other}`"), &["compress", "cut"]))
        }
    };
    no_more(head, 2)?;

    let base = counts_line(it.next().ok_or_else(|| missing("base line", &["base"]))?, "base")?;

    let mut next = it.next().ok_or_else(|| missing("inside line", &["inside=", "top"]))?;
    let mut top = None;
    if next.tokens[0].text == "top" {
        top = Some(counts_line(next, "top")?);
        next = it.next().ok_or_else(|| missing("inside line", &["inside="]))?;
    }
    let inside_tok = next.tokens[0];
    let inside = match inside_tok.text.strip_prefix("inside=") {
        Some(v) => side(inside_tok.value_span("inside="), v)?,
        None => {
            return Err(ParseError::expecting(
                inside_tok.span(),
                format!("unexpected `{}`", inside_tok.text),
                &["inside="],
            ))
        }
    };
    no_more(next, 1)?;

    let event_lines: Vec<&Line<'_>> = it.collect();
    let events = event_lines.iter().map(|l| event(l)).collect::<Result<Vec<_>, _>>()?;
    let mut s = CDiskSchematic { disk, base, top: SideCounts::default(), inside, events };
    // Without a `top` line the schematic ends wherever its events leave it.
    s.top = top.unwrap_or_else(|| final_counts(&s));
    let report = validate_schematic(&s);
    if let Some(v) = report.violations.first() {
        let span = match v.event {
            Some(k) => event_lines[k - 1].span(),
            None => head.span(),
        };
        return Err(ParseError::new(span, v.kind.to_string()));
    }
    Ok(s)
}

fn final_counts(s: &CDiskSchematic) -> SideCounts {
    let &(a, b) = running_counts(s).last().expect("nonempty");
    // A side that ends negative is reported against its event by validation.
    SideCounts::new(a.max(0) as usize, b.max(0) as usize)
}

pub fn serialize_schematic(s: &CDiskSchematic) -> String {
    let kind = match s.disk {
        DiskKind::Compress => "compress",
        DiskKind::Cut => "cut",
    };
    let mut out = format!("cdisk {kind}\nbase alpha={} beta={}\n", s.base.alpha, s.base.beta);
    if s.top != SideCounts::default() {
        writeln!(out, "top alpha={} beta={}", s.top.alpha, s.top.beta).expect("string write");
    }
    writeln!(out, "inside={}", s.inside).expect("string write");
    for e in &s.events {
        match e {
            SchematicEvent::Transfer => out.push_str("transfer\n"),
            SchematicEvent::Critical { extremum, side, on_tau } => {
                let kw = if *extremum == Extremum::Min { "min" } else { "max" };
                let tau = if *on_tau { " tau" } else { "" };
                writeln!(out, "{kw} {side}{tau}").expect("string write");
            }
        }
    }
    out
}
