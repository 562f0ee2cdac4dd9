//! The line-oriented presentation format.
//!
//! ```text
//! # loop example
//! field q
//! vertex 1 2
//! arrow a 1 1
//! arrow b 1 2
//! rel a.a.a
//! rel 2*g1.g2 - 1/3*e1.e2
//! ```

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use trivext_core::{Element, Error, Field, Path, Presentation, Quiver, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnknownName,
    NonComposableTerm,
    MixedEndpoints,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn err(&self, column: usize, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError { line: self.number, column: column + 1, kind, message: message.into() }
    }

    /// Whitespace separated words with their byte offsets.
    fn words(&self) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, c) in self.text.char_indices() {
            match (c.is_whitespace(), start) {
                (true, Some(s)) => {
                    out.push((s, &self.text[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((s, &self.text[s..]));
        }
        out
    }
}

fn strip_comment(s: &str) -> &str {
    s.find('#').map_or(s, |i| &s[..i])
}

fn parse_field(line: &Line, words: &[(usize, &str)]) -> Result<Field, ParseError> {
    match words {
        [_, (_, "q")] => Ok(Field::Rationals),
        [_, (_, "fp"), (c, p)] => {
            let p: u64 = p.parse().map_err(|_| line.err(*c, ParseErrorKind::Syntax, "expected a prime"))?;
            Field::prime(p).map_err(|e| line.err(*c, ParseErrorKind::Invalid, e.to_string()))
        }
        _ => Err(line.err(words[0].0, ParseErrorKind::Syntax, "expected `field q` or `field fp <prime>`")),
    }
}

/// Parses `<int>[/<int>]`.
fn parse_coefficient(field: Field, s: &str) -> Option<Scalar> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || !digits(d) {
        return None;
    }
    let (n, d): (BigInt, BigInt) = (n.parse().ok()?, d.parse().ok()?);
    field.fraction(&n, &d).ok()
}

fn parse_term(line: &Line, quiver: &Quiver, field: Field, at: usize, s: &str) -> Result<(Path, Scalar), ParseError> {
    let (coeff, path, path_at) = match s.split_once('*') {
        Some((c, p)) => {
            let c = parse_coefficient(field, c).ok_or_else(|| {
                line.err(at, ParseErrorKind::Syntax, format!("bad coefficient `{c}` (or zero denominator)"))
            })?;
            (c, p, at + s.len() - p.len())
        }
        None => (field.one(), s, at),
    };
    if path.is_empty() {
        return Err(line.err(path_at, ParseErrorKind::Syntax, "expected a path"));
    }
    let mut arrows = Vec::new();
    let mut offset = path_at;
    for name in path.split('.') {
        if name.is_empty() {
            return Err(line.err(offset, ParseErrorKind::Syntax, "empty arrow name"));
        }
        match quiver.arrow(name) {
            Some(a) => arrows.push(a),
            None => match name.strip_prefix("e_").and_then(|v| quiver.vertex(v)) {
                Some(v) if path == name => return Ok((quiver.stationary(v), coeff)),
                _ => return Err(line.err(offset, ParseErrorKind::UnknownName, format!("unknown arrow `{name}`"))),
            },
        }
        offset += name.len() + 1;
    }
    let p = quiver
        .path_of(&arrows)
        .map_err(|_| line.err(path_at, ParseErrorKind::NonComposableTerm, format!("`{path}` is not composable")))?;
    Ok((p, coeff))
}

/// `rel` body: terms joined by `+` or `-`, with an optional leading `-`.
fn parse_relation(line: &Line, quiver: &Quiver, field: Field, words: &[(usize, &str)]) -> Result<Element, ParseError> {
    let mut u = Element::zero();
    let mut sign: Option<bool> = None;
    let mut expect_term = true;
    let mut endpoints = None;
    for (i, &(at, w)) in words.iter().enumerate().skip(1) {
        if expect_term {
            let (neg, body, body_at) = match w.strip_prefix('-') {
                Some(rest) if i == 1 && !rest.is_empty() => (true, rest, at + 1),
                _ if w == "-" && i == 1 => {
                    sign = Some(true);
                    continue;
                }
                _ => (sign.unwrap_or(false), w, at),
            };
            if body == "+" || body == "-" {
                return Err(line.err(at, ParseErrorKind::Syntax, "expected a term"));
            }
            let (p, mut c) = parse_term(line, quiver, field, body_at, body)?;
            if neg {
                c = -&c;
            }
            let ends = (p.source(), p.target());
            if *endpoints.get_or_insert(ends) != ends {
                return Err(line.err(at, ParseErrorKind::MixedEndpoints, "terms have different endpoints"));
            }
            u.add_term(p, c);
            expect_term = false;
            sign = None;
        } else {
            match w {
                "+" => sign = Some(false),
                "-" => sign = Some(true),
                _ => return Err(line.err(at, ParseErrorKind::Syntax, format!("expected `+` or `-`, found `{w}`"))),
            }
            expect_term = true;
        }
    }
    if expect_term {
        let at = words.last().map_or(0, |(a, _)| *a);
        return Err(line.err(at, ParseErrorKind::Syntax, "dangling operator or empty relation"));
    }
    Ok(u)
}

/// Parses a presentation; `default_field` applies when there is no `field` line.
pub fn parse_presentation_with(text: &str, default_field: Field) -> Result<Presentation, ParseError> {
    let mut quiver = Quiver::new();
    let mut field = None;
    let mut relations: Vec<(Line, Vec<(usize, &str)>)> = Vec::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = Line { number: i + 1, text: strip_comment(raw) };
        last = i + 1;
        let words = line.words();
        let Some(&(at, keyword)) = words.first() else { continue };
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(line.err(at, ParseErrorKind::Syntax, "second `field` line"));
                }
                if quiver.vertex_count() != 0 || !relations.is_empty() {
                    return Err(line.err(at, ParseErrorKind::Syntax, "`field` must come first"));
                }
                field = Some(parse_field(&line, &words)?);
            }
            "vertex" => {
                if words.len() < 2 {
                    return Err(line.err(at, ParseErrorKind::Syntax, "expected vertex names"));
                }
                for &(c, v) in &words[1..] {
                    quiver.add_vertex(v).map_err(|e| line.err(c, ParseErrorKind::Invalid, e.to_string()))?;
                }
            }
            "arrow" => {
                let [_, (c, name), (cs, s), (ct, t)] = words[..] else {
                    return Err(line.err(at, ParseErrorKind::Syntax, "expected `arrow <name> <source> <target>`"));
                };
                if name.contains(['.', '*', '/', '+', '-']) || name.starts_with("e_") {
                    return Err(line.err(c, ParseErrorKind::Syntax, format!("invalid arrow name `{name}`")));
                }
                let unknown =
                    |col, v: &str| line.err(col, ParseErrorKind::UnknownName, format!("unknown vertex `{v}`"));
                let s = quiver.vertex(s).ok_or_else(|| unknown(cs, s))?;
                let t = quiver.vertex(t).ok_or_else(|| unknown(ct, t))?;
                quiver.add_arrow(name, s, t).map_err(|e| line.err(c, ParseErrorKind::Invalid, e.to_string()))?;
            }
            "rel" => relations.push((line, words)),
            other => return Err(line.err(at, ParseErrorKind::Syntax, format!("unknown keyword `{other}`"))),
        }
    }
    let field = field.unwrap_or(default_field);
    let mut rels = Vec::new();
    for (line, words) in &relations {
        let u = parse_relation(line, &quiver, field, words)?;
        if !u.is_zero() {
            rels.push(u);
        }
    }
    Presentation::new(quiver, rels, field).map_err(|e| {
        let kind = match e {
            Error::MixedEndpoints(_) => ParseErrorKind::MixedEndpoints,
            _ => ParseErrorKind::Invalid,
        };
        ParseError { line: last, column: 1, kind, message: e.to_string() }
    })
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    parse_presentation_with(text, Field::Rationals)
}

fn field_line(field: Field) -> String {
    match field {
        Field::Rationals => "field q".into(),
        Field::Prime(p) => format!("field fp {p}"),
    }
}

/// The text form; [`parse_presentation`] reads it back to the same presentation.
pub fn emit_presentation(p: &Presentation) -> String {
    let q = p.quiver();
    let mut s = String::new();
    let _ = writeln!(s, "{}", field_line(p.field()));
    let names: Vec<&str> = q.vertices().map(|v| q.vertex_name(v)).collect();
    let _ = writeln!(s, "vertex {}", names.join(" "));
    for a in q.arrows() {
        let _ = writeln!(s, "arrow {} {} {}", q.arrow_name(a), q.vertex_name(q.source(a)), q.vertex_name(q.target(a)));
    }
    for r in p.relations() {
        let _ = writeln!(s, "rel {}", q.format_element(r));
    }
    s
}
