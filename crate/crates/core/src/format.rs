//! Plain-text design files.
//!
//! ```text
//! # comment
//! spread n=4 t=2
//! BC D BCD
//! AC AD CD
//! ```
//!
//! A star header reads `star n=5 t=3 t0=1`; `t0` is optional on input and
//! checked against the detected nucleus. `cover=partial` admits rays that do
//! not cover the whole space.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{Defect, Design, Flat, Spread, Star};
use crate::gf2::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Spread,
    Star,
}

#[derive(Debug)]
struct Header {
    kind: Kind,
    n: usize,
    t: usize,
    t0: Option<usize>,
    partial: bool,
    line: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Tokens split on single spaces, with 1-based columns.
fn tokens(line_no: usize, text: &str) -> Result<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    let mut col = 1;
    for tok in text.split(' ') {
        if tok.is_empty() {
            return Err(parse_error(line_no, col, "expected a single space between tokens"));
        }
        if let Some(pos) = tok.find(|c: char| c.is_whitespace()) {
            return Err(parse_error(line_no, col + pos, "unexpected whitespace"));
        }
        out.push((col, tok));
        col += tok.len() + 1;
    }
    Ok(out)
}

fn parse_header(line_no: usize, text: &str) -> Result<Header> {
    let toks = tokens(line_no, text)?;
    let kind = match toks[0].1 {
        "spread" => Kind::Spread,
        "star" => Kind::Star,
        other => {
            return Err(parse_error(
                line_no,
                1,
                format!("expected `spread` or `star`, found {other:?}"),
            ))
        }
    };
    let (mut n, mut t, mut t0, mut partial) = (None, None, None, false);
    for &(col, tok) in &toks[1..] {
        let Some((key, value)) = tok.split_once('=') else {
            return Err(parse_error(line_no, col, format!("expected key=value, found {tok:?}")));
        };
        let number = || {
            value.parse::<usize>().map_err(|_| {
                parse_error(line_no, col + key.len() + 1, format!("invalid number {value:?}"))
            })
        };
        match (kind, key) {
            (_, "n") => n = Some(number()?),
            (_, "t") => t = Some(number()?),
            (Kind::Star, "t0") => t0 = Some(number()?),
            (Kind::Star, "cover") if value == "partial" => partial = true,
            (Kind::Star, "cover") if value == "full" => partial = false,
            _ => return Err(parse_error(line_no, col, format!("unknown header field {tok:?}"))),
        }
    }
    let n = n.ok_or_else(|| parse_error(line_no, 1, "header is missing n"))?;
    let t = t.ok_or_else(|| parse_error(line_no, 1, "header is missing t"))?;
    crate::gf2::check_dim(n).map_err(|e| parse_error(line_no, 1, e.to_string()))?;
    if t == 0 || t > n {
        return Err(parse_error(line_no, 1, format!("t = {t} must lie in 1..={n}")));
    }
    Ok(Header {
        kind,
        n,
        t,
        t0,
        partial,
        line: line_no,
    })
}

/// Parses and validates a design file.
pub fn parse_design(text: &str) -> Result<Design> {
    let mut header = None;
    let mut sets: Vec<Vec<Point>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim_end();
        if content.trim().is_empty() {
            continue;
        }
        let Some(h) = &header else {
            header = Some(parse_header(line_no, content)?);
            continue;
        };
        let set = tokens(line_no, content)?
            .into_iter()
            .map(|(col, tok)| Point::parse(tok, h.n).map_err(|e| parse_error(line_no, col, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        sets.push(set);
    }
    let h = header.ok_or(Error::EmptyInput)?;
    match h.kind {
        Kind::Spread => Ok(Spread::from_sets(h.n, h.t, sets)?.into()),
        Kind::Star => {
            let rays = sets
                .into_iter()
                .map(Flat::from_points)
                .collect::<Result<Vec<_>>>()
                .map_err(|_| Error::InvalidStar(Defect::NotClosed))?;
            if rays.iter().any(|r| r.t() != h.t) {
                return Err(Error::InvalidStar(Defect::WrongSize));
            }
            let star = if h.partial {
                Star::partial(h.n, rays)?
            } else {
                Star::new(h.n, rays)?
            };
            if let Some(t0) = h.t0 {
                if t0 != star.t0() {
                    return Err(parse_error(
                        h.line,
                        1,
                        format!("declared t0 = {t0} but the nucleus has t0 = {}", star.t0()),
                    ));
                }
            }
            Ok(star.into())
        }
    }
}

fn render_flats(out: &mut String, flats: &[Flat]) {
    let mut sorted: Vec<&Flat> = flats.iter().collect();
    sorted.sort_by_cached_key(|f| f.bitstring());
    for f in sorted {
        let labels: Vec<String> = f.points().iter().map(|p| p.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
}

/// Canonical text: flats ordered by bitstring, points by Yates index.
pub fn render_design(d: &Design) -> String {
    let mut out = String::new();
    match d {
        Design::Spread(s) => {
            let _ = writeln!(out, "spread n={} t={}", s.n(), s.t());
            render_flats(&mut out, s.flats());
        }
        Design::Star(s) => {
            let _ = write!(out, "star n={} t={} t0={}", s.n(), s.t(), s.t0());
            if !s.is_covering() {
                out.push_str(" cover=partial");
            }
            out.push('\n');
            render_flats(&mut out, s.rays());
        }
    }
    out
}
