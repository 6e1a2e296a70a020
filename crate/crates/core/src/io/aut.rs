//! Aldebaran `.aut` files.
//!
//! ```text
//! des (0, 3, 3)
//! (1, "t", 0)
//! (2, "t", 0)
//! (2, "t", 1)
//! ```
//!
//! States are numbered `0..n`; the parsed [`Lts`] names them `"0"`, `"1"`, ...

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lts::Lts;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutDocument {
    pub initial_state: usize,
    pub transition_count: usize,
    pub state_count: usize,
    pub body: Vec<(usize, String, usize)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(s: &str, line: usize, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {:?}", s.trim())))
}

/// Strips `(` ... `)` around a trimmed line.
fn parenthesised<'a>(s: &'a str, line: usize, what: &str) -> Result<&'a str> {
    s.strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| parse_err(line, format!("expected parenthesised {what}")))
}

fn parse_header(text: &str, line: usize) -> Result<(usize, usize, usize)> {
    let rest = text
        .strip_prefix("des")
        .ok_or_else(|| parse_err(line, "header must start with `des`"))?;
    let inner = parenthesised(rest.trim(), line, "header")?;
    let parts: Vec<_> = inner.split(',').collect();
    if parts.len() != 3 {
        return Err(parse_err(line, "header needs three fields"));
    }
    Ok((
        parse_index(parts[0], line, "initial state")?,
        parse_index(parts[1], line, "transition count")?,
        parse_index(parts[2], line, "state count")?,
    ))
}

fn parse_transition(text: &str, line: usize) -> Result<(usize, String, usize)> {
    let inner = parenthesised(text, line, "transition")?;
    let first = inner
        .find(',')
        .ok_or_else(|| parse_err(line, "transition needs three fields"))?;
    let last = inner.rfind(',').filter(|&i| i > first).ok_or_else(|| parse_err(line, "transition needs three fields"))?;
    let src = parse_index(&inner[..first], line, "source state")?;
    let dst = parse_index(&inner[last + 1..], line, "target state")?;
    let raw = inner[first + 1..last].trim();
    let label = match raw.strip_prefix('"') {
        Some(rest) => rest
            .strip_suffix('"')
            .ok_or_else(|| parse_err(line, "unterminated quote in label"))?,
        None => raw,
    };
    if label.is_empty() {
        return Err(parse_err(line, "empty label"));
    }
    Ok((src, label.to_string(), dst))
}

pub fn parse_aut_document(text: &str) -> Result<AutDocument> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, htext) = lines.next().ok_or_else(|| parse_err(1, "missing `des` header"))?;
    let (initial_state, transition_count, state_count) = parse_header(htext, hline)?;
    if initial_state >= state_count && state_count > 0 {
        return Err(parse_err(hline, format!("initial state {initial_state} out of range")));
    }

    let mut body = Vec::with_capacity(transition_count);
    let mut last_line = hline;
    for (line, text) in lines {
        if body.len() == transition_count {
            return Err(parse_err(
                line,
                format!("more transitions than the {transition_count} declared"),
            ));
        }
        let (src, label, dst) = parse_transition(text, line)?;
        for s in [src, dst] {
            if s >= state_count {
                return Err(parse_err(line, format!("state {s} out of range (state count {state_count})")));
            }
        }
        body.push((src, label, dst));
        last_line = line;
    }
    if body.len() != transition_count {
        return Err(parse_err(
            last_line,
            format!("declared {transition_count} transitions, found {}", body.len()),
        ));
    }
    Ok(AutDocument {
        initial_state,
        transition_count,
        state_count,
        body,
    })
}

impl AutDocument {
    pub fn to_lts(&self) -> Result<Lts> {
        let mut b = Lts::builder(self.state_count);
        if self.state_count > 0 {
            b.initial(self.initial_state)?;
        }
        for (src, label, dst) in &self.body {
            b.transition(*src, label, *dst)?;
        }
        b.build()
    }

    pub fn from_lts(lts: &Lts) -> Self {
        let body: Vec<_> = lts
            .transitions()
            .map(|t| (t.source, lts.label(t.label).as_str().to_string(), t.target))
            .collect();
        AutDocument {
            initial_state: lts.initial(),
            transition_count: body.len(),
            state_count: lts.n_states(),
            body,
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "des ({}, {}, {})\n",
            self.initial_state, self.transition_count, self.state_count
        );
        for (src, label, dst) in &self.body {
            writeln!(out, "({src}, \"{label}\", {dst})").unwrap();
        }
        out
    }
}

pub fn parse_aut(text: &str) -> Result<Lts> {
    parse_aut_document(text)?.to_lts()
}

/// Canonical `.aut` text; state names are not preserved.
pub fn render_aut(lts: &Lts) -> String {
    AutDocument::from_lts(lts).render()
}
