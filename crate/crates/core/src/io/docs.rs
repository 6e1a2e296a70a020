//! Relation and lattice documents, in a line format or a JSON mirror.
//!
//! Relation, line format (`#` starts a comment):
//!
//! ```text
//! name: candidate
//! 1 2
//! (p, q)
//! ```
//!
//! Relation, JSON: `{"name": "candidate", "pairs": [["1", "2"], [0, 1]]}`.
//!
//! Lattice, line format:
//!
//! ```text
//! order: cover
//! elements: bot x y top
//! bot x
//! bot y
//! x top
//! y top
//! ```
//!
//! Lattice, JSON: `{"elements": [...], "order": "cover", "pairs": [[...], ...]}`.
//! With `order: cover` the pairs are closed reflexively and transitively before
//! validation; with `order: full` they must already be the whole order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{validate_lattice, FiniteLattice, LatticeCandidate};
use crate::lts::Lts;
use crate::relation::Relation;

/// A state or element reference: a display name or a numeric index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Endpoint {
    Index(usize),
    Name(String),
}

impl Endpoint {
    fn from_token(tok: &str) -> Self {
        Endpoint::Name(tok.to_string())
    }

    /// Exact name match first, then a numeric index.
    pub fn resolve(&self, names: &[String]) -> Result<usize> {
        match self {
            Endpoint::Index(i) if *i < names.len() => Ok(*i),
            Endpoint::Index(i) => Err(Error::Unresolved(i.to_string())),
            Endpoint::Name(n) => names
                .iter()
                .position(|x| x == n)
                .or_else(|| n.parse::<usize>().ok().filter(|&i| i < names.len()))
                .ok_or_else(|| Error::Unresolved(n.clone())),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default)]
    pub pairs: Vec<(Endpoint, Endpoint)>,
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        message: e.to_string(),
    }
}

/// Non-comment, non-blank lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn tokens(line: &str) -> Vec<&str> {
    line.split(|c: char| c.is_whitespace() || c == ',' || c == '(' || c == ')')
        .filter(|t| !t.is_empty())
        .collect()
}

pub fn parse_relation_document(text: &str) -> Result<RelationDocument> {
    if is_json(text) {
        return serde_json::from_str(text).map_err(json_err);
    }
    let mut doc = RelationDocument::default();
    for (line, l) in content_lines(text) {
        if let Some(name) = l.strip_prefix("name:") {
            doc.name = Some(name.trim().to_string());
            continue;
        }
        match tokens(l).as_slice() {
            [a, b] => doc.pairs.push((Endpoint::from_token(a), Endpoint::from_token(b))),
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected a pair, found {l:?}"),
                })
            }
        }
    }
    Ok(doc)
}

impl RelationDocument {
    pub fn resolve(&self, names: &[String]) -> Result<Relation> {
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| Ok((a.resolve(names)?, b.resolve(names)?)))
            .collect::<Result<Vec<_>>>()?;
        Relation::from_pairs(names.len(), pairs)
    }

    pub fn from_relation(name: Option<String>, r: &Relation, names: &[String]) -> Self {
        RelationDocument {
            name,
            pairs: r
                .pairs()
                .map(|(a, b)| (Endpoint::Name(names[a].clone()), Endpoint::Name(names[b].clone())))
                .collect(),
        }
    }
}

pub fn parse_relation(text: &str, lts: &Lts) -> Result<Relation> {
    parse_relation_document(text)?.resolve(lts.state_names())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    #[default]
    Cover,
    Full,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDocument {
    pub elements: Vec<String>,
    #[serde(default)]
    pub order: OrderKind,
    #[serde(default)]
    pub pairs: Vec<(Endpoint, Endpoint)>,
}

pub fn parse_lattice_document(text: &str) -> Result<LatticeDocument> {
    if is_json(text) {
        return serde_json::from_str(text).map_err(json_err);
    }
    let mut doc = LatticeDocument::default();
    for (line, l) in content_lines(text) {
        if let Some(kind) = l.strip_prefix("order:") {
            doc.order = match kind.trim() {
                "cover" => OrderKind::Cover,
                "full" => OrderKind::Full,
                other => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unknown order kind {other:?}"),
                    })
                }
            };
        } else if let Some(rest) = l.strip_prefix("elements:") {
            doc.elements.extend(tokens(rest).into_iter().map(String::from));
        } else {
            match tokens(l).as_slice() {
                [a, b] => doc.pairs.push((Endpoint::from_token(a), Endpoint::from_token(b))),
                _ => {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected an order pair, found {l:?}"),
                    })
                }
            }
        }
    }
    Ok(doc)
}

impl LatticeDocument {
    pub fn to_lattice(&self) -> Result<FiniteLattice> {
        let leq = self
            .pairs
            .iter()
            .map(|(a, b)| Ok((a.resolve(&self.elements)?, b.resolve(&self.elements)?)))
            .collect::<Result<Vec<_>>>()?;
        let candidate = LatticeCandidate {
            elements: self.elements.clone(),
            leq,
        };
        let candidate = match self.order {
            OrderKind::Cover => candidate.closed(),
            OrderKind::Full => candidate,
        };
        validate_lattice(&candidate)
    }
}

pub fn parse_lattice(text: &str) -> Result<FiniteLattice> {
    parse_lattice_document(text)?.to_lattice()
}
