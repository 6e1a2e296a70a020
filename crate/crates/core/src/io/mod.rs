//! Parsers and renderers for every external format.

mod aut;
mod docs;
mod dot;

pub use aut::{parse_aut, parse_aut_document, render_aut, AutDocument};
pub use docs::{
    parse_lattice, parse_lattice_document, parse_relation, parse_relation_document, Endpoint,
    LatticeDocument, OrderKind, RelationDocument,
};
pub use dot::render_dot;

use crate::relation::Relation;

/// `(a,b) (c,d) ...` in canonical order, using display names.
pub fn render_pairs(r: &Relation, names: &[String]) -> String {
    r.pairs()
        .map(|(a, b)| format!("({},{})", names[a], names[b]))
        .collect::<Vec<_>>()
        .join(" ")
}
