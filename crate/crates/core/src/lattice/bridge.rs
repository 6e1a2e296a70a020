//! The lattice of relations on a small LTS, with `↣` as the progression.

use super::{FiniteLattice, LatticeProgression};
use crate::error::{Error, Result};
use crate::lts::Lts;
use crate::progress::largest_progressing_to;
use crate::relation::Relation;

/// `2^(3·3) = 512` lattice elements.
pub const MAX_BRIDGE_STATES: usize = 3;

/// Lattice element of a relation: its pair bit mask.
pub fn relation_to_element(r: &Relation) -> usize {
    r.to_mask() as usize
}

pub fn element_to_relation(n_states: usize, e: usize) -> Relation {
    Relation::from_mask(n_states, e as u64)
}

fn element_name(lts: &Lts, r: &Relation) -> String {
    let pairs: Vec<_> = r
        .pairs()
        .map(|(a, b)| format!("({},{})", lts.state_name(a), lts.state_name(b)))
        .collect();
    format!("{{{}}}", pairs.join(","))
}

/// All relations on `lts` ordered by inclusion, with `X R S` iff `X ↣ S`.
///
/// Since relations progressing to `S` are closed under union,
/// `X ↣ S` iff `X ⊆ largest_progressing_to(S)`.
pub fn lts_to_lattice(lts: &Lts, max_states: usize) -> Result<(FiniteLattice, LatticeProgression)> {
    let n = lts.n_states();
    let cap = max_states.min(MAX_BRIDGE_STATES);
    if n > cap {
        return Err(Error::TooLarge {
            what: "LTS for the relation lattice",
            size: n,
            cap,
        });
    }
    let bits = (n * n) as u32;
    let lattice = FiniteLattice::powerset(bits, |e| element_name(lts, &element_to_relation(n, e)))?;
    let size = lattice.len();
    let mut rel = Relation::empty(size);
    for s in 0..size {
        let largest = relation_to_element(&largest_progressing_to(lts, &element_to_relation(n, s))?);
        for x in lattice.down_set(largest).ones() {
            rel.insert(x, s);
        }
    }
    let progression = LatticeProgression::new(&lattice, rel)?;
    Ok((lattice, progression))
}
