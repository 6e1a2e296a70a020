//! The progress relation `R ↣ S` between relations on one LTS.
//!
//! `R ↣ S` holds when, for every `(p, q) ∈ R`, each move `p -a-> p'` is
//! answered by some `q -a-> q'` with `(p', q') ∈ S`, and symmetrically each
//! move of `q` is answered by `p`.

use serde::Serialize;

use crate::error::{check_dim, Result};
use crate::lts::{LabelId, Lts, StateId, Transition};
use crate::relation::Relation;

/// Which side of a pair failed to answer a move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// A move of the left state `p` had no matching move of `q`.
    Left,
    /// A move of the right state `q` had no matching move of `p`.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub pair: (StateId, StateId),
    pub direction: Direction,
    /// The unanswered move.
    pub transition: Transition,
}

/// Outcome of [`progresses_to`]; `holds` iff `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgressDiagnosis {
    pub holds: bool,
    pub violations: Vec<Violation>,
}

impl ProgressDiagnosis {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ProgressDiagnosis {
            holds: violations.is_empty(),
            violations,
        }
    }
}

/// Is `p -label-> p'` answered by some `q -label-> q'` with `(p', q')` related
/// by `s` (or by `s` conversed when `flip` is set)?
fn answered(lts: &Lts, q: StateId, label: LabelId, p_next: StateId, s: &Relation, flip: bool) -> bool {
    lts.successors(q, label).any(|q_next| {
        if flip {
            s.contains(q_next, p_next)
        } else {
            s.contains(p_next, q_next)
        }
    })
}

fn pair_violations(lts: &Lts, p: StateId, q: StateId, s: &Relation, out: &mut Vec<Violation>) {
    for &(label, p_next) in lts.outgoing(p) {
        if !answered(lts, q, label, p_next, s, false) {
            out.push(Violation {
                pair: (p, q),
                direction: Direction::Left,
                transition: Transition { source: p, label, target: p_next },
            });
        }
    }
    for &(label, q_next) in lts.outgoing(q) {
        if !answered(lts, p, label, q_next, s, true) {
            out.push(Violation {
                pair: (p, q),
                direction: Direction::Right,
                transition: Transition { source: q, label, target: q_next },
            });
        }
    }
}

/// Both clauses for the single pair `(p, q)` against target `s`.
pub fn pair_progresses(lts: &Lts, p: StateId, q: StateId, s: &Relation) -> bool {
    lts.outgoing(p)
        .iter()
        .all(|&(label, p_next)| answered(lts, q, label, p_next, s, false))
        && lts
            .outgoing(q)
            .iter()
            .all(|&(label, q_next)| answered(lts, p, label, q_next, s, true))
}

/// Checks `r ↣ s`, reporting every unanswered move.
pub fn progresses_to(lts: &Lts, r: &Relation, s: &Relation) -> Result<ProgressDiagnosis> {
    check_dim(lts.n_states(), r.n())?;
    check_dim(lts.n_states(), s.n())?;
    let mut violations = Vec::new();
    for (p, q) in r.pairs() {
        pair_violations(lts, p, q, s, &mut violations);
    }
    Ok(ProgressDiagnosis::from_violations(violations))
}

/// Boolean form of [`progresses_to`] that stops at the first failure.
pub fn progresses(lts: &Lts, r: &Relation, s: &Relation) -> Result<bool> {
    check_dim(lts.n_states(), r.n())?;
    check_dim(lts.n_states(), s.n())?;
    Ok(r.pairs().all(|(p, q)| pair_progresses(lts, p, q, s)))
}

/// The largest relation progressing to `s`.
///
/// Relations progressing to a fixed target are closed under union, so the
/// largest one is the set of pairs that individually satisfy both clauses.
pub fn largest_progressing_to(lts: &Lts, s: &Relation) -> Result<Relation> {
    let n = lts.n_states();
    check_dim(n, s.n())?;
    let mut out = Relation::empty(n);
    for p in 0..n {
        for q in 0..n {
            if pair_progresses(lts, p, q, s) {
                out.insert(p, q);
            }
        }
    }
    Ok(out)
}
