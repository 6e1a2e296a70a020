//! Stratified bisimilarity `∼_0 ⊇ ∼_1 ⊇ … ⊇ ∼_ε`.
//!
//! `∼_0` is the full relation and `∼_{k+1}` is the largest relation
//! progressing to `∼_k`. On a finite system the chain is strictly decreasing
//! until it stabilises, so it can only shrink `n²` times before reaching the
//! fixed point `∼_ε`, which is bisimilarity. Limit stages never arise.

use crate::error::Result;
use crate::lts::Lts;
use crate::progress::{largest_progressing_to, progresses};
use crate::relation::Relation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataSequence {
    strata: Vec<Relation>,
}

impl StrataSequence {
    pub fn strata(&self) -> &[Relation] {
        &self.strata
    }

    /// Least index at which the chain is stable.
    pub fn epsilon(&self) -> usize {
        self.strata.len() - 1
    }

    pub fn n_states(&self) -> usize {
        self.strata[0].n()
    }

    /// `∼_k`, clamped to `∼_ε` past the convergence index.
    pub fn stratum(&self, k: usize) -> &Relation {
        &self.strata[k.min(self.epsilon())]
    }

    pub fn bisimilarity(&self) -> &Relation {
        &self.strata[self.epsilon()]
    }
}

/// Iterates `largest_progressing_to` from the full relation until two
/// consecutive strata coincide.
pub fn compute_strata(lts: &Lts) -> StrataSequence {
    let n = lts.n_states();
    let mut strata = vec![Relation::full(n)];
    loop {
        let last = strata.last().expect("chain is never empty");
        let next = largest_progressing_to(lts, last).expect("strata share the system's size");
        if &next == last {
            break;
        }
        strata.push(next);
    }
    let seq = StrataSequence { strata };
    assert!(
        seq.epsilon() <= n * n,
        "strictly decreasing chain longer than n²"
    );
    seq
}

/// Returns `∼_ε` after re-checking that it progresses to itself.
pub fn bisimilarity(lts: &Lts, seq: &StrataSequence) -> Result<Relation> {
    let b = seq.bisimilarity();
    let ok = progresses(lts, b, b)?;
    assert!(ok, "fixed point of the strata chain does not progress to itself");
    Ok(b.clone())
}
