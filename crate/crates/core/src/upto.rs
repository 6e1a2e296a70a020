//! Checking bisimulation-up-to proofs.
//!
//! A candidate `R` with `R ↣ F(R)` for a respectful `F` is contained in
//! bisimilarity. The report also carries an independent containment check
//! against `∼_ε` computed from scratch.

use std::sync::Arc;

use serde::Serialize;

use crate::companion::UpToFunction;
use crate::error::{check_dim, Result};
use crate::lts::Lts;
use crate::progress::{progresses_to, ProgressDiagnosis};
use crate::relation::Relation;
use crate::strata::compute_strata;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    ContainedInBisimilarity,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofReport {
    pub relation_name: String,
    pub function_name: String,
    pub trusted: bool,
    pub progression_holds: bool,
    pub conclusion: Conclusion,
    pub diagnosis: ProgressDiagnosis,
    /// `r ⊆ ∼_ε`, evaluated independently of the progression check.
    pub cross_check: bool,
}

impl ProofReport {
    /// A concluded proof whose relation is not actually bisimilar.
    pub fn is_unsound(&self) -> bool {
        self.conclusion == Conclusion::ContainedInBisimilarity && !self.cross_check
    }
}

pub fn check_upto(lts: &Lts, r: &Relation, f: &UpToFunction) -> Result<ProofReport> {
    check_upto_named(lts, "R", r, f)
}

pub fn check_upto_named(
    lts: &Lts,
    relation_name: &str,
    r: &Relation,
    f: &UpToFunction,
) -> Result<ProofReport> {
    check_dim(lts.n_states(), r.n())?;
    let target = f.apply(r)?;
    let diagnosis = progresses_to(lts, r, &target)?;
    let progression_holds = diagnosis.holds;
    let conclusion = if progression_holds && f.is_trusted() {
        Conclusion::ContainedInBisimilarity
    } else {
        Conclusion::Inconclusive
    };
    let cross_check = r.is_subset(compute_strata(lts).bisimilarity())?;
    Ok(ProofReport {
        relation_name: relation_name.to_string(),
        function_name: f.name().to_string(),
        trusted: f.is_trusted(),
        progression_holds,
        conclusion,
        diagnosis,
        cross_check,
    })
}

/// [`check_upto`] with the largest respectful function as the target.
pub fn check_companion(lts: &Lts, r: &Relation) -> Result<ProofReport> {
    let f = UpToFunction::lrf(Arc::new(compute_strata(lts)));
    check_upto(lts, r, &f)
}
