//! The largest respectful function (LRF) and a catalog of up-to functions.
//!
//! `lrf(R)` is the intersection of every stratum containing `R`. Since the
//! strata form a decreasing chain, that is simply the deepest stratum that
//! still contains `R`.

use std::fmt;
use std::sync::Arc;

use crate::error::{check_dim, Result};
use crate::lts::Lts;
use crate::progress::{progresses_to, ProgressDiagnosis};
use crate::relation::Relation;
use crate::strata::StrataSequence;

/// Index `m` of the smallest stratum containing `r`.
pub fn lrf_index(seq: &StrataSequence, r: &Relation) -> Result<usize> {
    check_dim(seq.n_states(), r.n())?;
    for (k, stratum) in seq.strata().iter().enumerate() {
        if !r.is_subset(stratum)? {
            // ∼_0 is full, so k ≥ 1 here.
            return Ok(k - 1);
        }
    }
    Ok(seq.epsilon())
}

pub fn lrf(seq: &StrataSequence, r: &Relation) -> Result<Relation> {
    Ok(seq.stratum(lrf_index(seq, r)?).clone())
}

type EvalFn = dyn Fn(&Relation) -> Result<Relation> + Send + Sync;

/// A named function on relations, used as the target of up-to proofs.
///
/// Functions built through the catalog constructors or [`UpToFunction::lrf`]
/// are *trusted*: their respectfulness is known, so a successful progression
/// check against them proves containment in bisimilarity. Functions built
/// with [`UpToFunction::new`] are never trusted.
#[derive(Clone)]
pub struct UpToFunction {
    name: String,
    eval: Arc<EvalFn>,
    trusted: bool,
}

impl fmt::Debug for UpToFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UpToFunction")
            .field("name", &self.name)
            .field("trusted", &self.trusted)
            .finish()
    }
}

impl UpToFunction {
    /// An arbitrary, untrusted function.
    pub fn new<F>(name: impl Into<String>, eval: F) -> Self
    where
        F: Fn(&Relation) -> Result<Relation> + Send + Sync + 'static,
    {
        UpToFunction {
            name: name.into(),
            eval: Arc::new(eval),
            trusted: false,
        }
    }

    fn trusted<F>(name: impl Into<String>, eval: F) -> Self
    where
        F: Fn(&Relation) -> Result<Relation> + Send + Sync + 'static,
    {
        UpToFunction {
            trusted: true,
            ..UpToFunction::new(name, eval)
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_trusted(&self) -> bool {
        self.trusted
    }

    pub fn apply(&self, r: &Relation) -> Result<Relation> {
        (self.eval)(r)
    }

    pub fn identity() -> Self {
        UpToFunction::trusted("identity", |r| Ok(r.clone()))
    }

    /// `R ↦ ∼_ε`
    pub fn const_bisim(seq: Arc<StrataSequence>) -> Self {
        UpToFunction::trusted("const_bisim", move |r| {
            check_dim(seq.n_states(), r.n())?;
            Ok(seq.bisimilarity().clone())
        })
    }

    /// `R ↦ ∼_ε ∘ R ∘ ∼_ε`
    pub fn upto_bisim(seq: Arc<StrataSequence>) -> Self {
        UpToFunction::trusted("upto_bisim", move |r| {
            let b = seq.bisimilarity();
            b.compose(r)?.compose(b)
        })
    }

    /// `R ↦ R ∪ ∼_ε`
    pub fn union_bisim(seq: Arc<StrataSequence>) -> Self {
        UpToFunction::trusted("union_bisim", move |r| r.union(seq.bisimilarity()))
    }

    pub fn lrf(seq: Arc<StrataSequence>) -> Self {
        UpToFunction::trusted("lrf", move |r| lrf(&seq, r))
    }

    /// `R ↦ f(g(R))`; trusted iff both parts are.
    pub fn compose(f: &UpToFunction, g: &UpToFunction) -> Self {
        let (fe, ge) = (f.eval.clone(), g.eval.clone());
        UpToFunction {
            name: format!("{}.{}", f.name, g.name),
            eval: Arc::new(move |r| fe(&ge(r)?)),
            trusted: f.trusted && g.trusted,
        }
    }

    /// `R ↦ f(R) ∪ g(R)`; trusted iff both parts are.
    pub fn union(f: &UpToFunction, g: &UpToFunction) -> Self {
        let (fe, ge) = (f.eval.clone(), g.eval.clone());
        UpToFunction {
            name: format!("{}+{}", f.name, g.name),
            eval: Arc::new(move |r| fe(r)?.union(&ge(r)?)),
            trusted: f.trusted && g.trusted,
        }
    }
}

/// The four base functions, every ordered composition of two of them, and
/// every pointwise union of two distinct ones.
pub fn catalog(seq: Arc<StrataSequence>) -> Vec<UpToFunction> {
    let base = vec![
        UpToFunction::identity(),
        UpToFunction::const_bisim(seq.clone()),
        UpToFunction::upto_bisim(seq.clone()),
        UpToFunction::union_bisim(seq),
    ];
    let mut out = base.clone();
    for f in &base {
        for g in &base {
            out.push(UpToFunction::compose(f, g));
        }
    }
    for (i, f) in base.iter().enumerate() {
        for g in &base[i + 1..] {
            out.push(UpToFunction::union(f, g));
        }
    }
    out
}

/// Looks up a catalog member or `"lrf"` by name.
pub fn trusted_by_name(seq: Arc<StrataSequence>, name: &str) -> Option<UpToFunction> {
    if name == "lrf" {
        return Some(UpToFunction::lrf(seq));
    }
    catalog(seq).into_iter().find(|f| f.name() == name)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RespectClause {
    /// `F(R) ⊆ F(S)` failed.
    Inclusion,
    /// `F(R) ↣ F(S)` failed.
    Progression,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RespectCounterexample {
    pub r: Relation,
    pub s: Relation,
    pub clause: RespectClause,
    pub diagnosis: Option<ProgressDiagnosis>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RespectfulnessVerdict {
    pub holds_on_samples: bool,
    pub checked: usize,
    /// Samples not satisfying `r ⊆ s ∧ r ↣ s`.
    pub skipped: usize,
    pub counterexample: Option<RespectCounterexample>,
}

/// Tests the respectfulness implication on each `(r, s)` with `r ⊆ s` and
/// `r ↣ s`; the first counterexample is kept.
pub fn is_respectful_on_samples(
    lts: &Lts,
    f: &UpToFunction,
    samples: &[(Relation, Relation)],
) -> Result<RespectfulnessVerdict> {
    let mut checked = 0;
    let mut skipped = 0;
    let mut counterexample = None;
    for (r, s) in samples {
        if !r.is_subset(s)? || !progresses_to(lts, r, s)?.holds {
            skipped += 1;
            continue;
        }
        checked += 1;
        if counterexample.is_some() {
            continue;
        }
        let (fr, fs) = (f.apply(r)?, f.apply(s)?);
        if !fr.is_subset(&fs)? {
            counterexample = Some(RespectCounterexample {
                r: r.clone(),
                s: s.clone(),
                clause: RespectClause::Inclusion,
                diagnosis: None,
            });
            continue;
        }
        let d = progresses_to(lts, &fr, &fs)?;
        if !d.holds {
            counterexample = Some(RespectCounterexample {
                r: r.clone(),
                s: s.clone(),
                clause: RespectClause::Progression,
                diagnosis: Some(d),
            });
        }
    }
    Ok(RespectfulnessVerdict {
        holds_on_samples: counterexample.is_none(),
        checked,
        skipped,
        counterexample,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargestViolation {
    pub r: Relation,
    pub image: Relation,
    pub lrf: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargestVerdict {
    pub holds: bool,
    pub checked: usize,
    pub violation: Option<LargestViolation>,
}

/// Checks `f(r) ⊆ lrf(r)` for every `r`. A violation for a catalog member
/// indicates a bug.
pub fn check_lrf_largest(
    seq: &StrataSequence,
    f: &UpToFunction,
    rs: &[Relation],
) -> Result<LargestVerdict> {
    for r in rs {
        let image = f.apply(r)?;
        let top = lrf(seq, r)?;
        if !image.is_subset(&top)? {
            return Ok(LargestVerdict {
                holds: false,
                checked: rs.len(),
                violation: Some(LargestViolation { r: r.clone(), image, lrf: top }),
            });
        }
    }
    Ok(LargestVerdict {
        holds: true,
        checked: rs.len(),
        violation: None,
    })
}
