//! The ordinal systems `T_n`: states `0..=n`, one label `t`, and `i -t-> j`
//! exactly when `i > j`.
//!
//! In `T_n`, two distinct states `a < b` are related by `∼_γ` iff `γ ≤ a`, so
//! `T_{n+1}` separates `∼_n` from `∼_{n+1}` on the pair `(n, n+1)`.

use crate::lts::Lts;
use crate::strata::{compute_strata, StrataSequence};

pub const GALLERY_LABEL: &str = "t";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinalLts {
    pub n: usize,
    pub lts: Lts,
}

pub fn build_t(n: usize) -> OrdinalLts {
    let mut b = Lts::builder(n + 1);
    for i in 0..=n {
        for j in 0..i {
            b.transition(i, GALLERY_LABEL, j).expect("indices in range");
        }
    }
    OrdinalLts {
        n,
        lts: b.build().expect("gallery system is well-formed"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalleryVerdict {
    pub n: usize,
    pub epsilon: usize,
    pub passed: bool,
    pub first_discrepancy: Option<String>,
}

fn check_characterisation(n: usize, seq: &StrataSequence) -> Option<String> {
    for gamma in 0..=seq.epsilon() {
        let s = seq.stratum(gamma);
        for b in 0..=n {
            for a in 0..b {
                let expected = gamma <= a;
                if s.contains(a, b) != expected {
                    return Some(format!(
                        "T_{n}: ({a},{b}) {} ∼_{gamma}, expected {}",
                        if expected { "∉" } else { "∈" },
                        if expected { "∈" } else { "∉" },
                    ));
                }
            }
        }
    }
    None
}

/// Checks the stratum characterisation on `T_n` and the separating pair
/// `(n, n+1)` on `T_{n+1}`.
pub fn verify_gallery(n: usize) -> GalleryVerdict {
    let seq = compute_strata(&build_t(n).lts);
    let mut discrepancy = check_characterisation(n, &seq);

    if discrepancy.is_none() {
        let next = compute_strata(&build_t(n + 1).lts);
        if !next.stratum(n).contains(n, n + 1) {
            discrepancy = Some(format!("T_{}: ({n},{}) ∉ ∼_{n}", n + 1, n + 1));
        } else if next.stratum(n + 1).contains(n, n + 1) {
            discrepancy = Some(format!("T_{}: ({n},{}) ∈ ∼_{}", n + 1, n + 1, n + 1));
        }
    }

    GalleryVerdict {
        n,
        epsilon: seq.epsilon(),
        passed: discrepancy.is_none(),
        first_discrepancy: discrepancy,
    }
}
