//! The seeded property suite behind `upto verify`.
//!
//! Each property draws from its own generator, derived from the suite seed and
//! the property's position, so results do not depend on which other
//! properties ran. Reports contain no timings and are byte-stable for a fixed
//! seed and sample count.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::companion::{catalog, check_lrf_largest, is_respectful_on_samples, lrf};
use crate::error::Result;
use crate::gallery::{build_t, verify_gallery};
use crate::io::{parse_aut, render_aut};
use crate::lattice::{
    brute_force_largest, companion_table, find_separating_function, is_compatible, is_monotone,
    is_r_monotone, lts_to_lattice, relation_to_element, s_table, z_chain, FiniteLattice, Mode,
};
use crate::lts::Lts;
use crate::progress::{largest_progressing_to, progresses};
use crate::relation::Relation;
use crate::sample::{
    all_ltss, all_relations, progression_of_random_monotone, random_lts, random_progression,
    random_relation, random_subrelation, random_superrelation, respectful_sample,
};
use crate::strata::compute_strata;
use crate::upto::{check_upto, Conclusion};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    violations: usize,
    first: Option<String>,
    note: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    fn finish(self, name: &'static str) -> PropertyResult {
        PropertyResult {
            name,
            checked: self.checked,
            violations: self.violations,
            passed: self.violations == 0,
            first_violation: self.first,
            note: self.note,
        }
    }
}

type Property = fn(&mut ChaCha8Rng, usize) -> Result<Tally>;

fn small_lts(rng: &mut ChaCha8Rng, max_states: usize) -> Lts {
    let n = rng.gen_range(1..=max_states);
    let labels = rng.gen_range(1..=2);
    let density = rng.gen_range(0.15..0.6);
    random_lts(rng, n, labels, density)
}

fn fixed_systems() -> Vec<Lts> {
    let mut out: Vec<Lts> = (0..=2).map(|n| build_t(n).lts).collect();
    let mut b = Lts::builder(3);
    b.transition(0, "a", 0).unwrap();
    b.transition(1, "a", 2).unwrap();
    b.transition(2, "a", 1).unwrap();
    out.push(b.build().unwrap());
    let mut b = Lts::builder(2);
    b.transition(1, "a", 1).unwrap();
    out.push(b.build().unwrap());
    out
}

fn lattice_suite() -> Vec<(&'static str, FiniteLattice)> {
    vec![
        ("chain2", FiniteLattice::chain(2).unwrap()),
        ("chain3", FiniteLattice::chain(3).unwrap()),
        ("chain4", FiniteLattice::chain(4).unwrap()),
        ("diamond", FiniteLattice::diamond()),
        ("powerset2", FiniteLattice::powerset(2, |i| format!("{i:02b}")).unwrap()),
        ("pentagon", pentagon()),
    ]
}

/// `N5`: `0 < a < b < 1`, `0 < c < 1`.
fn pentagon() -> FiniteLattice {
    crate::lattice::validate_lattice(
        &crate::lattice::LatticeCandidate {
            elements: ["0", "a", "b", "c", "1"].map(String::from).to_vec(),
            leq: vec![(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        }
        .closed(),
    )
    .expect("N5 is a lattice")
}

fn progress_monotone(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let lts = small_lts(rng, 5);
        let (r, s) = respectful_sample(rng, &lts, 0.4);
        let r2 = random_subrelation(rng, &r, 0.6);
        let s2 = random_superrelation(rng, &s, 0.2);
        let ok = progresses(&lts, &r2, &s2)?;
        t.check(ok, || format!("{r2:?} does not progress to {s2:?}"));
    }
    Ok(t)
}

fn union_closure(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let lts = small_lts(rng, 5);
        let s = random_relation(rng, lts.n_states(), 0.6);
        let top = largest_progressing_to(&lts, &s)?;
        let r1 = random_subrelation(rng, &top, 0.5);
        let r2 = random_subrelation(rng, &top, 0.5);
        let u = r1.union(&r2)?;
        let ok = progresses(&lts, &u, &s)?;
        t.check(ok, || format!("union {u:?} does not progress to {s:?}"));
    }
    Ok(t)
}

fn union_of_progressing(lts: &Lts, s: &Relation) -> Result<Relation> {
    let mut acc = Relation::empty(lts.n_states());
    for x in all_relations(lts.n_states()) {
        if progresses(lts, &x, s)? {
            acc = acc.union(&x)?;
        }
    }
    Ok(acc)
}

fn characterisation(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for lts in all_ltss(2, 2) {
        for s in all_relations(2) {
            let ok = largest_progressing_to(&lts, &s)? == union_of_progressing(&lts, &s)?;
            t.check(ok, || format!("2-state system {lts:?}, target {s:?}"));
        }
    }
    for _ in 0..(samples / 20).max(1) {
        let d = rng.gen_range(0.15..0.5);
        let lts = random_lts(rng, 3, 2, d);
        let mut targets = compute_strata(&lts).strata().to_vec();
        targets.push(random_relation(rng, 3, 0.5));
        for s in targets {
            let ok = largest_progressing_to(&lts, &s)? == union_of_progressing(&lts, &s)?;
            t.check(ok, || format!("3-state system {lts:?}, target {s:?}"));
        }
    }
    Ok(t)
}

fn progress_iff_below_largest(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let lts = small_lts(rng, 5);
        let n = lts.n_states();
        let s = random_relation(rng, n, 0.7);
        let r = if rng.gen_bool(0.5) {
            random_subrelation(rng, &largest_progressing_to(&lts, &s)?, 0.7)
        } else {
            random_relation(rng, n, 0.2)
        };
        let lhs = progresses(&lts, &r, &s)?;
        let rhs = r.is_subset(&largest_progressing_to(&lts, &s)?)?;
        t.check(lhs == rhs, || format!("{r:?} vs {s:?}"));
    }
    Ok(t)
}

fn strata_chain(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let lts = small_lts(rng, 6);
        let n = lts.n_states();
        let seq = compute_strata(&lts);
        let strata = seq.strata();
        t.check(strata[0] == Relation::full(n), || "∼_0 is not full".into());
        t.check(seq.epsilon() <= n * n, || format!("ε = {} > n²", seq.epsilon()));
        for j in 0..=seq.epsilon() + 1 {
            for k in j..=seq.epsilon() + 1 {
                let ok = seq.stratum(k).is_subset(seq.stratum(j))?;
                t.check(ok, || format!("∼_{k} ⊄ ∼_{j}"));
            }
        }
        for k in 0..seq.epsilon() {
            t.check(strata[k + 1] != strata[k], || format!("∼_{} = ∼_{k} before ε", k + 1));
            let ok = progresses(&lts, &strata[k + 1], &strata[k])?;
            t.check(ok, || format!("∼_{} does not progress to ∼_{k}", k + 1));
        }
        let b = seq.bisimilarity();
        t.check(largest_progressing_to(&lts, b)? == *b, || "∼_ε is not a fixed point".into());
        t.check(progresses(&lts, b, b)?, || "∼_ε does not progress to itself".into());
        for (k, s) in strata.iter().enumerate() {
            t.check(s.is_equivalence(), || format!("∼_{k} is not an equivalence"));
        }
    }
    Ok(t)
}

fn bisimilarity_enumerated(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let mut systems = all_ltss(2, 1);
    systems.extend(fixed_systems());
    for _ in 0..(samples / 20).max(1) {
        let n = rng.gen_range(1..=3);
        let d = rng.gen_range(0.15..0.5);
        systems.push(random_lts(rng, n, 2, d));
    }
    for lts in systems {
        let mut union = Relation::empty(lts.n_states());
        for x in all_relations(lts.n_states()) {
            if progresses(&lts, &x, &x)? {
                union = union.union(&x)?;
            }
        }
        let ok = *compute_strata(&lts).bisimilarity() == union;
        t.check(ok, || format!("∼_ε differs from the union of bisimulations on {lts:?}"));
    }
    Ok(t)
}

fn lrf_monotone_idempotent(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let lts = small_lts(rng, 5);
        let seq = compute_strata(&lts);
        let s = random_relation(rng, lts.n_states(), 0.5);
        let r = random_subrelation(rng, &s, 0.5);
        let (lr, ls) = (lrf(&seq, &r)?, lrf(&seq, &s)?);
        t.check(lr.is_subset(&ls)?, || format!("lrf not monotone at {r:?} ⊆ {s:?}"));
        t.check(lrf(&seq, &lr)? == lr, || format!("lrf not idempotent at {r:?}"));
    }
    Ok(t)
}

fn lrf_respectful(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let lts = small_lts(rng, 5);
        let seq = compute_strata(&lts);
        let (r, s) = respectful_sample(rng, &lts, 0.4);
        let (lr, ls) = (lrf(&seq, &r)?, lrf(&seq, &s)?);
        let ok = lr.is_subset(&ls)? && progresses(&lts, &lr, &ls)?;
        t.check(ok, || format!("lrf fails respectfulness at {r:?}, {s:?}"));
    }
    Ok(t)
}

fn catalog_respectful(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..(samples / 20).max(1) {
        let lts = small_lts(rng, 4);
        let seq = Arc::new(compute_strata(&lts));
        let pairs: Vec<_> = (0..20).map(|_| respectful_sample(rng, &lts, 0.4)).collect();
        for f in catalog(seq) {
            let v = is_respectful_on_samples(&lts, &f, &pairs)?;
            t.check(v.holds_on_samples, || format!("{} on {:?}", f.name(), v.counterexample));
        }
    }
    Ok(t)
}

fn lrf_sound_fixpoint(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let lts = small_lts(rng, 5);
        let seq = compute_strata(&lts);
        let keep = rng.gen_range(0.0..1.0);
        let r = random_subrelation(rng, seq.bisimilarity(), keep);
        let ok = lrf(&seq, &r)? == *seq.bisimilarity();
        t.check(ok, || format!("lrf({r:?}) ≠ ∼_ε"));
    }
    Ok(t)
}

fn lrf_largest(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..(samples / 20).max(1) {
        let lts = small_lts(rng, 5);
        let seq = Arc::new(compute_strata(&lts));
        let rs: Vec<_> = (0..20)
            .map(|_| {
                let d = rng.gen_range(0.0..0.6);
                random_relation(rng, lts.n_states(), d)
            })
            .collect();
        for f in catalog(seq.clone()) {
            let v = check_lrf_largest(&seq, &f, &rs)?;
            t.check(v.holds, || format!("{}: {:?}", f.name(), v.violation));
        }
    }
    Ok(t)
}

fn upto_sound_and_maximal(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..(samples / 20).max(1) {
        let lts = small_lts(rng, 4);
        let seq = Arc::new(compute_strata(&lts));
        let lrf_fn = crate::companion::UpToFunction::lrf(seq.clone());
        let cat = catalog(seq.clone());
        for _ in 0..5 {
            let r = if rng.gen_bool(0.5) {
                random_subrelation(rng, seq.bisimilarity(), 0.5)
            } else {
                random_relation(rng, lts.n_states(), 0.2)
            };
            let companion = check_upto(&lts, &r, &lrf_fn)?;
            t.check(!companion.is_unsound(), || format!("lrf proved non-bisimilar {r:?}"));
            for f in &cat {
                let rep = check_upto(&lts, &r, f)?;
                t.check(!rep.is_unsound(), || format!("{} proved non-bisimilar {r:?}", f.name()));
                if rep.conclusion == Conclusion::ContainedInBisimilarity {
                    t.check(companion.conclusion == Conclusion::ContainedInBisimilarity, || {
                        format!("{} succeeds but lrf does not on {r:?}", f.name())
                    });
                }
            }
        }
    }
    Ok(t)
}

fn gallery(_: &mut ChaCha8Rng, _: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 0..=8 {
        let v = verify_gallery(n);
        t.check(v.passed, || v.first_discrepancy.clone().unwrap_or_default());
        t.check(v.epsilon == n, || format!("ε(T_{n}) = {}", v.epsilon));
    }
    Ok(t)
}

fn lattice_chain_and_companion(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let per = (samples / 50).max(20);
    for (name, l) in lattice_suite() {
        for i in 0..per {
            let p = if i % 2 == 0 {
                random_progression(rng, &l)
            } else {
                progression_of_random_monotone(rng, &l)
            };
            let chain = z_chain(&l, &p);
            for w in chain.zs.windows(2) {
                t.check(l.leq(w[1], w[0]), || format!("{name}: z-chain not decreasing"));
                t.check(p.rel().contains(w[1], w[0]), || format!("{name}: z_(k+1) R z_k fails"));
            }
            let c = companion_table(&l, &chain);
            t.check(is_monotone(&l, &c), || format!("{name}: companion not monotone"));
            t.check(is_r_monotone(&l, &p, &c), || format!("{name}: companion not R-monotone"));
            t.check(is_compatible(&l, &p, &c), || format!("{name}: companion not compatible"));
            for mode in [Mode::RMonotone, Mode::Compatible] {
                let res = brute_force_largest(&l, &p, mode)?;
                t.check(res.map == c, || format!("{name} {mode:?}: largest {:?} ≠ companion {c:?}", res.map));
                t.check(res.join_in_class, || format!("{name} {mode:?}: join leaves the class"));
            }
        }
    }
    Ok(t)
}

fn separation_search(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let mut found = None;
    let per = (samples / 50).max(20);
    for (name, l) in lattice_suite() {
        for _ in 0..per {
            let p = progression_of_random_monotone(rng, &l);
            let sep = find_separating_function(&l, &p)?;
            // Compatible monotone functions are always R-monotone.
            t.check(sep.compatible_not_r_monotone.is_none(), || {
                format!("{name}: compatible but not R-monotone {:?}", sep.compatible_not_r_monotone)
            });
            if found.is_none() {
                if let Some(f) = sep.r_monotone_not_compatible {
                    found = Some(format!("{name}: R-monotone, not compatible: {f:?}"));
                }
            }
        }
    }
    t.note = Some(found.unwrap_or_else(|| "no separating function found".into()));
    Ok(t)
}

fn bridge(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let mut systems = fixed_systems();
    systems.extend(all_ltss(2, 1));
    for _ in 0..(samples / 100).max(1) {
        let d = rng.gen_range(0.15..0.5);
        systems.push(random_lts(rng, 3, 2, d));
    }
    for lts in systems {
        let n = lts.n_states();
        let seq = compute_strata(&lts);
        let (l, p) = lts_to_lattice(&lts, 3)?;
        let chain = z_chain(&l, &p);
        for (k, &z) in chain.zs.iter().enumerate() {
            t.check(z == relation_to_element(seq.stratum(k)), || format!("z_{k} ≠ ∼_{k}"));
        }
        t.check(chain.stable_index == seq.epsilon(), || "stable index ≠ ε".into());
        let s = s_table(&l, &p);
        let c = companion_table(&l, &chain);
        for (e, r) in all_relations(n).enumerate() {
            t.check(c[e] == relation_to_element(&lrf(&seq, &r)?), || format!("companion ≠ lrf at {r:?}"));
            t.check(s[e] == relation_to_element(&largest_progressing_to(&lts, &r)?), || {
                format!("s_R ≠ largest_progressing_to at {r:?}")
            });
        }
    }
    Ok(t)
}

fn aut_round_trip(rng: &mut ChaCha8Rng, samples: usize) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let lts = small_lts(rng, 6);
        let back = parse_aut(&render_aut(&lts))?;
        t.check(back == lts, || format!("round trip changed {lts:?}"));
    }
    Ok(t)
}

const PROPERTIES: &[(&str, Property)] = &[
    ("progress_monotone", progress_monotone),
    ("progress_union_closed", union_closure),
    ("largest_progressing_to_enumerated", characterisation),
    ("progress_iff_below_largest", progress_iff_below_largest),
    ("strata_chain", strata_chain),
    ("bisimilarity_enumerated", bisimilarity_enumerated),
    ("lrf_monotone_idempotent", lrf_monotone_idempotent),
    ("lrf_respectful", lrf_respectful),
    ("catalog_respectful", catalog_respectful),
    ("lrf_sound_fixpoint", lrf_sound_fixpoint),
    ("lrf_largest", lrf_largest),
    ("upto_sound_and_maximal", upto_sound_and_maximal),
    ("gallery", gallery),
    ("lattice_companion", lattice_chain_and_companion),
    ("lattice_separation", separation_search),
    ("bridge", bridge),
    ("aut_round_trip", aut_round_trip),
];

pub fn property_names() -> impl Iterator<Item = &'static str> {
    PROPERTIES.iter().map(|(n, _)| *n)
}

pub fn run_suite(config: SuiteConfig) -> Result<SuiteReport> {
    let mut properties = Vec::with_capacity(PROPERTIES.len());
    for (i, (name, prop)) in PROPERTIES.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(i as u64);
        properties.push(prop(&mut rng, config.samples)?.finish(name));
    }
    Ok(SuiteReport {
        seed: config.seed,
        samples: config.samples,
        passed: properties.iter().all(|p| p.passed),
        properties,
    })
}
