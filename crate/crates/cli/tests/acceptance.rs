//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Thresholds are exact (zero violations) and sample counts are the
//! required minimums.

use std::collections::HashSet;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use upto::gallery::build_t;
use upto::lattice::{
    brute_force_largest, companion_at, lts_to_lattice, relation_to_element, s_of, z_chain,
    FiniteLattice, LatticeProgression, Mode,
};
use upto::sample::{
    all_ltss, progression_of_random_monotone, random_lts, random_progression, random_relation,
    random_subrelation, respectful_sample,
};
use upto::{
    catalog, check_companion, compute_strata, largest_progressing_to, lrf, progresses, Conclusion,
    Lts, Relation,
};

/// Progress straight from the definition, over explicit transition triples.
fn naive_progresses(lts: &Lts, r: &Relation, s: &Relation) -> bool {
    let moves: HashSet<(usize, usize, usize)> =
        lts.transitions().map(|t| (t.source, t.label, t.target)).collect();
    let n = lts.n_states();
    let labels = lts.labels().len();
    for (p, q) in r.pairs() {
        for a in 0..labels {
            for p2 in 0..n {
                if moves.contains(&(p, a, p2))
                    && !(0..n).any(|q2| moves.contains(&(q, a, q2)) && s.contains(p2, q2))
                {
                    return false;
                }
            }
            for q2 in 0..n {
                if moves.contains(&(q, a, q2))
                    && !(0..n).any(|p2| moves.contains(&(p, a, p2)) && s.contains(p2, q2))
                {
                    return false;
                }
            }
        }
    }
    true
}

fn all_relations(n: usize) -> impl Iterator<Item = Relation> {
    (0..1u64 << (n * n)).map(move |m| Relation::from_mask(n, m))
}

fn union_where(n: usize, keep: impl Fn(&Relation) -> bool) -> Relation {
    all_relations(n)
        .filter(|x| keep(x))
        .fold(Relation::empty(n), |acc, x| acc.union(&x).unwrap())
}

fn random_small_lts(rng: &mut ChaCha8Rng, max_states: usize) -> Lts {
    let n = rng.gen_range(1..=max_states);
    let labels = rng.gen_range(1..=2);
    let d = rng.gen_range(0.15..0.6);
    random_lts(rng, n, labels, d)
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(violations: usize, detail: String) -> Outcome {
    Outcome {
        ok: violations == 0,
        detail,
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    o.detail = format!("{}; {:.2}s", o.detail, elapsed.as_secs_f64());
    if let Some(limit) = limit {
        if elapsed > limit {
            o.ok = false;
            o.detail += &format!(" exceeds {}s", limit.as_secs());
        }
    }
    o
}

fn c1_gallery() -> Outcome {
    let mut violations = 0;
    for n in 0..=8 {
        let seq = compute_strata(&build_t(n).lts);
        for gamma in 0..=seq.epsilon() + 1 {
            for b in 0..=n {
                for a in 0..b {
                    if seq.stratum(gamma).contains(a, b) != (gamma <= a) {
                        violations += 1;
                    }
                }
            }
        }
        let next = compute_strata(&build_t(n + 1).lts);
        if !next.stratum(n).contains(n, n + 1) || next.stratum(n + 1).contains(n, n + 1) {
            violations += 1;
        }
    }
    outcome(violations, format!("n = 0..=8, {violations} discrepancies"))
}

fn c2_strata_oracle(rng: &mut ChaCha8Rng) -> Outcome {
    let mut systems = all_ltss(2, 1);
    assert_eq!(systems.len(), 16);
    for _ in 0..100 {
        let d = rng.gen_range(0.15..0.5);
        systems.push(random_lts(rng, 3, 2, d));
    }
    let (mut checked, mut violations) = (0, 0);
    for lts in &systems {
        for s in compute_strata(lts).strata() {
            let oracle = union_where(lts.n_states(), |x| naive_progresses(lts, x, s));
            checked += 1;
            if largest_progressing_to(lts, s).unwrap() != oracle {
                violations += 1;
            }
        }
    }
    outcome(
        violations,
        format!("{} systems, {checked} strata, {violations} discrepancies", systems.len()),
    )
}

fn c3_lrf_respectful(rng: &mut ChaCha8Rng) -> Outcome {
    let (mut samples, mut nontrivial, mut violations) = (0, 0, 0);
    while samples < 10_000 {
        let lts = random_small_lts(rng, 5);
        let seq = compute_strata(&lts);
        for _ in 0..100 {
            let (r, s) = respectful_sample(rng, &lts, 0.4);
            assert!(r.is_subset(&s).unwrap() && naive_progresses(&lts, &r, &s));
            samples += 1;
            nontrivial += usize::from(!r.is_empty());
            let (lr, ls) = (lrf(&seq, &r).unwrap(), lrf(&seq, &s).unwrap());
            if !lr.is_subset(&ls).unwrap() || !naive_progresses(&lts, &lr, &ls) {
                violations += 1;
            }
        }
    }
    outcome(
        violations,
        format!("{samples} samples ({nontrivial} with r ≠ ∅), {violations} violations"),
    )
}

fn c4_lrf_largest(rng: &mut ChaCha8Rng) -> Outcome {
    let (mut checked, mut violations) = (0, 0);
    for _ in 0..50 {
        let lts = random_small_lts(rng, 5);
        let seq = Arc::new(compute_strata(&lts));
        let cat = catalog(seq.clone());
        for _ in 0..1000 {
            let d = rng.gen_range(0.0..0.6);
            let r = random_relation(rng, lts.n_states(), d);
            let top = lrf(&seq, &r).unwrap();
            for f in &cat {
                checked += 1;
                if !f.apply(&r).unwrap().is_subset(&top).unwrap() {
                    violations += 1;
                }
            }
        }
    }
    outcome(
        violations,
        format!("50 systems × 1000 relations × 26 functions = {checked}, {violations} violations"),
    )
}

fn c5_sound_fixpoint(rng: &mut ChaCha8Rng) -> Outcome {
    let (mut checked, mut violations) = (0, 0);
    while checked < 1000 {
        let lts = random_small_lts(rng, 5);
        let seq = compute_strata(&lts);
        for _ in 0..50 {
            let keep = rng.gen_range(0.0..1.0);
            let r = random_subrelation(rng, seq.bisimilarity(), keep);
            checked += 1;
            if lrf(&seq, &r).unwrap() != *seq.bisimilarity() {
                violations += 1;
            }
        }
    }
    outcome(violations, format!("{checked} subrelations of ∼_ε, {violations} violations"))
}

fn c6_self_progression(rng: &mut ChaCha8Rng) -> Outcome {
    let mut systems = all_ltss(2, 2);
    for n in 0..=3 {
        systems.push(build_t(n).lts);
    }
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let d = rng.gen_range(0.15..0.5);
        systems.push(random_lts(rng, n, 2, d));
    }
    for _ in 0..100 {
        systems.push(random_small_lts(rng, 8));
    }
    let (mut enumerated, mut violations) = (0, 0);
    for lts in &systems {
        let b = compute_strata(lts).bisimilarity().clone();
        if !naive_progresses(lts, &b, &b) {
            violations += 1;
        }
        if lts.n_states() <= 3 {
            enumerated += 1;
            if union_where(lts.n_states(), |x| naive_progresses(lts, x, x)) != b {
                violations += 1;
            }
        }
    }
    outcome(
        violations,
        format!("{} systems ({enumerated} enumerated), {violations} violations", systems.len()),
    )
}

fn c7_lattice_coincidence(rng: &mut ChaCha8Rng) -> Outcome {
    let lattices = vec![
        ("chain2", FiniteLattice::chain(2).unwrap()),
        ("chain3", FiniteLattice::chain(3).unwrap()),
        ("chain4", FiniteLattice::chain(4).unwrap()),
        ("M2", FiniteLattice::diamond()),
        ("P({0,1})", FiniteLattice::powerset(2, |i| format!("{i:02b}")).unwrap()),
    ];
    let (mut checked, mut violations, mut distinct) = (0, 0, 0);
    for (_, l) in &lattices {
        let mut seen = HashSet::new();
        for i in 0..40 {
            let p: LatticeProgression = if i % 2 == 0 {
                random_progression(rng, l)
            } else {
                progression_of_random_monotone(rng, l)
            };
            if seen.insert(p.rel().clone()) {
                distinct += 1;
            }
            let chain = z_chain(l, &p);
            for mode in [Mode::RMonotone, Mode::Compatible] {
                let res = brute_force_largest(l, &p, mode).unwrap();
                checked += 1;
                let companion: Vec<_> = (0..l.len()).map(|x| companion_at(l, &chain, x)).collect();
                if res.map != companion || !res.join_in_class {
                    violations += 1;
                }
            }
        }
    }
    outcome(
        violations,
        format!(
            "{} lattices × 40 progressions ({distinct} distinct), {checked} comparisons, {violations} discrepancies",
            lattices.len()
        ),
    )
}

fn c8_bridge() -> Outcome {
    let mut systems = all_ltss(2, 1);
    for n in 0..=2 {
        systems.push(build_t(n).lts);
    }
    let mut b = Lts::builder(3);
    b.transition(0, "a", 0).unwrap();
    b.transition(1, "a", 2).unwrap();
    b.transition(2, "a", 1).unwrap();
    systems.push(b.build().unwrap());
    let mut b = Lts::builder(3);
    b.transition(0, "a", 1).unwrap();
    b.transition(0, "b", 2).unwrap();
    b.transition(1, "a", 1).unwrap();
    systems.push(b.build().unwrap());

    let (mut elements, mut violations) = (0, 0);
    for lts in &systems {
        let seq = compute_strata(lts);
        let (l, p) = lts_to_lattice(lts, 3).unwrap();
        let chain = z_chain(&l, &p);
        for (e, r) in all_relations(lts.n_states()).enumerate() {
            elements += 1;
            if companion_at(&l, &chain, e) != relation_to_element(&lrf(&seq, &r).unwrap()) {
                violations += 1;
            }
            if s_of(&l, &p, e) != relation_to_element(&largest_progressing_to(lts, &r).unwrap()) {
                violations += 1;
            }
        }
    }
    outcome(
        violations,
        format!("{} systems, {elements} lattice elements, {violations} discrepancies", systems.len()),
    )
}

fn c9_demo() -> Outcome {
    // 0: deadlock, 1: a-loop, 2 <-> 3: two-state a-cycle
    let mut b = Lts::builder(4);
    b.transition(1, "a", 1).unwrap();
    b.transition(2, "a", 3).unwrap();
    b.transition(3, "a", 2).unwrap();
    let lts = b.build().unwrap();
    let accept = check_companion(&lts, &Relation::from_pairs(4, [(1, 2)]).unwrap()).unwrap();
    let reject = check_companion(&lts, &Relation::from_pairs(4, [(0, 1)]).unwrap()).unwrap();
    let bisim = compute_strata(&lts).bisimilarity().clone();
    let ok = accept.conclusion == Conclusion::ContainedInBisimilarity
        && accept.cross_check
        && bisim.contains(1, 2)
        && reject.conclusion == Conclusion::Inconclusive
        && !reject.progression_holds
        && !reject.cross_check
        && !bisim.contains(0, 1)
        && progresses(&lts, &Relation::from_pairs(4, [(1, 2)]).unwrap(), &bisim).unwrap();
    Outcome {
        ok,
        detail: format!(
            "accept: {:?}/cross_check {}; reject: {:?}/cross_check {}",
            accept.conclusion, accept.cross_check, reject.conclusion, reject.cross_check
        ),
    }
}

fn c10_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_upto"))
            .args(["verify", "--seed", "42", "--samples", "1000"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let ok = a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    Outcome {
        ok,
        detail: format!("{} bytes, identical = {}", a.stdout.len(), a.stdout == b.stdout),
    }
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_260_101);
    let criteria: Vec<(&str, Outcome)> = vec![
        ("1 gallery strata", timed(Some(Duration::from_secs(5)), c1_gallery)),
        ("2 strata oracle equivalence", timed(None, || c2_strata_oracle(&mut rng))),
        ("3 LRF respectfulness", timed(Some(Duration::from_secs(60)), || c3_lrf_respectful(&mut rng))),
        ("4 LRF is largest", timed(None, || c4_lrf_largest(&mut rng))),
        ("5 sound-relation fixpoint", timed(None, || c5_sound_fixpoint(&mut rng))),
        ("6 self-progression of ∼_ε", timed(None, || c6_self_progression(&mut rng))),
        (
            "7 lattice companion coincidence",
            timed(Some(Duration::from_secs(60)), || c7_lattice_coincidence(&mut rng)),
        ),
        ("8 bridge to relation lattice", timed(None, c8_bridge)),
        ("9 end-to-end proof demo", timed(None, c9_demo)),
        ("10 verify determinism", timed(None, c10_determinism)),
    ];
    let mut failed = 0;
    for (name, o) in &criteria {
        println!("[{}] {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.ok);
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
