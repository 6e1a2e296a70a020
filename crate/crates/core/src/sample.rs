//! Seeded generators for systems, relations, and lattice progressions.

use rand::Rng;

use crate::lattice::{close_to_progression, Elem, FiniteLattice, LatticeProgression};
use crate::lts::Lts;
use crate::progress::pair_progresses;
use crate::relation::Relation;

const LABELS: [&str; 4] = ["a", "b", "c", "d"];

/// Each possible transition is present independently with probability `density`.
pub fn random_lts<R: Rng>(rng: &mut R, n_states: usize, n_labels: usize, density: f64) -> Lts {
    assert!(n_labels <= LABELS.len());
    let mut b = Lts::builder(n_states);
    for s in 0..n_states {
        for label in &LABELS[..n_labels] {
            for t in 0..n_states {
                if rng.gen_bool(density) {
                    b.transition(s, label, t).expect("in range");
                }
            }
        }
    }
    b.build().expect("generated system is well-formed")
}

pub fn random_relation<R: Rng>(rng: &mut R, n: usize, density: f64) -> Relation {
    let mut r = Relation::empty(n);
    for a in 0..n {
        for b in 0..n {
            if rng.gen_bool(density) {
                r.insert(a, b);
            }
        }
    }
    r
}

/// Keeps each pair of `r` with probability `keep`.
pub fn random_subrelation<R: Rng>(rng: &mut R, r: &Relation, keep: f64) -> Relation {
    let mut out = Relation::empty(r.n());
    for (a, b) in r.pairs() {
        if rng.gen_bool(keep) {
            out.insert(a, b);
        }
    }
    out
}

/// Adds each missing pair with probability `extra`.
pub fn random_superrelation<R: Rng>(rng: &mut R, r: &Relation, extra: f64) -> Relation {
    let noise = random_relation(rng, r.n(), extra);
    r.union(&noise).expect("same size")
}

/// A pair `(r, s)` with `r ⊆ s` and `r ↣ s`.
///
/// `r` is drawn at random and restricted to pairs whose states enable the
/// same labels (no other pair can progress anywhere). `s` then receives, for
/// every move of either side, one randomly chosen matching derivative pair,
/// plus `r` itself and some random noise.
pub fn respectful_sample<R: Rng>(rng: &mut R, lts: &Lts, density: f64) -> (Relation, Relation) {
    let n = lts.n_states();
    let full = Relation::full(n);
    let mut r = Relation::empty(n);
    for (p, q) in random_relation(rng, n, density).pairs() {
        if pair_progresses(lts, p, q, &full) {
            r.insert(p, q);
        }
    }
    let mut s = r.clone();
    for (p, q) in r.pairs() {
        for &(label, p2) in lts.outgoing(p) {
            let answers: Vec<_> = lts.successors(q, label).collect();
            s.insert(p2, answers[rng.gen_range(0..answers.len())]);
        }
        for &(label, q2) in lts.outgoing(q) {
            let answers: Vec<_> = lts.successors(p, label).collect();
            s.insert(answers[rng.gen_range(0..answers.len())], q2);
        }
    }
    let s = random_superrelation(rng, &s, density / 2.0);
    (r, s)
}

/// Every relation on `n ≤ 3` states, by mask.
pub fn all_relations(n: usize) -> impl Iterator<Item = Relation> {
    assert!(n <= 3, "2^(n²) relations only enumerable for n ≤ 3");
    (0..1u64 << (n * n)).map(move |m| Relation::from_mask(n, m))
}

/// All `2^(n²·labels)` systems with `n` states over the first `n_labels`
/// labels.
pub fn all_ltss(n: usize, n_labels: usize) -> Vec<Lts> {
    let slots = n * n * n_labels;
    assert!(slots <= 16);
    (0..1u32 << slots)
        .map(|mask| {
            let mut b = Lts::builder(n);
            for bit in 0..slots {
                if mask >> bit & 1 == 1 {
                    let (s, rest) = (bit / (n * n_labels), bit % (n * n_labels));
                    b.transition(s, LABELS[rest / n], rest % n).expect("in range");
                }
            }
            b.build().expect("well-formed")
        })
        .collect()
}

/// Closes a sparse random seed into a progression.
pub fn random_progression<R: Rng>(rng: &mut R, l: &FiniteLattice) -> LatticeProgression {
    let n = l.len();
    let mut seed = Relation::empty(n);
    for _ in 0..rng.gen_range(0..=2) {
        seed.insert(rng.gen_range(0..n), rng.gen_range(0..n));
    }
    close_to_progression(l, &seed).expect("seed sized to lattice")
}

/// The progression `{(a, b) | a ≤ s(b)}` of a random monotone `s`.
pub fn progression_of_random_monotone<R: Rng>(rng: &mut R, l: &FiniteLattice) -> LatticeProgression {
    let n = l.len();
    let g: Vec<Elem> = (0..n).map(|_| rng.gen_range(0..n)).collect();
    let s: Vec<Elem> = (0..n)
        .map(|x| l.join_all(l.down_set(x).ones().map(|y| g[y])))
        .collect();
    let mut rel = Relation::empty(n);
    for (b, &sb) in s.iter().enumerate() {
        for a in l.down_set(sb).ones() {
            rel.insert(a, b);
        }
    }
    LatticeProgression::new(l, rel).expect("monotone maps induce progressions")
}
