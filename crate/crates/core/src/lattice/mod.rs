//! Progressions and companions on finite complete lattices.
//!
//! A finite lattice is stored with its order as up-set / down-set bit rows and
//! with binary join and meet tables. Arbitrary joins and meets are folds over
//! those tables, with `⋁∅ = ⊥` and `⋀∅ = ⊤`.

mod bridge;
mod enumerate;
mod progression;

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use bridge::{element_to_relation, lts_to_lattice, relation_to_element, MAX_BRIDGE_STATES};
pub use enumerate::{
    brute_force_largest, find_separating_function, LargestFunction, Mode, Separation,
    MAX_ENUM_ELEMENTS,
};
pub use progression::{
    close_to_progression, companion_at, companion_table, is_compatible, is_monotone,
    is_progression, is_r_monotone, s_of, s_table, z_chain, LatticeChain, LatticeProgression,
    ProgressionVerdict, ProgressionViolation,
};

/// Element index inside a [`FiniteLattice`].
pub type Elem = usize;

/// Unvalidated lattice input: element names and order pairs `a ≤ b`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LatticeCandidate {
    pub elements: Vec<String>,
    pub leq: Vec<(Elem, Elem)>,
}

impl LatticeCandidate {
    /// Reflexive-transitive closure of the given pairs (for cover-pair input).
    pub fn closed(mut self) -> Self {
        let n = self.elements.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            row.insert(i);
        }
        for &(a, b) in &self.leq {
            if a < n && b < n {
                up[a].insert(b);
            }
        }
        // Warshall
        for k in 0..n {
            let via = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&via);
                }
            }
        }
        let out_of_range = self.leq.iter().copied().filter(|&(a, b)| a >= n || b >= n);
        let mut leq: Vec<_> = out_of_range.collect();
        for (a, row) in up.iter().enumerate() {
            leq.extend(row.ones().map(|b| (a, b)));
        }
        self.leq = leq;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeViolation {
    Empty,
    DuplicateName(String),
    OutOfRange(Elem, Elem),
    NotReflexive(String),
    NotAntisymmetric(String, String),
    NotTransitive(String, String, String),
    NoJoin(String, String),
    NoMeet(String, String),
    NoTop,
    NoBottom,
}

impl fmt::Display for LatticeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LatticeViolation::*;
        match self {
            Empty => write!(f, "no elements"),
            DuplicateName(n) => write!(f, "duplicate element {n:?}"),
            OutOfRange(a, b) => write!(f, "pair ({a},{b}) out of range"),
            NotReflexive(a) => write!(f, "{a} ≰ {a}"),
            NotAntisymmetric(a, b) => write!(f, "{a} ≤ {b} ≤ {a} with {a} ≠ {b}"),
            NotTransitive(a, b, c) => write!(f, "{a} ≤ {b} ≤ {c} but {a} ≰ {c}"),
            NoJoin(a, b) => write!(f, "{a} ∨ {b} missing"),
            NoMeet(a, b) => write!(f, "{a} ∧ {b} missing"),
            NoTop => write!(f, "no top element"),
            NoBottom => write!(f, "no bottom element"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    names: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    join: Vec<Elem>,
    meet: Vec<Elem>,
    top: Elem,
    bottom: Elem,
}

/// The least element of `set` in the order given by `up`, if any.
fn least_of(set: &FixedBitSet, up: &[FixedBitSet]) -> Option<Elem> {
    set.ones().find(|&u| set.is_subset(&up[u]))
}

/// Checks poset axioms, binary joins and meets, top and bottom.
pub fn validate_lattice(candidate: &LatticeCandidate) -> Result<FiniteLattice> {
    let n = candidate.elements.len();
    let names = &candidate.elements;
    let mut violations = Vec::new();
    if n == 0 {
        violations.push(LatticeViolation::Empty);
        return Err(Error::InvalidLattice(violations));
    }
    let mut seen = BTreeSet::new();
    for name in names {
        if !seen.insert(name) {
            violations.push(LatticeViolation::DuplicateName(name.clone()));
        }
    }

    let mut up = vec![FixedBitSet::with_capacity(n); n];
    for &(a, b) in &candidate.leq {
        if a >= n || b >= n {
            violations.push(LatticeViolation::OutOfRange(a, b));
        } else {
            up[a].insert(b);
        }
    }
    for a in 0..n {
        if !up[a].contains(a) {
            violations.push(LatticeViolation::NotReflexive(names[a].clone()));
        }
    }
    for a in 0..n {
        for b in up[a].ones().filter(|&b| b > a) {
            if up[b].contains(a) {
                violations.push(LatticeViolation::NotAntisymmetric(
                    names[a].clone(),
                    names[b].clone(),
                ));
            }
        }
    }
    for a in 0..n {
        for b in up[a].ones() {
            if let Some(c) = up[b].difference(&up[a]).next() {
                violations.push(LatticeViolation::NotTransitive(
                    names[a].clone(),
                    names[b].clone(),
                    names[c].clone(),
                ));
            }
        }
    }
    if !violations.is_empty() {
        return Err(Error::InvalidLattice(violations));
    }

    let mut down = vec![FixedBitSet::with_capacity(n); n];
    for (a, row) in up.iter().enumerate() {
        for b in row.ones() {
            down[b].insert(a);
        }
    }
    let mut join = vec![0; n * n];
    let mut meet = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let mut ub = up[a].clone();
            ub.intersect_with(&up[b]);
            match least_of(&ub, &up) {
                Some(j) => {
                    join[a * n + b] = j;
                    join[b * n + a] = j;
                }
                None => violations.push(LatticeViolation::NoJoin(names[a].clone(), names[b].clone())),
            }
            let mut lb = down[a].clone();
            lb.intersect_with(&down[b]);
            match least_of(&lb, &down) {
                Some(m) => {
                    meet[a * n + b] = m;
                    meet[b * n + a] = m;
                }
                None => violations.push(LatticeViolation::NoMeet(names[a].clone(), names[b].clone())),
            }
        }
    }
    let top = (0..n).find(|&t| down[t].count_ones(..) == n);
    let bottom = (0..n).find(|&b| up[b].count_ones(..) == n);
    if top.is_none() {
        violations.push(LatticeViolation::NoTop);
    }
    if bottom.is_none() {
        violations.push(LatticeViolation::NoBottom);
    }
    if !violations.is_empty() {
        return Err(Error::InvalidLattice(violations));
    }
    Ok(FiniteLattice {
        names: names.clone(),
        up,
        down,
        join,
        meet,
        top: top.unwrap(),
        bottom: bottom.unwrap(),
    })
}

impl FiniteLattice {
    /// The chain `0 < 1 < … < len-1`.
    pub fn chain(len: usize) -> Result<Self> {
        validate_lattice(
            &LatticeCandidate {
                elements: (0..len).map(|i| i.to_string()).collect(),
                leq: (1..len).map(|i| (i - 1, i)).collect(),
            }
            .closed(),
        )
    }

    /// `M2`: `⊥ < x, y < ⊤` with `x`, `y` incomparable.
    pub fn diamond() -> Self {
        let names = ["bot", "x", "y", "top"].map(String::from).to_vec();
        validate_lattice(
            &LatticeCandidate {
                elements: names,
                leq: vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            }
            .closed(),
        )
        .expect("M2 is a lattice")
    }

    /// Subsets of a `bits`-element set under inclusion; element `i` is the
    /// subset with bit mask `i`. Join is union and meet is intersection.
    pub fn powerset(bits: u32, name: impl Fn(usize) -> String) -> Result<Self> {
        const MAX_BITS: u32 = 12;
        if bits > MAX_BITS {
            return Err(Error::TooLarge {
                what: "powerset lattice",
                size: bits as usize,
                cap: MAX_BITS as usize,
            });
        }
        let n = 1usize << bits;
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                if a & b == a {
                    up[a].insert(b);
                    down[b].insert(a);
                }
                join[a * n + b] = a | b;
                meet[a * n + b] = a & b;
            }
        }
        Ok(FiniteLattice {
            names: (0..n).map(name).collect(),
            up,
            down,
            join,
            meet,
            top: n - 1,
            bottom: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.up[a].contains(b)
    }

    /// `{b | a ≤ b}`
    pub fn up_set(&self, a: Elem) -> &FixedBitSet {
        &self.up[a]
    }

    /// `{b | b ≤ a}`
    pub fn down_set(&self, a: Elem) -> &FixedBitSet {
        &self.down[a]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.len() + b]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.len() + b]
    }

    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// All order pairs `a ≤ b`.
    pub fn order_pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        (0..self.len()).flat_map(move |a| self.up[a].ones().map(move |b| (a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain_and_diamond_validate() {
        let c = FiniteLattice::chain(2).unwrap();
        assert_eq!((c.bottom(), c.top()), (0, 1));
        let m2 = FiniteLattice::diamond();
        assert_eq!(m2.join(1, 2), 3);
        assert_eq!(m2.meet(1, 2), 0);
        assert_eq!(m2.join_all([]), 0);
        assert_eq!(m2.meet_all([]), 3);
    }

    #[test]
    fn missing_join_is_reported() {
        let cand = LatticeCandidate {
            elements: vec!["bot".into(), "x".into(), "y".into()],
            leq: vec![(0, 1), (0, 2)],
        }
        .closed();
        match validate_lattice(&cand) {
            Err(Error::InvalidLattice(v)) => {
                assert!(v.contains(&LatticeViolation::NoJoin("x".into(), "y".into())));
                assert!(v.contains(&LatticeViolation::NoTop));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn poset_axioms_are_checked() {
        let cand = LatticeCandidate {
            elements: vec!["a".into(), "b".into()],
            leq: vec![(0, 1), (1, 0)],
        }
        .closed();
        assert!(matches!(validate_lattice(&cand), Err(Error::InvalidLattice(_))));

        let cand = LatticeCandidate {
            elements: vec!["a".into(), "b".into(), "c".into()],
            leq: vec![(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)],
        };
        match validate_lattice(&cand) {
            Err(Error::InvalidLattice(v)) => assert_eq!(
                v,
                vec![LatticeViolation::NotTransitive("a".into(), "b".into(), "c".into())]
            ),
            other => panic!("{other:?}"),
        }
        assert!(validate_lattice(&LatticeCandidate::default()).is_err());
    }

    #[test]
    fn powerset_of_two_is_m2() {
        let p = FiniteLattice::powerset(2, |i| format!("{i:02b}")).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.join(1, 2), 3);
        assert!(p.leq(0, 3) && !p.leq(1, 2));
        let generic = validate_lattice(&LatticeCandidate {
            elements: p.names().to_vec(),
            leq: p.order_pairs().collect(),
        })
        .unwrap();
        assert_eq!(generic, p);
    }
}
