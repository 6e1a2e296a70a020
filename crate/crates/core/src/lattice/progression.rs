use fixedbitset::FixedBitSet;

use super::{Elem, FiniteLattice};
use crate::error::{check_dim, Error, Result};
use crate::relation::Relation;

/// Why a relation on a lattice fails to be a progression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProgressionViolation {
    /// `≤ ∘ R ∘ ≤ ⊆ R` fails: `missing` is forced by `witness ∈ R`.
    Downward { missing: (Elem, Elem), witness: (Elem, Elem) },
    /// `⋁ R b ∉ R b`.
    JoinNotAttained { b: Elem, join: Elem },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgressionVerdict {
    pub holds: bool,
    pub violation: Option<ProgressionViolation>,
}

fn condition_one(l: &FiniteLattice, r: &Relation) -> Option<ProgressionViolation> {
    for a in 0..l.len() {
        let row = r.row(a);
        for b in row.ones() {
            if let Some(b2) = l.up_set(b).difference(row).next() {
                return Some(ProgressionViolation::Downward {
                    missing: (a, b2),
                    witness: (a, b),
                });
            }
        }
        for a2 in l.down_set(a).ones() {
            if let Some(b) = row.difference(r.row(a2)).next() {
                return Some(ProgressionViolation::Downward {
                    missing: (a2, b),
                    witness: (a, b),
                });
            }
        }
    }
    None
}

fn columns(r: &Relation) -> Relation {
    r.converse()
}

fn condition_two(l: &FiniteLattice, r: &Relation) -> Option<ProgressionViolation> {
    let cols = columns(r);
    (0..l.len()).find_map(|b| {
        let join = l.join_all(cols.row(b).ones());
        (!cols.contains(b, join)).then_some(ProgressionViolation::JoinNotAttained { b, join })
    })
}

/// Checks both progression conditions exhaustively.
pub fn is_progression(l: &FiniteLattice, r: &Relation) -> Result<ProgressionVerdict> {
    check_dim(l.len(), r.n())?;
    let violation = condition_one(l, r).or_else(|| condition_two(l, r));
    Ok(ProgressionVerdict {
        holds: violation.is_none(),
        violation,
    })
}

/// A relation on a lattice known to satisfy both progression conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeProgression {
    rel: Relation,
}

impl LatticeProgression {
    pub fn new(l: &FiniteLattice, rel: Relation) -> Result<Self> {
        let v = is_progression(l, &rel)?;
        match v.violation {
            None => Ok(LatticeProgression { rel }),
            Some(ProgressionViolation::Downward { missing, witness }) => Err(Error::NotAProgression(format!(
                "({}, {}) is related, so ({}, {}) must be too",
                l.name(witness.0),
                l.name(witness.1),
                l.name(missing.0),
                l.name(missing.1),
            ))),
            Some(ProgressionViolation::JoinNotAttained { b, join }) => Err(Error::NotAProgression(format!(
                "join {} of the pre-image of {} is not in it",
                l.name(join),
                l.name(b),
            ))),
        }
    }

    pub fn rel(&self) -> &Relation {
        &self.rel
    }

    pub fn into_rel(self) -> Relation {
        self.rel
    }
}

/// Grows `seed` until it is a progression: close under `≤` on both sides,
/// then add `(⋁ R b, b)` for every `b`, and repeat. The relation only grows,
/// so this terminates.
pub fn close_to_progression(l: &FiniteLattice, seed: &Relation) -> Result<LatticeProgression> {
    let n = l.len();
    check_dim(n, seed.n())?;
    let mut rows: Vec<FixedBitSet> = (0..n).map(|a| seed.row(a).clone()).collect();
    loop {
        // right side: rows become up-closed
        for row in rows.iter_mut() {
            let mut closed = row.clone();
            for b in row.ones() {
                closed.union_with(l.up_set(b));
            }
            *row = closed;
        }
        // left side: a' ≤ a inherits row(a)
        let snapshot = rows.clone();
        for (a, row) in snapshot.iter().enumerate() {
            for a2 in l.down_set(a).ones() {
                rows[a2].union_with(row);
            }
        }
        let mut changed = false;
        for b in 0..n {
            let join = l.join_all((0..n).filter(|&a| rows[a].contains(b)));
            if !rows[join].contains(b) {
                rows[join].insert(b);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut rel = Relation::empty(n);
    for (a, row) in rows.iter().enumerate() {
        for b in row.ones() {
            rel.insert(a, b);
        }
    }
    debug_assert!(is_progression(l, &rel).map(|v| v.holds).unwrap_or(false));
    Ok(LatticeProgression { rel })
}

/// `s_R(x) = ⋁ R x`
pub fn s_of(l: &FiniteLattice, p: &LatticeProgression, x: Elem) -> Elem {
    l.join_all((0..l.len()).filter(|&a| p.rel.contains(a, x)))
}

/// `s_R` tabulated over every element.
pub fn s_table(l: &FiniteLattice, p: &LatticeProgression) -> Vec<Elem> {
    let cols = columns(&p.rel);
    (0..l.len()).map(|x| l.join_all(cols.row(x).ones())).collect()
}

/// `z_0 = ⊤`, `z_{k+1} = ⋁ R z_k`, up to the first repetition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeChain {
    pub zs: Vec<Elem>,
    pub stable_index: usize,
}

pub fn z_chain(l: &FiniteLattice, p: &LatticeProgression) -> LatticeChain {
    let s = s_table(l, p);
    let mut zs = vec![l.top()];
    loop {
        let z = *zs.last().unwrap();
        let next = s[z];
        if next == z {
            break;
        }
        debug_assert!(l.leq(next, z), "z-chain must decrease for a progression");
        zs.push(next);
        assert!(zs.len() <= l.len(), "z-chain longer than the lattice");
    }
    let stable_index = zs.len() - 1;
    LatticeChain { zs, stable_index }
}

/// `⋀ {z_k | x ≤ z_k}`
pub fn companion_at(l: &FiniteLattice, chain: &LatticeChain, x: Elem) -> Elem {
    l.meet_all(chain.zs.iter().copied().filter(|&z| l.leq(x, z)))
}

pub fn companion_table(l: &FiniteLattice, chain: &LatticeChain) -> Vec<Elem> {
    (0..l.len()).map(|x| companion_at(l, chain, x)).collect()
}

pub fn is_monotone(l: &FiniteLattice, f: &[Elem]) -> bool {
    l.order_pairs().all(|(a, b)| l.leq(f[a], f[b]))
}

/// Monotone with respect to `≤ ∩ R`: `a ≤ b ∧ a R b ⟹ f(a) ≤ f(b) ∧ f(a) R f(b)`.
pub fn is_r_monotone(l: &FiniteLattice, p: &LatticeProgression, f: &[Elem]) -> bool {
    l.order_pairs()
        .filter(|&(a, b)| p.rel.contains(a, b))
        .all(|(a, b)| l.leq(f[a], f[b]) && p.rel.contains(f[a], f[b]))
}

/// `f ∘ s_R ≤ s_R ∘ f` pointwise.
pub fn is_compatible(l: &FiniteLattice, p: &LatticeProgression, f: &[Elem]) -> bool {
    let s = s_table(l, p);
    compatible_with(l, &s, f)
}

pub(crate) fn compatible_with(l: &FiniteLattice, s: &[Elem], f: &[Elem]) -> bool {
    (0..l.len()).all(|x| l.leq(f[s[x]], s[f[x]]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leq_rel(l: &FiniteLattice) -> Relation {
        Relation::from_pairs(l.len(), l.order_pairs()).unwrap()
    }

    #[test]
    fn full_and_order_are_progressions() {
        for l in [FiniteLattice::chain(3).unwrap(), FiniteLattice::diamond()] {
            assert!(is_progression(&l, &Relation::full(l.len())).unwrap().holds);
            assert!(is_progression(&l, &leq_rel(&l)).unwrap().holds);
        }
    }

    #[test]
    fn top_top_alone_fails_condition_one() {
        let l = FiniteLattice::chain(2).unwrap();
        let r = Relation::from_pairs(2, [(1, 1)]).unwrap();
        let v = is_progression(&l, &r).unwrap();
        assert_eq!(
            v.violation,
            Some(ProgressionViolation::Downward { missing: (0, 1), witness: (1, 1) })
        );
        assert!(LatticeProgression::new(&l, r).is_err());
    }

    #[test]
    fn closure_examples() {
        let l = FiniteLattice::chain(2).unwrap();
        let p = close_to_progression(&l, &Relation::empty(2)).unwrap();
        assert_eq!(p.rel(), &Relation::from_pairs(2, [(0, 0), (0, 1)]).unwrap());

        let le = leq_rel(&l);
        assert_eq!(close_to_progression(&l, &le).unwrap().rel(), &le);
        let full = Relation::full(2);
        assert_eq!(close_to_progression(&l, &full).unwrap().rel(), &full);
    }

    #[test]
    fn chains_for_trivial_progressions() {
        let l = FiniteLattice::diamond();
        for r in [Relation::full(4), leq_rel(&l)] {
            let p = LatticeProgression::new(&l, r).unwrap();
            let c = z_chain(&l, &p);
            assert_eq!(c.zs, vec![l.top()]);
            assert_eq!(c.stable_index, 0);
            assert_eq!(companion_table(&l, &c), vec![l.top(); 4]);
        }
    }

    #[test]
    fn s_of_examples() {
        let l = FiniteLattice::diamond();
        let le = LatticeProgression::new(&l, leq_rel(&l)).unwrap();
        let full = LatticeProgression::new(&l, Relation::full(4)).unwrap();
        for x in 0..4 {
            assert_eq!(s_of(&l, &le, x), x);
            assert_eq!(s_of(&l, &full, x), l.top());
        }
    }

    #[test]
    fn companion_endpoints() {
        let l = FiniteLattice::chain(4).unwrap();
        // s(x) = max(x - 1, 0) gives the chain 3, 2, 1, 0.
        let rel = Relation::from_pairs(4, l.order_pairs().filter(|&(a, b)| a < b || a == 0)).unwrap();
        let p = LatticeProgression::new(&l, rel).unwrap();
        let c = z_chain(&l, &p);
        assert_eq!(c.zs, vec![3, 2, 1, 0]);
        assert_eq!(companion_at(&l, &c, l.top()), l.top());
        assert_eq!(companion_at(&l, &c, l.bottom()), *c.zs.last().unwrap());
        assert_eq!(companion_table(&l, &c), vec![0, 1, 2, 3]);
    }

    #[test]
    fn simple_function_classes() {
        let l = FiniteLattice::diamond();
        let p = close_to_progression(&l, &Relation::from_pairs(4, [(1, 2)]).unwrap()).unwrap();
        let id: Vec<_> = (0..4).collect();
        assert!(is_r_monotone(&l, &p, &id) && is_compatible(&l, &p, &id));
        let bot = vec![l.bottom(); 4];
        assert!(is_r_monotone(&l, &p, &bot) && is_compatible(&l, &p, &bot));
        let top = vec![l.top(); 4];
        assert_eq!(is_compatible(&l, &p, &top), s_of(&l, &p, l.top()) == l.top());
    }
}
