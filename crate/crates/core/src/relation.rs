//! Binary relations on `0..n` stored as dense boolean matrices.
//!
//! Row `i` holds the set `{j | (i, j) ∈ R}`. All operations are exact; binary
//! operations require both operands to share the same carrier size.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{check_dim, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    rows: Vec<FixedBitSet>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            n,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut row = FixedBitSet::with_capacity(n);
        row.insert_range(..);
        Relation {
            n,
            rows: vec![row; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Relation::empty(n);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    /// Builds a relation from pairs; every endpoint must be `< n`.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Relation::empty(n);
        for (a, b) in pairs {
            for idx in [a, b] {
                if idx >= n {
                    return Err(crate::Error::StateOutOfRange { index: idx, n_states: n });
                }
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    /// Decodes a relation from a bit mask where bit `i * n + j` encodes `(i, j)`.
    ///
    /// Only meaningful for `n * n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n * n <= 64);
        let mut r = Relation::empty(n);
        for i in 0..n {
            for j in 0..n {
                if mask >> (i * n + j) & 1 == 1 {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.n * self.n <= 64);
        self.pairs()
            .fold(0u64, |m, (i, j)| m | 1 << (i * self.n + j))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        a < self.n && self.rows[a].contains(b)
    }

    /// Panics if either endpoint is out of range.
    pub fn insert(&mut self, a: usize, b: usize) {
        assert!(a < self.n && b < self.n, "pair ({a},{b}) out of range {}", self.n);
        self.rows[a].insert(b);
    }

    pub fn remove(&mut self, a: usize, b: usize) {
        if a < self.n {
            self.rows[a].set(b, false);
        }
    }

    pub fn row(&self, a: usize) -> &FixedBitSet {
        &self.rows[a]
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_clear())
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.ones().map(move |j| (i, j)))
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (a, b) in out.rows.iter_mut().zip(&other.rows) {
            a.union_with(b);
        }
        Ok(out)
    }

    pub fn intersect(&self, other: &Relation) -> Result<Relation> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (a, b) in out.rows.iter_mut().zip(&other.rows) {
            a.intersect_with(b);
        }
        Ok(out)
    }

    pub fn difference(&self, other: &Relation) -> Result<Relation> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (a, b) in out.rows.iter_mut().zip(&other.rows) {
            a.difference_with(b);
        }
        Ok(out)
    }

    /// Relational composition `self ; other = {(a, c) | ∃b. a self b ∧ b other c}`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        check_dim(self.n, other.n)?;
        let mut out = Relation::empty(self.n);
        for (a, row) in self.rows.iter().enumerate() {
            for b in row.ones() {
                out.rows[a].union_with(&other.rows[b]);
            }
        }
        Ok(out)
    }

    pub fn converse(&self) -> Relation {
        let mut out = Relation::empty(self.n);
        for (a, b) in self.pairs() {
            out.rows[b].insert(a);
        }
        out
    }

    pub fn is_subset(&self, other: &Relation) -> Result<bool> {
        check_dim(self.n, other.n)?;
        Ok(self
            .rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b)))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.contains(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.contains(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self)
            .and_then(|c| c.is_subset(self))
            .unwrap_or(false)
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation[{}]", self.n)?;
        f.debug_set().entries(self.pairs()).finish()
    }
}
