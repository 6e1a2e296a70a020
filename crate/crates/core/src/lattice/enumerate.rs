//! Brute-force oracles over every function `A → A` of a tiny lattice.

use super::progression::{compatible_with, is_monotone, is_r_monotone, s_table};
use super::{Elem, FiniteLattice, LatticeProgression};
use crate::error::{Error, Result};

/// Largest lattice size the enumerators accept (`5^5 = 3125` functions).
pub const MAX_ENUM_ELEMENTS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// All functions that are monotone w.r.t. `≤ ∩ R`.
    RMonotone,
    /// Monotone functions with `f ∘ s_R ≤ s_R ∘ f`.
    Compatible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargestFunction {
    /// Pointwise join of every function in the class.
    pub map: Vec<Elem>,
    pub candidates: usize,
    pub survivors: usize,
    /// Whether `map` itself belongs to the class.
    pub join_in_class: bool,
}

fn check_size(l: &FiniteLattice) -> Result<()> {
    if l.len() > MAX_ENUM_ELEMENTS {
        return Err(Error::TooLarge {
            what: "lattice",
            size: l.len(),
            cap: MAX_ENUM_ELEMENTS,
        });
    }
    Ok(())
}

/// Calls `visit` on every function `0..n → 0..n` in lexicographic order.
fn for_each_function(n: usize, mut visit: impl FnMut(&[Elem])) -> usize {
    let mut f = vec![0; n];
    let mut count = 0;
    loop {
        visit(&f);
        count += 1;
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

struct Classifier<'a> {
    l: &'a FiniteLattice,
    p: &'a LatticeProgression,
    s: Vec<Elem>,
}

impl<'a> Classifier<'a> {
    fn new(l: &'a FiniteLattice, p: &'a LatticeProgression) -> Self {
        Classifier { l, p, s: s_table(l, p) }
    }

    fn r_monotone(&self, f: &[Elem]) -> bool {
        is_r_monotone(self.l, self.p, f)
    }

    fn compatible(&self, f: &[Elem]) -> bool {
        is_monotone(self.l, f) && compatible_with(self.l, &self.s, f)
    }

    fn member(&self, mode: Mode, f: &[Elem]) -> bool {
        match mode {
            Mode::RMonotone => self.r_monotone(f),
            Mode::Compatible => self.compatible(f),
        }
    }
}

/// Enumerates every function, keeps those in `mode`'s class, and joins them
/// pointwise.
pub fn brute_force_largest(
    l: &FiniteLattice,
    p: &LatticeProgression,
    mode: Mode,
) -> Result<LargestFunction> {
    check_size(l)?;
    let n = l.len();
    let cls = Classifier::new(l, p);
    let mut map = vec![l.bottom(); n];
    let mut survivors = 0;
    let candidates = for_each_function(n, |f| {
        if cls.member(mode, f) {
            survivors += 1;
            for (acc, &y) in map.iter_mut().zip(f) {
                *acc = l.join(*acc, y);
            }
        }
    });
    let join_in_class = cls.member(mode, &map);
    Ok(LargestFunction {
        map,
        candidates,
        survivors,
        join_in_class,
    })
}

/// Monotone functions that land in exactly one of the two classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Separation {
    pub r_monotone_not_compatible: Option<Vec<Elem>>,
    pub compatible_not_r_monotone: Option<Vec<Elem>>,
}

impl Separation {
    pub fn found(&self) -> bool {
        self.r_monotone_not_compatible.is_some() || self.compatible_not_r_monotone.is_some()
    }
}

/// Searches the monotone functions for the first (lexicographic) witness in
/// each direction.
pub fn find_separating_function(l: &FiniteLattice, p: &LatticeProgression) -> Result<Separation> {
    check_size(l)?;
    let cls = Classifier::new(l, p);
    let mut sep = Separation::default();
    for_each_function(l.len(), |f| {
        if !is_monotone(l, f) {
            return;
        }
        let (rm, cp) = (cls.r_monotone(f), compatible_with(l, &cls.s, f));
        if rm && !cp && sep.r_monotone_not_compatible.is_none() {
            sep.r_monotone_not_compatible = Some(f.to_vec());
        }
        if cp && !rm && sep.compatible_not_r_monotone.is_none() {
            sep.compatible_not_r_monotone = Some(f.to_vec());
        }
    });
    Ok(sep)
}
