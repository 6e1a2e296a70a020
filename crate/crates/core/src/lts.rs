//! Finite labelled transition systems.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

/// Dense index of a label inside one [`Lts`].
pub type LabelId = usize;
/// Dense index of a state inside one [`Lts`].
pub type StateId = usize;

/// An action label. Equality is textual.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        if text.is_empty() {
            return Err(Error::EmptyLabel);
        }
        Ok(Label(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// A single transition `source --label--> target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: StateId,
    pub label: LabelId,
    pub target: StateId,
}

/// A finite labelled transition system.
///
/// Labels are indexed in the order of their text, and each state's outgoing
/// transitions are sorted by `(label, target)` without duplicates, so every
/// iteration over an `Lts` is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lts {
    state_names: Vec<String>,
    labels: Vec<Label>,
    transitions: Vec<Vec<(LabelId, StateId)>>,
    initial: StateId,
}

impl Lts {
    /// States named `"0"`, `"1"`, ...
    pub fn builder(n_states: usize) -> LtsBuilder {
        LtsBuilder::new((0..n_states).map(|i| i.to_string()).collect())
    }

    pub fn builder_named(state_names: Vec<String>) -> LtsBuilder {
        LtsBuilder::new(state_names)
    }

    pub fn n_states(&self) -> usize {
        self.state_names.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn state_name(&self, s: StateId) -> &str {
        &self.state_names[s]
    }

    pub fn state_index(&self, name: &str) -> Option<StateId> {
        self.state_names.iter().position(|n| n == name)
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, id: LabelId) -> &Label {
        &self.labels[id]
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    /// Outgoing transitions of `s` as `(label, target)`, sorted.
    pub fn outgoing(&self, s: StateId) -> &[(LabelId, StateId)] {
        &self.transitions[s]
    }

    /// Targets of `s` under `label`, ascending.
    pub fn successors(&self, s: StateId, label: LabelId) -> impl Iterator<Item = StateId> + '_ {
        let out = &self.transitions[s];
        let lo = out.partition_point(|&(l, _)| l < label);
        let hi = out.partition_point(|&(l, _)| l <= label);
        out[lo..hi].iter().map(|&(_, t)| t)
    }

    pub fn transitions(&self) -> impl Iterator<Item = Transition> + '_ {
        self.transitions.iter().enumerate().flat_map(|(source, out)| {
            out.iter().map(move |&(label, target)| Transition {
                source,
                label,
                target,
            })
        })
    }

    pub fn n_transitions(&self) -> usize {
        self.transitions.iter().map(Vec::len).sum()
    }

    pub fn is_deadlocked(&self, s: StateId) -> bool {
        self.transitions[s].is_empty()
    }
}

/// Incremental constructor for [`Lts`]; labels are interned by text.
#[derive(Debug, Clone)]
pub struct LtsBuilder {
    state_names: Vec<String>,
    labels: Vec<Label>,
    label_ids: HashMap<Label, LabelId>,
    transitions: Vec<BTreeSet<(LabelId, StateId)>>,
    initial: StateId,
}

impl LtsBuilder {
    fn new(state_names: Vec<String>) -> Self {
        let n = state_names.len();
        LtsBuilder {
            state_names,
            labels: Vec::new(),
            label_ids: HashMap::new(),
            transitions: vec![BTreeSet::new(); n],
            initial: 0,
        }
    }

    pub fn initial(&mut self, s: StateId) -> Result<&mut Self> {
        self.check_state(s)?;
        self.initial = s;
        Ok(self)
    }

    /// Interns `text` and returns its provisional index.
    pub fn label(&mut self, text: &str) -> Result<LabelId> {
        let label = Label::new(text)?;
        if let Some(&id) = self.label_ids.get(&label) {
            return Ok(id);
        }
        let id = self.labels.len();
        self.labels.push(label.clone());
        self.label_ids.insert(label, id);
        Ok(id)
    }

    pub fn transition(&mut self, source: StateId, label: &str, target: StateId) -> Result<&mut Self> {
        self.check_state(source)?;
        self.check_state(target)?;
        let l = self.label(label)?;
        self.transitions[source].insert((l, target));
        Ok(self)
    }

    fn check_state(&self, s: StateId) -> Result<()> {
        let n = self.state_names.len();
        if s < n {
            Ok(())
        } else {
            Err(Error::StateOutOfRange { index: s, n_states: n })
        }
    }

    pub fn build(self) -> Result<Lts> {
        let mut seen = BTreeSet::new();
        for name in &self.state_names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateStateName(name.clone()));
            }
        }
        if self.initial >= self.state_names.len() && !self.state_names.is_empty() {
            return Err(Error::StateOutOfRange {
                index: self.initial,
                n_states: self.state_names.len(),
            });
        }

        // Re-index labels in text order.
        let mut order: Vec<LabelId> = (0..self.labels.len()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        let mut remap = vec![0; self.labels.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let labels = order.iter().map(|&old| self.labels[old].clone()).collect();
        let transitions = self
            .transitions
            .into_iter()
            .map(|set| {
                let mut v: Vec<_> = set.into_iter().map(|(l, t)| (remap[l], t)).collect();
                v.sort_unstable();
                v
            })
            .collect();

        Ok(Lts {
            state_names: self.state_names,
            labels,
            transitions,
            initial: self.initial,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_sorted_by_text_and_interned() {
        let mut b = Lts::builder(2);
        b.transition(0, "z", 1).unwrap();
        b.transition(0, "a", 1).unwrap();
        b.transition(1, "z", 0).unwrap();
        let lts = b.build().unwrap();
        assert_eq!(lts.labels().len(), 2);
        assert_eq!(lts.label(0).as_str(), "a");
        assert_eq!(lts.outgoing(0), &[(0, 1), (1, 1)]);
    }

    #[test]
    fn duplicate_transitions_collapse() {
        let mut b = Lts::builder(2);
        b.transition(0, "a", 1).unwrap();
        b.transition(0, "a", 1).unwrap();
        assert_eq!(b.build().unwrap().n_transitions(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        let mut b = Lts::builder(2);
        assert!(b.transition(0, "a", 2).is_err());
        assert_eq!(b.transition(0, "", 1).unwrap_err(), Error::EmptyLabel);
        let dup = Lts::builder_named(vec!["x".into(), "x".into()]).build();
        assert_eq!(dup.unwrap_err(), Error::DuplicateStateName("x".into()));
    }

    #[test]
    fn successors_by_label() {
        let mut b = Lts::builder(3);
        b.transition(0, "a", 2).unwrap();
        b.transition(0, "b", 1).unwrap();
        b.transition(0, "a", 1).unwrap();
        let lts = b.build().unwrap();
        assert_eq!(lts.successors(0, 0).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(lts.successors(0, 1).collect::<Vec<_>>(), vec![1]);
        assert!(lts.is_deadlocked(2));
    }
}
