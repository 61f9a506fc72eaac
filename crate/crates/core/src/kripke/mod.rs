//! Relational models: extraction from table models, forcing, and a bounded
//! brute-force search for countermodels.

mod extract;
mod oracle;

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use crate::formula::Formula;
use crate::logics::{FrameProp, FrameProps};

pub use extract::{frame_closure, to_kripke};
pub use oracle::{oracle_decide, oracle_decide_with, OracleVerdict, MAX_MODEL_BITS};

/// An accessibility relation on worlds `0..len`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    successors: Vec<FixedBitSet>,
}

impl Frame {
    pub fn empty(worlds: usize) -> Frame {
        Frame {
            successors: vec![FixedBitSet::with_capacity(worlds); worlds],
        }
    }

    pub fn full(worlds: usize) -> Frame {
        let mut f = Frame::empty(worlds);
        for s in &mut f.successors {
            s.insert_range(..);
        }
        f
    }

    pub fn from_pairs(worlds: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Frame {
        let mut f = Frame::empty(worlds);
        for (u, v) in pairs {
            f.insert(u, v);
        }
        f
    }

    pub fn len(&self) -> usize {
        self.successors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.successors.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.successors[u].contains(v)
    }

    /// Adds `(u, v)`, returning whether it was new.
    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        !self.successors[u].put(v)
    }

    pub fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.successors[u].ones()
    }

    pub fn successor_set(&self, u: usize) -> &FixedBitSet {
        &self.successors[u]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|u| self.successors(u).map(move |v| (u, v)))
            .collect()
    }

    pub fn is_subset(&self, other: &Frame) -> bool {
        self.len() == other.len()
            && self
                .successors
                .iter()
                .zip(&other.successors)
                .all(|(a, b)| a.is_subset(b))
    }

    pub fn is_serial(&self) -> bool {
        self.successors.iter().all(|s| !s.is_clear())
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|u| self.contains(u, u))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().into_iter().all(|(u, v)| self.contains(v, u))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.len()).all(|u| {
            self.successors(u)
                .all(|v| self.successors[v].is_subset(&self.successors[u]))
        })
    }

    pub fn is_euclidean(&self) -> bool {
        (0..self.len()).all(|u| {
            self.successors(u)
                .all(|v| self.successors[u].is_subset(&self.successors[v]))
        })
    }

    pub fn satisfies(&self, prop: FrameProp) -> bool {
        match prop {
            FrameProp::Serial => self.is_serial(),
            FrameProp::Reflexive => self.is_reflexive(),
            FrameProp::Symmetric => self.is_symmetric(),
            FrameProp::Transitive => self.is_transitive(),
            FrameProp::Euclidean => self.is_euclidean(),
        }
    }

    pub fn satisfies_all(&self, props: FrameProps) -> bool {
        props.iter().all(|p| self.satisfies(p))
    }
}

impl std::fmt::Debug for Frame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// Worlds, accessibility, and the worlds where each atom holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KripkeModel {
    frame: Frame,
    valuation: BTreeMap<String, FixedBitSet>,
}

impl KripkeModel {
    pub fn new(frame: Frame) -> KripkeModel {
        KripkeModel {
            frame,
            valuation: BTreeMap::new(),
        }
    }

    pub fn worlds(&self) -> usize {
        self.frame.len()
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Declares `atom`, false everywhere until set.
    pub fn add_atom(&mut self, atom: &str) {
        let n = self.worlds();
        self.valuation
            .entry(atom.to_string())
            .or_insert_with(|| FixedBitSet::with_capacity(n));
    }

    pub fn set_atom(&mut self, atom: &str, world: usize, value: bool) {
        self.add_atom(atom);
        self.valuation
            .get_mut(atom)
            .expect("declared above")
            .set(world, value);
    }

    /// Declared atoms in name order.
    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.valuation.keys().map(String::as_str)
    }

    /// Truth of `atom` at `world`; undeclared atoms are false.
    pub fn atom(&self, atom: &str, world: usize) -> bool {
        self.valuation
            .get(atom)
            .is_some_and(|worlds| worlds.contains(world))
    }

    pub fn true_atoms(&self, world: usize) -> Vec<&str> {
        self.atoms().filter(|a| self.atom(a, world)).collect()
    }

    /// The submodel of worlds reachable from `root`, renumbered breadth-first
    /// so that `root` becomes world 0. Also returns the original index of
    /// each new world.
    pub fn generated(&self, root: usize) -> (KripkeModel, Vec<usize>) {
        let mut order = vec![root];
        let mut seen = FixedBitSet::with_capacity(self.worlds());
        seen.insert(root);
        let mut next = 0;
        while next < order.len() {
            for v in self.frame.successors(order[next]) {
                if !seen.put(v) {
                    order.push(v);
                }
            }
            next += 1;
        }
        let mut new_index = vec![usize::MAX; self.worlds()];
        for (i, &w) in order.iter().enumerate() {
            new_index[w] = i;
        }
        let pairs = order
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| self.frame.successors(w).map(move |v| (i, v)))
            .map(|(i, v)| (i, new_index[v]));
        let mut sub = KripkeModel::new(Frame::from_pairs(order.len(), pairs));
        for atom in self.atoms() {
            sub.add_atom(atom);
            for (i, &w) in order.iter().enumerate() {
                sub.set_atom(atom, i, self.atom(atom, w));
            }
        }
        (sub, order)
    }
}

/// Standard forcing: `bot` never holds, `->` is classical and `[]f` holds
/// when `f` holds at every successor.
pub fn forces(model: &KripkeModel, world: usize, f: &Formula) -> bool {
    match f {
        Formula::Atom(name) => model.atom(name, world),
        Formula::Falsum => false,
        Formula::Implies(a, b) => !forces(model, world, a) || forces(model, world, b),
        Formula::Box(a) => model.frame.successors(world).all(|v| forces(model, v, a)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    #[test]
    fn generated_submodel_keeps_forcing() {
        let mut m = KripkeModel::new(Frame::from_pairs(4, [(0, 0), (1, 3), (3, 1), (3, 2)]));
        m.set_atom("p", 2, true);
        let (sub, order) = m.generated(1);
        assert_eq!(order, [1, 3, 2]);
        assert_eq!(sub.frame().pairs(), [(0, 1), (1, 0), (1, 2)]);
        for (f, w) in [("<><>p", 1), ("[]p", 3), ("[]<>p", 1)] {
            let f = parse(f).unwrap();
            assert_eq!(
                forces(&sub, order.iter().position(|&x| x == w).unwrap(), &f),
                forces(&m, w, &f)
            );
        }
    }

    #[test]
    fn vacuous_box() {
        let m = KripkeModel::new(Frame::empty(1));
        assert!(forces(&m, 0, &parse("[]p").unwrap()));
    }

    #[test]
    fn t_fails_on_irreflexive_step() {
        let mut m = KripkeModel::new(Frame::from_pairs(2, [(0, 1)]));
        m.set_atom("p", 0, false);
        m.set_atom("p", 1, true);
        assert!(!forces(&m, 0, &parse("[]p -> p").unwrap()));
        assert!(forces(&m, 0, &parse("p -> p").unwrap()));
        assert!(forces(&m, 1, &parse("p -> p").unwrap()));
    }

    #[test]
    fn frame_predicates() {
        let chain = Frame::from_pairs(3, [(0, 1), (1, 2)]);
        assert!(!chain.is_transitive());
        assert!(!chain.is_serial());
        let closed = Frame::from_pairs(3, [(0, 1), (1, 2), (0, 2)]);
        assert!(closed.is_transitive());
        assert!(!closed.is_euclidean());
        let full = Frame::full(3);
        for p in FrameProp::ALL {
            assert!(full.satisfies(p));
        }
        assert!(Frame::from_pairs(2, [(0, 1), (1, 1)]).is_euclidean());
        assert!(!Frame::from_pairs(2, [(0, 1)]).is_symmetric());
    }
}
