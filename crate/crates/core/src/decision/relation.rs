use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::rows::Rows;
use crate::logics::Logic;
use crate::par::{map_range, Exec};
use crate::values::{TruthValue, TruthValue::*, ValueSet};

const fn s(values: &[TruthValue]) -> ValueSet {
    ValueSet::of(values)
}

/// The explicit successor restriction for `v`, or `None` when every value is allowed.
fn restriction(logic: Logic, v: TruthValue) -> Option<ValueSet> {
    use Logic::*;
    if v.is_stable() {
        return Some(ValueSet::EMPTY);
    }
    let set = match (logic, v) {
        (K, T | NecessaryF) => s(&[T, ContingentT, StableT, ImpossibleT]),
        (K, ImpossibleT | F) => s(&[F, ContingentF, StableF, NecessaryF]),

        (KB | KDB, T) => s(&[T, ContingentT]),
        (KB | KDB, ContingentT) => s(&[T, ContingentT, ContingentF, NecessaryF]),
        (KB | KDB, ImpossibleT) => s(&[ContingentF, NecessaryF]),
        (KB | KDB, NecessaryF) => s(&[ContingentT, ImpossibleT]),
        (KB | KDB, ContingentF) => s(&[F, ContingentF, ContingentT, ImpossibleT]),
        (KB | KDB, F) => s(&[F, ContingentF]),

        (K4, T | NecessaryF) => s(&[T, StableT]),
        (K4, ImpossibleT | F) => s(&[F, StableF]),

        (K5 | KD5, T | NecessaryF) => s(&[T, ContingentT]),
        (K5 | KD5, ContingentT | ContingentF) => s(&[ContingentT, ContingentF]),
        (K5 | KD5, ImpossibleT | F) => s(&[F, ContingentF]),

        (K45 | KD45 | KB5 | KT45, T | NecessaryF) => s(&[T]),
        (K45 | KD45 | KB5 | KT45, ContingentT | ContingentF) => s(&[ContingentT, ContingentF]),
        (K45 | KD45 | KB5 | KT45, ImpossibleT | F) => s(&[F]),

        (KD, T | NecessaryF) => s(&[T, ContingentT, ImpossibleT]),
        (KD, ImpossibleT | F) => s(&[F, ContingentF, NecessaryF]),

        (KD4 | KT4, T | NecessaryF) => s(&[T]),
        (KD4 | KT4, ImpossibleT | F) => s(&[F]),

        (KT | KTB, T) => s(&[T, ContingentT]),
        (KT | KTB, F) => s(&[F, ContingentF]),
        (KTB, ContingentT) => s(&[T, ContingentT, ContingentF]),
        (KTB, ContingentF) => s(&[F, ContingentT, ContingentF]),

        _ => return None,
    };
    Some(set)
}

/// Values a successor may assign to a formula that `v` assigns it. Stable
/// values admit no successors at all.
pub fn allowed_successor(logic: Logic, v: TruthValue) -> ValueSet {
    restriction(logic, v)
        .unwrap_or(ValueSet::ALL)
        .intersect(logic.values())
}

/// Value sets that some successor must hit for `v` to be supported: one
/// designated target for possible values, one undesignated target when the
/// negation is possible.
pub fn support_requirements(logic: Logic, v: TruthValue) -> Vec<ValueSet> {
    let allowed = allowed_successor(logic, v);
    let mut out = Vec::new();
    if ValueSet::P.contains(v) {
        out.push(allowed.intersect(logic.designated()));
    }
    if ValueSet::PN.contains(v) {
        out.push(allowed.intersect(logic.undesignated()));
    }
    out
}

/// Rows grouped by their successor restrictions, with lazily shared bit sets
/// selecting rows by the value at one position.
pub(crate) struct Index {
    /// Class of each row.
    pub class_of: Vec<usize>,
    /// Restricted positions of each class, as ids into `selectors`.
    pub class_keys: Vec<Vec<usize>>,
    pub class_rows: Vec<Vec<usize>>,
    /// Requirement ids per row.
    pub requirements: Vec<Vec<usize>>,
    /// `selectors[id]` holds the rows whose value at some position lies in some set.
    pub selectors: Vec<FixedBitSet>,
}

impl Index {
    pub fn new(logic: Logic, rows: &Rows, exec: Exec) -> Index {
        let mut keys: HashMap<(usize, u8), usize> = HashMap::new();
        let mut wanted: Vec<(usize, ValueSet)> = Vec::new();
        let mut id_of = |pos: usize, set: ValueSet| {
            *keys.entry((pos, set.mask())).or_insert_with(|| {
                wanted.push((pos, set));
                wanted.len() - 1
            })
        };
        let mut classes: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut class_of = Vec::with_capacity(rows.len());
        let mut class_keys = Vec::new();
        let mut class_rows: Vec<Vec<usize>> = Vec::new();
        let mut requirements = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            let mut key = Vec::new();
            let mut reqs = Vec::new();
            for (pos, &v) in row.iter().enumerate() {
                if let Some(set) = restriction(logic, v) {
                    key.push(id_of(pos, set.intersect(logic.values())));
                }
                for req in support_requirements(logic, v) {
                    reqs.push(id_of(pos, req));
                }
            }
            let next = class_keys.len();
            let c = *classes.entry(key.clone()).or_insert(next);
            if c == next {
                class_keys.push(key);
                class_rows.push(Vec::new());
            }
            class_rows[c].push(r);
            class_of.push(c);
            requirements.push(reqs);
        }
        let selectors = map_range(exec, wanted.len(), |id| {
            let (pos, set) = wanted[id];
            let mut bits = FixedBitSet::with_capacity(rows.len());
            for (r, row) in rows.iter().enumerate() {
                if set.contains(row[pos]) {
                    bits.insert(r);
                }
            }
            bits
        });
        Index {
            class_of,
            class_keys,
            class_rows,
            requirements,
            selectors,
        }
    }

    /// Rows among `alive` that rows of class `c` may reach.
    pub fn accepted(&self, c: usize, alive: &FixedBitSet) -> FixedBitSet {
        let mut out = alive.clone();
        for &id in &self.class_keys[c] {
            out.intersect_with(&self.selectors[id]);
        }
        out
    }
}

/// The maximal pairwise relation over a row list: `v R w` iff at every
/// position `w`'s value is an allowed successor of `v`'s. Rows with identical
/// restrictions share one successor set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    class_of: Vec<usize>,
    successors: Vec<FixedBitSet>,
}

impl Relation {
    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn contains(&self, from: usize, to: usize) -> bool {
        self.successor_set(from).contains(to)
    }

    pub fn successor_set(&self, from: usize) -> &FixedBitSet {
        &self.successors[self.class_of[from]]
    }

    pub fn successors(&self, from: usize) -> impl Iterator<Item = usize> + '_ {
        self.successor_set(from).ones()
    }

    pub fn edge_count(&self) -> usize {
        self.class_of
            .iter()
            .map(|&c| self.successors[c].count_ones(..))
            .sum()
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.successors(i).map(move |j| (i, j)))
            .collect()
    }
}

pub fn build_relation_with(logic: Logic, rows: &Rows, exec: Exec) -> Relation {
    let index = Index::new(logic, rows, exec);
    let mut all = FixedBitSet::with_capacity(rows.len());
    all.insert_range(..);
    let successors = map_range(exec, index.class_keys.len(), |c| index.accepted(c, &all));
    Relation {
        class_of: index.class_of,
        successors,
    }
}

pub fn build_relation(logic: Logic, rows: &Rows) -> Relation {
    build_relation_with(logic, rows, Exec::default())
}
