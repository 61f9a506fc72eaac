//! The eight truth values and the distinguished sets built from them.
//!
//! A value qualifies a formula along three axes: whether it is true, whether
//! it is necessary, and whether it is possible. The names follow the ASCII
//! convention used in all I/O: `F`, `f`, `ff`, `fff`, `ttt`, `tt`, `t`, `T`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::formula::Formula;

/// One of the eight truth values, declared in their output order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum TruthValue {
    /// Impossible: `◇¬a ∧ ¬a ∧ □¬a`.
    F = 0,
    /// Contingently false: `◇¬a ∧ ¬a ∧ ◇a`.
    ContingentF = 1,
    /// Stable false: `□a ∧ ¬a ∧ □¬a`.
    StableF = 2,
    /// False but necessary: `□a ∧ ¬a ∧ ◇a`.
    NecessaryF = 3,
    /// True but impossible: `◇¬a ∧ a ∧ □¬a`.
    ImpossibleT = 4,
    /// Stable true: `□a ∧ a ∧ □¬a`.
    StableT = 5,
    /// Contingently true: `◇¬a ∧ a ∧ ◇a`.
    ContingentT = 6,
    /// Necessary: `□a ∧ a ∧ ◇a`.
    T = 7,
}

pub use TruthValue::*;

impl TruthValue {
    pub const ALL: [TruthValue; 8] = [
        F,
        ContingentF,
        StableF,
        NecessaryF,
        ImpossibleT,
        StableT,
        ContingentT,
        T,
    ];

    pub const fn bit(self) -> u8 {
        1 << self as u8
    }

    pub fn from_index(index: u8) -> Option<TruthValue> {
        Self::ALL.get(index as usize).copied()
    }

    pub const fn name(self) -> &'static str {
        match self {
            F => "F",
            ContingentF => "f",
            StableF => "ff",
            NecessaryF => "fff",
            ImpossibleT => "ttt",
            StableT => "tt",
            ContingentT => "t",
            T => "T",
        }
    }

    pub fn is_designated(self) -> bool {
        ValueSet::D.contains(self)
    }

    pub fn is_stable(self) -> bool {
        matches!(self, StableF | StableT)
    }

    pub fn in_set(self, set: NamedSet) -> bool {
        set.values().contains(self)
    }

    /// The modal characterization of this value applied to `a`, desugared.
    ///
    /// Each value is the conjunction `modal_1 ∧ literal ∧ modal_2` where the
    /// literal is `a` or `¬a` and the two modal parts say whether `a` (resp.
    /// `¬a`) is necessary or possible.
    pub fn characterization(self, a: &Formula) -> Formula {
        let not_a = Formula::not(a.clone());
        let dia_not = || Formula::dia(not_a.clone());
        let dia = || Formula::dia(a.clone());
        let boxed = || Formula::boxed(a.clone());
        let box_not = || Formula::boxed(not_a.clone());
        let (first, middle, last) = match self {
            F => (dia_not(), not_a.clone(), box_not()),
            ContingentF => (dia_not(), not_a.clone(), dia()),
            StableF => (boxed(), not_a.clone(), box_not()),
            NecessaryF => (boxed(), not_a.clone(), dia()),
            ImpossibleT => (dia_not(), a.clone(), box_not()),
            StableT => (boxed(), a.clone(), box_not()),
            ContingentT => (dia_not(), a.clone(), dia()),
            T => (boxed(), a.clone(), dia()),
        };
        Formula::and(Formula::and(first, middle), last)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TruthValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TruthValue::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::UnknownValue(s.to_string()))
    }
}

impl Serialize for TruthValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for TruthValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A subset of the eight values, stored as a bit mask indexed by declaration order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValueSet(u8);

impl ValueSet {
    pub const EMPTY: ValueSet = ValueSet(0);
    pub const ALL: ValueSet = ValueSet(0xff);

    /// Designated values.
    pub const D: ValueSet = ValueSet::of(&[T, ContingentT, StableT, ImpossibleT]);
    /// Non-designated values.
    pub const DC: ValueSet = ValueSet::of(&[F, ContingentF, StableF, NecessaryF]);
    /// The formula is necessary.
    pub const N: ValueSet = ValueSet::of(&[T, StableT, NecessaryF, StableF]);
    /// The negation is necessary.
    pub const I: ValueSet = ValueSet::of(&[F, StableF, ImpossibleT, StableT]);
    /// The formula is possible.
    pub const P: ValueSet = ValueSet::of(&[T, ContingentT, NecessaryF, ContingentF]);
    /// The negation is possible.
    pub const PN: ValueSet = ValueSet::of(&[F, ContingentF, ImpossibleT, ContingentT]);
    pub const STABLE: ValueSet = ValueSet::of(&[StableT, StableF]);

    pub const fn of(values: &[TruthValue]) -> ValueSet {
        let mut mask = 0u8;
        let mut i = 0;
        while i < values.len() {
            mask |= values[i].bit();
            i += 1;
        }
        ValueSet(mask)
    }

    pub const fn from_mask(mask: u8) -> ValueSet {
        ValueSet(mask)
    }

    pub const fn mask(self) -> u8 {
        self.0
    }

    pub const fn contains(self, v: TruthValue) -> bool {
        self.0 & v.bit() != 0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn union(self, other: ValueSet) -> ValueSet {
        ValueSet(self.0 | other.0)
    }

    pub const fn intersect(self, other: ValueSet) -> ValueSet {
        ValueSet(self.0 & other.0)
    }

    pub const fn minus(self, other: ValueSet) -> ValueSet {
        ValueSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: ValueSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn insert(&mut self, v: TruthValue) {
        self.0 |= v.bit();
    }

    /// Members in value order.
    pub fn iter(self) -> impl Iterator<Item = TruthValue> {
        TruthValue::ALL
            .into_iter()
            .filter(move |v| self.contains(*v))
    }

    pub fn first(self) -> Option<TruthValue> {
        self.iter().next()
    }

    pub fn names(self) -> Vec<&'static str> {
        self.iter().map(TruthValue::name).collect()
    }
}

impl FromIterator<TruthValue> for ValueSet {
    fn from_iter<I: IntoIterator<Item = TruthValue>>(iter: I) -> Self {
        let mut set = ValueSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(TruthValue::name))
            .finish()
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(", "))
    }
}

impl Serialize for ValueSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.names().serialize(serializer)
    }
}

/// The six named distinguished sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedSet {
    D,
    Dc,
    N,
    I,
    P,
    PN,
}

impl NamedSet {
    pub const ALL: [NamedSet; 6] = [
        NamedSet::D,
        NamedSet::Dc,
        NamedSet::N,
        NamedSet::I,
        NamedSet::P,
        NamedSet::PN,
    ];

    pub const fn values(self) -> ValueSet {
        match self {
            NamedSet::D => ValueSet::D,
            NamedSet::Dc => ValueSet::DC,
            NamedSet::N => ValueSet::N,
            NamedSet::I => ValueSet::I,
            NamedSet::P => ValueSet::P,
            NamedSet::PN => ValueSet::PN,
        }
    }
}

/// Membership of `v` in a named distinguished set.
pub fn member(v: TruthValue, set: NamedSet) -> bool {
    v.in_set(set)
}
