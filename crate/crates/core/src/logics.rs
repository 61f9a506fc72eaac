//! Registry of the fifteen normal modal logics of the modal cube.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::values::{TruthValue::*, ValueSet};

/// Frame conditions, one per characteristic axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameProp {
    /// `d`: serial.
    Serial,
    /// `t`: reflexive.
    Reflexive,
    /// `b`: symmetric.
    Symmetric,
    /// `4`: transitive.
    Transitive,
    /// `5`: euclidean.
    Euclidean,
}

impl FrameProp {
    pub const ALL: [FrameProp; 5] = [
        FrameProp::Serial,
        FrameProp::Reflexive,
        FrameProp::Symmetric,
        FrameProp::Transitive,
        FrameProp::Euclidean,
    ];

    pub const fn axiom_label(self) -> &'static str {
        match self {
            FrameProp::Serial => "d",
            FrameProp::Reflexive => "t",
            FrameProp::Symmetric => "b",
            FrameProp::Transitive => "4",
            FrameProp::Euclidean => "5",
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            FrameProp::Serial => "serial",
            FrameProp::Reflexive => "reflexive",
            FrameProp::Symmetric => "symmetric",
            FrameProp::Transitive => "transitive",
            FrameProp::Euclidean => "euclidean",
        }
    }

    const fn bit(self) -> u8 {
        1 << self as u8
    }
}

/// A set of frame properties.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct FrameProps(u8);

impl FrameProps {
    pub const NONE: FrameProps = FrameProps(0);

    pub const fn of(props: &[FrameProp]) -> FrameProps {
        let mut mask = 0;
        let mut i = 0;
        while i < props.len() {
            mask |= props[i].bit();
            i += 1;
        }
        FrameProps(mask)
    }

    pub const fn contains(self, p: FrameProp) -> bool {
        self.0 & p.bit() != 0
    }

    pub fn iter(self) -> impl Iterator<Item = FrameProp> {
        FrameProp::ALL
            .into_iter()
            .filter(move |p| self.contains(*p))
    }
}

impl fmt::Debug for FrameProps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(FrameProp::axiom_label))
            .finish()
    }
}

/// Logics sharing a value set and, in the extension procedure, similar criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    #[serde(rename = "K*")]
    K,
    #[serde(rename = "KD*")]
    KD,
    #[serde(rename = "KT*")]
    KT,
    #[serde(rename = "KB45")]
    KB45,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::K, Family::KD, Family::KT, Family::KB45];

    /// Admissible truth values of every logic in the family.
    pub const fn values(self) -> ValueSet {
        match self {
            Family::K => ValueSet::ALL,
            Family::KB45 => ValueSet::of(&[F, ContingentF, StableF, StableT, ContingentT, T]),
            Family::KD => ValueSet::of(&[F, ContingentF, NecessaryF, ImpossibleT, ContingentT, T]),
            Family::KT => ValueSet::of(&[F, ContingentF, ContingentT, T]),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::K => "K*",
            Family::KD => "KD*",
            Family::KT => "KT*",
            Family::KB45 => "KB45",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Logic {
    K,
    KB,
    K4,
    K5,
    K45,
    KB5,
    KD,
    KDB,
    KD4,
    KD5,
    KD45,
    KT,
    KTB,
    KT4,
    KT45,
}

const ALIASES: [(&str, Logic); 10] = [
    ("D", Logic::KD),
    ("T", Logic::KT),
    ("B", Logic::KTB),
    ("S4", Logic::KT4),
    ("S5", Logic::KT45),
    ("DB", Logic::KDB),
    ("D4", Logic::KD4),
    ("D5", Logic::KD5),
    ("D45", Logic::KD45),
    ("KB45", Logic::KB5),
];

impl Logic {
    pub const ALL: [Logic; 15] = [
        Logic::K,
        Logic::KB,
        Logic::K4,
        Logic::K5,
        Logic::K45,
        Logic::KB5,
        Logic::KD,
        Logic::KDB,
        Logic::KD4,
        Logic::KD5,
        Logic::KD45,
        Logic::KT,
        Logic::KTB,
        Logic::KT4,
        Logic::KT45,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            Logic::K => "K",
            Logic::KB => "KB",
            Logic::K4 => "K4",
            Logic::K5 => "K5",
            Logic::K45 => "K45",
            Logic::KB5 => "KB5",
            Logic::KD => "KD",
            Logic::KDB => "KDB",
            Logic::KD4 => "KD4",
            Logic::KD5 => "KD5",
            Logic::KD45 => "KD45",
            Logic::KT => "KT",
            Logic::KTB => "KTB",
            Logic::KT4 => "KT4",
            Logic::KT45 => "KT45",
        }
    }

    pub const fn family(self) -> Family {
        match self {
            Logic::K | Logic::KB | Logic::K4 | Logic::K5 | Logic::K45 => Family::K,
            Logic::KD | Logic::KDB | Logic::KD4 | Logic::KD5 | Logic::KD45 => Family::KD,
            Logic::KT | Logic::KTB | Logic::KT4 | Logic::KT45 => Family::KT,
            Logic::KB5 => Family::KB45,
        }
    }

    /// Every frame property that holds in the logic, not just the defining ones.
    pub const fn frame_props(self) -> FrameProps {
        use FrameProp::*;
        match self {
            Logic::K => FrameProps::NONE,
            Logic::KB => FrameProps::of(&[Symmetric]),
            Logic::K4 => FrameProps::of(&[Transitive]),
            Logic::K5 => FrameProps::of(&[Euclidean]),
            Logic::K45 => FrameProps::of(&[Transitive, Euclidean]),
            Logic::KB5 => FrameProps::of(&[Symmetric, Transitive, Euclidean]),
            Logic::KD => FrameProps::of(&[Serial]),
            Logic::KDB => FrameProps::of(&[Serial, Symmetric]),
            Logic::KD4 => FrameProps::of(&[Serial, Transitive]),
            Logic::KD5 => FrameProps::of(&[Serial, Euclidean]),
            Logic::KD45 => FrameProps::of(&[Serial, Transitive, Euclidean]),
            Logic::KT => FrameProps::of(&[Serial, Reflexive]),
            Logic::KTB => FrameProps::of(&[Serial, Reflexive, Symmetric]),
            Logic::KT4 => FrameProps::of(&[Serial, Reflexive, Transitive]),
            Logic::KT45 => FrameProps::of(&[Serial, Reflexive, Symmetric, Transitive, Euclidean]),
        }
    }

    /// The axioms added to `k` at this cube vertex.
    pub const fn defining_axioms(self) -> FrameProps {
        use FrameProp::*;
        match self {
            Logic::KB5 => FrameProps::of(&[Symmetric, Euclidean]),
            Logic::KTB => FrameProps::of(&[Reflexive, Symmetric]),
            Logic::KT4 => FrameProps::of(&[Reflexive, Transitive]),
            Logic::KT => FrameProps::of(&[Reflexive]),
            Logic::KT45 => FrameProps::of(&[Reflexive, Symmetric, Transitive, Euclidean]),
            other => other.frame_props(),
        }
    }

    pub const fn values(self) -> ValueSet {
        self.family().values()
    }

    pub const fn designated(self) -> ValueSet {
        self.values().intersect(ValueSet::D)
    }

    pub const fn undesignated(self) -> ValueSet {
        self.values().intersect(ValueSet::DC)
    }

    pub const fn has(self, p: FrameProp) -> bool {
        self.frame_props().contains(p)
    }

    /// Labelled axiom schemata over metavariables `A` and `B`, starting with `k`.
    pub fn axioms(self) -> Vec<(&'static str, Formula)> {
        let mut out = vec![("k", axiom_schema("k"))];
        for prop in self.defining_axioms().iter() {
            out.push((prop.axiom_label(), axiom_schema(prop.axiom_label())));
        }
        out
    }
}

/// The schema for one of `k`, `d`, `t`, `b`, `4`, `5`.
pub fn axiom_schema(label: &str) -> Formula {
    let a = || Formula::atom("A");
    let b = || Formula::atom("B");
    let bx = Formula::boxed;
    match label {
        "k" => Formula::implies(
            bx(Formula::implies(a(), b())),
            Formula::implies(bx(a()), bx(b())),
        ),
        "d" => Formula::implies(bx(a()), Formula::dia(a())),
        "t" => Formula::implies(bx(a()), a()),
        "b" => Formula::implies(a(), bx(Formula::dia(a()))),
        "4" => Formula::implies(bx(a()), bx(bx(a()))),
        "5" => Formula::implies(Formula::dia(a()), bx(Formula::dia(a()))),
        other => panic!("unknown axiom label {other}"),
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Logic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        lookup(s)
    }
}

/// Resolves a logic name or alias.
pub fn lookup(name: &str) -> Result<Logic> {
    if let Some(l) = Logic::ALL.into_iter().find(|l| l.name() == name) {
        return Ok(l);
    }
    if let Some((_, l)) = ALIASES.iter().find(|(alias, _)| *alias == name) {
        return Ok(*l);
    }
    let mut valid: Vec<&str> = Logic::ALL.iter().map(|l| l.name()).collect();
    valid.extend(ALIASES.iter().map(|(a, _)| *a));
    Err(Error::UnknownLogic {
        name: name.to_string(),
        valid: valid.join(", "),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use FrameProp::*;

    #[test]
    fn aliases_resolve() {
        let s4 = lookup("S4").unwrap();
        assert_eq!(s4, Logic::KT4);
        assert_eq!(
            s4.frame_props(),
            FrameProps::of(&[Reflexive, Serial, Transitive])
        );
        let s5 = lookup("S5").unwrap();
        assert_eq!(s5, Logic::KT45);
        assert_eq!(s5.frame_props().iter().count(), 5);
        assert_eq!(lookup("KB45").unwrap(), Logic::KB5);
        assert_eq!(lookup("B").unwrap(), Logic::KTB);
    }

    #[test]
    fn unknown_logic_lists_names() {
        match lookup("S6") {
            Err(Error::UnknownLogic { valid, .. }) => {
                assert!(valid.contains("KT45") && valid.contains("S5"))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn value_sets_per_family() {
        assert_eq!(
            Logic::KD.values().names(),
            ["F", "f", "fff", "ttt", "t", "T"]
        );
        assert_eq!(
            Logic::KB5.values().names(),
            ["F", "f", "ff", "tt", "t", "T"]
        );
        assert_eq!(Logic::KT4.values().names(), ["F", "f", "t", "T"]);
        assert_eq!(Logic::K45.values(), ValueSet::ALL);
    }

    #[test]
    fn family_membership() {
        let of = |f: Family| -> Vec<&str> {
            Logic::ALL
                .iter()
                .filter(|l| l.family() == f)
                .map(|l| l.name())
                .collect()
        };
        assert_eq!(of(Family::K), ["K", "KB", "K4", "K5", "K45"]);
        assert_eq!(of(Family::KD), ["KD", "KDB", "KD4", "KD5", "KD45"]);
        assert_eq!(of(Family::KT), ["KT", "KTB", "KT4", "KT45"]);
        assert_eq!(of(Family::KB45), ["KB5"]);
    }

    #[test]
    fn designated_is_proper_nonempty_subset() {
        for l in Logic::ALL {
            let d = l.designated();
            assert!(!d.is_empty(), "{l}");
            assert!(d.is_subset(l.values()), "{l}");
            assert!(!l.values().minus(d).is_empty(), "{l}");
            assert_eq!(d, l.values().intersect(ValueSet::D));
        }
    }

    #[test]
    fn stable_values_absent_exactly_in_serial_families() {
        for l in Logic::ALL {
            let no_stable = l.values().intersect(ValueSet::STABLE).is_empty();
            assert_eq!(
                no_stable,
                matches!(l.family(), Family::KD | Family::KT),
                "{l}"
            );
        }
    }

    #[test]
    fn frame_props_are_closed() {
        for l in Logic::ALL {
            let p = l.frame_props();
            if p.contains(Reflexive) {
                assert!(p.contains(Serial), "{l}");
            }
            if p.contains(Symmetric) && p.contains(Euclidean) {
                assert!(p.contains(Transitive), "{l}");
            }
            if p.contains(Reflexive) && p.contains(Euclidean) {
                assert!(p.contains(Symmetric) && p.contains(Transitive), "{l}");
            }
            for d in l.defining_axioms().iter() {
                assert!(p.contains(d), "{l}");
            }
        }
    }

    #[test]
    fn axiom_lists() {
        let labels = |l: Logic| -> Vec<&str> { l.axioms().into_iter().map(|(n, _)| n).collect() };
        assert_eq!(labels(Logic::K), ["k"]);
        assert_eq!(labels(Logic::KD45), ["k", "d", "4", "5"]);
        assert_eq!(labels(Logic::KT45), ["k", "t", "b", "4", "5"]);
        assert_eq!(labels(Logic::KB5), ["k", "b", "5"]);
        let k = &Logic::K.axioms()[0].1;
        assert_eq!(k.to_string(), "[](A -> B) -> []A -> []B");
        assert_eq!(
            axiom_schema("d").instantiate(&[("A".to_string(), parse("p").unwrap())].into()),
            Ok(parse("[]p -> <>p").unwrap())
        );
    }
}
