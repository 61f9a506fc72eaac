//! Non-deterministic truth functions for `bot`, `->` and `[]` in each logic.
//!
//! The implication table is shared by every logic; each logic restricts it to
//! its own value set. The box tables differ per logic.

use crate::error::{Error, Result};
use crate::logics::Logic;
use crate::values::{TruthValue, TruthValue::*, ValueSet};

const fn s(values: &[TruthValue]) -> ValueSet {
    ValueSet::of(values)
}

const fn one(v: TruthValue) -> ValueSet {
    ValueSet::of(&[v])
}

/// Values of `bot` before restriction.
pub const BOT: ValueSet = s(&[F, StableF]);

const TT: TruthValue = StableT;
const FF: TruthValue = StableF;
const TTT: TruthValue = ImpossibleT;
const FFF: TruthValue = NecessaryF;
const LT: TruthValue = ContingentT;
const LF: TruthValue = ContingentF;

/// Implication, indexed `[antecedent][consequent]` in value order.
pub const IMP: [[ValueSet; 8]; 8] = [
    // F
    [one(T); 8],
    // f
    [
        one(LT),
        s(&[T, LT]),
        one(TT),
        one(T),
        one(LT),
        one(T),
        s(&[T, LT]),
        one(T),
    ],
    // ff
    [
        one(TTT),
        one(LT),
        one(TT),
        one(T),
        one(TTT),
        one(TT),
        one(LT),
        one(T),
    ],
    // fff
    [
        one(TTT),
        one(LT),
        one(TT),
        one(T),
        one(TTT),
        one(TT),
        one(LT),
        one(T),
    ],
    // ttt
    [
        one(FFF),
        one(FFF),
        one(FFF),
        one(FFF),
        one(T),
        one(T),
        one(T),
        one(T),
    ],
    // tt
    [
        one(F),
        one(LF),
        one(FF),
        one(FFF),
        one(TTT),
        one(TT),
        one(TTT),
        one(T),
    ],
    // t
    [
        one(LF),
        s(&[LF, FFF]),
        one(FFF),
        one(FFF),
        one(LT),
        one(T),
        s(&[T, LT]),
        one(T),
    ],
    // T
    [
        one(F),
        one(LF),
        one(FF),
        one(FFF),
        one(TTT),
        one(TT),
        one(LT),
        one(T),
    ],
];

const E: ValueSet = ValueSet::EMPTY;
const LOW_BOX: ValueSet = s(&[F, LF, FFF]);
const HIGH_BOX: ValueSet = s(&[T, LT, TTT]);

/// Box for each logic, indexed by operand value. Entries for values outside
/// the logic are empty.
const fn box_table(logic: Logic) -> [ValueSet; 8] {
    let tt = one(TT);
    match logic {
        //               F          f          ff  fff              ttt        tt  t          T
        Logic::K => [
            LOW_BOX, LOW_BOX, tt, HIGH_BOX, LOW_BOX, tt, LOW_BOX, HIGH_BOX,
        ],
        Logic::KB => [one(F), one(F), tt, one(TTT), LOW_BOX, tt, LOW_BOX, HIGH_BOX],
        Logic::K4 => [LOW_BOX, LOW_BOX, tt, one(T), LOW_BOX, tt, LOW_BOX, one(T)],
        Logic::K5 => [
            one(F),
            one(F),
            tt,
            s(&[T, TTT]),
            one(F),
            tt,
            one(F),
            s(&[T, TTT]),
        ],
        Logic::K45 => [one(F), one(F), tt, one(T), one(F), tt, one(F), one(T)],
        Logic::KB5 => [one(F), one(F), tt, E, E, tt, one(F), one(T)],
        Logic::KD => [LOW_BOX, LOW_BOX, E, HIGH_BOX, LOW_BOX, E, LOW_BOX, HIGH_BOX],
        Logic::KDB => [one(F), one(F), E, one(TTT), LOW_BOX, E, LOW_BOX, HIGH_BOX],
        Logic::KD4 => [one(F), LOW_BOX, E, one(T), one(F), E, LOW_BOX, one(T)],
        Logic::KD5 => [
            one(F),
            one(F),
            E,
            s(&[T, TTT]),
            one(F),
            E,
            one(F),
            s(&[T, TTT]),
        ],
        Logic::KD45 => [one(F), one(F), E, one(T), one(F), E, one(F), one(T)],
        Logic::KT => [one(F), s(&[F, LF]), E, E, E, E, s(&[F, LF]), s(&[T, LT])],
        Logic::KTB => [one(F), one(F), E, E, E, E, s(&[F, LF]), s(&[T, LT])],
        Logic::KT4 => [one(F), s(&[F, LF]), E, E, E, E, s(&[F, LF]), one(T)],
        Logic::KT45 => [one(F), one(F), E, E, E, E, one(F), one(T)],
    }
}

/// The Nmatrix of one logic, with every table restricted to its value set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nmatrix {
    logic: Logic,
    values: ValueSet,
    bot: ValueSet,
    imp: [[ValueSet; 8]; 8],
    boxes: [ValueSet; 8],
}

impl Nmatrix {
    pub fn new(logic: Logic) -> Nmatrix {
        let values = logic.values();
        let mut imp = [[ValueSet::EMPTY; 8]; 8];
        for a in values.iter() {
            for b in values.iter() {
                imp[a as usize][b as usize] = IMP[a as usize][b as usize].intersect(values);
            }
        }
        let raw_box = box_table(logic);
        let mut boxes = [ValueSet::EMPTY; 8];
        for a in values.iter() {
            boxes[a as usize] = raw_box[a as usize].intersect(values);
        }
        Nmatrix {
            logic,
            values,
            bot: BOT.intersect(values),
            imp,
            boxes,
        }
    }

    pub fn logic(&self) -> Logic {
        self.logic
    }

    pub fn values(&self) -> ValueSet {
        self.values
    }

    pub fn bot_values(&self) -> ValueSet {
        self.bot
    }

    fn check(&self, v: TruthValue) -> Result<()> {
        if self.values.contains(v) {
            Ok(())
        } else {
            Err(Error::ValueNotInLogic {
                value: v,
                logic: self.logic.name(),
            })
        }
    }

    pub fn imp(&self, a: TruthValue, b: TruthValue) -> Result<ValueSet> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.imp_unchecked(a, b))
    }

    pub fn box_(&self, a: TruthValue) -> Result<ValueSet> {
        self.check(a)?;
        Ok(self.box_unchecked(a))
    }

    /// `a -> bot` with the given value for `bot`.
    pub fn neg(&self, a: TruthValue, bot: TruthValue) -> Result<ValueSet> {
        if !self.bot.contains(bot) {
            return Err(Error::ValueNotInLogic {
                value: bot,
                logic: self.logic.name(),
            });
        }
        self.imp(a, bot)
    }

    /// `!([] !a)`, composed from the negation and box tables. Stable operands
    /// use `ff` for `bot`, all others use `F`.
    pub fn dia(&self, a: TruthValue) -> Result<ValueSet> {
        self.check(a)?;
        let bot = if a.is_stable() { StableF } else { F };
        let mut out = ValueSet::EMPTY;
        for negated in self.neg(a, bot)?.iter() {
            for boxed in self.box_(negated)?.iter() {
                out = out.union(self.neg(boxed, bot)?);
            }
        }
        Ok(out)
    }

    #[inline]
    pub(crate) fn imp_unchecked(&self, a: TruthValue, b: TruthValue) -> ValueSet {
        self.imp[a as usize][b as usize]
    }

    #[inline]
    pub(crate) fn box_unchecked(&self, a: TruthValue) -> ValueSet {
        self.boxes[a as usize]
    }
}
