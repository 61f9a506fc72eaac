use super::rows::Rows;
use super::{enumerate_rows, Result};
use crate::formula::Closure;
use crate::logics::Logic;
use crate::values::TruthValue;

/// Row sets for levels `0..=n`. Level 0 is every partial valuation; level
/// `k + 1` keeps the rows of level `k` that give `T` or `tt` to each closure
/// member designated in all level-`k` rows.
///
/// Only closure members are considered, so this is a finite illustration of
/// level valuations rather than a decision procedure.
pub fn level_filter_demo(logic: Logic, closure: &Closure, n: usize) -> Result<Vec<Rows>> {
    let mut levels = vec![enumerate_rows(logic, closure)?];
    for _ in 0..n {
        let current = levels.last().expect("level 0 exists");
        let tautologies: Vec<usize> = (0..closure.len())
            .filter(|&k| current.iter().all(|row| row[k].is_designated()))
            .collect();
        let next = Rows::from_rows(
            closure.len(),
            current.iter().filter(|row| {
                tautologies
                    .iter()
                    .all(|&k| matches!(row[k], TruthValue::T | TruthValue::StableT))
            }),
        );
        levels.push(next);
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::values::TruthValue::*;

    fn closure(text: &str) -> Closure {
        Closure::of([&parse(text).unwrap()])
    }

    #[test]
    fn level_zero_is_enumeration() {
        let c = closure("[][](p -> p)");
        let levels = level_filter_demo(Logic::KT, &c, 0).unwrap();
        assert_eq!(levels, [enumerate_rows(Logic::KT, &c).unwrap()]);
    }

    #[test]
    fn kt_lines_are_eliminated_in_turn() {
        // Closure order: p, p -> p, [](p -> p), [][](p -> p).
        let c = closure("[][](p -> p)");
        let levels = level_filter_demo(Logic::KT, &c, 2).unwrap();
        let has = |level: usize, prefix: &[TruthValue]| {
            levels[level].iter().any(|row| row.starts_with(prefix))
        };
        // Line 3: p = f, p -> p = t.
        assert!(has(0, &[ContingentF, ContingentT]));
        assert!(!has(1, &[ContingentF, ContingentT]));
        // Line 2: p = F, p -> p = T, [](p -> p) = t.
        assert!(has(1, &[F, T, ContingentT]));
        assert!(!has(2, &[F, T, ContingentT]));
        // Line 1 survives with [][](p -> p) in {T, t}.
        assert!(has(2, &[F, T, T, T]));
        assert!(has(2, &[F, T, T, ContingentT]));
        for row in levels[1].iter() {
            assert!(row[2].is_designated());
        }
        for row in levels[2].iter() {
            assert!(row[3].is_designated());
        }
    }

    #[test]
    fn kd_boxed_tautology_rows_discarded() {
        let c = closure("[][](p -> p)");
        let levels = level_filter_demo(Logic::KD, &c, 2).unwrap();
        let box_values = |level: usize| -> Vec<TruthValue> {
            let mut vs: Vec<_> = levels[level].iter().map(|r| r[2]).collect();
            vs.sort();
            vs.dedup();
            vs
        };
        assert_eq!(
            box_values(0),
            [F, ContingentF, NecessaryF, ImpossibleT, ContingentT, T]
        );
        // Level 1 forces p -> p to T, whose box may still be t or ttt.
        assert_eq!(box_values(1), [ImpossibleT, ContingentT, T]);
        assert_eq!(box_values(2), [T]);
        // Lines 2 and 3 of the table (p = F, p -> p = T) are gone at level 2.
        let line = |level: usize, v: TruthValue| levels[level].iter().any(|r| r[..3] == [F, T, v]);
        assert!(line(2, T));
        assert!(line(1, ContingentT) && !line(2, ContingentT));
        assert!(line(1, ImpossibleT) && !line(2, ImpossibleT));
    }
}
