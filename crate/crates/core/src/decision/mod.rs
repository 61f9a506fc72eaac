//! Partial valuations over a closure, the support relation, greatest-model
//! filtering and the consequence check built on it.

mod extend;
mod filter;
mod levels;
mod relation;
mod rows;

use std::sync::OnceLock;

pub use extend::{extend_column, extend_column_with};
pub use filter::FilterStats;
pub use levels::level_filter_demo;
pub use relation::{
    allowed_successor, build_relation, build_relation_with, support_requirements, Relation,
};
pub use rows::{enumerate_rows_with, is_compatible, Rows};

use crate::error::Result;
use crate::formula::{Closure, Formula};
use crate::logics::Logic;
use crate::par::Exec;
use crate::values::TruthValue;

pub const DEFAULT_ROW_CAP: usize = 2_000_000;

/// Knobs shared by the table-building operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub exec: Exec,
    /// Largest number of rows any enumeration stage may produce.
    pub row_cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            exec: Exec::default(),
            row_cap: DEFAULT_ROW_CAP,
        }
    }
}

/// Rows over a closure together with the maximal relation between them.
/// The relation is built on first use.
#[derive(Clone, Debug)]
pub struct TableModel {
    logic: Logic,
    closure: Closure,
    rows: Rows,
    stats: FilterStats,
    exec: Exec,
    relation: OnceLock<Relation>,
}

impl TableModel {
    /// Wraps rows as they are, without filtering.
    pub fn new(logic: Logic, closure: Closure, rows: Rows) -> TableModel {
        assert_eq!(
            closure.len(),
            rows.width(),
            "row width must match the closure"
        );
        TableModel {
            logic,
            closure,
            stats: FilterStats {
                initial: rows.len(),
                ..FilterStats::default()
            },
            rows,
            exec: Exec::default(),
            relation: OnceLock::new(),
        }
    }

    pub fn logic(&self) -> Logic {
        self.logic
    }

    pub fn closure(&self) -> &Closure {
        &self.closure
    }

    pub fn rows(&self) -> &Rows {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, i: usize) -> &[TruthValue] {
        self.rows.get(i)
    }

    pub fn stats(&self) -> FilterStats {
        self.stats
    }

    pub fn relation(&self) -> &Relation {
        self.relation
            .get_or_init(|| build_relation_with(self.logic, &self.rows, self.exec))
    }

    /// Value of `f` in row `i`, if `f` is in the closure.
    pub fn value(&self, i: usize, f: &Formula) -> Option<TruthValue> {
        self.closure.position(f).map(|k| self.rows.get(i)[k])
    }

    /// Filters this model's own rows again.
    pub fn refilter(&self) -> TableModel {
        filter_rows(
            self.logic,
            self.closure.clone(),
            self.rows.clone(),
            self.exec,
        )
    }

    /// Whether every row is a legal partial valuation.
    pub fn rows_compatible(&self) -> bool {
        self.rows
            .iter()
            .all(|row| is_compatible(self.logic, &self.closure, row))
    }
}

/// Keeps the rows of `rows` that belong to some model.
pub fn filter_rows(logic: Logic, closure: Closure, rows: Rows, exec: Exec) -> TableModel {
    let (alive, stats) = filter::greatest_fixpoint(logic, &rows, exec);
    let survivors = if alive.len() == rows.len() {
        rows
    } else {
        rows.select(alive)
    };
    TableModel {
        logic,
        closure,
        rows: survivors,
        stats,
        exec,
        relation: OnceLock::new(),
    }
}

pub fn enumerate_rows(logic: Logic, closure: &Closure) -> Result<Rows> {
    enumerate_rows_with(logic, closure, DEFAULT_ROW_CAP, Exec::default())
}

/// The greatest model over `closure`: all rows, with unsupported rows
/// deleted until none remain.
pub fn filter_model(logic: Logic, closure: &Closure) -> Result<TableModel> {
    filter_model_with(logic, closure, &Options::default())
}

pub fn filter_model_with(logic: Logic, closure: &Closure, options: &Options) -> Result<TableModel> {
    let rows = enumerate_rows_with(logic, closure, options.row_cap, options.exec)?;
    Ok(filter_rows(logic, closure.clone(), rows, options.exec))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Valid,
    Invalid,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Valid => "VALID",
            Verdict::Invalid => "INVALID",
        })
    }
}

/// Outcome of a consequence check.
#[derive(Clone, Debug)]
pub struct Decision {
    pub verdict: Verdict,
    /// First surviving row designating every assumption but not the goal.
    pub witness: Option<usize>,
    pub model: TableModel,
    /// Closure positions of the assumptions and the goal.
    pub assumptions: Vec<usize>,
    pub goal: usize,
}

impl Decision {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }

    pub fn witness_row(&self) -> Option<&[TruthValue]> {
        self.witness.map(|i| self.model.row(i))
    }
}

/// Whether `goal` follows from `assumptions` in `logic`.
pub fn decide(logic: Logic, assumptions: &[Formula], goal: &Formula) -> Result<Decision> {
    decide_with(logic, assumptions, goal, &Options::default())
}

pub fn decide_with(
    logic: Logic,
    assumptions: &[Formula],
    goal: &Formula,
    options: &Options,
) -> Result<Decision> {
    let closure = Closure::of(assumptions.iter().chain(std::iter::once(goal)));
    let model = filter_model_with(logic, &closure, options)?;
    let premises: Vec<usize> = assumptions
        .iter()
        .map(|a| closure.position(a).expect("assumption in its own closure"))
        .collect();
    let target = closure.position(goal).expect("goal in its own closure");
    let witness = model.rows().iter().position(|row| {
        premises.iter().all(|&k| row[k].is_designated()) && !row[target].is_designated()
    });
    Ok(Decision {
        verdict: if witness.is_some() {
            Verdict::Invalid
        } else {
            Verdict::Valid
        },
        witness,
        model,
        assumptions: premises,
        goal: target,
    })
}
