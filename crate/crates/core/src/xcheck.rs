//! Differential testing of the table procedure against the bounded oracle.

use std::fmt;

use crate::decision::{decide_with, Options, Verdict};
use crate::error::Result;
use crate::formula::Formula;
use crate::gen::FormulaGen;
use crate::kripke::{oracle_decide_with, OracleVerdict};
use crate::logics::Logic;
use crate::par::{map_range, Exec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Valid, and no countermodel within the bound.
    Agree,
    /// Invalid, and the oracle found a countermodel.
    Refuted,
    /// Invalid, but no countermodel within the bound.
    Unresolved,
    /// Valid, yet the oracle found a countermodel.
    Disagreement,
}

impl Outcome {
    pub fn classify(verdict: Verdict, oracle: &OracleVerdict) -> Outcome {
        match (verdict, oracle.is_countermodel()) {
            (Verdict::Valid, false) => Outcome::Agree,
            (Verdict::Invalid, true) => Outcome::Refuted,
            (Verdict::Invalid, false) => Outcome::Unresolved,
            (Verdict::Valid, true) => Outcome::Disagreement,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Case {
    pub formula: Formula,
    pub verdict: Verdict,
    pub oracle: OracleVerdict,
    pub outcome: Outcome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XcheckConfig {
    pub logic: Logic,
    pub count: usize,
    pub max_depth: usize,
    pub atoms: usize,
    pub seed: u64,
    /// Largest model size the oracle tries.
    pub bound: usize,
    pub options: Options,
}

impl XcheckConfig {
    pub fn new(logic: Logic) -> XcheckConfig {
        XcheckConfig {
            logic,
            count: 200,
            max_depth: 2,
            atoms: 2,
            seed: 42,
            bound: 3,
            options: Options::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub cases: Vec<Case>,
}

impl Report {
    pub fn count(&self, outcome: Outcome) -> usize {
        self.cases.iter().filter(|c| c.outcome == outcome).count()
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &Case> {
        self.cases
            .iter()
            .filter(|c| c.outcome == Outcome::Disagreement)
    }

    pub fn passed(&self) -> bool {
        self.count(Outcome::Disagreement) == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "agree={} refuted={} unresolved={}",
            self.count(Outcome::Agree),
            self.count(Outcome::Refuted),
            self.count(Outcome::Unresolved)
        )?;
        let bad = self.count(Outcome::Disagreement);
        if bad > 0 {
            write!(f, " disagreements={bad}")?;
        }
        Ok(())
    }
}

/// Checks one formula both ways.
pub fn check(logic: Logic, formula: &Formula, bound: usize, options: &Options) -> Result<Case> {
    let verdict = decide_with(logic, &[], formula, options)?.verdict;
    let oracle = oracle_decide_with(logic, &[], formula, bound, options.exec)?;
    Ok(Case {
        formula: formula.clone(),
        verdict,
        outcome: Outcome::classify(verdict, &oracle),
        oracle,
    })
}

/// Draws `count` formulas from the seeded generator and checks each.
pub fn run(config: &XcheckConfig) -> Result<Report> {
    let formulas: Vec<Formula> = FormulaGen::new(config.seed, config.max_depth, config.atoms)
        .take(config.count)
        .collect();
    // Cases run in parallel; each one runs sequentially inside.
    let inner = Options {
        exec: Exec::Sequential,
        ..config.options
    };
    let cases = map_range(config.options.exec, formulas.len(), |i| {
        check(config.logic, &formulas[i], config.bound, &inner)
    });
    Ok(Report {
        cases: cases.into_iter().collect::<Result<_>>()?,
    })
}
