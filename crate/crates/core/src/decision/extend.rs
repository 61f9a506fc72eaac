use super::rows::{candidates, Rows};
use super::{filter_model_with, Options, TableModel};
use crate::error::{Error, Result};
use crate::formula::{Formula, Node};
use crate::logics::Logic;
use crate::nmatrix::Nmatrix;
use crate::par::map_range;
use crate::values::{TruthValue, TruthValue::*, ValueSet};

/// Adds a column for `f` to a filtered model, choosing one value per row from
/// the row's successors so that the relation carries over unchanged.
pub fn extend_column(model: &TableModel, f: Formula) -> Result<TableModel> {
    extend_column_with(model, f, &Options::default())
}

pub fn extend_column_with(model: &TableModel, f: Formula, options: &Options) -> Result<TableModel> {
    let closure = model.closure().extended(f)?;
    if model.closure().is_empty() {
        return filter_model_with(model.logic(), &closure, options);
    }
    let node = closure.nodes().last().expect("just extended").clone();
    let m = Nmatrix::new(model.logic());
    let relation = model.relation();
    let rows = model.rows();
    let chosen = map_range(options.exec, rows.len(), |i| {
        let row = rows.get(i);
        let out = candidates(&m, &node, row);
        if let [single] = out.iter().collect::<Vec<_>>()[..] {
            return Ok(single);
        }
        let column = |k: usize| relation.successors(i).map(move |j| rows.get(j)[k]);
        let preferred = match node {
            Node::Atom(_) => return Ok(row[0]),
            Node::Falsum => return Ok(if row[0].is_stable() { StableF } else { F }),
            Node::Implies(a, b) => {
                let falsified = relation.successors(i).any(|j| {
                    let succ = rows.get(j);
                    succ[a].is_designated() && !succ[b].is_designated()
                });
                if falsified {
                    [ContingentT, ContingentF]
                } else {
                    [T, NecessaryF]
                }
            }
            Node::Box(a) => box_preference(model.logic(), column(a)),
        };
        preferred
            .into_iter()
            .find(|v| out.contains(*v))
            .ok_or_else(|| Error::Extension {
                formula: closure.formulas()[closure.len() - 1].to_string(),
                row: i,
                detail: format!("none of {preferred:?} in {out}"),
            })
    });
    let mut extended = Rows::new(closure.len());
    let mut buffer = Vec::with_capacity(closure.len());
    for (i, value) in chosen.into_iter().enumerate() {
        buffer.clear();
        buffer.extend_from_slice(rows.get(i));
        buffer.push(value?);
        extended.push(&buffer);
    }
    let mut out = TableModel::new(model.logic(), closure, extended);
    out.exec = options.exec;
    Ok(out)
}

/// Preferred values for a box column given the operand's values at the successors.
fn box_preference(logic: Logic, successors: impl Iterator<Item = TruthValue>) -> [TruthValue; 2] {
    use Logic::*;
    let (mut necessary, mut unnecessary, mut top, mut other) = (false, false, false, false);
    for v in successors {
        if ValueSet::N.contains(v) {
            necessary = true;
        } else {
            unnecessary = true;
        }
        if v == T {
            top = true;
        } else {
            other = true;
        }
    }
    match logic {
        K | KD | KB | KDB | K4 | KD4 => {
            if necessary && unnecessary {
                [ContingentF, ContingentT]
            } else if unnecessary {
                [F, ImpossibleT]
            } else {
                [T, NecessaryF]
            }
        }
        K5 | KD5 => {
            if unnecessary {
                [ImpossibleT, ImpossibleT]
            } else {
                [T, T]
            }
        }
        // Everything else, reflexive or euclidean: lowercase when the
        // successors disagree on whether the operand is T.
        _ => {
            if top && other {
                [ContingentF, ContingentT]
            } else {
                [F, T]
            }
        }
    }
}
