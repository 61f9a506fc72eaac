//! Machine-readable dumps of tables and relational models.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::decision::{Rows, TableModel};
use crate::formula::Closure;
use crate::kripke::KripkeModel;
use crate::nmatrix::Nmatrix;
use crate::values::{TruthValue, ValueSet};

fn cell(set: ValueSet) -> String {
    set.names().join(" ")
}

fn csv_string(records: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
}

fn header(closure: &Closure) -> Vec<String> {
    closure.formulas().iter().map(|f| f.print(true)).collect()
}

fn names(row: &[TruthValue]) -> Vec<String> {
    row.iter().map(|v| v.name().to_string()).collect()
}

/// One line per row under a header of closure formulas.
pub fn table_csv(model: &TableModel) -> String {
    let rows = model.rows().iter().map(names);
    csv_string(std::iter::once(header(model.closure())).chain(rows))
}

/// `{logic, closure, rows, relation}`.
pub fn table_json(model: &TableModel) -> Value {
    let relation: Vec<[usize; 2]> = model
        .relation()
        .pairs()
        .into_iter()
        .map(|(i, j)| [i, j])
        .collect();
    json!({
        "logic": model.logic().name(),
        "closure": header(model.closure()),
        "rows": model.rows().iter().map(names).collect::<Vec<_>>(),
        "relation": relation,
    })
}

/// Level row sets as CSV, with the level number in the first column.
pub fn levels_csv(closure: &Closure, levels: &[Rows]) -> String {
    let mut head = vec!["level".to_string()];
    head.extend(header(closure));
    let body = levels.iter().enumerate().flat_map(|(k, rows)| {
        rows.iter().map(move |row| {
            let mut r = vec![k.to_string()];
            r.extend(names(row));
            r
        })
    });
    csv_string(std::iter::once(head).chain(body))
}

/// `{closure, levels: [[row, ...], ...]}`.
pub fn levels_json(closure: &Closure, levels: &[Rows]) -> Value {
    let levels: Vec<Vec<Vec<String>>> = levels
        .iter()
        .map(|rows| rows.iter().map(names).collect())
        .collect();
    json!({ "closure": header(closure), "levels": levels })
}

/// The truth functions as CSV records `op,a,b,values`.
pub fn nmatrix_csv(m: &Nmatrix) -> String {
    let mut records = vec![vec!["op".into(), "a".into(), "b".into(), "values".into()]];
    records.push(vec![
        "bot".into(),
        String::new(),
        String::new(),
        cell(m.bot_values()),
    ]);
    for a in m.values().iter() {
        for b in m.values().iter() {
            let out = m.imp(a, b).expect("values of the logic");
            records.push(vec![
                "->".into(),
                a.name().into(),
                b.name().into(),
                cell(out),
            ]);
        }
    }
    for a in m.values().iter() {
        let out = m.box_(a).expect("values of the logic");
        records.push(vec!["[]".into(), a.name().into(), String::new(), cell(out)]);
    }
    csv_string(records)
}

/// `{logic, values, bot, imp: {a: {b: [...]}}, box: {a: [...]}}`.
pub fn nmatrix_json(m: &Nmatrix) -> Value {
    let mut imp = Map::new();
    let mut boxes = Map::new();
    for a in m.values().iter() {
        let mut row = Map::new();
        for b in m.values().iter() {
            row.insert(
                b.name().into(),
                json!(m.imp(a, b).expect("values of the logic")),
            );
        }
        imp.insert(a.name().into(), Value::Object(row));
        boxes.insert(
            a.name().into(),
            json!(m.box_(a).expect("values of the logic")),
        );
    }
    json!({
        "logic": m.logic().name(),
        "values": m.values(),
        "bot": m.bot_values(),
        "imp": imp,
        "box": boxes,
    })
}

/// `{worlds, relation, valuation: {atom: [bool per world]}}`.
pub fn kripke_json(model: &KripkeModel) -> Value {
    let relation: Vec<[usize; 2]> = model
        .frame()
        .pairs()
        .into_iter()
        .map(|(i, j)| [i, j])
        .collect();
    let valuation: Map<String, Value> = model
        .atoms()
        .map(|a| {
            let truth: Vec<bool> = (0..model.worlds()).map(|w| model.atom(a, w)).collect();
            (a.to_string(), json!(truth))
        })
        .collect();
    json!({
        "worlds": model.worlds(),
        "relation": relation,
        "valuation": valuation,
    })
}

/// Graphviz digraph with one node per world labelled by its true atoms.
/// `focus` gets a double border.
pub fn kripke_dot(model: &KripkeModel, focus: Option<usize>) -> String {
    let mut out = String::from("digraph model {\n  node [shape=circle];\n");
    for w in 0..model.worlds() {
        let atoms = model.true_atoms(w).join(" ");
        let label = if atoms.is_empty() {
            format!("w{w}")
        } else {
            format!("w{w}\\n{atoms}")
        };
        let extra = if focus == Some(w) {
            ", peripheries=2"
        } else {
            ""
        };
        let _ = writeln!(out, "  w{w} [label=\"{label}\"{extra}];");
    }
    for (u, v) in model.frame().pairs() {
        let _ = writeln!(out, "  w{u} -> w{v};");
    }
    out.push_str("}\n");
    out
}
