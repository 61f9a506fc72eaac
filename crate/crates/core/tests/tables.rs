use std::collections::BTreeMap;

use nmcube::nmatrix::{BOT, IMP};
use nmcube::{Logic, Nmatrix, TruthValue, ValueSet};
use serde::Deserialize;

#[derive(Deserialize)]
struct Tables {
    bot: String,
    columns: Vec<String>,
    imp: BTreeMap<String, Vec<String>>,
    #[serde(rename = "box")]
    boxes: BTreeMap<String, BTreeMap<String, String>>,
}

fn load() -> Tables {
    let text = include_str!("data/tables.json");
    serde_json::from_str(text).unwrap()
}

fn set(cell: &str) -> ValueSet {
    cell.split(',')
        .map(|v| v.parse::<TruthValue>().unwrap())
        .collect()
}

#[test]
fn bot_matches() {
    assert_eq!(BOT, set(&load().bot));
}

#[test]
fn implication_matches_cell_for_cell() {
    let tables = load();
    assert_eq!(tables.imp.len(), 8);
    let mut checked = 0;
    for (row, cells) in &tables.imp {
        let a: TruthValue = row.parse().unwrap();
        for (col, cell) in tables.columns.iter().zip(cells) {
            let b: TruthValue = col.parse().unwrap();
            assert_eq!(IMP[a as usize][b as usize], set(cell), "{a} -> {b}");
            checked += 1;
        }
    }
    assert_eq!(checked, 64);
}

#[test]
fn restricted_implication_is_intersection() {
    let tables = load();
    for logic in Logic::ALL {
        let m = Nmatrix::new(logic);
        for (row, cells) in &tables.imp {
            let a: TruthValue = row.parse().unwrap();
            for (col, cell) in tables.columns.iter().zip(cells) {
                let b: TruthValue = col.parse().unwrap();
                let got = m.imp(a, b);
                if logic.values().contains(a) && logic.values().contains(b) {
                    assert_eq!(got.unwrap(), set(cell).intersect(logic.values()));
                } else {
                    assert!(got.is_err());
                }
            }
        }
    }
}

#[test]
fn box_columns_match() {
    let tables = load();
    assert_eq!(tables.boxes.len(), 15);
    for logic in Logic::ALL {
        let column = &tables.boxes[logic.name()];
        let domain: ValueSet = column.keys().map(|v| v.parse().unwrap()).collect();
        assert_eq!(domain, logic.values(), "{logic}");
        let m = Nmatrix::new(logic);
        for v in TruthValue::ALL {
            match column.get(v.name()) {
                Some(cell) => assert_eq!(m.box_(v).unwrap(), set(cell), "{logic} {v}"),
                None => assert!(m.box_(v).is_err()),
            }
        }
    }
}

#[test]
fn dia_is_the_composition() {
    // Recompute by brute force from the transcription alone.
    let tables = load();
    let imp = |a: TruthValue, b: TruthValue| {
        let cells = &tables.imp[a.name()];
        let col = tables.columns.iter().position(|c| c == b.name()).unwrap();
        set(&cells[col])
    };
    for logic in Logic::ALL {
        let m = Nmatrix::new(logic);
        let column = &tables.boxes[logic.name()];
        let values = logic.values();
        for a in values.iter() {
            let bot = if a.is_stable() {
                TruthValue::StableF
            } else {
                TruthValue::F
            };
            let mut expected = ValueSet::EMPTY;
            for b in imp(a, bot).intersect(values).iter() {
                for c in set(&column[b.name()]).iter() {
                    expected = expected.union(imp(c, bot).intersect(values));
                }
            }
            assert_eq!(m.dia(a).unwrap(), expected, "{logic} {a}");
        }
    }
}
