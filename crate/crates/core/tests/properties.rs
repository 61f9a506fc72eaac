use nmcube::decision::{decide_with, Options};
use nmcube::gen::FormulaGen;
use nmcube::{
    decide, filter_model, forces, oracle_decide, parse, to_kripke, Closure, Exec, Formula, Logic,
    OracleVerdict,
};
use proptest::prelude::*;

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["p", "q", "r"]).prop_map(Formula::atom),
        Just(Formula::Falsum),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            inner.clone().prop_map(Formula::boxed),
            inner.clone().prop_map(Formula::dia),
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::or(a, b)),
        ]
    })
}

proptest! {
    #[test]
    fn print_parse_round_trip(f in formula()) {
        prop_assert_eq!(parse(&f.print(true)).unwrap(), f.clone());
        prop_assert_eq!(parse(&f.print(false)).unwrap(), f);
    }

    #[test]
    fn closure_lists_subformulas_first(f in formula()) {
        let c = Closure::of([&f]);
        for (i, g) in c.formulas().iter().enumerate() {
            for child in g.children() {
                prop_assert!(c.position(child).unwrap() < i);
            }
        }
        prop_assert_eq!(c.formulas().last(), Some(&f));
    }
}

#[test]
fn kripke_reading_agrees_with_rows() {
    for (seed, logic) in Logic::ALL.into_iter().enumerate() {
        for g in FormulaGen::new(seed as u64, 3, 2).take(25) {
            let closure = Closure::of([&g]);
            let model = filter_model(logic, &closure).unwrap();
            let k = to_kripke(&model).unwrap();
            for (i, row) in model.rows().iter().enumerate() {
                for (phi, v) in closure.formulas().iter().zip(row) {
                    assert_eq!(
                        forces(&k, i, phi),
                        v.is_designated(),
                        "{logic} row {i} {phi} = {v}"
                    );
                }
            }
        }
    }
}

#[test]
fn invalid_witness_row_refutes_in_the_kripke_reading() {
    for logic in Logic::ALL {
        for g in FormulaGen::new(7, 2, 2).take(30) {
            let d = decide(logic, &[], &g).unwrap();
            if let Some(w) = d.witness {
                let k = to_kripke(&d.model).unwrap();
                assert!(!forces(&k, w, &g), "{logic} {g}");
            }
        }
    }
}

#[test]
fn countermodels_really_refute() {
    for logic in [Logic::K, Logic::KD5, Logic::KB5, Logic::KT4] {
        for g in FormulaGen::new(3, 2, 2).take(40) {
            if let OracleVerdict::Countermodel { model, world } =
                oracle_decide(logic, &[], &g, 3).unwrap()
            {
                assert!(model.frame().satisfies_all(logic.frame_props()));
                assert!(!forces(&model, world, &g), "{logic} {g}");
            }
        }
    }
}

#[test]
fn refiltering_is_idempotent() {
    for logic in Logic::ALL {
        for g in FormulaGen::new(11, 3, 2).take(10) {
            let model = filter_model(logic, &Closure::of([&g])).unwrap();
            let again = model.refilter();
            assert_eq!(again.stats().deleted, 0);
            assert_eq!(again.rows(), model.rows());
        }
    }
}

#[test]
fn execution_modes_agree() {
    let seq = Options {
        exec: Exec::Sequential,
        ..Options::default()
    };
    let par = Options {
        exec: Exec::Parallel,
        ..Options::default()
    };
    for logic in [Logic::K, Logic::KD45, Logic::KT45] {
        for g in FormulaGen::new(5, 3, 3).take(15) {
            let a = decide_with(logic, &[], &g, &seq).unwrap();
            let b = decide_with(logic, &[], &g, &par).unwrap();
            assert_eq!(a.verdict, b.verdict);
            assert_eq!(a.witness, b.witness);
            assert_eq!(a.model.rows(), b.model.rows());
        }
    }
}

#[test]
fn assumptions_act_locally() {
    // Local consequence: p does not yield []p, but []p yields [][]p in K4.
    let p = parse("p").unwrap();
    assert!(!decide(Logic::KT45, &[p], &parse("[]p").unwrap())
        .unwrap()
        .is_valid());
    let bp = parse("[]p").unwrap();
    assert!(decide(Logic::K4, &[bp], &parse("[][]p").unwrap())
        .unwrap()
        .is_valid());
}
