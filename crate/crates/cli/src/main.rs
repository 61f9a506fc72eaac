use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nmcube::decision::{
    decide_with, filter_model_with, level_filter_demo, Options, DEFAULT_ROW_CAP,
};
use nmcube::export;
use nmcube::kripke::oracle_decide_with;
use nmcube::xcheck::{self, XcheckConfig};
use nmcube::{
    forces, parse, to_kripke, Closure, Exec, Formula, KripkeModel, Logic, Nmatrix, OracleVerdict,
    Result,
};
use serde_json::json;

/// Decision procedures for the normal modal logics K through S5.
#[derive(Parser, Debug)]
#[command(name = "nmcube", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Run single-threaded.
    #[arg(long, global = true)]
    sequential: bool,
    /// Give up when an enumeration stage exceeds this many rows.
    #[arg(long, global = true, default_value_t = DEFAULT_ROW_CAP)]
    row_cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check whether GOAL follows from the assumptions. Exit 0 if valid, 1 if not.
    Decide {
        #[arg(long, value_parser = logic)]
        logic: Logic,
        #[arg(long = "assume")]
        assumptions: Vec<String>,
        goal: String,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Dump the filtered table over the closure of FORMULAS, or the truth
    /// functions of the logic when no formula is given.
    Table {
        #[arg(long, value_parser = logic)]
        logic: Logic,
        formulas: Vec<String>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Show level row sets 0..=N instead of the filtered table.
        #[arg(long)]
        level: Option<usize>,
    },
    /// Relational model read off the table; a countermodel when FORMULA is invalid.
    Model {
        #[arg(long, value_parser = logic)]
        logic: Logic,
        #[arg(long = "assume")]
        assumptions: Vec<String>,
        formula: String,
        #[arg(long, value_enum, default_value_t = ModelFormat::Dot)]
        format: ModelFormat,
        /// Keep every table row as a world, not only those reachable from the witness.
        #[arg(long)]
        full: bool,
    },
    /// Search small Kripke models for a countermodel. Exit 0 if none, 1 if found.
    Oracle {
        #[arg(long, value_parser = logic)]
        logic: Logic,
        #[arg(long = "assume")]
        assumptions: Vec<String>,
        goal: String,
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
        #[arg(long, value_enum, default_value_t = OracleFormat::Text)]
        format: OracleFormat,
    },
    /// Compare the table procedure with the oracle on random formulas.
    Xcheck {
        #[arg(long, value_parser = logic)]
        logic: Logic,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        max_depth: usize,
        #[arg(long, default_value_t = 2)]
        atoms: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
    },
    /// List the axiom schemata of a logic.
    Axioms {
        #[arg(long, value_parser = logic)]
        logic: Logic,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleFormat {
    Text,
    Json,
    Dot,
}

fn logic(s: &str) -> std::result::Result<Logic, String> {
    s.parse().map_err(|e: nmcube::Error| e.to_string())
}

fn formulas(texts: &[String]) -> Result<Vec<Formula>> {
    texts.iter().map(|t| parse(t)).collect()
}

fn json_line(v: serde_json::Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

/// One line per world: its atoms and successors.
fn describe(model: &KripkeModel) -> String {
    let mut out = String::new();
    for w in 0..model.worlds() {
        let atoms = model.true_atoms(w).join(" ");
        let succ: Vec<String> = model
            .frame()
            .successors(w)
            .map(|v| format!("w{v}"))
            .collect();
        let _ = writeln!(out, "  w{w} [{atoms}] -> {}", succ.join(" "));
    }
    out
}

fn run(cli: Cli) -> Result<(String, u8)> {
    let options = Options {
        exec: if cli.sequential {
            Exec::Sequential
        } else {
            Exec::Parallel
        },
        row_cap: cli.row_cap,
    };
    match cli.command {
        Command::Decide {
            logic,
            assumptions,
            goal,
            format,
        } => {
            let premises = formulas(&assumptions)?;
            let d = decide_with(logic, &premises, &parse(&goal)?, &options)?;
            let closure = d.model.closure();
            let out = match format {
                TextOrJson::Text => {
                    let mut s = format!("{}\n", d.verdict);
                    if let (Some(i), Some(row)) = (d.witness, d.witness_row()) {
                        let _ = writeln!(s, "witness row {i} of {}:", d.model.len());
                        for (f, v) in closure.formulas().iter().zip(row) {
                            let _ = writeln!(s, "  {} = {v}", f.print(true));
                        }
                    }
                    s
                }
                TextOrJson::Json => {
                    let witness = d.witness.map(|i| {
                        json!({
                            "row": i,
                            "values": d.model.row(i).iter().map(|v| v.name()).collect::<Vec<_>>(),
                        })
                    });
                    json_line(json!({
                        "logic": logic.name(),
                        "verdict": d.verdict.to_string(),
                        "closure": closure.formulas().iter().map(|f| f.print(true)).collect::<Vec<_>>(),
                        "rows": d.model.len(),
                        "witness": witness,
                    }))
                }
            };
            Ok((out, if d.is_valid() { 0 } else { 1 }))
        }
        Command::Table {
            logic,
            formulas: texts,
            format,
            level,
        } => {
            let roots = formulas(&texts)?;
            if roots.is_empty() {
                let m = Nmatrix::new(logic);
                let out = match format {
                    TableFormat::Csv => export::nmatrix_csv(&m),
                    TableFormat::Json => json_line(export::nmatrix_json(&m)),
                };
                return Ok((out, 0));
            }
            let closure = Closure::of(&roots);
            let out = match level {
                Some(n) => {
                    let levels = level_filter_demo(logic, &closure, n)?;
                    match format {
                        TableFormat::Csv => export::levels_csv(&closure, &levels),
                        TableFormat::Json => json_line(export::levels_json(&closure, &levels)),
                    }
                }
                None => {
                    let model = filter_model_with(logic, &closure, &options)?;
                    match format {
                        TableFormat::Csv => export::table_csv(&model),
                        TableFormat::Json => json_line(export::table_json(&model)),
                    }
                }
            };
            Ok((out, 0))
        }
        Command::Model {
            logic,
            assumptions,
            formula,
            format,
            full,
        } => {
            let premises = formulas(&assumptions)?;
            let goal = parse(&formula)?;
            let d = decide_with(logic, &premises, &goal, &options)?;
            let whole = to_kripke(&d.model)?;
            let (k, rows, focus) = match d.witness {
                Some(w) if !full => {
                    let (sub, order) = whole.generated(w);
                    (sub, order, Some(0))
                }
                _ => (whole, (0..d.model.len()).collect(), d.witness),
            };
            // A countermodel is reported as confirmed only if forcing agrees at the focus.
            let confirmed =
                focus.map(|w| premises.iter().all(|a| forces(&k, w, a)) && !forces(&k, w, &goal));
            let out = match format {
                ModelFormat::Dot => {
                    let label = match (focus, confirmed) {
                        (Some(w), Some(true)) => format!("countermodel at w{w}"),
                        (Some(w), _) => format!("table witness w{w}, not confirmed by forcing"),
                        (None, _) => "model".to_string(),
                    };
                    let rows: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
                    format!(
                        "// {} {label}\n// table rows: {}\n{}",
                        d.verdict,
                        rows.join(" "),
                        export::kripke_dot(&k, focus)
                    )
                }
                ModelFormat::Json => {
                    let mut v = export::kripke_json(&k);
                    v["verdict"] = json!(d.verdict.to_string());
                    v["focus"] = json!(focus);
                    v["confirmed"] = json!(confirmed);
                    v["rows"] = json!(rows);
                    json_line(v)
                }
            };
            Ok((out, if d.is_valid() { 0 } else { 1 }))
        }
        Command::Oracle {
            logic,
            assumptions,
            goal,
            max_worlds,
            format,
        } => {
            let premises = formulas(&assumptions)?;
            let verdict =
                oracle_decide_with(logic, &premises, &parse(&goal)?, max_worlds, options.exec)?;
            let out = match (&verdict, format) {
                (OracleVerdict::NoCountermodelUpTo(n), OracleFormat::Json) => {
                    json_line(json!({"countermodel": null, "max_worlds": n}))
                }
                (OracleVerdict::NoCountermodelUpTo(n), OracleFormat::Dot) => {
                    format!("// no countermodel up to {n} worlds\n")
                }
                (OracleVerdict::NoCountermodelUpTo(n), OracleFormat::Text) => {
                    format!("NO COUNTERMODEL up to {n} worlds\n")
                }
                (OracleVerdict::Countermodel { model, world }, OracleFormat::Text) => {
                    format!("COUNTERMODEL at w{world}\n{}", describe(model))
                }
                (OracleVerdict::Countermodel { model, world }, OracleFormat::Json) => {
                    json_line(json!({"countermodel": export::kripke_json(model), "world": world}))
                }
                (OracleVerdict::Countermodel { model, world }, OracleFormat::Dot) => {
                    export::kripke_dot(model, Some(*world))
                }
            };
            Ok((out, if verdict.is_countermodel() { 1 } else { 0 }))
        }
        Command::Xcheck {
            logic,
            count,
            max_depth,
            atoms,
            seed,
            max_worlds,
        } => {
            let config = XcheckConfig {
                logic,
                count,
                max_depth,
                atoms,
                seed,
                bound: max_worlds,
                options,
            };
            let report = xcheck::run(&config)?;
            let mut out = String::new();
            for case in report.disagreements() {
                let _ = writeln!(out, "disagreement: {}", case.formula.print(true));
            }
            let _ = writeln!(out, "{report}");
            Ok((out, if report.passed() { 0 } else { 1 }))
        }
        Command::Axioms { logic, format } => {
            let axioms = logic.axioms();
            let out = match format {
                TextOrJson::Text => axioms
                    .iter()
                    .map(|(label, f)| format!("{label}: {}\n", f.print(true)))
                    .collect(),
                TextOrJson::Json => json_line(json!({
                    "logic": logic.name(),
                    "axioms": axioms
                        .iter()
                        .map(|(label, f)| json!({"label": label, "schema": f.print(true)}))
                        .collect::<Vec<_>>(),
                })),
            };
            Ok((out, 0))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
