use super::{Frame, KripkeModel};
use crate::error::{Error, Result};
use crate::formula::{Closure, Formula, Node};
use crate::logics::{FrameProp, FrameProps, Logic};
use crate::par::{find_map_first, Exec};

/// Largest `worlds² + worlds · atoms` the oracle will enumerate.
pub const MAX_MODEL_BITS: usize = 26;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    /// A model of the logic's frame class with a world forcing every
    /// assumption but not the goal.
    Countermodel { model: KripkeModel, world: usize },
    /// No countermodel with at most this many worlds.
    NoCountermodelUpTo(usize),
}

impl OracleVerdict {
    pub fn is_countermodel(&self) -> bool {
        matches!(self, OracleVerdict::Countermodel { .. })
    }
}

fn frame_ok(succ: &[u32], props: FrameProps) -> bool {
    let n = succ.len();
    props.iter().all(|p| match p {
        FrameProp::Serial => succ.iter().all(|&s| s != 0),
        FrameProp::Reflexive => (0..n).all(|u| succ[u] >> u & 1 == 1),
        FrameProp::Symmetric => {
            (0..n).all(|u| (0..n).all(|v| succ[u] >> v & 1 == 0 || succ[v] >> u & 1 == 1))
        }
        FrameProp::Transitive => {
            (0..n).all(|u| (0..n).all(|v| succ[u] >> v & 1 == 0 || succ[v] & !succ[u] == 0))
        }
        FrameProp::Euclidean => {
            (0..n).all(|u| (0..n).all(|v| succ[u] >> v & 1 == 0 || succ[u] & !succ[v] == 0))
        }
    })
}

/// Worlds forcing each closure member, as bit masks.
fn evaluate(closure: &Closure, succ: &[u32], atom_masks: &[u32], out: &mut Vec<u32>) {
    let full = (1u32 << succ.len()) - 1;
    out.clear();
    let mut next_atom = 0;
    for node in closure.nodes() {
        let mask = match node {
            Node::Atom(_) => {
                next_atom += 1;
                atom_masks[next_atom - 1]
            }
            Node::Falsum => 0,
            Node::Implies(a, b) => (!out[*a] | out[*b]) & full,
            Node::Box(a) => {
                let holds = out[*a];
                (0..succ.len())
                    .filter(|&w| succ[w] & !holds == 0)
                    .fold(0, |m, w| m | 1 << w)
            }
        };
        out.push(mask);
    }
}

/// Searches every model with `1..=max_worlds` worlds over the logic's frame
/// class for a countermodel. Frames are tried in order of size, then relation
/// code, then valuation code; the first hit is returned.
pub fn oracle_decide(
    logic: Logic,
    assumptions: &[Formula],
    goal: &Formula,
    max_worlds: usize,
) -> Result<OracleVerdict> {
    oracle_decide_with(logic, assumptions, goal, max_worlds, Exec::default())
}

pub fn oracle_decide_with(
    logic: Logic,
    assumptions: &[Formula],
    goal: &Formula,
    max_worlds: usize,
    exec: Exec,
) -> Result<OracleVerdict> {
    let closure = Closure::of(assumptions.iter().chain(std::iter::once(goal)));
    let atoms: Vec<&str> = closure.atoms().into_iter().map(|(_, a)| a).collect();
    if max_worlds * max_worlds + max_worlds * atoms.len() > MAX_MODEL_BITS {
        return Err(Error::OracleBudget {
            worlds: max_worlds,
            atoms: atoms.len(),
        });
    }
    let premises: Vec<usize> = assumptions
        .iter()
        .map(|a| closure.position(a).expect("assumption in closure"))
        .collect();
    let target = closure.position(goal).expect("goal in closure");
    let props = logic.frame_props();
    for n in 1..=max_worlds {
        let world_mask = (1u32 << n) - 1;
        let found = find_map_first(exec, 1 << (n * n), |code| {
            let succ: Vec<u32> = (0..n)
                .map(|u| (code >> (u * n)) as u32 & world_mask)
                .collect();
            if !frame_ok(&succ, props) {
                return None;
            }
            let mut values = Vec::with_capacity(closure.len());
            let mut atom_masks = vec![0u32; atoms.len()];
            for val in 0..1usize << (n * atoms.len()) {
                for (i, m) in atom_masks.iter_mut().enumerate() {
                    *m = (val >> (i * n)) as u32 & world_mask;
                }
                evaluate(&closure, &succ, &atom_masks, &mut values);
                let bad = premises.iter().fold(world_mask, |m, &k| m & values[k]) & !values[target];
                if bad != 0 {
                    return Some((succ, atom_masks, bad.trailing_zeros() as usize));
                }
            }
            None
        });
        if let Some((succ, atom_masks, world)) = found {
            let pairs = (0..n).flat_map(|u| (0..n).map(move |v| (u, v)));
            let frame = Frame::from_pairs(n, pairs.filter(|&(u, v)| succ[u] >> v & 1 == 1));
            let mut model = KripkeModel::new(frame);
            for (atom, mask) in atoms.iter().zip(atom_masks) {
                model.add_atom(atom);
                for w in 0..n {
                    model.set_atom(atom, w, mask >> w & 1 == 1);
                }
            }
            return Ok(OracleVerdict::Countermodel { model, world });
        }
    }
    Ok(OracleVerdict::NoCountermodelUpTo(max_worlds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::kripke::forces;

    fn f(text: &str) -> Formula {
        parse(text).unwrap()
    }

    #[test]
    fn k_refutes_t() {
        let goal = f("[]p -> p");
        match oracle_decide(Logic::K, &[], &goal, 2).unwrap() {
            OracleVerdict::Countermodel { model, world } => {
                assert!(!forces(&model, world, &goal));
                // Smallest: one world, no successors, p false.
                assert_eq!(model.worlds(), 1);
                assert!(model.frame().pairs().is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_world_irreflexive_countermodel_exists() {
        let mut m = KripkeModel::new(Frame::from_pairs(2, [(0, 1)]));
        m.set_atom("p", 1, true);
        m.add_atom("p");
        assert!(!forces(&m, 0, &f("[]p -> p")));
    }

    #[test]
    fn kt_validates_t() {
        assert_eq!(
            oracle_decide(Logic::KT, &[], &f("[]p -> p"), 3).unwrap(),
            OracleVerdict::NoCountermodelUpTo(3)
        );
    }

    #[test]
    fn kt_refutes_4() {
        let goal = f("[]p -> [][]p");
        // Every reflexive relation on two worlds is transitive.
        assert_eq!(
            oracle_decide(Logic::KT, &[], &goal, 2).unwrap(),
            OracleVerdict::NoCountermodelUpTo(2)
        );
        match oracle_decide(Logic::KT, &[], &goal, 3).unwrap() {
            OracleVerdict::Countermodel { model, world } => {
                assert!(model.frame().is_reflexive());
                assert!(!model.frame().is_transitive());
                assert!(!forces(&model, world, &goal));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn budget_guard() {
        let goal = f("p -> q -> r");
        assert!(matches!(
            oracle_decide(Logic::K, &[], &goal, 5),
            Err(Error::OracleBudget {
                worlds: 5,
                atoms: 3
            })
        ));
    }

    #[test]
    fn axioms_hold_on_their_frames() {
        let binding = [("A", f("p")), ("B", f("q"))]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        for logic in Logic::ALL {
            for (label, schema) in logic.axioms() {
                let instance = schema.instantiate(&binding).unwrap();
                assert_eq!(
                    oracle_decide(logic, &[], &instance, 3).unwrap(),
                    OracleVerdict::NoCountermodelUpTo(3),
                    "{logic} {label}"
                );
            }
        }
    }

    #[test]
    fn modes_agree() {
        let goal = f("<>p -> []<>p");
        for logic in [Logic::K, Logic::KT4, Logic::KD] {
            let a = oracle_decide_with(logic, &[], &goal, 3, Exec::Sequential).unwrap();
            let b = oracle_decide_with(logic, &[], &goal, 3, Exec::Parallel).unwrap();
            assert_eq!(a, b);
        }
    }
}
