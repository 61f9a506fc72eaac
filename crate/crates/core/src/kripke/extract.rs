use super::{Frame, KripkeModel};
use crate::decision::{support_requirements, TableModel};
use crate::error::{Error, Result};
use crate::logics::{FrameProp, FrameProps};

fn require(candidates: &Frame, prop: FrameProp, u: usize, v: usize) -> Result<()> {
    if candidates.contains(u, v) {
        Ok(())
    } else {
        Err(Error::ClosureImpossible {
            property: prop.name(),
            detail: format!("pair ({u}, {v}) is not admissible"),
        })
    }
}

/// Least superset of `start` inside `candidates` that is reflexive,
/// symmetric, transitive and Euclidean as `props` demands. Seriality is
/// checked on the result, never forced.
pub fn frame_closure(start: &Frame, props: FrameProps, candidates: &Frame) -> Result<Frame> {
    let n = start.len();
    let mut r = start.clone();
    if let Some((u, v)) = start
        .pairs()
        .into_iter()
        .find(|&(u, v)| !candidates.contains(u, v))
    {
        return Err(Error::ClosureImpossible {
            property: "start",
            detail: format!("pair ({u}, {v}) is not a candidate"),
        });
    }
    loop {
        let mut changed = false;
        if props.contains(FrameProp::Reflexive) {
            for u in 0..n {
                if !r.contains(u, u) {
                    require(candidates, FrameProp::Reflexive, u, u)?;
                    changed |= r.insert(u, u);
                }
            }
        }
        if props.contains(FrameProp::Symmetric) {
            for (u, v) in r.pairs() {
                if !r.contains(v, u) {
                    require(candidates, FrameProp::Symmetric, v, u)?;
                    changed |= r.insert(v, u);
                }
            }
        }
        if props.contains(FrameProp::Transitive) {
            for (u, v) in r.pairs() {
                for w in r.successors(v).collect::<Vec<_>>() {
                    if !r.contains(u, w) {
                        require(candidates, FrameProp::Transitive, u, w)?;
                        changed |= r.insert(u, w);
                    }
                }
            }
        }
        if props.contains(FrameProp::Euclidean) {
            for u in 0..n {
                let succ: Vec<usize> = r.successors(u).collect();
                for &v in &succ {
                    for &w in &succ {
                        if !r.contains(v, w) {
                            require(candidates, FrameProp::Euclidean, v, w)?;
                            changed |= r.insert(v, w);
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    if props.contains(FrameProp::Serial) {
        if let Some(u) = (0..n).find(|&u| r.successors(u).next().is_none()) {
            return Err(Error::ClosureImpossible {
                property: FrameProp::Serial.name(),
                detail: format!("world {u} has no successor"),
            });
        }
    }
    Ok(r)
}

/// The relational reading of a filtered model: one world per row, an atom
/// holds where its row value is designated. Accessibility starts from one
/// supporting successor per requirement (first in row order) and is then
/// closed under the logic's frame properties within the maximal relation.
pub fn to_kripke(model: &TableModel) -> Result<KripkeModel> {
    let logic = model.logic();
    let rows = model.rows();
    let n = rows.len();
    let maximal = model.relation();
    let candidates = Frame::from_pairs(n, maximal.pairs());
    let mut start = Frame::empty(n);
    for i in 0..n {
        let row = rows.get(i);
        for (k, &v) in row.iter().enumerate() {
            for req in support_requirements(logic, v) {
                if start.successors(i).any(|j| req.contains(rows.get(j)[k])) {
                    continue;
                }
                let j = maximal
                    .successors(i)
                    .find(|&j| req.contains(rows.get(j)[k]))
                    .ok_or_else(|| Error::ClosureImpossible {
                        property: "support",
                        detail: format!("row {i} has no successor supporting position {k}"),
                    })?;
                start.insert(i, j);
            }
        }
    }
    let frame = frame_closure(&start, logic.frame_props(), &candidates)?;
    let mut out = KripkeModel::new(frame);
    for (k, atom) in model.closure().atoms() {
        out.add_atom(atom);
        for i in 0..n {
            if rows.get(i)[k].is_designated() {
                out.set_atom(atom, i, true);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decision::filter_model;
    use crate::formula::{parse, Closure};
    use crate::logics::Logic;

    fn props(list: &[FrameProp]) -> FrameProps {
        FrameProps::of(list)
    }

    #[test]
    fn transitive_closure_adds_shortcut() {
        let r = Frame::from_pairs(3, [(0, 1), (1, 2)]);
        let out = frame_closure(&r, props(&[FrameProp::Transitive]), &Frame::full(3)).unwrap();
        assert_eq!(out.pairs(), [(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn reflexive_transitive_chain() {
        let r = Frame::from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]);
        let s4 = Logic::KT4.frame_props();
        let out = frame_closure(&r, s4, &Frame::full(3)).unwrap();
        assert!(out.contains(0, 2));
        assert_eq!(out.pairs().len(), 6);
    }

    #[test]
    fn symmetric_and_reflexive_closure() {
        let r = Frame::from_pairs(2, [(0, 1)]);
        let sym = frame_closure(&r, props(&[FrameProp::Symmetric]), &Frame::full(2)).unwrap();
        assert_eq!(sym.pairs(), [(0, 1), (1, 0)]);
        let refl = frame_closure(
            &Frame::empty(2),
            props(&[FrameProp::Reflexive]),
            &Frame::full(2),
        )
        .unwrap();
        assert_eq!(refl.pairs(), [(0, 0), (1, 1)]);
    }

    #[test]
    fn closure_outside_candidates_fails() {
        let r = Frame::from_pairs(3, [(0, 1), (1, 2)]);
        let candidates = Frame::from_pairs(3, [(0, 1), (1, 2)]);
        let err = frame_closure(&r, props(&[FrameProp::Transitive]), &candidates).unwrap_err();
        assert!(matches!(
            err,
            Error::ClosureImpossible {
                property: "transitive",
                ..
            }
        ));
        let err = frame_closure(
            &Frame::empty(1),
            props(&[FrameProp::Serial]),
            &Frame::full(1),
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::ClosureImpossible {
                property: "serial",
                ..
            }
        ));
    }

    #[test]
    fn kt_models_are_reflexive() {
        let c = Closure::of([&parse("[]p -> [][]p").unwrap()]);
        let m = filter_model(Logic::KT, &c).unwrap();
        let k = to_kripke(&m).unwrap();
        assert!(k.frame().is_reflexive());
    }

    #[test]
    fn stable_row_has_no_successors() {
        let c = Closure::of([&parse("p").unwrap()]);
        let m = filter_model(Logic::K, &c).unwrap();
        let k = to_kripke(&m).unwrap();
        for i in 0..m.len() {
            if m.row(i)[0].is_stable() {
                assert_eq!(k.frame().successors(i).count(), 0);
            }
        }
    }
}
