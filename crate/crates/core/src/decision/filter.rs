use fixedbitset::FixedBitSet;

use super::relation::Index;
use super::rows::Rows;
use crate::logics::Logic;
use crate::par::{map_range, Exec};

/// What a filtering run did.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FilterStats {
    /// Rows before filtering.
    pub initial: usize,
    /// Rows removed in total.
    pub deleted: usize,
    /// Passes that removed at least one row.
    pub rounds: usize,
}

/// Deletes unsupported rows until none remain. Returns the surviving row
/// indices in ascending order.
pub(crate) fn greatest_fixpoint(
    logic: Logic,
    rows: &Rows,
    exec: Exec,
) -> (Vec<usize>, FilterStats) {
    let index = Index::new(logic, rows, exec);
    let mut alive = FixedBitSet::with_capacity(rows.len());
    alive.insert_range(..);
    let mut stats = FilterStats {
        initial: rows.len(),
        ..FilterStats::default()
    };
    loop {
        let doomed = map_range(exec, index.class_rows.len(), |c| {
            unsupported(&index, c, &alive)
        });
        let mut any = false;
        for r in doomed.into_iter().flatten() {
            alive.set(r, false);
            stats.deleted += 1;
            any = true;
        }
        if !any {
            break;
        }
        stats.rounds += 1;
    }
    (alive.ones().collect(), stats)
}

/// Rows of class `c` with a requirement no live successor meets.
fn unsupported(index: &Index, c: usize, alive: &FixedBitSet) -> Vec<usize> {
    let members: Vec<usize> = index.class_rows[c]
        .iter()
        .copied()
        .filter(|&r| alive.contains(r))
        .collect();
    if members.iter().all(|&r| index.requirements[r].is_empty()) {
        return Vec::new();
    }
    let accepted = index.accepted(c, alive);
    let mut verdicts: Vec<Option<bool>> = Vec::new();
    let mut met = |id: usize| {
        if verdicts.len() <= id {
            verdicts.resize(id + 1, None);
        }
        *verdicts[id].get_or_insert_with(|| !accepted.is_disjoint(&index.selectors[id]))
    };
    members
        .into_iter()
        .filter(|&r| !index.requirements[r].iter().all(|&id| met(id)))
        .collect()
}
