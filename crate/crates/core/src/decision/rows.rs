use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{Closure, Node};
use crate::logics::Logic;
use crate::nmatrix::Nmatrix;
use crate::par::{map_range, Exec};
use crate::values::{TruthValue, ValueSet};

/// A list of equal-width rows stored contiguously. Row `i` assigns
/// `get(i)[k]` to the `k`-th closure member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rows {
    width: usize,
    len: usize,
    data: Vec<TruthValue>,
}

impl Rows {
    pub fn new(width: usize) -> Rows {
        Rows {
            width,
            len: 0,
            data: Vec::new(),
        }
    }

    pub fn from_rows<R: AsRef<[TruthValue]>>(
        width: usize,
        rows: impl IntoIterator<Item = R>,
    ) -> Rows {
        let mut out = Rows::new(width);
        for r in rows {
            out.push(r.as_ref());
        }
        out
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> &[TruthValue] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn push(&mut self, row: &[TruthValue]) {
        assert_eq!(row.len(), self.width, "row width mismatch");
        self.data.extend_from_slice(row);
        self.len += 1;
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[TruthValue]> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// The rows at `indices`, in that order.
    pub fn select(&self, indices: impl IntoIterator<Item = usize>) -> Rows {
        let mut out = Rows::new(self.width);
        for i in indices {
            out.push(self.get(i));
        }
        out
    }

    /// Every row cut down to its first `width` positions, duplicates removed.
    /// Order of first occurrence is kept.
    pub fn project(&self, width: usize) -> Rows {
        assert!(width <= self.width);
        let mut seen = std::collections::HashSet::new();
        let mut out = Rows::new(width);
        for row in self.iter() {
            let cut = &row[..width];
            if seen.insert(cut) {
                out.push(cut);
            }
        }
        out
    }

    pub fn to_vecs(&self) -> Vec<Vec<TruthValue>> {
        self.iter().map(<[TruthValue]>::to_vec).collect()
    }
}

impl fmt::Debug for Rows {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for row in self.iter() {
            let names: Vec<_> = row.iter().map(|v| v.name()).collect();
            list.entry(&names.join(" "));
        }
        list.finish()
    }
}

/// Values a position may take given the earlier positions of `row`.
pub(crate) fn candidates(m: &Nmatrix, node: &Node, row: &[TruthValue]) -> ValueSet {
    let raw = match node {
        Node::Atom(_) => m.values(),
        Node::Falsum => m.bot_values(),
        Node::Implies(a, b) => m.imp_unchecked(row[*a], row[*b]),
        Node::Box(a) => m.box_unchecked(row[*a]),
    };
    match row.first() {
        None => raw,
        Some(v) if v.is_stable() => raw.intersect(ValueSet::STABLE),
        Some(_) => raw.minus(ValueSet::STABLE),
    }
}

/// Whether `row` is a legal partial valuation over `closure`: each value lies
/// in the truth function's output on its subformulas, and stable values occur
/// either everywhere or nowhere.
pub fn is_compatible(logic: Logic, closure: &Closure, row: &[TruthValue]) -> bool {
    let m = Nmatrix::new(logic);
    row.len() == closure.len()
        && closure
            .nodes()
            .iter()
            .enumerate()
            .all(|(i, node)| candidates(&m, node, &row[..i]).contains(row[i]))
}

const BLOCK: usize = 4096;

/// All partial valuations over `closure`, in lexicographic order (value order,
/// closure order). Fails once any stage would exceed `cap` rows.
pub fn enumerate_rows_with(
    logic: Logic,
    closure: &Closure,
    cap: usize,
    exec: Exec,
) -> Result<Rows> {
    let m = Nmatrix::new(logic);
    let mut rows = Rows::from_rows(0, [[]; 1]);
    for (k, node) in closure.nodes().iter().enumerate() {
        let count: usize = rows.iter().map(|row| candidates(&m, node, row).len()).sum();
        if count > cap {
            return Err(Error::RowCapExceeded { count, cap });
        }
        let blocks = rows.len().div_ceil(BLOCK);
        let parts = map_range(exec, blocks, |b| {
            let mut out = Vec::new();
            for i in b * BLOCK..((b + 1) * BLOCK).min(rows.len()) {
                let row = rows.get(i);
                for v in candidates(&m, node, row).iter() {
                    out.extend_from_slice(row);
                    out.push(v);
                }
            }
            out
        });
        let mut data = Vec::with_capacity(count * (k + 1));
        for part in parts {
            data.extend(part);
        }
        rows = Rows {
            width: k + 1,
            len: count,
            data,
        };
    }
    Ok(rows)
}
