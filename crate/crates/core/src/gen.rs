//! Seeded random formulas for differential testing.

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formula::Formula;

#[derive(Clone, Copy, Debug)]
enum Shape {
    Implies,
    Box,
    Dia,
    Not,
    And,
    Or,
    Atom,
    Bot,
}

const SHAPES: [(Shape, u32); 8] = [
    (Shape::Implies, 3),
    (Shape::Box, 2),
    (Shape::Dia, 2),
    (Shape::Not, 2),
    (Shape::And, 1),
    (Shape::Or, 1),
    (Shape::Atom, 4),
    (Shape::Bot, 1),
];

/// Atom names used by the generator, in order.
pub fn atom_name(i: usize) -> String {
    let c = (b'p' + (i % 11) as u8) as char;
    if i < 11 {
        c.to_string()
    } else {
        format!("{c}{}", i / 11)
    }
}

/// Draws formulas of depth at most `max_depth` over `atoms` atom names.
pub struct FormulaGen {
    rng: ChaCha8Rng,
    max_depth: usize,
    atoms: usize,
    all: WeightedIndex<u32>,
    leaves: WeightedIndex<u32>,
}

impl FormulaGen {
    pub fn new(seed: u64, max_depth: usize, atoms: usize) -> FormulaGen {
        assert!(atoms > 0, "need at least one atom");
        FormulaGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_depth,
            atoms,
            all: WeightedIndex::new(SHAPES.iter().map(|s| s.1)).expect("positive weights"),
            leaves: WeightedIndex::new(SHAPES[6..].iter().map(|s| s.1)).expect("positive weights"),
        }
    }

    pub fn next_formula(&mut self) -> Formula {
        self.draw(self.max_depth)
    }

    fn draw(&mut self, depth: usize) -> Formula {
        let shape = if depth == 0 {
            SHAPES[6 + self.leaves.sample(&mut self.rng)].0
        } else {
            SHAPES[self.all.sample(&mut self.rng)].0
        };
        let d = depth.saturating_sub(1);
        match shape {
            Shape::Implies => Formula::implies(self.draw(d), self.draw(d)),
            Shape::Box => Formula::boxed(self.draw(d)),
            Shape::Dia => Formula::dia(self.draw(d)),
            Shape::Not => Formula::not(self.draw(d)),
            Shape::And => Formula::and(self.draw(d), self.draw(d)),
            Shape::Or => Formula::or(self.draw(d), self.draw(d)),
            Shape::Atom => Formula::atom(atom_name(self.rng.gen_range(0..self.atoms))),
            Shape::Bot => Formula::Falsum,
        }
    }
}

impl Iterator for FormulaGen {
    type Item = Formula;

    fn next(&mut self) -> Option<Formula> {
        Some(self.next_formula())
    }
}
