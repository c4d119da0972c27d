//! Exhaustive backtracking over every cell of a lattice.
//!
//! Shares nothing with the sweep engine: each placement of each forbidden
//! pattern becomes a constraint attached to its highest-indexed cell and is
//! tested as soon as that cell receives a symbol.

use crate::lattice::FiniteLattice;
use crate::sft::{placements, SftSpec};

struct Constraint {
    cells: Vec<(usize, u32)>,
}

pub(crate) struct Backtracker {
    alphabet: u32,
    /// Constraints indexed by the cell that completes them.
    closing: Vec<Vec<Constraint>>,
    fixed: Vec<Option<u32>>,
}

impl Backtracker {
    pub(crate) fn new(lattice: &FiniteLattice, spec: &SftSpec) -> Self {
        let n = lattice.len();
        let mut closing: Vec<Vec<Constraint>> = (0..n).map(|_| Vec::new()).collect();
        for f in spec.forbidden() {
            for v in placements(&f.shape(), lattice) {
                let cells: Vec<(usize, u32)> = f
                    .cells()
                    .iter()
                    .map(|&(o, s)| (lattice.index_of(o + v).expect("placement inside lattice"), s))
                    .collect();
                let last = cells.iter().map(|c| c.0).max().expect("nonempty pattern");
                closing[last].push(Constraint { cells });
            }
        }
        Backtracker {
            alphabet: spec.alphabet(),
            closing,
            fixed: vec![None; n],
        }
    }

    /// Pins cell `index` to `symbol`.
    pub(crate) fn fix(&mut self, index: usize, symbol: u32) {
        self.fixed[index] = Some(symbol);
    }

    /// Visits every admissible assignment; the visitor returns `false` to stop.
    /// Returns `false` if stopped early.
    pub(crate) fn for_each(&self, mut visit: impl FnMut(&[u32]) -> bool) -> bool {
        let mut assignment = vec![0u32; self.fixed.len()];
        self.descend(0, &mut assignment, &mut visit)
    }

    fn descend(&self, i: usize, a: &mut Vec<u32>, visit: &mut impl FnMut(&[u32]) -> bool) -> bool {
        if i == a.len() {
            return visit(a);
        }
        let choices = match self.fixed[i] {
            Some(s) => s..s + 1,
            None => 0..self.alphabet,
        };
        for s in choices {
            a[i] = s;
            let bad = self.closing[i].iter().any(|c| c.cells.iter().all(|&(j, t)| a[j] == t));
            if !bad && !self.descend(i + 1, a, visit) {
                return false;
            }
        }
        true
    }

    pub(crate) fn count(&self) -> u128 {
        let mut n = 0u128;
        self.for_each(|_| {
            n += 1;
            true
        });
        n
    }

    pub(crate) fn exists(&self) -> bool {
        !self.for_each(|_| false)
    }
}
