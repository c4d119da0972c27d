//! Cell-by-cell transfer sweep over the bounding box of a lattice.
//!
//! Cells are visited in row-major order. The state is the packed window of
//! the last `R` visited cells, where `R` is the longest look-back any
//! forbidden pattern needs from its last cell. A digit is `0` for a cell
//! outside the lattice and `s + 1` for symbol `s`, so a pattern that touches
//! an absent cell never matches. Each placement of a forbidden pattern is
//! tested exactly once, at its last cell.
//!
//! Both orientations of the lattice are prepared and the one with the shorter
//! window wins; a horizontal constraint never needs more than one cell of
//! memory however wide the lattice is.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Point};
use crate::sft::SftSpec;

pub(crate) trait Weight: Clone {
    fn merge(&mut self, other: Self);
    fn is_zero(&self) -> bool;
}

impl Weight for num_bigint::BigUint {
    fn merge(&mut self, other: Self) {
        *self += other;
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl Weight for f64 {
    fn merge(&mut self, other: Self) {
        *self += other;
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Weight for bool {
    fn merge(&mut self, other: Self) {
        *self |= other;
    }
    fn is_zero(&self) -> bool {
        !*self
    }
}

struct Check {
    last: u32,
    /// `(distance back, column offset, digit)` for every earlier cell.
    others: Vec<(u64, i64, u128)>,
}

struct Cell {
    pos: i64,
    col: i64,
    original: Point,
}

pub(crate) struct Sweep {
    alphabet: u32,
    width: i64,
    window: u32,
    bits: u32,
    checks: Vec<Check>,
    cells: Vec<Cell>,
}

pub(crate) type States<W> = HashMap<u128, W>;

/// Rows are at least two cells apart in sweep order so that every earlier
/// cell of a 2×2 shape lies strictly behind its last cell.
fn padded_width(width: u64) -> i64 {
    width.max(2) as i64
}

fn digit_bits(alphabet: u32) -> u32 {
    32 - alphabet.leading_zeros()
}

impl Sweep {
    /// Prepares a sweep; fails if some forbidden shape exceeds 2×2 or the
    /// state window would be longer than `window_cap`.
    pub(crate) fn new(lattice: &FiniteLattice, spec: &SftSpec, window_cap: u32) -> Result<Self> {
        if !spec.fits_2x2() {
            return Err(Error::UnsupportedForbiddenShape);
        }
        let bits = digit_bits(spec.alphabet());
        let plain = (spec.clone(), padded_width(lattice.bounding_rect().width));
        let transposed_spec = spec.transpose();
        let flipped = (transposed_spec, padded_width(lattice.bounding_rect().height));

        let window_of = |spec: &SftSpec, width: i64| -> u64 {
            build_checks(spec, width)
                .iter()
                .flat_map(|c| c.others.iter().map(|o| o.0))
                .max()
                .unwrap_or(0)
        };
        let w_plain = window_of(&plain.0, plain.1);
        let w_flip = window_of(&flipped.0, flipped.1);
        let transpose = (w_flip, flipped.1) < (w_plain, plain.1);
        let window = w_plain.min(w_flip);
        let cap = window_cap.min(128 / bits) as u64;
        if window > cap {
            return Err(Error::BudgetExceeded {
                what: "profile window (cells)",
                needed: window,
                budget: cap,
            });
        }
        let window = window as u32;

        let (sweep_spec, sweep_lattice) = if transpose {
            (flipped.0, lattice.transpose())
        } else {
            (plain.0, lattice.clone())
        };
        let bounds = sweep_lattice.bounding_rect();
        let width = padded_width(bounds.width);
        let origin = bounds.origin;
        let cells = sweep_lattice
            .points()
            .map(|p| Cell {
                pos: (p.y - origin.y) * width + (p.x - origin.x),
                col: p.x - origin.x,
                original: if transpose { p.transpose() } else { p },
            })
            .collect();
        Ok(Sweep {
            alphabet: spec.alphabet(),
            width,
            window,
            bits,
            checks: build_checks(&sweep_spec, width),
            cells,
        })
    }

    fn mask(&self) -> u128 {
        let used = self.window * self.bits;
        if used >= 128 {
            u128::MAX
        } else {
            (1u128 << used) - 1
        }
    }

    fn violates(&self, key: u128, col: i64, symbol: u32) -> bool {
        let dmask = (1u128 << self.bits) - 1;
        self.checks.iter().any(|c| {
            c.last == symbol
                && c.others.iter().all(|&(dist, dx, digit)| {
                    let x = col + dx;
                    x >= 0 && x < self.width && (key >> ((dist as u32 - 1) * self.bits)) & dmask == digit
                })
        })
    }

    fn shift_absent<W: Weight>(&self, states: States<W>, gap: i64) -> States<W> {
        if gap <= 0 {
            return states;
        }
        let mut out: States<W> = HashMap::with_capacity(states.len());
        if gap >= self.window as i64 {
            let mut total: Option<W> = None;
            for (_, w) in states {
                match &mut total {
                    Some(t) => t.merge(w),
                    None => total = Some(w),
                }
            }
            if let Some(t) = total {
                out.insert(0, t);
            }
            return out;
        }
        let shift = gap as u32 * self.bits;
        let mask = self.mask();
        for (k, w) in states {
            insert(&mut out, (k << shift) & mask, w);
        }
        out
    }

    /// Runs the sweep. `transfer(point, symbol, weight)` returns the weight
    /// carried by choosing `symbol` at `point`, or `None` to forbid it;
    /// `after_cell` may rescale the live states.
    pub(crate) fn run<W: Weight>(
        &self,
        init: W,
        mut transfer: impl FnMut(Point, u32, &W) -> Option<W>,
        mut after_cell: impl FnMut(&mut States<W>),
    ) -> States<W> {
        let mut states: States<W> = HashMap::from([(0u128, init)]);
        let mask = self.mask();
        let mut last = -1i64;
        for cell in &self.cells {
            states = self.shift_absent(states, cell.pos - last - 1);
            let mut next: States<W> = HashMap::with_capacity(states.len() * self.alphabet as usize);
            for (key, w) in states {
                for s in 0..self.alphabet {
                    if self.violates(key, cell.col, s) {
                        continue;
                    }
                    let Some(w2) = transfer(cell.original, s, &w) else {
                        continue;
                    };
                    if w2.is_zero() {
                        continue;
                    }
                    insert(&mut next, ((key << self.bits) | (s as u128 + 1)) & mask, w2);
                }
            }
            states = next;
            after_cell(&mut states);
            last = cell.pos;
        }
        states
    }
}

fn insert<W: Weight>(states: &mut States<W>, key: u128, w: W) {
    match states.entry(key) {
        Entry::Occupied(mut o) => o.get_mut().merge(w),
        Entry::Vacant(v) => {
            v.insert(w);
        }
    }
}

/// Folds all final weights together.
pub(crate) fn total<W: Weight>(states: States<W>, zero: W) -> W {
    states.into_values().fold(zero, |mut acc, w| {
        acc.merge(w);
        acc
    })
}

fn build_checks(spec: &SftSpec, width: i64) -> Vec<Check> {
    spec.forbidden()
        .iter()
        .map(|f| {
            let cells = f.cells();
            let (last_pt, last_sym) = *cells.last().expect("nonempty");
            let others = cells[..cells.len() - 1]
                .iter()
                .map(|&(p, s)| {
                    let dx = p.x - last_pt.x;
                    let dy = p.y - last_pt.y;
                    let dist = -dy * width - dx;
                    debug_assert!(dist > 0);
                    (dist as u64, dx, s as u128 + 1)
                })
                .collect();
            Check { last: last_sym, others }
        })
        .collect()
}
