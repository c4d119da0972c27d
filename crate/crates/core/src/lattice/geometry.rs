use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{intersect_runs, FiniteLattice, Point, Run};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// Axis-aligned rectangle `ℤ_{width×height}(origin)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub origin: Point,
    pub width: u64,
    pub height: u64,
}

impl Rect {
    pub fn to_lattice(&self) -> FiniteLattice {
        FiniteLattice::rectangle(self.origin, self.width, self.height)
    }

    fn transpose(self) -> Rect {
        Rect {
            origin: self.origin.transpose(),
            width: self.height,
            height: self.width,
        }
    }
}

/// Points `(i,j)` whose right, upper and upper-right neighbours all lie in `L`.
pub fn interior(lattice: &FiniteLattice) -> FiniteLattice {
    let rows = lattice.row_runs().filter_map(|(y, runs)| {
        let above = lattice.runs_at(y + 1);
        let both = intersect_runs(runs, above);
        let eroded: Vec<Run> = both
            .into_iter()
            .filter(|&(s, e)| e > s)
            .map(|(s, e)| (s, e - 1))
            .collect();
        (!eroded.is_empty()).then_some((y, eroded))
    });
    FiniteLattice::from_row_runs(rows)
}

pub fn boundary(lattice: &FiniteLattice) -> FiniteLattice {
    lattice.difference(&interior(lattice))
}

/// `outer \ inner`, requiring `inner ⊆ outer`.
pub fn complement_in(inner: &FiniteLattice, outer: &FiniteLattice) -> Result<FiniteLattice> {
    if !inner.is_subset_of(outer) {
        return Err(Error::SubsetViolation);
    }
    Ok(outer.difference(inner))
}

/// Split of a lattice against the origin-aligned grid of `k×l` blocks
/// `ℤ_{k×l}((ak, bl))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub k: u64,
    pub l: u64,
    /// Block indices `(a, b)` of the blocks fully inside the lattice, in
    /// row-major order.
    pub index_set: Vec<(i64, i64)>,
    pub alpha: u64,
    pub covered: FiniteLattice,
    pub residue: FiniteLattice,
    pub beta: u64,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Block runs `[a_lo, a_hi]` of full blocks inside each band, per band index `b`.
fn full_blocks(lattice: &FiniteLattice, k: u64, l: u64) -> Vec<(i64, Vec<(i64, i64)>)> {
    assert!(k >= 1 && l >= 1, "block sides must be positive");
    let (k, l) = (k as i64, l as i64);
    if lattice.is_empty() {
        return Vec::new();
    }
    let bounds = lattice.bounding_rect();
    let y_lo = bounds.origin.y;
    let y_hi = y_lo + bounds.height as i64 - 1;
    let mut out = Vec::new();
    for b in y_lo.div_euclid(l)..=y_hi.div_euclid(l) {
        let mut common: Option<Vec<Run>> = None;
        for y in b * l..(b + 1) * l {
            let runs = lattice.runs_at(y);
            common = Some(match common {
                None => runs.to_vec(),
                Some(c) => intersect_runs(&c, runs),
            });
            if common.as_ref().is_some_and(|c| c.is_empty()) {
                break;
            }
        }
        let blocks: Vec<(i64, i64)> = common
            .unwrap_or_default()
            .into_iter()
            .filter_map(|(s, e)| {
                let lo = ceil_div(s, k);
                let hi = (e + 1).div_euclid(k) - 1;
                (lo <= hi).then_some((lo, hi))
            })
            .collect();
        if !blocks.is_empty() {
            out.push((b, blocks));
        }
    }
    out
}

pub fn block_decompose(lattice: &FiniteLattice, k: u64, l: u64) -> BlockDecomposition {
    let bands = full_blocks(lattice, k, l);
    let (ki, li) = (k as i64, l as i64);
    let mut index_set = Vec::new();
    let mut rows = Vec::new();
    for (b, blocks) in &bands {
        for &(lo, hi) in blocks {
            index_set.extend((lo..=hi).map(|a| (a, *b)));
        }
        let runs: Vec<Run> = blocks.iter().map(|&(lo, hi)| (lo * ki, (hi + 1) * ki - 1)).collect();
        for y in b * li..(b + 1) * li {
            rows.push((y, runs.clone()));
        }
    }
    let covered = FiniteLattice::from_row_runs(rows);
    let residue = lattice.difference(&covered);
    BlockDecomposition {
        k,
        l,
        alpha: index_set.len() as u64,
        index_set,
        beta: residue.len() as u64,
        covered,
        residue,
    }
}

/// `(α, β)` of [`block_decompose`] without materialising the pieces.
pub fn block_counts(lattice: &FiniteLattice, k: u64, l: u64) -> (u64, u64) {
    let alpha: u64 = full_blocks(lattice, k, l)
        .iter()
        .flat_map(|(_, blocks)| blocks.iter())
        .map(|&(lo, hi)| (hi - lo + 1) as u64)
        .sum();
    (alpha, lattice.len() as u64 - alpha * k * l)
}

/// Points whose maximal run along `axis` has length exactly `m`.
pub fn run_length_class(lattice: &FiniteLattice, axis: Axis, m: u64) -> FiniteLattice {
    match axis {
        Axis::Horizontal => FiniteLattice::from_row_runs(lattice.row_runs().map(|(y, runs)| {
            let keep = runs.iter().copied().filter(|&(s, e)| (e - s + 1) as u64 == m).collect();
            (y, keep)
        })),
        Axis::Vertical => run_length_class(&lattice.transpose(), Axis::Horizontal, m).transpose(),
    }
}

/// Number of maximal runs along `axis`, keyed by run length.
pub fn run_counts(lattice: &FiniteLattice, axis: Axis) -> BTreeMap<u64, u64> {
    let owned;
    let source = match axis {
        Axis::Horizontal => lattice,
        Axis::Vertical => {
            owned = lattice.transpose();
            &owned
        }
    };
    let mut census = BTreeMap::new();
    for (_, runs) in source.row_runs() {
        for &(s, e) in runs {
            *census.entry((e - s + 1) as u64).or_insert(0) += 1;
        }
    }
    census
}

/// `m ↦ β_m`, the number of points whose run length along `axis` is `m`.
pub fn run_length_census(lattice: &FiniteLattice, axis: Axis) -> BTreeMap<u64, u64> {
    run_counts(lattice, axis)
        .into_iter()
        .map(|(m, runs)| (m, m * runs))
        .collect()
}

/// Cuts the lattice along full horizontal (or vertical) lines into the
/// fewest rectangles. Every row (column) must have contiguous support.
pub fn decompose_bands(lattice: &FiniteLattice, axis: Axis) -> Result<Vec<Rect>> {
    match axis {
        Axis::Horizontal => {
            let mut bands: Vec<Rect> = Vec::new();
            for (y, runs) in lattice.row_runs() {
                if runs.len() != 1 {
                    return Err(Error::NotDecomposable { row: y });
                }
                let (s, e) = runs[0];
                let width = (e - s + 1) as u64;
                match bands.last_mut() {
                    Some(band)
                        if band.origin.x == s && band.width == width && band.origin.y + band.height as i64 == y =>
                    {
                        band.height += 1;
                    }
                    _ => bands.push(Rect {
                        origin: Point::new(s, y),
                        width,
                        height: 1,
                    }),
                }
            }
            Ok(bands)
        }
        Axis::Vertical => Ok(decompose_bands(&lattice.transpose(), Axis::Horizontal)?
            .into_iter()
            .map(Rect::transpose)
            .collect()),
    }
}
