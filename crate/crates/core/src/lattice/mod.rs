//! Finite subsets of the square lattice.
//!
//! A [`FiniteLattice`] stores its points row by row as maximal horizontal
//! runs. Rows are sorted by `y` and runs by `x`, so iteration always yields
//! points in the canonical row-major order `(y, x)`. Two lattices are equal
//! exactly when they contain the same points.

mod geometry;
mod tessellation;

pub use geometry::{
    block_counts, block_decompose, boundary, complement_in, decompose_bands, interior, run_counts, run_length_census,
    run_length_class, Axis, BlockDecomposition, Rect,
};
pub use tessellation::{is_tessellation, Tessellation, DEFAULT_TESSELLATION_BOUND};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A site of ℤ².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn transpose(self) -> Self {
        Point::new(self.y, self.x)
    }

    /// True when the components are coprime (and the vector is nonzero).
    pub fn is_primitive(self) -> bool {
        gcd(self.x.unsigned_abs(), self.y.unsigned_abs()) == 1
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(x, y)
    }
}

/// Inclusive horizontal run `start..=end`.
pub type Run = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Row {
    y: i64,
    runs: Vec<Run>,
}

/// Smallest axis-aligned rectangle containing a lattice. Empty lattices have
/// `width == height == 0` and origin `(0,0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundingRect {
    pub origin: Point,
    pub width: u64,
    pub height: u64,
}

impl BoundingRect {
    pub fn area(&self) -> u64 {
        self.width * self.height
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteLattice {
    rows: Vec<Row>,
    len: usize,
    bounds: BoundingRect,
}

impl Default for FiniteLattice {
    fn default() -> Self {
        Self::empty()
    }
}

impl FiniteLattice {
    pub fn empty() -> Self {
        FiniteLattice {
            rows: Vec::new(),
            len: 0,
            bounds: BoundingRect {
                origin: Point::ORIGIN,
                width: 0,
                height: 0,
            },
        }
    }

    /// `ℤ_{m×n}(origin)`: `m` columns, `n` rows, lower-left corner at `origin`.
    pub fn rectangle(origin: Point, m: u64, n: u64) -> Self {
        if m == 0 || n == 0 {
            return Self::empty();
        }
        let run = (origin.x, origin.x + m as i64 - 1);
        let rows = (0..n as i64)
            .map(|dy| Row {
                y: origin.y + dy,
                runs: vec![run],
            })
            .collect();
        Self::from_normalized_rows(rows)
    }

    pub fn from_points<I: IntoIterator<Item = Point>>(points: I) -> Self {
        let mut pts: Vec<Point> = points.into_iter().collect();
        pts.sort_unstable();
        pts.dedup();
        let mut rows: Vec<Row> = Vec::new();
        for p in pts {
            match rows.last_mut() {
                Some(row) if row.y == p.y => {
                    let last = row.runs.last_mut().expect("rows are never empty");
                    if last.1 + 1 == p.x {
                        last.1 = p.x;
                    } else {
                        row.runs.push((p.x, p.x));
                    }
                }
                _ => rows.push(Row {
                    y: p.y,
                    runs: vec![(p.x, p.x)],
                }),
            }
        }
        Self::from_normalized_rows(rows)
    }

    /// Builds a lattice from `(y, runs)` pairs in any order; runs may overlap.
    pub fn from_row_runs<I: IntoIterator<Item = (i64, Vec<Run>)>>(rows: I) -> Self {
        let mut by_y: std::collections::BTreeMap<i64, Vec<Run>> = Default::default();
        for (y, runs) in rows {
            by_y.entry(y)
                .or_default()
                .extend(runs.into_iter().filter(|r| r.0 <= r.1));
        }
        let rows = by_y
            .into_iter()
            .map(|(y, runs)| Row {
                y,
                runs: normalize_runs(runs),
            })
            .filter(|r| !r.runs.is_empty())
            .collect();
        Self::from_normalized_rows(rows)
    }

    fn from_normalized_rows(rows: Vec<Row>) -> Self {
        let len = rows
            .iter()
            .flat_map(|r| r.runs.iter())
            .map(|&(s, e)| (e - s + 1) as usize)
            .sum();
        let bounds = if rows.is_empty() {
            BoundingRect {
                origin: Point::ORIGIN,
                width: 0,
                height: 0,
            }
        } else {
            let min_y = rows[0].y;
            let max_y = rows[rows.len() - 1].y;
            let min_x = rows.iter().map(|r| r.runs[0].0).min().unwrap();
            let max_x = rows.iter().map(|r| r.runs[r.runs.len() - 1].1).max().unwrap();
            BoundingRect {
                origin: Point::new(min_x, min_y),
                width: (max_x - min_x + 1) as u64,
                height: (max_y - min_y + 1) as u64,
            }
        };
        FiniteLattice { rows, len, bounds }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bounding_rect(&self) -> BoundingRect {
        self.bounds
    }

    /// The bounding rectangle as a lattice in its own right.
    pub fn bounding_lattice(&self) -> FiniteLattice {
        FiniteLattice::rectangle(self.bounds.origin, self.bounds.width, self.bounds.height)
    }

    fn row(&self, y: i64) -> Option<&Row> {
        self.rows.binary_search_by_key(&y, |r| r.y).ok().map(|i| &self.rows[i])
    }

    /// Runs of row `y` (empty when the row is absent).
    pub fn runs_at(&self, y: i64) -> &[Run] {
        self.row(y).map(|r| r.runs.as_slice()).unwrap_or(&[])
    }

    /// Nonempty rows in increasing `y`, each with its sorted maximal runs.
    pub fn row_runs(&self) -> impl Iterator<Item = (i64, &[Run])> + '_ {
        self.rows.iter().map(|r| (r.y, r.runs.as_slice()))
    }

    pub fn contains(&self, p: Point) -> bool {
        let runs = self.runs_at(p.y);
        runs.binary_search_by(|&(s, e)| {
            if e < p.x {
                Ordering::Less
            } else if s > p.x {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
        .is_ok()
    }

    /// Points in canonical `(y, x)` order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.rows.iter().flat_map(|row| {
            row.runs
                .iter()
                .flat_map(move |&(s, e)| (s..=e).map(move |x| Point::new(x, row.y)))
        })
    }

    pub fn to_vec(&self) -> Vec<Point> {
        self.points().collect()
    }

    /// Position of `p` in canonical order, if present.
    pub fn index_of(&self, p: Point) -> Option<usize> {
        let ri = self.rows.binary_search_by_key(&p.y, |r| r.y).ok()?;
        let before: usize = self.rows[..ri]
            .iter()
            .flat_map(|r| r.runs.iter())
            .map(|&(s, e)| (e - s + 1) as usize)
            .sum();
        let mut offset = before;
        for &(s, e) in &self.rows[ri].runs {
            if p.x < s {
                return None;
            }
            if p.x <= e {
                return Some(offset + (p.x - s) as usize);
            }
            offset += (e - s + 1) as usize;
        }
        None
    }

    pub fn is_subset_of(&self, other: &FiniteLattice) -> bool {
        self.rows.iter().all(|row| {
            let theirs = other.runs_at(row.y);
            row.runs
                .iter()
                .all(|&(s, e)| theirs.iter().any(|&(ts, te)| ts <= s && e <= te))
        })
    }

    pub fn union(&self, other: &FiniteLattice) -> FiniteLattice {
        self.combine(other, union_runs)
    }

    pub fn intersection(&self, other: &FiniteLattice) -> FiniteLattice {
        self.combine(other, intersect_runs)
    }

    pub fn difference(&self, other: &FiniteLattice) -> FiniteLattice {
        self.combine(other, subtract_runs)
    }

    fn combine(&self, other: &FiniteLattice, op: impl Fn(&[Run], &[Run]) -> Vec<Run>) -> Self {
        let mut ys: Vec<i64> = self.rows.iter().chain(other.rows.iter()).map(|r| r.y).collect();
        ys.sort_unstable();
        ys.dedup();
        let rows = ys
            .into_iter()
            .filter_map(|y| {
                let runs = op(self.runs_at(y), other.runs_at(y));
                (!runs.is_empty()).then_some(Row { y, runs })
            })
            .collect();
        Self::from_normalized_rows(rows)
    }

    pub fn translate(&self, v: Point) -> FiniteLattice {
        let rows = self
            .rows
            .iter()
            .map(|r| Row {
                y: r.y + v.y,
                runs: r.runs.iter().map(|&(s, e)| (s + v.x, e + v.x)).collect(),
            })
            .collect();
        Self::from_normalized_rows(rows)
    }

    /// Reflection `x ↦ -1 - x` (across the line `x = -1/2`).
    pub fn mirror_x(&self) -> FiniteLattice {
        let rows = self
            .rows
            .iter()
            .map(|r| Row {
                y: r.y,
                runs: r.runs.iter().rev().map(|&(s, e)| (-1 - e, -1 - s)).collect(),
            })
            .collect();
        Self::from_normalized_rows(rows)
    }

    /// Reflection `y ↦ -1 - y` (across the line `y = -1/2`).
    pub fn mirror_y(&self) -> FiniteLattice {
        let rows = self
            .rows
            .iter()
            .rev()
            .map(|r| Row {
                y: -1 - r.y,
                runs: r.runs.clone(),
            })
            .collect();
        Self::from_normalized_rows(rows)
    }

    /// Exchanges the axes, `(x, y) ↦ (y, x)`.
    ///
    /// Sweeps the rows once, tracking which columns are open, so the cost is
    /// proportional to the number of runs in the input and output rather than
    /// the number of points.
    pub fn transpose(&self) -> FiniteLattice {
        // (x_start, x_end, y_start) intervals of columns open since y_start.
        let mut active: Vec<(i64, i64, i64)> = Vec::new();
        let mut columns: std::collections::BTreeMap<i64, Vec<Run>> = Default::default();
        let mut prev_y: Option<i64> = None;

        fn close(iv: (i64, i64, i64), end_y: i64, columns: &mut std::collections::BTreeMap<i64, Vec<Run>>) {
            for x in iv.0..=iv.1 {
                columns.entry(x).or_default().push((iv.2, end_y));
            }
        }

        for row in &self.rows {
            if prev_y.is_some_and(|p| p + 1 != row.y) {
                for iv in active.drain(..) {
                    close(iv, prev_y.unwrap(), &mut columns);
                }
            }
            let mut next: Vec<(i64, i64, i64)> = Vec::new();
            for &iv in &active {
                let kept = intersect_runs(&[(iv.0, iv.1)], &row.runs);
                let gone = subtract_runs(&[(iv.0, iv.1)], &row.runs);
                next.extend(kept.into_iter().map(|(s, e)| (s, e, iv.2)));
                for (s, e) in gone {
                    close((s, e, iv.2), row.y - 1, &mut columns);
                }
            }
            let covered: Vec<Run> = normalize_runs(active.iter().map(|iv| (iv.0, iv.1)).collect());
            for (s, e) in subtract_runs(&row.runs, &covered) {
                next.push((s, e, row.y));
            }
            next.sort_unstable();
            active = next;
            prev_y = Some(row.y);
        }
        if let Some(p) = prev_y {
            for iv in active.drain(..) {
                close(iv, p, &mut columns);
            }
        }
        let rows = columns
            .into_iter()
            .map(|(y, runs)| Row {
                y,
                runs: normalize_runs(runs),
            })
            .collect();
        Self::from_normalized_rows(rows)
    }

    /// Chebyshev dilation: every point within distance `margin` of the lattice.
    pub fn dilate(&self, margin: u64) -> FiniteLattice {
        if margin == 0 {
            return self.clone();
        }
        let m = margin as i64;
        FiniteLattice::from_row_runs(self.rows.iter().flat_map(|r| {
            let grown: Vec<Run> = r.runs.iter().map(|&(s, e)| (s - m, e + m)).collect();
            (r.y - m..=r.y + m).map(move |y| (y, grown.clone()))
        }))
    }

    /// Euclidean diameter (largest distance between two points); 0 when `len ≤ 1`.
    pub fn diameter(&self) -> f64 {
        if self.len <= 1 {
            return 0.0;
        }
        // Extremes are attained at run endpoints.
        let ends: Vec<Point> = self
            .rows
            .iter()
            .flat_map(|r| {
                r.runs
                    .iter()
                    .flat_map(move |&(s, e)| [Point::new(s, r.y), Point::new(e, r.y)])
            })
            .collect();
        let mut best = 0i64;
        for (i, a) in ends.iter().enumerate() {
            for b in &ends[i + 1..] {
                let d = (a.x - b.x).pow(2) + (a.y - b.y).pow(2);
                best = best.max(d);
            }
        }
        (best as f64).sqrt()
    }

    /// True when the points form one 4-connected component.
    pub fn is_connected(&self) -> bool {
        if self.len <= 1 {
            return true;
        }
        // Union-find over runs; runs in consecutive rows touch when their
        // x-ranges overlap.
        let mut offsets = Vec::with_capacity(self.rows.len());
        let mut total = 0;
        for row in &self.rows {
            offsets.push(total);
            total += row.runs.len();
        }
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for ri in 1..self.rows.len() {
            if self.rows[ri - 1].y + 1 != self.rows[ri].y {
                continue;
            }
            for (ci, a) in self.rows[ri].runs.iter().enumerate() {
                for (cj, b) in self.rows[ri - 1].runs.iter().enumerate() {
                    if a.0 <= b.1 && b.0 <= a.1 {
                        let i = find(&mut parent, offsets[ri] + ci);
                        let j = find(&mut parent, offsets[ri - 1] + cj);
                        parent[i] = j;
                    }
                }
            }
        }
        let root = find(&mut parent, 0);
        (0..total).all(|i| find(&mut parent, i) == root)
    }

    /// Connected and without holes: the complement inside the bounding box
    /// grown by one is also 4-connected.
    pub fn is_simply_connected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let frame = self.bounding_lattice().dilate(1);
        frame.difference(self).is_connected()
    }
}

impl FromIterator<Point> for FiniteLattice {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        FiniteLattice::from_points(iter)
    }
}

pub(crate) fn normalize_runs(mut runs: Vec<Run>) -> Vec<Run> {
    runs.sort_unstable();
    let mut out: Vec<Run> = Vec::with_capacity(runs.len());
    for (s, e) in runs {
        match out.last_mut() {
            Some(last) if s <= last.1 + 1 => last.1 = last.1.max(e),
            _ => out.push((s, e)),
        }
    }
    out
}

pub(crate) fn union_runs(a: &[Run], b: &[Run]) -> Vec<Run> {
    normalize_runs(a.iter().chain(b.iter()).copied().collect())
}

pub(crate) fn intersect_runs(a: &[Run], b: &[Run]) -> Vec<Run> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        let s = a[i].0.max(b[j].0);
        let e = a[i].1.min(b[j].1);
        if s <= e {
            out.push((s, e));
        }
        if a[i].1 < b[j].1 {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

pub(crate) fn subtract_runs(a: &[Run], b: &[Run]) -> Vec<Run> {
    let mut out = Vec::new();
    let mut j = 0;
    for &(s, e) in a {
        let mut cur = s;
        while j < b.len() && b[j].1 < cur {
            j += 1;
        }
        let mut k = j;
        while k < b.len() && b[k].0 <= e {
            if b[k].0 > cur {
                out.push((cur, b[k].0 - 1));
            }
            cur = cur.max(b[k].1 + 1);
            k += 1;
        }
        if cur <= e {
            out.push((cur, e));
        }
    }
    out
}
