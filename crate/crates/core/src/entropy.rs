//! Entropy estimators: rectangular tables, ratios along expanding systems,
//! and growth along one-dimensional sublattices.

use serde::Serialize;

use crate::counting::{count, count_profile_dp, log_count, CountMode};
use crate::error::{Error, Result};
use crate::fibonacci::ln_golden;
use crate::lattice::{FiniteLattice, Point};
use crate::sft::{golden_mean_horizontal, golden_mean_vertical, ForbiddenPattern, SftSpec};
use crate::systems::ExpandingSystem;

/// `r(m, n) = ln Γ_{m×n} / (mn)` for `1 ≤ m ≤ m_max`, `1 ≤ n ≤ n_max`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RectTable {
    pub m_max: u64,
    pub n_max: u64,
    /// `log_counts[m-1][n-1] = ln Γ_{m×n}`.
    pub log_counts: Vec<Vec<f64>>,
    pub ratios: Vec<Vec<f64>>,
    /// Table minimum, an upper bound on the rectangular entropy.
    pub estimate: f64,
    pub argmin: (u64, u64),
}

impl RectTable {
    pub fn ratio(&self, m: u64, n: u64) -> f64 {
        self.ratios[m as usize - 1][n as usize - 1]
    }

    pub fn entries(&self) -> impl Iterator<Item = (u64, u64, f64, f64)> + '_ {
        self.ratios.iter().enumerate().flat_map(move |(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &r)| (i as u64 + 1, j as u64 + 1, self.log_counts[i][j], r))
        })
    }
}

/// Ratios closer than this count as equal when picking the argmin.
const TIE: f64 = 1e-12;

pub fn rect_entropy_table(spec: &SftSpec, m_max: u64, n_max: u64) -> Result<RectTable> {
    if m_max == 0 || n_max == 0 {
        return Err(Error::InvalidArgument("table sides must be positive".into()));
    }
    let mut log_counts = Vec::new();
    let mut ratios = Vec::new();
    let mut estimate = f64::INFINITY;
    let mut argmin = (1, 1);
    for m in 1..=m_max {
        let mut lc = Vec::new();
        let mut rs = Vec::new();
        for n in 1..=n_max {
            let l = count_profile_dp(&FiniteLattice::rectangle(Point::ORIGIN, m, n), spec)?.ln();
            let r = l / (m * n) as f64;
            if r < estimate - TIE * estimate.abs().min(1.0) {
                argmin = (m, n);
            }
            estimate = estimate.min(r);
            lc.push(l);
            rs.push(r);
        }
        log_counts.push(lc);
        ratios.push(rs);
    }
    Ok(RectTable {
        m_max,
        n_max,
        log_counts,
        ratios,
        estimate,
        argmin,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EstimatorKind {
    /// Maximum over the last third of the records.
    LimsupTailMax,
    Infimum,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyRecord {
    pub n: u64,
    pub size: u64,
    pub log_count: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropySequence {
    pub records: Vec<EntropyRecord>,
    pub estimate: f64,
    pub estimator: EstimatorKind,
    /// Set when no forbidden pattern can ever occur on the lattices counted.
    pub pure_full_shift: bool,
}

fn tail_max(records: &[EntropyRecord]) -> f64 {
    let tail = records.len().div_ceil(3);
    records[records.len() - tail..]
        .iter()
        .map(|r| r.ratio)
        .fold(f64::NEG_INFINITY, f64::max)
}

fn record(n: u64, size: u64, log_count: f64) -> EntropyRecord {
    EntropyRecord {
        n,
        size,
        log_count,
        ratio: if size == 0 { 0.0 } else { log_count / size as f64 },
    }
}

/// `ln Γ` on a lattice: the floating sweep when it applies, else the exact
/// dispatcher.
pub fn log_count_any(lattice: &FiniteLattice, spec: &SftSpec) -> Result<f64> {
    match log_count(lattice, spec) {
        Ok(v) => Ok(v),
        Err(Error::UnsupportedForbiddenShape) | Err(Error::BudgetExceeded { .. }) => {
            Ok(count(lattice, spec, CountMode::Local)?.ln())
        }
        Err(e) => Err(e),
    }
}

/// Ratios `ln Γ(Ω(n)) / |Ω(n)|` for `n_lo ≤ n ≤ n_hi`, estimated by tail max.
pub fn omega_entropy(spec: &SftSpec, system: &ExpandingSystem, n_lo: u64, n_hi: u64) -> Result<EntropySequence> {
    if n_lo > n_hi {
        return Err(Error::InvalidArgument(format!("empty range {n_lo}..={n_hi}")));
    }
    let records = (n_lo..=n_hi)
        .map(|n| {
            let l = system.lattice(n)?;
            Ok(record(n, l.len() as u64, log_count_any(&l, spec)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropySequence {
        estimate: tail_max(&records),
        records,
        estimator: EstimatorKind::LimsupTailMax,
        pure_full_shift: spec.is_full_shift(),
    })
}

/// The forbidden patterns that can sit inside `ℤv`, rewritten as patterns on
/// a horizontal row where `s·v` becomes `(s, 0)`.
fn collinear_rules(spec: &SftSpec, v: Point) -> Result<SftSpec> {
    let mut rules = Vec::new();
    for f in spec.forbidden() {
        let (o, _) = f.cells()[0];
        let steps: Option<Vec<(Point, u32)>> = f
            .cells()
            .iter()
            .map(|&(p, s)| {
                let d = p - o;
                // d = t·v with integer t.
                let t = if v.x != 0 { d.x / v.x } else { d.y / v.y };
                (Point::new(t * v.x, t * v.y) == d).then_some((Point::new(t, 0), s))
            })
            .collect();
        if let Some(cells) = steps {
            rules.push(ForbiddenPattern::new(cells)?);
        }
    }
    SftSpec::new(format!("{}|{v}", spec.name()), spec.alphabet(), rules)
}

/// Growth of patterns on the segments `{0, v, …, (n-1)v}`, `n = 1..=n_max`.
pub fn projectional_entropy(spec: &SftSpec, v: Point, n_max: u64, mode: CountMode) -> Result<EntropySequence> {
    if !v.is_primitive() {
        return Err(Error::NonPrimitiveVector(v));
    }
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be positive".into()));
    }
    let line = collinear_rules(spec, v)?;
    let pure = line.is_full_shift();
    let records = (1..=n_max)
        .map(|n| {
            let log_count = match mode {
                CountMode::Local | CountMode::Extendable { margin: 0 } => {
                    let row = FiniteLattice::rectangle(Point::ORIGIN, n, 1);
                    log_count_any(&row, &line)?
                }
                CountMode::Extendable { .. } => {
                    let segment: FiniteLattice = (0..n as i64).map(|s| Point::new(s * v.x, s * v.y)).collect();
                    count(&segment, spec, mode)?.ln()
                }
            };
            Ok(record(n, n, log_count))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropySequence {
        estimate: tail_max(&records),
        records,
        estimator: EstimatorKind::LimsupTailMax,
        pure_full_shift: pure,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hhat1 {
    /// Largest projectional estimate over the directions tried; a lower bound
    /// for the supremum over all directions.
    pub value: f64,
    pub argmax: Point,
    pub per_direction: Vec<(Point, f64)>,
}

pub fn hhat1_estimate(spec: &SftSpec, directions: &[Point], n_max: u64) -> Result<Hhat1> {
    if directions.is_empty() {
        return Err(Error::InvalidArgument("no directions given".into()));
    }
    let per_direction = directions
        .iter()
        .map(|&v| Ok((v, projectional_entropy(spec, v, n_max, CountMode::Local)?.estimate)))
        .collect::<Result<Vec<_>>>()?;
    let mut best = per_direction[0];
    for &(v, e) in &per_direction[1..] {
        if e > best.1 + 1e-12 {
            best = (v, e);
        }
    }
    Ok(Hhat1 {
        value: best.1,
        argmax: best.0,
        per_direction,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReferenceKind {
    GoldenMean,
    FullShift,
    /// Best ratio on a rectangle twice the table's size in each direction,
    /// or the table minimum when that is not computable.
    LargerRectangle,
}

/// Closed-form rectangular entropy, when one is known for `spec`.
pub fn hr_reference(spec: &SftSpec) -> Option<(f64, ReferenceKind)> {
    if spec.is_full_shift() {
        return Some(((spec.alphabet() as f64).ln(), ReferenceKind::FullShift));
    }
    if spec.same_rules(&golden_mean_horizontal()) || spec.same_rules(&golden_mean_vertical()) {
        return Some((ln_golden(), ReferenceKind::GoldenMean));
    }
    None
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    pub spec: String,
    pub table: RectTable,
    pub reference: f64,
    pub reference_kind: ReferenceKind,
    pub full_shift: bool,
    /// Entries not strictly above the reference.
    pub violations: Vec<(u64, u64)>,
    pub min_margin: f64,
    pub argmin: (u64, u64),
}

impl GapReport {
    /// Strictness holds for a proper subshift; the full shift is the equality
    /// case and holds when every entry equals the reference.
    pub fn holds(&self) -> bool {
        if self.full_shift {
            self.table
                .entries()
                .all(|(_, _, _, r)| (r - self.reference).abs() <= 1e-12)
        } else {
            self.violations.is_empty()
        }
    }
}

/// Compares every table entry against a reference value for the rectangular
/// entropy; a proper subshift must stay strictly above it everywhere.
pub fn strict_gap_check(spec: &SftSpec, m_max: u64, n_max: u64) -> Result<GapReport> {
    let table = rect_entropy_table(spec, m_max, n_max)?;
    let (reference, reference_kind) = match hr_reference(spec) {
        Some(r) => r,
        None => {
            let big = FiniteLattice::rectangle(Point::ORIGIN, 2 * m_max, 2 * n_max);
            let r = log_count(&big, spec)
                .map(|l| l / big.len() as f64)
                .unwrap_or(table.estimate);
            (r.min(table.estimate), ReferenceKind::LargerRectangle)
        }
    };
    let mut violations = Vec::new();
    let mut min_margin = f64::INFINITY;
    let mut argmin = (1, 1);
    for (m, n, _, r) in table.entries() {
        let margin = r - reference;
        if margin <= 0.0 {
            violations.push((m, n));
        }
        if margin < min_margin {
            min_margin = margin;
            argmin = (m, n);
        }
    }
    Ok(GapReport {
        spec: spec.name().to_owned(),
        full_shift: spec.is_full_shift(),
        table,
        reference,
        reference_kind,
        violations,
        min_margin,
        argmin,
    })
}
