//! Boundary, complement, block and run ratios along a system, with trend
//! verdicts.

use serde::Serialize;

use super::ExpandingSystem;
use crate::error::{Error, Result};
use crate::lattice::{
    block_counts, boundary, complement_in, is_tessellation, run_length_census, Axis, FiniteLattice,
    DEFAULT_TESSELLATION_BOUND,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Trend {
    Vanishing,
    Bounded,
    NonVanishing,
}

/// Verdict rule for a ratio sequence split into thirds.
///
/// Vanishing: the maxima of the three thirds strictly decrease and the last
/// one is below `vanishing_factor` times the first. Non-vanishing: every
/// value in the last third exceeds `floor`. Anything else is bounded.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrendThresholds {
    pub vanishing_factor: f64,
    pub floor: f64,
}

impl Default for TrendThresholds {
    fn default() -> Self {
        TrendThresholds {
            vanishing_factor: 0.1,
            floor: 0.01,
        }
    }
}

fn max_of(v: &[f64]) -> f64 {
    v.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

pub fn classify_trend(values: &[f64], t: &TrendThresholds) -> Trend {
    if values.len() < 3 {
        return Trend::Bounded;
    }
    let third = values.len() / 3;
    let (first, rest) = values.split_at(third);
    let (middle, last) = rest.split_at(rest.len() - third);
    let (m1, m2, m3) = (max_of(first), max_of(middle), max_of(last));
    if m3 == 0.0 || (m1 > m2 && m2 > m3 && m3 < t.vanishing_factor * m1) {
        return Trend::Vanishing;
    }
    if last.iter().all(|&v| v > t.floor) {
        return Trend::NonVanishing;
    }
    Trend::Bounded
}

/// Which tessellating superset `𝕋(n) ⊇ Ω(n)` measures the complement.
#[derive(Debug, Clone, PartialEq)]
pub enum TessellationChoice {
    BoundingRectangle,
    /// `Ω(n)` itself when it tiles, otherwise its bounding rectangle.
    SelfIfTessellation,
    /// One superset per index, starting at the first index of the range.
    Explicit(Vec<FiniteLattice>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionOptions {
    /// Run ratios are reported for lengths `1..=m_max`.
    pub m_max: u64,
    pub block_sizes: Vec<(u64, u64)>,
    pub tessellation: TessellationChoice,
    pub thresholds: TrendThresholds,
}

impl Default for ConditionOptions {
    fn default() -> Self {
        let sides = [2, 3, 5];
        ConditionOptions {
            m_max: 3,
            block_sizes: sides.iter().flat_map(|&k| sides.iter().map(move |&l| (k, l))).collect(),
            tessellation: TessellationChoice::BoundingRectangle,
            thresholds: TrendThresholds::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockRatio {
    pub k: u64,
    pub l: u64,
    pub alpha: u64,
    pub beta: u64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionRow {
    pub n: u64,
    pub size: u64,
    pub boundary: u64,
    pub boundary_ratio: f64,
    /// `bounding-rectangle`, `self` or `explicit`.
    pub tessellation: &'static str,
    pub complement: u64,
    pub complement_ratio: f64,
    pub blocks: Vec<BlockRatio>,
    /// `β_m^{(h)} / |Ω(n)|` for `m = 1..=m_max`.
    pub run_ratios_h: Vec<f64>,
    pub run_ratios_v: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdicts {
    pub boundary: Trend,
    pub complement: Trend,
    pub blocks: Vec<((u64, u64), Trend)>,
    pub runs_h: Vec<Trend>,
    pub runs_v: Vec<Trend>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub system: String,
    pub rows: Vec<ConditionRow>,
    pub verdicts: Verdicts,
}

fn ratio(part: u64, whole: u64) -> f64 {
    if whole == 0 {
        0.0
    } else {
        part as f64 / whole as f64
    }
}

fn run_ratios(l: &FiniteLattice, axis: Axis, m_max: u64) -> Vec<f64> {
    if m_max == 0 {
        return Vec::new();
    }
    let census = run_length_census(l, axis);
    (1..=m_max)
        .map(|m| ratio(census.get(&m).copied().unwrap_or(0), l.len() as u64))
        .collect()
}

pub fn condition_report(
    system: &ExpandingSystem,
    n_lo: u64,
    n_hi: u64,
    opts: &ConditionOptions,
) -> Result<ConditionReport> {
    if n_lo > n_hi {
        return Err(Error::InvalidArgument(format!("empty range {n_lo}..={n_hi}")));
    }
    let mut rows = Vec::new();
    for n in n_lo..=n_hi {
        let l = system.lattice(n)?;
        let size = l.len() as u64;
        let boundary_size = boundary(&l).len() as u64;
        let (label, tile) = match &opts.tessellation {
            TessellationChoice::BoundingRectangle => ("bounding-rectangle", l.bounding_lattice()),
            TessellationChoice::SelfIfTessellation => {
                if is_tessellation(&l, DEFAULT_TESSELLATION_BOUND).is_yes() {
                    ("self", l.clone())
                } else {
                    ("bounding-rectangle", l.bounding_lattice())
                }
            }
            TessellationChoice::Explicit(list) => {
                let t = list
                    .get((n - n_lo) as usize)
                    .ok_or_else(|| Error::InvalidArgument(format!("no tessellation supplied for n = {n}")))?;
                ("explicit", t.clone())
            }
        };
        let complement = complement_in(&l, &tile)?.len() as u64;
        let blocks = opts
            .block_sizes
            .iter()
            .map(|&(k, l_side)| {
                let (alpha, beta) = block_counts(&l, k, l_side);
                BlockRatio {
                    k,
                    l: l_side,
                    alpha,
                    beta,
                    ratio: ratio(beta, size),
                }
            })
            .collect();
        rows.push(ConditionRow {
            n,
            size,
            boundary: boundary_size,
            boundary_ratio: ratio(boundary_size, size),
            tessellation: label,
            complement,
            complement_ratio: ratio(complement, size),
            blocks,
            run_ratios_h: run_ratios(&l, Axis::Horizontal, opts.m_max),
            run_ratios_v: run_ratios(&l, Axis::Vertical, opts.m_max),
        });
    }
    let t = &opts.thresholds;
    let column =
        |f: &dyn Fn(&ConditionRow) -> f64| -> Trend { classify_trend(&rows.iter().map(f).collect::<Vec<_>>(), t) };
    let verdicts = Verdicts {
        boundary: column(&|r| r.boundary_ratio),
        complement: column(&|r| r.complement_ratio),
        blocks: opts
            .block_sizes
            .iter()
            .enumerate()
            .map(|(i, &kl)| (kl, column(&|r| r.blocks[i].ratio)))
            .collect(),
        runs_h: (0..opts.m_max as usize)
            .map(|m| column(&|r| r.run_ratios_h[m]))
            .collect(),
        runs_v: (0..opts.m_max as usize)
            .map(|m| column(&|r| r.run_ratios_v[m]))
            .collect(),
    };
    Ok(ConditionReport {
        system: system.name(),
        rows,
        verdicts,
    })
}
