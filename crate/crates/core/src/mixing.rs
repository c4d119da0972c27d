//! Bounded checks of block gluing: any two admissible square patterns far
//! enough apart extend jointly.
//!
//! Distance between two blocks is measured in empty cells: blocks whose
//! columns overlap and which are separated by one empty row are at distance
//! 1, diagonal gaps combine as `√(gx² + gy²)`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::counting::oracle::Backtracker;
use crate::counting::sweep::{total, Sweep, Weight};
use crate::counting::{count_constrained, extends, CountConfig};
use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Point};
use crate::sft::{Pattern, SftSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GluingVariant {
    Full,
    /// Blocks share their bottom row.
    Horizontal,
    /// Blocks share their left column.
    Vertical,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum GluingResult {
    Verified {
        gap: f64,
    },
    Counterexample {
        first: Vec<(Point, u32)>,
        second: Vec<(Point, u32)>,
        /// Lower-left corner of the second block; the first sits at the origin.
        offset: Point,
        /// Admissible patterns on the witness box agreeing with both blocks.
        #[serde(serialize_with = "decimal")]
        joint_count: BigUint,
    },
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GluingVerdict {
    pub spec: String,
    pub gap: f64,
    pub window: u64,
    pub extent: i64,
    pub variant: GluingVariant,
    /// Distinct admissible `window × window` patterns tried on each side.
    pub blocks: usize,
    pub offsets: usize,
    pub result: GluingResult,
}

impl GluingVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self.result, GluingResult::Verified { .. })
    }
}

/// Empty rows and columns between two `w×w` blocks whose corners differ by `d`.
pub fn block_gap(w: u64, d: Point) -> f64 {
    let gx = (d.x.unsigned_abs().saturating_sub(w)) as f64;
    let gy = (d.y.unsigned_abs().saturating_sub(w)) as f64;
    gx.hypot(gy)
}

fn offsets(w: u64, extent: i64, gap: f64, variant: GluingVariant) -> Vec<Point> {
    let w = w as i64;
    let mut out = Vec::new();
    for dy in -extent..=extent {
        for dx in -extent..=extent {
            let ok = match variant {
                GluingVariant::Full => true,
                GluingVariant::Horizontal => dy == 0,
                GluingVariant::Vertical => dx == 0,
            };
            let disjoint = dx.abs() >= w || dy.abs() >= w;
            let d = Point::new(dx, dy);
            if ok && disjoint && block_gap(w as u64, d) >= gap {
                out.push(d);
            }
        }
    }
    out
}

/// Set of surviving second-block candidates.
#[derive(Debug, Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn full(n: usize) -> Bits {
        let mut v = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            *v.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        Bits(v)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn first_missing(&self, n: usize) -> Option<usize> {
        (0..n).find(|&i| (self.0[i / 64] >> (i % 64)) & 1 == 0)
    }
}

impl Weight for Bits {
    fn merge(&mut self, other: Self) {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a |= b;
        }
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// Admissible `w×w` patterns that also extend by `margin` on their own.
fn block_patterns(spec: &SftSpec, w: u64, margin: u64, config: &CountConfig) -> Result<Vec<Vec<u32>>> {
    let block = FiniteLattice::rectangle(Point::ORIGIN, w, w);
    let dilated = block.dilate(margin);
    let mut out = Vec::new();
    let mut failure = None;
    Backtracker::new(&block, spec).for_each(|symbols| {
        let p = Pattern::new(block.clone(), symbols.to_vec()).expect("sizes match");
        match extends(&dilated, spec, &p, config) {
            Ok(true) => out.push(symbols.to_vec()),
            Ok(false) => {}
            Err(e) => {
                failure = Some(e);
                return false;
            }
        }
        if out.len() as u64 > config.candidate_budget {
            failure = Some(Error::BudgetExceeded {
                what: "gluing block patterns",
                needed: out.len() as u64,
                budget: config.candidate_budget,
            });
            return false;
        }
        true
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Checks every pair of admissible `w×w` blocks at every offset within
/// `extent` whose gap is at least `gap`. A pair passes when it extends to a
/// locally admissible pattern on its bounding box dilated by the largest
/// forbidden-shape diameter.
pub fn verify_block_gluing(
    spec: &SftSpec,
    gap: f64,
    w: u64,
    extent: i64,
    variant: GluingVariant,
) -> Result<GluingVerdict> {
    if !(1..=4).contains(&w) {
        return Err(Error::InvalidArgument(format!("window must be 1..=4, got {w}")));
    }
    if extent < 0 {
        return Err(Error::InvalidArgument("extent must be nonnegative".into()));
    }
    let config = CountConfig::default();
    let margin = spec.max_shape_diameter();
    let blocks = block_patterns(spec, w, margin, &config)?;
    let offs = offsets(w, extent, gap, variant);
    let first_block = FiniteLattice::rectangle(Point::ORIGIN, w, w);
    let verdict = |result| GluingVerdict {
        spec: spec.name().to_owned(),
        gap,
        window: w,
        extent,
        variant,
        blocks: blocks.len(),
        offsets: offs.len(),
        result,
    };

    for &d in &offs {
        let second_block = FiniteLattice::rectangle(d, w, w);
        let witness = first_block.union(&second_block).bounding_lattice().dilate(margin);
        for u1 in &blocks {
            let glued = glue_all(spec, &witness, &first_block, u1, &second_block, &blocks, &config)?;
            if let Some(j) = glued.first_missing(blocks.len()) {
                let first = Pattern::new(first_block.clone(), u1.clone())?;
                let second = Pattern::new(second_block.clone(), blocks[j].clone())?;
                let both = Pattern::from_cells(first.cells().chain(second.cells()))?;
                let joint_count = count_constrained(&witness, spec, &both)?.value;
                return Ok(verdict(GluingResult::Counterexample {
                    first: first.cells().collect(),
                    second: second.cells().collect(),
                    offset: d,
                    joint_count,
                }));
            }
        }
    }
    Ok(verdict(GluingResult::Verified { gap }))
}

/// Bit `j` is set when `u1` and `blocks[j]` extend jointly over `witness`.
fn glue_all(
    spec: &SftSpec,
    witness: &FiniteLattice,
    first: &FiniteLattice,
    u1: &[u32],
    second: &FiniteLattice,
    blocks: &[Vec<u32>],
    config: &CountConfig,
) -> Result<Bits> {
    let n = blocks.len();
    let fixed = Pattern::new(first.clone(), u1.to_vec())?;
    match Sweep::new(witness, spec, config.frontier_cap) {
        Ok(sweep) => {
            // masks[i][s]: candidates whose cell i carries symbol s.
            let masks: Vec<Vec<Bits>> = (0..second.len())
                .map(|i| {
                    (0..spec.alphabet())
                        .map(|s| {
                            let mut b = Bits(vec![0; n.div_ceil(64)]);
                            for (j, blk) in blocks.iter().enumerate() {
                                if blk[i] == s {
                                    b.0[j / 64] |= 1 << (j % 64);
                                }
                            }
                            b
                        })
                        .collect()
                })
                .collect();
            let states = sweep.run(
                Bits::full(n),
                |p, s, w| {
                    if let Some(t) = fixed.get(p) {
                        return (t == s).then(|| w.clone());
                    }
                    match second.index_of(p) {
                        Some(i) => Some(w.and(&masks[i][s as usize])),
                        None => Some(w.clone()),
                    }
                },
                |_| {},
            );
            Ok(total(states, Bits(vec![0; n.div_ceil(64)])))
        }
        Err(Error::UnsupportedForbiddenShape) | Err(Error::BudgetExceeded { .. }) => {
            let mut bits = Bits(vec![0; n.div_ceil(64)]);
            for (j, u2) in blocks.iter().enumerate() {
                let second_pattern = Pattern::new(second.clone(), u2.clone())?;
                let both = Pattern::from_cells(fixed.cells().chain(second_pattern.cells()))?;
                if extends(witness, spec, &both, config)? {
                    bits.0[j / 64] |= 1 << (j % 64);
                }
            }
            Ok(bits)
        }
        Err(e) => Err(e),
    }
}
