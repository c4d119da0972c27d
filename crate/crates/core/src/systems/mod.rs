//! Expanding systems `n ↦ Ω(n)` and the geometric hypotheses evaluated on them.

mod conditions;
mod omega;
mod shapes;
mod size_expr;

use serde::{Deserialize, Serialize};

pub use conditions::{
    classify_trend, condition_report, ConditionOptions, ConditionReport, ConditionRow, TessellationChoice, Trend,
    TrendThresholds, Verdicts,
};
pub use omega::{
    census_formula, omega_q, omega_q_count_formula, omega_q_entropy_series, omega_q_plus, row_census, SeriesValue,
};
pub use shapes::{lshape, square_with_stick, staircase, stick_augmented, stick_length};
pub use size_expr::SizeExpr;

use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Point};

/// Which sequence of lattices a system generates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "system", rename_all = "snake_case")]
pub enum SystemKind {
    /// `ℤ_{n×n}`.
    Squares,
    /// `ℤ_{w(n)×h(n)}` at the origin.
    Rect { w: SizeExpr, h: SizeExpr },
    /// Four reflected copies of the multiplicative lattice for `q`.
    OmegaQ { q: u64 },
    /// `ℤ_{n×n}` plus a stick along `v` from `(n, 0)`, sized so that the
    /// square holds the fraction `a_target` of all points.
    Stick {
        v: [i64; 2],
        #[serde(default = "half")]
        a_target: f64,
    },
    /// `ℤ_{n²×n} ∪ ℤ_{n×n²}`.
    Lshape,
    /// `ℤ_{n²×n} ∪ ℤ_{n×n²}((1, n))`.
    Staircase,
}

fn half() -> f64 {
    0.5
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExpandingSystem {
    kind: SystemKind,
}

impl ExpandingSystem {
    pub fn new(kind: SystemKind) -> Result<Self> {
        match &kind {
            SystemKind::OmegaQ { q } if *q < 2 => {
                return Err(Error::InvalidArgument(format!("q must be at least 2, got {q}")))
            }
            SystemKind::Stick { v, a_target } => {
                let v = Point::new(v[0], v[1]);
                if !v.is_primitive() {
                    return Err(Error::NonPrimitiveVector(v));
                }
                if !(*a_target > 0.0 && *a_target <= 1.0) {
                    return Err(Error::InvalidArgument(format!(
                        "a_target must lie in (0, 1], got {a_target}"
                    )));
                }
            }
            _ => {}
        }
        Ok(ExpandingSystem { kind })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let kind: SystemKind = serde_json::from_str(text)?;
        Self::new(kind)
    }

    pub fn kind(&self) -> &SystemKind {
        &self.kind
    }

    pub fn name(&self) -> String {
        match &self.kind {
            SystemKind::Squares => "squares".into(),
            SystemKind::Rect { w, h } => format!("rect({w},{h})"),
            SystemKind::OmegaQ { q } => format!("omega_q({q})"),
            SystemKind::Stick { v, a_target } => format!("stick(({},{}),a={a_target})", v[0], v[1]),
            SystemKind::Lshape => "lshape".into(),
            SystemKind::Staircase => "staircase".into(),
        }
    }

    /// Smallest valid index.
    pub fn first_index(&self) -> u64 {
        match self.kind {
            SystemKind::Staircase => 2,
            _ => 1,
        }
    }

    pub fn lattice(&self, n: u64) -> Result<FiniteLattice> {
        if n < self.first_index() {
            return Err(Error::InvalidArgument(format!(
                "{} starts at n = {}",
                self.name(),
                self.first_index()
            )));
        }
        match &self.kind {
            SystemKind::Squares => Ok(FiniteLattice::rectangle(Point::ORIGIN, n, n)),
            SystemKind::Rect { w, h } => Ok(FiniteLattice::rectangle(Point::ORIGIN, w.eval(n)?, h.eval(n)?)),
            SystemKind::OmegaQ { q } => omega_q(*q, n),
            SystemKind::Stick { v, a_target } => stick_augmented(n, Point::new(v[0], v[1]), stick_length(n, *a_target)),
            SystemKind::Lshape => Ok(lshape(n)),
            SystemKind::Staircase => Ok(staircase(n)),
        }
    }

    /// Whether `Ω(n) ⊆ Ω(n+1)` for `n` in `[lo, hi)`; returns the first `n`
    /// where containment fails.
    pub fn first_nesting_failure(&self, lo: u64, hi: u64) -> Result<Option<u64>> {
        let mut prev = self.lattice(lo.max(self.first_index()))?;
        for n in lo.max(self.first_index())..hi {
            let next = self.lattice(n + 1)?;
            if !prev.is_subset_of(&next) {
                return Ok(Some(n));
            }
            prev = next;
        }
        Ok(None)
    }
}

/// `Ω(n) = ℤ_{n×n}`.
pub fn squares() -> ExpandingSystem {
    ExpandingSystem {
        kind: SystemKind::Squares,
    }
}

pub fn rect_system(w: SizeExpr, h: SizeExpr) -> ExpandingSystem {
    ExpandingSystem {
        kind: SystemKind::Rect { w, h },
    }
}

pub fn omega_q_system(q: u64) -> Result<ExpandingSystem> {
    ExpandingSystem::new(SystemKind::OmegaQ { q })
}

pub fn stick_system(v: Point, a_target: f64) -> Result<ExpandingSystem> {
    ExpandingSystem::new(SystemKind::Stick {
        v: [v.x, v.y],
        a_target,
    })
}

pub fn lshape_system() -> ExpandingSystem {
    ExpandingSystem {
        kind: SystemKind::Lshape,
    }
}

pub fn staircase_system() -> ExpandingSystem {
    ExpandingSystem {
        kind: SystemKind::Staircase,
    }
}
