//! Shifts of finite type given by forbidden patterns, and local admissibility.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Point};

/// A pattern on a finite shape that may not occur anywhere.
///
/// Cells are stored in canonical point order with the shape translated so
/// that its minimal `x` and minimal `y` are both zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ForbiddenPattern {
    cells: Vec<(Point, u32)>,
}

impl ForbiddenPattern {
    pub fn new<I: IntoIterator<Item = (Point, u32)>>(cells: I) -> Result<Self> {
        let mut cells: Vec<(Point, u32)> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(Error::InvalidArgument("forbidden pattern has no cells".into()));
        }
        let min_x = cells.iter().map(|c| c.0.x).min().unwrap();
        let min_y = cells.iter().map(|c| c.0.y).min().unwrap();
        for c in &mut cells {
            c.0 = Point::new(c.0.x - min_x, c.0.y - min_y);
        }
        cells.sort_unstable_by_key(|c| c.0);
        if cells.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidArgument("forbidden pattern repeats an offset".into()));
        }
        Ok(ForbiddenPattern { cells })
    }

    pub fn cells(&self) -> &[(Point, u32)] {
        &self.cells
    }

    pub fn shape(&self) -> FiniteLattice {
        self.cells.iter().map(|c| c.0).collect()
    }

    /// Width and height of the shape's bounding box.
    pub fn extent(&self) -> (u64, u64) {
        let b = self.shape().bounding_rect();
        (b.width, b.height)
    }

    pub fn transpose(&self) -> ForbiddenPattern {
        ForbiddenPattern::new(self.cells.iter().map(|&(p, s)| (p.transpose(), s)))
            .expect("transpose preserves distinct offsets")
    }
}

/// `N` symbols `0..N` and a finite list of forbidden patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SftSpec {
    alphabet: u32,
    forbidden: Vec<ForbiddenPattern>,
    name: String,
}

impl SftSpec {
    pub fn new(name: impl Into<String>, alphabet: u32, forbidden: Vec<ForbiddenPattern>) -> Result<Self> {
        if alphabet < 2 {
            return Err(Error::InvalidArgument(format!("alphabet size {alphabet} < 2")));
        }
        if alphabet > 255 {
            return Err(Error::InvalidArgument(format!("alphabet size {alphabet} > 255")));
        }
        for f in &forbidden {
            if let Some(&(_, s)) = f.cells.iter().find(|c| c.1 >= alphabet) {
                return Err(Error::SymbolOutOfRange { symbol: s, alphabet });
            }
        }
        let mut forbidden = forbidden;
        forbidden.sort();
        forbidden.dedup();
        Ok(SftSpec {
            alphabet,
            forbidden,
            name: name.into(),
        })
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn forbidden(&self) -> &[ForbiddenPattern] {
        &self.forbidden
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_full_shift(&self) -> bool {
        self.forbidden.is_empty()
    }

    /// Same shift with the axes exchanged.
    pub fn transpose(&self) -> SftSpec {
        SftSpec {
            alphabet: self.alphabet,
            forbidden: {
                let mut f: Vec<_> = self.forbidden.iter().map(ForbiddenPattern::transpose).collect();
                f.sort();
                f
            },
            name: format!("{}^T", self.name),
        }
    }

    /// True when every forbidden shape fits inside a 2×2 window.
    pub fn fits_2x2(&self) -> bool {
        self.forbidden.iter().all(|f| {
            let (w, h) = f.extent();
            w <= 2 && h <= 2
        })
    }

    /// Largest Chebyshev diameter of a forbidden shape (0 for a full shift).
    pub fn max_shape_diameter(&self) -> u64 {
        self.forbidden
            .iter()
            .map(|f| {
                let (w, h) = f.extent();
                w.max(h) - 1
            })
            .max()
            .unwrap_or(0)
    }

    /// Same forbidden set as `other`, ignoring names.
    pub fn same_rules(&self, other: &SftSpec) -> bool {
        self.alphabet == other.alphabet && self.forbidden == other.forbidden
    }
}

impl fmt::Display for SftSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (N={}, {} forbidden)",
            self.name,
            self.alphabet,
            self.forbidden.len()
        )
    }
}

fn pair(a: Point, b: Point, sa: u32, sb: u32) -> ForbiddenPattern {
    ForbiddenPattern::new([(a, sa), (b, sb)]).expect("distinct offsets")
}

/// Golden mean in the horizontal direction: `x_{i,j} x_{i+1,j} = 0`.
pub fn golden_mean_horizontal() -> SftSpec {
    SftSpec::new("golden-mean-h", 2, vec![pair(Point::new(0, 0), Point::new(1, 0), 1, 1)]).unwrap()
}

/// Golden mean in the vertical direction: `x_{i,j} x_{i,j+1} = 0`.
pub fn golden_mean_vertical() -> SftSpec {
    SftSpec::new("golden-mean-v", 2, vec![pair(Point::new(0, 0), Point::new(0, 1), 1, 1)]).unwrap()
}

/// No two horizontally or vertically adjacent 1s.
pub fn hard_squares() -> SftSpec {
    SftSpec::new(
        "hard-squares",
        2,
        vec![
            pair(Point::new(0, 0), Point::new(1, 0), 1, 1),
            pair(Point::new(0, 0), Point::new(0, 1), 1, 1),
        ],
    )
    .unwrap()
}

pub fn full_shift(alphabet: u32) -> Result<SftSpec> {
    SftSpec::new(format!("full:{alphabet}"), alphabet, Vec::new())
}

/// Rows must alternate `0101…`: both `00` and `11` are forbidden horizontally.
pub fn period_two_horizontal() -> SftSpec {
    SftSpec::new(
        "period-2-h",
        2,
        vec![
            pair(Point::new(0, 0), Point::new(1, 0), 0, 0),
            pair(Point::new(0, 0), Point::new(1, 0), 1, 1),
        ],
    )
    .unwrap()
}

/// The single-cell pattern `1` is forbidden; only the all-zero point survives.
pub fn forbid_one() -> SftSpec {
    SftSpec::new(
        "forbid-one",
        2,
        vec![ForbiddenPattern::new([(Point::ORIGIN, 1)]).unwrap()],
    )
    .unwrap()
}

pub const BUILTIN_NAMES: &[&str] = &[
    "golden-mean-h",
    "golden-mean-v",
    "hard-squares",
    "period-2-h",
    "forbid-one",
    "full:N",
];

/// Looks up a builtin shift by name (`full:N` takes the alphabet size).
pub fn builtin(name: &str) -> Result<SftSpec> {
    match name {
        "golden-mean-h" => Ok(golden_mean_horizontal()),
        "golden-mean-v" => Ok(golden_mean_vertical()),
        "hard-squares" => Ok(hard_squares()),
        "period-2-h" => Ok(period_two_horizontal()),
        "forbid-one" => Ok(forbid_one()),
        _ => {
            if let Some(n) = name.strip_prefix("full:") {
                let n: u32 = n
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad alphabet size in {name:?}")))?;
                full_shift(n)
            } else {
                Err(Error::Parse(format!(
                    "unknown shift {name:?}; builtins are {}",
                    BUILTIN_NAMES.join(", ")
                )))
            }
        }
    }
}

/// An assignment of symbols to every point of a finite support.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    support: FiniteLattice,
    /// Symbols in canonical point order of `support`.
    symbols: Vec<u32>,
}

impl Pattern {
    pub fn new(support: FiniteLattice, symbols: Vec<u32>) -> Result<Self> {
        if symbols.len() != support.len() {
            return Err(Error::InvalidArgument(format!(
                "{} symbols for a support of {} points",
                symbols.len(),
                support.len()
            )));
        }
        Ok(Pattern { support, symbols })
    }

    pub fn from_cells<I: IntoIterator<Item = (Point, u32)>>(cells: I) -> Result<Self> {
        let mut cells: Vec<(Point, u32)> = cells.into_iter().collect();
        cells.sort_unstable_by_key(|c| c.0);
        if cells.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidArgument("pattern repeats a point".into()));
        }
        let support = cells.iter().map(|c| c.0).collect();
        Ok(Pattern {
            support,
            symbols: cells.into_iter().map(|c| c.1).collect(),
        })
    }

    pub fn constant(support: FiniteLattice, symbol: u32) -> Self {
        let symbols = vec![symbol; support.len()];
        Pattern { support, symbols }
    }

    pub fn support(&self) -> &FiniteLattice {
        &self.support
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn get(&self, p: Point) -> Option<u32> {
        self.support.index_of(p).map(|i| self.symbols[i])
    }

    pub fn cells(&self) -> impl Iterator<Item = (Point, u32)> + '_ {
        self.support.points().zip(self.symbols.iter().copied())
    }

    pub fn translate(&self, v: Point) -> Pattern {
        Pattern {
            support: self.support.translate(v),
            symbols: self.symbols.clone(),
        }
    }

    pub fn transpose(&self) -> Pattern {
        Pattern::from_cells(self.cells().map(|(p, s)| (p.transpose(), s))).expect("bijective")
    }

    /// Restriction to `sub ∩ support`.
    pub fn restrict(&self, sub: &FiniteLattice) -> Pattern {
        Pattern::from_cells(self.cells().filter(|(p, _)| sub.contains(*p))).expect("subset of a pattern")
    }
}

/// Translations `v` with `shape + v ⊆ lattice`, in canonical order.
pub fn placements(shape: &FiniteLattice, lattice: &FiniteLattice) -> Vec<Point> {
    let offsets = shape.to_vec();
    let Some(&anchor) = offsets.first() else {
        return Vec::new();
    };
    lattice
        .points()
        .map(|p| p - anchor)
        .filter(|&v| offsets.iter().all(|&o| lattice.contains(o + v)))
        .collect()
}

/// No forbidden pattern occurs at a placement fully inside the support.
pub fn is_locally_admissible(pattern: &Pattern, spec: &SftSpec) -> Result<bool> {
    if let Some(&s) = pattern.symbols.iter().find(|&&s| s >= spec.alphabet) {
        return Err(Error::SymbolOutOfRange {
            symbol: s,
            alphabet: spec.alphabet,
        });
    }
    for f in &spec.forbidden {
        for v in placements(&f.shape(), &pattern.support) {
            if f.cells.iter().all(|&(o, s)| pattern.get(o + v) == Some(s)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(m: u64, n: u64) -> FiniteLattice {
        FiniteLattice::rectangle(Point::ORIGIN, m, n)
    }

    #[test]
    fn forbidden_patterns_are_canonical() {
        let a = ForbiddenPattern::new([(Point::new(5, 3), 1), (Point::new(4, 3), 1)]).unwrap();
        assert_eq!(a.cells(), &[(Point::new(0, 0), 1), (Point::new(1, 0), 1)]);
        let spec = SftSpec::new("dup", 2, vec![a.clone(), a]).unwrap();
        assert_eq!(spec.forbidden().len(), 1);
        assert!(ForbiddenPattern::new([(Point::ORIGIN, 0), (Point::ORIGIN, 1)]).is_err());
    }

    #[test]
    fn symbols_must_fit_the_alphabet() {
        let f = ForbiddenPattern::new([(Point::ORIGIN, 2)]).unwrap();
        assert_eq!(
            SftSpec::new("bad", 2, vec![f]),
            Err(Error::SymbolOutOfRange { symbol: 2, alphabet: 2 })
        );
        let p = Pattern::constant(rect(2, 1), 3);
        assert!(matches!(
            is_locally_admissible(&p, &golden_mean_horizontal()),
            Err(Error::SymbolOutOfRange { .. })
        ));
    }

    #[test]
    fn golden_mean_specs_are_transposes() {
        let h = golden_mean_horizontal();
        let v = golden_mean_vertical();
        assert!(h.transpose().same_rules(&v));
        assert!(v.transpose().same_rules(&h));
        assert!(h.fits_2x2() && v.fits_2x2());
        assert_eq!(h.max_shape_diameter(), 1);
    }

    #[test]
    fn placement_cases() {
        let domino = rect(2, 1);
        assert_eq!(
            placements(&domino, &rect(3, 1)),
            vec![Point::new(0, 0), Point::new(1, 0)]
        );
        assert_eq!(placements(&rect(2, 2), &rect(2, 2)), vec![Point::ORIGIN]);
        let diag: FiniteLattice = (0..3).map(|i| Point::new(i, i)).collect();
        assert!(placements(&domino, &diag).is_empty());
    }

    #[test]
    fn admissibility_cases() {
        let h = golden_mean_horizontal();
        let ones = Pattern::constant(rect(2, 1), 1);
        assert!(!is_locally_admissible(&ones, &h).unwrap());
        let column = Pattern::constant(rect(1, 5), 1);
        assert!(is_locally_admissible(&column, &h).unwrap());
        assert!(!is_locally_admissible(&column, &golden_mean_vertical()).unwrap());
        for spec in [h, golden_mean_vertical()] {
            let zeros = Pattern::constant(rect(4, 3), 0);
            assert!(is_locally_admissible(&zeros, &spec).unwrap());
        }
    }

    #[test]
    fn builtins_resolve() {
        for name in [
            "golden-mean-h",
            "golden-mean-v",
            "hard-squares",
            "period-2-h",
            "forbid-one",
            "full:3",
        ] {
            assert!(builtin(name).is_ok(), "{name}");
        }
        assert!(builtin("full:1").is_err());
        assert!(builtin("nope").is_err());
        assert!(builtin("full:3").unwrap().is_full_shift());
    }
}
