use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Point};

/// `ℤ_{n×n} ∪ {s·v + (n, 0) : 0 ≤ s ≤ b}`.
pub fn stick_augmented(n: u64, v: Point, b: u64) -> Result<FiniteLattice> {
    square_with_stick(n, Point::new(n as i64, 0), v, b)
}

/// `ℤ_{n×n} ∪ {s·v + origin : 0 ≤ s ≤ b}`; the stick must miss the square.
pub fn square_with_stick(n: u64, origin: Point, v: Point, b: u64) -> Result<FiniteLattice> {
    if !v.is_primitive() {
        return Err(Error::NonPrimitiveVector(v));
    }
    let square = FiniteLattice::rectangle(Point::ORIGIN, n, n);
    let stick: FiniteLattice = (0..=b as i64)
        .map(|s| Point::new(origin.x + s * v.x, origin.y + s * v.y))
        .collect();
    if let Some(p) = stick.points().find(|&p| square.contains(p)) {
        return Err(Error::Overlap(p));
    }
    Ok(square.union(&stick))
}

/// Stick length `b` making the square hold about `a` of all points:
/// `n² / (n² + b + 1) ≈ a`.
pub fn stick_length(n: u64, a: f64) -> u64 {
    let sq = (n * n) as f64;
    ((sq * (1.0 - a) / a).round() - 1.0).max(0.0) as u64
}

/// `ℤ_{n²×n} ∪ ℤ_{n×n²}`, an L of `2n³ - n²` points.
pub fn lshape(n: u64) -> FiniteLattice {
    let wide = FiniteLattice::rectangle(Point::ORIGIN, n * n, n);
    let tall = FiniteLattice::rectangle(Point::ORIGIN, n, n * n);
    wide.union(&tall)
}

/// `ℤ_{n²×n} ∪ ℤ_{n×n²}((1, n))`: a tall block standing one column in from
/// the left end of a wide one.
pub fn staircase(n: u64) -> FiniteLattice {
    let wide = FiniteLattice::rectangle(Point::ORIGIN, n * n, n);
    let tall = FiniteLattice::rectangle(Point::new(1, n as i64), n, n * n);
    wide.union(&tall)
}
