//! Translational tilings of ℤ² by a single finite shape.
//!
//! A shape `T` tiles by the lattice `Λ` exactly when `T` is a complete set of
//! residues of `ℤ²/Λ`, so `Λ` must have index `|T|`. Every sublattice of index
//! `|T|` has a unique Hermite basis `(a,0), (b,d)` with `ad = |T|` and
//! `0 ≤ b < a`; those are enumerated and checked directly.
//!
//! For a simply connected polyomino a translational tiling exists only if a
//! lattice tiling does, and the reduced basis of such a lattice is no longer
//! than `diam(T) + 1` (neighbouring tiles touch). Exhausting the candidates
//! therefore proves `No` in that case. Anything else that fails is `Unknown`.

use serde::Serialize;

use super::{FiniteLattice, Point};

pub const DEFAULT_TESSELLATION_BOUND: u64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Tessellation {
    /// Translates `T + i·v1 + j·v2` partition ℤ². The basis is Gauss-reduced.
    Yes {
        v1: Point,
        v2: Point,
    },
    No,
    Unknown,
}

impl Tessellation {
    pub fn is_yes(&self) -> bool {
        matches!(self, Tessellation::Yes { .. })
    }
}

fn norm2(p: Point) -> i128 {
    (p.x as i128).pow(2) + (p.y as i128).pow(2)
}

fn dot(p: Point, q: Point) -> i128 {
    p.x as i128 * q.x as i128 + p.y as i128 * q.y as i128
}

/// Lagrange–Gauss reduction; returns `(shortest, second)`.
fn gauss_reduce(mut u: Point, mut v: Point) -> (Point, Point) {
    if norm2(u) > norm2(v) {
        std::mem::swap(&mut u, &mut v);
    }
    loop {
        let n = norm2(u);
        // Nearest integer to <u,v>/<u,u>.
        let num = dot(u, v);
        let q = (2 * num + n).div_euclid(2 * n) as i64;
        let w = Point::new(v.x - q * u.x, v.y - q * u.y);
        if norm2(w) >= n {
            return (u, w);
        }
        v = u;
        u = w;
    }
}

fn is_residue_system(tile: &FiniteLattice, a: i64, b: i64, d: i64) -> bool {
    let area = (a * d) as usize;
    let mut seen = vec![false; area];
    for p in tile.points() {
        let k = p.y.div_euclid(d);
        let ry = p.y - k * d;
        let rx = (p.x - k * b).rem_euclid(a);
        let idx = (ry * a + rx) as usize;
        if std::mem::replace(&mut seen[idx], true) {
            return false;
        }
    }
    true
}

/// Decides whether translates of `tile` partition ℤ².
///
/// Lattices whose reduced basis is longer than `bound · diam(T) + 1` are not
/// examined. With `bound ≥ 1` this never discards a tiling of a connected
/// shape.
pub fn is_tessellation(tile: &FiniteLattice, bound: u64) -> Tessellation {
    if tile.is_empty() {
        return Tessellation::No;
    }
    let area = tile.len() as i64;
    let diam = tile.diameter();
    let limit = bound as f64 * diam + 1.0;
    let limit2 = (limit * limit).ceil() as i128;
    let proven_limit2 = ((diam + 1.0) * (diam + 1.0)).floor() as i128;
    let mut unsafe_skip = false;

    let mut divisors: Vec<i64> = (1..=area)
        .take_while(|a| a * a <= area)
        .filter(|a| area % a == 0)
        .collect();
    let mirrored: Vec<i64> = divisors.iter().rev().map(|a| area / a).collect();
    divisors.extend(mirrored);
    divisors.dedup();

    for &a in &divisors {
        let d = area / a;
        for b in 0..a {
            let (v1, v2) = gauss_reduce(Point::new(a, 0), Point::new(b, d));
            if norm2(v2) > limit2 {
                if norm2(v2) <= proven_limit2 {
                    unsafe_skip = true;
                }
                continue;
            }
            if is_residue_system(tile, a, b, d) {
                return Tessellation::Yes { v1, v2 };
            }
        }
    }
    if !unsafe_skip && tile.is_simply_connected() {
        Tessellation::No
    } else {
        Tessellation::Unknown
    }
}
