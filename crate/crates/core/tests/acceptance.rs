//! Exit gate: one PASS/FAIL line per criterion, each with a pinned runtime
//! limit. Exits nonzero when any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spatial_entropy::counting::{count_bruteforce, count_profile_dp, ln_biguint};
use spatial_entropy::entropy::{omega_entropy, rect_entropy_table, strict_gap_check};
use spatial_entropy::fibonacci::ln_golden;
use spatial_entropy::lattice::{
    block_decompose, boundary, decompose_bands, interior, run_length_census, run_length_class, Axis, FiniteLattice,
    Point,
};
use spatial_entropy::mixing::{verify_block_gluing, GluingResult, GluingVariant};
use spatial_entropy::multiplicative::{count_x_q0, entropy_x_q0_series, ln_count_x_q0};
use spatial_entropy::sft::{full_shift, golden_mean_horizontal, period_two_horizontal};
use spatial_entropy::systems::condition_report;
use spatial_entropy::systems::{
    lshape, omega_q, omega_q_count_formula, omega_q_entropy_series, omega_q_plus, omega_q_system, rect_system,
    row_census, squares, staircase, stick_augmented, stick_system, ConditionOptions, SizeExpr, Trend,
};

type Outcome = Result<String, String>;

/// Name, runtime limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rect(m: u64, n: u64) -> FiniteLattice {
    FiniteLattice::rectangle(Point::ORIGIN, m, n)
}

/// Strings of length `k` with no two adjacent ones, by the plain recurrence.
fn fib_oracle(k: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::one(), BigUint::from(2u32));
    for _ in 0..k {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// Golden-mean-h count as the product of `a_len` over maximal horizontal runs.
fn run_product(l: &FiniteLattice) -> BigUint {
    let mut v = BigUint::one();
    for (_, runs) in l.row_runs() {
        for &(s, e) in runs {
            v *= fib_oracle((e - s + 1) as usize);
        }
    }
    v
}

/// Exhaustive golden-mean-h count over every 0/1 assignment.
fn exhaustive_golden(l: &FiniteLattice) -> u64 {
    let pts = l.to_vec();
    let pairs: Vec<(usize, usize)> = pts
        .iter()
        .enumerate()
        .filter_map(|(i, p)| l.index_of(Point::new(p.x + 1, p.y)).map(|j| (i, j)))
        .collect();
    (0u64..1 << pts.len())
        .filter(|x| pairs.iter().all(|&(i, j)| (x >> i) & (x >> j) & 1 == 0))
        .count() as u64
}

fn c1() -> Outcome {
    let gh = golden_mean_horizontal();
    for m in 1..=30 {
        let got = count_profile_dp(&rect(m, 1), &gh).map_err(|e| e.to_string())?.value;
        ensure(got == fib_oracle(m as usize), || format!("m={m}: {got}"))?;
    }
    Ok(format!("a_1..a_30 exact, a_30 = {}", fib_oracle(30)))
}

fn c2() -> Outcome {
    let gh = golden_mean_horizontal();
    let mut brute = 0;
    for m in 1..=10u64 {
        for n in 1..=10u64 {
            let l = rect(m, n);
            let dp = count_profile_dp(&l, &gh).map_err(|e| e.to_string())?.value;
            ensure(dp == fib_oracle(m as usize).pow(n as u32), || format!("{m}x{n}: {dp}"))?;
            if m * n <= 16 {
                let bf = count_bruteforce(&l, &gh).map_err(|e| e.to_string())?.value;
                let ex = exhaustive_golden(&l);
                ensure(bf == dp && dp == BigUint::from(ex), || {
                    format!("{m}x{n}: brute {bf}, exhaustive {ex}")
                })?;
                brute += 1;
            }
        }
    }
    Ok(format!("100 rectangles = a_m^n, {brute} confirmed exhaustively"))
}

/// Row lengths of `Ω_q⁺(n)` straight from the chains `i, iq, iq², …`.
fn census_oracle(q: u64, n: u64) -> BTreeMap<u64, u64> {
    let limit = q.pow(n as u32);
    let mut out = BTreeMap::new();
    for i in (1..=limit).filter(|i| i % q != 0) {
        let mut len = 0;
        let mut k = i;
        while k <= limit {
            len += 1;
            k *= q;
        }
        *out.entry(len).or_insert(0) += 1;
    }
    out
}

fn c3() -> Outcome {
    for q in 2..=4u64 {
        for n in 1..=8u64 {
            let census = row_census(q, n).map_err(|e| e.to_string())?;
            let total: u64 = census.iter().map(|(l, c)| l * c).sum();
            ensure(total == q.pow(n as u32), || format!("q={q} n={n}: total {total}"))?;
            let mut want = BTreeMap::from([(n + 1, 1)]);
            if q > 2 {
                want.insert(n, q - 2);
            }
            for k in 1..n {
                want.insert(k, (q - 1).pow(2) * q.pow((n - 1 - k) as u32));
            }
            ensure(census == want, || format!("q={q} n={n}: {census:?} vs {want:?}"))?;
            ensure(census == census_oracle(q, n), || {
                format!("q={q} n={n}: chains disagree")
            })?;
        }
    }
    Ok("q in {2,3,4}, n <= 8 exact".into())
}

fn c4() -> Outcome {
    let gh = golden_mean_horizontal();
    for (q, n) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
        let l = omega_q(q, n).map_err(|e| e.to_string())?;
        let formula = omega_q_count_formula(q, n).map_err(|e| e.to_string())?;
        let dp = count_profile_dp(&l, &gh).map_err(|e| e.to_string())?.value;
        ensure(formula == dp, || {
            format!("(q,n)=({q},{n}): formula {formula}, sweep {dp}")
        })?;
        ensure(dp == run_product(&l), || {
            format!("(q,n)=({q},{n}): run product differs")
        })?;
    }
    let b1 = exhaustive_golden(&omega_q(2, 1).unwrap());
    let b2 = exhaustive_golden(&omega_q(2, 2).unwrap());
    ensure(b1 == 64 && b2 == 3969, || format!("exhaustive {b1}, {b2}"))?;
    Ok("5 (q,n) pairs exact; exhaustive 64, 3969".into())
}

/// `(1/2)(q-1)² Σ_{k≤K} q^{-(k+1)} ln a_{2k}` with `a` in floating point.
fn omega_series_oracle(q: u64, terms: usize) -> f64 {
    let mut a = vec![1.0f64, 2.0];
    while a.len() <= 2 * terms {
        let l = a.len();
        a.push(a[l - 1] + a[l - 2]);
    }
    let qf = q as f64;
    0.5 * (qf - 1.0).powi(2)
        * (1..=terms)
            .map(|k| qf.powi(-(k as i32 + 1)) * a[2 * k].ln())
            .sum::<f64>()
}

fn c5() -> Outcome {
    let ln_g = ln_golden();
    ensure((ln_g - 0.481211825).abs() < 1e-9, || format!("ln g = {ln_g}"))?;
    let s = omega_q_entropy_series(2, 40).map_err(|e| e.to_string())?;
    let oracle = omega_series_oracle(2, 200);
    ensure((s.value - omega_series_oracle(2, 40)).abs() < 1e-12, || {
        format!("partial sum {}", s.value)
    })?;
    ensure(s.value <= oracle && oracle <= s.value + s.tail_bound + 1e-12, || {
        format!("oracle {oracle} outside [{}, +{}]", s.value, s.tail_bound)
    })?;
    ensure(s.value >= 0.5170 && s.value + s.tail_bound <= 0.5185, || {
        format!("value {}", s.value)
    })?;
    ensure(s.value - ln_g > 0.02, || format!("gap {}", s.value - ln_g))?;
    let vals: Vec<f64> = (2..=4)
        .map(|q| omega_q_entropy_series(q, 40).map(|s| s.value + s.tail_bound))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let lows: Vec<f64> = (2..=4).map(|q| omega_q_entropy_series(q, 40).unwrap().value).collect();
    ensure(lows[0] < lows[1] && lows[1] < lows[2], || {
        format!("not increasing: {lows:?}")
    })?;
    ensure(vals.iter().all(|&v| v < std::f64::consts::LN_2), || {
        format!("above ln 2: {vals:?}")
    })?;
    Ok(format!(
        "h = {:.10} (tail {:.1e}), gap {:.5}, q=2,3,4: {lows:.5?}",
        s.value,
        s.tail_bound,
        s.value - ln_g
    ))
}

fn c6() -> Outcome {
    for q in [2u64, 3] {
        for n in 1..=20u64 {
            let pairs: Vec<(u64, u64)> = (1..=n).filter(|k| q * k <= n).map(|k| (k - 1, q * k - 1)).collect();
            let brute = (0u64..1 << n)
                .filter(|x| !pairs.iter().any(|&(a, b)| (x >> a) & 1 == 1 && (x >> b) & 1 == 1))
                .count();
            let got = count_x_q0(n, q).map_err(|e| e.to_string())?;
            ensure(got == BigUint::from(brute), || format!("n={n} q={q}: {got} vs {brute}"))?;
        }
    }
    let horizon = 1u64 << 14;
    let empirical = ln_count_x_q0(horizon, 2).map_err(|e| e.to_string())? / horizon as f64;
    let exact = ln_biguint(&count_x_q0(horizon, 2).map_err(|e| e.to_string())?) / horizon as f64;
    ensure((empirical - exact).abs() < 1e-9, || {
        format!("log paths differ: {empirical} vs {exact}")
    })?;
    let s = entropy_x_q0_series(2, 40).map_err(|e| e.to_string())?;
    ensure((empirical - s.value).abs() < 0.01, || {
        format!("{empirical} vs series {}", s.value)
    })?;
    Ok(format!(
        "n <= 20 exact; ratio at 2^14 {empirical:.6} vs series {:.6}",
        s.value
    ))
}

fn c7() -> Outcome {
    let ln_g = ln_golden();
    let g = strict_gap_check(&golden_mean_horizontal(), 12, 12).map_err(|e| e.to_string())?;
    ensure(g.holds(), || format!("violations {:?}", g.violations))?;
    let t = rect_entropy_table(&golden_mean_horizontal(), 12, 12).map_err(|e| e.to_string())?;
    let min = t.entries().map(|(_, _, _, r)| r).fold(f64::INFINITY, f64::min);
    ensure(min > ln_g, || format!("min entry {min}"))?;
    let want = fib_oracle(12).to_string().parse::<f64>().unwrap().ln() / 12.0;
    ensure((min - want).abs() < 1e-12, || {
        format!("min {min}, (1/12) ln a_12 = {want}")
    })?;
    let f = rect_entropy_table(&full_shift(2).unwrap(), 12, 12).map_err(|e| e.to_string())?;
    let worst = f
        .entries()
        .map(|(_, _, _, r)| (r - std::f64::consts::LN_2).abs())
        .fold(0.0, f64::max);
    ensure(worst < 1e-12, || format!("full shift off by {worst}"))?;
    let fg = strict_gap_check(&full_shift(2).unwrap(), 12, 12).map_err(|e| e.to_string())?;
    ensure(fg.holds(), || "full-shift equality case rejected".into())?;
    Ok(format!(
        "min {min:.10} at {:?}, margin {:.5}; full shift within {worst:.1e}",
        t.argmin,
        min - ln_g
    ))
}

fn c8() -> Outcome {
    let opts = ConditionOptions {
        m_max: 0,
        ..Default::default()
    };
    let tall: SizeExpr = "n^2".parse().unwrap();
    let short: SizeExpr = "n".parse().unwrap();
    for system in [squares(), rect_system(tall, short)] {
        let r = condition_report(&system, 1, 200, &opts).map_err(|e| e.to_string())?;
        ensure(r.verdicts.boundary == Trend::Vanishing, || {
            format!("{}: boundary {:?}", r.system, r.verdicts.boundary)
        })?;
        for &((k, l), t) in &r.verdicts.blocks {
            ensure(t == Trend::Vanishing, || {
                format!("{}: beta_{{{k},{l}}} {t:?}", r.system)
            })?;
        }
        ensure(r.verdicts.blocks.len() == 9, || "block sizes missing".into())?;
    }
    let ln_g = ln_golden();
    let e = omega_entropy(&golden_mean_horizontal(), &squares(), 48, 48).map_err(|e| e.to_string())?;
    let ratio = e.records[0].ratio;
    let want = ln_biguint(&fib_oracle(48)) / 48.0;
    ensure((ratio - want).abs() < 1e-9, || {
        format!("ratio {ratio}, run product {want}")
    })?;
    ensure((ratio - ln_g).abs() < 0.01, || format!("ratio {ratio}"))?;
    Ok(format!(
        "all vanishing to n=200; ratio(48) = {ratio:.8}, off ln g by {:.5}",
        ratio - ln_g
    ))
}

fn c9() -> Outcome {
    let r = condition_report(
        &omega_q_system(2).unwrap(),
        1,
        8,
        &ConditionOptions {
            m_max: 2,
            ..Default::default()
        },
    )
    .map_err(|e| e.to_string())?;
    ensure(r.verdicts.runs_h[1] == Trend::NonVanishing, || {
        format!("beta_2 verdict {:?}", r.verdicts.runs_h[1])
    })?;
    // Direct count of points on length-2 rows of Ω_2(n), from the chain census.
    for row in &r.rows {
        let want = 2 * 2 * census_oracle(2, row.n).get(&1).copied().unwrap_or(0);
        let got = (row.run_ratios_h[1] * row.size as f64).round() as u64;
        ensure(got == want, || format!("n={}: beta_2 {got} vs {want}", row.n))?;
    }
    let gh = golden_mean_horizontal();
    let omega = omega_entropy(&gh, &omega_q_system(2).unwrap(), 8, 8)
        .map_err(|e| e.to_string())?
        .records[0]
        .ratio;
    let exact = ln_biguint(&omega_q_count_formula(2, 8).unwrap()) / (4 * 256) as f64;
    ensure((omega - exact).abs() < 1e-9, || {
        format!("sweep {omega} vs formula {exact}")
    })?;
    let table = rect_entropy_table(&gh, 12, 12).map_err(|e| e.to_string())?.estimate;
    ensure(omega - table > 0.015, || format!("gap {}", omega - table))?;
    Ok(format!(
        "beta_2 non-vanishing; h(8) = {omega:.8}, table min {table:.8}, gap {:.5}",
        omega - table
    ))
}

fn c10() -> Outcome {
    let n = 48;
    let system = stick_system(Point::new(0, 1), 0.5).map_err(|e| e.to_string())?;
    let l = system.lattice(n).map_err(|e| e.to_string())?;
    ensure(l == stick_augmented(n, Point::new(0, 1), n * n - 1).unwrap(), || {
        "stick length is not n^2 - 1".into()
    })?;
    let ratio = omega_entropy(&golden_mean_horizontal(), &system, n, n)
        .map_err(|e| e.to_string())?
        .records[0]
        .ratio;
    let exact = ln_biguint(&run_product(&l)) / l.len() as f64;
    ensure((ratio - exact).abs() < 1e-9, || {
        format!("sweep {ratio} vs run product {exact}")
    })?;
    let target = 0.5 * (ln_golden() + std::f64::consts::LN_2);
    ensure((ratio - target).abs() < 0.01, || {
        format!("ratio {ratio}, target {target}")
    })?;
    Ok(format!(
        "ratio(48) = {ratio:.8}, target {target:.8}, off by {:.5}",
        (ratio - target).abs()
    ))
}

/// Joint extension count for a spec made only of horizontal pairs: rows are
/// independent, so each row is a 1-D transfer with pinned cells.
fn horizontal_pair_count(witness: &FiniteLattice, forbidden: &[(u32, u32)], fixed: &BTreeMap<Point, u32>) -> BigUint {
    let mut total = BigUint::one();
    for (y, runs) in witness.row_runs() {
        for &(s, e) in runs {
            let mut w = [BigUint::one(), BigUint::one()];
            for x in s..=e {
                let mut next = [BigUint::default(), BigUint::default()];
                for sym in 0..2u32 {
                    if fixed.get(&Point::new(x, y)).is_some_and(|&f| f != sym) {
                        continue;
                    }
                    for prev in 0..2u32 {
                        if x > s && forbidden.contains(&(prev, sym)) {
                            continue;
                        }
                        if x == s && prev == 1 {
                            continue;
                        }
                        next[sym as usize] += &w[prev as usize];
                    }
                }
                w = next;
            }
            total *= &w[0] + &w[1];
        }
    }
    total
}

fn c11() -> Outcome {
    let v =
        verify_block_gluing(&golden_mean_horizontal(), 1.0, 3, 6, GluingVariant::Full).map_err(|e| e.to_string())?;
    ensure(v.is_verified(), || format!("{:?}", v.result))?;
    let p = verify_block_gluing(&period_two_horizontal(), 1.0, 2, 4, GluingVariant::Horizontal)
        .map_err(|e| e.to_string())?;
    let GluingResult::Counterexample {
        first,
        second,
        joint_count,
        ..
    } = &p.result
    else {
        return Err("period-2 verified".into());
    };
    let fixed: BTreeMap<Point, u32> = first.iter().chain(second).copied().collect();
    let pts: FiniteLattice = fixed.keys().copied().collect();
    let witness = pts.bounding_lattice().dilate(1);
    let replay = horizontal_pair_count(&witness, &[(0, 0), (1, 1)], &fixed);
    ensure(
        *joint_count == BigUint::default() && replay == BigUint::default(),
        || format!("joint count {joint_count}, replay {replay}"),
    )?;
    Ok(format!(
        "golden-mean-h: {} blocks x {} offsets clean; period-2-h counterexample replays to 0",
        v.blocks, v.offsets
    ))
}

fn random_connected(rng: &mut ChaCha8Rng, size: usize) -> FiniteLattice {
    let mut set = BTreeSet::from([Point::ORIGIN]);
    let mut order = vec![Point::ORIGIN];
    while set.len() < size {
        let p = order[rng.gen_range(0..order.len())];
        let d = [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)];
        let q = Point::new(p.x + d.0, p.y + d.1);
        if set.insert(q) {
            order.push(q);
        }
    }
    set.into_iter().collect()
}

fn geometry_identities(l: &FiniteLattice) -> Result<(), String> {
    let has = |x, y| l.contains(Point::new(x, y));
    let inner: BTreeSet<Point> = l
        .points()
        .filter(|p| has(p.x + 1, p.y) && has(p.x, p.y + 1) && has(p.x + 1, p.y + 1))
        .collect();
    let int = interior(l);
    let bd = boundary(l);
    ensure(int.points().collect::<BTreeSet<_>>() == inner, || "interior".into())?;
    ensure(int.intersection(&bd).is_empty() && int.union(&bd) == *l, || {
        "interior/boundary split".into()
    })?;

    for (k, m) in [(1, 1), (2, 2), (2, 3), (3, 2), (5, 5)] {
        let d = block_decompose(l, k, m);
        ensure(l.len() as u64 == d.alpha * k * m + d.beta, || {
            format!("|L| = a k l + b for {k}x{m}")
        })?;
        ensure(
            d.covered.union(&d.residue) == *l && d.covered.intersection(&d.residue).is_empty(),
            || format!("covered/residue split for {k}x{m}"),
        )?;
        let b = l.bounding_rect();
        let (ki, mi) = (k as i64, m as i64);
        let mut alpha = 0;
        for bi in (b.origin.y.div_euclid(mi) - 1)..=((b.origin.y + b.height as i64).div_euclid(mi) + 1) {
            for ai in (b.origin.x.div_euclid(ki) - 1)..=((b.origin.x + b.width as i64).div_euclid(ki) + 1) {
                let blk = FiniteLattice::rectangle(Point::new(ai * ki, bi * mi), k, m);
                if blk.is_subset_of(l) {
                    alpha += 1;
                }
            }
        }
        ensure(alpha == d.alpha, || {
            format!("alpha {} vs grid scan {alpha} for {k}x{m}", d.alpha)
        })?;
    }

    for axis in [Axis::Horizontal, Axis::Vertical] {
        let step = match axis {
            Axis::Horizontal => Point::new(1, 0),
            Axis::Vertical => Point::new(0, 1),
        };
        let mut want: BTreeMap<u64, u64> = BTreeMap::new();
        for p in l.points() {
            let mut len = 1;
            for sign in [1, -1] {
                let mut q = Point::new(p.x + sign * step.x, p.y + sign * step.y);
                while l.contains(q) {
                    len += 1;
                    q = Point::new(q.x + sign * step.x, q.y + sign * step.y);
                }
            }
            *want.entry(len).or_default() += 1;
        }
        ensure(run_length_census(l, axis) == want, || format!("{axis:?} run census"))?;
        let mut union = FiniteLattice::empty();
        let mut total = 0;
        for (&m, &c) in &want {
            let class = run_length_class(l, axis, m);
            ensure(class.len() as u64 == c, || format!("{axis:?} class {m}"))?;
            total += class.len();
            union = union.union(&class);
        }
        ensure(union == *l && total == l.len(), || {
            format!("{axis:?} classes do not partition")
        })?;

        let view = match axis {
            Axis::Horizontal => l.clone(),
            Axis::Vertical => l.transpose(),
        };
        let contiguous = view.row_runs().all(|(_, r)| r.len() == 1);
        match decompose_bands(l, axis) {
            Ok(bands) => {
                ensure(contiguous, || format!("{axis:?} bands accepted a split row"))?;
                let area: u64 = bands.iter().map(|r| r.width * r.height).sum();
                let union = bands
                    .iter()
                    .fold(FiniteLattice::empty(), |u, r| u.union(&r.to_lattice()));
                ensure(union == *l && area == l.len() as u64, || {
                    format!("{axis:?} bands do not reunite")
                })?;
            }
            Err(_) => ensure(!contiguous, || format!("{axis:?} bands refused a contiguous lattice"))?,
        }
    }
    Ok(())
}

fn c12() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..500 {
        let size = rng.gen_range(1..=64);
        let l = random_connected(&mut rng, size);
        ensure(l.is_connected() && l.len() == size, || {
            format!("generator broke on lattice {i}")
        })?;
        geometry_identities(&l).map_err(|e| format!("random lattice {i}: {e}"))?;
    }
    let mut shapes = vec![rect(7, 4), lshape(3), staircase(3)];
    for (q, n) in [(2, 3), (3, 2), (2, 4)] {
        shapes.push(omega_q(q, n).unwrap());
        shapes.push(omega_q_plus(q, n).unwrap());
    }
    shapes.push(stick_augmented(4, Point::new(0, 1), 15).unwrap());
    shapes.push(stick_augmented(4, Point::new(1, 1), 5).unwrap());
    for (i, l) in shapes.iter().enumerate() {
        geometry_identities(l).map_err(|e| format!("builtin shape {i}: {e}"))?;
    }
    Ok(format!("500 random lattices and {} builtin shapes", shapes.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1 fibonacci strips", 1, c1),
        ("2 rectangle factorization", 10, c2),
        ("3 row census", 1, c3),
        ("4 omega_q closed form", 30, c4),
        ("5 omega_q series", 1, c5),
        ("6 multiplicative system", 60, c6),
        ("7 strict gap", 5, c7),
        ("8 vanishing boundary", 60, c8),
        ("9 short rows persist", 30, c9),
        ("10 stick interpolation", 60, c10),
        ("11 block gluing", 30, c11),
        ("12 geometry identities", 30, c12),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let slow = elapsed > Duration::from_secs(limit);
        let (status, detail) = match (&outcome, slow) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {limit}s limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} [{name}] {:.3}s/{limit}s: {detail}", elapsed.as_secs_f64());
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
