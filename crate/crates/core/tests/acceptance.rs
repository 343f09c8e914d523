//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.

#[path = "data/bessel_reference.rs"]
#[allow(dead_code, clippy::excessive_precision)]
mod reference;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use sphrange::harmonics::sphere_quadrature;
use sphrange::oracles::{sonine_check, SONINE_TOLERANCE};
use sphrange::range::*;
use sphrange::spectral::decompose;
use sphrange::specfun::*;
use sphrange::transform::{darboux_residual, forward, MeanRule, Phantom};
use sphrange::{DataGrid, Dimension, SpectralFunction};

const CONDITION3_TOL: f64 = 1e-6;
const REDUCTION_TOL: f64 = 1e-10;
const MOMENT_TOL: f64 = 1e-8;
const CONTROL_FLOOR: f64 = 1e-3;
const SLOPE_TOL: f64 = 0.3;
const DARBOUX_RATIO: (f64, f64) = (4.0, 0.5);
const BESSEL_TOL: f64 = 1e-10;
const STABILITY: f64 = 0.1;
const RUNTIME_TARGET: Duration = Duration::from_secs(120);

const M_MAX: usize = 8;
const ZEROS: usize = 20;
const DIRECTIONS: usize = 2048;
const CONTROL_AMPLITUDE: f64 = 0.05;
/// `(m, l, a, b)` of the three non-range perturbations `t^a (2−t)^b Y^m_l`.
const CONTROLS: [(usize, usize, u32, u32); 3] = [(1, 1, 2, 2), (2, 2, 3, 2), (3, 1, 2, 3)];

/// Margins recorded on the first run with the default sweep seed; later runs
/// must not fall below them.
const LOWER_BOUND_FLOOR: [(f64, f64); 4] = [(0.0, 0.2700), (1.0, 0.2755), (2.0, 0.2701), (2.5, 0.2225)];

type Key = (usize, usize, usize);

/// Everything criteria 1–4 measure on one grid.
struct Sweep {
    runtime: Duration,
    condition3: BTreeMap<Key, f64>,
    /// `|raw₂ / (λ J'(λ)) − ĝ(λ)|` per `(m, l, k)`.
    reduction: BTreeMap<Key, f64>,
    reduction_scale: f64,
    /// The same identity on the first control, where `ĝ(λ_k)` is far from zero.
    control_reduction: (f64, f64),
    moments: BTreeMap<Key, f64>,
    /// Largest condition-3 and moment residual for each control.
    controls: Vec<(f64, f64)>,
    slopes: Vec<(usize, Option<f64>)>,
}

fn planar_phantom() -> Phantom {
    Phantom::bump(Dimension::Two, [0.3, 0.0, 0.0], 0.4, 1.0).unwrap()
}

fn config() -> CheckConfig {
    CheckConfig { m_max: M_MAX, zeros: ZEROS, ..Default::default() }
}

fn key(e: &ReportEntry) -> Key {
    (e.m, e.l, e.index)
}

fn sweep(t_points: usize, resolution: usize, single_thread: bool) -> Sweep {
    let n = Dimension::Two;
    let centers = sphere_quadrature(n, resolution).unwrap();
    let rule = MeanRule::directions(n, DIRECTIONS).unwrap();
    let run = || {
        let start = Instant::now();
        let grid = forward(&planar_phantom(), &centers, t_points, &rule).unwrap();
        let report = build_report(&grid, &config()).unwrap();
        (start.elapsed(), grid, report)
    };
    let (runtime, grid, report) = if single_thread {
        rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(run)
    } else {
        run()
    };

    let condition3 = report.entries_for(Condition::BesselZeros).map(|e| (key(e), e.residual)).collect();
    let moments = report.entries_for(Condition::Moment).map(|e| (key(e), e.residual)).collect();
    let (reduction, reduction_scale) = reduction_identity(&grid);

    let control_grids: Vec<DataGrid> = CONTROLS
        .iter()
        .map(|&(m, l, a, b)| {
            let term = NonRangeTerm { m, l, a, b, amplitude: CONTROL_AMPLITUDE * grid.max_abs() };
            term.apply(&grid).unwrap()
        })
        .collect();
    let controls = control_grids
        .iter()
        .map(|g| {
            let r = build_report(g, &config()).unwrap();
            (r.max_residual(Condition::BesselZeros), r.max_residual(Condition::Moment))
        })
        .collect();
    let (diffs, scale) = reduction_identity(&control_grids[0]);
    let control_reduction = (max_of(diffs.values()), scale);

    let slopes = (1..=3)
        .map(|m| {
            let v = report.vanishing.iter().find(|v| v.m == m && v.l == 1).unwrap();
            (m, match v.order {
                VanishingOrder::Estimate(s) => Some(s),
                VanishingOrder::AtLeastWindowLimit => None,
            })
        })
        .collect();

    Sweep { runtime, condition3, reduction, reduction_scale, control_reduction, moments, controls, slopes }
}

fn reduction_identity(grid: &DataGrid) -> (BTreeMap<Key, f64>, f64) {
    let mut out = BTreeMap::new();
    let mut scale = 0.0f64;
    for coef in decompose(grid, M_MAX).unwrap() {
        let idx = coef.index();
        let zeros = bessel_zeros(BesselOrder::for_harmonic(Dimension::Two, idx.degree()), ZEROS).unwrap();
        let spec = SpectralFunction::new(coef);
        for k in 1..=ZEROS {
            let eig = Eigenfunction::from_zeros(idx, &zeros, k).unwrap();
            let raw2 = check_condition2(grid, &eig).unwrap().raw;
            let raw3 = spec.eval(eig.lambda());
            scale = scale.max(raw3.abs());
            out.insert((idx.degree(), idx.index(), k), (raw2 / eig.boundary_factor() - raw3).abs());
        }
    }
    (out, scale)
}

fn max_of<'a>(values: impl IntoIterator<Item = &'a f64>) -> f64 {
    values.into_iter().fold(0.0, |m, v| m.max(*v))
}

struct Line {
    passed: bool,
}

fn report(results: &mut Vec<Line>, id: usize, passed: bool, detail: String) {
    println!("criterion {id}: {} {detail}", if passed { "PASS" } else { "FAIL" });
    results.push(Line { passed });
}

fn criterion_1(base: &Sweep) -> (bool, String) {
    let worst = max_of(base.condition3.values());
    let passed = worst < CONDITION3_TOL && base.runtime < RUNTIME_TARGET;
    (
        passed,
        format!(
            "condition (3): max normalized residual {worst:.3e} < {CONDITION3_TOL:.0e} over {} residuals; single-thread runtime {:.1?}",
            base.condition3.len(),
            base.runtime
        ),
    )
}

fn criterion_2(base: &Sweep) -> (bool, String) {
    let worst = max_of(base.reduction.values());
    let (control, control_scale) = base.control_reduction;
    (
        worst < REDUCTION_TOL && control < REDUCTION_TOL,
        format!(
            "condition (2) reduces to condition (3): max |raw2/bf - raw3| {worst:.3e} < {REDUCTION_TOL:.0e} (|raw3| up to {:.3e}); on a control {control:.3e} (|raw3| up to {control_scale:.3e})",
            base.reduction_scale
        ),
    )
}

fn criterion_3(base: &Sweep) -> (bool, String) {
    let worst = max_of(base.moments.values());
    let controls_fail = base.controls.iter().all(|&(c3, mo)| c3 > CONTROL_FLOOR && mo > CONTROL_FLOOR);
    let list: Vec<String> = base.controls.iter().map(|(c3, mo)| format!("({c3:.2e}, {mo:.2e})")).collect();
    (
        worst < MOMENT_TOL && controls_fail,
        format!(
            "moments: max residual {worst:.3e} < {MOMENT_TOL:.0e}; controls (cond3, moment) {} all > {CONTROL_FLOOR:.0e}",
            list.join(" ")
        ),
    )
}

fn criterion_4(base: &Sweep) -> (bool, String) {
    let ok = base
        .slopes
        .iter()
        .all(|&(m, s)| s.is_some_and(|s| (s - 2.0 * m as f64).abs() < SLOPE_TOL));
    let list: Vec<String> = base
        .slopes
        .iter()
        .map(|(m, s)| format!("m={m}: {}", s.map_or("none".into(), |s| format!("{s:.3}"))))
        .collect();
    (ok, format!("vanishing order within {SLOPE_TOL} of 2m: {}", list.join(", ")))
}

fn criterion_5() -> (bool, String) {
    let ladder = [0.02, 0.01, 0.005, 0.0025];
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, center, xs) in [
        (Dimension::Two, [0.2, 0.1, 0.0], vec![[0.1, 0.0, 0.0], [0.0, 0.3, 0.0]]),
        (Dimension::Three, [0.2, 0.1, 0.3], vec![[0.1, 0.0, 0.0], [0.0, 0.3, 0.1]]),
    ] {
        let f = Phantom::bump(n, center, 0.5, 1.0).unwrap();
        let rule = MeanRule::axial(n, 256).unwrap();
        let r: Vec<f64> = ladder.iter().map(|&h| darboux_residual(&f, &xs, &[0.3, 0.5], h, &rule).unwrap()).collect();
        let ratios: Vec<f64> = r.windows(2).map(|w| w[0] / w[1]).collect();
        ok &= ratios.iter().all(|q| (q - DARBOUX_RATIO.0).abs() < DARBOUX_RATIO.1);
        let shown: Vec<String> = ratios.iter().map(|q| format!("{q:.3}")).collect();
        parts.push(format!("n={n} ratios [{}]", shown.join(", ")));
    }
    (ok, format!("Darboux residual ratio per halving of h within 4 ± 0.5: {}", parts.join("; ")))
}

fn criterion_6() -> (bool, String) {
    let vs: Vec<f64> = (0..=600).map(|i| -30.0 + 0.1 * i as f64).collect();
    let mut worst = (0.0f64, 0, 0, 0.0);
    for n in [Dimension::Two, Dimension::Three] {
        for m in 1..=5 {
            let s = sonine_check(m, n, &vs).unwrap();
            if s.max_deviation >= worst.0 {
                worst = (s.max_deviation, m, n.get(), s.worst_v);
            }
        }
    }
    (
        worst.0 < SONINE_TOLERANCE,
        format!(
            "Sonine identity: max relative deviation {:.3e} < {SONINE_TOLERANCE:.0e} (worst m={} n={} v={:.1})",
            worst.0, worst.1, worst.2, worst.3
        ),
    )
}

fn criterion_7() -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (nu, floor) in LOWER_BOUND_FLOOR {
        let m = lower_bound_margin(BesselOrder::new(nu).unwrap(), &LowerBoundSweep::default()).unwrap();
        ok &= m.margin > 0.0 && m.margin >= floor && m.admissible == 10_000;
        parts.push(format!("nu={nu}: {:.4} (floor {floor})", m.margin));
    }
    (ok, format!("Bessel lower-bound margin over 1e4 admissible samples, |z| <= 50: {}", parts.join(", ")))
}

fn criterion_8() -> (bool, String) {
    let order = |v: f64| BesselOrder::new(v).unwrap();
    let scale = |x: f64, value: f64| value.abs().max((2.0 / (std::f64::consts::PI * x)).sqrt().min(1.0));
    let mut value_err = 0.0f64;
    for &(v, x, expected) in reference::VALUES.iter().filter(|r| r.1 <= 50.0) {
        let got = bessel_j_real(order(v), x).unwrap();
        value_err = value_err.max((got - expected).abs() / scale(x, expected));
    }
    let mut closed_err = 0.0f64;
    for l in 0..4 {
        for i in 1..=500 {
            let x = 0.1 * i as f64;
            if x < 2.0 * l as f64 {
                continue;
            }
            let exact = bessel_j_half_integer(l, x);
            let got = bessel_j_real(order(l as f64 + 0.5), x).unwrap();
            closed_err = closed_err.max((got - exact).abs() / scale(x, exact));
        }
    }
    let mut zero_err = 0.0f64;
    for (v, zeros) in reference::ZEROS {
        let table = bessel_zeros(order(*v), 20).unwrap();
        for (a, b) in table.zeros().iter().zip(zeros) {
            zero_err = zero_err.max((a - b).abs());
        }
    }
    let worst = value_err.max(closed_err).max(zero_err);
    (
        worst < BESSEL_TOL,
        format!(
            "special functions: values {value_err:.2e}, half-integer closed form {closed_err:.2e}, first 20 zeros of J_0, J_1, J_3/2 {zero_err:.2e}; all < {BESSEL_TOL:.0e}"
        ),
    )
}

/// Residuals far below their tolerance are roundoff; they count as stable when
/// they move by less than 10% of `max(r, r', tolerance)`.
fn stable(a: f64, b: f64, tolerance: f64) -> bool {
    (a - b).abs() < STABILITY * a.abs().max(b.abs()).max(tolerance)
}

fn compare(name: &str, a: &BTreeMap<Key, f64>, b: &BTreeMap<Key, f64>, tolerance: f64, out: &mut Vec<String>) -> bool {
    let mut ok = a.len() == b.len();
    let mut change = 0.0f64;
    for (k, x) in a {
        let Some(y) = b.get(k) else {
            ok = false;
            continue;
        };
        ok &= stable(*x, *y, tolerance);
        change = change.max((x - y).abs());
    }
    out.push(format!("{name} max |change| {change:.1e}"));
    ok
}

fn criterion_9(base: &Sweep, fine: &Sweep) -> (bool, String) {
    let mut parts = Vec::new();
    let mut ok = compare("cond3", &base.condition3, &fine.condition3, CONDITION3_TOL, &mut parts);
    ok &= compare("reduction", &base.reduction, &fine.reduction, REDUCTION_TOL, &mut parts);
    ok &= compare("moments", &base.moments, &fine.moments, MOMENT_TOL, &mut parts);
    let mut control_change = 0.0f64;
    for (a, b) in base.controls.iter().zip(&fine.controls) {
        ok &= stable(a.0, b.0, CONDITION3_TOL) && stable(a.1, b.1, MOMENT_TOL);
        control_change = control_change.max(((a.0 - b.0) / a.0).abs()).max(((a.1 - b.1) / a.1).abs());
    }
    parts.push(format!("controls max relative change {control_change:.1e}"));
    let mut slope_change = 0.0f64;
    for (a, b) in base.slopes.iter().zip(&fine.slopes) {
        match (a.1, b.1) {
            (Some(x), Some(y)) => {
                ok &= stable(x, y, 0.0);
                slope_change = slope_change.max(((x - y) / x).abs());
            }
            _ => ok = false,
        }
    }
    parts.push(format!("slopes max relative change {slope_change:.1e}"));
    (ok, format!("stability under T 1024 -> 2047, resolution 512 -> 1024: {}", parts.join("; ")))
}

fn main() {
    let mut results = Vec::new();
    let base = sweep(1024, 512, true);
    for (id, f) in [criterion_1, criterion_2, criterion_3, criterion_4].into_iter().enumerate() {
        let (passed, detail) = f(&base);
        report(&mut results, id + 1, passed, detail);
    }
    for (id, f) in [(5, criterion_5 as fn() -> (bool, String)), (6, criterion_6), (7, criterion_7), (8, criterion_8)] {
        let (passed, detail) = f();
        report(&mut results, id, passed, detail);
    }
    // the radial grid is refined by halving its step, which keeps every old node
    let fine = sweep(2 * 1024 - 1, 1024, false);
    let (passed, detail) = criterion_9(&base, &fine);
    report(&mut results, 9, passed, detail);

    let failed = results.iter().filter(|r| !r.passed).count();
    println!("acceptance: {} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
