use proptest::prelude::*;
use sphrange::harmonics::sphere_quadrature;
use sphrange::transform::*;
use sphrange::{Dimension, HarmonicIndex};

fn bump(n: Dimension, c: [f64; 3], r: f64) -> Phantom {
    Phantom::bump(n, c, r, 1.0).unwrap()
}

#[test]
fn forward_is_linear() {
    let n = Dimension::Two;
    let f1 = bump(n, [0.3, 0.0, 0.0], 0.4);
    let harmonic = HarmonicIndex::new(n, 2, 2).unwrap();
    let profile = ShellProfile { center: 0.55, half_width: 0.25, amplitude: -0.7 };
    let f2 = Phantom::new(n, vec![PhantomTerm::Separable { profile, harmonic }]).unwrap();
    let centers = sphere_quadrature(n, 64).unwrap();
    let dirs = MeanRule::directions(n, 512).unwrap();
    let g1 = forward(&f1, &centers, 129, &dirs).unwrap();
    let g2 = forward(&f2, &centers, 129, &dirs).unwrap();
    let g12 = forward(&f1.plus(&f2).unwrap(), &centers, 129, &dirs).unwrap();
    let sum = g1.add_scaled(&g2, 1.0).unwrap();
    for (a, b) in g12.values().iter().zip(sum.values()) {
        assert!((a - b).abs() < 1e-13);
    }
}

#[test]
fn rotation_by_grid_steps_permutes_rows() {
    let n = Dimension::Two;
    let res = 48;
    let shift = 5;
    let angle = 2.0 * std::f64::consts::PI * shift as f64 / res as f64;
    let c = [0.35, 0.1, 0.0];
    let rotated = [c[0] * angle.cos() - c[1] * angle.sin(), c[0] * angle.sin() + c[1] * angle.cos(), 0.0];
    let centers = sphere_quadrature(n, res).unwrap();
    // 1536 = 32 · 48, so the rotation maps direction nodes onto each other too
    let dirs = MeanRule::directions(n, 1536).unwrap();
    let g = forward(&bump(n, c, 0.4), &centers, 65, &dirs).unwrap();
    let h = forward(&bump(n, rotated, 0.4), &centers, 65, &dirs).unwrap();
    for i in 0..res {
        for (a, b) in g.row(i).iter().zip(h.row((i + shift) % res)) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}

#[test]
fn rotation_about_the_polar_axis_in_3d() {
    let n = Dimension::Three;
    let res = 16;
    let shift = 3;
    let angle = 2.0 * std::f64::consts::PI * shift as f64 / res as f64;
    let c = [0.2, 0.1, 0.3];
    let rotated = [c[0] * angle.cos() - c[1] * angle.sin(), c[0] * angle.sin() + c[1] * angle.cos(), c[2]];
    let centers = sphere_quadrature(n, res).unwrap();
    let dirs = MeanRule::directions(n, 128).unwrap();
    let g = forward(&bump(n, c, 0.5), &centers, 33, &dirs).unwrap();
    let h = forward(&bump(n, rotated, 0.5), &centers, 33, &dirs).unwrap();
    // nodes are ordered polar-major with `res` azimuths per ring
    for i in 0..centers.len() {
        let (ring, az) = (i / res, i % res);
        let j = ring * res + (az + shift) % res;
        for (a, b) in g.row(i).iter().zip(h.row(j)) {
            assert!((a - b).abs() < 1e-8 * g.max_abs(), "{a} {b}");
        }
    }
}

#[test]
fn direction_refinement_converges() {
    let n = Dimension::Two;
    let f = bump(n, [0.3, 0.0, 0.0], 0.4);
    let centers = sphere_quadrature(n, 32).unwrap();
    let a = forward(&f, &centers, 257, &MeanRule::directions(n, 2048).unwrap()).unwrap();
    let b = forward(&f, &centers, 257, &MeanRule::directions(n, 4096).unwrap()).unwrap();
    let diff = a.values().iter().zip(b.values()).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    assert!(diff < 1e-10, "{diff}");
}

#[test]
fn validation_happens_before_computation() {
    let n = Dimension::Two;
    let centers = sphere_quadrature(n, 16).unwrap();
    let dirs3 = MeanRule::directions(Dimension::Three, 16).unwrap();
    assert!(forward(&bump(n, [0.0; 3], 0.5), &centers, 17, &dirs3).is_err());
    assert!(forward(&bump(n, [0.0; 3], 0.5), &centers, 1, &MeanRule::axial(n, 64).unwrap()).is_err());
    assert!(MeanRule::axial(n, 1).is_err());
}

#[test]
fn darboux_converges_at_second_order() {
    let n = Dimension::Two;
    let f = bump(n, [0.2, 0.1, 0.0], 0.5);
    let dirs = MeanRule::directions(n, 2048).unwrap();
    let xs = [[0.1, 0.0, 0.0], [0.0, 0.3, 0.0]];
    let r: Vec<f64> = [0.02, 0.01, 0.005].iter().map(|&h| darboux_residual(&f, &xs, &[0.3, 0.5], h, &dirs).unwrap()).collect();
    let ratio = r[1] / r[2];
    assert!((ratio - 4.0).abs() < 0.5, "{r:?}");
}

#[test]
fn radial_reduction_at_the_origin() {
    // for a centered bump u(0, t) is the profile itself; the residual on the
    // origin-centered line converges at the same rate as anywhere else
    for n in [Dimension::Two, Dimension::Three] {
        let f = bump(n, [0.0; 3], 0.8);
        let dirs = MeanRule::directions(n, if n == Dimension::Two { 1024 } else { 128 }).unwrap();
        for t in [0.2, 0.45] {
            let u = spherical_mean(&f, &[0.0; 3], t, &dirs).unwrap();
            assert!((u - f.eval(&[t, 0.0, 0.0])).abs() < 1e-14);
        }
        let coarse = darboux_residual(&f, &[[0.0; 3]], &[0.4], 0.01, &dirs).unwrap();
        let fine = darboux_residual(&f, &[[0.0; 3]], &[0.4], 0.005, &dirs).unwrap();
        assert!((coarse / fine - 4.0).abs() < 0.5, "{n}: {coarse} {fine}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn eval_vanishes_outside_support(cx in -0.5f64..0.5, r in 0.05f64..0.45, x in -1.0f64..1.0, y in -1.0f64..1.0) {
        let f = bump(Dimension::Two, [cx, 0.0, 0.0], r);
        let d = ((x - cx).powi(2) + y * y).sqrt();
        let v = f.eval(&[x, y, 0.0]);
        if d >= r {
            prop_assert_eq!(v, 0.0);
        } else {
            prop_assert!(v > 0.0 && v <= (-1.0f64).exp());
        }
    }

    #[test]
    fn spherical_mean_is_bounded_by_sup(t in 0.0f64..2.5, a in 0.0f64..6.3) {
        let f = bump(Dimension::Two, [0.3, 0.0, 0.0], 0.4);
        let dirs = MeanRule::directions(Dimension::Two, 256).unwrap();
        let x = [a.cos(), a.sin(), 0.0];
        let u = spherical_mean(&f, &x, t, &dirs).unwrap();
        prop_assert!((0.0..=(-1.0f64).exp() + 1e-15).contains(&u));
    }
}
