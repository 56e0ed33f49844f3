use c3_spacetime::fields::st_nabla_fd_in_frame;
use c3_spacetime::spacetime::passive_boost;
use c3_spacetime::verify::{random_multivector, random_vector};
use c3_spacetime::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn closed_form(x: &Event, v: f64) -> Event {
    let c = x.c;
    let g = 1.0 / (1.0 - (v / c).powi(2)).sqrt();
    Event::with_c(
        g * (x.t + v * x.x.x / (c * c)),
        RealVector3::new(g * (x.x.x + v * x.t), x.x.y, x.x.z),
        c,
    )
}

#[test]
fn versor_route_matches_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let c = rng.random_range(0.5..3.0);
        let x = Event::with_c(rng.random_range(-2.0..2.0), random_vector(&mut rng, 2.0), c);
        let v = rng.random_range(-0.95..0.95) * c;
        let a = lorentz_coords(&x, v).unwrap();
        let b = closed_form(&x, v);
        let scale = (x.t.abs() * c).max(x.x.max_abs()).max(1.0);
        assert!((a.t - b.t).abs() * c <= 1e-12 * scale * 10.0, "{a:?} {b:?}");
        assert!((a.x - b.x).max_abs() <= 1e-12 * scale * 10.0);
    }
}

#[test]
fn active_and_passive_forms_agree() {
    // e^{φe₁/2} X' e^{−φe₁/2} = e^{φe₁/2} X e^{φe₁/2} with X' = X e^{φe₁}
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..500 {
        let x = Event::new(rng.random_range(-2.0..2.0), random_vector(&mut rng, 2.0));
        let phi = rng.random_range(-1.5..1.5);
        let xp = universal_map(&x, phi, RealVector3::E1).unwrap();
        let half = (Multivector::E1 * (0.5 * phi)).exp();
        let half_inv = (Multivector::E1 * (-0.5 * phi)).exp();
        let lhs = xp.sandwich(&half, &half_inv);
        let rhs = passive_boost(&x.as_multivector(), RealVector3::E1, phi).unwrap();
        assert!(lhs.approx_eq(&rhs, 1e-12));
        // and the result has no bivector or pseudoscalar part
        let g = rhs.grades();
        assert!(g.bivector.max_abs() < 1e-12 * rhs.max_abs().max(1.0));
        assert!(g.pseudoscalar.abs() < 1e-12 * rhs.max_abs().max(1.0));
    }
}

#[test]
fn collinear_boosts_add_rapidities() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let x = Event::new(rng.random_range(-2.0..2.0), random_vector(&mut rng, 2.0));
        let (v1, v2) = (rng.random_range(-0.8..0.8), rng.random_range(-0.8..0.8));
        let (p1, p2) = (rapidity_from_speed(v1, 1.0).unwrap(), rapidity_from_speed(v2, 1.0).unwrap());
        let v12 = compose_collinear_boosts(p1, p2, RealVector3::E1).unwrap().speed(1.0);
        assert!((v12 - (v1 + v2) / (1.0 + v1 * v2)).abs() < 1e-12);
        let twice = lorentz_coords(&lorentz_coords(&x, v1).unwrap(), v2).unwrap();
        let once = lorentz_coords(&x, v12).unwrap();
        assert!(twice.as_multivector().approx_eq(&once.as_multivector(), 1e-12));
    }
}

#[test]
fn galilean_error_is_second_order_at_the_origin() {
    let x = Event::new(1.0, RealVector3::new(0.0, 0.3, -0.2));
    let err = |v: f64| {
        let l = lorentz_coords(&x, v).unwrap();
        let g = galilean_coords(&x, v);
        (l.t - g.t).abs().max((l.x - g.x).max_abs())
    };
    let mut v = 1e-2;
    while v > 1e-4 {
        let ratio = err(2.0 * v) / err(v);
        assert!((3.6..=4.4).contains(&ratio), "v={v} ratio={ratio}");
        v /= 2.0;
    }
}

#[test]
fn galilean_time_error_is_first_order_off_the_origin() {
    // t' − t ≈ v x/c²: the Galilean limit also needs x/c → 0
    let x = Event::new(1.0, RealVector3::new(0.5, 0.0, 0.0));
    let err = |v: f64| (lorentz_coords(&x, v).unwrap().t - galilean_coords(&x, v).t).abs();
    let ratio = err(2e-3) / err(1e-3);
    assert!((1.9..2.1).contains(&ratio));
}

#[test]
fn nabla_transforms_by_left_multiplication() {
    // ∆_{X'} = e^{−φe₁} ∆_X, the primed nabla built on the boosted frame
    let v = 0.6;
    let phi = rapidity_from_speed(v, 1.0).unwrap();
    let g = |x: &Event| {
        let s = (0.7 * x.t - 0.4 * x.x.x + 0.9 * x.x.y + 0.3 * x.x.z).sin();
        Multivector::scalar(s) + Multivector::E2 * (x.x.x * x.t).cos()
    };
    let composed = move |x: &Event| g(&lorentz_coords(x, v).unwrap());
    let frame = boost_frame(&Frame::canonical(), RealVector3::E1, phi).unwrap();
    let bexp = (Multivector::E1 * -phi).exp();
    let at = Event::new(0.2, RealVector3::new(0.4, -0.3, 0.8));
    let atp = lorentz_coords(&at, v).unwrap();

    let diff = |h: f64| {
        let lhs = bexp * st_nabla_fd(&composed, &at, h).unwrap();
        let rhs = st_nabla_fd_in_frame(&g, &atp, h, &frame).unwrap();
        lhs.max_diff(&rhs)
    };
    let (d1, d2) = (diff(1e-2), diff(5e-3));
    assert!(d1 <= 1e-2 * 1e-2 + 1e-10, "{d1}");
    assert!((3.0..5.0).contains(&(d1 / d2)), "{d1} {d2}");
}

#[test]
fn nabla_transforms_with_canonical_frame_for_longitudinal_fields() {
    // with no y/z dependence the canonical nabla already transforms covariantly
    let v = -0.4;
    let phi = rapidity_from_speed(v, 1.0).unwrap();
    let g = |x: &Event| Multivector::scalar((x.t + 2.0 * x.x.x).cos()) + Multivector::E1 * x.t.sin();
    let composed = move |x: &Event| g(&lorentz_coords(x, v).unwrap());
    let at = Event::new(0.5, RealVector3::new(-0.3, 1.0, 2.0));
    let atp = lorentz_coords(&at, v).unwrap();
    let h = 1e-3;
    let lhs = (Multivector::E1 * -phi).exp() * st_nabla_fd(&composed, &at, h).unwrap();
    let rhs = st_nabla_fd(&g, &atp, h).unwrap();
    assert!(lhs.max_diff(&rhs) <= 10.0 * h * h + 1e-10);
}

#[test]
fn maxwell_equation_is_covariant() {
    // boosting the sources the same way as the nabla keeps the residual zero
    let f = analytic_field(&FieldSpec::Coulomb { q: 1.0 }).unwrap();
    let at = Event::new(0.0, RealVector3::new(1.0, 0.2, 0.1));
    let r = maxwell_residual(&f.field, &f.sources, &at, 1e-3).unwrap();
    let boosted = (Multivector::E1 * -0.5f64).exp() * r;
    assert!(boosted.norm() < 1e-5);
}

#[test]
fn rest_system_velocity_is_c() {
    let (c, v) = (1.0, 0.6);
    let phi = rapidity_from_speed(v, c).unwrap();
    let back = (Multivector::E1 * -phi).exp();
    let xp = |t: f64| Multivector::paravector(c * t, RealVector3::E1 * (v * t)) * back;
    let (t, dt) = (2.0, 1e-5);
    let dxp = (xp(t + dt) - xp(t - dt)) / (2.0 * dt);
    let dtp_dt = dxp.s.re / c;
    let vp = dxp / dtp_dt;
    assert!(vp.approx_eq(&Multivector::scalar(c), 1e-9), "{vp}");
    assert!((1.0 / dtp_dt - time_dilation(phi)).abs() < 1e-9);
}

/// Adaptive Simpson quadrature, used as an oracle independent of the
/// Gauss-Legendre route.
fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn step(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            return left + right + (left + right - whole) / 15.0;
        }
        step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 60)
}

#[test]
fn work_matches_truncated_quadrature_plus_tail() {
    for (m0, c) in [(1.0, 1.0), (2.0, 1.0), (1.0, 3.0), (0.5, 2.0)] {
        let eps: f64 = 1e-6;
        let raw = move |v: f64| m0 * v / (1.0 - (v / c).powi(2)).sqrt();
        let body = adaptive_simpson(&raw, 0.0, c * (1.0 - eps), 1e-9);
        let tail = m0 * c * c * (2.0 * eps - eps * eps).sqrt();
        let oracle = body + tail;
        let got = work_to_light(m0, c).unwrap();
        assert!((got - oracle).abs() <= 1e-6 * m0 * c * c, "{got} vs {oracle}");
        assert!((got - m0 * c * c).abs() <= 1e-9 * m0 * c * c);
    }
}

#[test]
fn exponentials_of_random_elements_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..2000 {
        let m = random_multivector(&mut rng, 2.0);
        assert!(to_matrix(&m.exp()).rel_diff(to_matrix(&m).exp()) < 1e-10);
    }
}
