//! Space-time velocity, time dilation, relative mass and the work needed to
//! bring a rest mass up to the speed of light.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Multivector, RealVector3};
use crate::error::{Error, Result};
use crate::spacetime::{check_c, check_unit, rapidity_from_speed};

/// Space history `t ↦ x(t)` of a particle; its event is `ct + x(t)`.
#[derive(Clone)]
pub struct Worldline {
    position: Arc<dyn Fn(f64) -> RealVector3 + Send + Sync>,
    pub c: f64,
}

impl Worldline {
    pub fn new(position: impl Fn(f64) -> RealVector3 + Send + Sync + 'static, c: f64) -> Self {
        Self { position: Arc::new(position), c }
    }

    /// An inertial observer at rest at `x0`.
    pub fn at_rest(x0: RealVector3, c: f64) -> Self {
        Self::new(move |_| x0, c)
    }

    /// `x(t) = x0 + v t`.
    pub fn uniform(x0: RealVector3, v: RealVector3, c: f64) -> Self {
        Self::new(move |t| x0 + v * t, c)
    }

    /// `x(t) = ½ a₀ t² e₁`.
    pub fn accelerated(a0: f64, c: f64) -> Self {
        Self::new(move |t| RealVector3::E1 * (0.5 * a0 * t * t), c)
    }

    pub fn position(&self, t: f64) -> RealVector3 {
        (self.position)(t)
    }
}

impl fmt::Debug for Worldline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Worldline").field("c", &self.c).finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Particle {
    /// Rest mass.
    pub m0: f64,
}

impl Particle {
    pub fn new(m0: f64) -> Result<Self> {
        check_mass(m0)?;
        Ok(Self { m0 })
    }
}

fn check_mass(m0: f64) -> Result<()> {
    if !(m0 >= 0.0 && m0.is_finite()) {
        return Err(Error::InvalidParameter(format!("rest mass must be non-negative, got {m0}")));
    }
    Ok(())
}

/// Default numerical-differentiation step at time `t`.
pub fn default_dt(t: f64) -> f64 {
    1e-6 * t.abs().max(1.0)
}

/// `V = dX/dt = c + dx/dt`, the space part by central difference.
pub fn st_velocity(w: &Worldline, t: f64, dt: f64) -> Result<Multivector> {
    check_c(w.c)?;
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidStep(dt));
    }
    let v = (w.position(t + dt) - w.position(t - dt)) / (2.0 * dt);
    let speed = v.norm();
    if !(speed < w.c) {
        return Err(Error::SuperluminalSample { speed, c: w.c });
    }
    Ok(Multivector::paravector(w.c, v))
}

/// `dt/dt' = cosh φ = 1/√(1 − v²/c²)`.
pub fn time_dilation(phi: f64) -> f64 {
    phi.cosh()
}

/// `m = m₀/√(1 − v²/c²)`.
pub fn relative_mass(m0: f64, v: f64, c: f64) -> Result<f64> {
    check_mass(m0)?;
    check_c(c)?;
    if !(v.abs() < c) {
        return Err(Error::SpeedNotSubluminal { v, c });
    }
    let beta = v / c;
    Ok(m0 / ((1.0 - beta) * (1.0 + beta)).sqrt())
}

/// Space-time momentum `P = mc² + c m v d`; its scalar part is the total energy.
pub fn st_momentum(m0: f64, v: f64, direction: RealVector3, c: f64) -> Result<Multivector> {
    check_unit(direction)?;
    let m = relative_mass(m0, v, c)?;
    Ok(Multivector::paravector(m * c * c, direction * (c * m * v)))
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(x) and P_n'(x) by the three-term recurrence
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pn1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pn1) / (x * x - 1.0);
            let step = pn / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Integrates `f` over `[a, b]` with an `n`-node Gauss-Legendre rule.
pub fn integrate_gl(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    gauss_legendre(n).iter().map(|&(x, w)| w * f(mid + half * x)).sum::<f64>() * half
}

/// Work `∫₀ᶜ m v dv = ∫₀ᶜ m₀ v dv/√(1 − v²/c²)` done accelerating `m0` from rest to `c`,
/// with `m` the relative mass.
///
/// The substitution `s = √(1 − v²/c²)` turns `v dv` into `−c² s ds` and the
/// integrand into `(m₀/s)·c²s`, which is regular on `[0, 1]`; a 32-node
/// Gauss-Legendre rule then reproduces `m₀c²` to rounding.
pub fn work_to_light(m0: f64, c: f64) -> Result<f64> {
    check_mass(m0)?;
    check_c(c)?;
    let integrand = |s: f64| {
        let m = m0 / s;
        m * c * c * s
    };
    Ok(integrate_gl(integrand, 0.0, 1.0, 32))
}

/// JSON report for a particle of rest mass `m0` moving at `v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KinematicsReport {
    pub v: f64,
    pub phi: f64,
    pub gamma: f64,
    pub m: f64,
    pub energy: f64,
    pub momentum: f64,
}

pub fn kinematics_report(m0: f64, v: f64, c: f64) -> Result<KinematicsReport> {
    let phi = rapidity_from_speed(v, c)?;
    let m = relative_mass(m0, v, c)?;
    Ok(KinematicsReport { v, phi, gamma: time_dilation(phi), m, energy: m * c * c, momentum: m * v })
}
