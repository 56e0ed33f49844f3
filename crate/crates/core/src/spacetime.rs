//! Events, frames, versors and the transformations between inertial systems.
//!
//! An event is the paravector `X = ct + x`. A second inertial system moving
//! with velocity `v·d` (`v/c = tanh φ`) sees the same event as
//! `X' = X e^{φd}`; reading coordinates off in its boosted rest frame
//! amounts to the two-sided product `e^{φd/2} X e^{φd/2}`, whose components
//! are the familiar Lorentz coordinates `(t', x', y', z')`.
//!
//! Active transformations move the object itself:
//!
//! ```text
//! rotation:  x ↦ e^{−θ i a/2} x e^{θ i a/2}
//! boost:     x ↦ e^{−φ d/2} x e^{φ d/2}
//! ```
//!
//! Both preserve the square `x²`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Multivector, RealVector3};
use crate::error::{Error, Result};

/// Allowed deviation of a direction's norm from 1.
pub const UNIT_TOL: f64 = 1e-12;

fn default_c() -> f64 {
    1.0
}

pub(crate) fn check_unit(dir: RealVector3) -> Result<()> {
    let norm = dir.norm();
    if !((norm - 1.0).abs() <= UNIT_TOL) {
        return Err(Error::NonUnitDirection { norm });
    }
    Ok(())
}

pub(crate) fn check_c(c: f64) -> Result<()> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::InvalidLightSpeed(c));
    }
    Ok(())
}

/// A space-time point `X = ct + x` in some inertial system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Event {
    /// Time, seconds.
    pub t: f64,
    /// Position, metres.
    pub x: RealVector3,
    /// Speed of light in the units of `t` and `x`.
    #[serde(default = "default_c")]
    pub c: f64,
}

impl Event {
    /// Event in natural units (`c = 1`).
    pub fn new(t: f64, x: RealVector3) -> Self {
        Self { t, x, c: 1.0 }
    }

    pub fn with_c(t: f64, x: RealVector3, c: f64) -> Self {
        Self { t, x, c }
    }

    pub fn validate(&self) -> Result<()> {
        check_c(self.c)?;
        if !(self.t.is_finite() && self.x.is_finite()) {
            return Err(Error::InvalidParameter("event coordinates must be finite".into()));
        }
        Ok(())
    }

    /// `ct + x`.
    pub fn as_multivector(&self) -> Multivector {
        Multivector::paravector(self.c * self.t, self.x)
    }

    /// Reads `t` and `x` off the real scalar and vector parts of `m`.
    pub fn from_multivector(m: &Multivector, c: f64) -> Self {
        let g = m.grades();
        Self { t: g.scalar / c, x: g.vector, c }
    }

    /// Same event, shifted by `dt` in time and `dx` in space.
    pub fn offset(&self, dt: f64, dx: RealVector3) -> Self {
        Self { t: self.t + dt, x: self.x + dx, c: self.c }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("event serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// `φ = atanh(v/c)`.
pub fn rapidity_from_speed(v: f64, c: f64) -> Result<f64> {
    check_c(c)?;
    if !(v.abs() < c) {
        return Err(Error::SpeedNotSubluminal { v, c });
    }
    Ok((v / c).atanh())
}

/// `v = c tanh φ`.
pub fn speed_from_rapidity(phi: f64, c: f64) -> f64 {
    c * phi.tanh()
}

/// A hyperbolic angle together with the unit direction of motion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rapidity {
    pub phi: f64,
    pub direction: RealVector3,
}

impl Rapidity {
    pub fn new(phi: f64, direction: RealVector3) -> Result<Self> {
        check_unit(direction)?;
        Ok(Self { phi, direction })
    }

    pub fn from_speed(v: f64, c: f64, direction: RealVector3) -> Result<Self> {
        Self::new(rapidity_from_speed(v, c)?, direction)
    }

    pub fn speed(&self, c: f64) -> f64 {
        speed_from_rapidity(self.phi, c)
    }

    /// `e^{φd}`.
    pub fn exp(&self) -> Multivector {
        (Multivector::vector(self.direction) * self.phi).exp()
    }
}

/// Composes two boosts along the same direction: rapidities add.
pub fn compose_collinear_boosts(phi1: f64, phi2: f64, direction: RealVector3) -> Result<Rapidity> {
    Rapidity::new(phi1 + phi2, direction)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VersorKind {
    Rotation,
    Boost,
}

/// Half-angle exponential `R` applied as `x ↦ R x R⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Versor {
    pub r: Multivector,
    r_inv: Multivector,
    pub kind: VersorKind,
}

impl Versor {
    /// `R = e^{−θ i a/2}`: active rotation by `θ` in the plane with normal `a`.
    pub fn rotation(axis: RealVector3, theta: f64) -> Result<Self> {
        check_unit(axis)?;
        let gen = Multivector::bivector(axis) * (-0.5 * theta);
        Ok(Self { r: gen.exp(), r_inv: (-gen).exp(), kind: VersorKind::Rotation })
    }

    /// `R = e^{−φ d/2}`: active boost to rapidity `φ` along `d`.
    pub fn boost(direction: RealVector3, phi: f64) -> Result<Self> {
        check_unit(direction)?;
        let gen = Multivector::vector(direction) * (-0.5 * phi);
        Ok(Self { r: gen.exp(), r_inv: (-gen).exp(), kind: VersorKind::Boost })
    }

    pub fn inverse(&self) -> Multivector {
        self.r_inv
    }

    pub fn apply(&self, m: &Multivector) -> Multivector {
        m.sandwich(&self.r, &self.r_inv)
    }

    /// Rotations satisfy `bar(R) = R⁻¹`, boosts `bar(R) = R`.
    pub fn check(&self, tol: f64) -> bool {
        match self.kind {
            VersorKind::Rotation => self.r.bar().approx_eq(&self.r_inv, tol),
            VersorKind::Boost => self.r.bar().approx_eq(&self.r, tol),
        }
    }
}

/// `e^{−θ i a/2} M e^{θ i a/2}`.
pub fn active_rotate(m: &Multivector, axis: RealVector3, theta: f64) -> Result<Multivector> {
    Ok(Versor::rotation(axis, theta)?.apply(m))
}

/// `e^{−φ d/2} M e^{φ d/2}`.
pub fn active_boost(m: &Multivector, direction: RealVector3, phi: f64) -> Result<Multivector> {
    Ok(Versor::boost(direction, phi)?.apply(m))
}

/// `e^{φ d/2} M e^{φ d/2}`: the same element described from the system moving along `d`.
pub fn passive_boost(m: &Multivector, direction: RealVector3, phi: f64) -> Result<Multivector> {
    check_unit(direction)?;
    let half = (Multivector::vector(direction) * (0.5 * phi)).exp();
    Ok(m.sandwich(&half, &half))
}

/// The one-sided map `X' = X e^{φd}` between event horizons.
///
/// For positions with a component transverse to `d` the result carries a
/// bivector part; coordinates in the moving system come from
/// [`lorentz_coords`] instead.
pub fn universal_map(x: &Event, phi: f64, direction: RealVector3) -> Result<Multivector> {
    let r = Rapidity::new(phi, direction)?;
    Ok(x.as_multivector() * r.exp())
}

/// Lorentz coordinates of `x` seen from a system moving at signed speed `v`
/// along `e₁`:
///
/// ```text
/// t' = (t + v x/c²)/√(1 − v²/c²),  x' = (x + v t)/√(1 − v²/c²),  y' = y,  z' = z
/// ```
///
/// Computed as `e^{φe₁/2} X e^{φe₁/2}` with `φ = atanh(v/c)`. With this sign
/// the primed observer sees a particle at rest in the unprimed system move
/// with `+v`; pass `−v` for the opposite reading.
pub fn lorentz_coords(x: &Event, v: f64) -> Result<Event> {
    lorentz_coords_along(x, v, RealVector3::E1)
}

/// [`lorentz_coords`] for an arbitrary unit direction `d`.
///
/// The transverse part of `x` anticommutes with `d`, so it passes through
/// the two half-boosts unchanged; this is the axis-aligned formula in a
/// rotated frame without constructing the rotation.
pub fn lorentz_coords_along(x: &Event, v: f64, direction: RealVector3) -> Result<Event> {
    x.validate()?;
    let phi = rapidity_from_speed(v, x.c)?;
    let out = passive_boost(&x.as_multivector(), direction, phi)?;
    Ok(Event::from_multivector(&out, x.c))
}

/// Galilean limit: `t' = t`, `x' = x + v t`, transverse unchanged.
pub fn galilean_coords(x: &Event, v: f64) -> Event {
    Event { t: x.t, x: x.x + RealVector3::E1 * (v * x.t), c: x.c }
}

/// `|X|²ₛₜ = X X⁻ = c²t² − x²`; sign-indefinite.
pub fn interval(x: &Event) -> f64 {
    let m = x.as_multivector();
    (m * m.cinv()).s.re
}

/// An orthonormal rest frame: `fₖ² = 1`, `fⱼfₖ = −fₖfⱼ`, `f₁f₂f₃ = i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    pub f: [Multivector; 3],
}

impl Frame {
    pub const FRAME_TOL: f64 = 1e-12;

    pub fn canonical() -> Self {
        Self { f: [Multivector::E1, Multivector::E2, Multivector::E3] }
    }

    pub fn new(f1: Multivector, f2: Multivector, f3: Multivector) -> Result<Self> {
        let frame = Self { f: [f1, f2, f3] };
        frame.validate(Self::FRAME_TOL)?;
        Ok(frame)
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        for (k, fk) in self.f.iter().enumerate() {
            if !(*fk * *fk).approx_eq(&Multivector::ONE, tol) {
                return Err(Error::InvalidFrame(format!("f{}² ≠ 1", k + 1)));
            }
            for (j, fj) in self.f.iter().enumerate().skip(k + 1) {
                if !(*fk * *fj).approx_eq(&-(*fj * *fk), tol) {
                    return Err(Error::InvalidFrame(format!("f{} and f{} do not anticommute", k + 1, j + 1)));
                }
            }
        }
        let [a, b, c] = self.f;
        if !(a * b * c).approx_eq(&Multivector::I, tol) {
            return Err(Error::InvalidFrame("f1 f2 f3 ≠ i".into()));
        }
        Ok(())
    }

    pub fn apply(&self, versor: &Versor) -> Self {
        Self { f: self.f.map(|fk| versor.apply(&fk)) }
    }

    /// Coordinates of a complex vector on this frame, `aₖ = A∘fₖ`.
    pub fn coordinates(&self, m: &Multivector) -> [num_complex::Complex64; 3] {
        self.f.map(|fk| m.v.circ(fk.v))
    }
}

/// `fₖ' = e^{−φd/2} fₖ e^{φd/2}`.
pub fn boost_frame(frame: &Frame, direction: RealVector3, phi: f64) -> Result<Frame> {
    Ok(frame.apply(&Versor::boost(direction, phi)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    // atanh(0.6) = ln 2
    const PHI06: f64 = std::f64::consts::LN_2;

    #[test]
    fn rapidity_examples() {
        assert_eq!(rapidity_from_speed(0.0, 1.0).unwrap(), 0.0);
        assert!((rapidity_from_speed(0.6, 1.0).unwrap() - 2f64.ln()).abs() < 1e-15);
        assert!(matches!(rapidity_from_speed(1.0, 1.0), Err(Error::SpeedNotSubluminal { .. })));
        assert!(matches!(rapidity_from_speed(-1.5, 1.0), Err(Error::SpeedNotSubluminal { .. })));
        assert!((speed_from_rapidity(PHI06, 3.0) - 1.8).abs() < 1e-15);
    }

    #[test]
    fn rotate_examples() {
        let got = active_rotate(&Multivector::E1, RealVector3::E3, PI / 2.0).unwrap();
        assert!(got.approx_eq(&Multivector::E2, 1e-15));
        let got = active_rotate(&Multivector::E3, RealVector3::E3, 1.234).unwrap();
        assert!(got.approx_eq(&Multivector::E3, 1e-15));
        let got = active_rotate(&Multivector::E1, RealVector3::E3, 2.0 * PI).unwrap();
        assert!(got.approx_eq(&Multivector::E1, 1e-15));
        assert!(matches!(
            active_rotate(&Multivector::E1, RealVector3::new(0.0, 0.0, 2.0), 1.0),
            Err(Error::NonUnitDirection { .. })
        ));
    }

    #[test]
    fn boost_examples() {
        let got = active_boost(&Multivector::E1, RealVector3::E2, PHI06).unwrap();
        let want = Multivector::E1 * 1.25 + Multivector::bivector(RealVector3::E3 * 0.75);
        assert!(got.max_diff(&want) <= 1e-15, "{got}");
        let got = active_boost(&Multivector::E2, RealVector3::E2, 0.9).unwrap();
        assert!(got.approx_eq(&Multivector::E2, 1e-15));
        let m = Multivector::from_coords([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]);
        assert_eq!(active_boost(&m, RealVector3::E3, 0.0).unwrap(), m);
        assert!(active_boost(&m, RealVector3::ZERO, 0.3).is_err());
    }

    #[test]
    fn versor_kinds() {
        let r = Versor::rotation(RealVector3::new(0.6, 0.0, 0.8), 0.7).unwrap();
        assert!(r.check(1e-14));
        let b = Versor::boost(RealVector3::new(0.0, 0.8, -0.6), 1.3).unwrap();
        assert!(b.check(1e-14));
        assert!((b.r * b.inverse()).approx_eq(&Multivector::ONE, 1e-14));
        assert!(b.r.inverse().unwrap().approx_eq(&b.inverse(), 1e-14));
    }

    #[test]
    fn universal_map_examples() {
        let x = Event::new(1.0, RealVector3::ZERO);
        let got = universal_map(&x, PHI06, RealVector3::E1).unwrap();
        assert!(got.approx_eq(&Multivector::paravector(1.25, RealVector3::E1 * 0.75), 1e-15));

        let x = Event::new(0.4, RealVector3::new(1.0, 2.0, 3.0));
        assert_eq!(universal_map(&x, 0.0, RealVector3::E1).unwrap(), x.as_multivector());

        let x = Event::new(0.0, RealVector3::E2);
        let phi: f64 = 0.5;
        let got = universal_map(&x, phi, RealVector3::E1).unwrap();
        let want = Multivector::E2 * phi.cosh() - Multivector::bivector(RealVector3::E3 * phi.sinh());
        assert!(got.approx_eq(&want, 1e-15));
    }

    #[test]
    fn lorentz_examples() {
        let x = Event::new(1.0, RealVector3::ZERO);
        let p = lorentz_coords(&x, 0.6).unwrap();
        assert!((p.t - 1.25).abs() < 1e-15 && (p.x.x - 0.75).abs() < 1e-15);
        assert_eq!((p.x.y, p.x.z), (0.0, 0.0));

        let x = Event::new(0.0, RealVector3::E2);
        let p = lorentz_coords(&x, 0.6).unwrap();
        assert!(p.t.abs() < 1e-15 && p.x.x.abs() < 1e-15 && (p.x.y - 1.0).abs() < 1e-15);

        let x = Event::with_c(2.0, RealVector3::new(1.0, -2.0, 0.5), 3.0);
        let p = lorentz_coords(&x, 0.0).unwrap();
        assert_eq!(p, x);
        assert!(matches!(lorentz_coords(&x, 3.0), Err(Error::SpeedNotSubluminal { .. })));
    }

    #[test]
    fn galilean_examples() {
        let x = Event::new(1.0, RealVector3::ZERO);
        assert_eq!(galilean_coords(&x, 0.6).x, RealVector3::new(0.6, 0.0, 0.0));
        assert_eq!(galilean_coords(&x, 0.6).t, 1.0);
        let x = Event::new(2.0, RealVector3::new(1.0, 2.0, 3.0));
        assert_eq!(galilean_coords(&x, 0.0), x);
    }

    #[test]
    fn interval_examples() {
        assert_eq!(interval(&Event::new(5.0, RealVector3::E1 * 3.0)), 16.0);
        assert_eq!(interval(&Event::new(1.0, RealVector3::E1)), 0.0);
        let x = Event::new(1.0, RealVector3::ZERO);
        let p = lorentz_coords(&x, 0.6).unwrap();
        assert!((interval(&p) - 1.0).abs() < 1e-14);
        let x = Event::with_c(2.0, RealVector3::E2, 3.0);
        assert_eq!(interval(&x), 35.0);
    }

    #[test]
    fn compose_examples() {
        let r = compose_collinear_boosts(PHI06, PHI06, RealVector3::E1).unwrap();
        assert!((r.speed(1.0) - 15.0 / 17.0).abs() < 1e-15);
        assert_eq!(compose_collinear_boosts(0.4, -0.4, RealVector3::E1).unwrap().phi, 0.0);
        assert_eq!(compose_collinear_boosts(0.4, 0.0, RealVector3::E1).unwrap().phi, 0.4);
    }

    #[test]
    fn boost_frame_examples() {
        let phi: f64 = 0.8;
        let f = boost_frame(&Frame::canonical(), RealVector3::E1, phi).unwrap();
        assert!(f.f[0].approx_eq(&Multivector::E1, 1e-15));
        let e2p = Multivector::E2 * phi.cosh() - Multivector::bivector(RealVector3::E3 * phi.sinh());
        let e3p = Multivector::E3 * phi.cosh() + Multivector::bivector(RealVector3::E2 * phi.sinh());
        assert!(f.f[1].approx_eq(&e2p, 1e-14));
        assert!(f.f[2].approx_eq(&e3p, 1e-14));
        f.validate(1e-12).unwrap();
        let g = boost_frame(&f, RealVector3::new(0.0, 0.6, 0.8), 0.0).unwrap();
        assert_eq!(g, f);
        let bad = Frame::new(Multivector::E1, Multivector::E1, Multivector::E3);
        assert!(matches!(bad, Err(Error::InvalidFrame(_))));
    }

    #[test]
    fn event_json() {
        let e = Event::with_c(1.5, RealVector3::new(0.0, 1.0, -2.0), 3.0);
        assert_eq!(e.to_json(), r#"{"t":1.5,"x":[0.0,1.0,-2.0],"c":3.0}"#);
        assert_eq!(Event::from_json(&e.to_json()).unwrap(), e);
        assert_eq!(Event::from_json(r#"{"t":1,"x":[0,0,0]}"#).unwrap().c, 1.0);
    }

    fn unit() -> impl Strategy<Value = RealVector3> {
        (0.0f64..PI, 0.0f64..2.0 * PI).prop_map(|(th, ph)| {
            RealVector3::new(th.sin() * ph.cos(), th.sin() * ph.sin(), th.cos())
        })
    }

    fn rv() -> impl Strategy<Value = RealVector3> {
        prop::array::uniform3(-5.0f64..5.0).prop_map(RealVector3::from)
    }

    proptest! {
        #[test]
        fn squares_preserved(x in rv(), d in unit(), a in -3.0f64..3.0) {
            let m = Multivector::vector(x);
            let sq = m * m;
            let b = active_boost(&m, d, a).unwrap();
            let r = active_rotate(&m, d, a).unwrap();
            prop_assert!((b * b).approx_eq(&sq, 1e-12));
            prop_assert!((r * r).approx_eq(&sq, 1e-12));
            // rotations keep real vectors real
            prop_assert!(r.grades().bivector.max_abs() <= 1e-12 * x.norm().max(1.0));
        }

        #[test]
        fn lorentz_inverse(t in -5.0f64..5.0, x in rv(), v in -0.95f64..0.95) {
            let e = Event::new(t, x);
            let back = lorentz_coords(&lorentz_coords(&e, v).unwrap(), -v).unwrap();
            prop_assert!(back.as_multivector().approx_eq(&e.as_multivector(), 1e-12));
        }

        #[test]
        fn general_direction_preserves_interval(t in -5.0f64..5.0, x in rv(), v in -0.9f64..0.9, d in unit()) {
            let e = Event::new(t, x);
            let p = lorentz_coords_along(&e, v, d).unwrap();
            prop_assert!((interval(&p) - interval(&e)).abs() <= 1e-12 * (t * t + x.norm_squared()).max(1.0));
        }

        #[test]
        fn boosted_frames_stay_orthonormal(d in unit(), phi in -2.0f64..2.0) {
            let f = boost_frame(&Frame::canonical(), d, phi).unwrap();
            prop_assert!(f.validate(1e-12).is_ok());
        }
    }
}
