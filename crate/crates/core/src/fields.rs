//! Electromagnetic fields as complex vectors and their Maxwell residuals.
//!
//! A field is `F = E + iB` (Gaussian units). Maxwell's four equations are the
//! scalar, vector, bivector and pseudoscalar parts of the single equation
//!
//! ```text
//! ∆F = (1/c ∂ₜ + ∇)(E + iB) = 4π(ρ − J/c)
//! ```
//!
//! Derivatives are taken with second-order central differences on a shared
//! step `h`: `ct` is stepped by `h` (so `t` by `h/c`), each spatial axis by `h`.
//! Fields and sources are samplers, pure functions of an [`Event`].

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Multivector, RealVector3, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::spacetime::{check_unit, Event, Frame, Versor};

type Sampler<T> = Arc<dyn Fn(&Event) -> T + Send + Sync>;

/// An electromagnetic field `F(X) = E(X) + iB(X)`.
#[derive(Clone)]
pub struct EMField {
    sampler: Sampler<Multivector>,
}

impl EMField {
    pub fn new(f: impl Fn(&Event) -> Multivector + Send + Sync + 'static) -> Self {
        Self { sampler: Arc::new(f) }
    }

    /// Field built from separate `E` and `B` samplers.
    pub fn from_parts(
        e: impl Fn(&Event) -> RealVector3 + Send + Sync + 'static,
        b: impl Fn(&Event) -> RealVector3 + Send + Sync + 'static,
    ) -> Self {
        Self::new(move |x| Multivector::vector(e(x)) + Multivector::bivector(b(x)))
    }

    pub fn sample(&self, at: &Event) -> Multivector {
        (self.sampler)(at)
    }
}

impl fmt::Debug for EMField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("EMField")
    }
}

/// Charge density `ρ` and current density `J`.
#[derive(Clone)]
pub struct FourCurrent {
    rho: Sampler<f64>,
    j: Sampler<RealVector3>,
}

impl FourCurrent {
    pub fn new(
        rho: impl Fn(&Event) -> f64 + Send + Sync + 'static,
        j: impl Fn(&Event) -> RealVector3 + Send + Sync + 'static,
    ) -> Self {
        Self { rho: Arc::new(rho), j: Arc::new(j) }
    }

    pub fn vacuum() -> Self {
        Self::new(|_| 0.0, |_| RealVector3::ZERO)
    }

    pub fn rho(&self, at: &Event) -> f64 {
        (self.rho)(at)
    }

    pub fn j(&self, at: &Event) -> RealVector3 {
        (self.j)(at)
    }

    /// `ρ − J/c`.
    pub fn as_multivector(&self, at: &Event) -> Multivector {
        Multivector::paravector(self.rho(at), -(self.j(at) / at.c))
    }
}

impl fmt::Debug for FourCurrent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("FourCurrent")
    }
}

/// Scalar potential `Φ` and vector potential `A`.
#[derive(Clone)]
pub struct Potential {
    phi: Sampler<f64>,
    a: Sampler<RealVector3>,
}

impl Potential {
    pub fn new(
        phi: impl Fn(&Event) -> f64 + Send + Sync + 'static,
        a: impl Fn(&Event) -> RealVector3 + Send + Sync + 'static,
    ) -> Self {
        Self { phi: Arc::new(phi), a: Arc::new(a) }
    }

    pub fn phi(&self, at: &Event) -> f64 {
        (self.phi)(at)
    }

    pub fn a(&self, at: &Event) -> RealVector3 {
        (self.a)(at)
    }

    /// `Φ − A`.
    pub fn as_multivector(&self, at: &Event) -> Multivector {
        Multivector::paravector(self.phi(at), -self.a(at))
    }
}

impl fmt::Debug for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Potential")
    }
}

/// Sampling geometry for finite differences: one shared step and a list of
/// evaluation points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpacetimeGrid {
    pub h: f64,
    pub points: Vec<Event>,
}

impl SpacetimeGrid {
    pub fn new(h: f64, points: Vec<Event>) -> Result<Self> {
        check_step(h)?;
        for (k, p) in points.iter().enumerate() {
            if points[..k].contains(p) {
                return Err(Error::InvalidParameter(format!("duplicate grid point {k}")));
            }
        }
        Ok(Self { h, points })
    }
}

fn check_step(h: f64) -> Result<()> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidStep(h));
    }
    Ok(())
}

fn sample_checked<T, F>(f: &F, at: &Event, finite: impl Fn(&T) -> bool) -> Result<T>
where
    F: Fn(&Event) -> T + ?Sized,
{
    let value = f(at);
    if finite(&value) {
        Ok(value)
    } else {
        Err(Error::EvaluationFailure { t: at.t, x: at.x.x, y: at.x.y, z: at.x.z })
    }
}

/// Stencil neighbours along axis `k` (0 = `ct`, 1..=3 = space) at distance `h`.
fn neighbours(at: &Event, k: usize, h: f64) -> (Event, Event) {
    if k == 0 {
        let dt = h / at.c;
        (at.offset(dt, RealVector3::ZERO), at.offset(-dt, RealVector3::ZERO))
    } else {
        let dx = RealVector3::basis(k - 1) * h;
        (at.offset(0.0, dx), at.offset(0.0, -dx))
    }
}

/// First derivatives `[∂_{ct} f, ∂ₓ f, ∂_y f, ∂_z f]` by central differences.
pub fn partials<F>(field: &F, at: &Event, h: f64) -> Result<[Multivector; 4]>
where
    F: Fn(&Event) -> Multivector + ?Sized,
{
    check_step(h)?;
    at.validate()?;
    let mut out = [Multivector::ZERO; 4];
    for (k, d) in out.iter_mut().enumerate() {
        let (p, m) = neighbours(at, k, h);
        let fp = sample_checked(field, &p, Multivector::is_finite)?;
        let fm = sample_checked(field, &m, Multivector::is_finite)?;
        *d = (fp - fm) / (2.0 * h);
    }
    Ok(out)
}

/// Second derivatives `[∂²_{ct} f, ∂²ₓ f, ∂²_y f, ∂²_z f]` by central differences.
pub fn second_partials<F>(field: &F, at: &Event, h: f64) -> Result<[Multivector; 4]>
where
    F: Fn(&Event) -> Multivector + ?Sized,
{
    check_step(h)?;
    at.validate()?;
    let f0 = sample_checked(field, at, Multivector::is_finite)?;
    let mut out = [Multivector::ZERO; 4];
    for (k, d) in out.iter_mut().enumerate() {
        let (p, m) = neighbours(at, k, h);
        let fp = sample_checked(field, &p, Multivector::is_finite)?;
        let fm = sample_checked(field, &m, Multivector::is_finite)?;
        *d = (fp - f0 * 2.0 + fm) / (h * h);
    }
    Ok(out)
}

/// Space-time nabla `∆ f = (1/c)∂ₜ f + Σ eₖ ∂ₖ f`, basis vectors multiplied from the left.
pub fn st_nabla_fd<F>(field: &F, at: &Event, h: f64) -> Result<Multivector>
where
    F: Fn(&Event) -> Multivector + ?Sized,
{
    st_nabla_fd_in_frame(field, at, h, &Frame::canonical())
}

/// Space-time nabla whose spatial part uses the vectors of `frame` in place
/// of `e₁, e₂, e₃`; the coordinates of `at` are read in that frame.
pub fn st_nabla_fd_in_frame<F>(field: &F, at: &Event, h: f64, frame: &Frame) -> Result<Multivector>
where
    F: Fn(&Event) -> Multivector + ?Sized,
{
    let d = partials(field, at, h)?;
    Ok(d[0] + frame.f[0] * d[1] + frame.f[1] * d[2] + frame.f[2] * d[3])
}

fn check_field(f: &Multivector) -> Result<()> {
    let scalar = f.s.norm();
    if scalar > DEFAULT_TOL * f.max_abs().max(1.0) {
        return Err(Error::NotAField { scalar });
    }
    Ok(())
}

/// `E = ½(F + F̄)`, `B = (F − F̄)/2i` for the canonical frame.
pub fn split_field(f: &Multivector) -> Result<(RealVector3, RealVector3)> {
    check_field(f)?;
    let bar = f.bar();
    let e = (*f + bar) * 0.5;
    let b = (*f - bar) * 0.5;
    Ok((e.grades().vector, b.grades().bivector))
}

/// Electric and magnetic parts seen by an observer boosted by `φ` along `d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrameSplit {
    /// Coefficients of `E'` on the boosted frame vectors `eₖ'`.
    pub e: [f64; 3],
    /// Coefficients of `B'` on the boosted frame vectors `eₖ'`.
    pub b: [f64; 3],
    pub frame: Frame,
}

/// Proper conjugation of the frame boosted by `φ` along `d`:
/// `bar'(M) = e^{−φd} bar(M) e^{φd}`, which fixes every `eₖ' = e^{−φd/2} eₖ e^{φd/2}`.
pub fn boosted_bar(m: &Multivector, direction: RealVector3, phi: f64) -> Result<Multivector> {
    let v = Versor::boost(direction, 2.0 * phi)?;
    Ok(v.apply(&m.bar()))
}

/// `E' = ½(F + bar'F)`, `B' = (F − bar'F)/2i`, expressed on the boosted frame.
pub fn frame_split(f: &Multivector, phi: f64, direction: RealVector3) -> Result<FrameSplit> {
    check_unit(direction)?;
    check_field(f)?;
    let frame = Frame::canonical().apply(&Versor::boost(direction, phi)?);
    let barp = boosted_bar(f, direction, phi)?;
    let e = (*f + barp) * 0.5;
    let ib = (*f - barp) * 0.5;
    let ec = frame.coordinates(&e);
    let bc = frame.coordinates(&ib);
    Ok(FrameSplit { e: ec.map(|c| c.re), b: bc.map(|c| c.im), frame })
}

/// `∆F − 4π(ρ − J/c)`; vanishes up to truncation error iff Maxwell's equations hold.
pub fn maxwell_residual(f: &EMField, src: &FourCurrent, at: &Event, h: f64) -> Result<Multivector> {
    let nabla = st_nabla_fd(&*f.sampler, at, h)?;
    Ok(nabla - src.as_multivector(at) * (4.0 * PI))
}

/// Residuals of the four classical equations at one event.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ClassicalResiduals {
    /// `∇·E − 4πρ`
    pub gauss: f64,
    /// `(1/c)∂ₜE − ∇×B + 4πJ/c`
    pub ampere: RealVector3,
    /// `(1/c)∂ₜB + ∇×E`
    pub faraday: RealVector3,
    /// `∇·B`
    pub nomonopole: f64,
}

impl ClassicalResiduals {
    /// Scalar, vector, bivector and pseudoscalar parts put back together.
    pub fn reassemble(&self) -> Multivector {
        Multivector::scalar(self.gauss)
            + Multivector::vector(self.ampere)
            + Multivector::bivector(self.faraday)
            + Multivector::pseudoscalar(self.nomonopole)
    }

    pub fn max_abs(&self) -> f64 {
        self.gauss
            .abs()
            .max(self.nomonopole.abs())
            .max(self.ampere.max_abs())
            .max(self.faraday.max_abs())
    }
}

/// Divergence and curl route to the four classical residuals, independent
/// of the multivector product used by [`maxwell_residual`].
pub fn classical_split(f: &EMField, src: &FourCurrent, at: &Event, h: f64) -> Result<ClassicalResiduals> {
    let d = partials(&*f.sampler, at, h)?;
    let mut de = [RealVector3::ZERO; 4];
    let mut db = [RealVector3::ZERO; 4];
    for k in 0..4 {
        let (e, b) = split_field(&d[k])?;
        de[k] = e;
        db[k] = b;
    }
    let div = |d: &[RealVector3; 4]| d[1].x + d[2].y + d[3].z;
    let curl = |d: &[RealVector3; 4]| {
        RealVector3::new(d[2].z - d[3].y, d[3].x - d[1].z, d[1].y - d[2].x)
    };
    let rho = src.rho(at);
    let j = src.j(at);
    Ok(ClassicalResiduals {
        gauss: div(&de) - 4.0 * PI * rho,
        ampere: de[0] - curl(&db) + j * (4.0 * PI / at.c),
        faraday: db[0] + curl(&de),
        nomonopole: div(&db),
    })
}

/// Sources seen from a boosted system, `e^{−φd}(ρ − J/c)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformedSources {
    pub multivector: Multivector,
    /// `Some((ρ', J'))` when the result is a paravector `ρ' − J'/c`.
    pub unpacked: Option<(f64, RealVector3)>,
    /// The result carries a bivector part (current transverse to the boost).
    pub transverse: bool,
}

/// `e^{−φd}(ρ − J/c)` for plain source values.
pub fn transform_source_values(
    rho: f64,
    j: RealVector3,
    c: f64,
    phi: f64,
    direction: RealVector3,
) -> Result<TransformedSources> {
    check_unit(direction)?;
    let s = Multivector::paravector(rho, -(j / c));
    let out = (Multivector::vector(direction) * -phi).exp() * s;
    let g = out.grades();
    let scale = out.max_abs().max(1.0);
    let transverse = g.bivector.max_abs() > DEFAULT_TOL * scale;
    let clean = !transverse && g.pseudoscalar.abs() <= DEFAULT_TOL * scale;
    Ok(TransformedSources {
        multivector: out,
        unpacked: clean.then(|| (g.scalar, -(g.vector * c))),
        transverse,
    })
}

/// [`transform_source_values`] applied to `src` sampled at `at`.
pub fn transform_sources(
    src: &FourCurrent,
    at: &Event,
    phi: f64,
    direction: RealVector3,
) -> Result<TransformedSources> {
    transform_source_values(src.rho(at), src.j(at), at.c, phi, direction)
}

/// Outputs of [`potential_residual`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialResidual {
    /// `[(1/c²)∂ₜ² − ∇²](Φ − A) − 4π(ρ − J/c)`
    pub wave: Multivector,
    /// `(1/c)∂ₜΦ + ∇·A`
    pub lorentz: f64,
}

/// Potential-form residuals: the wave equation and the Lorentz condition.
pub fn potential_residual(p: &Potential, src: &FourCurrent, at: &Event, h: f64) -> Result<PotentialResidual> {
    let pm = |x: &Event| p.as_multivector(x);
    let d2 = second_partials(&pm, at, h)?;
    let wave = d2[0] - d2[1] - d2[2] - d2[3] - src.as_multivector(at) * (4.0 * PI);
    let d = partials(&pm, at, h)?;
    // Φ − A: scalar part carries Φ, vector part −A
    let lorentz = d[0].s.re - (d[1].v.0[0].re + d[2].v.0[1].re + d[3].v.0[2].re);
    Ok(PotentialResidual { wave, lorentz })
}

/// Serializable description of a field from the analytic catalog.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    /// `F = E₀(p + i n×p) cos(k(n·x − ct))` in vacuum.
    PlaneWave {
        k: f64,
        #[serde(rename = "E0")]
        e0: f64,
        prop: RealVector3,
        pol: RealVector3,
    },
    /// Uniform `F = E + iB`.
    Constant {
        #[serde(rename = "E")]
        e: RealVector3,
        #[serde(rename = "B", default)]
        b: RealVector3,
    },
    /// Point charge `q` at the origin: `E = q x/|x|³`, `B = 0`.
    Coulomb { q: f64 },
}

impl FieldSpec {
    pub const KINDS: [&'static str; 3] = ["plane_wave", "constant", "coulomb"];

    /// Parses the JSON form, reporting unknown `kind` values separately from
    /// malformed parameters.
    pub fn from_json(s: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::InvalidParameter(e.to_string()))?;
        Self::from_value(value)
    }

    pub fn from_value(value: serde_json::Value) -> Result<Self> {
        let kind = value
            .get("kind")
            .and_then(|k| k.as_str())
            .ok_or_else(|| Error::InvalidParameter("missing `kind`".into()))?;
        if !Self::KINDS.contains(&kind) {
            return Err(Error::UnknownKind(kind.to_owned()));
        }
        let spec: Self =
            serde_json::from_value(value).map_err(|e| Error::InvalidParameter(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if let Self::PlaneWave { k, e0, prop, pol } = *self {
            if !(k > 0.0 && k.is_finite() && e0.is_finite()) {
                return Err(Error::InvalidParameter("plane wave needs finite k > 0 and E0".into()));
            }
            check_unit(prop)?;
            if prop.dot(pol).abs() > DEFAULT_TOL * pol.norm().max(1.0) {
                return Err(Error::InvalidParameter("polarization must be transverse".into()));
            }
        }
        Ok(())
    }
}

/// A field from the catalog with its sources and, where available, potentials.
#[derive(Debug, Clone)]
pub struct AnalyticField {
    pub field: EMField,
    pub sources: FourCurrent,
    pub potential: Option<Potential>,
}

/// Builds the field, source and potential samplers described by `spec`.
///
/// | kind | field | potential |
/// |------|-------|-----------|
/// | `plane_wave` | `E₀(p + i n×p) cos(k(n·x − ct))` | `Φ = 0`, `A = (E₀/k) p sin(k(n·x − ct))` |
/// | `constant` | `E + iB` | `Φ = −E·x`, `A = ½ B×x` |
/// | `coulomb` | `q x/|x|³` | `Φ = q/|x|`, `A = 0` |
///
/// All sources vanish (for `coulomb`, away from the origin).
pub fn analytic_field(spec: &FieldSpec) -> Result<AnalyticField> {
    spec.validate()?;
    let out = match *spec {
        FieldSpec::PlaneWave { k, e0, prop, pol } => {
            let amp = Multivector::vector(pol) + Multivector::bivector(prop.cross(pol));
            let phase = move |x: &Event| k * (prop.dot(x.x) - x.c * x.t);
            AnalyticField {
                field: EMField::new(move |x| amp * (e0 * phase(x).cos())),
                sources: FourCurrent::vacuum(),
                potential: Some(Potential::new(|_| 0.0, move |x| pol * (e0 / k * phase(x).sin()))),
            }
        }
        FieldSpec::Constant { e, b } => AnalyticField {
            field: EMField::from_parts(move |_| e, move |_| b),
            sources: FourCurrent::vacuum(),
            potential: Some(Potential::new(move |x| -e.dot(x.x), move |x| b.cross(x.x) * 0.5)),
        },
        FieldSpec::Coulomb { q } => AnalyticField {
            field: EMField::new(move |x| {
                let r = x.x.norm();
                Multivector::vector(x.x * (q / (r * r * r)))
            }),
            sources: FourCurrent::vacuum(),
            potential: Some(Potential::new(move |x| q / x.x.norm(), |_| RealVector3::ZERO)),
        },
    };
    Ok(out)
}

/// One line of a residual report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub event: Event,
    pub residual_norm: f64,
    pub four_residuals: ClassicalResiduals,
}

/// Maxwell residual and its classical split at every grid point.
pub fn residual_report(f: &AnalyticField, grid: &SpacetimeGrid) -> Result<Vec<ResidualReport>> {
    grid.points
        .iter()
        .map(|at| {
            let r = maxwell_residual(&f.field, &f.sources, at, grid.h)?;
            let four = classical_split(&f.field, &f.sources, at, grid.h)?;
            Ok(ResidualReport { event: *at, residual_norm: r.norm(), four_residuals: four })
        })
        .collect()
}

/// `log₂(r(h) / r(h/2))`, the observed order of a scheme.
pub fn convergence_order(residual_h: f64, residual_half_h: f64) -> f64 {
    (residual_h / residual_half_h).log2()
}
