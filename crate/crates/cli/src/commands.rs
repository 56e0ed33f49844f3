use std::fmt;

use c3_spacetime::fields::{
    convergence_order, residual_report, st_nabla_fd, st_nabla_fd_in_frame, transform_source_values, ResidualReport,
};
use c3_spacetime::kinematics::{default_dt, kinematics_report};
use c3_spacetime::spacetime::lorentz_coords_along;
use c3_spacetime::{
    active_boost, active_rotate, analytic_field, boost_frame, compose_collinear_boosts, frame_split,
    galilean_coords, interval, potential_residual, rapidity_from_speed, split_field, st_momentum,
    st_velocity, universal_map, verify, work_to_light, Error, Event, FieldSpec, Frame, Multivector,
    RealVector3, SpacetimeGrid, Worldline,
};
use serde_json::{json, Value};

use crate::{Amount, Cli, Command, OptionalAmount};

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownKind(_) | Error::InvalidParameter(_) => CliError::Parse(e.to_string()),
            other => CliError::Domain(other),
        }
    }
}

type Out = Result<(Value, bool), CliError>;

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> Result<T, CliError> {
    serde_json::from_str(s).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

fn multivector(s: &str) -> Result<Multivector, CliError> {
    parse_json("multivector", s)
}

fn direction(s: &str) -> Result<RealVector3, CliError> {
    match s.trim() {
        "e1" => Ok(RealVector3::E1),
        "e2" => Ok(RealVector3::E2),
        "e3" => Ok(RealVector3::E3),
        other => parse_json("direction", other),
    }
}

fn event(s: &str, c: f64) -> Result<Event, CliError> {
    let mut v: Value = parse_json("event", s)?;
    if let Value::Object(map) = &mut v {
        map.entry("c").or_insert(json!(c));
    }
    let ev: Event = serde_json::from_value(v).map_err(|e| CliError::Parse(format!("event: {e}")))?;
    ev.validate()?;
    Ok(ev)
}

fn events(s: &str, c: f64) -> Result<Vec<Event>, CliError> {
    let list: Vec<Value> = parse_json("points", s)?;
    list.iter().map(|v| event(&v.to_string(), c)).collect()
}

fn rapidity(amount: &Amount, c: f64) -> Result<f64, CliError> {
    match (amount.phi, amount.speed) {
        (Some(phi), _) => Ok(phi),
        (None, Some(v)) => Ok(rapidity_from_speed(v, c)?),
        (None, None) => Err(CliError::Parse("one of --phi or --speed is required".into())),
    }
}

fn optional_rapidity(amount: &OptionalAmount, c: f64) -> Result<Option<f64>, CliError> {
    match (amount.phi, amount.speed) {
        (Some(phi), _) => Ok(Some(phi)),
        (None, Some(v)) => Ok(Some(rapidity_from_speed(v, c)?)),
        (None, None) => Ok(None),
    }
}

fn square_report(input: &Multivector, out: &Multivector) -> Value {
    let (before, after) = (*input * *input, *out * *out);
    json!({
        "input": input,
        "result": out,
        "display": out.to_string(),
        "square_before": before,
        "square_after": after,
        "square_preserved": before.approx_eq(&after, 1e-12),
    })
}

pub fn run(cli: &Cli) -> Out {
    let c = cli.c;
    let value = match &cli.command {
        Command::Algebra { op, a, b } => {
            let a = multivector(a)?;
            let second = || -> Result<Multivector, CliError> {
                let b = b.as_deref().ok_or_else(|| CliError::Parse(format!("`{op}` needs --b")))?;
                multivector(b)
            };
            let result = match op.as_str() {
                "circ" => json!(Multivector::complex_scalar(a.v.circ(second()?.v))),
                "otimes" => json!(Multivector::complex_vector(a.v.otimes(second()?.v))),
                "gp" => json!(a.gp(&second()?)),
                "grades" => json!(a.grades()),
                "bar" => json!(a.bar()),
                "cinv" => json!(a.cinv()),
                "exp" => json!(a.exp()),
                "inverse" => json!(a.inverse()?),
                other => return Err(CliError::Parse(format!("unknown algebra op `{other}`"))),
            };
            json!({ "op": op, "result": result })
        }
        Command::Boost { m, dir, amount } => {
            let m = multivector(m)?;
            let out = active_boost(&m, direction(dir)?, rapidity(amount, c)?)?;
            square_report(&m, &out)
        }
        Command::Rotate { m, axis, theta } => {
            let m = multivector(m)?;
            let out = active_rotate(&m, direction(axis)?, *theta)?;
            square_report(&m, &out)
        }
        Command::Coords { event: e, v, dir } => {
            let x = event(e, c)?;
            let d = match dir {
                Some(d) => direction(d)?,
                None => RealVector3::E1,
            };
            let primed = lorentz_coords_along(&x, *v, d)?;
            let mut out = json!({
                "event": x,
                "primed": primed,
                "interval_before": interval(&x),
                "interval_after": interval(&primed),
            });
            if d == RealVector3::E1 {
                out["galilean"] = json!(galilean_coords(&x, *v));
            }
            out
        }
        Command::Map { event: e, dir, amount } => {
            let x = event(e, c)?;
            let out = universal_map(&x, rapidity(amount, x.c)?, direction(dir)?)?;
            json!({ "event": x, "result": out, "display": out.to_string() })
        }
        Command::Interval { event: e } => {
            let x = event(e, c)?;
            json!({ "event": x, "interval": interval(&x) })
        }
        Command::Compose { phi1, phi2, v1, v2, dir } => {
            let pick = |phi: Option<f64>, v: Option<f64>, name: &str| -> Result<f64, CliError> {
                match (phi, v) {
                    (Some(p), None) => Ok(p),
                    (None, Some(v)) => Ok(rapidity_from_speed(v, c)?),
                    _ => Err(CliError::Parse(format!("give exactly one of --phi{name} / --v{name}"))),
                }
            };
            let (p1, p2) = (pick(*phi1, *v1, "1")?, pick(*phi2, *v2, "2")?);
            let r = compose_collinear_boosts(p1, p2, direction(dir)?)?;
            json!({ "phi": r.phi, "direction": r.direction, "speed": r.speed(c), "speed_over_c": r.speed(c) / c })
        }
        Command::Frame { dir, amount } => {
            let f = boost_frame(&Frame::canonical(), direction(dir)?, rapidity(amount, c)?)?;
            json!({ "frame": f.f, "valid": f.validate(Frame::FRAME_TOL).is_ok() })
        }
        Command::FieldSplit { f, dir, amount } => {
            let f = multivector(f)?;
            match optional_rapidity(amount, c)? {
                None => {
                    let (e, b) = split_field(&f)?;
                    json!({ "E": e, "B": b })
                }
                Some(phi) => {
                    let d = direction(dir.as_deref().unwrap_or("e1"))?;
                    let s = frame_split(&f, phi, d)?;
                    json!({ "E_prime": s.e, "B_prime": s.b, "frame": s.frame.f })
                }
            }
        }
        Command::Sources { rho, j, dir, amount } => {
            let j: RealVector3 = parse_json("current", j)?;
            let t = transform_source_values(*rho, j, c, rapidity(amount, c)?, direction(dir)?)?;
            let (rho_p, j_p) = t.unpacked.map_or((None, None), |(r, j)| (Some(r), Some(j)));
            json!({
                "result": t.multivector,
                "display": t.multivector.to_string(),
                "rho_prime": rho_p,
                "J_prime": j_p,
                "transverse": t.transverse,
            })
        }
        Command::Nabla { function, event: e } => {
            let x = event(e, c)?;
            let out = match function.as_str() {
                "identity" => st_nabla_fd(&|x: &Event| x.as_multivector(), &x, cli.h)?,
                "x-squared" => st_nabla_fd(&|x: &Event| Multivector::scalar(x.x.x * x.x.x), &x, cli.h)?,
                "plane-wave" => {
                    let f = analytic_field(&FieldSpec::PlaneWave {
                        k: 1.0,
                        e0: 1.0,
                        prop: RealVector3::E1,
                        pol: RealVector3::E2,
                    })?;
                    st_nabla_fd(&|x: &Event| f.field.sample(x), &x, cli.h)?
                }
                other => return Err(CliError::Parse(format!("unknown test function `{other}`"))),
            };
            json!({ "event": x, "h": cli.h, "result": out, "display": out.to_string() })
        }
        Command::ChainRule { event: e, v, dir, h2 } => {
            let x = event(e, c)?;
            let d = direction(dir)?;
            let phi = rapidity_from_speed(*v, x.c)?;
            let xp = lorentz_coords_along(&x, *v, d)?;
            let frame = boost_frame(&Frame::canonical(), d, phi)?;
            let back = (Multivector::vector(d) * -phi).exp();
            let g = |y: &Event| {
                let s = (0.7 * y.t - 0.4 * y.x.x + 0.9 * y.x.y + 0.3 * y.x.z).sin();
                Multivector::scalar(s) + Multivector::E2 * (y.x.x * y.t).cos()
            };
            let composed = |y: &Event| lorentz_coords_along(y, *v, d).map(|p| g(&p));
            let side = |h: f64| -> Result<(Multivector, Multivector), CliError> {
                // the composition cannot fail once `x` and `v` are valid
                let gl = |y: &Event| composed(y).expect("valid boost");
                let lhs = back * st_nabla_fd(&gl, &x, h)?;
                let rhs = st_nabla_fd_in_frame(&g, &xp, h, &frame)?;
                Ok((lhs, rhs))
            };
            let (lhs, rhs) = side(cli.h)?;
            let mut out = json!({
                "event": x,
                "primed": xp,
                "h": cli.h,
                "lhs": lhs,
                "rhs": rhs,
                "difference": lhs.max_diff(&rhs),
            });
            if let Some(h2) = h2 {
                let (l2, r2) = side(*h2)?;
                let d2 = l2.max_diff(&r2);
                out["h2"] = json!(h2);
                out["difference_h2"] = json!(d2);
                let o = convergence_order(lhs.max_diff(&rhs), d2) / (cli.h / h2).log2();
                out["order"] = json!(o.is_finite().then_some(o));
            }
            out
        }
        Command::MaxwellCheck { field, points, h2 } => {
            let spec = FieldSpec::from_json(field)?;
            let f = analytic_field(&spec)?;
            let grid = SpacetimeGrid::new(cli.h, events(points, c)?)?;
            let report = residual_report(&f, &grid)?;
            let mut out = json!({ "field": spec, "h": cli.h, "points": report });
            if let Some(h2) = h2 {
                let fine = residual_report(&f, &SpacetimeGrid::new(*h2, grid.points.clone())?)?;
                out["h2"] = json!(h2);
                out["points_h2"] = json!(fine);
                out["order"] = json!(orders(&report, &fine, cli.h, *h2));
            }
            out
        }
        Command::PotentialCheck { field, points, h2 } => {
            let spec = FieldSpec::from_json(field)?;
            let f = analytic_field(&spec)?;
            let p = f.potential.as_ref().expect("catalog fields carry potentials");
            let pts = events(points, c)?;
            let eval = |h: f64| -> Result<Vec<Value>, CliError> {
                pts.iter()
                    .map(|x| {
                        let r = potential_residual(p, &f.sources, x, h)?;
                        Ok(json!({ "event": x, "wave": r.wave, "wave_norm": r.wave.norm(), "lorentz": r.lorentz }))
                    })
                    .collect()
            };
            let mut out = json!({ "field": spec, "h": cli.h, "points": eval(cli.h)? });
            if let Some(h2) = h2 {
                out["h2"] = json!(h2);
                out["points_h2"] = json!(eval(*h2)?);
            }
            out
        }
        Command::Kinematics { m0, v, dir, work } => {
            let report = kinematics_report(*m0, *v, c)?;
            let p = st_momentum(*m0, *v, direction(dir)?, c)?;
            let shell = (p * p.cinv()).s.re;
            let mut out = json!({
                "report": report,
                "st_momentum": p,
                "mass_shell": shell,
                "rest_energy_squared": (m0 * c * c).powi(2),
            });
            if *work {
                out["work_to_light"] = json!(work_to_light(*m0, c)?);
            }
            out
        }
        Command::Velocity { worldline, param, t, dt } => {
            let w = match worldline.as_str() {
                "rest" => Worldline::at_rest(RealVector3::ZERO, c),
                "uniform" => Worldline::uniform(RealVector3::ZERO, RealVector3::E1 * *param, c),
                "accelerated" => Worldline::accelerated(*param, c),
                other => return Err(CliError::Parse(format!("unknown worldline `{other}`"))),
            };
            let dt = dt.unwrap_or_else(|| default_dt(*t));
            let v = st_velocity(&w, *t, dt)?;
            json!({ "t": t, "dt": dt, "velocity": v, "display": v.to_string() })
        }
        Command::Verify { n } => {
            let report = verify::run(cli.seed, *n);
            let ok = report.passed;
            return Ok((json!(report), ok));
        }
    };
    Ok((value, true))
}

fn orders(coarse: &[ResidualReport], fine: &[ResidualReport], h: f64, h2: f64) -> Vec<Option<f64>> {
    // observed order log(r₁/r₂)/log(h₁/h₂); undefined when a residual vanishes
    let ratio = (h / h2).log2();
    coarse
        .iter()
        .zip(fine)
        .map(|(a, b)| {
            let o = convergence_order(a.residual_norm, b.residual_norm) / ratio;
            o.is_finite().then_some(o)
        })
        .collect()
}
