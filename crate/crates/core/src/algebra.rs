//! The complex vector algebra `C₃ = C ⊕ C³`.
//!
//! An element `α + A` carries a complex scalar `α` and a complex vector
//! `A = α₁e₁ + α₂e₂ + α₃e₃`. The real parts hold time-like scalars and
//! vectors; the imaginary parts hold pseudoscalars (`i = e₁e₂e₃`) and
//! bivectors (`i·a = a₂∧a₃`-style directed areas). All eight real
//! coordinates live in the canonical basis `(1, e₁, e₂, e₃)`.
//!
//! The geometric product of two complex vectors splits into a symmetric
//! and an antisymmetric part,
//!
//! ```text
//! AB = A∘B + A⊗B,    A∘B = Σ αₖβₖ,    A⊗B = i (A × B)
//! ```
//!
//! and extends to the whole algebra by bilinearity with `i` central.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex scalar `x + iy`; the imaginary unit doubles as the unit pseudoscalar.
pub type ComplexScalar = Complex64;

/// Absolute per-component tolerance used by [`Multivector::approx_eq_default`].
pub const DEFAULT_TOL: f64 = 1e-12;

/// Threshold on `|A∘A|` below which [`Multivector::exp`] uses the null limit `1 + A`.
pub const NULL_SQUARE_TOL: f64 = 1e-14;

/// Threshold on `|M M⁻|` below which [`Multivector::inverse`] refuses.
pub const INVERTIBLE_TOL: f64 = 1e-12;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A real Euclidean 3-vector (position, `E`, `B`, `J`, `A`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct RealVector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl From<[f64; 3]> for RealVector3 {
    fn from([x, y, z]: [f64; 3]) -> Self {
        Self { x, y, z }
    }
}

impl From<RealVector3> for [f64; 3] {
    fn from(v: RealVector3) -> Self {
        [v.x, v.y, v.z]
    }
}

impl RealVector3 {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0);
    pub const E1: Self = Self::new(1.0, 0.0, 0.0);
    pub const E2: Self = Self::new(0.0, 1.0, 0.0);
    pub const E3: Self = Self::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// Canonical basis vector `e_{k+1}` for `k ∈ {0, 1, 2}`.
    pub fn basis(k: usize) -> Self {
        match k {
            0 => Self::E1,
            1 => Self::E2,
            2 => Self::E3,
            _ => panic!("basis index {k} out of range"),
        }
    }

    pub fn to_array(self) -> [f64; 3] {
        self.into()
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Embeds the vector as a grade-1 element of the algebra.
    pub fn to_multivector(self) -> Multivector {
        Multivector::vector(self)
    }

    /// Embeds `i·self`, the bivector with right-handed normal `self`.
    pub fn to_bivector(self) -> Multivector {
        Multivector::bivector(self)
    }
}

impl Index<usize> for RealVector3 {
    type Output = f64;
    fn index(&self, k: usize) -> &f64 {
        match k {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("index {k} out of range"),
        }
    }
}

impl Add for RealVector3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for RealVector3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for RealVector3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for RealVector3 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<RealVector3> for f64 {
    type Output = RealVector3;
    fn mul(self, v: RealVector3) -> RealVector3 {
        v * self
    }
}

impl Div<f64> for RealVector3 {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        Self::new(self.x / s, self.y / s, self.z / s)
    }
}

/// A complex 3-vector `α₁e₁ + α₂e₂ + α₃e₃`. Its real part is a vector, its
/// imaginary part (times `i`) a bivector.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComplexVector3(pub [Complex64; 3]);

impl ComplexVector3 {
    pub const ZERO: Self = Self([ZERO; 3]);

    pub const fn new(c1: Complex64, c2: Complex64, c3: Complex64) -> Self {
        Self([c1, c2, c3])
    }

    /// `re + i·im`.
    pub fn from_parts(re: RealVector3, im: RealVector3) -> Self {
        Self([
            Complex64::new(re.x, im.x),
            Complex64::new(re.y, im.y),
            Complex64::new(re.z, im.z),
        ])
    }

    pub fn real(self) -> RealVector3 {
        RealVector3::new(self.0[0].re, self.0[1].re, self.0[2].re)
    }

    pub fn imag(self) -> RealVector3 {
        RealVector3::new(self.0[0].im, self.0[1].im, self.0[2].im)
    }

    /// Complex scalar product `A∘B = Σ αₖβₖ` (no conjugation; symmetric and bilinear).
    pub fn circ(self, other: Self) -> Complex64 {
        let [a1, a2, a3] = self.0;
        let [b1, b2, b3] = other.0;
        a1 * b1 + a2 * b2 + a3 * b3
    }

    /// Complex vector product `A⊗B = i·det[e; α; β]`, antisymmetric and bilinear.
    pub fn otimes(self, other: Self) -> Self {
        let [a1, a2, a3] = self.0;
        let [b1, b2, b3] = other.0;
        Self([
            I * (a2 * b3 - a3 * b2),
            I * (a3 * b1 - a1 * b3),
            I * (a1 * b2 - a2 * b1),
        ])
    }

    pub fn conj(self) -> Self {
        Self(self.0.map(|c| c.conj()))
    }

    pub fn scale(self, s: Complex64) -> Self {
        Self(self.0.map(|c| c * s))
    }

    pub fn is_finite(self) -> bool {
        self.0.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

impl Add for ComplexVector3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for ComplexVector3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Neg for ComplexVector3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|c| -c))
    }
}

/// Free-function form of [`ComplexVector3::circ`].
pub fn circ(a: ComplexVector3, b: ComplexVector3) -> Complex64 {
    a.circ(b)
}

/// Free-function form of [`ComplexVector3::otimes`].
pub fn otimes(a: ComplexVector3, b: ComplexVector3) -> ComplexVector3 {
    a.otimes(b)
}

/// The four grade components of a [`Multivector`].
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Grades {
    pub scalar: f64,
    pub vector: RealVector3,
    /// Normal vector `b` of the bivector part `i·b`.
    pub bivector: RealVector3,
    /// Coefficient `p` of the pseudoscalar part `i·p`.
    pub pseudoscalar: f64,
}

impl Grades {
    pub fn to_multivector(self) -> Multivector {
        Multivector::new(
            Complex64::new(self.scalar, self.pseudoscalar),
            ComplexVector3::from_parts(self.vector, self.bivector),
        )
    }
}

/// General element `α + A` of the algebra.
///
/// Serializes as `{"s":[re,im],"v":[[re,im],[re,im],[re,im]]}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Multivector {
    pub s: Complex64,
    pub v: ComplexVector3,
}

impl Multivector {
    pub const ZERO: Self = Self::new(ZERO, ComplexVector3::ZERO);
    pub const ONE: Self = Self::new(ONE, ComplexVector3::ZERO);
    /// The unit pseudoscalar `i = e₁e₂e₃`.
    pub const I: Self = Self::new(I, ComplexVector3::ZERO);
    pub const E1: Self = Self::new(ZERO, ComplexVector3::new(ONE, ZERO, ZERO));
    pub const E2: Self = Self::new(ZERO, ComplexVector3::new(ZERO, ONE, ZERO));
    pub const E3: Self = Self::new(ZERO, ComplexVector3::new(ZERO, ZERO, ONE));

    pub const fn new(s: Complex64, v: ComplexVector3) -> Self {
        Self { s, v }
    }

    pub fn scalar(s: f64) -> Self {
        Self::complex_scalar(Complex64::new(s, 0.0))
    }

    pub fn complex_scalar(s: Complex64) -> Self {
        Self::new(s, ComplexVector3::ZERO)
    }

    pub fn pseudoscalar(p: f64) -> Self {
        Self::complex_scalar(Complex64::new(0.0, p))
    }

    pub fn vector(v: RealVector3) -> Self {
        Self::new(ZERO, ComplexVector3::from_parts(v, RealVector3::ZERO))
    }

    pub fn bivector(b: RealVector3) -> Self {
        Self::new(ZERO, ComplexVector3::from_parts(RealVector3::ZERO, b))
    }

    pub fn complex_vector(v: ComplexVector3) -> Self {
        Self::new(ZERO, v)
    }

    /// Paravector `s + v` (e.g. an event `ct + x`).
    pub fn paravector(s: f64, v: RealVector3) -> Self {
        Self::scalar(s) + Self::vector(v)
    }

    /// Canonical basis vector `e_{k+1}`.
    pub fn basis(k: usize) -> Self {
        Self::vector(RealVector3::basis(k))
    }

    /// The 8 real coordinates in the order `(Re s, Im s, Re v₁, Im v₁, ...)`.
    pub fn coords(&self) -> [f64; 8] {
        let [a, b, c] = self.v.0;
        [self.s.re, self.s.im, a.re, a.im, b.re, b.im, c.re, c.im]
    }

    pub fn from_coords(c: [f64; 8]) -> Self {
        Self::new(
            Complex64::new(c[0], c[1]),
            ComplexVector3::new(
                Complex64::new(c[2], c[3]),
                Complex64::new(c[4], c[5]),
                Complex64::new(c[6], c[7]),
            ),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.coords().iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Euclidean norm of the 8 real coordinates.
    pub fn norm(&self) -> f64 {
        self.coords().iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.coords().iter().all(|c| c.is_finite())
    }

    /// Geometric product `(α + A)(β + B) = αβ + A∘B + αB + βA + A⊗B`.
    pub fn gp(&self, other: &Self) -> Self {
        let (a, aa) = (self.s, self.v);
        let (b, bb) = (other.s, other.v);
        Self::new(
            a * b + aa.circ(bb),
            bb.scale(a) + aa.scale(b) + aa.otimes(bb),
        )
    }

    pub fn grades(&self) -> Grades {
        Grades {
            scalar: self.s.re,
            vector: self.v.real(),
            bivector: self.v.imag(),
            pseudoscalar: self.s.im,
        }
    }

    /// Projection onto a single grade (0 scalar, 1 vector, 2 bivector, 3 pseudoscalar).
    pub fn grade(&self, k: usize) -> Self {
        let g = self.grades();
        match k {
            0 => Self::scalar(g.scalar),
            1 => Self::vector(g.vector),
            2 => Self::bivector(g.bivector),
            3 => Self::pseudoscalar(g.pseudoscalar),
            _ => Self::ZERO,
        }
    }

    /// Proper conjugation of the canonical frame: complex conjugation of every
    /// coordinate. Fixes real scalars and vectors, negates bivectors and `i`,
    /// and reverses products.
    pub fn bar(&self) -> Self {
        Self::new(self.s.conj(), self.v.conj())
    }

    /// Complex-vector inversion `α + A ↦ α − A`.
    pub fn cinv(&self) -> Self {
        Self::new(self.s, -self.v)
    }

    /// `M M⁻ = α² − A∘A`, always a complex scalar.
    pub fn modulus_squared(&self) -> Complex64 {
        self.s * self.s - self.v.circ(self.v)
    }

    /// Exponential in closed form: `e^{α+A} = e^α (cosh r + A sinh(r)/r)` with
    /// `r² = A∘A`. Both factors are even in `r`, so the branch of the square
    /// root does not matter.
    pub fn exp(&self) -> Self {
        let ea = self.s.exp();
        let r2 = self.v.circ(self.v);
        if r2.norm() < NULL_SQUARE_TOL {
            return Self::new(ea, self.v.scale(ea));
        }
        let r = r2.sqrt();
        Self::new(ea * r.cosh(), self.v.scale(ea * r.sinh() / r))
    }

    /// `M⁻¹ = M⁻ / (M M⁻)`.
    pub fn inverse(&self) -> Result<Self> {
        let m = self.modulus_squared();
        if m.norm() < INVERTIBLE_TOL {
            return Err(Error::NotInvertible { modulus: m.norm() });
        }
        Ok(self.cinv() / m)
    }

    /// `R self R⁻¹` given both factors.
    pub fn sandwich(&self, left: &Self, right: &Self) -> Self {
        left.gp(self).gp(right)
    }

    /// Component-wise closeness with absolute tolerance `tol`, scaled up by
    /// the largest coordinate when the operands are large.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let scale = self.max_abs().max(other.max_abs()).max(1.0);
        let (a, b) = (self.coords(), other.coords());
        a.iter().zip(b.iter()).all(|(x, y)| (x - y).abs() <= tol * scale)
    }

    pub fn approx_eq_default(&self, other: &Self) -> bool {
        self.approx_eq(other, DEFAULT_TOL)
    }

    /// Largest coordinate difference.
    pub fn max_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("multivector serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// Free-function form of [`Multivector::gp`].
pub fn gp(m: &Multivector, n: &Multivector) -> Multivector {
    m.gp(n)
}

impl Add for Multivector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.s + o.s, self.v + o.v)
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for Multivector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.s - o.s, self.v - o.v)
    }
}

impl SubAssign for Multivector {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl Neg for Multivector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.s, -self.v)
    }
}

impl Mul for Multivector {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.gp(&o)
    }
}

impl Mul<Complex64> for Multivector {
    type Output = Self;
    fn mul(self, k: Complex64) -> Self {
        Self::new(self.s * k, self.v.scale(k))
    }
}

impl Mul<f64> for Multivector {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        self * Complex64::new(k, 0.0)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, m: Multivector) -> Multivector {
        m * self
    }
}

impl Div<Complex64> for Multivector {
    type Output = Self;
    fn div(self, k: Complex64) -> Self {
        Self::new(self.s / k, ComplexVector3(self.v.0.map(|c| c / k)))
    }
}

impl Div<f64> for Multivector {
    type Output = Self;
    fn div(self, k: f64) -> Self {
        self * (1.0 / k)
    }
}

impl From<RealVector3> for Multivector {
    fn from(v: RealVector3) -> Self {
        Self::vector(v)
    }
}

impl From<f64> for Multivector {
    fn from(s: f64) -> Self {
        Self::scalar(s)
    }
}

impl fmt::Display for Multivector {
    /// Prints the non-zero terms, e.g. `1.25e1 + 0.75ie3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.grades();
        let mut terms = Vec::new();
        if g.scalar != 0.0 {
            terms.push(format!("{}", g.scalar));
        }
        for k in 0..3 {
            if g.vector[k] != 0.0 {
                terms.push(format!("{}e{}", g.vector[k], k + 1));
            }
        }
        for k in 0..3 {
            if g.bivector[k] != 0.0 {
                terms.push(format!("{}ie{}", g.bivector[k], k + 1));
            }
        }
        if g.pseudoscalar != 0.0 {
            terms.push(format!("{}i", g.pseudoscalar));
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
