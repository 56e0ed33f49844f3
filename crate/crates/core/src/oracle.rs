//! Faithful 2×2 complex-matrix (Pauli) representation of the algebra.
//!
//! Used only as an independent check on [`Multivector`] arithmetic: nothing
//! here calls the multivector product. The generator images are
//!
//! ```text
//! 1 ↦ I,  e₁ ↦ [[0, 1], [1, 0]],  e₂ ↦ [[0, −i], [i, 0]],  e₃ ↦ [[1, 0], [0, −1]]
//! ```
//!
//! This is the one place the convention is chosen. With Hermitian
//! generators, `bar` becomes the conjugate transpose and `cinv` the adjugate,
//! so `M M⁻ = det(M)`.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::algebra::{ComplexVector3, Multivector};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Row-major 2×2 complex matrix `[[m11, m12], [m21, m22]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2C {
    pub m11: Complex64,
    pub m12: Complex64,
    pub m21: Complex64,
    pub m22: Complex64,
}

impl Matrix2C {
    pub const IDENTITY: Self = Self::new(ONE, ZERO, ZERO, ONE);
    pub const ZERO: Self = Self::new(ZERO, ZERO, ZERO, ZERO);
    pub const SIGMA1: Self = Self::new(ZERO, ONE, ONE, ZERO);
    pub const SIGMA2: Self = Self::new(ZERO, Complex64::new(0.0, -1.0), I, ZERO);
    pub const SIGMA3: Self = Self::new(ONE, ZERO, ZERO, Complex64::new(-1.0, 0.0));

    pub const fn new(m11: Complex64, m12: Complex64, m21: Complex64, m22: Complex64) -> Self {
        Self { m11, m12, m21, m22 }
    }

    pub fn scale(self, k: Complex64) -> Self {
        Self::new(self.m11 * k, self.m12 * k, self.m21 * k, self.m22 * k)
    }

    /// Conjugate transpose.
    pub fn adjoint(self) -> Self {
        Self::new(self.m11.conj(), self.m21.conj(), self.m12.conj(), self.m22.conj())
    }

    /// `[[d, −b], [−c, a]]`, so that `M·adj(M) = det(M)·I`.
    pub fn adjugate(self) -> Self {
        Self::new(self.m22, -self.m12, -self.m21, self.m11)
    }

    pub fn det(self) -> Complex64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn trace(self) -> Complex64 {
        self.m11 + self.m22
    }

    /// Max-abs entrywise norm.
    pub fn max_abs(self) -> f64 {
        [self.m11, self.m12, self.m21, self.m22]
            .iter()
            .fold(0.0, |m, c| m.max(c.norm()))
    }

    /// Frobenius norm.
    pub fn norm(self) -> f64 {
        [self.m11, self.m12, self.m21, self.m22]
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Matrix exponential by scaling and squaring with a Taylor core.
    pub fn exp(self) -> Self {
        let n = self.norm();
        let mut squarings = 0;
        let mut scaled = self;
        if n > 0.5 {
            squarings = (n / 0.5).log2().ceil() as i32;
            scaled = self.scale(Complex64::new(0.5f64.powi(squarings), 0.0));
        }
        let mut term = Self::IDENTITY;
        let mut sum = Self::IDENTITY;
        for k in 1..=24 {
            term = (term * scaled).scale(Complex64::new(1.0 / k as f64, 0.0));
            sum = sum + term;
        }
        for _ in 0..squarings {
            sum = sum * sum;
        }
        sum
    }

    /// Relative distance `|self − other| / max(1, |other|)` (Frobenius).
    pub fn rel_diff(self, other: Self) -> f64 {
        (self - other).norm() / other.norm().max(1.0)
    }
}

impl Add for Matrix2C {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.m11 + o.m11, self.m12 + o.m12, self.m21 + o.m21, self.m22 + o.m22)
    }
}

impl Sub for Matrix2C {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.m11 - o.m11, self.m12 - o.m12, self.m21 - o.m21, self.m22 - o.m22)
    }
}

impl Mul for Matrix2C {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
        )
    }
}

/// `α + a₁e₁ + a₂e₂ + a₃e₃ ↦ αI + a₁σ₁ + a₂σ₂ + a₃σ₃`.
pub fn to_matrix(m: &Multivector) -> Matrix2C {
    let [a1, a2, a3] = m.v.0;
    Matrix2C::IDENTITY.scale(m.s)
        + Matrix2C::SIGMA1.scale(a1)
        + Matrix2C::SIGMA2.scale(a2)
        + Matrix2C::SIGMA3.scale(a3)
}

/// Inverse of [`to_matrix`] via the trace formulas `α = tr(M)/2`, `aₖ = tr(σₖM)/2`.
pub fn from_matrix(m: &Matrix2C) -> Multivector {
    let half = Complex64::new(0.5, 0.0);
    let s = (m.m11 + m.m22) * half;
    let a1 = (m.m12 + m.m21) * half;
    let a2 = (m.m21 - m.m12) * half / I;
    let a3 = (m.m11 - m.m22) * half;
    Multivector::new(s, ComplexVector3::new(a1, a2, a3))
}
