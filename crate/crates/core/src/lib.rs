//! Special relativity in the complex vector algebra `C₃`.
//!
//! `C₃` is the complex span of `{1, e₁, e₂, e₃}` with the geometric product
//! `AB = A∘B + A⊗B`. Its real and imaginary parts hold all the observables
//! of space-time: times, vectors, bivectors `i·a` and pseudoscalars `i·t`.
//! On top of the algebra this crate provides
//!
//! * [`algebra`]: the products, grade split, the two conjugations, `exp` and inverse;
//! * [`oracle`]: the 2×2 complex-matrix representation, used to cross-check the above;
//! * [`spacetime`]: events, rotations and boosts, Lorentz coordinates and the interval;
//! * [`fields`]: `F = E + iB`, a finite-difference space-time nabla and Maxwell residuals;
//! * [`kinematics`]: space-time velocity and momentum, relative mass, `Work = m₀c²`;
//! * [`verify`]: a seeded randomized self-check.
//!
//! ```
//! use c3_spacetime::{active_boost, Multivector, RealVector3};
//!
//! let phi = 0.6f64.atanh();
//! let e1 = active_boost(&Multivector::E1, RealVector3::E2, phi).unwrap();
//! let want = Multivector::E1 * 1.25 + Multivector::bivector(RealVector3::E3 * 0.75);
//! assert!(e1.approx_eq(&want, 1e-15));
//! ```
//!
//! The `book/` directory at the repository root has a chapter per module;
//! its code listings are compiled and run as doctests of this crate.

pub mod algebra;
pub mod error;
pub mod fields;
pub mod kinematics;
pub mod oracle;
pub mod spacetime;
pub mod verify;

pub use algebra::{circ, gp, otimes, ComplexScalar, ComplexVector3, Grades, Multivector, RealVector3};
pub use error::{Error, Result};
pub use fields::{
    analytic_field, classical_split, frame_split, maxwell_residual, potential_residual, split_field,
    st_nabla_fd, transform_sources, AnalyticField, ClassicalResiduals, EMField, FieldSpec, FourCurrent,
    Potential, SpacetimeGrid,
};
pub use kinematics::{relative_mass, st_momentum, st_velocity, time_dilation, work_to_light, Particle, Worldline};
pub use oracle::{from_matrix, to_matrix, Matrix2C};
pub use spacetime::{
    active_boost, active_rotate, boost_frame, compose_collinear_boosts, galilean_coords, interval,
    lorentz_coords, rapidity_from_speed, speed_from_rapidity, universal_map, Event, Frame, Rapidity, Versor,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/spacetime.md")]
    mod spacetime {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/kinematics.md")]
    mod kinematics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
