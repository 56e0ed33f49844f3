//! Randomized self-check: the multivector arithmetic against the matrix
//! oracle, the conjugation axioms and interval invariance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Multivector, RealVector3};
use crate::oracle::{to_matrix, Matrix2C};
use crate::spacetime::{interval, lorentz_coords, Event};

pub const ORACLE_TOL: f64 = 1e-10;
pub const IDENTITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub max_error: f64,
    pub tolerance: f64,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub cases: usize,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

struct Suite {
    name: &'static str,
    tol: f64,
    cases: usize,
    failures: usize,
    max_error: f64,
}

impl Suite {
    fn new(name: &'static str, tol: f64) -> Self {
        Self { name, tol, cases: 0, failures: 0, max_error: 0.0 }
    }

    fn record(&mut self, err: f64) {
        self.cases += 1;
        if err.is_nan() || err > self.tol {
            self.failures += 1;
        }
        if err.is_nan() {
            self.max_error = f64::NAN;
        } else if !self.max_error.is_nan() {
            self.max_error = self.max_error.max(err);
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name.to_owned(),
            cases: self.cases,
            failures: self.failures,
            max_error: self.max_error,
            tolerance: self.tol,
        }
    }
}

/// Uniform random multivector with coordinates in `[-scale, scale)`.
pub fn random_multivector<R: Rng>(rng: &mut R, scale: f64) -> Multivector {
    let mut c = [0.0; 8];
    for x in &mut c {
        *x = rng.random_range(-scale..scale);
    }
    Multivector::from_coords(c)
}

pub fn random_vector<R: Rng>(rng: &mut R, scale: f64) -> RealVector3 {
    RealVector3::new(
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
    )
}

fn rel(got: Matrix2C, want: Matrix2C) -> f64 {
    got.rel_diff(want)
}

fn scaled(a: &Multivector, b: &Multivector) -> f64 {
    a.max_diff(b) / a.max_abs().max(b.max_abs()).max(1.0)
}

/// Runs every suite on `n` random cases drawn from a ChaCha8 stream seeded with `seed`.
pub fn run(seed: u64, n: usize) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gp = Suite::new("oracle_product", ORACLE_TOL);
    let mut bar = Suite::new("oracle_bar_adjoint", ORACLE_TOL);
    let mut cinv = Suite::new("oracle_cinv_adjugate", ORACLE_TOL);
    let mut exp = Suite::new("oracle_exp", ORACLE_TOL);
    let mut ident = Suite::new("product_identities", IDENTITY_TOL);
    let mut axioms = Suite::new("conjugation_axioms", IDENTITY_TOL);
    let mut inter = Suite::new("interval_invariance", IDENTITY_TOL);

    for _ in 0..n {
        let a = random_multivector(&mut rng, 1.0);
        let b = random_multivector(&mut rng, 1.0);

        gp.record(rel(to_matrix(&a.gp(&b)), to_matrix(&a) * to_matrix(&b)));
        bar.record(rel(to_matrix(&a.bar()), to_matrix(&a).adjoint()));
        cinv.record(rel(to_matrix(&a.cinv()), to_matrix(&a).adjugate()));
        exp.record(rel(to_matrix(&a.exp()), to_matrix(&a).exp()));

        let (va, vb) = (Multivector::complex_vector(a.v), Multivector::complex_vector(b.v));
        let sym = (va * vb + vb * va) * 0.5;
        let anti = (va * vb - vb * va) * 0.5;
        let e1 = scaled(&sym, &Multivector::complex_scalar(a.v.circ(b.v)));
        let e2 = scaled(&anti, &Multivector::complex_vector(a.v.otimes(b.v)));
        ident.record(e1.max(e2));

        // items 2-4 for both, item 1 (conjugates the imaginary unit) for bar only
        let mut worst: f64 = 0.0;
        worst = worst.max(scaled(&(a + b).bar(), &(a.bar() + b.bar())));
        worst = worst.max(scaled(&(a * b).bar(), &(b.bar() * a.bar())));
        worst = worst.max(scaled(&a.bar().bar(), &a));
        worst = worst.max(scaled(&Multivector::complex_scalar(a.s).bar(), &Multivector::complex_scalar(a.s.conj())));
        worst = worst.max(scaled(&(a + b).cinv(), &(a.cinv() + b.cinv())));
        worst = worst.max(scaled(&(a * b).cinv(), &(b.cinv() * a.cinv())));
        worst = worst.max(scaled(&a.cinv().cinv(), &a));
        axioms.record(worst);

        let ev = Event::new(rng.random_range(-1.0..1.0), random_vector(&mut rng, 1.0));
        let v = rng.random_range(-0.95..0.95);
        let err = match lorentz_coords(&ev, v) {
            Ok(p) => (interval(&p) - interval(&ev)).abs(),
            Err(_) => f64::NAN,
        };
        inter.record(err);
    }

    let suites: Vec<_> = [gp, bar, cinv, exp, ident, axioms, inter]
        .into_iter()
        .map(Suite::finish)
        .collect();
    let passed = suites.iter().all(SuiteResult::passed);
    VerifyReport { seed, cases: n, suites, passed }
}
