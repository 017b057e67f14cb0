//! Seeded randomized verification of the identities and cross-validations.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cubics::{BinaryCubic, LinearForm, Matrix2, TracelessMatrix};
use crate::error::{Error, Result};
use crate::factor::full_factor;
use crate::fields::{BaseField, Field, FieldDescriptor, Fp, QuadDescriptor, QuadExt, Rational};
use crate::orbits::{mu_fibre_double, sum_of_cubes};

use super::identities::{eisenstein_classical_sides, eisenstein_symplectic_sides, equivariance_with, PsiFn};

/// Bound on numerators and denominators of sampled rationals.
pub const HEIGHT_BOUND: i64 = 50;

/// Fields that can be sampled from deterministically.
pub trait Sample: Field {
    fn sample(rng: &mut ChaCha8Rng, like: &Self) -> Self;
}

impl Sample for Rational {
    fn sample(rng: &mut ChaCha8Rng, _like: &Self) -> Self {
        let n = rng.gen_range(-HEIGHT_BOUND..=HEIGHT_BOUND);
        let d = rng.gen_range(1..=HEIGHT_BOUND);
        Rational::new(n.into(), d.into())
    }
}

impl Sample for Fp {
    fn sample(rng: &mut ChaCha8Rng, like: &Self) -> Self {
        let p = like.modulus();
        Fp::new(rng.gen_range(0..p), p).expect("modulus of an existing element")
    }
}

impl<F: BaseField + Sample> Sample for QuadExt<F> {
    fn sample(rng: &mut ChaCha8Rng, like: &Self) -> Self {
        let base = like.d();
        QuadExt::new(F::sample(rng, base), F::sample(rng, base), base.clone())
    }
}

/// Outcome of one identity over all trials.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub trials: u64,
    /// Trials whose input falls outside what the library supports.
    pub skipped: u64,
    /// Human-readable witnesses, one per failing trial.
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialReport {
    pub field: String,
    pub seed: u64,
    pub trials: u64,
    pub identities: Vec<IdentityReport>,
    pub elapsed_ms: u128,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(IdentityReport::passed)
    }

    pub fn failures(&self) -> usize {
        self.identities.iter().map(|r| r.failures.len()).sum()
    }
}

/// Names of the checks run by [`verify_suite`], in order.
pub const IDENTITIES: [&str; 10] = [
    "eisenstein_symplectic",
    "eisenstein_classical",
    "moment_identity",
    "equivariance",
    "psi_squared",
    "omega_psi",
    "mu_fibre",
    "sum_of_cubes",
    "factor_round_trip",
    "vanishing_chain",
];

struct Sampler<F> {
    rng: ChaCha8Rng,
    like: F,
}

impl<F: Sample> Sampler<F> {
    fn el(&mut self) -> F {
        F::sample(&mut self.rng, &self.like)
    }

    fn nonzero(&mut self) -> F {
        loop {
            let x = self.el();
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn cubic(&mut self) -> BinaryCubic<F> {
        BinaryCubic::new(self.el(), self.el(), self.el(), self.el())
    }

    fn linear(&mut self) -> LinearForm<F> {
        loop {
            let l = LinearForm::new(self.el(), self.el());
            if !l.is_zero() {
                return l;
            }
        }
    }

    fn traceless(&mut self) -> TracelessMatrix<F> {
        TracelessMatrix::new(self.el(), self.el(), self.el())
    }

    fn sl2(&mut self) -> Matrix2<F> {
        let a = self.nonzero();
        let (b, c) = (self.el(), self.el());
        let d = (self.like.one_like() + b.clone() * c.clone()) / a.clone();
        Matrix2::new(a, b, c, d)
    }

    /// `λ₁φ₁³ + λ₂φ₂³` with independent `φᵢ`; `Q_n` is then a nonzero square.
    fn generic_square(&mut self) -> BinaryCubic<F> {
        loop {
            let (l1, l2) = (self.linear(), self.linear());
            if l1.omega(&l2).is_zero() {
                continue;
            }
            let (a, b) = (self.nonzero(), self.nonzero());
            return BinaryCubic::cube_of(&l1)
                .scale(&a)
                .add(&BinaryCubic::cube_of(&l2).scale(&b));
        }
    }
}

/// `Ok(true)` when the trial ran and passed, `Ok(false)` when it was skipped.
type Check<F> = fn(&mut Sampler<F>, &PsiFn<F>) -> std::result::Result<bool, String>;

fn fail(cond: bool, witness: impl FnOnce() -> String) -> std::result::Result<bool, String> {
    if cond {
        Ok(true)
    } else {
        Err(witness())
    }
}

fn checks<F: Sample>() -> [Check<F>; 10] {
    [
        |s, psi| {
            let (p, q) = (s.cubic(), s.cubic());
            let (l, r) = eisenstein_symplectic_sides(&p, &q, psi).map_err(|e| e.to_string())?;
            fail(l == r, || format!("P = {p}, Q = {q}: {l} != {r}"))
        },
        |s, psi| {
            let (p, v1, v2) = (s.cubic(), s.el(), s.el());
            let (l, r) = eisenstein_classical_sides(&p, &v1, &v2, psi);
            fail(l == r, || format!("P = {p}, v = ({v1}, {v2}): {l} != {r}"))
        },
        |s, _| {
            let (xi, p) = (s.traceless(), s.cubic());
            fail(super::check_moment_identity(&xi, &p), || format!("xi = {xi}, P = {p}"))
        },
        |s, psi| {
            let (g, p) = (s.sl2(), s.cubic());
            let ok = equivariance_with(&g, &p, psi).map_err(|e| e.to_string())?;
            fail(ok, || format!("g = {g}, P = {p}"))
        },
        |s, psi| {
            let p = s.cubic();
            let nine_qn = p.a.from_i64_like(9) * p.qn();
            let expect = p.scale(&-nine_qn.square());
            fail(psi(&psi(&p)) == expect, || format!("P = {p}"))
        },
        |s, psi| {
            let p = s.cubic();
            fail(p.omega(&psi(&p)) == p.a.from_i64_like(6) * p.qn(), || format!("P = {p}"))
        },
        |s, psi| {
            // P = φ²ξ has a double root; the fibre of μ through it is the pair
            // of lines ±P + kΨ(P).
            let (phi, xi) = (s.linear(), s.linear());
            let p = BinaryCubic::linear_times_quadratic(&xi, &phi.mul(&phi));
            if p.moment().is_zero() {
                return Ok(false);
            }
            let fibre = mu_fibre_double(&p).map_err(|e| format!("P = {p}: {e}"))?;
            let a = s.el();
            let (plus, minus) = fibre.points(&a);
            let mu = p.moment();
            fail(
                fibre.contains(&p.add(&psi(&p))) && plus.moment() == mu && minus.moment() == mu,
                || format!("P = {p}, a = {a}"),
            )
        },
        |s, _| {
            let p = s.generic_square();
            let q = p.qn().sqrt().ok_or_else(|| format!("P = {p}: Q_n not a square"))?;
            let t = sum_of_cubes(&p, &q).map_err(|e| format!("P = {p}: {e}"))?;
            let u = sum_of_cubes(&p, &-q.clone()).map_err(|e| format!("P = {p}: {e}"))?;
            let w = t.t1.omega(&t.t2);
            fail(
                t.t1.add(&t.t2) == p && w.square() == p.qn() && u.t1 == t.t2 && u.t2 == t.t1,
                || format!("P = {p}, q = {q}"),
            )
        },
        |s, _| {
            let p = s.cubic();
            let f = match full_factor(&p) {
                Ok(f) => f,
                Err(Error::ZeroCubic | Error::Unsupported(_)) => return Ok(false),
                Err(e) => return Err(format!("P = {p}: {e}")),
            };
            fail(f.expand() == p, || format!("P = {p}: expands to {}", f.expand()))
        },
        |s, psi| {
            // μ = 0 ⟹ Ψ = 0 ⟹ Q_n = 0, on cubes λφ³ and on random cubics.
            let l = s.linear();
            let p = BinaryCubic::cube_of(&l).scale(&s.el());
            let r = s.cubic();
            let chain = |c: &BinaryCubic<F>| {
                !c.moment().is_zero() || (psi(c).is_zero() && c.qn().is_zero())
            };
            fail(chain(&p) && chain(&r), || format!("P = {p}, R = {r}"))
        },
    ]
}

/// Run every check `trials` times with a sampler seeded from `seed`, using
/// `psi` in place of the covariant `Ψ`.
pub fn verify_suite_with<F: Sample>(
    like: &F,
    seed: u64,
    trials: u64,
    psi: &PsiFn<F>,
) -> Result<TrialReport> {
    if trials == 0 {
        return Err(Error::Unsupported("trials must be at least 1".into()));
    }
    let start = Instant::now();
    let mut identities = Vec::new();
    for (k, (name, check)) in IDENTITIES.iter().zip(checks::<F>()).enumerate() {
        // An independent stream per identity keeps samples stable when checks
        // are added or reordered.
        let mut sampler = Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            like: like.clone(),
        };
        sampler.rng.set_stream(k as u64);
        let mut failures = Vec::new();
        let mut skipped = 0;
        for _ in 0..trials {
            match check(&mut sampler, psi) {
                Ok(true) => {}
                Ok(false) => skipped += 1,
                Err(w) => failures.push(w),
            }
        }
        identities.push(IdentityReport {
            identity: name.to_string(),
            trials,
            skipped,
            failures,
        });
    }
    Ok(TrialReport {
        field: like.descriptor().to_string(),
        seed,
        trials,
        identities,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// [`verify_suite_with`] using the real `Ψ`, dispatching on the field.
pub fn verify_suite(seed: u64, trials: u64, field: &FieldDescriptor) -> Result<TrialReport> {
    fn run<F: Sample>(like: F, seed: u64, trials: u64) -> Result<TrialReport> {
        verify_suite_with(&like, seed, trials, &|c: &BinaryCubic<F>| c.psi())
    }
    match field {
        FieldDescriptor::Rationals => run(Rational::from_integer(0.into()), seed, trials),
        FieldDescriptor::PrimeField { p } => run(Fp::zero(*p)?, seed, trials),
        FieldDescriptor::QuadExt(QuadDescriptor::OverRationals { d }) => {
            run(QuadExt::try_field(Rational::from_integer(d.clone()))?, seed, trials)
        }
        FieldDescriptor::QuadExt(QuadDescriptor::OverPrime { p, d }) => {
            run(QuadExt::try_field(Fp::new(*d, *p)?)?, seed, trials)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_suite_passes() {
        let r = verify_suite(42, 60, &FieldDescriptor::Rationals).unwrap();
        assert!(r.passed(), "{:#?}", r.identities);
        assert_eq!(r.identities.len(), IDENTITIES.len());
    }

    #[test]
    fn finite_and_extension_suites_pass() {
        for f in ["fp:7", "fp:5", "fp:13", "quad:fp:7:3"] {
            let r = verify_suite(1, 100, &f.parse().unwrap()).unwrap();
            assert!(r.passed(), "{f}: {:#?}", r.identities);
        }
    }

    #[test]
    fn deterministic() {
        let f = "fp:11".parse().unwrap();
        let mut s1 = Sampler { rng: ChaCha8Rng::seed_from_u64(42), like: Fp::zero(11).unwrap() };
        let mut s2 = Sampler { rng: ChaCha8Rng::seed_from_u64(42), like: Fp::zero(11).unwrap() };
        for _ in 0..20 {
            assert_eq!(s1.cubic(), s2.cubic());
        }
        let a = verify_suite(42, 20, &f).unwrap();
        let b = verify_suite(42, 20, &f).unwrap();
        assert_eq!(a.failures(), b.failures());
    }

    #[test]
    fn injected_fault_is_reported() {
        let bad = |c: &BinaryCubic<Rational>| {
            let mut p = c.psi();
            p.b += Rational::from_integer(1.into());
            p
        };
        let r = verify_suite_with(&Rational::from_integer(0.into()), 42, 20, &bad).unwrap();
        assert!(!r.passed());
        let psi_sq = r.identities.iter().find(|i| i.identity == "psi_squared").unwrap();
        assert_eq!(psi_sq.failures.len(), 20);
        assert!(psi_sq.failures[0].starts_with("P = "));
    }

    #[test]
    fn zero_trials_rejected() {
        assert!(verify_suite(1, 0, &FieldDescriptor::Rationals).is_err());
    }
}
