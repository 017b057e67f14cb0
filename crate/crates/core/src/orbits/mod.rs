//! Strata and orbits of binary cubics under `Sl(2, k)` and `Gl(2, k)`.
//!
//! Nonzero cubics fall into four `Sl(2, k)`-stable strata: a triple root
//! (`μ(P) = 0`), a double root (`μ(P)` nonzero and nilpotent), and the generic
//! cubics, split by whether `Q_n(P)` is a square in `k`. Each stratum has a
//! complete orbit invariant; see [`invariant`].

mod adjoint;
mod generic;
mod invariant;

pub use adjoint::{
    in_moment_image, moment_preimage, nu_delta, nu_equivalent, psi_preimage, to_off_diagonal,
};
pub use generic::{mu_eigenbasis, mu_eigenbasis_with, sum_of_cubes, Eigenbasis, SumOfCubes};
pub use invariant::{
    gl_invariant, i_o1, i_o1_hat, i_o1_hat_with, invariant, nonsquare_representative,
    orbit_compose, same_gl2_orbit, same_sl2_orbit, square_representative, GlInvariant,
    OrbitInvariant,
};

use crate::cubics::{divide_linear, BinaryCubic, LinearForm};
use crate::error::{Error, Result};
use crate::fields::{CubeClass, Field, FieldDescriptor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stratum<F> {
    Zero,
    TripleRoot,
    DoubleRoot,
    /// `Q_n(P) = q²` with `q` the canonical square root.
    GenericSquare { q: F },
    /// `Q_n(P)` is not a square; `extension` is `k(√Q_n(P))`, or `None` when
    /// `k` is itself a quadratic extension.
    GenericNonSquare { extension: Option<FieldDescriptor> },
}

impl<F> Stratum<F> {
    pub fn name(&self) -> &'static str {
        match self {
            Stratum::Zero => "Zero",
            Stratum::TripleRoot => "TripleRoot",
            Stratum::DoubleRoot => "DoubleRoot",
            Stratum::GenericSquare { .. } => "GenericSquare",
            Stratum::GenericNonSquare { .. } => "GenericNonSquare",
        }
    }

    pub fn same_kind(&self, o: &Self) -> bool {
        self.name() == o.name()
    }
}

pub fn classify<F: Field>(p: &BinaryCubic<F>) -> Stratum<F> {
    if p.is_zero() {
        return Stratum::Zero;
    }
    if p.moment().is_zero() {
        return Stratum::TripleRoot;
    }
    let qn = p.qn();
    if qn.is_zero() {
        return Stratum::DoubleRoot;
    }
    match qn.canonical_sqrt() {
        Some(q) => Stratum::GenericSquare { q },
        None => Stratum::GenericNonSquare {
            extension: qn.adjoin_sqrt().ok().map(|e| e.one.descriptor()),
        },
    }
}

/// `P = λφ³` with `φ = x + ty` when the `x³` coefficient is nonzero and
/// `φ = y` otherwise.
pub fn triple_root_form<F: Field>(p: &BinaryCubic<F>) -> Result<(F, LinearForm<F>)> {
    if p.is_zero() || !p.moment().is_zero() {
        return Err(Error::NotTripleRoot);
    }
    let one = p.a.one_like();
    let (lambda, phi) = if p.a.is_zero() {
        (p.d.clone(), LinearForm::y(&one))
    } else {
        (p.a.clone(), LinearForm::new(one, p.b.clone() / p.a.clone()))
    };
    debug_assert_eq!(BinaryCubic::cube_of(&phi).scale(&lambda), *p);
    Ok((lambda, phi))
}

/// The cube class of `λ` in `P = λφ³`.
pub fn i_t<F: Field>(p: &BinaryCubic<F>) -> Result<CubeClass<F>> {
    let (lambda, _) = triple_root_form(p)?;
    CubeClass::of(&lambda)
}

fn check_double<F: Field>(p: &BinaryCubic<F>) -> Result<()> {
    let m = p.moment();
    if m.is_zero() || !m.is_nilpotent() {
        return Err(Error::NotDoubleRoot);
    }
    Ok(())
}

/// The pair `(φ, ξ)` with `P = φ²ξ` and `Ω(φ, ξ) = 1`; `φ` spans the kernel
/// of `μ(P)` acting on linear forms.
pub fn double_root_form<F: Field>(p: &BinaryCubic<F>) -> Result<(LinearForm<F>, LinearForm<F>)> {
    check_double(p)?;
    let m = p.moment();
    let phi1 = if m.alpha.is_zero() && m.gamma.is_zero() {
        LinearForm::y(&p.a)
    } else {
        LinearForm::new(m.gamma.clone(), -m.alpha.clone())
    };
    debug_assert!(m.act_linear(&phi1).is_zero());
    let broken = || Error::Internal("kernel of the moment is not a double root".into());
    let once = divide_linear(&p.raw(), &phi1).ok_or_else(broken)?;
    let twice = divide_linear(&once, &phi1).ok_or_else(broken)?;
    let xi1 = LinearForm::new(twice[0].clone(), twice[1].clone());
    let lambda = phi1.omega(&xi1);
    let li = lambda.inv().map_err(|_| broken())?;
    Ok((phi1.scale(&lambda), xi1.scale(&li.square())))
}

/// The fibre `μ⁻¹(μ(P))` through a double-root cubic: the two affine lines
/// `P + aΨ(P)` and `-P + bΨ(P)`. The direction `Ψ(P)` is a multiple of `φ³`,
/// `φ` the double root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuFibre<F> {
    pub plus: BinaryCubic<F>,
    pub minus: BinaryCubic<F>,
    pub direction: BinaryCubic<F>,
    pub phi: LinearForm<F>,
}

impl<F: Field> MuFibre<F> {
    pub fn contains(&self, q: &BinaryCubic<F>) -> bool {
        on_line(&q.sub(&self.plus), &self.direction) || on_line(&q.sub(&self.minus), &self.direction)
    }

    /// The points `P + aΨ(P)` and `-P + aΨ(P)`.
    pub fn points(&self, a: &F) -> (BinaryCubic<F>, BinaryCubic<F>) {
        let step = self.direction.scale(a);
        (self.plus.add(&step), self.minus.add(&step))
    }
}

/// Whether `v` is a multiple of the nonzero cubic `dir`.
fn on_line<F: Field>(v: &BinaryCubic<F>, dir: &BinaryCubic<F>) -> bool {
    let (vs, ds) = (v.abcd(), dir.abcd());
    let Some(i) = ds.iter().position(|x| !x.is_zero()) else {
        return v.is_zero();
    };
    let t = vs[i].clone() / ds[i].clone();
    vs.iter().zip(ds.iter()).all(|(x, y)| *x == t.clone() * y.clone())
}

pub fn mu_fibre_double<F: Field>(p: &BinaryCubic<F>) -> Result<MuFibre<F>> {
    let (phi, _) = double_root_form(p)?;
    Ok(MuFibre {
        plus: p.clone(),
        minus: p.neg(),
        direction: p.psi(),
        phi,
    })
}

/// Coefficientwise image of a cubic in the extension whose unit is `one`.
pub fn embed_cubic<F: Field>(p: &BinaryCubic<F>, one: &F::Ext) -> BinaryCubic<F::Ext> {
    BinaryCubic::new(p.a.embed(one), p.b.embed(one), p.c.embed(one), p.d.embed(one))
}

/// Inverse of [`embed_cubic`] on cubics fixed by conjugation.
pub fn descend_cubic<F: Field>(p: &BinaryCubic<F::Ext>) -> Option<BinaryCubic<F>> {
    Some(BinaryCubic::new(
        F::descend(&p.a)?,
        F::descend(&p.b)?,
        F::descend(&p.c)?,
        F::descend(&p.d)?,
    ))
}

/// Galois conjugate of a cubic over the extension.
pub fn conj_cubic<F: Field>(p: &BinaryCubic<F::Ext>) -> BinaryCubic<F::Ext> {
    BinaryCubic::new(F::conj_ext(&p.a), F::conj_ext(&p.b), F::conj_ext(&p.c), F::conj_ext(&p.d))
}
