use crate::cubics::{BinaryCubic, LinearForm};
use crate::error::{Error, Result};
use crate::fields::Field;

use super::triple_root_form;

/// `P = T1 + T2` with `Ti = λi φi³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumOfCubes<F> {
    pub t1: BinaryCubic<F>,
    pub t2: BinaryCubic<F>,
    pub lambda1: F,
    pub phi1: LinearForm<F>,
    pub lambda2: F,
    pub phi2: LinearForm<F>,
}

impl<F: Field> SumOfCubes<F> {
    pub fn swapped(&self) -> Self {
        SumOfCubes {
            t1: self.t2.clone(),
            t2: self.t1.clone(),
            lambda1: self.lambda2.clone(),
            phi1: self.phi2.clone(),
            lambda2: self.lambda1.clone(),
            phi2: self.phi1.clone(),
        }
    }
}

/// `T1 = ½(P + Ψ(P)/3q)`, `T2 = ½(P - Ψ(P)/3q)` for `q² = Q_n(P) ≠ 0`.
/// Then `ω(T1, T2) = -q`.
pub fn sum_of_cubes<F: Field>(p: &BinaryCubic<F>, q: &F) -> Result<SumOfCubes<F>> {
    let qn = p.qn();
    if qn.is_zero() {
        return Err(Error::NotGeneric);
    }
    if q.square() != qn {
        return Err(Error::QMismatch);
    }
    let s = p.psi().scale(&(q.from_i64_like(3) * q.clone()).inv()?);
    let half = q.from_i64_like(2).inv()?;
    let t1 = p.add(&s).scale(&half);
    let t2 = p.sub(&s).scale(&half);
    let internal = |_| Error::Internal("sum-of-cubes summand is not a cube".into());
    let (lambda1, phi1) = triple_root_form(&t1).map_err(internal)?;
    let (lambda2, phi2) = triple_root_form(&t2).map_err(internal)?;
    debug_assert_eq!(t1.omega(&t2), -q.clone());
    Ok(SumOfCubes { t1, t2, lambda1, phi1, lambda2, phi2 })
}

/// `P = λ1φ1³ + λ2φ2³` with `μ(P)·φ1 = -qφ1` and `μ(P)·φ2 = qφ2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenbasis<F> {
    pub q: F,
    pub lambda1: F,
    pub phi1: LinearForm<F>,
    pub lambda2: F,
    pub phi2: LinearForm<F>,
}

impl<F: Field> Eigenbasis<F> {
    pub fn recombine(&self) -> BinaryCubic<F> {
        BinaryCubic::cube_of(&self.phi1)
            .scale(&self.lambda1)
            .add(&BinaryCubic::cube_of(&self.phi2).scale(&self.lambda2))
    }
}

/// Eigenbasis for the canonical square root of `Q_n(P)`.
pub fn mu_eigenbasis<F: Field>(p: &BinaryCubic<F>) -> Result<Eigenbasis<F>> {
    let qn = p.qn();
    if qn.is_zero() {
        return Err(Error::NotGeneric);
    }
    let q = qn.canonical_sqrt().ok_or(Error::NotGenericSquare)?;
    mu_eigenbasis_with(p, &q)
}

/// Closed-form eigenbasis of `μ(P)` in the three cases `β = γ = 0`, `γ ≠ 0`,
/// `β ≠ 0`.
pub fn mu_eigenbasis_with<F: Field>(p: &BinaryCubic<F>, q: &F) -> Result<Eigenbasis<F>> {
    let qn = p.qn();
    if qn.is_zero() {
        return Err(Error::NotGeneric);
    }
    if q.square() != qn {
        return Err(Error::QMismatch);
    }
    let m = p.moment();
    let (alpha, beta, gamma) = (m.alpha.clone(), m.beta.clone(), m.gamma.clone());
    let (a, b, c, d) = (p.a.clone(), p.b.clone(), p.c.clone(), p.d.clone());
    let one = a.one_like();
    let two_q = q.from_i64_like(2) * q.clone();
    let eb = if beta.is_zero() && gamma.is_zero() {
        let (x, y) = (LinearForm::x(&one), LinearForm::y(&one));
        if *q == alpha {
            Eigenbasis { q: q.clone(), lambda1: a, phi1: x, lambda2: d, phi2: y }
        } else {
            Eigenbasis { q: q.clone(), lambda1: d, phi1: y, lambda2: a, phi2: x }
        }
    } else if !gamma.is_zero() {
        let am = alpha.clone() - q.clone();
        let ap = alpha.clone() + q.clone();
        Eigenbasis {
            q: q.clone(),
            lambda1: (ap.clone() * a.clone() + gamma.clone() * b.clone()) / two_q.clone(),
            phi1: LinearForm::new(one.clone(), -(am.clone() / gamma.clone())),
            lambda2: -(am * a + gamma.clone() * b) / two_q,
            phi2: LinearForm::new(one, -(ap / gamma)),
        }
    } else {
        let am = alpha.clone() - q.clone();
        let ap = alpha.clone() + q.clone();
        Eigenbasis {
            q: q.clone(),
            lambda1: (beta.clone() * c.clone() - am.clone() * d.clone()) / two_q.clone(),
            phi1: LinearForm::new(ap.clone() / beta.clone(), one.clone()),
            lambda2: (-beta.clone() * c + ap * d) / two_q,
            phi2: LinearForm::new(am / beta, one),
        }
    };
    if eb.recombine() != *p
        || m.act_linear(&eb.phi1) != eb.phi1.scale(&-q.clone())
        || m.act_linear(&eb.phi2) != eb.phi2.scale(q)
    {
        return Err(Error::Internal("eigenbasis formulas failed their check".into()));
    }
    Ok(eb)
}
