//! Factorization of binary cubics over `k` by symplectic criteria.
//!
//! A generic cubic is reducible exactly when its orbit invariant has trivial
//! cube class; a linear factor is then read off from the eigenbasis of
//! `μ(P)` (the Cardano–Tartaglia formulas). Multiple-root cubics are factored
//! through the kernel of `μ(P)`.

use std::fmt;

use crate::cubics::{divide_linear, format_poly, BinaryCubic, BinaryQuadratic, LinearForm};
use crate::error::{Error, Result};
use crate::fields::Field;
use crate::orbits::{
    classify, conj_cubic, double_root_form, embed_cubic, invariant, mu_eigenbasis, sum_of_cubes,
    triple_root_form, Stratum,
};

/// A factor: a homogeneous polynomial in raw coefficients (from `x^n` down to
/// `y^n`) whose leading nonzero coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor<F> {
    pub coeffs: Vec<F>,
    pub multiplicity: u32,
    /// Certified irreducible: always true for degree 1; for degree 2 the
    /// discriminant is a non-square; for degree 3 the cubic is irreducible.
    pub irreducible: bool,
}

impl<F: Field> Factor<F> {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn linear(l: &LinearForm<F>, multiplicity: u32) -> Self {
        Factor { coeffs: vec![l.e.clone(), l.f.clone()], multiplicity, irreducible: true }
    }
}

/// `unit · Π factorᵢ^multᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<F> {
    pub unit: F,
    pub factors: Vec<Factor<F>>,
}

fn poly_mul<F: Field>(p: &[F], q: &[F]) -> Vec<F> {
    let mut out = vec![p[0].zero_like(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] = out[i + j].clone() + a.clone() * b.clone();
        }
    }
    out
}

impl<F: Field> Factorization<F> {
    /// Multiply the factorization back out.
    pub fn expand(&self) -> BinaryCubic<F> {
        let mut acc = vec![self.unit.clone()];
        for f in &self.factors {
            for _ in 0..f.multiplicity {
                acc = poly_mul(&acc, &f.coeffs);
            }
        }
        let z = self.unit.zero_like();
        while acc.len() < 4 {
            acc.push(z.clone());
        }
        BinaryCubic::from_raw([acc[0].clone(), acc[1].clone(), acc[2].clone(), acc[3].clone()])
    }

    /// The pattern of (degree, multiplicity) pairs, sorted.
    pub fn pattern(&self) -> Vec<(usize, u32)> {
        let mut v: Vec<_> = self.factors.iter().map(|f| (f.degree(), f.multiplicity)).collect();
        v.sort();
        v
    }

    fn check(self, p: &BinaryCubic<F>) -> Result<Self> {
        let total: usize = self.factors.iter().map(|f| f.degree() * f.multiplicity as usize).sum();
        if total != 3 || self.expand() != *p {
            return Err(Error::Internal(format!("factorization of {p} does not expand back")));
        }
        Ok(self)
    }
}

impl<F: Field> fmt::Display for Factorization<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() {
            parts.push(format!("{}", self.unit));
        }
        for fac in &self.factors {
            let s = format!("({})", format_poly(&fac.coeffs));
            parts.push(if fac.multiplicity > 1 { format!("{s}^{}", fac.multiplicity) } else { s });
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Scale a polynomial so its leading nonzero coefficient is 1.
fn monic<F: Field>(p: &[F]) -> Result<(F, Vec<F>)> {
    let lead = p.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroCubic)?.clone();
    let inv = lead.inv()?;
    Ok((lead, p.iter().map(|c| c.clone() * inv.clone()).collect()))
}

/// Factorization of a nonzero cubic with `Q_n(P) = 0`.
pub fn factor_multiple_root<F: Field>(p: &BinaryCubic<F>) -> Result<Factorization<F>> {
    if p.is_zero() {
        return Err(Error::ZeroCubic);
    }
    if !p.qn().is_zero() {
        return Err(Error::GenericInput);
    }
    let fz = match classify(p) {
        Stratum::TripleRoot => {
            let (lambda, phi) = triple_root_form(p)?;
            let (l, m) = phi.monic()?;
            Factorization { unit: lambda * l.cube(), factors: vec![Factor::linear(&m, 3)] }
        }
        _ => {
            let (phi, xi) = double_root_form(p)?;
            let (l1, m1) = phi.monic()?;
            let (l2, m2) = xi.monic()?;
            Factorization {
                unit: l1.square() * l2,
                factors: vec![Factor::linear(&m1, 2), Factor::linear(&m2, 1)],
            }
        }
    };
    fz.check(p)
}

/// The closed forms `x²(ax + 3by)`, `y²(3cx + dy)` (when `ad - bc = 0`) and
/// `(-(b² - ac)x + ½(ad - bc)y)²(a/(b² - ac)² x + 4d/(ad - bc)² y)` for a
/// double-root cubic; `None` where a denominator vanishes or the pattern
/// does not apply.
pub fn double_root_closed_form<F: Field>(p: &BinaryCubic<F>) -> Option<(LinearForm<F>, LinearForm<F>)> {
    let m = p.moment();
    if m.is_zero() || !p.qn().is_zero() {
        return None;
    }
    let three = p.a.from_i64_like(3);
    let (a, b, c, d) = (p.a.clone(), p.b.clone(), p.c.clone(), p.d.clone());
    let alpha = m.alpha.clone();
    if alpha.is_zero() {
        if c.is_zero() && d.is_zero() {
            return Some((LinearForm::x(&a), LinearForm::new(a, three * b)));
        }
        if a.is_zero() && b.is_zero() {
            return Some((LinearForm::y(&a), LinearForm::new(three * c, d)));
        }
        return None;
    }
    let g = b.square() - a.clone() * c;
    if g.is_zero() {
        return None;
    }
    let half = a.from_i64_like(2).inv().ok()?;
    let four = a.from_i64_like(4);
    let phi = LinearForm::new(-g.clone(), half * alpha.clone());
    let xi = LinearForm::new(a / g.square(), four * d / alpha.square());
    Some((phi, xi))
}

/// Whether `P` has a linear factor over `k`.
pub fn is_reducible<F: Field>(p: &BinaryCubic<F>) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroCubic);
    }
    if p.qn().is_zero() {
        return Ok(true);
    }
    Ok(invariant(p)?.is_trivial_class())
}

/// Which normalization of the Cardano–Tartaglia cube roots to use: the one
/// where `r³ = (α + q)a + γb`, `s = -γ/r` (and the analogues), or the one
/// with both halved, `r³ = ((α + q)a + γb)/2`, `s = -γ/2r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    Unhalved,
    Halved,
}

/// The Cardano–Tartaglia candidate linear factor for `q² = Q_n(P)`, with
/// `ad ≠ 0`; `None` if the case does not apply or the cube root is missing.
/// The candidate is not validated.
pub fn cardano_tartaglia_form<F: Field>(
    p: &BinaryCubic<F>,
    q: &F,
    norm: Normalization,
) -> Option<LinearForm<F>> {
    let (a, b, c, d) = (p.a.clone(), p.b.clone(), p.c.clone(), p.d.clone());
    if a.is_zero() || d.is_zero() || q.is_zero() {
        return None;
    }
    let m = p.moment();
    let (alpha, beta, gamma) = (m.alpha, m.beta, m.gamma);
    let two = a.from_i64_like(2);
    let k = match norm {
        Normalization::Unhalved => a.one_like(),
        Normalization::Halved => two.inv().ok()?,
    };
    let one = a.one_like();
    if beta.is_zero() && gamma.is_zero() {
        let r = (q.clone() * a).cbrt()?;
        let s = q.clone() / r.clone();
        Some(LinearForm::new(r, s))
    } else if !gamma.is_zero() {
        let r = ((alpha + q.clone()) * a.clone() + gamma.clone() * b.clone()) * k.clone();
        let r = r.cbrt()?;
        if r.is_zero() {
            return None;
        }
        let s = -(gamma * k) / r.clone();
        Some(LinearForm::new(one, (r - s + b) / a))
    } else {
        let r = (beta.clone() * c.clone() - (alpha - q.clone()) * d.clone()) * k.clone();
        let r = r.cbrt()?;
        if r.is_zero() {
            return None;
        }
        let s = beta * k / r.clone();
        Some(LinearForm::new((s - r + c) / d, one))
    }
}

fn divides<F: Field>(p: &BinaryCubic<F>, l: &LinearForm<F>) -> bool {
    !l.is_zero() && divide_linear(&p.raw(), l).is_some()
}

/// A linear form dividing a reducible cubic with `Q_n(P) ≠ 0`, made monic.
pub fn linear_factor<F: Field>(p: &BinaryCubic<F>) -> Result<LinearForm<F>> {
    if p.is_zero() {
        return Err(Error::ZeroCubic);
    }
    if p.qn().is_zero() {
        return Err(Error::MultipleRoot);
    }
    if !is_reducible(p)? {
        return Err(Error::Irreducible);
    }
    let like = &p.a;
    if p.a.is_zero() {
        return Ok(LinearForm::y(like));
    }
    if p.d.is_zero() {
        return Ok(LinearForm::x(like));
    }
    let found = match classify(p) {
        Stratum::GenericSquare { q } => {
            let mut cands = Vec::new();
            for qq in [q.clone(), -q.clone()] {
                for norm in [Normalization::Unhalved, Normalization::Halved] {
                    cands.extend(cardano_tartaglia_form(p, &qq, norm));
                }
            }
            match cands.into_iter().find(|l| divides(p, l)) {
                Some(l) => Some(l),
                None => eigenbasis_factor(p)?,
            }
        }
        _ => extension_factor(p)?,
    };
    let l = found.ok_or_else(|| Error::Internal(format!("no linear factor found for {p}")))?;
    Ok(l.monic()?.1)
}

/// `rφ1 + φ2` (times cube roots of unity) with `r³ = λ1/λ2`.
fn eigenbasis_factor<F: Field>(p: &BinaryCubic<F>) -> Result<Option<LinearForm<F>>> {
    let e = mu_eigenbasis(p)?;
    let Some(r) = (e.lambda1.clone() / e.lambda2.clone()).cbrt() else {
        return Ok(None);
    };
    for j in r.cube_roots_of_unity() {
        let l = e.phi1.scale(&(r.clone() * j)).add(&e.phi2);
        if divides(p, &l) {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

/// The same construction carried out in `k(√Q_n(P))`, keeping the factor
/// whose monic form descends to `k`.
fn extension_factor<F: Field>(p: &BinaryCubic<F>) -> Result<Option<LinearForm<F>>> {
    let ext = p.qn().adjoin_sqrt()?;
    let pe = embed_cubic(p, &ext.one);
    let s = sum_of_cubes(&pe, &ext.sqrt)?;
    debug_assert_eq!(conj_cubic::<F>(&s.t1), s.t2);
    let Some(r) = (s.lambda1.clone() / s.lambda2.clone()).cbrt() else {
        return Ok(None);
    };
    for j in r.cube_roots_of_unity() {
        let l = s.phi1.scale(&(r.clone() * j)).add(&s.phi2);
        if l.is_zero() {
            continue;
        }
        let (_, m) = l.monic()?;
        if let (Some(e), Some(f)) = (F::descend(&m.e), F::descend(&m.f)) {
            let lk = LinearForm::new(e, f);
            if divides(p, &lk) {
                return Ok(Some(lk));
            }
        }
    }
    Ok(None)
}

/// `P = (1/q)(φ'1³ + φ'2³)` with `Ω(φ'1, φ'2) = q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormedSum<F> {
    pub q: F,
    pub phi1: LinearForm<F>,
    pub phi2: LinearForm<F>,
}

impl<F: Field> NormedSum<F> {
    pub fn recombine(&self) -> Result<BinaryCubic<F>> {
        Ok(BinaryCubic::cube_of(&self.phi1)
            .add(&BinaryCubic::cube_of(&self.phi2))
            .scale(&self.q.inv()?))
    }

    /// The three factors `jφ'1 + j⁻¹φ'2` for the cube roots of unity `j` in
    /// `k`.
    pub fn linear_factors(&self) -> Vec<LinearForm<F>> {
        self.q
            .cube_roots_of_unity()
            .into_iter()
            .map(|j| {
                let ji = j.inv().expect("roots of unity are nonzero");
                self.phi1.scale(&j).add(&self.phi2.scale(&ji))
            })
            .collect()
    }
}

/// The normalized sum of cubes of a reducible cubic whose discriminant is a
/// nonzero square; `q = λ1λ2Ω(φ1, φ2)³` for the eigenbasis of `μ(P)`.
pub fn normed_sum<F: Field>(p: &BinaryCubic<F>) -> Result<NormedSum<F>> {
    let e = mu_eigenbasis(p)?;
    let om = e.phi1.omega(&e.phi2);
    let q = e.lambda1.clone() * e.lambda2.clone() * om.cube();
    let r = (q.clone() * e.lambda1.clone()).cbrt().ok_or(Error::Irreducible)?;
    let s = q.clone() / (r.clone() * om);
    let ns = NormedSum { q, phi1: e.phi1.scale(&r), phi2: e.phi2.scale(&s) };
    if ns.phi1.omega(&ns.phi2) != ns.q || ns.recombine()? != *p {
        return Err(Error::Internal("normalized sum of cubes failed its check".into()));
    }
    Ok(ns)
}

/// Complete factorization into irreducibles over `k`.
pub fn full_factor<F: Field>(p: &BinaryCubic<F>) -> Result<Factorization<F>> {
    if p.is_zero() {
        return Err(Error::ZeroCubic);
    }
    if p.qn().is_zero() {
        return factor_multiple_root(p);
    }
    if !is_reducible(p)? {
        let (unit, coeffs) = monic(&p.raw())?;
        let fz = Factorization {
            unit,
            factors: vec![Factor { coeffs, multiplicity: 1, irreducible: true }],
        };
        return fz.check(p);
    }
    let l = linear_factor(p)?;
    let quo = divide_linear(&p.raw(), &l)
        .ok_or_else(|| Error::Internal("linear factor does not divide".into()))?;
    let quad = BinaryQuadratic::new(quo[0].clone(), quo[1].clone(), quo[2].clone());
    let fz = match quad.split() {
        Some((u, l1, l2)) => {
            let (c1, m1) = l1.monic()?;
            let (c2, m2) = l2.monic()?;
            Factorization {
                unit: u * c1 * c2,
                factors: vec![Factor::linear(&l, 1), Factor::linear(&m1, 1), Factor::linear(&m2, 1)],
            }
        }
        None => {
            let (unit, coeffs) = monic(&quad.coeffs())?;
            Factorization {
                unit,
                factors: vec![
                    Factor::linear(&l, 1),
                    Factor { coeffs, multiplicity: 1, irreducible: true },
                ],
            }
        }
    };
    let fz = fz.check(p)?;
    if let Stratum::GenericSquare { .. } = classify(p) {
        cross_check_normed_sum(p, &fz)?;
    }
    Ok(fz)
}

/// When `-3` is a square the three factors of the normalized sum must be the
/// linear factors found; otherwise only `φ'1 + φ'2` is.
fn cross_check_normed_sum<F: Field>(p: &BinaryCubic<F>, fz: &Factorization<F>) -> Result<()> {
    let ns = normed_sum(p)?;
    let mut found: Vec<Vec<F>> = Vec::new();
    for l in ns.linear_factors() {
        let (_, m) = l.monic()?;
        found.push(vec![m.e, m.f]);
    }
    let linear: Vec<&Vec<F>> =
        fz.factors.iter().filter(|f| f.degree() == 1).map(|f| &f.coeffs).collect();
    let ok = found.len() == linear.len() && found.iter().all(|f| linear.contains(&f));
    if !ok {
        return Err(Error::Internal("normalized-sum factors disagree".into()));
    }
    Ok(())
}

/// A root of `t³ + pt + q` in `k` by the Cardano–Tartaglia formula
/// `t = s - r`, `r³ = q/2 + √(q²/4 + p³/27)`, `s = p/3r`; `None` if the
/// formula yields no root in `k`. When the square root is missing from `k`
/// the computation is done in `k(√(q²/4 + p³/27))`.
pub fn cardano_root<F: Field>(p: &F, q: &F) -> Option<F> {
    let is_root = |t: &F| (t.cube() + p.clone() * t.clone() + q.clone()).is_zero();
    if q.is_zero() {
        return Some(q.zero_like());
    }
    if p.is_zero() {
        return (-q.clone()).cbrt();
    }
    let half_q = q.clone() / q.from_i64_like(2);
    let disc = half_q.square() + p.cube() / p.from_i64_like(27);
    if let Some(sq) = disc.sqrt() {
        for sign in [sq.clone(), -sq] {
            let Some(r0) = (half_q.clone() + sign).cbrt() else { continue };
            for j in r0.cube_roots_of_unity() {
                let r = r0.clone() * j;
                if r.is_zero() {
                    continue;
                }
                let t = p.clone() / (p.from_i64_like(3) * r.clone()) - r;
                if is_root(&t) {
                    return Some(t);
                }
            }
        }
        return None;
    }
    let ext = disc.adjoin_sqrt().ok()?;
    let one = ext.one.clone();
    let u = half_q.embed(&one) + ext.sqrt.clone();
    let r0 = u.cbrt()?;
    for j in r0.cube_roots_of_unity() {
        let r = r0.clone() * j;
        let t = p.embed(&one) / (p.from_i64_like(3).embed(&one) * r.clone()) - r;
        if let Some(t) = F::descend(&t) {
            if is_root(&t) {
                return Some(t);
            }
        }
    }
    None
}
