use std::fmt;

use crate::cubics::{BinaryCubic, LinearForm};
use crate::error::{Error, Result};
use crate::fields::{CubeClass, Field};

use super::{
    classify, conj_cubic, descend_cubic, embed_cubic, i_t, sum_of_cubes, Stratum, SumOfCubes,
};

/// Complete `Sl(2, k)` invariant of a nonzero cubic.
///
/// For the generic strata the pair `(q, c)` is taken modulo the twist
/// `(q, c) ~ (-q, c⁻¹)`; equality ([`PartialEq`]) respects the twist and
/// [`OrbitInvariant::normalized`] picks the representative whose `q` has the
/// preferred sign.
#[derive(Debug, Clone)]
pub enum OrbitInvariant<F: Field> {
    Triple(CubeClass<F>),
    Double,
    GenSquare { q: F, class: CubeClass<F> },
    /// `q` is pure imaginary and `class` is unitary in `k(√Q_n)`.
    GenNonSquare { q: F::Ext, class: CubeClass<F::Ext> },
}

fn twisted_eq<E: Field>(q1: &E, c1: &CubeClass<E>, q2: &E, c2: &CubeClass<E>) -> bool {
    if !q1.same_field(q2) {
        return false;
    }
    (q1 == q2 && c1 == c2) || (*q1 == -q2.clone() && *c1 == c2.inverse())
}

fn normalize<E: Field>(q: &E, c: &CubeClass<E>) -> (E, CubeClass<E>) {
    if q.is_preferred_sign() {
        (q.clone(), c.clone())
    } else {
        (-q.clone(), c.inverse())
    }
}

impl<F: Field> OrbitInvariant<F> {
    pub fn normalized(&self) -> Self {
        match self {
            OrbitInvariant::GenSquare { q, class } => {
                let (q, class) = normalize(q, class);
                OrbitInvariant::GenSquare { q, class }
            }
            OrbitInvariant::GenNonSquare { q, class } => {
                let (q, class) = normalize(q, class);
                OrbitInvariant::GenNonSquare { q, class }
            }
            other => other.clone(),
        }
    }

    /// The invariant of `g·P` for `g` of determinant `det`: `q ↦ det⁻³q`.
    pub fn scaled_by_det(&self, det: &F) -> Result<Self> {
        let s = det.cube().inv()?;
        Ok(match self {
            OrbitInvariant::GenSquare { q, class } => OrbitInvariant::GenSquare {
                q: q.clone() * s,
                class: class.clone(),
            },
            OrbitInvariant::GenNonSquare { q, class } => OrbitInvariant::GenNonSquare {
                q: q.clone() * s.embed(q),
                class: class.clone(),
            },
            other => other.clone(),
        })
    }

    /// The class paired with `q` itself (not `-q`).
    fn class_at_q<E: Field>(q_inv: &E, class: &CubeClass<E>, q: &E) -> Result<CubeClass<E>> {
        if q_inv == q {
            Ok(class.clone())
        } else if *q_inv == -q.clone() {
            Ok(class.inverse())
        } else {
            Err(Error::DiscriminantMismatch)
        }
    }

    /// Whether the orbit is the identity of the orbit group, i.e. the
    /// orbit of reducible cubics.
    pub fn is_trivial_class(&self) -> bool {
        match self {
            OrbitInvariant::GenSquare { class, .. } => class.is_identity(),
            OrbitInvariant::GenNonSquare { class, .. } => class.is_identity(),
            _ => true,
        }
    }
}

impl<F: Field> PartialEq for OrbitInvariant<F> {
    fn eq(&self, o: &Self) -> bool {
        use OrbitInvariant::*;
        match (self, o) {
            (Triple(a), Triple(b)) => a.rep().same_field(b.rep()) && a == b,
            (Double, Double) => true,
            (GenSquare { q: q1, class: c1 }, GenSquare { q: q2, class: c2 }) => {
                twisted_eq(q1, c1, q2, c2)
            }
            (GenNonSquare { q: q1, class: c1 }, GenNonSquare { q: q2, class: c2 }) => {
                twisted_eq(q1, c1, q2, c2)
            }
            _ => false,
        }
    }
}

impl<F: Field> fmt::Display for OrbitInvariant<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.normalized() {
            OrbitInvariant::Triple(c) => write!(f, "{c}"),
            OrbitInvariant::Double => write!(f, "double"),
            OrbitInvariant::GenSquare { q, class } => write!(f, "[{q}, {class}]"),
            OrbitInvariant::GenNonSquare { q, class } => write!(f, "[{q}, {class}]"),
        }
    }
}

/// `[ω(T1, T2), [λ1/λ2]]` from a sum-of-cubes decomposition.
fn pair_of<E: Field>(s: &SumOfCubes<E>) -> Result<(E, CubeClass<E>)> {
    let q = s.t1.omega(&s.t2);
    let class = CubeClass::of(&(s.lambda1.clone() / s.lambda2.clone()))?;
    Ok(normalize(&q, &class))
}

/// Invariant of a cubic whose discriminant is a nonzero square.
pub fn i_o1<F: Field>(p: &BinaryCubic<F>) -> Result<OrbitInvariant<F>> {
    let Stratum::GenericSquare { q } = classify(p) else {
        return Err(Error::NotGenericSquare);
    };
    let (q, class) = pair_of(&sum_of_cubes(p, &q)?)?;
    Ok(OrbitInvariant::GenSquare { q, class })
}

/// Invariant of a cubic whose discriminant is not a square, computed in
/// `k(√Q_n(P))`.
pub fn i_o1_hat<F: Field>(p: &BinaryCubic<F>) -> Result<OrbitInvariant<F>> {
    if !matches!(classify(p), Stratum::GenericNonSquare { .. }) {
        return Err(Error::NotGenericNonSquare);
    }
    let ext = p.qn().adjoin_sqrt()?;
    i_o1_hat_with(p, &ext.one, &ext.sqrt)
}

/// [`i_o1_hat`] in a chosen extension, with `q` a square root of `Q_n(P)`
/// there.
pub fn i_o1_hat_with<F: Field>(
    p: &BinaryCubic<F>,
    one: &F::Ext,
    q: &F::Ext,
) -> Result<OrbitInvariant<F>> {
    let pe = embed_cubic(p, one);
    let s = sum_of_cubes(&pe, q)?;
    if conj_cubic::<F>(&s.t1) != s.t2 {
        return Err(Error::Internal("summands are not Galois conjugate".into()));
    }
    let (q, class) = pair_of(&s)?;
    if F::conj_ext(&q) != -q.clone() {
        return Err(Error::Internal("invariant q is not pure imaginary".into()));
    }
    Ok(OrbitInvariant::GenNonSquare { q, class })
}

/// The invariant of any nonzero cubic.
pub fn invariant<F: Field>(p: &BinaryCubic<F>) -> Result<OrbitInvariant<F>> {
    match classify(p) {
        Stratum::Zero => Err(Error::ZeroCubic),
        Stratum::TripleRoot => Ok(OrbitInvariant::Triple(i_t(p)?)),
        Stratum::DoubleRoot => Ok(OrbitInvariant::Double),
        Stratum::GenericSquare { .. } => i_o1(p),
        Stratum::GenericNonSquare { .. } => i_o1_hat(p),
    }
}

/// The `Gl(2, k)` invariant: the generic pairs `(q, c)` are taken modulo
/// `q ↦ t³q` and `c ↦ c⁻¹`.
#[derive(Debug, Clone)]
pub struct GlInvariant<F: Field>(pub OrbitInvariant<F>);

impl<F: Field> PartialEq for GlInvariant<F> {
    fn eq(&self, o: &Self) -> bool {
        use OrbitInvariant::*;
        match (&self.0, &o.0) {
            (GenSquare { q: q1, class: c1 }, GenSquare { q: q2, class: c2 }) => {
                q1.same_field(q2)
                    && (q2.clone() / q1.clone()).is_cube()
                    && (c1 == c2 || *c1 == c2.inverse())
            }
            (GenNonSquare { q: q1, class: c1 }, GenNonSquare { q: q2, class: c2 }) => {
                q1.same_field(q2)
                    && F::descend(&(q2.clone() / q1.clone())).is_some_and(|r| r.is_cube())
                    && (c1 == c2 || *c1 == c2.inverse())
            }
            (a, b) => a == b,
        }
    }
}

pub fn gl_invariant<F: Field>(p: &BinaryCubic<F>) -> Result<GlInvariant<F>> {
    Ok(GlInvariant(invariant(p)?))
}

fn check_pair<F: Field>(p1: &BinaryCubic<F>, p2: &BinaryCubic<F>) -> Result<()> {
    p1.check_same_field(p2)?;
    if p1.is_zero() || p2.is_zero() {
        return Err(Error::ZeroCubic);
    }
    Ok(())
}

pub fn same_sl2_orbit<F: Field>(p1: &BinaryCubic<F>, p2: &BinaryCubic<F>) -> Result<bool> {
    check_pair(p1, p2)?;
    let (s1, s2) = (classify(p1), classify(p2));
    if !s1.same_kind(&s2) {
        return Ok(false);
    }
    if matches!(s1, Stratum::GenericNonSquare { .. }) && p1.qn() != p2.qn() {
        return Ok(false);
    }
    Ok(invariant(p1)? == invariant(p2)?)
}

pub fn same_gl2_orbit<F: Field>(p1: &BinaryCubic<F>, p2: &BinaryCubic<F>) -> Result<bool> {
    check_pair(p1, p2)?;
    let (s1, s2) = (classify(p1), classify(p2));
    if !s1.same_kind(&s2) {
        return Ok(false);
    }
    if let Stratum::GenericNonSquare { .. } = s1 {
        // Both invariants are computed in the extension of p1, which also
        // splits Q_n(p2) when the two discriminants differ by a square.
        let (qn1, qn2) = (p1.qn(), p2.qn());
        let Some(r) = (qn2 / qn1.clone()).sqrt() else {
            return Ok(false);
        };
        let ext = qn1.adjoin_sqrt()?;
        let i1 = i_o1_hat_with(p1, &ext.one, &ext.sqrt)?;
        let i2 = i_o1_hat_with(p2, &ext.one, &(ext.sqrt.clone() * r.embed(&ext.one)))?;
        return Ok(GlInvariant(i1) == GlInvariant(i2));
    }
    Ok(gl_invariant(p1)? == gl_invariant(p2)?)
}

/// `(1/(qα))x³ + q²αy³`, whose invariant is `[q, [α]]`.
pub fn square_representative<F: Field>(q: &F, alpha: &F) -> Result<BinaryCubic<F>> {
    let z = q.zero_like();
    Ok(BinaryCubic::new(
        (q.clone() * alpha.clone()).inv()?,
        z.clone(),
        z,
        q.square() * alpha.clone(),
    ))
}

/// A cubic over `k` with invariant `[q, s]`, for `q` pure imaginary in the
/// extension and `s` unitary: `(λ/q)α³ - (λ̄/q)ᾱ³` with `[λ] = s̄`,
/// `λλ̄ = r³` and `α = -(q/2r)x + y`.
pub fn nonsquare_representative<F: Field>(q: &F::Ext, s: &CubeClass<F::Ext>) -> Result<BinaryCubic<F>> {
    let lambda = F::conj_ext(s.rep());
    let norm = lambda.clone() * F::conj_ext(&lambda);
    let not_unitary = || Error::Internal("class is not unitary".into());
    let r = F::descend(&norm).and_then(|n| n.cbrt()).ok_or_else(not_unitary)?;
    let one = q.one_like();
    let two_r = r.from_i64_like(2).embed(&one) * r.embed(&one);
    let alpha = LinearForm::new(-(q.clone() / two_r), one);
    let t = BinaryCubic::cube_of(&alpha).scale(&(lambda / q.clone()));
    let p = t.add(&conj_cubic::<F>(&t));
    descend_cubic::<F>(&p).ok_or_else(not_unitary)
}

/// A representative of the product of the orbits of `p1` and `p2` in the
/// group of orbits with `Q_n = m`: the invariants `[q, α]` and `[q, β]`
/// compose to `[q, αβ]`.
pub fn orbit_compose<F: Field>(
    m: &F,
    p1: &BinaryCubic<F>,
    p2: &BinaryCubic<F>,
) -> Result<BinaryCubic<F>> {
    p1.check_same_field(p2)?;
    if !m.same_field(&p1.a) {
        return Err(Error::FieldMismatch);
    }
    if m.is_zero() {
        return Err(Error::NotGeneric);
    }
    if p1.qn() != *m || p2.qn() != *m {
        return Err(Error::DiscriminantMismatch);
    }
    match m.canonical_sqrt() {
        Some(q) => {
            let class_of = |p: &BinaryCubic<F>| -> Result<CubeClass<F>> {
                match i_o1(p)? {
                    OrbitInvariant::GenSquare { q: qi, class } => {
                        OrbitInvariant::<F>::class_at_q(&qi, &class, &q)
                    }
                    _ => Err(Error::NotGenericSquare),
                }
            };
            let c = class_of(p1)?.mul(&class_of(p2)?);
            square_representative(&q, c.rep())
        }
        None => {
            let ext = m.adjoin_sqrt()?;
            let q = ext.sqrt;
            let class_of = |p: &BinaryCubic<F>| -> Result<CubeClass<F::Ext>> {
                match i_o1_hat_with(p, &ext.one, &q)? {
                    OrbitInvariant::GenNonSquare { q: qi, class } => {
                        OrbitInvariant::<F>::class_at_q(&qi, &class, &q)
                    }
                    _ => Err(Error::NotGenericNonSquare),
                }
            };
            let c = class_of(p1)?.mul(&class_of(p2)?);
            nonsquare_representative::<F>(&q, &c)
        }
    }
}
