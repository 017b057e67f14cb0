//! Binary cubics `ax³ + 3bx²y + 3cxy² + dy³` and their symplectic covariants.
//!
//! Coefficients are stored as `(a, b, c, d)` with the binomial 3's factored
//! out; [`BinaryCubic::from_raw`] and [`BinaryCubic::raw`] convert to and from
//! the plain coefficients `(p0, p1, p2, p3)` of `p0x³ + p1x²y + p2xy² + p3y³`.

mod forms;
mod matrix;

pub use forms::{divide_linear, format_poly, BinaryQuadratic, LinearForm};
pub use matrix::{Matrix2, TracelessMatrix};

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fields::Field;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryCubic<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
}

/// A linear endomorphism of the space of cubics, as a 4×4 matrix acting on
/// `(a, b, c, d)` column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicMap<F> {
    pub m: [[F; 4]; 4],
}

impl<F: Field> CubicMap<F> {
    pub fn apply(&self, p: &BinaryCubic<F>) -> BinaryCubic<F> {
        let v = p.abcd();
        let row = |i: usize| {
            let mut acc = v[0].zero_like();
            for (j, vj) in v.iter().enumerate() {
                acc = acc + self.m[i][j].clone() * vj.clone();
            }
            acc
        };
        BinaryCubic::new(row(0), row(1), row(2), row(3))
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(|x| x.is_zero())
    }
}

/// Product of three linear forms, in raw coefficients.
fn raw_product3<F: Field>(l1: &LinearForm<F>, l2: &LinearForm<F>, l3: &LinearForm<F>) -> [F; 4] {
    l1.mul(l2).mul_linear(l3)
}

impl<F: Field> BinaryCubic<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Self {
        BinaryCubic { a, b, c, d }
    }

    pub fn zero_like(like: &F) -> Self {
        let z = like.zero_like();
        BinaryCubic::new(z.clone(), z.clone(), z.clone(), z)
    }

    /// From plain coefficients `p0x³ + p1x²y + p2xy² + p3y³`.
    pub fn from_raw(p: [F; 4]) -> Self {
        let third = p[0].from_i64_like(3).inv().expect("char != 3");
        let [p0, p1, p2, p3] = p;
        BinaryCubic::new(p0, p1 * third.clone(), p2 * third, p3)
    }

    /// Plain coefficients `(p0, p1, p2, p3)`.
    /// Parse `p0,p1,p2,p3`, the raw coefficients, in the field of `like`.
    pub fn parse_raw(like: &F, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [p0, p1, p2, p3] = parts.as_slice() else {
            return Err(Error::Parse(format!("expected four comma-separated coefficients, got '{s}'")));
        };
        Ok(BinaryCubic::from_raw([
            like.parse_like(p0)?,
            like.parse_like(p1)?,
            like.parse_like(p2)?,
            like.parse_like(p3)?,
        ]))
    }

    pub fn raw(&self) -> [F; 4] {
        let three = self.a.from_i64_like(3);
        [
            self.a.clone(),
            self.b.clone() * three.clone(),
            self.c.clone() * three,
            self.d.clone(),
        ]
    }

    pub fn abcd(&self) -> [F; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    pub fn like(&self) -> &F {
        &self.a
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn same_field(&self, o: &Self) -> bool {
        self.a.same_field(&o.a)
    }

    pub fn check_same_field(&self, o: &Self) -> Result<()> {
        if self.same_field(o) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        BinaryCubic::new(
            self.a.clone() + o.a.clone(),
            self.b.clone() + o.b.clone(),
            self.c.clone() + o.c.clone(),
            self.d.clone() + o.d.clone(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        BinaryCubic::new(-self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        BinaryCubic::new(
            self.a.clone() * s.clone(),
            self.b.clone() * s.clone(),
            self.c.clone() * s.clone(),
            self.d.clone() * s.clone(),
        )
    }

    /// `(ex + fy)³`.
    pub fn cube_of(l: &LinearForm<F>) -> Self {
        let (e, f) = (l.e.clone(), l.f.clone());
        BinaryCubic::new(
            e.cube(),
            e.square() * f.clone(),
            e * f.square(),
            f.cube(),
        )
    }

    pub fn product(l1: &LinearForm<F>, l2: &LinearForm<F>, l3: &LinearForm<F>) -> Self {
        BinaryCubic::from_raw(raw_product3(l1, l2, l3))
    }

    pub fn linear_times_quadratic(l: &LinearForm<F>, q: &BinaryQuadratic<F>) -> Self {
        BinaryCubic::from_raw(q.mul_linear(l))
    }

    /// The symplectic form `ω(P, P') = ad' - da' - 3bc' + 3cb'`.
    pub fn omega(&self, o: &Self) -> F {
        let three = self.a.from_i64_like(3);
        self.a.clone() * o.d.clone() - self.d.clone() * o.a.clone()
            - three.clone() * self.b.clone() * o.c.clone()
            + three * self.c.clone() * o.b.clone()
    }

    /// `ω` with a field check.
    pub fn try_omega(&self, o: &Self) -> Result<F> {
        self.check_same_field(o)?;
        Ok(self.omega(o))
    }

    /// `P(v1, v2)`, by direct substitution; in debug builds also through the
    /// pairing `ω(P, ṽ³)` with `ṽ = -v2·x + v1·y`.
    pub fn evaluate(&self, v1: &F, v2: &F) -> F {
        let [p0, p1, p2, p3] = self.raw();
        let direct = p0 * v1.cube()
            + p1 * v1.square() * v2.clone()
            + p2 * v1.clone() * v2.square()
            + p3 * v2.cube();
        debug_assert!(direct == self.evaluate_by_pairing(v1, v2));
        direct
    }

    pub fn evaluate_by_pairing(&self, v1: &F, v2: &F) -> F {
        let tilde = LinearForm::new(-v2.clone(), v1.clone());
        self.omega(&BinaryCubic::cube_of(&tilde))
    }

    /// The moment map: `α = ad - bc`, `β = 2(bd - c²)`, `γ = 2(b² - ac)`.
    pub fn moment(&self) -> TracelessMatrix<F> {
        let two = self.a.from_i64_like(2);
        TracelessMatrix::new(
            self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone(),
            two.clone() * (self.b.clone() * self.d.clone() - self.c.square()),
            two * (self.b.square() - self.a.clone() * self.c.clone()),
        )
    }

    /// The polarization `B_μ(P, P') = ½(μ(P + P') - μ(P) - μ(P'))`.
    pub fn b_mu(&self, o: &Self) -> TracelessMatrix<F> {
        let half = self.a.from_i64_like(2).inv().expect("char != 2");
        let two = self.a.from_i64_like(2);
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        TracelessMatrix::new(
            half * (a.clone() * d2.clone() + d.clone() * a2.clone()
                - b.clone() * c2.clone()
                - c.clone() * b2.clone()),
            b.clone() * d2.clone() + d.clone() * b2.clone() - two.clone() * c.clone() * c2.clone(),
            two * b.clone() * b2.clone() - (a.clone() * c2.clone() + c.clone() * a2.clone()),
        )
    }

    pub fn try_b_mu(&self, o: &Self) -> Result<TracelessMatrix<F>> {
        self.check_same_field(o)?;
        Ok(self.b_mu(o))
    }

    /// The quartic invariant `Q_n = a²d² - 3b²c² - 6abcd + 4b³d + 4ac³`;
    /// equals `-det μ(P)`.
    pub fn qn(&self) -> F {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let k = |n: i64| a.from_i64_like(n);
        let closed = a.square() * d.square() - k(3) * b.square() * c.square()
            - k(6) * a.clone() * b.clone() * c.clone() * d.clone()
            + k(4) * b.cube() * d.clone()
            + k(4) * a.clone() * c.cube();
        debug_assert!(closed == -self.moment().det());
        closed
    }

    /// The derivation action of `ξ ∈ sl(2, k)`:
    /// `α(-x∂x + y∂y) - βy∂x - γx∂y`.
    pub fn act_algebra(&self, xi: &TracelessMatrix<F>) -> Self {
        let [p0, p1, p2, p3] = self.raw();
        let (al, be, ga) = (&xi.alpha, &xi.beta, &xi.gamma);
        let k = |n: i64| self.a.from_i64_like(n);
        BinaryCubic::from_raw([
            -k(3) * p0.clone() * al.clone() - p1.clone() * ga.clone(),
            -p1.clone() * al.clone() - k(3) * p0 * be.clone() - k(2) * p2.clone() * ga.clone(),
            p2.clone() * al.clone() - k(2) * p1 * be.clone() - k(3) * p3.clone() * ga.clone(),
            k(3) * p3 * al.clone() - p2 * be.clone(),
        ])
    }

    /// [`BinaryCubic::act_algebra`] for a general matrix, which must be traceless.
    pub fn act_algebra_matrix(&self, m: &Matrix2<F>) -> Result<Self> {
        Ok(self.act_algebra(&TracelessMatrix::from_matrix(m)?))
    }

    /// The cubic covariant `Ψ(P) = μ(P)·P`.
    pub fn psi(&self) -> Self {
        self.act_algebra(&self.moment())
    }

    /// Substitute `x ↦ sx`, `y ↦ sy` for linear forms `sx`, `sy`.
    pub fn substitute(&self, sx: &LinearForm<F>, sy: &LinearForm<F>) -> Self {
        let [p0, p1, p2, p3] = self.raw();
        let terms = [
            (p0, raw_product3(sx, sx, sx)),
            (p1, raw_product3(sx, sx, sy)),
            (p2, raw_product3(sx, sy, sy)),
            (p3, raw_product3(sy, sy, sy)),
        ];
        let mut acc: [F; 4] = std::array::from_fn(|_| self.a.zero_like());
        for (coef, mono) in terms {
            for i in 0..4 {
                acc[i] = acc[i].clone() + coef.clone() * mono[i].clone();
            }
        }
        BinaryCubic::from_raw(acc)
    }

    /// The group action `x ↦ (δx - βy)/det g`, `y ↦ (-γx + αy)/det g`.
    pub fn act_group(&self, g: &Matrix2<F>) -> Result<Self> {
        let (sx, sy) = g.substitution()?;
        Ok(self.substitute(&sx, &sy))
    }

    /// [`BinaryCubic::act_group`] restricted to `Sl(2, k)`.
    pub fn act_sl2(&self, g: &Matrix2<F>) -> Result<Self> {
        if !g.is_sl2() {
            return Err(Error::NotSl2);
        }
        self.act_group(g)
    }

    /// `J·P = -dx³ + 3cx²y - 3bxy² + ay³`, the action of the Weyl element.
    pub fn j_involution(&self) -> Self {
        BinaryCubic::new(-self.d.clone(), self.c.clone(), -self.b.clone(), self.a.clone())
    }
}

/// `M⊗³`: the linear map on cubics with `M⊗³(φ³) = (M·φ)³`, built column by
/// column from the substitution `x ↦ M·x`, `y ↦ M·y`.
pub fn sym_cube_matrix<F: Field>(m: &TracelessMatrix<F>) -> CubicMap<F> {
    let like = &m.alpha;
    let sx = m.act_linear(&LinearForm::x(like));
    let sy = m.act_linear(&LinearForm::y(like));
    let mut cols: Vec<[F; 4]> = Vec::new();
    for j in 0..4 {
        let mut basis: [F; 4] = std::array::from_fn(|_| like.zero_like());
        basis[j] = like.one_like();
        let e = BinaryCubic::new(basis[0].clone(), basis[1].clone(), basis[2].clone(), basis[3].clone());
        cols.push(e.substitute(&sx, &sy).abcd());
    }
    CubicMap {
        m: std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone())),
    }
}

/// `{"raw": [...], "abcd": [...], "field": "<descriptor>"}` with every
/// coefficient rendered exactly as a string.
impl<F: Field> Serialize for BinaryCubic<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs = |v: [F; 4]| v.map(|x| x.to_string());
        let mut st = s.serialize_struct("BinaryCubic", 3)?;
        st.serialize_field("raw", &strs(self.raw()))?;
        st.serialize_field("abcd", &strs(self.abcd()))?;
        st.serialize_field("field", &self.a.descriptor())?;
        st.end()
    }
}

impl<F: Field> fmt::Display for BinaryCubic<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(&self.raw()))
    }
}

#[cfg(test)]
mod tests;
