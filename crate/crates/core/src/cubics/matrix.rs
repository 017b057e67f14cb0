use std::fmt;

use crate::error::{Error, Result};
use crate::fields::Field;

use super::LinearForm;

/// A 2×2 matrix `[[a, b], [c, d]]`; group elements of `Gl(2, k)` and, when
/// traceless, elements of `sl(2, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix2<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
}

impl<F: Field> Matrix2<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn identity(like: &F) -> Self {
        Matrix2::new(like.one_like(), like.zero_like(), like.zero_like(), like.one_like())
    }

    /// The Weyl element `[[0, -1], [1, 0]]`, acting on cubics as `J`.
    pub fn weyl(like: &F) -> Self {
        Matrix2::new(like.zero_like(), -like.one_like(), like.one_like(), like.zero_like())
    }

    pub fn diag(s: F, t: F) -> Self {
        let z = s.zero_like();
        Matrix2::new(s, z.clone(), z, t)
    }

    pub fn det(&self) -> F {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> F {
        self.a.clone() + self.d.clone()
    }

    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        let det = self.det();
        let di = det.inv().map_err(|_| Error::SingularMatrix)?;
        Ok(Matrix2::new(
            self.d.clone() * di.clone(),
            -self.b.clone() * di.clone(),
            -self.c.clone() * di.clone(),
            self.a.clone() * di,
        ))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Matrix2::new(
            self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Matrix2::new(
            self.a.clone() - o.a.clone(),
            self.b.clone() - o.b.clone(),
            self.c.clone() - o.c.clone(),
            self.d.clone() - o.d.clone(),
        )
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix2::new(
            self.a.clone() * s.clone(),
            self.b.clone() * s.clone(),
            self.c.clone() * s.clone(),
            self.d.clone() * s.clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// The substitution `x ↦ (δx - βy)/det, y ↦ (-γx + αy)/det` as a pair of
    /// linear forms (images of `x` and `y`).
    pub fn substitution(&self) -> Result<(LinearForm<F>, LinearForm<F>)> {
        let di = self.det().inv().map_err(|_| Error::SingularMatrix)?;
        let x = LinearForm::new(self.d.clone() * di.clone(), -self.b.clone() * di.clone());
        let y = LinearForm::new(-self.c.clone() * di.clone(), self.a.clone() * di);
        Ok((x, y))
    }
}

impl<F: Field> fmt::Display for Matrix2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// `[[α, β], [γ, -α]]`, an element of `sl(2, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TracelessMatrix<F> {
    pub alpha: F,
    pub beta: F,
    pub gamma: F,
}

impl<F: Field> TracelessMatrix<F> {
    pub fn new(alpha: F, beta: F, gamma: F) -> Self {
        TracelessMatrix { alpha, beta, gamma }
    }

    pub fn zero_like(like: &F) -> Self {
        TracelessMatrix::new(like.zero_like(), like.zero_like(), like.zero_like())
    }

    pub fn from_matrix(m: &Matrix2<F>) -> Result<Self> {
        if !m.trace().is_zero() {
            return Err(Error::NotTraceless);
        }
        Ok(TracelessMatrix::new(m.a.clone(), m.b.clone(), m.c.clone()))
    }

    pub fn to_matrix(&self) -> Matrix2<F> {
        Matrix2::new(
            self.alpha.clone(),
            self.beta.clone(),
            self.gamma.clone(),
            -self.alpha.clone(),
        )
    }

    /// `-α² - βγ`.
    pub fn det(&self) -> F {
        -self.alpha.square() - self.beta.clone() * self.gamma.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.det().is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        TracelessMatrix::new(
            self.alpha.clone() + o.alpha.clone(),
            self.beta.clone() + o.beta.clone(),
            self.gamma.clone() + o.gamma.clone(),
        )
    }

    pub fn scale(&self, s: &F) -> Self {
        TracelessMatrix::new(
            self.alpha.clone() * s.clone(),
            self.beta.clone() * s.clone(),
            self.gamma.clone() * s.clone(),
        )
    }

    /// Infinitesimal action on linear forms:
    /// `X·(ex + fy) = (-αe - γf)x + (-βe + αf)y`.
    pub fn act_linear(&self, l: &LinearForm<F>) -> LinearForm<F> {
        let (e, f) = (l.e.clone(), l.f.clone());
        LinearForm::new(
            -self.alpha.clone() * e.clone() - self.gamma.clone() * f.clone(),
            -self.beta.clone() * e + self.alpha.clone() * f,
        )
    }

    /// Trace of the matrix product `self · o`.
    pub fn trace_product(&self, o: &Self) -> F {
        let two = self.alpha.from_i64_like(2);
        two * self.alpha.clone() * o.alpha.clone()
            + self.beta.clone() * o.gamma.clone()
            + self.gamma.clone() * o.beta.clone()
    }

    /// `[self, o]`, again traceless.
    pub fn bracket(&self, o: &Self) -> Self {
        let p = self.to_matrix().mul(&o.to_matrix());
        let q = o.to_matrix().mul(&self.to_matrix());
        TracelessMatrix::from_matrix(&p.sub(&q)).expect("commutators are traceless")
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Matrix2<F>) -> Result<Self> {
        let m = g.mul(&self.to_matrix()).mul(&g.inv()?);
        TracelessMatrix::from_matrix(&m)
    }

    /// The cofactor matrix `[[-α, -γ], [-β, α]]`.
    pub fn cofactor(&self) -> Self {
        TracelessMatrix::new(-self.alpha.clone(), -self.gamma.clone(), -self.beta.clone())
    }
}

impl<F: Field> fmt::Display for TracelessMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_matrix())
    }
}
