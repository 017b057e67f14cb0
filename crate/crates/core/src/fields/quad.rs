use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Extension, Field, FieldDescriptor};
use crate::error::{Error, Result};

/// Base fields that admit quadratic extensions: `Q` and `F_p`.
///
/// The extension arithmetic is generic; the operations collected here need
/// field-specific algorithms.
pub trait BaseField: Field<Ext = QuadExt<Self>> {
    fn ext_descriptor(d: &Self) -> FieldDescriptor;
    fn ext_order(d: &Self) -> Option<u128>;
    fn ext_sqrt(x: &QuadExt<Self>) -> Option<QuadExt<Self>>;
    fn ext_cbrt(x: &QuadExt<Self>) -> Option<QuadExt<Self>>;
    fn ext_square_class_rep(x: &QuadExt<Self>) -> Result<QuadExt<Self>>;
    fn ext_cube_class_rep(x: &QuadExt<Self>) -> Result<QuadExt<Self>>;
    fn ext_hilbert(x: &QuadExt<Self>, delta: &QuadExt<Self>) -> Result<bool>;
}

/// `u + v·w` with `w² = d`, `d` a non-square of the base field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadExt<F> {
    u: F,
    v: F,
    d: F,
}

impl<F: Field> QuadExt<F> {
    pub fn new(u: F, v: F, d: F) -> Self {
        QuadExt { u, v, d }
    }

    /// The zero element of `F(√d)`, after checking that `d` is a non-square.
    pub fn try_field(d: F) -> Result<Self> {
        if d.is_zero() || d.is_square() {
            return Err(Error::InvalidField(format!("{d} is a square")));
        }
        Ok(QuadExt { u: d.zero_like(), v: d.zero_like(), d })
    }

    pub fn u(&self) -> &F {
        &self.u
    }

    pub fn v(&self) -> &F {
        &self.v
    }

    pub fn d(&self) -> &F {
        &self.d
    }

    /// The adjoined square root `w`.
    pub fn w(&self) -> Self {
        QuadExt::new(self.d.zero_like(), self.d.one_like(), self.d.clone())
    }

    pub fn from_base(&self, x: F) -> Self {
        QuadExt::new(x, self.d.zero_like(), self.d.clone())
    }

    pub fn conj(&self) -> Self {
        QuadExt::new(self.u.clone(), -self.v.clone(), self.d.clone())
    }

    pub fn norm(&self) -> F {
        self.u.square() - self.d.clone() * self.v.square()
    }

    pub fn trace(&self) -> F {
        self.u.clone() + self.u.clone()
    }

    pub fn is_pure_imaginary(&self) -> bool {
        self.u.is_zero()
    }

    pub fn is_zero_elem(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    fn check(&self, other: &Self) {
        assert!(self.d == other.d, "operands live in different quadratic extensions");
    }
}

impl<F: Field> Add for QuadExt<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.check(&o);
        QuadExt::new(self.u + o.u, self.v + o.v, self.d)
    }
}

impl<F: Field> Sub for QuadExt<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.check(&o);
        QuadExt::new(self.u - o.u, self.v - o.v, self.d)
    }
}

impl<F: Field> Mul for QuadExt<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.check(&o);
        let u = self.u.clone() * o.u.clone() + self.d.clone() * self.v.clone() * o.v.clone();
        let v = self.u * o.v + self.v * o.u;
        QuadExt::new(u, v, self.d)
    }
}

impl<F: Field> Div for QuadExt<F> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self.check(&o);
        let n = o.norm().inv().expect("division by zero");
        let c = o.conj();
        let p = self * c;
        QuadExt::new(p.u * n.clone(), p.v * n, p.d)
    }
}

impl<F: Field> Neg for QuadExt<F> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExt::new(-self.u, -self.v, self.d)
    }
}

impl<F: Field> fmt::Display for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "{}", self.u);
        }
        let vs = self.v.to_string();
        if self.u.is_zero() {
            return write!(f, "{vs}*w");
        }
        match vs.strip_prefix('-') {
            Some(rest) => write!(f, "{}-{rest}*w", self.u),
            None => write!(f, "{}+{vs}*w", self.u),
        }
    }
}

/// Split `u+v*w` at the last sign that follows a digit.
fn parse_quad<F: Field>(like: &QuadExt<F>, s: &str) -> Result<QuadExt<F>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let base = &like.d;
    if !s.ends_with('w') {
        return Ok(like.from_base(base.parse_like(&s)?));
    }
    let body = &s[..s.len() - 1];
    let body = body.strip_suffix('*').unwrap_or(body);
    let bytes = body.as_bytes();
    let mut split = 0;
    for i in (1..bytes.len()).rev() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1].is_ascii_digit() {
            split = i;
            break;
        }
    }
    let (us, vs) = body.split_at(split);
    let u = if us.is_empty() { base.zero_like() } else { base.parse_like(us)? };
    let v = match vs {
        "" | "+" => base.one_like(),
        "-" => -base.one_like(),
        _ => base.parse_like(vs.strip_prefix('+').unwrap_or(vs))?,
    };
    Ok(QuadExt::new(u, v, base.clone()))
}

impl<F: BaseField> Field for QuadExt<F> {
    type Ext = QuadExt<F>;

    fn descriptor(&self) -> FieldDescriptor {
        F::ext_descriptor(&self.d)
    }

    fn zero_like(&self) -> Self {
        self.from_base(self.d.zero_like())
    }

    fn one_like(&self) -> Self {
        self.from_base(self.d.one_like())
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.from_base(self.d.from_i64_like(n))
    }

    fn is_zero(&self) -> bool {
        self.is_zero_elem()
    }

    fn same_field(&self, other: &Self) -> bool {
        self.d == other.d && self.d.same_field(&other.d)
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero_elem() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.one_like() / self.clone())
    }

    fn sqrt(&self) -> Option<Self> {
        F::ext_sqrt(self)
    }

    fn cbrt(&self) -> Option<Self> {
        F::ext_cbrt(self)
    }

    fn square_class_rep(&self) -> Result<Self> {
        F::ext_square_class_rep(self)
    }

    fn cube_class_rep(&self) -> Result<Self> {
        F::ext_cube_class_rep(self)
    }

    fn is_preferred_sign(&self) -> bool {
        if self.u.is_zero() {
            self.v.is_preferred_sign()
        } else {
            self.u.is_preferred_sign()
        }
    }

    fn hilbert_membership(&self, delta: &Self) -> Result<bool> {
        F::ext_hilbert(self, delta)
    }

    fn field_order(&self) -> Option<u128> {
        F::ext_order(&self.d)
    }

    fn adjoin_sqrt(&self) -> Result<Extension<Self::Ext>> {
        Err(Error::Unsupported(
            "quadratic extensions of a quadratic extension".into(),
        ))
    }

    fn embed(&self, _like: &Self::Ext) -> Self::Ext {
        self.clone()
    }

    fn descend(x: &Self::Ext) -> Option<Self> {
        Some(x.clone())
    }

    fn conj_ext(x: &Self::Ext) -> Self::Ext {
        x.clone()
    }

    fn parse_like(&self, s: &str) -> Result<Self> {
        parse_quad(self, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{Fp, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qx(u: i64, v: i64, d: i64) -> QuadExt<Rational> {
        QuadExt::new(q(u), q(v), q(d))
    }

    #[test]
    fn norm_and_conjugate() {
        assert_eq!(qx(1, 1, 2) * qx(1, -1, 2), qx(-1, 0, 2));
        assert_eq!(qx(3, 2, -1).conj(), qx(3, -2, -1));
        assert_eq!(qx(1, 1, 2).norm(), q(-1));
        assert!(qx(0, 5, -3).is_pure_imaginary());
        assert!(!qx(1, 5, -3).is_pure_imaginary());
    }

    #[test]
    fn field_construction_rejects_squares() {
        assert!(QuadExt::try_field(q(4)).is_err());
        assert!(QuadExt::try_field(q(-3)).is_ok());
        let f5 = Fp::new(2, 5).unwrap();
        assert!(QuadExt::try_field(f5).is_ok());
        assert!(QuadExt::try_field(Fp::new(4, 5).unwrap()).is_err());
    }

    #[test]
    fn inverse() {
        let x = qx(3, 2, 5);
        assert_eq!(x.clone() * x.inv().unwrap(), qx(1, 0, 5));
        assert_eq!(qx(0, 0, 5).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_and_parse_round_trip() {
        let z = qx(0, 0, -3);
        for (x, s) in [
            (qx(3, 2, -3), "3+2*w"),
            (qx(3, -2, -3), "3-2*w"),
            (qx(0, -5, -3), "-5*w"),
            (qx(-7, 0, -3), "-7"),
        ] {
            assert_eq!(x.to_string(), s);
            assert_eq!(z.parse_like(s).unwrap(), x);
        }
        let h = QuadExt::new(Rational::new(1.into(), 2.into()), Rational::new((-3).into(), 4.into()), q(-3));
        assert_eq!(h.to_string(), "1/2-3/4*w");
        assert_eq!(z.parse_like("1/2-3/4*w").unwrap(), h);
        assert_eq!(z.parse_like("-1/2+w").unwrap(), QuadExt::new(Rational::new((-1).into(), 2.into()), q(1), q(-3)));
    }

    #[test]
    fn rational_extension_roots() {
        // (1 + 2w)² and (1 + 2w)³ in Q(√2).
        let y = qx(1, 2, 2);
        let s = (y.clone() * y.clone()).sqrt().unwrap();
        assert!(s == y || s == -y.clone());
        let c = (y.clone() * y.clone() * y.clone()).cbrt().unwrap();
        assert_eq!(c, y);
        assert_eq!(qx(2, 0, 2).sqrt().unwrap().square(), qx(2, 0, 2));
        assert_eq!(qx(1, 1, 2).sqrt(), None);
        assert_eq!(qx(2, 0, 2).cbrt(), None);
        // In Q(√-3) the cube roots of unity exist.
        let j = QuadExt::new(Rational::new((-1).into(), 2.into()), Rational::new(1.into(), 2.into()), q(-3));
        assert_eq!(j.cube(), qx(1, 0, -3));
        assert_eq!(qx(1, 0, -3).cube_roots_of_unity().len(), 3);
    }

    #[test]
    fn finite_extension_roots_exhaustive() {
        let z = QuadExt::try_field(Fp::new(2, 5).unwrap()).unwrap();
        let elems: Vec<_> = (0..5)
            .flat_map(|u| (0..5).map(move |v| (u, v)))
            .map(|(u, v)| QuadExt::new(Fp::new(u, 5).unwrap(), Fp::new(v, 5).unwrap(), *z.d()))
            .collect();
        for x in &elems {
            let has_sqrt = elems.iter().any(|y| y.square() == *x);
            let has_cbrt = elems.iter().any(|y| y.cube() == *x);
            assert_eq!(x.sqrt().is_some(), has_sqrt, "{x}");
            assert_eq!(x.cbrt().is_some(), has_cbrt, "{x}");
            if let Some(r) = x.sqrt() {
                assert_eq!(r.square(), *x);
            }
            if let Some(r) = x.cbrt() {
                assert_eq!(r.cube(), *x);
            }
        }
        assert_eq!(z.field_order(), Some(25));
    }
}
