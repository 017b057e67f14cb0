use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::hilbert::{
    cube_class_int, rational_cbrt, rational_membership, rational_roots_monic_cubic,
    rational_sqrt, square_class_int, strip_small_squares,
};
use super::quad::{BaseField, QuadExt};
use super::{Extension, Field, FieldDescriptor, QuadDescriptor};
use crate::error::{Error, Result};

/// Exact rationals, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

impl Field for Rational {
    type Ext = QuadExt<Rational>;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn same_field(&self, _other: &Self) -> bool {
        true
    }

    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }

    fn cbrt(&self) -> Option<Self> {
        rational_cbrt(self)
    }

    fn square_class_rep(&self) -> Result<Self> {
        Ok(Rational::from_integer(square_class_int(self)?))
    }

    fn cube_class_rep(&self) -> Result<Self> {
        Ok(Rational::from_integer(cube_class_int(self)?))
    }

    fn is_preferred_sign(&self) -> bool {
        self.is_positive()
    }

    fn hilbert_membership(&self, delta: &Self) -> Result<bool> {
        rational_membership(self, delta)
    }

    fn field_order(&self) -> Option<u128> {
        None
    }

    fn adjoin_sqrt(&self) -> Result<Extension<Self::Ext>> {
        if Field::is_zero(self) || rational_sqrt(self).is_some() {
            return Err(Error::InvalidField(format!("{self} is a square")));
        }
        // self = n/m lies in the square class of n·m = D·k².
        let nm = self.numer() * self.denom();
        let d = strip_small_squares(&nm);
        let k = rational_sqrt(&Rational::new(nm, d.clone()))
            .ok_or_else(|| Error::Internal("square part".into()))?;
        let one = QuadExt::new(Rational::one(), Rational::zero(), Rational::from_integer(d));
        let s = k / Rational::from_integer(self.denom().clone());
        let sqrt = QuadExt::new(Rational::zero(), s, one.d().clone());
        Ok(Extension { one, sqrt })
    }

    fn embed(&self, like: &Self::Ext) -> Self::Ext {
        QuadExt::new(self.clone(), Rational::zero(), like.d().clone())
    }

    fn descend(x: &Self::Ext) -> Option<Self> {
        if Zero::is_zero(x.v()) {
            Some(x.u().clone())
        } else {
            None
        }
    }

    fn conj_ext(x: &Self::Ext) -> Self::Ext {
        x.conj()
    }

    fn parse_like(&self, s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

impl BaseField for Rational {
    fn ext_descriptor(d: &Self) -> FieldDescriptor {
        FieldDescriptor::QuadExt(QuadDescriptor::OverRationals { d: d.to_integer() })
    }

    fn ext_order(_d: &Self) -> Option<u128> {
        None
    }

    /// `(p + q√D)² = u + v√D` is solved through the norm: `p² = (u ± √N)/2`.
    fn ext_sqrt(x: &QuadExt<Self>) -> Option<QuadExt<Self>> {
        let (u, v, d) = (x.u(), x.v(), x.d());
        let zero = Rational::zero();
        if Zero::is_zero(v) {
            if let Some(r) = rational_sqrt(u) {
                return Some(QuadExt::new(r, zero, d.clone()));
            }
            let r = rational_sqrt(&(u / d))?;
            return Some(QuadExt::new(zero, r, d.clone()));
        }
        let m = rational_sqrt(&x.norm())?;
        let two = Rational::from_integer(2.into());
        for cand in [(u + &m) / &two, (u - &m) / &two] {
            if let Some(p) = rational_sqrt(&cand) {
                if Zero::is_zero(&p) {
                    continue;
                }
                let q = v / (&two * &p);
                let r = QuadExt::new(p, q, d.clone());
                if r.clone() * r.clone() == *x {
                    return Some(r);
                }
            }
        }
        None
    }

    /// With `y = p + q√D`, `y³ = x` forces `N(y) = ∛N(x)` and `s = 2p` to be a
    /// rational root of `s³ - 3N(y)s - 2u`.
    fn ext_cbrt(x: &QuadExt<Self>) -> Option<QuadExt<Self>> {
        if x.is_zero_elem() {
            return Some(x.clone());
        }
        let (u, d) = (x.u(), x.d());
        let n = rational_cbrt(&x.norm())?;
        let two = Rational::from_integer(2.into());
        let three = Rational::from_integer(3.into());
        let roots = rational_roots_monic_cubic(&Rational::zero(), &(-(&three * &n)), &(-(&two * u)));
        for s in roots {
            let p = &s / &two;
            let q2 = (&p * &p - &n) / d;
            let Some(q) = rational_sqrt(&q2) else { continue };
            for q in [q.clone(), -q] {
                let y = QuadExt::new(p.clone(), q, d.clone());
                if y.clone() * y.clone() * y.clone() == *x {
                    return Some(y);
                }
            }
        }
        None
    }

    fn ext_square_class_rep(x: &QuadExt<Self>) -> Result<QuadExt<Self>> {
        if x.is_zero_elem() {
            return Err(Error::ZeroElement);
        }
        Ok(x.clone())
    }

    fn ext_cube_class_rep(x: &QuadExt<Self>) -> Result<QuadExt<Self>> {
        if x.is_zero_elem() {
            return Err(Error::ZeroElement);
        }
        // Rational elements still get the canonical rational representative.
        match <Rational as Field>::descend(x) {
            Some(r) => Ok(<Rational as Field>::cube_class_rep(&r)
                .map(|c| Field::embed(&c, x))
                .unwrap_or_else(|_| x.clone())),
            None => Ok(x.clone()),
        }
    }

    fn ext_hilbert(_x: &QuadExt<Self>, _delta: &QuadExt<Self>) -> Result<bool> {
        Err(Error::Unsupported(
            "k*_Δ membership over quadratic extensions of Q".into(),
        ))
    }
}
