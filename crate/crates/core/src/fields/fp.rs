use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::finite::{is_prime_u64, mul_mod, pow_mod, rth_root};
use super::quad::{BaseField, QuadExt};
use super::rational::parse_rational;
use super::{Extension, Field, FieldDescriptor, QuadDescriptor};
use crate::error::{Error, Result};

/// A residue modulo a prime `p ∉ {2, 3}`, stored in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    /// The residue of `v` modulo `p`, after validating `p`.
    pub fn new(v: u64, p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p == 2 || p == 3 {
            return Err(Error::InvalidField(format!("characteristic {p} is excluded")));
        }
        Ok(Fp { v: v % p, p })
    }

    pub fn zero(p: u64) -> Result<Self> {
        Fp::new(0, p)
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn raw(&self, v: u64) -> Fp {
        Fp { v, p: self.p }
    }

    /// All `p` elements in increasing order.
    pub fn elements(&self) -> Vec<Fp> {
        (0..self.p).map(|v| self.raw(v)).collect()
    }

    /// The least quadratic non-residue.
    pub fn least_nonresidue(&self) -> Fp {
        (2..self.p)
            .map(|v| self.raw(v))
            .find(|x| !x.is_square())
            .expect("odd prime has non-residues")
    }

    fn check(&self, o: &Fp) {
        assert!(self.p == o.p, "operands live in F_{} and F_{}", self.p, o.p);
    }

    fn candidates(&self) -> impl Iterator<Item = Fp> + '_ {
        (2..self.p).map(|v| self.raw(v))
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        self.check(&o);
        self.raw(((self.v as u128 + o.v as u128) % self.p as u128) as u64)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        self.check(&o);
        self.raw(((self.v as u128 + (self.p - o.v) as u128) % self.p as u128) as u64)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        self.check(&o);
        self.raw(mul_mod(self.v, o.v, self.p))
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Fp) -> Fp {
        self * o.inv().expect("division by zero")
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        self.raw((self.p - self.v) % self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Field for Fp {
    type Ext = QuadExt<Fp>;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::PrimeField { p: self.p }
    }

    fn zero_like(&self) -> Self {
        self.raw(0)
    }

    fn one_like(&self) -> Self {
        self.raw(1)
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.raw((n as i128).rem_euclid(self.p as i128) as u64)
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn same_field(&self, other: &Self) -> bool {
        self.p == other.p
    }

    fn inv(&self) -> Result<Self> {
        if self.v == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.raw(pow_mod(self.v, self.p - 2, self.p)))
    }

    fn sqrt(&self) -> Option<Self> {
        rth_root(self, 2, (self.p - 1) as u128, self.candidates())
    }

    fn cbrt(&self) -> Option<Self> {
        rth_root(self, 3, (self.p - 1) as u128, self.candidates())
    }

    /// 1 or the least non-residue.
    fn square_class_rep(&self) -> Result<Self> {
        if self.v == 0 {
            return Err(Error::ZeroElement);
        }
        Ok(if self.is_square() { self.one_like() } else { self.least_nonresidue() })
    }

    /// The least residue in the class.
    fn cube_class_rep(&self) -> Result<Self> {
        if self.v == 0 {
            return Err(Error::ZeroElement);
        }
        let x = *self;
        Ok((1..self.p)
            .map(|c| self.raw(c))
            .find(|c| (x / *c).is_cube())
            .expect("x is in its own class"))
    }

    fn is_preferred_sign(&self) -> bool {
        self.v != 0 && self.v <= (self.p - 1) / 2
    }

    /// Over a finite field every nondegenerate binary form is universal.
    fn hilbert_membership(&self, delta: &Self) -> Result<bool> {
        if self.v == 0 {
            return Ok(true);
        }
        if delta.v == 0 {
            return Ok(self.is_square());
        }
        Ok(true)
    }

    fn field_order(&self) -> Option<u128> {
        Some(self.p as u128)
    }

    fn adjoin_sqrt(&self) -> Result<Extension<Self::Ext>> {
        if self.v == 0 || self.is_square() {
            return Err(Error::InvalidField(format!("{self} is a square mod {}", self.p)));
        }
        let d = self.least_nonresidue();
        let s = (*self / d).sqrt().ok_or_else(|| Error::Internal("non-residue ratio".into()))?;
        let one = QuadExt::new(self.one_like(), self.zero_like(), d);
        let sqrt = QuadExt::new(self.zero_like(), s, d);
        Ok(Extension { one, sqrt })
    }

    fn embed(&self, like: &Self::Ext) -> Self::Ext {
        QuadExt::new(*self, self.zero_like(), *like.d())
    }

    fn descend(x: &Self::Ext) -> Option<Self> {
        if x.v().is_zero() {
            Some(*x.u())
        } else {
            None
        }
    }

    fn conj_ext(x: &Self::Ext) -> Self::Ext {
        x.conj()
    }

    /// Accepts integers and fractions `n/m` and reduces them modulo `p`.
    fn parse_like(&self, s: &str) -> Result<Self> {
        let r = parse_rational(s)?;
        let p = BigInt::from(self.p);
        let n = r.numer().mod_floor(&p).to_u64().unwrap();
        let d = r.denom().mod_floor(&p).to_u64().unwrap();
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.raw(n) / self.raw(d))
    }
}

fn ext_elements(d: Fp) -> impl Iterator<Item = QuadExt<Fp>> {
    let p = d.p;
    (0..p).flat_map(move |v| {
        (0..p).map(move |u| QuadExt::new(d.raw(u), d.raw(v), d))
    })
}

impl BaseField for Fp {
    fn ext_descriptor(d: &Self) -> FieldDescriptor {
        FieldDescriptor::QuadExt(QuadDescriptor::OverPrime { p: d.p, d: d.v })
    }

    fn ext_order(d: &Self) -> Option<u128> {
        Some(d.p as u128 * d.p as u128)
    }

    fn ext_sqrt(x: &QuadExt<Self>) -> Option<QuadExt<Self>> {
        let d = *x.d();
        rth_root(x, 2, d.p as u128 * d.p as u128 - 1, ext_elements(d).skip(1))
    }

    fn ext_cbrt(x: &QuadExt<Self>) -> Option<QuadExt<Self>> {
        let d = *x.d();
        rth_root(x, 3, d.p as u128 * d.p as u128 - 1, ext_elements(d).skip(1))
    }

    fn ext_square_class_rep(x: &QuadExt<Self>) -> Result<QuadExt<Self>> {
        if x.is_zero_elem() {
            return Err(Error::ZeroElement);
        }
        Ok(ext_elements(*x.d())
            .skip(1)
            .find(|c| (x.clone() / c.clone()).is_square())
            .expect("x is in its own class"))
    }

    fn ext_cube_class_rep(x: &QuadExt<Self>) -> Result<QuadExt<Self>> {
        if x.is_zero_elem() {
            return Err(Error::ZeroElement);
        }
        Ok(ext_elements(*x.d())
            .skip(1)
            .find(|c| (x.clone() / c.clone()).is_cube())
            .expect("x is in its own class"))
    }

    fn ext_hilbert(x: &QuadExt<Self>, delta: &QuadExt<Self>) -> Result<bool> {
        if x.is_zero_elem() {
            return Ok(true);
        }
        if delta.is_zero_elem() {
            return Ok(x.is_square());
        }
        Ok(true)
    }
}
