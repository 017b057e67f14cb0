//! Exact scalar fields.
//!
//! Everything above this module is generic over [`Field`]. Three concrete
//! implementations are provided: the rationals ([`Rational`]), prime fields
//! `F_p` with `p ≠ 2, 3` ([`Fp`]) and quadratic extensions `k(√D)` of either
//! ([`QuadExt`]).
//!
//! A field value always knows which field it lives in (the modulus of an `F_p`
//! element, the adjoined `D` of an extension element), so contexts are never
//! passed separately: `x.zero_like()`, `x.from_i64_like(3)` build constants in
//! the same field as `x`.

mod classes;
mod descriptor;
pub(crate) mod finite;
mod fp;
pub(crate) mod hilbert;
mod quad;
mod rational;

pub use classes::{CubeClass, SquareClass};
pub use descriptor::{FieldDescriptor, QuadDescriptor};
pub use fp::Fp;
pub use finite::is_prime_u64;
pub use hilbert::{rational_roots_monic_cubic, set_factor_bound, DEFAULT_FACTOR_BOUND};
pub use quad::{BaseField, QuadExt};
pub use rational::Rational;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::Result;

/// A quadratic extension produced by [`Field::adjoin_sqrt`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension<E> {
    /// The unit of the extension; use it as the template for embedding.
    pub one: E,
    /// A square root of the element that was adjoined.
    pub sqrt: E,
}

/// An exact field of characteristic different from 2 and 3.
///
/// Arithmetic operators panic when the two operands live in different fields
/// (e.g. `F_5` and `F_7`) and on division by zero; use [`Field::same_field`]
/// and [`Field::inv`] at API boundaries to turn those into errors.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// The type of quadratic extensions of this field.
    type Ext: Field;

    fn descriptor(&self) -> FieldDescriptor;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn same_field(&self, other: &Self) -> bool;
    fn inv(&self) -> Result<Self>;

    /// Some `r` with `r² = self`, if one exists in the field.
    fn sqrt(&self) -> Option<Self>;
    /// Some `r` with `r³ = self`, if one exists in the field.
    fn cbrt(&self) -> Option<Self>;

    /// A representative of the class of `self` in `k*/k*²`. Canonical where
    /// the field allows it; otherwise `self`.
    fn square_class_rep(&self) -> Result<Self>;
    /// A representative of the class of `self` in `k*/k*³`. Canonical where
    /// the field allows it; otherwise `self`.
    fn cube_class_rep(&self) -> Result<Self>;

    /// Deterministic choice between `x` and `-x`: true for exactly one of them
    /// when `x ≠ 0`.
    fn is_preferred_sign(&self) -> bool;

    /// Whether `self = a² + b²·delta` for some `a, b` in the field.
    fn hilbert_membership(&self, delta: &Self) -> Result<bool>;

    /// Number of elements, or `None` for infinite fields.
    fn field_order(&self) -> Option<u128>;

    /// Adjoin a square root of `self`, which must be a non-square.
    fn adjoin_sqrt(&self) -> Result<Extension<Self::Ext>>;
    /// Image of `self` in the extension whose unit is `like`.
    fn embed(&self, like: &Self::Ext) -> Self::Ext;
    /// Inverse of [`Field::embed`] on elements fixed by conjugation.
    fn descend(x: &Self::Ext) -> Option<Self>;
    /// Galois conjugation of the extension.
    fn conj_ext(x: &Self::Ext) -> Self::Ext;

    /// Parse an element written in the CLI grammar, in the field of `self`.
    fn parse_like(&self, s: &str) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    fn is_cube(&self) -> bool {
        self.cbrt().is_some()
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn cube(&self) -> Self {
        self.square() * self.clone()
    }

    fn pow(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Square root normalized by [`Field::is_preferred_sign`].
    fn canonical_sqrt(&self) -> Option<Self> {
        let r = self.sqrt()?;
        if r.is_zero() || r.is_preferred_sign() {
            Some(r)
        } else {
            Some(-r)
        }
    }

    /// All cube roots of unity that lie in the field.
    fn cube_roots_of_unity(&self) -> Vec<Self> {
        let one = self.one_like();
        match self.from_i64_like(-3).sqrt() {
            Some(s) => {
                let half = self.from_i64_like(2).inv().expect("char != 2");
                let j = (s.clone() - one.clone()) * half.clone();
                let j2 = (-s - one.clone()) * half;
                vec![one, j, j2]
            }
            None => vec![one],
        }
    }
}
