use std::fmt;

use serde::{Serialize, Serializer};

use super::Field;
use crate::error::{Error, Result};

macro_rules! power_class {
    ($name:ident, $doc:literal, $test:ident, $rep:ident, $exp:literal) => {
        #[doc = $doc]
        ///
        /// Equality is decided by testing the quotient of representatives, so it
        /// is correct even where the stored representative is not canonical.
        #[derive(Debug, Clone)]
        pub struct $name<F> {
            rep: F,
        }

        impl<F: Field> $name<F> {
            pub fn of(x: &F) -> Result<Self> {
                if x.is_zero() {
                    return Err(Error::ZeroElement);
                }
                Ok($name { rep: x.$rep()? })
            }

            /// Wrap `x` without computing a canonical representative.
            pub fn of_raw(x: &F) -> Result<Self> {
                if x.is_zero() {
                    return Err(Error::ZeroElement);
                }
                Ok($name { rep: x.clone() })
            }

            pub fn identity_like(x: &F) -> Self {
                $name { rep: x.one_like() }
            }

            pub fn rep(&self) -> &F {
                &self.rep
            }

            pub fn is_identity(&self) -> bool {
                self.rep.$test()
            }

            pub fn mul(&self, other: &Self) -> Self {
                $name { rep: self.rep.clone() * other.rep.clone() }
            }

            pub fn inverse(&self) -> Self {
                // x^(exp-1) lies in the class of x⁻¹ and avoids a division.
                $name { rep: self.rep.pow($exp - 1) }
            }

            /// The same class with its canonical representative.
            pub fn canonical(&self) -> Result<Self> {
                Self::of(&self.rep)
            }
        }

        impl<F: Field> PartialEq for $name<F> {
            fn eq(&self, other: &Self) -> bool {
                (self.rep.clone() / other.rep.clone()).$test()
            }
        }

        impl<F: Field> Eq for $name<F> {}

        impl<F: Field> fmt::Display for $name<F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[{}]", self.rep)
            }
        }

        impl<F: Field> Serialize for $name<F> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(&self.rep.to_string())
            }
        }
    };
}

power_class!(CubeClass, "A class in `k*/k*³`.", is_cube, cube_class_rep, 3);
power_class!(SquareClass, "A class in `k*/k*²`.", is_square, square_class_rep, 2);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{Fp, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn f(v: u64, p: u64) -> Fp {
        Fp::new(v, p).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(CubeClass::of(&q(8)).unwrap(), CubeClass::of(&q(1)).unwrap());
        assert_ne!(CubeClass::of(&f(2, 7)).unwrap(), CubeClass::of(&f(4, 7)).unwrap());
        assert_eq!(SquareClass::of(&f(4, 5)).unwrap(), SquareClass::of(&(-f(1, 5))).unwrap());
        assert_eq!(CubeClass::of(&q(0)).unwrap_err(), Error::ZeroElement);
    }

    #[test]
    fn canonical_reps() {
        assert_eq!(CubeClass::of(&Rational::new(3.into(), 16.into())).unwrap().rep(), &q(12));
        assert_eq!(SquareClass::of(&q(-18)).unwrap().rep(), &q(-2));
        assert_eq!(CubeClass::of(&f(6, 7)).unwrap().rep(), &f(1, 7));
    }

    #[test]
    fn group_laws_over_f7_and_f13() {
        for p in [7u64, 13] {
            let elems: Vec<Fp> = f(0, p).elements()[1..].to_vec();
            for x in &elems {
                let cx = CubeClass::of(x).unwrap();
                assert!(cx.mul(&cx).mul(&cx).is_identity());
                assert!(cx.mul(&cx.inverse()).is_identity());
                assert_eq!(cx.is_identity(), x.cbrt().is_some());
                let sx = SquareClass::of(x).unwrap();
                assert!(sx.mul(&sx).is_identity());
                for y in &elems {
                    let cy = CubeClass::of(y).unwrap();
                    assert_eq!(CubeClass::of(&(*x * *y)).unwrap(), cx.mul(&cy));
                    assert_eq!(cx == cy, (*x / *y).cbrt().is_some());
                }
            }
        }
    }
}
