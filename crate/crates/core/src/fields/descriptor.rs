use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Which field a value lives in, in the textual grammar used by the CLI:
/// `rat`, `fp:<p>`, `quad:rat:<D>`, `quad:fp:<p>:<d>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField { p: u64 },
    QuadExt(QuadDescriptor),
}

/// A quadratic extension of `Q` or of `F_p`; nesting stops here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QuadDescriptor {
    OverRationals { d: BigInt },
    OverPrime { p: u64, d: u64 },
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "rat"),
            FieldDescriptor::PrimeField { p } => write!(f, "fp:{p}"),
            FieldDescriptor::QuadExt(QuadDescriptor::OverRationals { d }) => {
                write!(f, "quad:rat:{d}")
            }
            FieldDescriptor::QuadExt(QuadDescriptor::OverPrime { p, d }) => {
                write!(f, "quad:fp:{p}:{d}")
            }
        }
    }
}

impl Serialize for FieldDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn parse_u64(s: &str, what: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("bad {what} '{s}'")))
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    /// Syntax only; primality and non-squareness are checked when a template
    /// element is built from the descriptor.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["rat"] => Ok(FieldDescriptor::Rationals),
            ["fp", p] => Ok(FieldDescriptor::PrimeField { p: parse_u64(p, "prime")? }),
            ["quad", "rat", d] => {
                let d = d
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer D '{d}'")))?;
                Ok(FieldDescriptor::QuadExt(QuadDescriptor::OverRationals { d }))
            }
            ["quad", "fp", p, d] => Ok(FieldDescriptor::QuadExt(QuadDescriptor::OverPrime {
                p: parse_u64(p, "prime")?,
                d: parse_u64(d, "non-residue")?,
            })),
            _ => Err(Error::Parse(format!("unknown field descriptor '{s}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_round_trip() {
        for s in ["rat", "fp:7", "quad:rat:-3", "quad:fp:5:2"] {
            let d: FieldDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!("fp".parse::<FieldDescriptor>().is_err());
        assert!("quad:rat:x".parse::<FieldDescriptor>().is_err());
        assert!("real".parse::<FieldDescriptor>().is_err());
    }
}
