use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number in lowest terms with a positive denominator.
///
/// Always printed and serialized as `"a/b"`, including integers (`"1/1"`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(BigRational);

impl ExactRatio {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRatio {
            type Output = ExactRatio;
            fn $method(self, rhs: ExactRatio) -> ExactRatio {
                ExactRatio(self.0.$method(rhs.0))
            }
        }

        impl $trait<&ExactRatio> for &ExactRatio {
            type Output = ExactRatio;
            fn $method(self, rhs: &ExactRatio) -> ExactRatio {
                ExactRatio((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed ratio {0:?}")]
pub struct RatioParseError(pub String);

impl FromStr for ExactRatio {
    type Err = RatioParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RatioParseError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.trim().parse().map_err(|_| err())?;
        let den: BigInt = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        Ok(Self::new(num, den))
    }
}

impl Serialize for ExactRatio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRatio {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_printed() {
        assert_eq!(ExactRatio::new(10, 42).to_string(), "5/21");
        assert_eq!(ExactRatio::new(3, -6).to_string(), "-1/2");
        assert_eq!(ExactRatio::one().to_string(), "1/1");
        assert_eq!(ExactRatio::new(132, 945), ExactRatio::new(44, 315));
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = ExactRatio::new(1, 3);
        let sum = &third + &ExactRatio::new(2, 27);
        assert_eq!(sum, ExactRatio::new(11, 27));
        assert!(ExactRatio::new(11, 27) > third);
        assert_eq!(
            ExactRatio::new(5, 8) * ExactRatio::new(8, 5),
            ExactRatio::one()
        );
    }

    #[test]
    fn parse_and_serde() {
        let r: ExactRatio = "5/21".parse().unwrap();
        assert_eq!(r, ExactRatio::new(5, 21));
        assert_eq!("4".parse::<ExactRatio>().unwrap(), ExactRatio::integer(4));
        assert!("1/0".parse::<ExactRatio>().is_err());
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, "\"5/21\"");
        assert_eq!(serde_json::from_str::<ExactRatio>(&json).unwrap(), r);
    }
}
