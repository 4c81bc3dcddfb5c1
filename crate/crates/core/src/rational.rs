//! Exact rational numbers and vertex weight functions.
//!
//! Every comparison made by the solver (`w(C) >= w(D)`, `s < cs`) is
//! decided on exact values. [`Rational`] wraps an arbitrary precision
//! fraction that is always kept in lowest terms with a positive denominator.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Rational {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(value: i64) -> Rational {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Lossy conversion for display and statistics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"p"` or `"p/q"` with optional surrounding whitespace.
    fn from_str(s: &str) -> Result<Rational> {
        let bad = || Error::InvalidRational(s.to_string());
        let t = s.trim();
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let numer: BigInt = p.parse().map_err(|_| bad())?;
        let denom: BigInt = q.parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Accepts `"p/q"` strings and plain JSON integers.
impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(v) => Ok(Rational::from_integer(v)),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        let mut acc = Rational::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

/// Nonnegative exact weight per vertex. Index `i` is the weight of vertex `i`.
///
/// Zero weights are legal: the family of graphs with `s = cs` for every
/// positive weighting is the same as for every nonnegative weighting.
/// Serializes as a JSON array of strings; also deserializes from
/// `{"weights": [...]}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct WeightFn {
    weights: Vec<Rational>,
}

impl WeightFn {
    pub fn new(weights: Vec<Rational>) -> Result<WeightFn> {
        if let Some(i) = weights.iter().position(Rational::is_negative) {
            return Err(Error::NegativeWeight(i));
        }
        Ok(WeightFn { weights })
    }

    pub fn uniform(n: usize, value: Rational) -> Result<WeightFn> {
        WeightFn::new(vec![value; n])
    }

    pub fn ones(n: usize) -> WeightFn {
        WeightFn { weights: vec![Rational::one(); n] }
    }

    pub fn from_integers(values: &[i64]) -> Result<WeightFn> {
        WeightFn::new(values.iter().map(|&v| Rational::from_integer(v)).collect())
    }

    /// Parses a list of `"p"` / `"p/q"` strings.
    pub fn parse<S: AsRef<str>>(values: &[S]) -> Result<WeightFn> {
        let weights = values.iter().map(|s| s.as_ref().parse()).collect::<Result<Vec<Rational>>>()?;
        WeightFn::new(weights)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.weights
    }

    /// `w(S)`, the total weight of a vertex set.
    pub fn weight_of(&self, set: VertexSet) -> Rational {
        set.iter().map(|v| &self.weights[v]).sum()
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// Multiplies every weight by `factor`, which must be nonnegative.
    pub fn scaled(&self, factor: &Rational) -> Result<WeightFn> {
        WeightFn::new(self.weights.iter().map(|w| w * factor).collect())
    }

    pub fn check_order(&self, order: usize) -> Result<()> {
        if self.weights.len() != order {
            return Err(Error::WeightLength { expected: order, got: self.weights.len() });
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for WeightFn {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Plain(Vec<Rational>),
            Wrapped { weights: Vec<Rational> },
        }
        let weights = match Raw::deserialize(deserializer)? {
            Raw::Plain(w) | Raw::Wrapped { weights: w } => w,
        };
        WeightFn::new(weights).map_err(serde::de::Error::custom)
    }
}
