//! Exact rationals, weight vectors and finite weight tables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parses `"p/q"` or `"n"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (numer, denom) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let numer = BigInt::from_str(numer).map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let denom = BigInt::from_str(denom).map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(numer, denom))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// A weight in the orthogonal basis of a family, stored as exact coordinates.
///
/// Ordering is lexicographic on coordinates; the rank is checked by the
/// operations that combine weights with root data.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    /// The `i`-th basis vector (0-based).
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = Rational::one();
        w
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        Weight(coords.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    /// Parses a comma separated list of rationals, e.g. `"1/2,-1/2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',').map(parse_rational).collect::<Result<Vec<_>>>().map(Weight)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn ensure_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: rank, found: self.rank() })
        }
    }

    /// Coordinate sum; integral for the 0/1 cube and root lattice vectors.
    pub fn coord_sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn abs_coords(&self) -> Vec<Rational> {
        self.0.iter().map(|x| x.abs()).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|x| x.to_string()).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Weight::parse(s)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|x| x.to_string()))
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        raw.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>().map(Weight).map_err(D::Error::custom)
    }
}

fn zip_with(a: &Weight, b: &Weight, f: impl Fn(&Rational, &Rational) -> Rational) -> Weight {
    assert_eq!(a.rank(), b.rank(), "weights of different rank");
    Weight(a.0.iter().zip(&b.0).map(|(x, y)| f(x, y)).collect())
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

/// Finite table `Weight -> multiplicity`; zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightFunction {
    entries: BTreeMap<Weight, u64>,
}

impl WeightFunction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_at(&mut self, weight: Weight, count: u64) {
        if count == 0 {
            return;
        }
        if let Some(first) = self.entries.keys().next() {
            assert_eq!(first.rank(), weight.rank(), "weight table keys of different rank");
        }
        *self.entries.entry(weight).or_insert(0) += count;
    }

    pub fn get(&self, weight: &Weight) -> u64 {
        self.entries.get(weight).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: &WeightFunction) {
        for (w, &c) in &other.entries {
            self.add_at(w.clone(), c);
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &c)| (w, c))
    }
}

impl Add<&WeightFunction> for &WeightFunction {
    type Output = WeightFunction;
    fn add(self, rhs: &WeightFunction) -> WeightFunction {
        let mut out = self.clone();
        out.merge(rhs);
        out
    }
}

impl Serialize for WeightFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            weight: &'a Weight,
            multiplicity: u64,
        }
        serializer.collect_seq(self.entries.iter().map(|(weight, &multiplicity)| Row { weight, multiplicity }))
    }
}
