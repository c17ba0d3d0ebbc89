//! Exact central-character combinatorics for basic classical Lie
//! superalgebras, with full support for osp(1,2l) = B(0,l).
//!
//! Everything is exact rational arithmetic. The main entry points are
//! [`roots::build_family`], [`weyl::generate`], [`central::classify`],
//! [`flags::restriction_flag`], [`mates::construct_mate`] and
//! [`equivalence::BlockContext`].

pub mod central;
pub mod character;
pub mod equivalence;
pub mod error;
pub mod flags;
pub mod mates;
pub mod matrix;
pub mod roots;
pub mod selftest;
pub mod weight;
pub mod weyl;

pub use central::{Ambient, CentralCharacter, Classification, TypicalityKind};
pub use equivalence::{BlockContext, Direction, Mode, RoundTrip};
pub use error::{Error, Result};
pub use flags::{GammaSet, GradedVermaFlag, Parity};
pub use mates::{MateReport, PerfectMateReport};
pub use roots::{build_family, Family, FamilySpec, SuperRootData};
pub use weight::{Rational, Weight, WeightFunction};
pub use weyl::{WeylElement, WeylGroup};

/// Root data and Weyl group of one family, built together.
#[derive(Clone, Debug)]
pub struct Superalgebra {
    pub data: SuperRootData,
    pub weyl: WeylGroup,
}

impl Superalgebra {
    pub fn new(spec: FamilySpec) -> Result<Self> {
        Self::with_cap(spec, weyl::DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(spec: FamilySpec, cap: usize) -> Result<Self> {
        let data = build_family(spec)?;
        let weyl = weyl::generate_with_cap(&data, cap)?;
        Ok(Superalgebra { data, weyl })
    }

    pub fn parse(spec: &str) -> Result<Self> {
        Self::new(spec.parse()?)
    }
}
