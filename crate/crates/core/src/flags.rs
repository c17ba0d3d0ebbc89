//! Γ-combinatorics of osp(1,2l): graded Verma flags of restricted and
//! induced modules, block decomposition by central character and supports.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::central::{g0_char_of, g_char_of, Ambient, CentralCharacter};
use crate::error::{Error, Result};
use crate::roots::SuperRootData;
use crate::weight::Weight;
use crate::weyl::WeylGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn plus(self, other: Parity) -> Self {
        if other == Parity::Odd {
            self.flip()
        } else {
            self
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl From<Parity> for u8 {
    fn from(p: Parity) -> u8 {
        p.bit()
    }
}

impl TryFrom<u8> for Parity {
    type Error = String;
    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            _ => Err(format!("parity must be 0 or 1, got {v}")),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// True for 0/1 vectors.
pub fn in_gamma(gamma: &Weight) -> bool {
    gamma.coords().iter().all(|c| c.is_zero() || c.is_one())
}

/// Number of ones in a 0/1 vector.
pub fn gamma_size(gamma: &Weight) -> usize {
    gamma.coords().iter().filter(|c| c.is_one()).count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaSet {
    pub l: usize,
    pub gamma: Vec<Weight>,
    pub gamma0: Vec<Weight>,
    pub gamma1: Vec<Weight>,
}

/// Γ = {Σ r_i σ_i : r_i ∈ {0,1}} in binary counting order (r_1 least significant),
/// split by parity of Σ r_i.
pub fn gamma_sets(l: usize) -> Result<GammaSet> {
    if l < 1 {
        return Err(Error::EmptyGamma(l));
    }
    let gamma: Vec<Weight> =
        (0u64..1 << l).map(|b| Weight::from_ints(&(0..l).map(|i| ((b >> i) & 1) as i64).collect::<Vec<_>>())).collect();
    let (gamma0, gamma1) = gamma.iter().cloned().partition(|g| gamma_size(g).is_multiple_of(2));
    Ok(GammaSet { l, gamma, gamma0, gamma1 })
}

/// A finite multiset of Verma modules `(highest weight, parity)` over `g` or `g0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedVermaFlag {
    ambient: Ambient,
    entries: BTreeMap<(Weight, Parity), u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagEntry {
    pub weight: Weight,
    pub parity: Parity,
    pub multiplicity: u64,
}

impl GradedVermaFlag {
    pub fn new(ambient: Ambient) -> Self {
        GradedVermaFlag { ambient, entries: BTreeMap::new() }
    }

    pub fn single(ambient: Ambient, weight: Weight, parity: Parity) -> Self {
        let mut f = Self::new(ambient);
        f.insert(weight, parity, 1);
        f
    }

    pub fn from_entries(ambient: Ambient, entries: impl IntoIterator<Item = (Weight, Parity)>) -> Self {
        let mut f = Self::new(ambient);
        for (w, p) in entries {
            f.insert(w, p, 1);
        }
        f
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn insert(&mut self, weight: Weight, parity: Parity, multiplicity: u64) {
        if multiplicity == 0 {
            return;
        }
        if let Some(((w, _), _)) = self.entries.iter().next() {
            assert_eq!(w.rank(), weight.rank(), "flag entries of different rank");
        }
        *self.entries.entry((weight, parity)).or_insert(0) += multiplicity;
    }

    /// Multiset union; both flags must live over the same algebra.
    pub fn union(&self, other: &GradedVermaFlag) -> Result<GradedVermaFlag> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                expected: self.ambient.to_string(),
                found: other.ambient.to_string(),
            });
        }
        let mut out = self.clone();
        for ((w, p), &m) in &other.entries {
            out.insert(w.clone(), *p, m);
        }
        Ok(out)
    }

    /// Total multiplicity.
    pub fn len(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct `(weight, parity, multiplicity)` entries in sorted order.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, Parity, u64)> {
        self.entries.iter().map(|((w, p), &m)| (w, *p, m))
    }

    pub fn multiplicity(&self, weight: &Weight, parity: Parity) -> u64 {
        self.entries.get(&(weight.clone(), parity)).copied().unwrap_or(0)
    }

    pub fn rank(&self) -> Option<usize> {
        self.entries.keys().next().map(|(w, _)| w.rank())
    }

    pub fn filter_parity(&self, parity: Parity) -> GradedVermaFlag {
        let mut out = Self::new(self.ambient);
        for (w, p, m) in self.iter().filter(|(_, p, _)| *p == parity) {
            out.insert(w.clone(), p, m);
        }
        out
    }

    /// Same entries with every parity set to `parity`.
    pub fn with_parity(&self, parity: Parity) -> GradedVermaFlag {
        let mut out = Self::new(self.ambient);
        for (w, _, m) in self.iter() {
            out.insert(w.clone(), parity, m);
        }
        out
    }

    /// Parity flip.
    pub fn flipped(&self) -> GradedVermaFlag {
        let mut out = Self::new(self.ambient);
        for (w, p, m) in self.iter() {
            out.insert(w.clone(), p.flip(), m);
        }
        out
    }

    pub fn to_entries(&self) -> Vec<FlagEntry> {
        self.iter().map(|(w, p, m)| FlagEntry { weight: w.clone(), parity: p, multiplicity: m }).collect()
    }
}

impl fmt::Display for GradedVermaFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.ambient {
            Ambient::G => "M~",
            Ambient::G0 => "M",
        };
        write!(f, "{{")?;
        for (i, (w, p, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if m > 1 {
                write!(f, "{m}x")?;
            }
            write!(f, "{name}{w}[{p}]")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct FlagRepr {
    ambient: Ambient,
    entries: Vec<FlagEntry>,
}

impl Serialize for GradedVermaFlag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FlagRepr { ambient: self.ambient, entries: self.to_entries() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedVermaFlag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = FlagRepr::deserialize(d)?;
        let mut f = GradedVermaFlag::new(repr.ambient);
        for e in repr.entries {
            f.insert(e.weight, e.parity, e.multiplicity);
        }
        Ok(f)
    }
}

/// g0-Verma flag of M̃(λ) with its highest weight vector of parity `base`:
/// `{(λ-γ, |γ|+base) : γ ∈ Γ}`.
pub fn restriction_flag_graded(data: &SuperRootData, lambda: &Weight, base: Parity) -> Result<GradedVermaFlag> {
    data.require_osp("restriction flag")?;
    data.check_rank(lambda)?;
    let gs = gamma_sets(data.rank())?;
    Ok(GradedVermaFlag::from_entries(
        Ambient::G0,
        gs.gamma.iter().map(|g| (lambda - g, Parity::from_count(gamma_size(g)).plus(base))),
    ))
}

pub fn restriction_flag(data: &SuperRootData, lambda: &Weight) -> Result<GradedVermaFlag> {
    restriction_flag_graded(data, lambda, Parity::Even)
}

/// g-Verma flag of Ind M(μ): `{(μ+γ, |γ|+base) : γ ∈ Γ}`.
pub fn induction_flag(data: &SuperRootData, mu: &Weight, base: Parity) -> Result<GradedVermaFlag> {
    data.require_osp("induction flag")?;
    data.check_rank(mu)?;
    let gs = gamma_sets(data.rank())?;
    Ok(GradedVermaFlag::from_entries(
        Ambient::G,
        gs.gamma.iter().map(|g| (mu + g, Parity::from_count(gamma_size(g)).plus(base))),
    ))
}

pub fn char_of_entry(
    data: &SuperRootData,
    group: &WeylGroup,
    ambient: Ambient,
    w: &Weight,
) -> Result<CentralCharacter> {
    match ambient {
        Ambient::G => g_char_of(data, group, w),
        Ambient::G0 => g0_char_of(data, group, w),
    }
}

/// Partition of a flag's entries by central character.
pub fn block_decompose(
    data: &SuperRootData,
    group: &WeylGroup,
    flag: &GradedVermaFlag,
) -> Result<BTreeMap<CentralCharacter, GradedVermaFlag>> {
    let mut blocks: BTreeMap<CentralCharacter, GradedVermaFlag> = BTreeMap::new();
    for (w, p, m) in flag.iter() {
        let chi = char_of_entry(data, group, flag.ambient(), w)?;
        blocks.entry(chi).or_insert_with(|| GradedVermaFlag::new(flag.ambient())).insert(w.clone(), p, m);
    }
    Ok(blocks)
}

/// The block of `flag` at `chi` (possibly empty).
pub fn block_at(
    data: &SuperRootData,
    group: &WeylGroup,
    flag: &GradedVermaFlag,
    chi: &CentralCharacter,
) -> Result<GradedVermaFlag> {
    let mut out = GradedVermaFlag::new(flag.ambient());
    for (w, p, m) in flag.iter() {
        if char_of_entry(data, group, flag.ambient(), w)? == *chi {
            out.insert(w.clone(), p, m);
        }
    }
    Ok(out)
}

/// Block map keyed by the canonical representative, as a JSON object.
pub fn blocks_to_json(blocks: &BTreeMap<CentralCharacter, GradedVermaFlag>) -> serde_json::Value {
    let map = blocks
        .iter()
        .map(|(chi, f)| (chi.rep.to_string(), serde_json::to_value(f).expect("flag serializes")))
        .collect();
    serde_json::Value::Object(map)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportEntry {
    pub character: CentralCharacter,
    /// Number of flag factors in this block; an upper bound for the
    /// nilpotency order of the character on the block.
    pub multiplicity: u64,
    pub parities: Vec<Parity>,
}

/// Per-character multiplicities of the restriction flag of M̃(λ).
pub fn support_report(data: &SuperRootData, group: &WeylGroup, lambda: &Weight) -> Result<Vec<SupportEntry>> {
    let flag = restriction_flag(data, lambda)?;
    Ok(block_decompose(data, group, &flag)?
        .into_iter()
        .map(|(character, block)| {
            let mut parities: Vec<Parity> =
                block.iter().flat_map(|(_, p, m)| std::iter::repeat_n(p, m as usize)).collect();
            parities.sort();
            SupportEntry { character, multiplicity: block.len(), parities }
        })
        .collect())
}
