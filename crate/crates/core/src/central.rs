//! Central characters as shifted Weyl orbits, Harish-Chandra values of the
//! ghost element T and of Q, and typicality classification.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::SuperRootData;
use crate::weight::{Rational, Weight};
use crate::weyl::WeylGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ambient {
    #[serde(rename = "g")]
    G,
    #[serde(rename = "g0")]
    G0,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::G => "g",
            Ambient::G0 => "g0",
        })
    }
}

/// A central character of `g` (shift ρ) or `g0` (shift ρ0), keyed by the
/// canonical representative of the orbit of `λ + shift`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CentralCharacter {
    pub ambient: Ambient,
    pub shift: Weight,
    pub rep: Weight,
}

impl CentralCharacter {
    /// Some weight with this central character: `rep - shift`.
    pub fn base_weight(&self) -> Weight {
        &self.rep - &self.shift
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi_{}[{}]", self.ambient, self.rep)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypicalityKind {
    StronglyTypical,
    TypicalNotStrong,
    Atypical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: TypicalityKind,
    /// Odd positive roots β with (λ+ρ, β) = 0.
    #[serde(rename = "vanishing_roots")]
    pub vanishing_odd_roots: Vec<Weight>,
    /// Exactly one vanishing odd root.
    #[serde(rename = "generic")]
    pub generic_weakly_atypical: bool,
    #[serde(rename = "T_value", with = "rational_string")]
    pub t_value: Rational,
    #[serde(rename = "Q_value", with = "rational_string")]
    pub q_value: Rational,
}

pub(crate) mod rational_string {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::weight::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(q)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(D::Error::custom)
    }
}

fn product_over(data: &SuperRootData, roots: &[Weight], lambda: &Weight) -> Result<Rational> {
    data.check_rank(lambda)?;
    let shifted = lambda + data.rho();
    roots.iter().try_fold(Rational::one(), |acc, b| Ok(acc * data.inner(b, &shifted)?))
}

/// `∏_{β∈Δ1⁺} (β, λ+ρ)`
pub fn eval_t(data: &SuperRootData, lambda: &Weight) -> Result<Rational> {
    product_over(data, data.delta1_plus(), lambda)
}

/// Product over the isotropic odd positive roots; 1 when there are none.
pub fn eval_q(data: &SuperRootData, lambda: &Weight) -> Result<Rational> {
    product_over(data, data.isotropic_roots(), lambda)
}

pub fn classify(data: &SuperRootData, lambda: &Weight) -> Result<Classification> {
    data.check_rank(lambda)?;
    let shifted = lambda + data.rho();
    let mut vanishing = Vec::new();
    for b in data.delta1_plus() {
        if data.inner(&shifted, b)?.is_zero() {
            vanishing.push(b.clone());
        }
    }
    let t_value = eval_t(data, lambda)?;
    let q_value = eval_q(data, lambda)?;
    let kind = if vanishing.is_empty() {
        TypicalityKind::StronglyTypical
    } else if vanishing.iter().any(|b| data.isotropic_roots().contains(b)) {
        TypicalityKind::Atypical
    } else {
        TypicalityKind::TypicalNotStrong
    };
    debug_assert_eq!(t_value.is_zero(), kind != TypicalityKind::StronglyTypical);
    debug_assert_eq!(q_value.is_zero(), kind == TypicalityKind::Atypical);
    Ok(Classification {
        kind,
        generic_weakly_atypical: vanishing.len() == 1,
        vanishing_odd_roots: vanishing,
        t_value,
        q_value,
    })
}

fn char_of(group: &WeylGroup, ambient: Ambient, shift: &Weight, mu: &Weight) -> Result<CentralCharacter> {
    mu.ensure_rank(group.rank())?;
    let rep = group.canonical_rep(&(mu + shift))?;
    Ok(CentralCharacter { ambient, shift: shift.clone(), rep })
}

pub fn g_char_of(data: &SuperRootData, group: &WeylGroup, lambda: &Weight) -> Result<CentralCharacter> {
    char_of(group, Ambient::G, data.rho(), lambda)
}

pub fn g0_char_of(data: &SuperRootData, group: &WeylGroup, mu: &Weight) -> Result<CentralCharacter> {
    char_of(group, Ambient::G0, data.rho0(), mu)
}

/// The dot orbit `W(χ̃)` of a typical g-character.
pub fn weights_of_char(data: &SuperRootData, group: &WeylGroup, chi: &CentralCharacter) -> Result<BTreeSet<Weight>> {
    if chi.ambient != Ambient::G {
        return Err(Error::AmbientMismatch { expected: "g".into(), found: chi.ambient.to_string() });
    }
    let base = chi.base_weight();
    if classify(data, &base)?.kind == TypicalityKind::Atypical {
        return Err(Error::Atypical(chi.rep.clone()));
    }
    group.orbit(&base, Some(&chi.shift), true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremal {
    pub maximal: BTreeSet<Weight>,
    pub minimal: BTreeSet<Weight>,
}

/// Maximal and minimal elements of `W(χ̃)` under the root order, by pairwise comparison.
pub fn extremal_weights(data: &SuperRootData, group: &WeylGroup, chi: &CentralCharacter) -> Result<Extremal> {
    let orbit: Vec<Weight> = weights_of_char(data, group, chi)?.into_iter().collect();
    let mut maximal = BTreeSet::new();
    let mut minimal = BTreeSet::new();
    for a in &orbit {
        let mut is_max = true;
        let mut is_min = true;
        for b in &orbit {
            if a == b {
                continue;
            }
            if data.leq(a, b)? {
                is_max = false;
            }
            if data.leq(b, a)? {
                is_min = false;
            }
        }
        if is_max {
            maximal.insert(a.clone());
        }
        if is_min {
            minimal.insert(a.clone());
        }
    }
    Ok(Extremal { maximal, minimal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_family, FamilySpec};
    use crate::weight::{int, rat};
    use crate::weyl::{dot, generate};

    fn setup(spec: FamilySpec) -> (SuperRootData, WeylGroup) {
        let d = build_family(spec).unwrap();
        let g = generate(&d).unwrap();
        (d, g)
    }

    fn b02() -> (SuperRootData, WeylGroup) {
        setup(FamilySpec::b0n(2).unwrap())
    }

    #[test]
    fn ghost_values_b02() {
        let (d, _) = b02();
        assert_eq!(eval_t(&d, &Weight::from_ints(&[1, 1])).unwrap(), rat(15, 4));
        assert_eq!(eval_t(&d, &-d.rho()).unwrap(), int(0));
        assert_eq!(eval_t(&d, &Weight::from_ratios(&[(1, 2), (-1, 2)])).unwrap(), int(0));
        assert_eq!(eval_q(&d, &Weight::from_ratios(&[(7, 3), (-1, 9)])).unwrap(), int(1));
    }

    #[test]
    fn q_values_gl11() {
        let (d, _) = setup(FamilySpec::gl(1, 1).unwrap());
        let eps1 = Weight::from_ints(&[1, 0]);
        assert_eq!(eval_q(&d, &(&eps1 - d.rho())).unwrap(), int(1));
        // (ε1-δ1, aε1+bδ1) = a + b under diag(+1,-1)
        let eps_plus_delta = Weight::from_ints(&[1, 1]);
        assert_eq!(eval_q(&d, &(&eps_plus_delta - d.rho())).unwrap(), int(2));
        let eps_minus_delta = Weight::from_ints(&[1, -1]);
        assert_eq!(eval_q(&d, &(&eps_minus_delta - d.rho())).unwrap(), int(0));
    }

    #[test]
    fn classify_examples_b02() {
        let (d, _) = b02();
        let c = classify(&d, &Weight::from_ints(&[1, 1])).unwrap();
        assert_eq!(c.kind, TypicalityKind::StronglyTypical);
        assert!(c.vanishing_odd_roots.is_empty());
        assert!(!c.generic_weakly_atypical);

        let c = classify(&d, &Weight::from_ratios(&[(1, 2), (-1, 2)])).unwrap();
        assert_eq!(c.kind, TypicalityKind::TypicalNotStrong);
        assert_eq!(c.vanishing_odd_roots, vec![Weight::from_ints(&[0, 1])]);
        assert!(c.generic_weakly_atypical);

        let c = classify(&d, &-d.rho()).unwrap();
        assert_eq!(c.kind, TypicalityKind::TypicalNotStrong);
        assert_eq!(c.vanishing_odd_roots.len(), 2);
        assert!(!c.generic_weakly_atypical);
    }

    #[test]
    fn classify_b11_typical_not_strong() {
        let (d, _) = setup(FamilySpec::bmn(1, 1).unwrap());
        // λ+ρ = a·ε1 with a = 3: orthogonal to δ1 only.
        let shifted = Weight::from_ints(&[3, 0]);
        let lam = &shifted - d.rho();
        let c = classify(&d, &lam).unwrap();
        assert_eq!(c.kind, TypicalityKind::TypicalNotStrong);
        assert_eq!(c.vanishing_odd_roots, vec![Weight::from_ints(&[0, 1])]);
        assert_ne!(c.q_value, int(0));
        assert_eq!(c.t_value, int(0));
    }

    #[test]
    fn classify_json_shape() {
        let (d, _) = b02();
        let c = classify(&d, &Weight::from_ints(&[1, 1])).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["kind"], "StronglyTypical");
        assert_eq!(v["T_value"], "15/4");
        assert_eq!(v["Q_value"], "1");
        let back: Classification = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn characters_are_orbit_constant() {
        let (d, g) = b02();
        let lam = Weight::from_ratios(&[(1, 3), (-2, 5)]);
        let chi = g_char_of(&d, &g, &lam).unwrap();
        for w in g.elements() {
            assert_eq!(g_char_of(&d, &g, &dot(&d, w, &lam).unwrap()).unwrap(), chi);
        }
        let mu = Weight::from_ratios(&[(1, 2), (-1, 2)]);
        let chi0 = g0_char_of(&d, &g, &mu).unwrap();
        assert_eq!(chi0.rep, Weight::from_ratios(&[(5, 2), (1, 2)]));
        assert_eq!(g0_char_of(&d, &g, &(&mu - &Weight::unit(2, 1))).unwrap(), chi0);
    }

    #[test]
    fn weights_of_char_examples() {
        let (d, g) = b02();
        let chi = g_char_of(&d, &g, &Weight::from_ints(&[1, 1])).unwrap();
        assert_eq!(weights_of_char(&d, &g, &chi).unwrap().len(), 8);
        let chi = g_char_of(&d, &g, &-d.rho()).unwrap();
        assert_eq!(weights_of_char(&d, &g, &chi).unwrap(), BTreeSet::from([-d.rho()]));
        let chi = g_char_of(&d, &g, &Weight::from_ratios(&[(1, 2), (-1, 2)])).unwrap();
        assert_eq!(weights_of_char(&d, &g, &chi).unwrap().len(), 4);
        let chi0 = g0_char_of(&d, &g, &Weight::zero(2)).unwrap();
        assert!(matches!(weights_of_char(&d, &g, &chi0), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn atypical_orbit_is_rejected() {
        let (d, g) = setup(FamilySpec::gl(1, 1).unwrap());
        let chi = g_char_of(&d, &g, &(&Weight::from_ints(&[1, -1]) - d.rho())).unwrap();
        assert!(matches!(weights_of_char(&d, &g, &chi), Err(Error::Atypical(_))));
    }

    #[test]
    fn extremal_examples() {
        let (d, g) = b02();
        let chi = g_char_of(&d, &g, &Weight::from_ints(&[1, 1])).unwrap();
        let ext = extremal_weights(&d, &g, &chi).unwrap();
        assert_eq!(ext.maximal, BTreeSet::from([Weight::from_ints(&[1, 1])]));
        assert_eq!(ext.minimal, BTreeSet::from([Weight::from_ints(&[-4, -2])]));

        let chi = g_char_of(&d, &g, &-d.rho()).unwrap();
        let ext = extremal_weights(&d, &g, &chi).unwrap();
        assert_eq!(ext.maximal, ext.minimal);

        let chi = g_char_of(&d, &g, &(&Weight::from_ints(&[2, 0]) - d.rho())).unwrap();
        let ext = extremal_weights(&d, &g, &chi).unwrap();
        assert_eq!(ext.maximal, BTreeSet::from([Weight::from_ratios(&[(1, 2), (-1, 2)])]));
    }
}
