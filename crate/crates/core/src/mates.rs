//! Mates for generic weakly atypical central characters of osp(1,2l):
//! the explicit construction, its exhaustive verification, and the
//! flag-level candidate search for strongly typical characters.
//!
//! Only the flag-level conditions are certified here. Whether `U(g)·M`
//! recovers the whole Verma module is a module-level statement and is not
//! checked.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::central::{
    classify, extremal_weights, g0_char_of, weights_of_char, Ambient, CentralCharacter, TypicalityKind,
};
use crate::error::{Error, Result};
use crate::flags::{gamma_sets, gamma_size, support_report, Parity};
use crate::roots::SuperRootData;
use crate::weight::Weight;
use crate::weyl::{dot, star, WeylGroup};

fn last_sigma(rank: usize) -> Weight {
    Weight::unit(rank, rank - 1)
}

fn require_g(chi: &CentralCharacter) -> Result<()> {
    if chi.ambient == Ambient::G {
        Ok(())
    } else {
        Err(Error::AmbientMismatch { expected: "g".into(), found: chi.ambient.to_string() })
    }
}

/// The representative λ ∈ W(χ̃) with `λ+ρ = (k_1, …, k_{l-1}, 0)`, all
/// k_i > 0. Among several such, the lexicographically greatest `λ+ρ`.
pub fn choose_lambda(data: &SuperRootData, group: &WeylGroup, chi_tilde: &CentralCharacter) -> Result<Weight> {
    data.require_osp("mate construction")?;
    require_g(chi_tilde)?;
    let base = chi_tilde.base_weight();
    if !classify(data, &base)?.generic_weakly_atypical {
        return Err(Error::NotGenericWeaklyAtypical(chi_tilde.rep.clone()));
    }
    let rank = data.rank();
    group
        .orbit(&chi_tilde.rep, None, false)?
        .into_iter()
        .rev()
        .find(|v| {
            let c = v.coords();
            c[rank - 1].is_zero() && c[..rank - 1].iter().all(|x| x.is_positive())
        })
        .map(|v| &v - data.rho())
        .ok_or_else(|| Error::NoMateRepresentative(chi_tilde.rep.clone()))
}

/// `(λ, χ)` with χ the g0-character of M(λ).
pub fn construct_mate(
    data: &SuperRootData,
    group: &WeylGroup,
    chi_tilde: &CentralCharacter,
) -> Result<(Weight, CentralCharacter)> {
    let lambda = choose_lambda(data, group, chi_tilde)?;
    let chi = g0_char_of(data, group, &lambda)?;
    Ok((lambda, chi))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitMateCheck {
    pub lambda: Weight,
    pub matched_gammas: Vec<Weight>,
    pub parities: Vec<Parity>,
    /// Two matched factors, one of each parity.
    pub verma_split: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MateReport {
    pub lambda: Weight,
    pub chi: CentralCharacter,
    pub matched_gammas: Vec<Weight>,
    pub matched_parities: Vec<Parity>,
    pub is_mate: bool,
    /// `(λ, λ-σ_l)`: highest weights of the even and odd g0-Verma parts.
    pub graded_split: Option<(Weight, Weight)>,
    /// The same test repeated for every λ' in the dot orbit of λ.
    pub orbit_checks: Vec<OrbitMateCheck>,
    pub orbit_consistent: bool,
}

fn matched(
    data: &SuperRootData,
    group: &WeylGroup,
    lambda: &Weight,
    chi: &CentralCharacter,
) -> Result<(Vec<Weight>, Vec<Parity>)> {
    let gs = gamma_sets(data.rank())?;
    let mut gammas = Vec::new();
    let mut parities = Vec::new();
    for g in &gs.gamma {
        if g0_char_of(data, group, &(lambda - g))? == *chi {
            gammas.push(g.clone());
            parities.push(Parity::from_count(gamma_size(g)));
        }
    }
    Ok((gammas, parities))
}

/// Exhaustively determines `{γ ∈ Γ : χ M(λ-γ) = 0}` and checks it is `{0, σ_l}`.
pub fn verify_mate(
    data: &SuperRootData,
    group: &WeylGroup,
    lambda: &Weight,
    chi: &CentralCharacter,
) -> Result<MateReport> {
    data.require_osp("mate verification")?;
    data.check_rank(lambda)?;
    chi.rep.ensure_rank(data.rank())?;
    let rank = data.rank();
    let sigma_l = last_sigma(rank);
    let (matched_gammas, matched_parities) = matched(data, group, lambda, chi)?;
    let is_mate = matched_gammas == vec![Weight::zero(rank), sigma_l.clone()]
        && matched_parities == vec![Parity::Even, Parity::Odd];

    let mut orbit_checks = Vec::new();
    for w in group.elements() {
        let lp = dot(data, w, lambda)?;
        if orbit_checks.iter().any(|c: &OrbitMateCheck| c.lambda == lp) {
            continue;
        }
        let (gammas, parities) = matched(data, group, &lp, chi)?;
        let mut sorted = parities.clone();
        sorted.sort();
        let verma_split = sorted == vec![Parity::Even, Parity::Odd];
        orbit_checks.push(OrbitMateCheck { lambda: lp, matched_gammas: gammas, parities, verma_split });
    }
    orbit_checks.sort_by(|a, b| a.lambda.cmp(&b.lambda));
    let orbit_consistent = orbit_checks.iter().all(|c| c.verma_split);

    Ok(MateReport {
        lambda: lambda.clone(),
        chi: chi.clone(),
        graded_split: is_mate.then(|| (lambda.clone(), lambda - &sigma_l)),
        matched_gammas,
        matched_parities,
        is_mate,
        orbit_checks,
        orbit_consistent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectCheck {
    /// Word of w in the even simple reflections.
    pub w: Vec<usize>,
    pub dot_lambda: Weight,
    pub x_size: usize,
    pub disjoint: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabInclusions {
    /// Stab(λ+ρ0) ⊆ Stab(λ+ρ)
    pub incl_rho0: bool,
    /// Stab(λ+ρ0-σ_l) ⊆ Stab(λ+ρ)
    pub incl_rho0_minus_sigma_l: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectMateReport {
    pub per_w: Vec<PerfectCheck>,
    pub stab_inclusions: StabInclusions,
    pub is_perfect: bool,
}

/// For every w: the pair `{w.λ - w✻0, w.λ - w✻σ_l}` must avoid
/// `X_w = {y.λ - y✻0, y.λ - y✻σ_l : y.λ < w.λ}`; plus the two stabilizer
/// inclusions.
pub fn verify_perfect(
    data: &SuperRootData,
    group: &WeylGroup,
    lambda: &Weight,
    chi: &CentralCharacter,
) -> Result<PerfectMateReport> {
    let mate = verify_mate(data, group, lambda, chi)?;
    if !mate.is_mate {
        return Err(Error::NotAMate(lambda.clone()));
    }
    let rank = data.rank();
    let zero = Weight::zero(rank);
    let sigma_l = last_sigma(rank);

    // (y.λ, {y.λ - y✻0, y.λ - y✻σ_l}) for every y
    let pairs = group
        .elements()
        .iter()
        .map(|y| {
            let yl = dot(data, y, lambda)?;
            let a = &yl - &star(data, y, &zero)?;
            let b = &yl - &star(data, y, &sigma_l)?;
            Ok((yl, [a, b]))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut per_w = Vec::with_capacity(pairs.len());
    for (w, (wl, wpair)) in group.elements().iter().zip(&pairs) {
        let mut x: BTreeSet<&Weight> = BTreeSet::new();
        for (yl, ypair) in &pairs {
            if data.lt(yl, wl)? {
                x.extend(ypair.iter());
            }
        }
        let disjoint = wpair.iter().all(|v| !x.contains(v));
        per_w.push(PerfectCheck { w: w.word().to_vec(), dot_lambda: wl.clone(), x_size: x.len(), disjoint });
    }

    let stab_rho = group.stabilizer(&(lambda + data.rho()))?;
    let l0 = lambda + data.rho0();
    let stab_inclusions = StabInclusions {
        incl_rho0: group.stabilizer(&l0)?.is_subgroup_of(&stab_rho),
        incl_rho0_minus_sigma_l: group.stabilizer(&(&l0 - &sigma_l))?.is_subgroup_of(&stab_rho),
    };
    let is_perfect =
        per_w.iter().all(|c| c.disjoint) && stab_inclusions.incl_rho0 && stab_inclusions.incl_rho0_minus_sigma_l;
    Ok(PerfectMateReport { per_w, stab_inclusions, is_perfect })
}

/// Characters χ in the support of M̃(λ) (λ dot-maximal) whose flag
/// multiplicity is 1 for every λ' ∈ W.λ.
pub fn candidate_mates_strong(
    data: &SuperRootData,
    group: &WeylGroup,
    chi_tilde: &CentralCharacter,
) -> Result<Vec<CentralCharacter>> {
    data.require_osp("strongly typical mate search")?;
    require_g(chi_tilde)?;
    if classify(data, &chi_tilde.base_weight())?.kind != TypicalityKind::StronglyTypical {
        return Err(Error::NotStronglyTypical(chi_tilde.rep.clone()));
    }
    let top = extremal_weights(data, group, chi_tilde)?
        .maximal
        .into_iter()
        .next_back()
        .expect("finite orbits have maximal elements");
    let mut candidates: Vec<CentralCharacter> =
        support_report(data, group, &top)?.into_iter().filter(|e| e.multiplicity == 1).map(|e| e.character).collect();
    for lp in weights_of_char(data, group, chi_tilde)? {
        let support = support_report(data, group, &lp)?;
        candidates.retain(|chi| support.iter().any(|e| e.character == *chi && e.multiplicity == 1));
    }
    candidates.sort();
    Ok(candidates)
}
