//! The functors Ψ: Ñ ↦ Ñ_χ (∩ Ñ_0 in the weakly atypical case) and
//! Φ: N ↦ (Ind N)_χ̃, computed on graded Verma flags.
//!
//! Flags carry no morphisms: Ψ and Φ are evaluated on the Verma factors of
//! their arguments, which is exact because both functors are exact and
//! respect the block decomposition.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::central::{g0_char_of, g_char_of, Ambient, CentralCharacter, TypicalityKind};
use crate::error::{Error, Result};
use crate::flags::{block_at, induction_flag, restriction_flag_graded, GradedVermaFlag, Parity};
use crate::mates::{candidate_mates_strong, construct_mate, verify_mate};
use crate::roots::SuperRootData;
use crate::weyl::WeylGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    StronglyTypical,
    OspWeakGeneric,
}

/// A pair of blocks `(χ̃, χ)` between which Ψ and Φ act.
#[derive(Clone, Debug)]
pub struct BlockContext {
    data: Arc<SuperRootData>,
    group: Arc<WeylGroup>,
    chi_tilde: CentralCharacter,
    chi: CentralCharacter,
    mode: Mode,
}

impl BlockContext {
    /// Strongly typical χ̃ paired with one of its flag-level candidate mates.
    pub fn strongly_typical(
        data: &SuperRootData,
        group: &WeylGroup,
        chi_tilde: &CentralCharacter,
        chi: &CentralCharacter,
    ) -> Result<Self> {
        if !candidate_mates_strong(data, group, chi_tilde)?.contains(chi) {
            return Err(Error::InvalidContext(format!("{chi} is not a candidate mate for {chi_tilde}")));
        }
        Ok(BlockContext {
            data: Arc::new(data.clone()),
            group: Arc::new(group.clone()),
            chi_tilde: chi_tilde.clone(),
            chi: chi.clone(),
            mode: Mode::StronglyTypical,
        })
    }

    /// Generic weakly atypical χ̃ with its constructed mate.
    pub fn osp_weak_generic(data: &SuperRootData, group: &WeylGroup, chi_tilde: &CentralCharacter) -> Result<Self> {
        let (lambda, chi) = construct_mate(data, group, chi_tilde)?;
        if !verify_mate(data, group, &lambda, &chi)?.is_mate {
            return Err(Error::NotAMate(lambda));
        }
        Ok(BlockContext {
            data: Arc::new(data.clone()),
            group: Arc::new(group.clone()),
            chi_tilde: chi_tilde.clone(),
            chi,
            mode: Mode::OspWeakGeneric,
        })
    }

    /// Picks the mode from the classification of χ̃. In the strongly typical
    /// case the mate is the g0-character of M(λ) for the dot-maximal λ.
    pub fn for_character(data: &SuperRootData, group: &WeylGroup, chi_tilde: &CentralCharacter) -> Result<Self> {
        let cls = crate::central::classify(data, &chi_tilde.base_weight())?;
        match cls.kind {
            TypicalityKind::StronglyTypical => {
                let top = crate::central::extremal_weights(data, group, chi_tilde)?
                    .maximal
                    .into_iter()
                    .next_back()
                    .expect("nonempty orbit");
                let chi = g0_char_of(data, group, &top)?;
                Self::strongly_typical(data, group, chi_tilde, &chi)
            }
            _ => Self::osp_weak_generic(data, group, chi_tilde),
        }
    }

    pub fn data(&self) -> &SuperRootData {
        &self.data
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn chi_tilde(&self) -> &CentralCharacter {
        &self.chi_tilde
    }

    pub fn chi(&self) -> &CentralCharacter {
        &self.chi
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn require_ambient(flag: &GradedVermaFlag, ambient: Ambient) -> Result<()> {
        if flag.ambient() == ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch { expected: ambient.to_string(), found: flag.ambient().to_string() })
        }
    }

    /// Restricts every factor, keeps the χ-block and, for osp weak generic,
    /// its even part (returned ungraded, i.e. with parity 0).
    pub fn psi(&self, flag: &GradedVermaFlag) -> Result<GradedVermaFlag> {
        Self::require_ambient(flag, Ambient::G)?;
        let mut out = GradedVermaFlag::new(Ambient::G0);
        for (w, p, m) in flag.iter() {
            if g_char_of(&self.data, &self.group, w)? != self.chi_tilde {
                return Err(Error::WrongCharacter { weight: w.clone() });
            }
            let block = block_at(&self.data, &self.group, &restriction_flag_graded(&self.data, w, p)?, &self.chi)?;
            let kept = match self.mode {
                Mode::OspWeakGeneric => block.filter_parity(Parity::Even),
                Mode::StronglyTypical => block,
            };
            for (v, q, k) in kept.iter() {
                out.insert(v.clone(), q, k * m);
            }
        }
        Ok(out)
    }

    /// Induces every factor and keeps the χ̃-block. In the osp weak generic
    /// case the argument is ungraded and taken to be even.
    pub fn phi(&self, flag: &GradedVermaFlag) -> Result<GradedVermaFlag> {
        Self::require_ambient(flag, Ambient::G0)?;
        let mut out = GradedVermaFlag::new(Ambient::G);
        for (w, p, m) in flag.iter() {
            if g0_char_of(&self.data, &self.group, w)? != self.chi {
                return Err(Error::WrongCharacter { weight: w.clone() });
            }
            let base = match self.mode {
                Mode::OspWeakGeneric => Parity::Even,
                Mode::StronglyTypical => p,
            };
            let block = block_at(&self.data, &self.group, &induction_flag(&self.data, w, base)?, &self.chi_tilde)?;
            for (v, q, k) in block.iter() {
                out.insert(v.clone(), q, k * m);
            }
        }
        Ok(out)
    }

    pub fn round_trip(&self, flag: &GradedVermaFlag, direction: Direction) -> Result<RoundTrip> {
        let (forward, back) = match direction {
            Direction::PsiPhi => {
                let f = self.phi(flag)?;
                let b = self.psi(&f)?;
                (f, b)
            }
            Direction::PhiPsi => {
                let f = self.psi(flag)?;
                let b = self.phi(&f)?;
                (f, b)
            }
        };
        let expected = match (direction, self.mode) {
            (Direction::PsiPhi, Mode::OspWeakGeneric) => flag.with_parity(Parity::Even),
            _ => flag.clone(),
        };
        Ok(RoundTrip { equal: back == expected, input: flag.clone(), forward, back })
    }

    /// Π′(N) = ((Ind N)_χ̃)_{χ;1}, returned ungraded.
    pub fn pi_prime(&self, flag: &GradedVermaFlag) -> Result<GradedVermaFlag> {
        if self.mode != Mode::OspWeakGeneric {
            return Err(Error::ModeMismatch("OspWeakGeneric"));
        }
        Self::require_ambient(flag, Ambient::G0)?;
        let induced = self.phi(flag)?;
        let mut out = GradedVermaFlag::new(Ambient::G0);
        for (w, p, m) in induced.iter() {
            let block = block_at(&self.data, &self.group, &restriction_flag_graded(&self.data, w, p)?, &self.chi)?;
            for (v, _, k) in block.filter_parity(Parity::Odd).iter() {
                out.insert(v.clone(), Parity::Even, k * m);
            }
        }
        Ok(out)
    }
}

/// `PsiPhi` checks Ψ(Φ(N)) = N on g0-flags; `PhiPsi` checks Φ(Ψ(Ñ)) = Ñ on g-flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "psi_phi")]
    PsiPhi,
    #[serde(rename = "phi_psi")]
    PhiPsi,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundTrip {
    pub input: GradedVermaFlag,
    pub forward: GradedVermaFlag,
    pub back: GradedVermaFlag,
    pub equal: bool,
}

pub fn psi(ctx: &BlockContext, flag: &GradedVermaFlag) -> Result<GradedVermaFlag> {
    ctx.psi(flag)
}

pub fn phi(ctx: &BlockContext, flag: &GradedVermaFlag) -> Result<GradedVermaFlag> {
    ctx.phi(flag)
}

pub fn round_trip(ctx: &BlockContext, flag: &GradedVermaFlag, direction: Direction) -> Result<RoundTrip> {
    ctx.round_trip(flag, direction)
}

/// Parity swap Π.
pub fn pi(flag: &GradedVermaFlag) -> GradedVermaFlag {
    flag.flipped()
}

pub fn pi_prime(ctx: &BlockContext, flag: &GradedVermaFlag) -> Result<GradedVermaFlag> {
    ctx.pi_prime(flag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_family, FamilySpec};
    use crate::weight::Weight;
    use crate::weyl::generate;

    fn setup(l: usize) -> (SuperRootData, WeylGroup) {
        let d = build_family(FamilySpec::b0n(l).unwrap()).unwrap();
        let g = generate(&d).unwrap();
        (d, g)
    }

    fn weak_ctx() -> (BlockContext, Weight) {
        let (d, g) = setup(2);
        let lam = Weight::from_ratios(&[(1, 2), (-1, 2)]);
        let chi_t = g_char_of(&d, &g, &lam).unwrap();
        (BlockContext::osp_weak_generic(&d, &g, &chi_t).unwrap(), lam)
    }

    fn strong_ctx() -> (BlockContext, Weight) {
        let (d, g) = setup(2);
        let lam = Weight::from_ints(&[1, 1]);
        let chi_t = g_char_of(&d, &g, &lam).unwrap();
        let chi = g0_char_of(&d, &g, &lam).unwrap();
        (BlockContext::strongly_typical(&d, &g, &chi_t, &chi).unwrap(), lam)
    }

    #[test]
    fn psi_examples() {
        let (ctx, lam) = weak_ctx();
        let out = ctx.psi(&GradedVermaFlag::single(Ambient::G, lam.clone(), Parity::Even)).unwrap();
        assert_eq!(out, GradedVermaFlag::single(Ambient::G0, lam, Parity::Even));

        let (ctx, lam) = strong_ctx();
        let out = ctx.psi(&GradedVermaFlag::single(Ambient::G, lam.clone(), Parity::Even)).unwrap();
        assert_eq!(out, GradedVermaFlag::single(Ambient::G0, lam, Parity::Even));
        assert!(ctx.psi(&GradedVermaFlag::new(Ambient::G)).unwrap().is_empty());
    }

    #[test]
    fn phi_examples() {
        let (ctx, lam) = weak_ctx();
        let out = ctx.phi(&GradedVermaFlag::single(Ambient::G0, lam.clone(), Parity::Even)).unwrap();
        assert_eq!(out, GradedVermaFlag::single(Ambient::G, lam.clone(), Parity::Even));
        let low = Weight::from_ratios(&[(1, 2), (-3, 2)]);
        let out = ctx.phi(&GradedVermaFlag::single(Ambient::G0, low, Parity::Even)).unwrap();
        assert_eq!(out, GradedVermaFlag::single(Ambient::G, lam, Parity::Odd));

        let (ctx, lam) = strong_ctx();
        let out = ctx.phi(&GradedVermaFlag::single(Ambient::G0, lam.clone(), Parity::Even)).unwrap();
        assert_eq!(out, GradedVermaFlag::single(Ambient::G, lam, Parity::Even));
    }

    #[test]
    fn wrong_character_is_rejected() {
        let (ctx, _) = weak_ctx();
        let stray = GradedVermaFlag::single(Ambient::G, Weight::from_ints(&[1, 1]), Parity::Even);
        assert!(matches!(ctx.psi(&stray), Err(Error::WrongCharacter { .. })));
        let stray0 = GradedVermaFlag::single(Ambient::G0, Weight::from_ints(&[1, 1]), Parity::Even);
        assert!(matches!(ctx.phi(&stray0), Err(Error::WrongCharacter { .. })));
        assert!(matches!(ctx.phi(&stray), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn round_trip_examples() {
        let (ctx, lam) = weak_ctx();
        let m = GradedVermaFlag::single(Ambient::G0, lam.clone(), Parity::Even);
        assert!(ctx.round_trip(&m, Direction::PsiPhi).unwrap().equal);
        let mt = GradedVermaFlag::single(Ambient::G, lam, Parity::Even);
        assert!(ctx.round_trip(&mt, Direction::PhiPsi).unwrap().equal);

        let (ctx, lam) = strong_ctx();
        let mt = GradedVermaFlag::single(Ambient::G, lam.clone(), Parity::Even);
        assert!(ctx.round_trip(&mt, Direction::PhiPsi).unwrap().equal);
        let m = GradedVermaFlag::single(Ambient::G0, lam, Parity::Even);
        assert!(ctx.round_trip(&m, Direction::PsiPhi).unwrap().equal);

        assert!(ctx.round_trip(&GradedVermaFlag::new(Ambient::G0), Direction::PsiPhi).unwrap().equal);
        assert!(ctx.round_trip(&GradedVermaFlag::new(Ambient::G), Direction::PhiPsi).unwrap().equal);
    }

    #[test]
    fn involutions() {
        let (ctx, lam) = weak_ctx();
        let f =
            GradedVermaFlag::from_entries(Ambient::G, [(lam.clone(), Parity::Even), (Weight::zero(2), Parity::Odd)]);
        assert_eq!(pi(&pi(&f)), f);

        let m = GradedVermaFlag::single(Ambient::G0, lam.clone(), Parity::Even);
        let low = GradedVermaFlag::single(Ambient::G0, Weight::from_ratios(&[(1, 2), (-3, 2)]), Parity::Even);
        assert_eq!(ctx.pi_prime(&m).unwrap(), low);
        assert_eq!(ctx.pi_prime(&ctx.pi_prime(&m).unwrap()).unwrap(), m);
        assert_eq!(ctx.pi_prime(&ctx.pi_prime(&low).unwrap()).unwrap(), low);

        let (sctx, lam) = strong_ctx();
        let m = GradedVermaFlag::single(Ambient::G0, lam, Parity::Even);
        assert_eq!(sctx.pi_prime(&m).unwrap_err(), Error::ModeMismatch("OspWeakGeneric"));
    }

    #[test]
    fn non_candidate_is_rejected() {
        let (d, g) = setup(2);
        let chi_t = g_char_of(&d, &g, &Weight::from_ints(&[1, 1])).unwrap();
        let weak_chi = g0_char_of(&d, &g, &Weight::from_ratios(&[(1, 2), (-1, 2)])).unwrap();
        assert!(matches!(BlockContext::strongly_typical(&d, &g, &chi_t, &weak_chi), Err(Error::InvalidContext(_))));
    }
}
