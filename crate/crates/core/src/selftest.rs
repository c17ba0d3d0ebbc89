//! Built-in regression suite over small worked examples with frozen values.

use serde::Serialize;

use crate::central::{classify, eval_t, extremal_weights, g0_char_of, g_char_of, weights_of_char, TypicalityKind};
use crate::character::{kostant_partition, truncated_character, truncated_induced_character};
use crate::equivalence::{BlockContext, Direction};
use crate::error::Result;
use crate::flags::{block_decompose, induction_flag, restriction_flag, GradedVermaFlag, Parity};
use crate::mates::{construct_mate, verify_mate, verify_perfect};
use crate::roots::FamilySpec;
use crate::weight::{rat, Weight};
use crate::{Ambient, Superalgebra};

#[derive(Clone, Debug, Serialize)]
pub struct SelfTestCase {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn w(c: &[(i64, i64)]) -> Weight {
    Weight::from_ratios(c)
}

fn check(name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> SelfTestCase {
    match f() {
        Ok((passed, detail)) => SelfTestCase { name, passed, detail },
        Err(e) => SelfTestCase { name, passed: false, detail: format!("error: {e}") },
    }
}

pub fn run_selftest() -> Vec<SelfTestCase> {
    let b1 = Superalgebra::new(FamilySpec::b0n(1).expect("valid")).expect("B(0,1)");
    let b2 = Superalgebra::new(FamilySpec::b0n(2).expect("valid")).expect("B(0,2)");
    let b3 = Superalgebra::new(FamilySpec::b0n(3).expect("valid")).expect("B(0,3)");
    let (d, g) = (&b2.data, &b2.weyl);
    let weak = w(&[(1, 2), (-1, 2)]);
    let strong = w(&[(1, 1), (1, 1)]);

    vec![
        check("rho B(0,2) = (3/2, 1/2)", || Ok((*d.rho() == w(&[(3, 2), (1, 2)]), d.rho().to_string()))),
        check("rho0 B(0,2) = (2, 1)", || Ok((*d.rho0() == w(&[(2, 1), (1, 1)]), d.rho0().to_string()))),
        check("|W| for l = 1, 2, 3", || {
            let orders = [b1.weyl.order(), g.order(), b3.weyl.order()];
            Ok((orders == [2, 8, 48], format!("{orders:?}")))
        }),
        check("partition B(0,2) even 2σ1 = 3", || {
            let n = kostant_partition(d, true, &w(&[(2, 1), (0, 1)]))?;
            Ok((n == 3, n.to_string()))
        }),
        check("partition B(0,2) even σ1 = 0", || {
            let n = kostant_partition(d, true, &w(&[(1, 1), (0, 1)]))?;
            Ok((n == 0, n.to_string()))
        }),
        check("T(1,1) = 15/4", || {
            let t = eval_t(d, &strong)?;
            Ok((t == rat(15, 4), t.to_string()))
        }),
        check("classify (1/2,-1/2) generic weakly atypical", || {
            let c = classify(d, &weak)?;
            Ok((c.kind == TypicalityKind::TypicalNotStrong && c.generic_weakly_atypical, format!("{:?}", c.kind)))
        }),
        check("classify -rho not generic", || {
            let c = classify(d, &-d.rho())?;
            Ok((c.vanishing_odd_roots.len() == 2 && !c.generic_weakly_atypical, format!("{:?}", c.kind)))
        }),
        check("dot orbit sizes 8 and 4", || {
            let a = weights_of_char(d, g, &g_char_of(d, g, &strong)?)?.len();
            let b = weights_of_char(d, g, &g_char_of(d, g, &weak)?)?.len();
            Ok(((a, b) == (8, 4), format!("{a}, {b}")))
        }),
        check("extremal weights of (1,1)", || {
            let e = extremal_weights(d, g, &g_char_of(d, g, &strong)?)?;
            let ok = e.maximal.iter().eq([&strong]) && e.minimal.iter().eq([&w(&[(-4, 1), (-2, 1)])]);
            Ok((ok, format!("{:?} / {:?}", e.maximal, e.minimal)))
        }),
        check("blocks of restriction flag (1/2,-1/2): 2 x 2", || {
            let blocks = block_decompose(d, g, &restriction_flag(d, &weak)?)?;
            let sizes: Vec<u64> = blocks.values().map(GradedVermaFlag::len).collect();
            Ok((sizes == [2, 2], format!("{sizes:?}")))
        }),
        check("blocks of restriction flag (1,1): 4 singletons", || {
            let blocks = block_decompose(d, g, &restriction_flag(d, &strong)?)?;
            Ok((blocks.len() == 4, blocks.len().to_string()))
        }),
        check("character identity M~(λ) = Σ M(λ-γ), depth 4", || {
            let lhs = truncated_character(d, &GradedVermaFlag::single(Ambient::G, weak.clone(), Parity::Even), 4)?;
            let rhs = truncated_character(d, &restriction_flag(d, &weak)?, 4)?;
            Ok((lhs == rhs, format!("{} weights", lhs.len())))
        }),
        check("character identity Ind M(μ) = Σ M~(μ+γ), depth 4", || {
            let lhs = truncated_induced_character(d, &weak, 4)?;
            let rhs = truncated_character(d, &induction_flag(d, &weak, Parity::Even)?, 4)?;
            Ok((lhs == rhs, format!("{} weights", lhs.len())))
        }),
        check("mate for λ+ρ = (2,0): χ rep (5/2,1/2)", || {
            let (lambda, chi) = construct_mate(d, g, &g_char_of(d, g, &weak)?)?;
            Ok((lambda == weak && chi.rep == w(&[(5, 2), (1, 2)]), chi.rep.to_string()))
        }),
        check("verify mate B(0,2) matched {0, σ2}", || {
            let r = verify_mate(d, g, &weak, &g0_char_of(d, g, &weak)?)?;
            Ok((r.is_mate && r.orbit_consistent, format!("{:?}", r.matched_gammas)))
        }),
        check("perfect mate B(0,2) and B(0,3)", || {
            let r2 = verify_perfect(d, g, &weak, &g0_char_of(d, g, &weak)?)?;
            let lam3 = &Weight::from_ints(&[3, 1, 0]) - b3.data.rho();
            let r3 = verify_perfect(&b3.data, &b3.weyl, &lam3, &g0_char_of(&b3.data, &b3.weyl, &lam3)?)?;
            Ok((r2.is_perfect && r3.is_perfect, format!("{} / {} elements", r2.per_w.len(), r3.per_w.len())))
        }),
        check("round trips weak (1/2,-1/2) and strong (1,1)", || {
            let weak_ctx = BlockContext::osp_weak_generic(d, g, &g_char_of(d, g, &weak)?)?;
            let strong_ctx = BlockContext::for_character(d, g, &g_char_of(d, g, &strong)?)?;
            let mut ok = true;
            for (ctx, lam) in [(&weak_ctx, &weak), (&strong_ctx, &strong)] {
                let m = GradedVermaFlag::single(Ambient::G0, lam.clone(), Parity::Even);
                let mt = GradedVermaFlag::single(Ambient::G, lam.clone(), Parity::Even);
                ok &= ctx.round_trip(&m, Direction::PsiPhi)?.equal;
                ok &= ctx.round_trip(&mt, Direction::PhiPsi)?.equal;
            }
            Ok((ok, String::new()))
        }),
        check("pi' swaps M(λ) and M(λ-σ2)", || {
            let ctx = BlockContext::osp_weak_generic(d, g, &g_char_of(d, g, &weak)?)?;
            let out = ctx.pi_prime(&GradedVermaFlag::single(Ambient::G0, weak.clone(), Parity::Even))?;
            let expected = GradedVermaFlag::single(Ambient::G0, w(&[(1, 2), (-3, 2)]), Parity::Even);
            Ok((out == expected, out.to_string()))
        }),
    ]
}
