use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use supertypical::central::{classify, eval_t, g0_char_of, g_char_of, weights_of_char, TypicalityKind};
use supertypical::character::truncated_character;
use supertypical::flags::{block_decompose, gamma_sets, restriction_flag};
use supertypical::mates::candidate_mates_strong;
use supertypical::weight::rat;
use supertypical::weyl::{dot, star};
use supertypical::{
    Ambient, BlockContext, Direction, FamilySpec, GradedVermaFlag, Parity, Rational, Superalgebra, Weight,
};

fn algebra(l: usize) -> Superalgebra {
    Superalgebra::new(FamilySpec::b0n(l).unwrap()).unwrap()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..7).prop_map(|(p, q)| rat(p, q))
}

fn weight(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(rational(), rank).prop_map(Weight::new)
}

fn lattice_weight(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-4i64..5, rank).prop_map(|c| Weight::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!(a.denom().is_positive());
    }

    #[test]
    fn leq_is_a_partial_order(a in lattice_weight(3), b in lattice_weight(3), c in lattice_weight(3)) {
        let alg = algebra(3);
        let d = &alg.data;
        prop_assert!(d.leq(&a, &a).unwrap());
        if d.leq(&a, &b).unwrap() && d.leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if d.leq(&a, &b).unwrap() && d.leq(&b, &c).unwrap() {
            prop_assert!(d.leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn action_preserves_form_and_dot_is_an_action(mu in weight(3), nu in weight(3), i in 0usize..48, j in 0usize..48) {
        let alg = algebra(3);
        let (d, g) = (&alg.data, &alg.weyl);
        let (w1, w2) = (&g.elements()[i], &g.elements()[j]);
        prop_assert_eq!(d.inner(&w1.act(&mu).unwrap(), &w1.act(&nu).unwrap()).unwrap(), d.inner(&mu, &nu).unwrap());
        let lhs = dot(d, w1, &dot(d, w2, &mu).unwrap()).unwrap();
        prop_assert_eq!(lhs, dot(d, &w1.compose(w2), &mu).unwrap());
    }

    #[test]
    fn canonical_rep_is_orbit_invariant(mu in weight(3), i in 0usize..48) {
        let alg = algebra(3);
        let g = &alg.weyl;
        let rep = g.canonical_rep(&mu).unwrap();
        prop_assert_eq!(g.canonical_rep(&rep).unwrap(), rep.clone());
        prop_assert_eq!(g.canonical_rep(&g.elements()[i].act(&mu).unwrap()).unwrap(), rep.clone());
        prop_assert_eq!(g.canonical_rep_exhaustive(&mu), rep);
    }

    #[test]
    fn ghost_value_and_classification(lam in weight(2), i in 0usize..8) {
        let alg = algebra(2);
        let (d, g) = (&alg.data, &alg.weyl);
        let t = eval_t(d, &lam).unwrap();
        let c = classify(d, &lam).unwrap();
        prop_assert_eq!(!t.is_zero(), c.kind == TypicalityKind::StronglyTypical);
        prop_assert_eq!(c.vanishing_odd_roots.is_empty(), c.kind == TypicalityKind::StronglyTypical);
        let moved = dot(d, &g.elements()[i], &lam).unwrap();
        prop_assert_eq!(eval_t(d, &moved).unwrap().abs(), t.abs());
        prop_assert_eq!(g_char_of(d, g, &moved).unwrap(), g_char_of(d, g, &lam).unwrap());
    }

    #[test]
    fn atypicality_is_dot_invariant(lam in lattice_weight(3), fam in 0usize..2, i in 0usize..64) {
        let spec = [FamilySpec::gl(2, 1).unwrap(), FamilySpec::bmn(1, 2).unwrap()][fam];
        let alg = Superalgebra::new(spec).unwrap();
        let (d, g) = (&alg.data, &alg.weyl);
        let w = &g.elements()[i % g.order()];
        let moved = dot(d, w, &lam).unwrap();
        let a = classify(d, &lam).unwrap().kind == TypicalityKind::Atypical;
        let b = classify(d, &moved).unwrap().kind == TypicalityKind::Atypical;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn g0_characters_on_rho0_dot_orbits(mu in weight(2), i in 0usize..8) {
        let alg = algebra(2);
        let (d, g) = (&alg.data, &alg.weyl);
        let w = &g.elements()[i];
        let moved = &w.act(&(&mu + d.rho0())).unwrap() - d.rho0();
        prop_assert_eq!(g0_char_of(d, g, &moved).unwrap(), g0_char_of(d, g, &mu).unwrap());
    }

    #[test]
    fn truncated_character_is_additive(a in lattice_weight(2), b in lattice_weight(2), depth in 0usize..4) {
        let alg = algebra(2);
        let d = &alg.data;
        let fa = GradedVermaFlag::single(Ambient::G, a, Parity::Even);
        let fb = GradedVermaFlag::single(Ambient::G, b, Parity::Odd);
        // pin the truncation window with a common top entry
        let union = fa.union(&fb).unwrap();
        let top = union.iter().map(|(w, _, _)| w.clone()).max_by_key(|w| d.height(w).unwrap()).unwrap();
        let anchor = GradedVermaFlag::single(Ambient::G, top, Parity::Even);
        let lhs = truncated_character(d, &union.union(&anchor).unwrap(), depth).unwrap();
        let rhs = &truncated_character(d, &fa.union(&anchor).unwrap(), depth).unwrap()
            + &truncated_character(d, &fb.union(&anchor).unwrap(), depth).unwrap();
        let anchor_only = truncated_character(d, &anchor, depth).unwrap();
        prop_assert_eq!(&lhs + &anchor_only, rhs);
    }

    #[test]
    fn blocks_partition_the_flag(lam in weight(3)) {
        let alg = algebra(3);
        let (d, g) = (&alg.data, &alg.weyl);
        let flag = restriction_flag(d, &lam).unwrap();
        let blocks = block_decompose(d, g, &flag).unwrap();
        let mut rebuilt = GradedVermaFlag::new(Ambient::G0);
        for b in blocks.values() {
            rebuilt = rebuilt.union(b).unwrap();
        }
        prop_assert_eq!(rebuilt, flag);
        prop_assert_eq!(blocks.values().map(|b| b.len()).sum::<u64>(), 8);
    }

    #[test]
    fn block_structure_is_star_equivariant(lam in weight(3), i in 0usize..48) {
        let alg = algebra(3);
        let (d, g) = (&alg.data, &alg.weyl);
        let w = &g.elements()[i];
        let gs = gamma_sets(3).unwrap();
        let moved = dot(d, w, &lam).unwrap();
        for gamma in &gs.gamma {
            let image = star(d, w, gamma).unwrap();
            prop_assert_eq!(
                g0_char_of(d, g, &(&moved - &image)).unwrap(),
                g0_char_of(d, g, &(&lam - gamma)).unwrap()
            );
        }
        let mults = |x: &Weight| -> Vec<u64> {
            let mut v: Vec<u64> = block_decompose(d, g, &restriction_flag(d, x).unwrap()).unwrap().values().map(|b| b.len()).collect();
            v.sort();
            v
        };
        prop_assert_eq!(mults(&moved), mults(&lam));
    }

    #[test]
    fn weak_generic_blocks_have_balanced_parity(k1 in 1i64..8, k2 in 1i64..8, q in 1i64..3, i in 0usize..48) {
        let alg = algebra(3);
        let (d, g) = (&alg.data, &alg.weyl);
        let shifted = Weight::new(vec![rat(k1, q), rat(k2, q + 1), rat(0, 1)]);
        let lam = dot(d, &g.elements()[i], &(&shifted - d.rho())).unwrap();
        prop_assume!(classify(d, &lam).unwrap().generic_weakly_atypical);
        for block in block_decompose(d, g, &restriction_flag(d, &lam).unwrap()).unwrap().values() {
            let even = block.filter_parity(Parity::Even).len();
            prop_assert_eq!(2 * even, block.len());
        }
    }

    #[test]
    fn flag_json_round_trip(lam in weight(2)) {
        let alg = algebra(2);
        let flag = restriction_flag(&alg.data, &lam).unwrap();
        let text = serde_json::to_string(&flag).unwrap();
        prop_assert_eq!(serde_json::from_str::<GradedVermaFlag>(&text).unwrap(), flag);
    }
}

fn weak_context(alg: &Superalgebra, shifted: &Weight) -> BlockContext {
    let chi_t = g_char_of(&alg.data, &alg.weyl, &(shifted - alg.data.rho())).unwrap();
    BlockContext::osp_weak_generic(&alg.data, &alg.weyl, &chi_t).unwrap()
}

#[test]
fn functors_are_additive() {
    let alg = algebra(2);
    let ctx = weak_context(&alg, &Weight::from_ints(&[3, 0]));
    let orbit: Vec<Weight> =
        alg.weyl.orbit(&ctx.chi_tilde().base_weight(), Some(alg.data.rho()), true).unwrap().into_iter().collect();
    let a = GradedVermaFlag::single(Ambient::G, orbit[0].clone(), Parity::Even);
    let b = GradedVermaFlag::single(Ambient::G, orbit[1].clone(), Parity::Odd);
    let sum = a.union(&b).unwrap();
    assert_eq!(ctx.psi(&sum).unwrap(), ctx.psi(&a).unwrap().union(&ctx.psi(&b).unwrap()).unwrap());
    let n = ctx.psi(&sum).unwrap();
    let parts: Vec<GradedVermaFlag> =
        n.iter().map(|(w, p, _)| GradedVermaFlag::single(Ambient::G0, w.clone(), p)).collect();
    let mut acc = GradedVermaFlag::new(Ambient::G);
    for p in &parts {
        acc = acc.union(&ctx.phi(p).unwrap()).unwrap();
    }
    assert_eq!(ctx.phi(&n).unwrap(), acc);
}

#[test]
fn pi_prime_shadows_parity_swap() {
    for (l, shifted) in [(2, vec![2, 0]), (2, vec![0, 5]), (3, vec![3, 1, 0]), (3, vec![1, 0, 2])] {
        let alg = algebra(l);
        let ctx = weak_context(&alg, &Weight::from_ints(&shifted));
        let chi_orbit = alg.weyl.orbit(&ctx.chi().base_weight(), Some(alg.data.rho0()), true).unwrap();
        for mu in chi_orbit {
            let n = GradedVermaFlag::single(Ambient::G0, mu, Parity::Even);
            let a = ctx.phi(&n).unwrap();
            let b = ctx.phi(&ctx.pi_prime(&n).unwrap()).unwrap();
            assert_eq!(a.flipped(), b, "{ctx:?}");
            let weights = |f: &GradedVermaFlag| f.iter().map(|(w, _, m)| (w.clone(), m)).collect::<BTreeMap<_, _>>();
            assert_eq!(weights(&a), weights(&b));
        }
    }
}

#[test]
fn star_permutes_gamma_and_its_parity_classes() {
    for l in 1..=4 {
        let alg = algebra(l);
        let gs = gamma_sets(l).unwrap();
        for w in alg.weyl.elements() {
            let mut image: Vec<Weight> = gs.gamma.iter().map(|g| star(&alg.data, w, g).unwrap()).collect();
            image.sort();
            let mut all = gs.gamma.clone();
            all.sort();
            assert_eq!(image, all);
            let mut even: Vec<Weight> = gs.gamma0.iter().map(|g| star(&alg.data, w, g).unwrap()).collect();
            even.sort();
            let (mut g0, mut g1) = (gs.gamma0.clone(), gs.gamma1.clone());
            g0.sort();
            g1.sort();
            assert!(even == g0 || even == g1);
        }
    }
}

// Flag multiplicity one is not enough: candidates whose g0-orbit is smaller
// than the g-orbit lose Verma factors under Φ∘Ψ.
#[test]
fn strong_candidates_round_trip_iff_stabilizer_is_trivial() {
    for (l, shifted) in [(2, "5/2,3/2"), (2, "3,1"), (2, "2,1/2"), (3, "3,2,1")] {
        let alg = algebra(l);
        let (d, g) = (&alg.data, &alg.weyl);
        let chi_t = g_char_of(d, g, &(&Weight::parse(shifted).unwrap() - d.rho())).unwrap();
        for chi in candidate_mates_strong(d, g, &chi_t).unwrap() {
            let ctx = BlockContext::strongly_typical(d, g, &chi_t, &chi).unwrap();
            let mut ok = true;
            for w in weights_of_char(d, g, &chi_t).unwrap() {
                for p in [Parity::Even, Parity::Odd] {
                    let flag = GradedVermaFlag::single(Ambient::G, w.clone(), p);
                    ok &= ctx.round_trip(&flag, Direction::PhiPsi).unwrap().equal;
                }
            }
            for mu in g.orbit(&chi.base_weight(), Some(d.rho0()), true).unwrap() {
                let flag = GradedVermaFlag::single(Ambient::G0, mu, Parity::Even);
                ok &= ctx.round_trip(&flag, Direction::PsiPhi).unwrap().equal;
            }
            let trivial = g.stabilizer(&chi.rep).unwrap().order() == 1;
            assert_eq!(ok, trivial, "{shifted}: {chi}");
        }
    }
}

// Signed permutations of (k, ..., 0), repeated k allowed.
#[test]
fn mate_pipeline_on_permuted_grid() {
    use supertypical::mates::{construct_mate, verify_mate, verify_perfect};
    let ks = [rat(1, 2), rat(1, 1), rat(3, 2), rat(2, 1), rat(3, 1), rat(7, 2)];
    let mut points: Vec<Weight> = ks.iter().map(|k| Weight::new(vec![k.clone(), rat(0, 1)])).collect();
    for a in &ks {
        for b in &ks {
            points.push(Weight::new(vec![a.clone(), b.clone(), rat(0, 1)]));
        }
    }
    for base in points {
        let alg = algebra(base.rank());
        let (d, g) = (&alg.data, &alg.weyl);
        let chi_t = g_char_of(d, g, &(&base - d.rho())).unwrap();
        for w in g.elements() {
            let shifted = w.act(&base).unwrap();
            assert_eq!(g_char_of(d, g, &(&shifted - d.rho())).unwrap(), chi_t);
        }
        let (lam, chi) = construct_mate(d, g, &chi_t).unwrap();
        let report = verify_mate(d, g, &lam, &chi).unwrap();
        assert!(report.is_mate && report.orbit_consistent, "{base}");
        assert!(verify_perfect(d, g, &lam, &chi).unwrap().is_perfect, "{base}");
    }
}
