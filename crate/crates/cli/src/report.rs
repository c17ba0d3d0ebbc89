use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use supertypical::central::{classify as classify_weight, extremal_weights, g0_char_of, g_char_of, TypicalityKind};
use supertypical::character::{truncated_character, truncated_induced_character};
use supertypical::flags::{block_decompose, blocks_to_json, induction_flag, restriction_flag, support_report};
use supertypical::mates::{construct_mate, verify_mate, verify_perfect as verify_perfect_pair};
use supertypical::selftest::run_selftest;
use supertypical::{Ambient, BlockContext, Direction, GradedVermaFlag, Parity, Weight, WeightFunction};

use crate::{Ctx, Failure};

pub type Output = Result<(String, bool), Failure>;

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn join(ws: &[Weight]) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
}

fn merged(head: Value, body: impl Serialize) -> Value {
    let mut out = head;
    if let (Value::Object(o), Value::Object(b)) = (&mut out, serde_json::to_value(body).expect("serializable")) {
        o.extend(b);
    }
    out
}

pub fn roots(ctx: &Ctx) -> (String, bool) {
    let d = &ctx.alg.data;
    if ctx.json {
        let v = json!({
            "family": d.spec().to_string(),
            "rank": d.rank(),
            "even_positive_roots": d.delta0_plus(),
            "odd_positive_roots": d.delta1_plus(),
            "isotropic_roots": d.isotropic_roots(),
            "simple_roots": d.simple_roots(),
            "even_simple_roots": d.even_simple_roots(),
            "rho": d.rho(),
            "rho0": d.rho0(),
            "rho1": d.rho1(),
            "weyl_order": ctx.alg.weyl.order(),
        });
        return (pretty(&v), true);
    }
    let mut s = String::new();
    writeln!(s, "family: {}", d.spec()).unwrap();
    writeln!(s, "even positive roots: {}", join(d.delta0_plus())).unwrap();
    writeln!(s, "odd positive roots: {}", join(d.delta1_plus())).unwrap();
    let iso = d.isotropic_roots();
    writeln!(s, "isotropic roots: {}", if iso.is_empty() { "none".to_string() } else { join(iso) }).unwrap();
    writeln!(s, "simple roots: {}", join(d.simple_roots())).unwrap();
    writeln!(s, "rho = {}  rho0 = {}  rho1 = {}", d.rho(), d.rho0(), d.rho1()).unwrap();
    writeln!(s, "|W| = {}", ctx.alg.weyl.order()).unwrap();
    (s, true)
}

pub fn classify(ctx: &Ctx, lambda: &Weight) -> Output {
    let d = &ctx.alg.data;
    let c = classify_weight(d, lambda)?;
    let shifted = lambda + d.rho();
    if ctx.json {
        return Ok((pretty(&merged(json!({ "lambda": lambda, "lambda_plus_rho": shifted }), &c)), true));
    }
    let mut s = String::new();
    writeln!(s, "lambda = {lambda}  lambda+rho = {shifted}").unwrap();
    writeln!(s, "kind: {:?}", c.kind).unwrap();
    writeln!(s, "T = {}", c.t_value).unwrap();
    writeln!(s, "Q = {}", c.q_value).unwrap();
    writeln!(s, "vanishing odd roots: [{}]", join(&c.vanishing_odd_roots)).unwrap();
    writeln!(s, "generic: {}", c.generic_weakly_atypical).unwrap();
    Ok((s, true))
}

pub fn orbit(ctx: &Ctx, lambda: &Weight) -> Output {
    let (d, g) = (&ctx.alg.data, &ctx.alg.weyl);
    let chi = g_char_of(d, g, lambda)?;
    let orbit: Vec<Weight> = g.orbit(lambda, Some(d.rho()), true)?.into_iter().collect();
    let kind = classify_weight(d, lambda)?.kind;
    let extremal = if kind == TypicalityKind::Atypical { None } else { Some(extremal_weights(d, g, &chi)?) };
    if ctx.json {
        let v = json!({
            "lambda": lambda,
            "central_character": chi,
            "kind": kind,
            "orbit_size": orbit.len(),
            "orbit": orbit,
            "extremal": extremal,
        });
        return Ok((pretty(&v), true));
    }
    let mut s = String::new();
    writeln!(s, "central character: {chi}").unwrap();
    writeln!(s, "kind: {kind:?}").unwrap();
    writeln!(s, "orbit size: {}", orbit.len()).unwrap();
    if let Some(e) = &extremal {
        let max: Vec<Weight> = e.maximal.iter().cloned().collect();
        let min: Vec<Weight> = e.minimal.iter().cloned().collect();
        writeln!(s, "maximal: {}", join(&max)).unwrap();
        writeln!(s, "minimal: {}", join(&min)).unwrap();
    }
    if ctx.verbose {
        for w in &orbit {
            writeln!(s, "  {w}").unwrap();
        }
    }
    Ok((s, true))
}

fn weight_function_json(f: &WeightFunction) -> Value {
    serde_json::to_value(f).expect("serializable")
}

pub fn flag(ctx: &Ctx, lambda: &Weight, induced: bool, character: bool) -> Output {
    let d = &ctx.alg.data;
    let flag = if induced { induction_flag(d, lambda, Parity::Even)? } else { restriction_flag(d, lambda)? };
    let check = if character {
        let direct = if induced {
            truncated_induced_character(d, lambda, ctx.depth)?
        } else {
            truncated_character(d, &GradedVermaFlag::single(Ambient::G, lambda.clone(), Parity::Even), ctx.depth)?
        };
        let summed = truncated_character(d, &flag, ctx.depth)?;
        Some((direct == summed, summed))
    } else {
        None
    };
    if ctx.json {
        let mut v = json!({ "lambda": lambda, "induced": induced, "flag": flag });
        if let Some((agrees, summed)) = &check {
            v["depth"] = json!(ctx.depth);
            v["character"] = weight_function_json(summed);
            v["character_agrees"] = json!(agrees);
        }
        return Ok((pretty(&v), true));
    }
    let mut s = String::new();
    writeln!(s, "{flag}").unwrap();
    if let Some((agrees, summed)) = &check {
        writeln!(
            s,
            "truncated character (depth {}): {} weights, total multiplicity {}",
            ctx.depth,
            summed.len(),
            summed.total()
        )
        .unwrap();
        if ctx.verbose {
            for (w, m) in summed.iter() {
                writeln!(s, "  {w}: {m}").unwrap();
            }
        }
        writeln!(s, "agrees with direct computation: {agrees}").unwrap();
    }
    Ok((s, true))
}

pub fn blocks(ctx: &Ctx, lambda: &Weight) -> Output {
    let (d, g) = (&ctx.alg.data, &ctx.alg.weyl);
    let blocks = block_decompose(d, g, &restriction_flag(d, lambda)?)?;
    if ctx.json {
        let v = json!({
            "lambda": lambda,
            "blocks": blocks_to_json(&blocks),
            "support": support_report(d, g, lambda)?,
        });
        return Ok((pretty(&v), true));
    }
    let mut s = String::new();
    for (chi, flag) in &blocks {
        writeln!(s, "{chi}: {flag}").unwrap();
    }
    Ok((s, true))
}

pub fn mate(ctx: &Ctx, lambda: &Weight) -> Output {
    let (d, g) = (&ctx.alg.data, &ctx.alg.weyl);
    let chi_tilde = g_char_of(d, g, lambda)?;
    let (mate_lambda, chi) = construct_mate(d, g, &chi_tilde)?;
    let report = verify_mate(d, g, &mate_lambda, &chi)?;
    let perfect = if report.is_mate { Some(verify_perfect_pair(d, g, &mate_lambda, &chi)?) } else { None };
    let is_perfect = perfect.as_ref().is_some_and(|p| p.is_perfect);
    if ctx.json {
        let mut v = json!({
            "chi_tilde": chi_tilde,
            "lambda": mate_lambda,
            "lambda_plus_rho": &mate_lambda + d.rho(),
            "chi": chi,
            "matched_gammas": report.matched_gammas,
            "matched_parities": report.matched_parities,
            "is_mate": report.is_mate,
            "graded_split": report.graded_split,
            "orbit_consistent": report.orbit_consistent,
            "is_perfect": is_perfect,
        });
        if ctx.verbose {
            v["orbit_checks"] = serde_json::to_value(&report.orbit_checks).expect("serializable");
            v["perfect"] = serde_json::to_value(&perfect).expect("serializable");
        }
        return Ok((pretty(&v), true));
    }
    let mut s = String::new();
    writeln!(s, "chi~ = {chi_tilde}").unwrap();
    writeln!(s, "lambda = {mate_lambda}  lambda+rho = {}", &mate_lambda + d.rho()).unwrap();
    writeln!(s, "chi = {chi}").unwrap();
    writeln!(s, "matched gammas: [{}] parities {:?}", join(&report.matched_gammas), report.matched_parities).unwrap();
    writeln!(s, "is mate: {}", report.is_mate).unwrap();
    writeln!(s, "orbit consistent: {}", report.orbit_consistent).unwrap();
    writeln!(s, "is perfect: {is_perfect}").unwrap();
    if ctx.verbose {
        for c in &report.orbit_checks {
            writeln!(s, "  {}: [{}] {:?}", c.lambda, join(&c.matched_gammas), c.parities).unwrap();
        }
    }
    Ok((s, true))
}

pub fn verify_perfect(ctx: &Ctx, lambda: &Weight) -> Output {
    let (d, g) = (&ctx.alg.data, &ctx.alg.weyl);
    let chi = g0_char_of(d, g, lambda)?;
    let report = verify_perfect_pair(d, g, lambda, &chi)?;
    if ctx.json {
        return Ok((pretty(&merged(json!({ "lambda": lambda, "chi": chi }), &report)), true));
    }
    let mut s = String::new();
    writeln!(s, "lambda = {lambda}  chi = {chi}").unwrap();
    let bad = report.per_w.iter().filter(|c| !c.disjoint).count();
    writeln!(s, "checked {} elements, {} not disjoint", report.per_w.len(), bad).unwrap();
    if ctx.verbose {
        for c in &report.per_w {
            writeln!(s, "  w = {:?}: w.lambda = {}, |X| = {}, disjoint = {}", c.w, c.dot_lambda, c.x_size, c.disjoint)
                .unwrap();
        }
    }
    writeln!(s, "Stab(lambda+rho0) in Stab(lambda+rho): {}", report.stab_inclusions.incl_rho0).unwrap();
    writeln!(s, "Stab(lambda+rho0-sigma_l) in Stab(lambda+rho): {}", report.stab_inclusions.incl_rho0_minus_sigma_l)
        .unwrap();
    writeln!(s, "is perfect: {}", report.is_perfect).unwrap();
    Ok((s, true))
}

#[derive(Serialize)]
struct TripLine {
    input: GradedVermaFlag,
    image: GradedVermaFlag,
    back: GradedVermaFlag,
    equal: bool,
}

pub fn equiv(ctx: &Ctx, lambda: &Weight) -> Output {
    let (d, g) = (&ctx.alg.data, &ctx.alg.weyl);
    let chi_tilde = g_char_of(d, g, lambda)?;
    let block = BlockContext::for_character(d, g, &chi_tilde)?;
    let mut lines = Vec::new();
    for w in g.orbit(lambda, Some(d.rho()), true)? {
        for p in [Parity::Even, Parity::Odd] {
            let r = block.round_trip(&GradedVermaFlag::single(Ambient::G, w.clone(), p), Direction::PhiPsi)?;
            lines.push(("phi_psi", TripLine { input: r.input, image: r.forward, back: r.back, equal: r.equal }));
        }
    }
    for mu in g.orbit(&block.chi().base_weight(), Some(d.rho0()), true)? {
        let r = block.round_trip(&GradedVermaFlag::single(Ambient::G0, mu, Parity::Even), Direction::PsiPhi)?;
        lines.push(("psi_phi", TripLine { input: r.input, image: r.forward, back: r.back, equal: r.equal }));
    }
    let all_equal = lines.iter().all(|(_, t)| t.equal);
    if ctx.json {
        let trips: Vec<Value> = lines.iter().map(|(dir, t)| merged(json!({ "direction": dir }), t)).collect();
        let v = json!({
            "mode": block.mode(),
            "chi_tilde": block.chi_tilde(),
            "chi": block.chi(),
            "round_trips": trips,
            "all_equal": all_equal,
        });
        return Ok((pretty(&v), true));
    }
    let mut s = String::new();
    writeln!(s, "mode: {:?}", block.mode()).unwrap();
    writeln!(s, "chi~ = {}  chi = {}", block.chi_tilde(), block.chi()).unwrap();
    for (dir, t) in &lines {
        if ctx.verbose || !t.equal {
            writeln!(
                s,
                "  {dir}: {} -> {} -> {} ({})",
                t.input,
                t.image,
                t.back,
                if t.equal { "ok" } else { "MISMATCH" }
            )
            .unwrap();
        }
    }
    writeln!(s, "{} round trips, all equal: {all_equal}", lines.len()).unwrap();
    Ok((s, true))
}

pub fn selftest(json: bool) -> (String, bool) {
    let cases = run_selftest();
    let ok = cases.iter().all(|c| c.passed);
    if json {
        return (pretty(&json!({ "cases": cases, "all_passed": ok })), ok);
    }
    let mut s = String::new();
    for c in &cases {
        writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
    }
    writeln!(s, "{}/{} passed", cases.iter().filter(|c| c.passed).count(), cases.len()).unwrap();
    (s, ok)
}
