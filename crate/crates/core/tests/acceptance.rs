//! Acceptance criteria 1–10. Every comparison is exact.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! PASS/FAIL line per criterion.

use bewley_agg::axioms::{
    ct_pareto_check, ct_pareto_star_check, exchange_pareto_check, exchange_pareto_star_check, pareto_star_check,
};
use bewley_agg::characterizations::{
    aggregate_society, check_condition, check_hull_bound, check_prop1, check_prop2, check_seu_existence,
    check_thm2_condition, utilitarian_decompose, Condition, SocietyRule, Status, DEFAULT_COMBO_CAP,
};
use bewley_agg::document::{ActsDocument, ProfileDocument};
use bewley_agg::geometry::{hulls_intersect, int, intersect, parse_rational, rat, Polytope, Rational, Vector, DEFAULT_DIM_CAP};
use bewley_agg::harness::{
    cross_validate, random_distribution, random_profile, CrossConfig, GenParams, SocietyRuleTag, SplitMix64, TasteMode,
};
use bewley_agg::preferences::{
    bewley_incomparable, check_c_minimal_agreement, no_taste_disagreement, Act, AffineUtility, Agent, Profile, WeightVector,
};
use bewley_agg::witnesses::{pick_lemma1, pick_spurious_pair, witness_for_thm2, witness_lemma1, witness_spurious_unanimity, WitnessCertificate};

type Outcome = Result<String, String>;

fn report(n: u32, title: &str, outcome: Outcome) {
    match outcome {
        Ok(detail) => println!("criterion {n:>2} PASS  {title}: {detail}"),
        Err(detail) => {
            println!("criterion {n:>2} FAIL  {title}: {detail}");
            panic!("criterion {n} failed: {detail}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T>(r: bewley_agg::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// Independent oracles.

/// `Σ_s p_s (c·f_s + k)` computed from raw parts.
fn eu_oracle(u: &AffineUtility, p: &Vector, f: &Act) -> Rational {
    let mut total = int(0);
    for (s, row) in f.rows().iter().enumerate() {
        let mut value = u.constant.clone();
        for (c, x) in u.coeffs.0.iter().zip(&row.0) {
            value += c * x;
        }
        total += &p.0[s] * value;
    }
    total
}

type P2 = (Rational, Rational);

fn cross(o: &P2, a: &P2, b: &P2) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Exact membership of `p` in `conv(points)` for distributions over at most
/// three states, via the projection onto the first two coordinates and a
/// monotone-chain hull. Shares no code with the LP-based predicates.
fn in_hull_oracle(p: &Vector, points: &[Vector]) -> bool {
    assert!(p.dim() <= 3, "oracle covers at most three states");
    let proj = |v: &Vector| -> P2 { (v.0[0].clone(), if v.dim() > 1 { v.0[1].clone() } else { int(0) }) };
    let target = proj(p);
    let mut pts: Vec<P2> = points.iter().map(proj).collect();
    pts.sort();
    pts.dedup();
    if pts.len() == 1 {
        return pts[0] == target;
    }
    let mut hull: Vec<P2> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &P2>> = if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for q in iter {
            while hull.len() >= start + 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], q) <= int(0) {
                hull.pop();
            }
            hull.push(q.clone());
        }
        hull.pop();
    }
    if hull.len() <= 2 {
        let (a, b) = (&pts[0], &pts[pts.len() - 1]);
        let between = |x: &Rational, lo: &Rational, hi: &Rational| {
            (lo <= x && x <= hi) || (hi <= x && x <= lo)
        };
        return cross(a, b, &target) == int(0) && between(&target.0, &a.0, &b.0) && between(&target.1, &a.1, &b.1);
    }
    (0..hull.len()).all(|i| cross(&hull[i], &hull[(i + 1) % hull.len()], &target) >= int(0))
}

fn subset_oracle(a: &Polytope, b: &Polytope) -> bool {
    a.vertices().iter().all(|v| in_hull_oracle(v, b.vertices()))
}

/// Re-checks a witness's strict inequalities from scratch.
fn witness_oracle(prof: &Profile, cert: &WitnessCertificate) -> bool {
    let agents_ok = cert.per_agent.iter().all(|m| {
        let agent = prof.party(m.party).unwrap();
        let margin = eu_oracle(&agent.utility, &m.prior, &cert.act_f) - eu_oracle(&agent.utility, &m.prior, &cert.act_x);
        margin > int(0) && margin == m.margin && in_hull_oracle(&m.prior, agent.beliefs.vertices())
    });
    let society = prof.society().unwrap();
    let society_ok = society.beliefs.vertices().iter().all(|w| {
        eu_oracle(&society.utility, w, &cert.act_x) - eu_oracle(&society.utility, w, &cert.act_f) >= cert.society_margin
    }) && cert.society_margin > int(0);
    agents_ok && society_ok && cert.act_x.is_constant()
}

// ---------------------------------------------------------------------------
// Fixtures.

fn pa(a: &str) -> Vector {
    let a = parse_rational(a).unwrap();
    Vector(vec![a.clone(), int(1) - a])
}

fn interval(lo: &str, hi: &str) -> Polytope {
    Polytope::new(vec![pa(lo), pa(hi)]).unwrap()
}

fn load(text: &str) -> Profile {
    ProfileDocument::parse(text).unwrap().to_profile().unwrap()
}

fn acts(text: &str) -> (Act, Act) {
    ActsDocument::parse(text).unwrap().pair().unwrap()
}

const EXAMPLE1: &str = include_str!("../data/example1.profile");
const EXAMPLE2_P08: &str = include_str!("../data/example2_p08.profile");
const SQ_VS_REFORM: &str = include_str!("../data/sq_vs_reform.acts");
const REFORM_VS_SQ: &str = include_str!("../data/reform_vs_sq_common.acts");

fn params_from(seed: u64, taste: TasteMode) -> GenParams {
    let mut rng = SplitMix64::new(seed ^ 0x5EED);
    let n = rng.range(2, 3) as usize;
    let m = rng.range(2, 3) as usize;
    let d_lo = if taste == TasteMode::Diversity { n as i64 } else { 1 };
    let d = rng.range(d_lo, 3) as usize;
    let rule = [SocietyRuleTag::Minkowski, SocietyRuleTag::HullUnion, SocietyRuleTag::Perturbed][rng.index(3)];
    GenParams { n, m, d, min_vertices: 1, max_vertices: 3, society_rule: rule, taste, ..GenParams::new(seed) }
}

// ---------------------------------------------------------------------------

fn criterion1() -> Outcome {
    let base = load(EXAMPLE1);
    let (sq, reform) = acts(SQ_VS_REFORM);
    for (i, agent) in base.agents.iter().enumerate() {
        let at = |p: &str| eu_oracle(&agent.utility, &pa(p), &reform) - eu_oracle(&agent.utility, &pa(p), &sq);
        let (lo, hi) = (at("0.2"), at("0.8"));
        ensure!(lo.clone() * &hi < int(0), "agent {i}: reform-minus-status-quo EU {lo} and {hi} do not change sign");
        ensure!(ok(bewley_incomparable(agent, &sq, &reform))?, "agent {i} is not incomparable");
    }
    let mut tested = 0;
    for a in 0..=10 {
        for b in a..=10 {
            let p0 = interval(&format!("{}", rat(a, 10)), &format!("{}", rat(b, 10)));
            for w in p0.vertices() {
                let social = eu_oracle(&base.society().unwrap().utility, w, &reform);
                ensure!(social == int(-20), "social EU of the reform at {w} is {social}, not -20");
            }
            let society = Agent::new(base.society().unwrap().utility.clone(), p0);
            let prof = base.with_society(society);
            let v = ok(pareto_star_check(&prof, &sq, &reform))?;
            ensure!(v.violation && v.revalidate(&prof, &sq, &reform), "no violation for P0 = [{a}/10, {b}/10]");
            tested += 1;
        }
    }
    Ok(format!("both agents incomparable; violation for all {tested} tested P0"))
}

fn criterion2() -> Outcome {
    let prof = load(EXAMPLE2_P08);
    let (reform, sq) = acts(REFORM_VS_SQ);
    let v = ok(ct_pareto_star_check(&prof, &reform, &sq))?;
    ensure!(v.violation && v.no_taste_disagreement == Some(true), "ct-pareto-star not violated: {v:?}");
    ensure!(v.revalidate(&prof, &reform, &sq), "verdict certificates do not re-validate");
    let thm2 = ok(check_thm2_condition(&prof, DEFAULT_COMBO_CAP))?;
    ensure!(thm2.status == Status::Fails && thm2.revalidate(&prof), "thm2 did not fail with a valid report");
    // The combo (0.6, 0.3) spans [0.3, 0.6], which misses 0.8.
    ensure!(!in_hull_oracle(&pa("0.8"), &[pa("0.6"), pa("0.3")]), "oracle disagrees on the failing combo");
    let cert = ok(witness_for_thm2(&prof, &thm2))?;
    ensure!(cert.revalidate(&prof) && witness_oracle(&prof, &cert), "witness does not re-validate");
    let hull = ok(check_hull_bound(&prof))?;
    ensure!(hull.status == Status::Holds && hull.revalidate(&prof), "hull-bound does not hold");
    Ok(format!("violation found; thm2 fails; {} witness re-validates; hull-bound holds", cert.kind.name()))
}

fn criterion3() -> Outcome {
    let sets = [interval("0.6", "0.8"), interval("0.2", "0.3")];
    let p = ok(check_seu_existence(&sets, DEFAULT_COMBO_CAP))?.ok_or("no prior returned")?;
    ensure!(p.is_distribution(), "{p} is not a distribution");
    ensure!(rat(3, 10) <= p.0[0] && p.0[0] <= rat(6, 10), "p_A = {} outside [0.3, 0.6]", p.0[0]);
    for a in sets[0].vertices() {
        for b in sets[1].vertices() {
            ensure!(in_hull_oracle(&p, &[a.clone(), b.clone()]), "{p} not in conv({a}, {b})");
            ensure!(
                hulls_intersect(&[a.clone(), b.clone()], std::slice::from_ref(&p)).is_some(),
                "library disagrees on conv({a}, {b})"
            );
        }
    }
    Ok(format!("p = {p}, in all four combo hulls"))
}

fn criterion4() -> Outcome {
    let profiles = 210u64;
    let (mut holds, mut fails) = (0, 0);
    for seed in 0..profiles {
        let prof = ok(random_profile(&params_from(seed, TasteMode::MinimalAgreement)))?;
        let verdict = ok(cross_validate(&prof, Condition::Thm2, &CrossConfig::new(1000, seed)))?;
        ensure!(verdict.is_consistent(), "seed {seed}: {verdict:?}");
        match ok(check_thm2_condition(&prof, DEFAULT_COMBO_CAP))?.status {
            Status::Holds => holds += 1,
            _ => fails += 1,
        }
    }
    ensure!(holds > 0 && fails > 0, "only one outcome exercised ({holds} hold, {fails} fail)");
    Ok(format!("{profiles}/{profiles} consistent ({holds} hold, {fails} fail), 1000 trials each"))
}

fn criterion5() -> Outcome {
    let (mut spurious, mut lemma1) = (0, 0);
    let mut seed = 0u64;
    while (spurious < 50 || lemma1 < 50) && seed < 5000 {
        let mut params = params_from(seed, TasteMode::Diversity);
        params.min_vertices = 2;
        seed += 1;
        let prof = ok(random_profile(&params))?;
        let dec = ok(utilitarian_decompose(&prof, None))?.ok_or(format!("seed {seed}: c-diverse without decomposition"))?;
        if let Some((i1, i2, p1, p2)) = pick_spurious_pair(&prof, &dec) {
            ensure!(p1 != p2, "seed {seed}: chosen priors coincide");
            let cert = ok(witness_spurious_unanimity(&prof, &dec, i1, i2, &p1, &p2))?;
            ensure!(cert.revalidate(&prof) && witness_oracle(&prof, &cert), "seed {seed}: spurious witness fails");
            let v = ok(pareto_star_check(&prof, &cert.act_x, &cert.act_f))?;
            ensure!(v.violation, "seed {seed}: spurious witness does not violate pareto-star");
            spurious += 1;
        }
        if let Some((i, p)) = ok(pick_lemma1(&prof, &dec))? {
            ensure!(!in_hull_oracle(&p, prof.society().unwrap().beliefs.vertices()), "seed {seed}: chosen prior is in P0");
            let cert = ok(witness_lemma1(&prof, &dec, i, &p))?;
            ensure!(cert.revalidate(&prof) && witness_oracle(&prof, &cert), "seed {seed}: lemma1 witness fails");
            let v = ok(pareto_star_check(&prof, &cert.act_x, &cert.act_f))?;
            ensure!(v.violation, "seed {seed}: lemma1 witness does not violate pareto-star");
            lemma1 += 1;
        }
    }
    ensure!(spurious >= 50 && lemma1 >= 50, "only {spurious} spurious and {lemma1} lemma1 cases in {seed} seeds");
    Ok(format!("{spurious} spurious-unanimity and {lemma1} lemma1 witnesses re-validate and violate"))
}

fn random_alpha(rng: &mut SplitMix64, n: usize) -> WeightVector {
    loop {
        let w: Vec<Rational> = (0..n).map(|_| int(rng.range(0, 3))).collect();
        if w.iter().any(|x| *x > int(0)) {
            return WeightVector(w);
        }
    }
}

fn criterion6() -> Outcome {
    let profiles = 100u64;
    for seed in 0..profiles {
        let base = ok(random_profile(&params_from(seed, TasteMode::MinimalAgreement)))?;
        let mut rng = SplitMix64::new(seed + 77);
        let alpha = random_alpha(&mut rng, base.n());
        let gamma = random_distribution(&mut rng, base.n(), 6);
        for rule in [SocietyRule::Minkowski(gamma), SocietyRule::HullUnion] {
            let society = ok(aggregate_society(&base, &alpha, int(rng.range(-2, 2)), &rule))?;
            let prof = base.with_society(society);
            let hull = ok(check_hull_bound(&prof))?;
            let thm2 = ok(check_thm2_condition(&prof, DEFAULT_COMBO_CAP))?;
            ensure!(hull.holds() && thm2.holds(), "seed {seed}, {rule:?}: hull-bound {:?}, thm2 {:?}", hull.status, thm2.status);
            ensure!(hull.revalidate(&prof) && thm2.revalidate(&prof), "seed {seed}: evidence does not re-validate");
        }
    }
    Ok(format!("{profiles} profiles, minkowski and hull-union societies pass both"))
}

fn criterion7() -> Outcome {
    let (mut equal, mut unequal) = (0, 0);
    for seed in 0..60u64 {
        let mut params = params_from(seed, TasteMode::MinimalAgreement);
        params.common_beliefs = true;
        params.society_rule = [SocietyRuleTag::HullUnion, SocietyRuleTag::Perturbed][(seed % 2) as usize];
        let prof = ok(random_profile(&params))?;
        let both = ok(check_thm2_condition(&prof, DEFAULT_COMBO_CAP))?.holds() && ok(check_hull_bound(&prof))?.holds();
        let p = &prof.agents[0].beliefs;
        let p0 = &prof.society().unwrap().beliefs;
        let same = subset_oracle(p, p0) && subset_oracle(p0, p);
        ensure!(both == same, "seed {seed}: both conditions {both}, P0 = P {same}");
        if same {
            equal += 1;
        } else {
            unequal += 1;
        }
    }
    ensure!(equal > 0 && unequal > 0, "only one side exercised ({equal} equal, {unequal} unequal)");

    let mut checked = 0;
    for seed in 0..300u64 {
        let mut params = params_from(seed + 10_000, TasteMode::MinimalAgreement);
        params.denominator = 4;
        let prof = ok(random_profile(&params))?;
        if !ok(check_thm2_condition(&prof, DEFAULT_COMBO_CAP))?.holds() {
            continue;
        }
        let sets: Vec<Polytope> = prof.agents.iter().map(|a| a.beliefs.clone()).collect();
        let Some(common) = ok(intersect(&sets, DEFAULT_DIM_CAP))? else {
            continue;
        };
        for v in common.vertices() {
            ensure!(sets.iter().all(|s| in_hull_oracle(v, s.vertices())), "seed {seed}: {v} is not in every P_i");
            ensure!(in_hull_oracle(v, prof.society().unwrap().beliefs.vertices()), "seed {seed}: {v} not in P0");
        }
        checked += 1;
    }
    ensure!(checked > 0, "no general profile with thm2 and a nonempty intersection");
    Ok(format!("iff holds on 60 common-belief profiles ({equal} equal, {unequal} not); {checked} intersections inside P0"))
}

fn sample_outcome(rng: &mut SplitMix64, d: usize) -> Vector {
    Vector((0..d).map(|_| rat(rng.range(-12, 12), rng.range(1, 3))).collect())
}

fn criterion8() -> Outcome {
    let (mut pairs, mut exchange_hits, mut exchange_star_hits) = (0, 0, 0);
    let mut profiles = Vec::new();
    for seed in 0..40u64 {
        profiles.push(ok(random_profile(&params_from(seed + 20_000, TasteMode::MinimalAgreement)))?);
    }
    profiles.push(load(EXAMPLE2_P08));
    for prof in &profiles {
        let (top, low) = check_c_minimal_agreement(prof).ok_or("profile lacks c-minimal agreement")?;
        let mut rng = SplitMix64::new(pairs as u64);
        for k in 0..150 {
            let act = |rng: &mut SplitMix64, constant: bool| -> Act {
                if k % 2 == 0 {
                    let x = sample_outcome(rng, prof.outcome_dim);
                    if constant {
                        return Act::constant(&x, prof.states);
                    }
                    Act::new((0..prof.states).map(|_| sample_outcome(rng, prof.outcome_dim)).collect()).unwrap()
                } else {
                    let point = |rng: &mut SplitMix64| Vector::lerp(&top, &low, &rat(rng.range(0, 12), 12));
                    if constant {
                        return Act::constant(&point(rng), prof.states);
                    }
                    Act::new((0..prof.states).map(|_| point(rng)).collect()).unwrap()
                }
            };
            let side = rng.below(3);
            let f = act(&mut rng, side == 0);
            let g = act(&mut rng, side == 1);
            if !ok(no_taste_disagreement(prof, &f, &g))? {
                continue;
            }
            pairs += 1;
            if ok(exchange_pareto_check(prof, &f, &g))?.premise_holds {
                exchange_hits += 1;
                ensure!(ok(ct_pareto_check(prof, &f, &g))?.premise_holds, "exchange-pareto premise without ct-pareto premise");
            }
            if ok(exchange_pareto_star_check(prof, &f, &g))?.premise_holds {
                exchange_star_hits += 1;
                ensure!(
                    ok(ct_pareto_star_check(prof, &f, &g))?.premise_holds,
                    "exchange-pareto-star premise without ct-pareto-star premise"
                );
            }
        }
        let (p1, hull) = (ok(check_prop1(prof))?, ok(check_hull_bound(prof))?);
        ensure!(p1.status == hull.status, "prop1 {:?} vs hull-bound {:?}", p1.status, hull.status);
        let (p2, thm2) = (ok(check_prop2(prof, DEFAULT_COMBO_CAP))?, ok(check_thm2_condition(prof, DEFAULT_COMBO_CAP))?);
        ensure!(p2.status == thm2.status, "prop2 {:?} vs thm2 {:?}", p2.status, thm2.status);
    }
    ensure!(exchange_hits > 0 && exchange_star_hits > 0, "premises never exercised");
    Ok(format!(
        "{pairs} common-taste pairs, {exchange_hits} exchange and {exchange_star_hits} exchange* premises implied; verdicts equal on {} profiles",
        profiles.len()
    ))
}

/// A point of `poly` with at least two positive weights on distinct vertices,
/// hence not a vertex.
fn interior_point(rng: &mut SplitMix64, poly: &Polytope) -> Vector {
    let vs = poly.vertices();
    loop {
        let w: Vec<i64> = (0..vs.len()).map(|_| rng.range(0, 5)).collect();
        if w.iter().filter(|&&x| x > 0).count() < 2 {
            continue;
        }
        let total: i64 = w.iter().sum();
        let weights: Vec<Rational> = w.iter().map(|&x| rat(x, total)).collect();
        return Vector::combination(&weights, vs);
    }
}

fn criterion9() -> Outcome {
    let mut passing = 0;
    let mut seed = 0u64;
    while passing < 100 && seed < 2000 {
        let mut params = params_from(seed + 30_000, TasteMode::MinimalAgreement);
        params.min_vertices = 2;
        seed += 1;
        let prof = ok(random_profile(&params))?;
        if !ok(check_thm2_condition(&prof, DEFAULT_COMBO_CAP))?.holds() {
            continue;
        }
        passing += 1;
        let p0 = prof.society().unwrap().beliefs.vertices().to_vec();
        let mut rng = SplitMix64::new(seed);
        for _ in 0..1000 {
            let combo: Vec<Vector> = prof.agents.iter().map(|a| interior_point(&mut rng, &a.beliefs)).collect();
            for (q, a) in combo.iter().zip(&prof.agents) {
                ensure!(!a.beliefs.vertices().contains(q), "sampled point {q} is a vertex");
            }
            let (gamma, mu) = hulls_intersect(&combo, &p0).ok_or(format!("seed {seed}: interior combo misses P0"))?;
            let (gamma, mu) = (Vector(gamma), Vector(mu));
            ensure!(
                gamma.is_distribution()
                    && mu.is_distribution()
                    && Vector::combination(&gamma, &combo) == Vector::combination(&mu, &p0),
                "seed {seed}: meeting certificate does not re-validate"
            );
        }
    }
    ensure!(passing >= 100, "only {passing} passing profiles in {seed} seeds");
    Ok(format!("{passing} passing profiles x 1000 interior combos all meet P0"))
}

/// Machine-readable reports from one run of the fixed-seed workload.
fn suite_reports(dir: &std::path::Path) -> Vec<Vec<u8>> {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let commands: Vec<Vec<String>> = [
        "check example1.profile pareto-star --acts sq_vs_reform.acts",
        "check example2_p08.profile thm2",
        "check common_singleton.profile thm1",
        "check example2_p08.profile seu",
        "witness example1.profile spurious-unanimity",
        "witness example2_p08.profile ct-pareto-star",
        "fuzz example1.profile pareto-star --trials 300 --seed 7",
        "fuzz example2_p08.profile ct-pareto-star --trials 300 --seed 7",
        "plot-data example1.profile sq_vs_reform.acts",
    ]
    .iter()
    .map(|c| {
        c.split(' ')
            .map(|w| if w.contains('.') { format!("{data}/{w}") } else { w.to_string() })
            .collect()
    })
    .collect();
    let mut out = Vec::new();
    for (k, cmd) in commands.iter().enumerate() {
        let path = dir.join(format!("report{k}"));
        let mut args = vec!["bewley-agg".to_string(), "--format".into(), "machine".into(), "--out".into()];
        args.push(path.display().to_string());
        args.extend(cmd.iter().cloned());
        let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
        let code = bewley_agg::cli::run(args, &mut stdout, &mut stderr);
        stdout.extend(format!("exit {code}").bytes());
        out.push(stdout);
        out.push(std::fs::read(&path).unwrap());
    }
    for seed in 0..15 {
        let prof = random_profile(&params_from(seed, TasteMode::MinimalAgreement)).unwrap();
        for condition in Condition::ALL {
            let report = check_condition(&prof, condition, DEFAULT_COMBO_CAP).unwrap();
            out.push(serde_json::to_vec(&report).unwrap());
        }
        out.push(serde_json::to_vec(&cross_validate(&prof, Condition::Thm2, &CrossConfig::new(100, seed)).unwrap()).unwrap());
    }
    out
}

fn criterion10() -> Outcome {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let first = suite_reports(a.path());
    let second = suite_reports(b.path());
    ensure!(first.len() == second.len(), "different report counts");
    for (k, (x, y)) in first.iter().zip(&second).enumerate() {
        ensure!(x == y, "report {k} differs between runs");
    }
    let bytes: usize = first.iter().map(Vec::len).sum();
    Ok(format!("{} reports ({bytes} bytes) byte-identical across two runs", first.len()))
}

#[test]
fn criterion_01_opposed_tastes() {
    report(1, "opposed tastes, common beliefs", criterion1());
}

#[test]
fn criterion_02_shared_taste() {
    report(2, "common taste, heterogeneous beliefs", criterion2());
}

#[test]
fn criterion_03_seu_existence() {
    report(3, "common SEU prior", criterion3());
}

#[test]
fn criterion_04_thm2_equivalence() {
    report(4, "thm2 cross-validation", criterion4());
}

#[test]
fn criterion_05_pareto_star_witnesses() {
    report(5, "spurious-unanimity and lemma1 witnesses", criterion5());
}

#[test]
fn criterion_06_aggregation_rules() {
    report(6, "minkowski and hull-union societies", criterion6());
}

#[test]
fn criterion_07_common_beliefs() {
    report(7, "common belief sets", criterion7());
}

#[test]
fn criterion_08_exchange_delegation() {
    report(8, "exchange axioms", criterion8());
}

#[test]
fn criterion_09_vertex_combo_guard() {
    report(9, "interior combos", criterion9());
}

#[test]
fn criterion_10_determinism() {
    report(10, "determinism", criterion10());
}

#[test]
fn oracle_self_check() {
    let tri = [Vector::from_ints(&[1, 0, 0]), Vector::from_ints(&[0, 1, 0]), Vector::from_ints(&[0, 0, 1])];
    let c = Vector(vec![rat(1, 3), rat(1, 3), rat(1, 3)]);
    assert!(in_hull_oracle(&c, &tri));
    assert!(!in_hull_oracle(&c, &tri[..2]));
    assert!(in_hull_oracle(&Vector(vec![rat(1, 2), rat(1, 2), int(0)]), &tri[..2]));
    assert!(in_hull_oracle(&pa("0.5"), &[pa("0.2"), pa("0.8")]));
    assert!(!in_hull_oracle(&pa("0.9"), &[pa("0.2"), pa("0.8")]));
    assert!(in_hull_oracle(&pa("0.2"), &[pa("0.2")]));
}
