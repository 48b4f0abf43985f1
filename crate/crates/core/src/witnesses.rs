//! Explicit counterexample acts for failing conditions.
//!
//! Each construction returns a constant act `x` and an act `f` such that every
//! agent withholds `x ≽ f` while society has `x ≽ f`. Every "small enough"
//! parameter is set to half of its binding bound, computed exactly.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::axioms::{check_axiom, Axiom};
use crate::characterizations::{
    utilitarian_decompose, ConditionReport, Decomposition, Failure, VertexCombo,
};
use crate::error::{Error, Result};
use crate::geometry::{int, membership, rat, separate, vector::serde_rational, Hyperplane, LinearProgram, Rational, Relation, Vector};
use crate::preferences::{
    check_c_diversity, check_c_minimal_agreement, eu, no_taste_disagreement, Act, Party, Profile, WeightVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// Acts on a commonly ranked segment, from a combo whose hull misses `P₀`.
    CtParetoStar,
    /// One weighted agent's prior outside `P₀`.
    Lemma1,
    /// Two weighted agents with distinct priors.
    SpuriousUnanimity,
    /// Constant acts every agent strictly ranks one way and society does not;
    /// exists whenever no utilitarian decomposition does.
    TasteConflict,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::CtParetoStar => "ct-pareto-star",
            WitnessKind::Lemma1 => "lemma1",
            WitnessKind::SpuriousUnanimity => "spurious-unanimity",
            WitnessKind::TasteConflict => "taste-conflict",
        }
    }
}

/// `EU_party(prior, f) − u_party(x) = margin > 0`, so `x ⋡ f` for that party.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgentMargin {
    pub party: Party,
    pub prior: Vector,
    #[serde(with = "serde_rational")]
    pub margin: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WitnessParams {
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub epsilon: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub nu: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub b: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<WeightVector>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub beta: Option<Rational>,
}

mod opt_rational {
    use serde::Serializer;

    use crate::geometry::{format_rational, Rational};

    pub fn serialize<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_str(&format_rational(v)),
            None => s.serialize_none(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    pub kind: WitnessKind,
    /// The axiom the pair `(act_x, act_f)` violates.
    pub axiom: Axiom,
    pub act_f: Act,
    pub act_x: Act,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hyperplane: Option<Hyperplane>,
    pub params: WitnessParams,
    pub per_agent: Vec<AgentMargin>,
    /// `min` over vertices `w` of `P₀` of `u₀(x) − EU₀(w, f)`.
    #[serde(with = "serde_rational")]
    pub society_margin: Rational,
    /// The vertex attaining `society_margin`.
    pub society_prior: Vector,
}

impl WitnessCertificate {
    /// Re-evaluates every stored margin and re-runs the axiom checker.
    pub fn revalidate(&self, prof: &Profile) -> bool {
        self.check(prof).unwrap_or(false)
    }

    fn check(&self, prof: &Profile) -> Result<bool> {
        let society = prof.society()?;
        prof.check_act(&self.act_f)?;
        prof.check_act(&self.act_x)?;
        if !self.act_x.is_constant() || self.per_agent.len() != prof.n() {
            return Ok(false);
        }
        let x = &self.act_x.rows()[0];
        for (i, m) in self.per_agent.iter().enumerate() {
            let agent = &prof.agents[i];
            let margin = eu(&agent.utility, &m.prior, &self.act_f) - agent.utility.value(x);
            if m.party != Party::Agent(i) || margin != m.margin || !margin.is_positive() || !membership(&m.prior, &agent.beliefs)? {
                return Ok(false);
            }
        }
        let (margin, vertex) = society_margin(prof, &self.act_f, &self.act_x)?;
        if margin != self.society_margin || vertex != self.society_prior || !margin.is_positive() {
            return Ok(false);
        }
        if let Some(h) = &self.hyperplane {
            if h.normal.dim() != prof.states || society.beliefs.vertices().iter().any(|w| h.value(w) >= h.threshold) {
                return Ok(false);
            }
        }
        if self.axiom.is_common_taste() && !no_taste_disagreement(prof, &self.act_f, &self.act_x)? {
            return Ok(false);
        }
        Ok(check_axiom(prof, self.axiom, &self.act_x, &self.act_f)?.violation)
    }
}

fn society_margin(prof: &Profile, f: &Act, x: &Act) -> Result<(Rational, Vector)> {
    let society = prof.society()?;
    let ux = society.utility.value(&x.rows()[0]);
    let (margin, vertex) = society
        .beliefs
        .vertices()
        .iter()
        .map(|w| (&ux - eu(&society.utility, w, f), w))
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("belief set has a vertex");
    Ok((margin, vertex.clone()))
}

fn agent_margins(prof: &Profile, f: &Act, x: &Act, priors: Vec<Vector>) -> Vec<AgentMargin> {
    let xv = &x.rows()[0];
    prof.agents
        .iter()
        .zip(priors)
        .enumerate()
        .map(|(i, (a, prior))| AgentMargin {
            party: Party::Agent(i),
            margin: eu(&a.utility, &prior, f) - a.utility.value(xv),
            prior,
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn finish(
    prof: &Profile,
    kind: WitnessKind,
    axiom: Axiom,
    act_f: Act,
    act_x: Act,
    hyperplane: Option<Hyperplane>,
    params: WitnessParams,
    priors: Vec<Vector>,
) -> Result<WitnessCertificate> {
    let per_agent = agent_margins(prof, &act_f, &act_x, priors);
    let (society_margin, society_prior) = society_margin(prof, &act_f, &act_x)?;
    Ok(WitnessCertificate { kind, axiom, act_f, act_x, hyperplane, params, per_agent, society_margin, society_prior })
}

/// Positive affine rescaling of `(λ, κ)` into `[0, 1]`. On distributions the
/// rescaled values are `(λ·p − lo) / (hi − lo)`, so strict separation survives.
fn rescale(h: &Hyperplane) -> Result<Hyperplane> {
    let values = h.normal.iter().chain(std::iter::once(&h.threshold));
    let lo = values.clone().min().expect("nonempty").clone();
    let hi = values.max().expect("nonempty").clone();
    if hi == lo {
        return Err(Error::InvalidSeparation("constant normal separates nothing on the simplex".into()));
    }
    let width = &hi - &lo;
    Ok(Hyperplane {
        normal: Vector(h.normal.iter().map(|l| (l - &lo) / &width).collect()),
        threshold: (&h.threshold - &lo) / &width,
    })
}

fn default_priors(prof: &Profile) -> Vec<Vector> {
    prof.agents.iter().map(|a| a.beliefs.vertices()[0].clone()).collect()
}

fn decomposition_params(dec: &Decomposition) -> WitnessParams {
    WitnessParams { alpha: Some(dec.alpha.clone()), beta: Some(dec.beta.clone()), ..WitnessParams::default() }
}

/// Half of `min(½, bound)`; `¼` when nothing binds.
fn half_of_bound(gap: &Rational, load: &Rational) -> Rational {
    let half = rat(1, 2);
    if load.is_zero() {
        return rat(1, 4);
    }
    let bound = gap / load;
    (if bound < half { bound } else { half }) / int(2)
}

/// Common-Taste Pareto* counterexample from a combo whose hull misses `P₀`.
///
/// With `z(t) = t·x* + (1−t)·x_*` and `(λ', κ')` the separator rescaled into
/// `[0, 1]`, `f(s) = z(λ'(s))` and `x = z(κ')`. Every agent strictly prefers
/// `f` under its combo prior; society prefers `x` at every prior.
pub fn witness_ct_pareto_star(
    prof: &Profile,
    combo: &VertexCombo,
    h: &Hyperplane,
    x_star: &Vector,
    x_low: &Vector,
) -> Result<WitnessCertificate> {
    let society = prof.society()?;
    let sets: Vec<_> = prof.agents.iter().map(|a| &a.beliefs).collect();
    if !combo.is_valid_for(&sets) {
        return Err(Error::InvalidParams("combo does not pick one vertex per agent".into()));
    }
    if !h.strictly_separates(&combo.points, society.beliefs.vertices()) {
        return Err(Error::InvalidSeparation("hyperplane does not separate the combo from the social beliefs".into()));
    }
    if prof.agents.iter().any(|a| a.utility.value(x_star) <= a.utility.value(x_low)) {
        return Err(Error::Precondition("outcomes are not ranked the same strict way by every agent".into()));
    }
    let dec = utilitarian_decompose(prof, None)?
        .ok_or_else(|| Error::Precondition("social utility has no utilitarian decomposition".into()))?;
    let scaled = rescale(h)?;
    let z = |t: &Rational| Vector::lerp(x_star, x_low, t);
    let act_f = Act::new(scaled.normal.iter().map(z).collect())?;
    let act_x = Act::constant(&z(&scaled.threshold), prof.states);
    finish(
        prof,
        WitnessKind::CtParetoStar,
        Axiom::CtParetoStar,
        act_f,
        act_x,
        Some(scaled),
        decomposition_params(&dec),
        combo.points.clone(),
    )
}

/// Pareto* counterexample from a weighted agent `i` and a prior `p_i ∈ Pᵢ`
/// outside `P₀`.
///
/// Agent `i`'s component moves along its c-diversity pair to track the
/// rescaled separator; every other agent `j` gets the `(½ ± ε)` mixtures of
/// its pair, which leaves it a uniform slack of `(2ε/n)·Dⱼ` in favor of `f`.
pub fn witness_lemma1(prof: &Profile, dec: &Decomposition, i: usize, p_i: &Vector) -> Result<WitnessCertificate> {
    let society = prof.society()?;
    if !dec.reproduces(prof)? {
        return Err(Error::InvalidParams("decomposition does not reproduce the social utility".into()));
    }
    let n = prof.n();
    if i >= n || !dec.alpha.0[i].is_positive() {
        return Err(Error::Precondition(format!("agent {} has no positive weight", i + 1)));
    }
    if !membership(p_i, &prof.agents[i].beliefs)? {
        return Err(Error::Precondition(format!("{p_i} is not in agent {}'s belief set", i + 1)));
    }
    let pairs = check_c_diversity(prof).ok_or_else(|| Error::Precondition("utilities are not c-diverse".into()))?;
    let h = separate(std::slice::from_ref(p_i), &society.beliefs)?
        .ok_or_else(|| Error::Precondition(format!("{p_i} lies in the social belief set")))?;
    let scaled = rescale(&h)?;

    let nn = int(n as i64);
    let spread: Vec<Rational> = prof
        .agents
        .iter()
        .zip(&pairs)
        .map(|(a, (hi, lo))| a.utility.value(hi) - a.utility.value(lo))
        .collect();
    let worst = society.beliefs.vertices().iter().map(|w| &scaled.threshold - scaled.value(w)).min().expect("vertex");
    let gap = &dec.alpha.0[i] * &spread[i] / &nn * worst;
    let load = (0..n)
        .filter(|&j| j != i)
        .fold(Rational::zero(), |acc, j| acc + &dec.alpha.0[j] * &spread[j])
        * int(2)
        / &nn;
    let epsilon = half_of_bound(&gap, &load);

    let half = rat(1, 2);
    let others = |toward_top: bool| {
        let mut acc = Vector::zeros(prof.outcome_dim);
        for (j, (hi, lo)) in pairs.iter().enumerate() {
            if j != i {
                let t = if toward_top { &half + &epsilon } else { &half - &epsilon };
                acc = acc.add(&Vector::lerp(hi, lo, &t));
            }
        }
        acc
    };
    let (hi_i, lo_i) = &pairs[i];
    let inv_n = Rational::one() / &nn;
    let f_rest = others(true);
    let act_f = Act::new(
        scaled.normal.iter().map(|l| Vector::lerp(hi_i, lo_i, l).add(&f_rest).scale(&inv_n)).collect(),
    )?;
    let x = Vector::lerp(hi_i, lo_i, &scaled.threshold).add(&others(false)).scale(&inv_n);
    let act_x = Act::constant(&x, prof.states);

    let mut priors = default_priors(prof);
    priors[i] = p_i.clone();
    let params = WitnessParams { epsilon: Some(epsilon), ..decomposition_params(dec) };
    finish(prof, WitnessKind::Lemma1, Axiom::ParetoStar, act_f, act_x, Some(scaled), params, priors)
}

/// Pareto* counterexample from two weighted agents with distinct priors
/// `p1 ∈ P_{i1}`, `p2 ∈ P_{i2}`.
///
/// `φ₁(p) = α₂·Σ(p1−p2)(p − m) − ε` and `φ₂(p) = α₁·Σ(p2−p1)(p − m) − ε` with
/// `m` the midpoint. Agent `k ∈ {1,2}` receives `u_k(f(s)) = b·φ_k(δ_s) + u_k(x)`,
/// so its advantage under `p_k` is `b·φ_k(p_k) > 0`, while the weighted pair
/// loses exactly `b(α₁+α₂)ε` at every prior.
pub fn witness_spurious_unanimity(
    prof: &Profile,
    dec: &Decomposition,
    i1: usize,
    i2: usize,
    p1: &Vector,
    p2: &Vector,
) -> Result<WitnessCertificate> {
    prof.society()?;
    if !dec.reproduces(prof)? {
        return Err(Error::InvalidParams("decomposition does not reproduce the social utility".into()));
    }
    let n = prof.n();
    if i1 == i2 || i1 >= n || i2 >= n {
        return Err(Error::InvalidParams("need two distinct agents".into()));
    }
    if p1 == p2 {
        return Err(Error::InvalidParams("the two priors coincide".into()));
    }
    for (i, p) in [(i1, p1), (i2, p2)] {
        if !dec.alpha.0[i].is_positive() {
            return Err(Error::Precondition(format!("agent {} has no positive weight", i + 1)));
        }
        if !membership(p, &prof.agents[i].beliefs)? {
            return Err(Error::Precondition(format!("{p} is not in agent {}'s belief set", i + 1)));
        }
    }
    let pairs = check_c_diversity(prof).ok_or_else(|| Error::Precondition("utilities are not c-diverse".into()))?;

    let (a1, a2) = (&dec.alpha.0[i1], &dec.alpha.0[i2]);
    let diff = p1.sub(p2);
    let spread_sq = diff.dot(&diff);
    let epsilon = if a1 < a2 { a1 } else { a2 } * &spread_sq / int(4);
    let mid_term = diff.dot(&p1.add(p2).scale(&rat(1, 2)));
    let phi1: Vec<Rational> = diff.iter().map(|d| a2 * (d - &mid_term) - &epsilon).collect();
    let phi2: Vec<Rational> = diff.iter().map(|d| a1 * (&mid_term - d) - &epsilon).collect();

    let nn = int(n as i64);
    let spread: Vec<Rational> = prof
        .agents
        .iter()
        .zip(&pairs)
        .map(|(a, (hi, lo))| a.utility.value(hi) - a.utility.value(lo))
        .collect();
    // Keeps every ½ + n·b·φ_k(δ_s)/D_k inside [0, 1].
    let b_max = [(i1, &phi1), (i2, &phi2)]
        .iter()
        .flat_map(|(k, phi)| {
            let spread_k = &spread[*k];
            let nn = &nn;
            phi.iter().filter(|v| !v.is_zero()).map(move |v| spread_k / (int(2) * nn * v.abs()))
        })
        .min()
        .expect("φ₁(p1) > 0 so some φ value is nonzero");
    let b = b_max / int(2);

    let gap = &b * (a1 + a2) * &epsilon;
    let load = (0..n)
        .filter(|&k| k != i1 && k != i2)
        .fold(Rational::zero(), |acc, k| acc + &dec.alpha.0[k] * &spread[k])
        * int(2)
        / &nn;
    let nu = half_of_bound(&gap, &load);

    let half = rat(1, 2);
    let inv_n = Rational::one() / &nn;
    let mut x = Vector::zeros(prof.outcome_dim);
    let mut rest = Vector::zeros(prof.outcome_dim);
    for (k, (hi, lo)) in pairs.iter().enumerate() {
        if k == i1 || k == i2 {
            x = x.add(&Vector::lerp(hi, lo, &half));
        } else {
            x = x.add(&Vector::lerp(hi, lo, &(&half - &nu)));
            rest = rest.add(&Vector::lerp(hi, lo, &(&half + &nu)));
        }
    }
    let x = x.scale(&inv_n);
    let position = |k: usize, phi: &Rational| &half + &nn * &b * phi / &spread[k];
    let rows = (0..prof.states)
        .map(|s| {
            let (hi1, lo1) = &pairs[i1];
            let (hi2, lo2) = &pairs[i2];
            Vector::lerp(hi1, lo1, &position(i1, &phi1[s]))
                .add(&Vector::lerp(hi2, lo2, &position(i2, &phi2[s])))
                .add(&rest)
                .scale(&inv_n)
        })
        .collect();
    let act_f = Act::new(rows)?;
    let act_x = Act::constant(&x, prof.states);

    let mut priors = default_priors(prof);
    priors[i1] = p1.clone();
    priors[i2] = p2.clone();
    let params = WitnessParams { epsilon: Some(epsilon), nu: Some(nu), b: Some(b), ..decomposition_params(dec) };
    finish(prof, WitnessKind::SpuriousUnanimity, Axiom::ParetoStar, act_f, act_x, None, params, priors)
}

/// Constant acts `f ≡ δ`, `x ≡ 0` with `uᵢ(δ) > uᵢ(0)` for every agent and
/// `u₀(0) > u₀(δ)`. Such a `δ` exists exactly when every agent's coefficients
/// admit a common strict direction and no nonnegative combination of them
/// yields the society's.
pub fn witness_taste_conflict(prof: &Profile, axiom: Axiom) -> Result<WitnessCertificate> {
    let society = prof.society()?;
    if !matches!(axiom, Axiom::ParetoStar | Axiom::CtParetoStar) {
        return Err(Error::InvalidParams(format!("no taste-conflict witness for {axiom}")));
    }
    let d = prof.outcome_dim;
    let t = d;
    let mut lp = LinearProgram::new(d + 1);
    for var in 0..=d {
        lp.set_free(var);
    }
    lp.maximize_var(t);
    let mut add_row = |coeffs: Vector| {
        let mut row = coeffs.0;
        row.push(-Rational::one());
        lp.add(row, Relation::Ge, Rational::zero());
    };
    for a in &prof.agents {
        add_row(a.utility.coeffs.clone());
    }
    add_row(society.utility.coeffs.scale(&-Rational::one()));
    for var in 0..d {
        lp.add_terms(&[(var, Rational::one())], Relation::Le, Rational::one());
        lp.add_terms(&[(var, Rational::one())], Relation::Ge, -Rational::one());
    }
    let (x, margin) = lp.solve().optimal().expect("bounded over the box");
    if !margin.is_positive() {
        return Err(Error::Precondition(
            "a utilitarian decomposition exists, or utilities lack c-minimal agreement".into(),
        ));
    }
    let delta = Vector(x[..d].to_vec());
    let act_f = Act::constant(&delta, prof.states);
    let act_x = Act::constant(&Vector::zeros(d), prof.states);
    finish(prof, WitnessKind::TasteConflict, axiom, act_f, act_x, None, WitnessParams::default(), default_priors(prof))
}

/// First agent with positive weight and a belief vertex outside `P₀`.
pub fn pick_lemma1(prof: &Profile, dec: &Decomposition) -> Result<Option<(usize, Vector)>> {
    let society = prof.society()?;
    for i in dec.support() {
        for v in prof.agents[i].beliefs.vertices() {
            if !membership(v, &society.beliefs)? {
                return Ok(Some((i, v.clone())));
            }
        }
    }
    Ok(None)
}

/// First pair of weighted agents, in index order, with distinct belief
/// vertices (first vertex of the first agent, first differing vertex of the
/// second).
pub fn pick_spurious_pair(prof: &Profile, dec: &Decomposition) -> Option<(usize, usize, Vector, Vector)> {
    let support = dec.support();
    for (k, &i1) in support.iter().enumerate() {
        for &i2 in &support[k + 1..] {
            for p1 in prof.agents[i1].beliefs.vertices() {
                if let Some(p2) = prof.agents[i2].beliefs.vertices().iter().find(|p2| *p2 != p1) {
                    return Some((i1, i2, p1.clone(), p2.clone()));
                }
            }
        }
    }
    None
}

/// The Common-Taste Pareto* witness matching a failing thm2 (or prop2) report.
pub fn witness_for_thm2(prof: &Profile, report: &ConditionReport) -> Result<WitnessCertificate> {
    match &report.failure {
        Some(Failure::ComboMisses { combo, hyperplane }) => {
            let (x_star, x_low) = check_c_minimal_agreement(prof)
                .ok_or_else(|| Error::Precondition("utilities lack c-minimal agreement".into()))?;
            witness_ct_pareto_star(prof, combo, hyperplane, &x_star, &x_low)
        }
        Some(Failure::NoDecomposition) => witness_taste_conflict(prof, Axiom::CtParetoStar),
        _ => Err(Error::Precondition("condition holds; nothing to witness".into())),
    }
}

/// The Pareto* witness matching a failing thm1 report.
pub fn witness_for_thm1(prof: &Profile, report: &ConditionReport) -> Result<WitnessCertificate> {
    let nothing = || Error::Precondition("condition holds; nothing to witness".into());
    match (&report.failure, &report.decomposition) {
        (Some(Failure::NoDecomposition), _) => witness_taste_conflict(prof, Axiom::ParetoStar),
        (Some(Failure::NoClause { .. }), Some(dec)) => {
            let (i1, i2, p1, p2) = pick_spurious_pair(prof, dec).ok_or_else(nothing)?;
            witness_spurious_unanimity(prof, dec, i1, i2, &p1, &p2)
        }
        (Some(Failure::NotMember { .. }), Some(dec)) => {
            let (i, p) = pick_lemma1(prof, dec)?.ok_or_else(nothing)?;
            witness_lemma1(prof, dec, i, &p)
        }
        _ => Err(nothing()),
    }
}
