//! Representation-level conditions: utilitarian decompositions of the social
//! utility and the belief-set inclusions that characterize each axiom.
//!
//! Every report carries the evidence needed to re-check it without trusting
//! the solver: convex weights for memberships, and a strictly separating
//! hyperplane for each failure.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    hulls_intersect, intersect, membership_weights, separate, vector::serde_rational, Hyperplane, LinearProgram,
    Polytope, Rational, Relation, Vector, DEFAULT_DIM_CAP,
};
use crate::preferences::{
    check_c_diversity, check_c_minimal_agreement, Agent, AffineUtility, Profile, WeightVector,
};

pub const DEFAULT_COMBO_CAP: u128 = 100_000;

/// Largest agent count for which supports are enumerated.
const MAX_SUPPORT_AGENTS: usize = 16;

/// `u₀ = Σ αᵢ uᵢ + β` with `α ≥ 0`, `α ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub alpha: WeightVector,
    #[serde(with = "serde_rational")]
    pub beta: Rational,
}

impl Decomposition {
    pub fn support(&self) -> Vec<usize> {
        self.alpha.support()
    }

    /// Exact check against the profile's society.
    pub fn reproduces(&self, prof: &Profile) -> Result<bool> {
        let society = prof.society()?;
        if self.alpha.len() != prof.n() || self.alpha.0.iter().any(Signed::is_negative) {
            return Ok(false);
        }
        let (coeffs, constant) = weighted_sum(&prof.agents, &self.alpha.0);
        Ok(coeffs == society.utility.coeffs && constant + &self.beta == society.utility.constant)
    }
}

fn weighted_sum(agents: &[Agent], alpha: &[Rational]) -> (Vector, Rational) {
    let d = agents[0].utility.coeffs.dim();
    let mut coeffs = Vector::zeros(d);
    let mut constant = Rational::zero();
    for (a, w) in agents.iter().zip(alpha) {
        coeffs = coeffs.add(&a.utility.coeffs.scale(w));
        constant += &a.utility.constant * w;
    }
    (coeffs, constant)
}

/// Solves the coefficient equations for `α ≥ 0`.
///
/// With a support constraint, `α` vanishes outside it and is strictly positive
/// inside it; strictness is decided by maximizing the smallest supported weight.
pub fn utilitarian_decompose(prof: &Profile, support: Option<&[usize]>) -> Result<Option<Decomposition>> {
    let society = prof.society()?;
    let n = prof.n();
    let t = n;
    let mut lp = LinearProgram::new(n + 1);
    if let Some(members) = support {
        if members.is_empty() || members.iter().any(|&i| i >= n) {
            return Err(Error::InvalidParams(format!("bad support {members:?}")));
        }
        lp.maximize_var(t);
        lp.add_terms(&[(t, Rational::one())], Relation::Le, Rational::one());
        for i in 0..n {
            if members.contains(&i) {
                lp.add_terms(&[(i, Rational::one()), (t, -Rational::one())], Relation::Ge, Rational::zero());
            } else {
                lp.add_terms(&[(i, Rational::one())], Relation::Eq, Rational::zero());
            }
        }
    } else {
        lp.add_terms(&[(t, Rational::one())], Relation::Eq, Rational::zero());
    }
    for k in 0..prof.outcome_dim {
        let mut row: Vec<Rational> = prof.agents.iter().map(|a| a.utility.coeffs[k].clone()).collect();
        row.push(Rational::zero());
        lp.add(row, Relation::Eq, society.utility.coeffs[k].clone());
    }
    let Some((x, margin)) = lp.solve().optimal() else {
        return Ok(None);
    };
    if support.is_some() && !margin.is_positive() {
        return Ok(None);
    }
    let alpha = x[..n].to_vec();
    if alpha.iter().all(Zero::is_zero) {
        return Ok(None);
    }
    let (_, constant) = weighted_sum(&prof.agents, &alpha);
    let beta = &society.utility.constant - constant;
    Ok(Some(Decomposition { alpha: WeightVector(alpha), beta }))
}

/// Nonempty subsets of `0..n`, in increasing bitmask order.
fn supports(n: usize) -> Result<impl Iterator<Item = Vec<usize>>> {
    if n > MAX_SUPPORT_AGENTS {
        return Err(Error::InvalidParams(format!("support enumeration needs at most {MAX_SUPPORT_AGENTS} agents")));
    }
    Ok((1u32..(1 << n)).map(move |mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect()))
}

/// One vertex from each agent's belief set, ordered by agent index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCombo {
    pub indices: Vec<usize>,
    pub points: Vec<Vector>,
}

impl VertexCombo {
    /// Whether each point is the indexed vertex of the matching belief set.
    pub fn is_valid_for(&self, sets: &[&Polytope]) -> bool {
        self.indices.len() == sets.len()
            && self.points.len() == sets.len()
            && sets
                .iter()
                .zip(self.indices.iter().zip(&self.points))
                .all(|(set, (&k, p))| set.vertices().get(k) == Some(p))
    }
}

/// Number of vertex combos, saturating.
pub fn combo_count(sets: &[&Polytope]) -> u128 {
    sets.iter().fold(1u128, |acc, s| acc.saturating_mul(s.vertices().len() as u128))
}

fn check_combo_cap(sets: &[&Polytope], cap: u128) -> Result<()> {
    let count = combo_count(sets);
    if count > cap {
        Err(Error::ComboCap { count, cap })
    } else {
        Ok(())
    }
}

/// Lexicographic enumeration: the first agent varies slowest.
pub struct Combos<'a> {
    sets: Vec<&'a Polytope>,
    next: Option<Vec<usize>>,
}

impl<'a> Combos<'a> {
    pub fn new(sets: Vec<&'a Polytope>) -> Self {
        let next = (!sets.is_empty()).then(|| vec![0; sets.len()]);
        Combos { sets, next }
    }
}

impl Iterator for Combos<'_> {
    type Item = VertexCombo;

    fn next(&mut self) -> Option<VertexCombo> {
        let indices = self.next.take()?;
        let points = indices.iter().zip(&self.sets).map(|(&k, s)| s.vertices()[k].clone()).collect();
        let mut succ = indices.clone();
        for pos in (0..succ.len()).rev() {
            succ[pos] += 1;
            if succ[pos] < self.sets[pos].vertices().len() {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(VertexCombo { indices, points })
    }
}

fn belief_sets(prof: &Profile) -> Vec<&Polytope> {
    prof.agents.iter().map(|a| &a.beliefs).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// `P₀ ⊆ ⋂ {Pᵢ : αᵢ > 0}`, the characterization of Pareto.
    IntersectionBound,
    Thm1,
    Lemma1,
    /// `P₀ ⊆ conv(⋃ Pᵢ)`, the characterization of Common-Taste Pareto.
    HullBound,
    Thm2,
    Cor2,
    Prop1,
    Prop2,
}

impl Condition {
    pub const ALL: [Condition; 8] = [
        Condition::IntersectionBound,
        Condition::Thm1,
        Condition::Lemma1,
        Condition::HullBound,
        Condition::Thm2,
        Condition::Cor2,
        Condition::Prop1,
        Condition::Prop2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::IntersectionBound => "intersection-bound",
            Condition::Thm1 => "thm1",
            Condition::Lemma1 => "lemma1",
            Condition::HullBound => "hull-bound",
            Condition::Thm2 => "thm2",
            Condition::Cor2 => "cor2",
            Condition::Prop1 => "prop1",
            Condition::Prop2 => "prop2",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Condition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Condition::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown condition {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    PreconditionUnmet,
}

/// Which belief set a membership claim refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BeliefRef {
    Agent(usize),
    Society,
    /// `conv` of every agent's vertices.
    Pooled,
}

impl BeliefRef {
    pub fn resolve(self, prof: &Profile) -> Result<Polytope> {
        match self {
            BeliefRef::Agent(i) => prof
                .agents
                .get(i)
                .map(|a| a.beliefs.clone())
                .ok_or_else(|| Error::InvalidParams(format!("no agent {i}"))),
            BeliefRef::Society => Ok(prof.society()?.beliefs.clone()),
            BeliefRef::Pooled => pooled_hull(prof),
        }
    }
}

pub fn pooled_hull(prof: &Profile) -> Result<Polytope> {
    Polytope::new(prof.agents.iter().flat_map(|a| a.beliefs.vertices().iter().cloned()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    /// `point = Σ weights_k · vertex_k` of the referenced set.
    Member { point: Vector, within: BeliefRef, weights: Vector },
    /// `Σ gamma_i · combo_i = Σ mu_k · (vertex k of P₀)`.
    ComboMeets { combo: VertexCombo, gamma: Vector, mu: Vector },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Failure {
    NoDecomposition,
    /// `hyperplane` puts `point` strictly above and the set strictly below.
    NotMember { point: Vector, within: BeliefRef, hyperplane: Hyperplane },
    /// `hyperplane` puts the combo strictly above and `P₀` strictly below.
    ComboMisses { combo: VertexCombo, hyperplane: Hyperplane },
    /// A decomposition exists but its support allows neither a common singleton
    /// prior nor a single dictator.
    NoClause { support: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubVerdict {
    pub part: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: Condition,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Decomposition>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub evidence: Vec<Evidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<SubVerdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ConditionReport {
    fn new(condition: Condition, status: Status) -> Self {
        ConditionReport {
            condition,
            status,
            decomposition: None,
            evidence: Vec::new(),
            failure: None,
            parts: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn holds_with(condition: Condition, decomposition: Option<Decomposition>, evidence: Vec<Evidence>) -> Self {
        ConditionReport { decomposition, evidence, ..ConditionReport::new(condition, Status::Holds) }
    }

    fn fails_with(condition: Condition, decomposition: Option<Decomposition>, failure: Failure) -> Self {
        ConditionReport { decomposition, failure: Some(failure), ..ConditionReport::new(condition, Status::Fails) }
    }

    fn unmet(condition: Condition, note: &str) -> Self {
        let mut report = ConditionReport::new(condition, Status::PreconditionUnmet);
        report.notes.push(note.to_string());
        report
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    /// Re-checks the decomposition, every membership and every separation by
    /// direct arithmetic.
    pub fn revalidate(&self, prof: &Profile) -> bool {
        let decomposition_ok = match &self.decomposition {
            Some(dec) => dec.reproduces(prof).unwrap_or(false),
            None => true,
        };
        let status_ok = match self.status {
            Status::Holds => self.failure.is_none(),
            Status::Fails => self.failure.is_some(),
            Status::PreconditionUnmet => true,
        };
        decomposition_ok
            && status_ok
            && self.evidence.iter().all(|e| e.revalidate(prof))
            && self.failure.as_ref().is_none_or(|f| f.revalidate(prof))
    }
}

fn is_convex_combination(weights: &Vector, points: &[Vector], target: &Vector) -> bool {
    weights.dim() == points.len()
        && weights.is_distribution()
        && points.iter().all(|p| p.dim() == target.dim())
        && Vector::combination(weights, points) == *target
}

impl Evidence {
    pub fn revalidate(&self, prof: &Profile) -> bool {
        match self {
            Evidence::Member { point, within, weights } => within
                .resolve(prof)
                .is_ok_and(|set| is_convex_combination(weights, set.vertices(), point)),
            Evidence::ComboMeets { combo, gamma, mu } => {
                let Ok(society) = prof.society() else {
                    return false;
                };
                if !combo.is_valid_for(&belief_sets(prof)) || !gamma.is_distribution() || gamma.dim() != prof.n() {
                    return false;
                }
                let meeting = Vector::combination(gamma, &combo.points);
                is_convex_combination(mu, society.beliefs.vertices(), &meeting)
            }
        }
    }
}

impl Failure {
    pub fn revalidate(&self, prof: &Profile) -> bool {
        match self {
            Failure::NoDecomposition => utilitarian_decompose(prof, None).is_ok_and(|d| d.is_none()),
            Failure::NotMember { point, within, hyperplane } => within
                .resolve(prof)
                .is_ok_and(|set| hyperplane.strictly_separates(std::slice::from_ref(point), set.vertices())),
            Failure::ComboMisses { combo, hyperplane } => {
                let Ok(society) = prof.society() else {
                    return false;
                };
                combo.is_valid_for(&belief_sets(prof))
                    && hyperplane.strictly_separates(&combo.points, society.beliefs.vertices())
            }
            Failure::NoClause { .. } => true,
        }
    }
}

/// Membership of `point` in `within`, as evidence or as a separated failure.
fn member_or_separated(prof: &Profile, point: &Vector, within: BeliefRef) -> Result<std::result::Result<Evidence, Failure>> {
    let set = within.resolve(prof)?;
    Ok(match membership_weights(point, &set)? {
        Some(weights) => Ok(Evidence::Member { point: point.clone(), within, weights: Vector(weights) }),
        None => {
            let hyperplane = separate(std::slice::from_ref(point), &set)?.expect("a non-member is separable");
            Err(Failure::NotMember { point: point.clone(), within, hyperplane })
        }
    })
}

/// Checks every point against `within`, stopping at the first non-member.
fn all_members(
    prof: &Profile,
    points: &[Vector],
    within: BeliefRef,
    evidence: &mut Vec<Evidence>,
) -> Result<Option<Failure>> {
    for p in points {
        match member_or_separated(prof, p, within)? {
            Ok(e) => evidence.push(e),
            Err(f) => return Ok(Some(f)),
        }
    }
    Ok(None)
}

/// Pareto's characterization: some decomposition whose supported agents all
/// contain `P₀`.
pub fn check_intersection_bound(prof: &Profile) -> Result<ConditionReport> {
    let society = prof.society()?;
    let mut first_failure = None;
    for support in supports(prof.n())? {
        let Some(dec) = utilitarian_decompose(prof, Some(&support))? else {
            continue;
        };
        let mut evidence = Vec::new();
        let mut failure = None;
        for &i in &support {
            failure = all_members(prof, society.beliefs.vertices(), BeliefRef::Agent(i), &mut evidence)?;
            if failure.is_some() {
                break;
            }
        }
        match failure {
            None => return Ok(ConditionReport::holds_with(Condition::IntersectionBound, Some(dec), evidence)),
            Some(f) => {
                first_failure.get_or_insert((dec, f));
            }
        }
    }
    Ok(match first_failure {
        Some((dec, f)) => ConditionReport::fails_with(Condition::IntersectionBound, Some(dec), f),
        None => ConditionReport::fails_with(Condition::IntersectionBound, None, Failure::NoDecomposition),
    })
}

/// Pareto*'s characterization under c-diversity: a decomposition supported on
/// agents sharing one singleton prior that `P₀` contains, or on a single
/// dictator whose belief set `P₀` contains.
pub fn check_thm1_condition(prof: &Profile) -> Result<ConditionReport> {
    prof.society()?;
    if check_c_diversity(prof).is_none() {
        return Ok(ConditionReport::unmet(Condition::Thm1, "utilities are not c-diverse"));
    }
    let mut first_failure = None;
    for support in supports(prof.n())? {
        let Some(dec) = utilitarian_decompose(prof, Some(&support))? else {
            continue;
        };
        let first = &prof.agents[support[0]].beliefs;
        let common_singleton = support
            .iter()
            .all(|&i| prof.agents[i].beliefs.is_singleton() && prof.agents[i].beliefs.same_set(first));
        let mut failure = None;
        if common_singleton || support.len() == 1 {
            let mut evidence = Vec::new();
            failure = all_members(prof, first.vertices(), BeliefRef::Society, &mut evidence)?;
            if failure.is_none() {
                let mut report = ConditionReport::holds_with(Condition::Thm1, Some(dec), evidence);
                report.notes.push(if common_singleton {
                    "supported agents share a singleton prior contained in the social belief set".into()
                } else {
                    "a single dictator whose belief set the social belief set contains".into()
                });
                return Ok(report);
            }
        }
        let failure = failure.unwrap_or(Failure::NoClause { support: support.clone() });
        first_failure.get_or_insert((dec, failure));
    }
    Ok(match first_failure {
        Some((dec, f)) => ConditionReport::fails_with(Condition::Thm1, Some(dec), f),
        None => ConditionReport::fails_with(Condition::Thm1, None, Failure::NoDecomposition),
    })
}

/// `P₀ ⊇ Pᵢ` for every agent with positive weight in `dec`.
pub fn check_lemma1_superset(prof: &Profile, dec: &Decomposition) -> Result<ConditionReport> {
    prof.society()?;
    if !dec.reproduces(prof)? {
        return Err(Error::InvalidParams("decomposition does not reproduce the social utility".into()));
    }
    let mut evidence = Vec::new();
    for i in dec.support() {
        if let Some(f) = all_members(prof, prof.agents[i].beliefs.vertices(), BeliefRef::Society, &mut evidence)? {
            return Ok(ConditionReport::fails_with(Condition::Lemma1, Some(dec.clone()), f));
        }
    }
    Ok(ConditionReport::holds_with(Condition::Lemma1, Some(dec.clone()), evidence))
}

/// Common-Taste Pareto's characterization: a decomposition exists and
/// `P₀ ⊆ conv(⋃ Pᵢ)`.
pub fn check_hull_bound(prof: &Profile) -> Result<ConditionReport> {
    let society = prof.society()?;
    let Some(dec) = utilitarian_decompose(prof, None)? else {
        return Ok(ConditionReport::fails_with(Condition::HullBound, None, Failure::NoDecomposition));
    };
    let mut evidence = Vec::new();
    Ok(match all_members(prof, society.beliefs.vertices(), BeliefRef::Pooled, &mut evidence)? {
        Some(f) => ConditionReport::fails_with(Condition::HullBound, Some(dec), f),
        None => ConditionReport::holds_with(Condition::HullBound, Some(dec), evidence),
    })
}

/// Common-Taste Pareto*'s characterization under c-minimal agreement: a
/// decomposition exists and the hull of every combo of priors meets `P₀`.
///
/// Vertex combos suffice. If some combo's hull missed `P₀`, a separating
/// direction would exist, and moving each prior to its belief set's maximal
/// vertex in that direction keeps the separation.
pub fn check_thm2_condition(prof: &Profile, combo_cap: u128) -> Result<ConditionReport> {
    let society = prof.society()?;
    if check_c_minimal_agreement(prof).is_none() {
        return Ok(ConditionReport::unmet(Condition::Thm2, "utilities lack c-minimal agreement"));
    }
    let Some(dec) = utilitarian_decompose(prof, None)? else {
        return Ok(ConditionReport::fails_with(Condition::Thm2, None, Failure::NoDecomposition));
    };
    let sets = belief_sets(prof);
    check_combo_cap(&sets, combo_cap)?;
    let p0 = society.beliefs.vertices();
    let mut evidence = Vec::new();
    for combo in Combos::new(sets) {
        match hulls_intersect(&combo.points, p0) {
            Some((gamma, mu)) => evidence.push(Evidence::ComboMeets { combo, gamma: Vector(gamma), mu: Vector(mu) }),
            None => {
                let hyperplane = separate(&combo.points, &society.beliefs)?.expect("disjoint hulls are separable");
                return Ok(ConditionReport::fails_with(
                    Condition::Thm2,
                    Some(dec),
                    Failure::ComboMisses { combo, hyperplane },
                ));
            }
        }
    }
    Ok(ConditionReport::holds_with(Condition::Thm2, Some(dec), evidence))
}

/// Two consequences of Common-Taste Pareto*: (a) `⋂ Pᵢ ⊆ P₀`; (b) when every
/// agent holds the same set `P`, `P₀ = P` (together with Common-Taste Pareto).
pub fn check_corollary2(prof: &Profile) -> Result<ConditionReport> {
    let society = prof.society()?;
    let mut evidence = Vec::new();
    let mut failure = None;
    let mut report = ConditionReport::new(Condition::Cor2, Status::Holds);

    let part_a = match intersect(&prof.agents.iter().map(|a| a.beliefs.clone()).collect::<Vec<_>>(), DEFAULT_DIM_CAP)? {
        None => {
            report.notes.push("the agents' belief sets have empty intersection".into());
            Status::Holds
        }
        Some(common) => match all_members(prof, common.vertices(), BeliefRef::Society, &mut evidence)? {
            None => Status::Holds,
            Some(f) => {
                failure = Some(f);
                Status::Fails
            }
        },
    };
    report.parts.push(SubVerdict { part: "a".into(), status: part_a });

    let first = &prof.agents[0].beliefs;
    if prof.agents.iter().all(|a| a.beliefs.same_set(first)) {
        let mut part_b = Status::Holds;
        let mut b_evidence = Vec::new();
        let outward = all_members(prof, society.beliefs.vertices(), BeliefRef::Agent(0), &mut b_evidence)?;
        let inward = match outward {
            Some(_) => None,
            None => all_members(prof, first.vertices(), BeliefRef::Society, &mut b_evidence)?,
        };
        if let Some(f) = outward.or(inward) {
            part_b = Status::Fails;
            failure.get_or_insert(f);
        }
        evidence.extend(b_evidence);
        report.parts.push(SubVerdict { part: "b".into(), status: part_b });
    } else {
        report.notes.push("agents do not share a belief set; part (b) does not apply".into());
    }

    if report.parts.iter().any(|p| p.status == Status::Fails) {
        report.status = Status::Fails;
    }
    report.evidence = evidence;
    report.failure = failure;
    Ok(report)
}

/// Exchange Pareto shares its characterization with Common-Taste Pareto.
pub fn check_prop1(prof: &Profile) -> Result<ConditionReport> {
    prof.society()?;
    if check_c_minimal_agreement(prof).is_none() {
        return Ok(ConditionReport::unmet(Condition::Prop1, "utilities lack c-minimal agreement"));
    }
    let mut report = check_hull_bound(prof)?;
    report.condition = Condition::Prop1;
    report.notes.push("decided by the hull-bound condition".into());
    Ok(report)
}

/// Exchange Pareto* shares its characterization with Common-Taste Pareto*.
pub fn check_prop2(prof: &Profile, combo_cap: u128) -> Result<ConditionReport> {
    let mut report = check_thm2_condition(prof, combo_cap)?;
    report.condition = Condition::Prop2;
    report.notes.push("decided by the thm2 condition".into());
    Ok(report)
}

/// Dispatch by tag. `lemma1` uses the first decomposition found.
pub fn check_condition(prof: &Profile, condition: Condition, combo_cap: u128) -> Result<ConditionReport> {
    match condition {
        Condition::IntersectionBound => check_intersection_bound(prof),
        Condition::Thm1 => check_thm1_condition(prof),
        Condition::Lemma1 => match utilitarian_decompose(prof, None)? {
            Some(dec) => check_lemma1_superset(prof, &dec),
            None => Ok(ConditionReport::fails_with(Condition::Lemma1, None, Failure::NoDecomposition)),
        },
        Condition::HullBound => check_hull_bound(prof),
        Condition::Thm2 => check_thm2_condition(prof, combo_cap),
        Condition::Cor2 => check_corollary2(prof),
        Condition::Prop1 => check_prop1(prof),
        Condition::Prop2 => check_prop2(prof, combo_cap),
    }
}

/// A prior lying in the hull of every vertex combo, if one exists: the social
/// prior of a complete (SEU) society compatible with Common-Taste Pareto*.
///
/// Solved as one LP over `p` and a weight vector `γ_c ∈ Δ(N)` per combo with
/// `p = Σ γ_c,i · c_i`.
pub fn check_seu_existence(beliefs: &[Polytope], combo_cap: u128) -> Result<Option<Vector>> {
    let first = beliefs.first().ok_or(Error::EmptyInput("check_seu_existence: no belief sets"))?;
    let m = first.dim();
    if let Some(bad) = beliefs.iter().find(|b| b.dim() != m) {
        return Err(Error::DimensionMismatch { expected: m, found: bad.dim() });
    }
    let sets: Vec<&Polytope> = beliefs.iter().collect();
    check_combo_cap(&sets, combo_cap)?;
    let n = beliefs.len();
    let combos: Vec<VertexCombo> = Combos::new(sets).collect();
    let mut lp = LinearProgram::new(m + combos.len() * n);
    for (c, combo) in combos.iter().enumerate() {
        let base = m + c * n;
        let simplex: Vec<(usize, Rational)> = (0..n).map(|i| (base + i, Rational::one())).collect();
        lp.add_terms(&simplex, Relation::Eq, Rational::one());
        for s in 0..m {
            let mut terms: Vec<(usize, Rational)> = vec![(s, -Rational::one())];
            terms.extend(combo.points.iter().enumerate().map(|(i, p)| (base + i, p[s].clone())));
            lp.add_terms(&terms, Relation::Eq, Rational::zero());
        }
    }
    Ok(lp.solve().optimal().map(|(x, _)| Vector(x[..m].to_vec())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SocietyRule {
    /// `Σ γᵢ Pᵢ`: the hull of `Σ γᵢ vᵢ` over vertex combos.
    Minkowski(WeightVector),
    /// `conv(⋃ Pᵢ)`.
    HullUnion,
    Given(Vec<Vector>),
}

/// Builds the society `u₀ = Σ αᵢ uᵢ + β` with beliefs chosen by `rule`.
pub fn aggregate_society(prof: &Profile, alpha: &WeightVector, beta: Rational, rule: &SocietyRule) -> Result<Agent> {
    let n = prof.n();
    if alpha.len() != n {
        return Err(Error::InvalidWeights(format!("expected {n} weights, found {}", alpha.len())));
    }
    let alpha = WeightVector::nonnegative(alpha.0.clone())?;
    let (coeffs, constant) = weighted_sum(&prof.agents, &alpha.0);
    let utility = AffineUtility::new(coeffs, constant + beta)
        .map_err(|_| Error::InvalidWeights("weighted utility is constant".into()))?;
    let beliefs = match rule {
        SocietyRule::Minkowski(gamma) => {
            if gamma.len() != n {
                return Err(Error::InvalidWeights(format!("expected {n} weights, found {}", gamma.len())));
            }
            let gamma = WeightVector::distribution(gamma.0.clone())?;
            minkowski(prof, &gamma)?
        }
        SocietyRule::HullUnion => pooled_hull(prof)?,
        SocietyRule::Given(vertices) => Polytope::new(vertices.clone())?,
    };
    Ok(Agent::new(utility, beliefs).named("society"))
}

/// Agents with zero weight contribute nothing, so only weighted agents' vertices
/// are enumerated.
fn minkowski(prof: &Profile, gamma: &WeightVector) -> Result<Polytope> {
    let weighted: Vec<usize> = gamma.support();
    let sets: Vec<&Polytope> = weighted.iter().map(|&i| &prof.agents[i].beliefs).collect();
    check_combo_cap(&sets, DEFAULT_COMBO_CAP)?;
    let weights: Vec<Rational> = weighted.iter().map(|&i| gamma.0[i].clone()).collect();
    let points = Combos::new(sets).map(|c| Vector::combination(&weights, &c.points)).collect();
    Polytope::new(points)
}
