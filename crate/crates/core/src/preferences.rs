//! Outcomes, affine utilities, acts, Bewley dominance and the structural
//! profile conditions (c-minimal agreement, c-diversity).

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{rank, vector::serde_rational, LinearProgram, Polytope, Rational, Relation, Vector};

/// Nonconstant affine function `x ↦ coeffs·x + constant` on the outcome space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineUtility {
    pub coeffs: Vector,
    #[serde(with = "serde_rational")]
    pub constant: Rational,
}

impl AffineUtility {
    pub fn new(coeffs: Vector, constant: Rational) -> Result<Self> {
        if coeffs.is_zero() {
            return Err(Error::InvalidProfile(vec!["utility is constant".into()]));
        }
        Ok(AffineUtility { coeffs, constant })
    }

    pub fn linear(coeffs: Vector) -> Result<Self> {
        Self::new(coeffs, Rational::zero())
    }

    pub fn value(&self, x: &Vector) -> Rational {
        self.coeffs.dot(x) + &self.constant
    }

    /// `scale·u + shift`.
    pub fn rescaled(&self, scale: &Rational, shift: &Rational) -> AffineUtility {
        AffineUtility { coeffs: self.coeffs.scale(scale), constant: &self.constant * scale + shift }
    }
}

/// A state-indexed list of outcomes; row `s` is the outcome in state `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Act {
    rows: Vec<Vector>,
}

impl Act {
    pub fn new(rows: Vec<Vector>) -> Result<Self> {
        if rows.len() < 2 {
            return Err(Error::InvalidProfile(vec![format!("an act needs at least two states, got {}", rows.len())]));
        }
        let d = rows[0].dim();
        if let Some(bad) = rows.iter().find(|r| r.dim() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: bad.dim() });
        }
        Ok(Act { rows })
    }

    /// The constant act yielding `x` in each of `states` states.
    pub fn constant(x: &Vector, states: usize) -> Self {
        Act { rows: vec![x.clone(); states] }
    }

    pub fn states(&self) -> usize {
        self.rows.len()
    }

    pub fn outcome_dim(&self) -> usize {
        self.rows[0].dim()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn is_constant(&self) -> bool {
        self.rows.iter().all(|r| r == &self.rows[0])
    }

    /// Statewise mixture `t·f + (1−t)·g`.
    pub fn mix(t: &Rational, f: &Act, g: &Act) -> Act {
        Act { rows: f.rows.iter().zip(&g.rows).map(|(a, b)| Vector::lerp(a, b, t)).collect() }
    }

    /// Adds the same outcome to every state.
    pub fn translated(&self, by: &Vector) -> Act {
        Act { rows: self.rows.iter().map(|r| r.add(by)).collect() }
    }
}

/// Who a claim is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Party {
    Agent(usize),
    Society,
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Party::Agent(i) => write!(f, "agent {}", i + 1),
            Party::Society => write!(f, "society"),
        }
    }
}

/// A Bewley decision maker: one utility, a polytope of priors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Agent {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub utility: AffineUtility,
    pub beliefs: Polytope,
}

impl Agent {
    pub fn new(utility: AffineUtility, beliefs: Polytope) -> Self {
        Agent { name: None, utility, beliefs }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn is_seu(&self) -> bool {
        self.beliefs.is_singleton()
    }
}

/// `n ≥ 2` agents over `states` states and `outcome_dim`-dimensional
/// outcomes, with an optional society (agent 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub states: usize,
    pub outcome_dim: usize,
    pub agents: Vec<Agent>,
    pub society: Option<Agent>,
}

impl Profile {
    /// Validates and builds; dimensions are taken from the first agent.
    pub fn new(agents: Vec<Agent>, society: Option<Agent>) -> Result<Self> {
        let first = agents.first().ok_or_else(|| Error::InvalidProfile(vec!["no agents".into()]))?;
        let profile = Profile {
            states: first.beliefs.dim(),
            outcome_dim: first.utility.coeffs.dim(),
            agents,
            society,
        };
        let violations = validate_profile(&profile);
        if violations.is_empty() {
            Ok(profile)
        } else {
            Err(Error::InvalidProfile(violations.iter().map(ToString::to_string).collect()))
        }
    }

    pub fn n(&self) -> usize {
        self.agents.len()
    }

    pub fn society(&self) -> Result<&Agent> {
        self.society.as_ref().ok_or(Error::MissingSociety)
    }

    pub fn with_society(&self, society: Agent) -> Profile {
        Profile { society: Some(society), ..self.clone() }
    }

    pub fn party(&self, who: Party) -> Result<&Agent> {
        match who {
            Party::Agent(i) => self.agents.get(i).ok_or_else(|| Error::InvalidParams(format!("no agent {i}"))),
            Party::Society => self.society(),
        }
    }

    pub fn utilities(&self) -> Vec<AffineUtility> {
        self.agents.iter().map(|a| a.utility.clone()).collect()
    }

    pub fn display_name(&self, who: Party) -> String {
        match who {
            Party::Agent(i) => self.agents.get(i).and_then(|a| a.name.clone()).unwrap_or_else(|| who.to_string()),
            Party::Society => "society".into(),
        }
    }

    pub(crate) fn check_act(&self, act: &Act) -> Result<()> {
        if act.states() != self.states {
            return Err(Error::DimensionMismatch { expected: self.states, found: act.states() });
        }
        if act.outcome_dim() != self.outcome_dim {
            return Err(Error::DimensionMismatch { expected: self.outcome_dim, found: act.outcome_dim() });
        }
        Ok(())
    }
}

/// Weights over agents: a distribution (γ) or a nonnegative nonzero vector (α).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(pub Vec<Rational>);

impl Serialize for WeightVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Vector(self.0.clone()).serialize(s)
    }
}

impl WeightVector {
    /// A point of Δ(N).
    pub fn distribution(weights: Vec<Rational>) -> Result<Self> {
        let w = Vector(weights);
        if !w.is_distribution() {
            return Err(Error::InvalidWeights(format!("{w} is not a probability vector")));
        }
        Ok(WeightVector(w.0))
    }

    /// A point of ℝ₊ⁿ∖{0}.
    pub fn nonnegative(weights: Vec<Rational>) -> Result<Self> {
        if weights.iter().any(Signed::is_negative) || weights.iter().all(Zero::is_zero) {
            return Err(Error::InvalidWeights(format!("{} must be nonnegative and nonzero", Vector(weights))));
        }
        Ok(WeightVector(weights))
    }

    pub fn uniform(n: usize) -> Self {
        WeightVector(vec![Rational::new(1.into(), (n as i64).into()); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i].is_positive()).collect()
    }
}

fn check_dims(u: &AffineUtility, p: &Vector, f: &Act) -> Result<()> {
    if p.dim() != f.states() {
        return Err(Error::DimensionMismatch { expected: f.states(), found: p.dim() });
    }
    if u.coeffs.dim() != f.outcome_dim() {
        return Err(Error::DimensionMismatch { expected: u.coeffs.dim(), found: f.outcome_dim() });
    }
    Ok(())
}

/// `Σ_s p(s)·u(f(s))`.
pub fn expected_utility(u: &AffineUtility, p: &Vector, f: &Act) -> Result<Rational> {
    check_dims(u, p, f)?;
    Ok(eu(u, p, f))
}

pub(crate) fn eu(u: &AffineUtility, p: &Vector, f: &Act) -> Rational {
    p.iter()
        .zip(f.rows())
        .filter(|(ps, _)| !ps.is_zero())
        .fold(Rational::zero(), |acc, (ps, x)| acc + ps * u.value(x))
}

/// The first belief vertex under which `g` is strictly better than `f`,
/// with the margin `EU(g) − EU(f) > 0`; `None` iff `f ≽ g`.
pub fn dominance_counterexample(a: &Agent, f: &Act, g: &Act) -> Result<Option<(Vector, Rational)>> {
    for v in a.beliefs.vertices() {
        let ef = expected_utility(&a.utility, v, f)?;
        let eg = expected_utility(&a.utility, v, g)?;
        if eg > ef {
            return Ok(Some((v.clone(), eg - ef)));
        }
    }
    Ok(None)
}

/// `f ≽ g` under every prior. Checking vertices suffices: the expected
/// utility difference is linear in the prior.
pub fn bewley_geq(a: &Agent, f: &Act, g: &Act) -> Result<bool> {
    Ok(dominance_counterexample(a, f, g)?.is_none())
}

pub fn bewley_incomparable(a: &Agent, f: &Act, g: &Act) -> Result<bool> {
    Ok(!bewley_geq(a, f, g)? && !bewley_geq(a, g, f)?)
}

/// Basis of the span of `{w − w₀ : w ∈ outcomes}`.
fn difference_basis(outcomes: &[&Vector]) -> Vec<Vector> {
    let base = outcomes[0];
    let mut rows: Vec<Vec<Rational>> = outcomes[1..].iter().map(|w| w.sub(base).0).collect();
    let cols: Vec<usize> = (0..base.dim()).collect();
    crate::geometry::vector::rref(&mut rows, &cols);
    rows.into_iter().map(Vector).collect()
}

/// All agents rank the outcomes spanned by `f` and `g` identically: their
/// utilities restricted to the directions those outcomes span are all zero or
/// all positive multiples of one functional.
pub fn no_taste_disagreement(prof: &Profile, f: &Act, g: &Act) -> Result<bool> {
    prof.check_act(f)?;
    prof.check_act(g)?;
    let outcomes: Vec<&Vector> = f.rows().iter().chain(g.rows()).collect();
    let basis = difference_basis(&outcomes);
    let restricted: Vec<Vector> = prof
        .agents
        .iter()
        .map(|a| Vector(basis.iter().map(|b| a.utility.coeffs.dot(b)).collect()))
        .collect();
    let Some(reference) = restricted.iter().find(|r| !r.is_zero()) else {
        return Ok(true);
    };
    let k = reference.iter().position(|x| !x.is_zero()).expect("nonzero");
    Ok(restricted.iter().all(|r| {
        let ratio = &r[k] / &reference[k];
        ratio.is_positive() && *r == reference.scale(&ratio)
    }))
}

/// A pair `(x*, x_*)` every utility ranks strictly the same way, with
/// coordinates in `[−1, 1]`, from a margin LP over the direction box.
pub fn c_minimal_agreement(utilities: &[AffineUtility]) -> Option<(Vector, Vector)> {
    let d = utilities.first()?.coeffs.dim();
    let t = d;
    let mut lp = LinearProgram::new(d + 1);
    for var in 0..=d {
        lp.set_free(var);
    }
    lp.maximize_var(t);
    for u in utilities {
        let mut row = u.coeffs.0.clone();
        row.push(-Rational::one());
        lp.add(row, Relation::Ge, Rational::zero());
    }
    for var in 0..d {
        lp.add_terms(&[(var, Rational::one())], Relation::Le, Rational::one());
        lp.add_terms(&[(var, Rational::one())], Relation::Ge, -Rational::one());
    }
    let (x, margin) = lp.solve().optimal()?;
    margin.is_positive().then(|| (Vector(x[..d].to_vec()), Vector::zeros(d)))
}

pub fn check_c_minimal_agreement(prof: &Profile) -> Option<(Vector, Vector)> {
    c_minimal_agreement(&prof.utilities())
}

/// For each utility `i`, a pair `(x^{i*}, x_{i*})` strictly ranked by `i` and
/// indifferent for every other utility; `None` if some `i` has none, which
/// happens exactly when the coefficient vectors are linearly dependent.
pub fn c_diversity(utilities: &[AffineUtility]) -> Option<Vec<(Vector, Vector)>> {
    let d = utilities.first()?.coeffs.dim();
    let mut pairs = Vec::with_capacity(utilities.len());
    for (i, ui) in utilities.iter().enumerate() {
        let mut lp = LinearProgram::new(d);
        for var in 0..d {
            lp.set_free(var);
        }
        lp.set_objective(ui.coeffs.0.clone());
        for (j, uj) in utilities.iter().enumerate() {
            if j != i {
                lp.add(uj.coeffs.0.clone(), Relation::Eq, Rational::zero());
            }
        }
        for var in 0..d {
            lp.add_terms(&[(var, Rational::one())], Relation::Le, Rational::one());
            lp.add_terms(&[(var, Rational::one())], Relation::Ge, -Rational::one());
        }
        let (x, value) = lp.solve().optimal()?;
        if !value.is_positive() {
            return None;
        }
        pairs.push((Vector(x), Vector::zeros(d)));
    }
    Some(pairs)
}

pub fn check_c_diversity(prof: &Profile) -> Option<Vec<(Vector, Vector)>> {
    c_diversity(&prof.utilities())
}

/// Rank route to c-diversity, used to cross-check the directional witnesses.
pub fn coefficient_rank(utilities: &[AffineUtility]) -> usize {
    rank(&utilities.iter().map(|u| u.coeffs.clone()).collect::<Vec<_>>())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooFewAgents(usize),
    TooFewStates(usize),
    ConstantUtility(Party),
    UtilityDimension { who: Party, expected: usize, found: usize },
    BeliefDimension { who: Party, expected: usize, found: usize },
    NotADistribution { who: Party, vertex: Vector },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewAgents(n) => write!(f, "need at least two agents, found {n}"),
            Violation::TooFewStates(m) => write!(f, "need at least two states, found {m}"),
            Violation::ConstantUtility(who) => write!(f, "{who}: utility is constant"),
            Violation::UtilityDimension { who, expected, found } => {
                write!(f, "{who}: utility has {found} coefficients, expected {expected}")
            }
            Violation::BeliefDimension { who, expected, found } => {
                write!(f, "{who}: belief vertex has {found} entries, expected {expected}")
            }
            Violation::NotADistribution { who, vertex } => {
                write!(f, "{who}: belief vertex {vertex} is not a probability distribution")
            }
        }
    }
}

/// Every well-formedness problem of `prof`; empty means valid.
pub fn validate_profile(prof: &Profile) -> Vec<Violation> {
    let mut out = Vec::new();
    if prof.agents.len() < 2 {
        out.push(Violation::TooFewAgents(prof.agents.len()));
    }
    if prof.states < 2 {
        out.push(Violation::TooFewStates(prof.states));
    }
    let parties = prof
        .agents
        .iter()
        .enumerate()
        .map(|(i, a)| (Party::Agent(i), a))
        .chain(prof.society.iter().map(|a| (Party::Society, a)));
    for (who, agent) in parties {
        if agent.utility.coeffs.dim() != prof.outcome_dim {
            out.push(Violation::UtilityDimension {
                who,
                expected: prof.outcome_dim,
                found: agent.utility.coeffs.dim(),
            });
        }
        if agent.utility.coeffs.is_zero() {
            out.push(Violation::ConstantUtility(who));
        }
        for v in agent.beliefs.vertices() {
            if v.dim() != prof.states {
                out.push(Violation::BeliefDimension { who, expected: prof.states, found: v.dim() });
            } else if !v.is_distribution() {
                out.push(Violation::NotADistribution { who, vertex: v.clone() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};

    fn v(xs: &[&str]) -> Vector {
        Vector::parse(xs)
    }

    fn reform() -> Act {
        Act::new(vec![Vector::from_ints(&[30, -70]), Vector::from_ints(&[-70, 30])]).unwrap()
    }

    fn status_quo() -> Act {
        Act::constant(&Vector::from_ints(&[0, 0]), 2)
    }

    fn common_beliefs() -> Polytope {
        Polytope::new(vec![v(&["0.2", "0.8"]), v(&["0.8", "0.2"])]).unwrap()
    }

    fn ann() -> Agent {
        Agent::new(AffineUtility::linear(Vector::from_ints(&[1, 0])).unwrap(), common_beliefs()).named("Ann")
    }

    fn bob() -> Agent {
        Agent::new(AffineUtility::linear(Vector::from_ints(&[0, 1])).unwrap(), common_beliefs()).named("Bob")
    }

    #[test]
    fn expected_utility_examples() {
        let u = ann().utility;
        assert_eq!(expected_utility(&u, &v(&["0.2", "0.8"]), &reform()).unwrap(), int(-50));
        assert_eq!(expected_utility(&u, &v(&["0.8", "0.2"]), &reform()).unwrap(), int(10));
        let x = v(&["3", "-1/2"]);
        assert_eq!(expected_utility(&u, &v(&["0.4", "0.6"]), &Act::constant(&x, 2)).unwrap(), u.value(&x));
        assert!(expected_utility(&u, &v(&["1", "0", "0"]), &reform()).is_err());
    }

    #[test]
    fn bewley_examples() {
        assert!(!bewley_geq(&ann(), &status_quo(), &reform()).unwrap());
        assert!(!bewley_geq(&bob(), &status_quo(), &reform()).unwrap());
        assert!(bewley_geq(&ann(), &reform(), &reform()).unwrap());
        assert!(bewley_incomparable(&ann(), &status_quo(), &reform()).unwrap());
        assert!(!bewley_incomparable(&ann(), &reform(), &reform()).unwrap());
        let seu = Agent::new(ann().utility, Polytope::point(v(&["0.5", "0.5"])));
        assert!(!bewley_incomparable(&seu, &status_quo(), &reform()).unwrap());
    }

    #[test]
    fn taste_disagreement_examples() {
        let first = Profile::new(vec![ann(), bob()], None).unwrap();
        assert!(!no_taste_disagreement(&first, &status_quo(), &reform()).unwrap());
        let second = Profile::new(vec![ann(), ann().named("Bob")], None).unwrap();
        assert!(no_taste_disagreement(&second, &status_quo(), &reform()).unwrap());
        assert!(no_taste_disagreement(&first, &status_quo(), &status_quo()).unwrap());
        // Scaled tastes agree; a zero restriction next to a nonzero one does not.
        let scaled = Agent::new(AffineUtility::new(Vector::from_ints(&[3, 0]), int(7)).unwrap(), common_beliefs());
        let p = Profile::new(vec![ann(), scaled], None).unwrap();
        assert!(no_taste_disagreement(&p, &status_quo(), &reform()).unwrap());
        let along_second = Act::new(vec![Vector::from_ints(&[0, 1]), Vector::from_ints(&[0, -1])]).unwrap();
        assert!(!no_taste_disagreement(&first, &status_quo(), &along_second).unwrap());
    }

    #[test]
    fn c_minimal_agreement_examples() {
        let u = |c: &[i64]| AffineUtility::linear(Vector::from_ints(c)).unwrap();
        let (hi, lo) = c_minimal_agreement(&[u(&[1, 0]), u(&[0, 1])]).unwrap();
        assert_eq!((hi, lo), (Vector::from_ints(&[1, 1]), Vector::from_ints(&[0, 0])));
        assert!(c_minimal_agreement(&[u(&[1, 0]), u(&[-1, 0])]).is_none());
        let (hi, lo) = c_minimal_agreement(&[u(&[2, 3])]).unwrap();
        assert!(u(&[2, 3]).value(&hi) > u(&[2, 3]).value(&lo));
    }

    #[test]
    fn c_diversity_examples() {
        let u = |c: &[i64]| AffineUtility::linear(Vector::from_ints(c)).unwrap();
        let pairs = c_diversity(&[u(&[1, 0]), u(&[0, 1])]).unwrap();
        assert_eq!(pairs[0].0.sub(&pairs[0].1), Vector::from_ints(&[1, 0]));
        assert_eq!(pairs[1].0.sub(&pairs[1].1), Vector::from_ints(&[0, 1]));
        assert!(c_diversity(&[u(&[1, 0]), u(&[1, 0])]).is_none());
        assert!(c_diversity(&[u(&[1, 0]), u(&[0, 1]), u(&[1, 1])]).is_none());
        assert_eq!(coefficient_rank(&[u(&[1, 0]), u(&[0, 1]), u(&[1, 1])]), 2);
        // Constants do not matter: u₂ = u₁ + 1 is not c-diverse.
        let shifted = AffineUtility::new(Vector::from_ints(&[1, 0]), int(1)).unwrap();
        assert!(c_diversity(&[u(&[1, 0]), shifted]).is_none());
    }

    #[test]
    fn validation_examples() {
        let good = Profile::new(vec![ann(), bob()], None).unwrap();
        assert!(validate_profile(&good).is_empty());

        let mut constant = good.clone();
        constant.agents[1].utility.coeffs = Vector::from_ints(&[0, 0]);
        assert_eq!(validate_profile(&constant), vec![Violation::ConstantUtility(Party::Agent(1))]);

        let mut off_simplex = good.clone();
        off_simplex.agents[0].beliefs = Polytope::point(v(&["0.5", "0.6"]));
        assert_eq!(
            validate_profile(&off_simplex),
            vec![Violation::NotADistribution { who: Party::Agent(0), vertex: v(&["0.5", "0.6"]) }]
        );
        assert!(Profile::new(vec![ann()], None).is_err());
    }

    #[test]
    fn weight_vectors() {
        assert!(WeightVector::distribution(vec![rat(1, 2), rat(1, 2)]).is_ok());
        assert!(WeightVector::distribution(vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(WeightVector::nonnegative(vec![int(0), int(0)]).is_err());
        assert!(WeightVector::nonnegative(vec![int(0), int(2)]).is_ok());
        assert_eq!(WeightVector::uniform(4).0[0], rat(1, 4));
    }
}
