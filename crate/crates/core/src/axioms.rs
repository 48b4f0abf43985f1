//! The six Paretian axioms evaluated on concrete act pairs.
//!
//! Every verdict reports premise and conclusion separately. Universal claims
//! ("for every prior") are decided on belief vertices; each strict claim found
//! along the way is recorded as a [`PriorCertificate`] that can be re-checked by
//! direct evaluation.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{membership, vector::serde_rational, LinearProgram, Rational, Relation, Vector};
use crate::preferences::{dominance_counterexample, eu, no_taste_disagreement, Act, Party, Profile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Pareto,
    ParetoStar,
    CtPareto,
    CtParetoStar,
    ExchangePareto,
    ExchangeParetoStar,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::Pareto,
        Axiom::ParetoStar,
        Axiom::CtPareto,
        Axiom::CtParetoStar,
        Axiom::ExchangePareto,
        Axiom::ExchangeParetoStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Pareto => "pareto",
            Axiom::ParetoStar => "pareto-star",
            Axiom::CtPareto => "ct-pareto",
            Axiom::CtParetoStar => "ct-pareto-star",
            Axiom::ExchangePareto => "exchange-pareto",
            Axiom::ExchangeParetoStar => "exchange-pareto-star",
        }
    }

    /// Whether the axiom is about withheld judgment (`⋡`) rather than weak
    /// preference.
    pub fn is_star(self) -> bool {
        matches!(self, Axiom::ParetoStar | Axiom::CtParetoStar | Axiom::ExchangeParetoStar)
    }

    pub fn is_common_taste(self) -> bool {
        matches!(self, Axiom::CtPareto | Axiom::CtParetoStar)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown axiom {s:?}")))
    }
}

/// `EU_{utility_of}(g) − EU_{utility_of}(f) = margin > 0` under `prior`, which
/// belongs to the belief set of `prior_of`. This is the witness of `f ⋡ g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PriorCertificate {
    pub utility_of: Party,
    pub prior_of: Party,
    pub prior: Vector,
    #[serde(with = "serde_rational")]
    pub margin: Rational,
}

impl PriorCertificate {
    pub fn revalidate(&self, prof: &Profile, f: &Act, g: &Act) -> bool {
        let (Ok(user), Ok(owner)) = (prof.party(self.utility_of), prof.party(self.prior_of)) else {
            return false;
        };
        let margin = eu(&user.utility, &self.prior, g) - eu(&user.utility, &self.prior, f);
        margin.is_positive() && margin == self.margin && membership(&self.prior, &owner.beliefs).unwrap_or(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub premise_holds: bool,
    pub conclusion_holds: bool,
    pub violation: bool,
    /// Set for the common-taste axioms.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub no_taste_disagreement: Option<bool>,
    pub certificates: Vec<PriorCertificate>,
}

impl AxiomVerdict {
    fn new(axiom: Axiom, premise_holds: bool, conclusion_holds: bool, certificates: Vec<PriorCertificate>) -> Self {
        AxiomVerdict {
            axiom,
            premise_holds,
            conclusion_holds,
            violation: premise_holds && !conclusion_holds,
            no_taste_disagreement: None,
            certificates,
        }
    }

    /// Re-checks every certificate by direct evaluation on `(f, g)`.
    pub fn revalidate(&self, prof: &Profile, f: &Act, g: &Act) -> bool {
        self.violation == (self.premise_holds && !self.conclusion_holds)
            && self.certificates.iter().all(|c| c.revalidate(prof, f, g))
    }
}

fn check_pair(prof: &Profile, f: &Act, g: &Act) -> Result<()> {
    prof.society()?;
    prof.check_act(f)?;
    prof.check_act(g)
}

/// Per-party dominance: `Ok(None)` when `f ≽ g`, otherwise the certificate of
/// `f ⋡ g`.
fn withheld(prof: &Profile, who: Party, f: &Act, g: &Act) -> Result<Option<PriorCertificate>> {
    let agent = prof.party(who)?;
    Ok(dominance_counterexample(agent, f, g)?.map(|(prior, margin)| PriorCertificate {
        utility_of: who,
        prior_of: who,
        prior,
        margin,
    }))
}

fn agent_parties(prof: &Profile) -> impl Iterator<Item = Party> {
    (0..prof.n()).map(Party::Agent)
}

/// If `f ≽_i g` for all `i`, then `f ≽_0 g`.
pub fn pareto_check(prof: &Profile, f: &Act, g: &Act) -> Result<AxiomVerdict> {
    check_pair(prof, f, g)?;
    weak_unanimity(prof, Axiom::Pareto, f, g, true)
}

fn weak_unanimity(prof: &Profile, axiom: Axiom, f: &Act, g: &Act, applicable: bool) -> Result<AxiomVerdict> {
    let mut premise = applicable;
    if premise {
        for who in agent_parties(prof) {
            if withheld(prof, who, f, g)?.is_some() {
                premise = false;
                break;
            }
        }
    }
    let society = withheld(prof, Party::Society, f, g)?;
    let conclusion = society.is_none();
    Ok(AxiomVerdict::new(axiom, premise, conclusion, society.into_iter().collect()))
}

/// If `f ⋡_i g` for all `i`, then `f ⋡_0 g`.
pub fn pareto_star_check(prof: &Profile, f: &Act, g: &Act) -> Result<AxiomVerdict> {
    check_pair(prof, f, g)?;
    withheld_unanimity(prof, Axiom::ParetoStar, f, g, true)
}

fn withheld_unanimity(prof: &Profile, axiom: Axiom, f: &Act, g: &Act, applicable: bool) -> Result<AxiomVerdict> {
    let mut certificates = Vec::new();
    let mut premise = applicable;
    if premise {
        for who in agent_parties(prof) {
            match withheld(prof, who, f, g)? {
                Some(c) => certificates.push(c),
                None => {
                    premise = false;
                    break;
                }
            }
        }
    }
    let society = withheld(prof, Party::Society, f, g)?;
    let conclusion = society.is_some();
    certificates.extend(society);
    Ok(AxiomVerdict::new(axiom, premise, conclusion, certificates))
}

/// Pareto restricted to pairs without taste disagreement.
pub fn ct_pareto_check(prof: &Profile, f: &Act, g: &Act) -> Result<AxiomVerdict> {
    check_pair(prof, f, g)?;
    let common = no_taste_disagreement(prof, f, g)?;
    let mut verdict = weak_unanimity(prof, Axiom::CtPareto, f, g, common)?;
    verdict.no_taste_disagreement = Some(common);
    Ok(verdict)
}

/// Pareto* restricted to pairs without taste disagreement.
pub fn ct_pareto_star_check(prof: &Profile, f: &Act, g: &Act) -> Result<AxiomVerdict> {
    check_pair(prof, f, g)?;
    let common = no_taste_disagreement(prof, f, g)?;
    let mut verdict = withheld_unanimity(prof, Axiom::CtParetoStar, f, g, common)?;
    verdict.no_taste_disagreement = Some(common);
    Ok(verdict)
}

/// If every agent weakly prefers `f` under every agent's priors, then `f ≽_0 g`.
pub fn exchange_pareto_check(prof: &Profile, f: &Act, g: &Act) -> Result<AxiomVerdict> {
    check_pair(prof, f, g)?;
    let mut premise = true;
    let mut certificates = Vec::new();
    'outer: for (i, user) in prof.agents.iter().enumerate() {
        for (j, owner) in prof.agents.iter().enumerate() {
            for v in owner.beliefs.vertices() {
                let margin = eu(&user.utility, v, g) - eu(&user.utility, v, f);
                if margin.is_positive() {
                    premise = false;
                    certificates.push(PriorCertificate {
                        utility_of: Party::Agent(i),
                        prior_of: Party::Agent(j),
                        prior: v.clone(),
                        margin,
                    });
                    break 'outer;
                }
            }
        }
    }
    let society = withheld(prof, Party::Society, f, g)?;
    let conclusion = society.is_none();
    certificates.extend(society);
    Ok(AxiomVerdict::new(Axiom::ExchangePareto, premise, conclusion, certificates))
}

/// A prior in `P_owner` under which every agent strictly prefers `g` to `f`,
/// found by maximizing the smallest margin over the belief set.
fn exchange_prior(prof: &Profile, owner: usize, f: &Act, g: &Act) -> Option<Vector> {
    let vertices = prof.agents[owner].beliefs.vertices();
    let k = vertices.len();
    let t = k;
    let mut lp = LinearProgram::new(k + 1);
    lp.set_free(t).maximize_var(t);
    let mut simplex_row = vec![Rational::one(); k];
    simplex_row.push(Rational::zero());
    lp.add(simplex_row, Relation::Eq, Rational::one());
    for user in &prof.agents {
        let mut row: Vec<Rational> =
            vertices.iter().map(|v| eu(&user.utility, v, g) - eu(&user.utility, v, f)).collect();
        row.push(-Rational::one());
        lp.add(row, Relation::Ge, Rational::zero());
    }
    let (mu, margin) = lp.solve().optimal().expect("bounded over the simplex");
    margin.is_positive().then(|| Vector::combination(&mu[..k], vertices))
}

/// If every belief set holds a prior under which all agents strictly prefer
/// `g` to `f`, then `f ⋡_0 g`.
pub fn exchange_pareto_star_check(prof: &Profile, f: &Act, g: &Act) -> Result<AxiomVerdict> {
    check_pair(prof, f, g)?;
    let mut premise = true;
    let mut certificates = Vec::new();
    for j in 0..prof.n() {
        let Some(prior) = exchange_prior(prof, j, f, g) else {
            premise = false;
            certificates.clear();
            break;
        };
        for (i, user) in prof.agents.iter().enumerate() {
            let margin = eu(&user.utility, &prior, g) - eu(&user.utility, &prior, f);
            certificates.push(PriorCertificate {
                utility_of: Party::Agent(i),
                prior_of: Party::Agent(j),
                prior: prior.clone(),
                margin,
            });
        }
    }
    let society = withheld(prof, Party::Society, f, g)?;
    let conclusion = society.is_some();
    certificates.extend(society);
    Ok(AxiomVerdict::new(Axiom::ExchangeParetoStar, premise, conclusion, certificates))
}

pub fn check_axiom(prof: &Profile, axiom: Axiom, f: &Act, g: &Act) -> Result<AxiomVerdict> {
    match axiom {
        Axiom::Pareto => pareto_check(prof, f, g),
        Axiom::ParetoStar => pareto_star_check(prof, f, g),
        Axiom::CtPareto => ct_pareto_check(prof, f, g),
        Axiom::CtParetoStar => ct_pareto_star_check(prof, f, g),
        Axiom::ExchangePareto => exchange_pareto_check(prof, f, g),
        Axiom::ExchangeParetoStar => exchange_pareto_star_check(prof, f, g),
    }
}

/// Evaluates `axiom` on each pair, in input order.
pub fn check_pairs(prof: &Profile, axiom: Axiom, pairs: &[(Act, Act)]) -> Result<Vec<AxiomVerdict>> {
    pairs.iter().map(|(f, g)| check_axiom(prof, axiom, f, g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Polytope;
    use crate::preferences::{AffineUtility, Agent};

    fn v(xs: &[&str]) -> Vector {
        Vector::parse(xs)
    }

    fn interval(lo: &str, hi: &str) -> Polytope {
        let p = |a: &str| {
            let a = crate::geometry::parse_rational(a).unwrap();
            Vector(vec![a.clone(), Rational::one() - a])
        };
        Polytope::new(vec![p(lo), p(hi)]).unwrap()
    }

    fn agent(coeffs: &[i64], beliefs: Polytope) -> Agent {
        Agent::new(AffineUtility::linear(Vector::from_ints(coeffs)).unwrap(), beliefs)
    }

    fn reform() -> Act {
        Act::new(vec![Vector::from_ints(&[30, -70]), Vector::from_ints(&[-70, 30])]).unwrap()
    }

    fn status_quo() -> Act {
        Act::constant(&Vector::from_ints(&[0, 0]), 2)
    }

    fn opposed_tastes(society_beliefs: Polytope) -> Profile {
        let society = Agent::new(
            AffineUtility::linear(Vector::parse(&["1/2", "1/2"])).unwrap(),
            society_beliefs,
        );
        Profile::new(
            vec![agent(&[1, 0], interval("0.2", "0.8")), agent(&[0, 1], interval("0.2", "0.8"))],
            Some(society),
        )
        .unwrap()
    }

    fn shared_taste(society_beliefs: Polytope) -> Profile {
        Profile::new(
            vec![agent(&[1, 0], interval("0.6", "0.8")), agent(&[1, 0], interval("0.3", "0.2"))],
            Some(agent(&[1, 0], society_beliefs)),
        )
        .unwrap()
    }

    #[test]
    fn pareto_examples() {
        let prof = opposed_tastes(interval("0.2", "0.8"));
        let same = pareto_check(&prof, &reform(), &reform()).unwrap();
        assert!(same.premise_holds && same.conclusion_holds && !same.violation);
        let sq = pareto_check(&prof, &status_quo(), &reform()).unwrap();
        assert!(!sq.premise_holds && !sq.violation);
        // A dictator society never violates Pareto.
        let dictator = prof.with_society(prof.agents[0].clone());
        let f = Act::new(vec![Vector::from_ints(&[1, 1]), Vector::from_ints(&[2, 2])]).unwrap();
        let verdict = pareto_check(&dictator, &f, &status_quo()).unwrap();
        assert!(verdict.premise_holds && !verdict.violation);
    }

    #[test]
    fn pareto_star_counterexample_for_every_society_belief_set() {
        for beliefs in [interval("0.2", "0.8"), interval("0", "1"), Polytope::point(v(&["0.5", "0.5"]))] {
            let prof = opposed_tastes(beliefs);
            let verdict = pareto_star_check(&prof, &status_quo(), &reform()).unwrap();
            assert!(verdict.premise_holds);
            assert!(!verdict.conclusion_holds);
            assert!(verdict.violation);
            assert!(verdict.revalidate(&prof, &status_quo(), &reform()));
        }
        let prof = opposed_tastes(interval("0.2", "0.8"));
        let same = pareto_star_check(&prof, &reform(), &reform()).unwrap();
        assert!(!same.premise_holds && !same.violation);
    }

    #[test]
    fn pareto_star_respected_by_a_large_dictatorial_society() {
        let prof = opposed_tastes(interval("0.2", "0.8"));
        let society = agent(&[1, 0], interval("0.2", "0.8"));
        let prof = prof.with_society(society);
        let verdict = pareto_star_check(&prof, &status_quo(), &reform()).unwrap();
        assert!(verdict.premise_holds && verdict.conclusion_holds && !verdict.violation);
    }

    #[test]
    fn common_taste_examples() {
        let prof = shared_taste(Polytope::point(v(&["0.8", "0.2"])));
        let verdict = ct_pareto_star_check(&prof, &reform(), &status_quo()).unwrap();
        assert_eq!(verdict.no_taste_disagreement, Some(true));
        assert!(verdict.premise_holds && !verdict.conclusion_holds && verdict.violation);
        assert!(verdict.revalidate(&prof, &reform(), &status_quo()));

        let first = opposed_tastes(interval("0.2", "0.8"));
        for (f, g) in [(status_quo(), reform()), (reform(), status_quo())] {
            let star = ct_pareto_star_check(&first, &f, &g).unwrap();
            let weak = ct_pareto_check(&first, &f, &g).unwrap();
            assert!(!star.premise_holds && !weak.premise_holds);
        }

        let dictator = prof.with_society(prof.agents[0].clone());
        let better = Act::constant(&Vector::from_ints(&[5, 0]), 2);
        let verdict = ct_pareto_check(&dictator, &better, &status_quo()).unwrap();
        assert!(verdict.premise_holds && !verdict.violation);
    }

    #[test]
    fn exchange_examples() {
        let first = opposed_tastes(interval("0.2", "0.8"));
        assert!(!exchange_pareto_check(&first, &status_quo(), &reform()).unwrap().premise_holds);
        let same = exchange_pareto_check(&first, &reform(), &reform()).unwrap();
        assert!(same.premise_holds && same.conclusion_holds);
        assert!(!exchange_pareto_star_check(&first, &reform(), &reform()).unwrap().premise_holds);

        let second = shared_taste(Polytope::point(v(&["0.8", "0.2"])));
        let verdict = exchange_pareto_star_check(&second, &reform(), &status_quo()).unwrap();
        assert!(verdict.premise_holds);
        assert!(verdict.violation);
        assert!(verdict.revalidate(&second, &reform(), &status_quo()));
        // The quoted priors also work: margins -10 and -40 against 0.
        let u = &second.agents[0].utility;
        assert_eq!(eu(u, &v(&["0.6", "0.4"]), &reform()), crate::geometry::int(-10));
        assert_eq!(eu(u, &v(&["0.3", "0.7"]), &reform()), crate::geometry::int(-40));

        let better = Act::constant(&Vector::from_ints(&[5, 0]), 2);
        let unanimous = exchange_pareto_check(&second, &better, &status_quo()).unwrap();
        assert!(unanimous.premise_holds);
    }

    #[test]
    fn exchange_star_needs_a_strict_margin() {
        let indifferent = Act::new(vec![Vector::from_ints(&[10, 0]), Vector::from_ints(&[-10, 0])]).unwrap();
        let prof = Profile::new(
            vec![agent(&[1, 0], Polytope::point(v(&["0.5", "0.5"]))), agent(&[1, 0], interval("0.2", "0.8"))],
            Some(agent(&[1, 0], interval("0.2", "0.8"))),
        )
        .unwrap();
        let verdict = exchange_pareto_star_check(&prof, &indifferent, &status_quo()).unwrap();
        assert!(!verdict.premise_holds);
    }

    #[test]
    fn missing_society_is_an_error() {
        let prof = Profile::new(
            vec![agent(&[1, 0], interval("0.2", "0.8")), agent(&[0, 1], interval("0.2", "0.8"))],
            None,
        )
        .unwrap();
        for axiom in Axiom::ALL {
            assert_eq!(check_axiom(&prof, axiom, &reform(), &status_quo()), Err(Error::MissingSociety));
        }
    }

    #[test]
    fn axiom_names_round_trip() {
        for axiom in Axiom::ALL {
            assert_eq!(axiom.name().parse::<Axiom>().unwrap(), axiom);
        }
        assert!("nope".parse::<Axiom>().is_err());
    }
}
