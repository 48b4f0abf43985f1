//! Deterministic random profiles.

use serde::Serialize;

use super::rng::SplitMix64;
use crate::characterizations::{aggregate_society, SocietyRule};
use crate::error::{Error, Result};
use crate::geometry::{int, Polytope, Rational, Vector};
use crate::preferences::{c_diversity, c_minimal_agreement, AffineUtility, Agent, Profile, WeightVector};

/// How the generated society forms its beliefs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SocietyRuleTag {
    /// `Σ γᵢ Pᵢ` for a random `γ`.
    Minkowski,
    HullUnion,
    /// A random Minkowski average with a vertex dropped or a random point
    /// added, so the conditions may go either way.
    Perturbed,
}

/// Constraint on the sampled utilities, enforced by rejection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TasteMode {
    Any,
    MinimalAgreement,
    Diversity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenParams {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Bound on the integer weights behind each belief vertex.
    pub denominator: i64,
    pub society_rule: SocietyRuleTag,
    pub taste: TasteMode,
    /// All agents share one belief set.
    pub common_beliefs: bool,
}

impl GenParams {
    pub fn new(seed: u64) -> Self {
        GenParams {
            seed,
            n: 2,
            m: 2,
            d: 2,
            min_vertices: 1,
            max_vertices: 2,
            denominator: 10,
            society_rule: SocietyRuleTag::HullUnion,
            taste: TasteMode::Any,
            common_beliefs: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParams(msg.into()));
        if self.n < 2 || self.m < 2 || self.d < 1 {
            return bad("need n ≥ 2, m ≥ 2, d ≥ 1");
        }
        if self.min_vertices < 1 || self.min_vertices > self.max_vertices {
            return bad("need 1 ≤ min_vertices ≤ max_vertices");
        }
        if self.denominator < 1 {
            return bad("denominator bound must be positive");
        }
        if self.taste == TasteMode::Diversity && self.d < self.n {
            return bad("c-diversity needs d ≥ n");
        }
        if self.min_vertices > 1 && self.denominator < 2 {
            return bad("multi-vertex belief sets need denominator ≥ 2");
        }
        Ok(())
    }
}

const MAX_REJECTIONS: usize = 10_000;

/// A distribution over `m` states with entries `wₛ / Σw`, `wₛ ∈ 0..=denom`.
pub fn random_simplex_point(rng: &mut SplitMix64, m: usize, denom: i64) -> Vector {
    loop {
        let weights: Vec<i64> = (0..m).map(|_| rng.range(0, denom)).collect();
        let total: i64 = weights.iter().sum();
        if total > 0 {
            return Vector(weights.into_iter().map(|w| Rational::new(w.into(), total.into())).collect());
        }
    }
}

fn random_belief_set(rng: &mut SplitMix64, params: &GenParams) -> Result<Polytope> {
    for _ in 0..MAX_REJECTIONS {
        let k = rng.range(params.min_vertices as i64, params.max_vertices as i64) as usize;
        let poly = Polytope::new((0..k).map(|_| random_simplex_point(rng, params.m, params.denominator)).collect())?;
        if poly.vertices().len() >= params.min_vertices {
            return Ok(poly);
        }
    }
    Err(Error::InvalidParams("could not sample a belief set with enough vertices".into()))
}

fn random_utilities(rng: &mut SplitMix64, params: &GenParams) -> Result<Vec<AffineUtility>> {
    for _ in 0..MAX_REJECTIONS {
        let utilities: Vec<AffineUtility> = (0..params.n)
            .filter_map(|_| {
                let coeffs = Vector((0..params.d).map(|_| int(rng.range(-3, 3))).collect());
                AffineUtility::new(coeffs, int(rng.range(-2, 2))).ok()
            })
            .collect();
        if utilities.len() < params.n {
            continue;
        }
        let accepted = match params.taste {
            TasteMode::Any => true,
            TasteMode::MinimalAgreement => c_minimal_agreement(&utilities).is_some(),
            TasteMode::Diversity => c_diversity(&utilities).is_some(),
        };
        if accepted {
            return Ok(utilities);
        }
    }
    Err(Error::InvalidParams("could not sample utilities in the requested taste mode".into()))
}

fn random_weights(rng: &mut SplitMix64, n: usize, hi: i64) -> Vec<Rational> {
    loop {
        let w: Vec<i64> = (0..n).map(|_| rng.range(0, hi)).collect();
        if w.iter().any(|&x| x > 0) {
            return w.into_iter().map(int).collect();
        }
    }
}

/// A random `γ ∈ Δ(N)`.
pub fn random_distribution(rng: &mut SplitMix64, n: usize, denom: i64) -> WeightVector {
    let w = random_weights(rng, n, denom);
    let total: Rational = w.iter().sum();
    WeightVector(w.into_iter().map(|x| x / &total).collect())
}

/// Same seed and parameters, same profile. The output always passes
/// `validate_profile`.
pub fn random_profile(params: &GenParams) -> Result<Profile> {
    params.validate()?;
    let mut rng = SplitMix64::new(params.seed);
    let beliefs: Vec<Polytope> = if params.common_beliefs {
        let common = random_belief_set(&mut rng, params)?;
        vec![common; params.n]
    } else {
        (0..params.n).map(|_| random_belief_set(&mut rng, params)).collect::<Result<_>>()?
    };
    let utilities = random_utilities(&mut rng, params)?;
    let agents: Vec<Agent> = utilities.into_iter().zip(beliefs).map(|(u, b)| Agent::new(u, b)).collect();
    let base = Profile::new(agents, None)?;

    for _ in 0..MAX_REJECTIONS {
        let alpha = WeightVector(random_weights(&mut rng, params.n, 3));
        let beta = int(rng.range(-2, 2));
        let gamma = random_distribution(&mut rng, params.n, params.denominator);
        let rule = match params.society_rule {
            SocietyRuleTag::Minkowski => SocietyRule::Minkowski(gamma),
            SocietyRuleTag::HullUnion => SocietyRule::HullUnion,
            SocietyRuleTag::Perturbed => {
                let avg = match aggregate_society(&base, &alpha, beta.clone(), &SocietyRule::Minkowski(gamma)) {
                    Ok(avg) => avg,
                    Err(Error::InvalidWeights(_)) => continue,
                    Err(e) => return Err(e),
                };
                let mut vertices = avg.beliefs.vertices().to_vec();
                let drop = vertices.len() > 1 && rng.coin();
                if drop {
                    vertices.remove(rng.index(vertices.len()));
                }
                if !drop || rng.coin() {
                    vertices.push(random_simplex_point(&mut rng, params.m, params.denominator));
                }
                SocietyRule::Given(vertices)
            }
        };
        match aggregate_society(&base, &alpha, beta, &rule) {
            Ok(society) => return Ok(base.with_society(society)),
            // The weighted coefficients cancelled; draw new weights.
            Err(Error::InvalidWeights(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::InvalidParams("could not sample a non-constant social utility".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preferences::validate_profile;

    #[test]
    fn deterministic() {
        let params = GenParams { society_rule: SocietyRuleTag::Perturbed, ..GenParams::new(1) };
        assert_eq!(random_profile(&params).unwrap(), random_profile(&params).unwrap());
    }

    #[test]
    fn perturbed_retries_cancelling_weights() {
        // With d = 1 some weight draws for this seed cancel.
        let params = GenParams {
            n: 2,
            m: 2,
            d: 1,
            max_vertices: 3,
            society_rule: SocietyRuleTag::Perturbed,
            ..GenParams::new(13282642190273715461)
        };
        assert!(random_profile(&params).unwrap().society.is_some());
    }

    #[test]
    fn single_vertex_means_seu() {
        let params = GenParams { max_vertices: 1, ..GenParams::new(3) };
        let prof = random_profile(&params).unwrap();
        assert!(prof.agents.iter().all(Agent::is_seu));
    }

    #[test]
    fn outputs_validate() {
        for seed in 0..40 {
            for rule in [SocietyRuleTag::Minkowski, SocietyRuleTag::HullUnion, SocietyRuleTag::Perturbed] {
                let params = GenParams {
                    n: 3,
                    m: 3,
                    d: 3,
                    max_vertices: 3,
                    society_rule: rule,
                    taste: TasteMode::Diversity,
                    ..GenParams::new(seed)
                };
                let prof = random_profile(&params).unwrap();
                assert!(validate_profile(&prof).is_empty());
                assert!(prof.society.is_some());
                assert!(c_diversity(&prof.utilities()).is_some());
            }
        }
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(random_profile(&GenParams { n: 1, ..GenParams::new(0) }).is_err());
        assert!(random_profile(&GenParams { max_vertices: 0, ..GenParams::new(0) }).is_err());
        assert!(random_profile(&GenParams { d: 1, n: 2, taste: TasteMode::Diversity, ..GenParams::new(0) }).is_err());
    }
}
