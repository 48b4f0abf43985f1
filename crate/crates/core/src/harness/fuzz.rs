//! Axiom fuzzing over sampled act pairs.

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::rng::SplitMix64;
use crate::axioms::{check_axiom, Axiom, AxiomVerdict};
use crate::error::{Error, Result};
use crate::geometry::{Rational, Vector};
use crate::preferences::{check_c_minimal_agreement, Act, Profile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sampler {
    /// Outcome coordinates drawn from a bounded grid of rationals.
    General,
    /// Both acts on the segment from `x_*` to `x*` that every agent ranks the
    /// same way, so no pair has a taste disagreement.
    CommonTaste,
}

impl std::str::FromStr for Sampler {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Sampler::General),
            "common-taste" => Ok(Sampler::CommonTaste),
            _ => Err(Error::Parse(format!("unknown sampler {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub trials: usize,
    pub sampler: Sampler,
    pub seed: u64,
    /// Pairs evaluated first, as trials `0, 1, …`; they count toward `trials`.
    pub planted: Vec<(Act, Act)>,
}

impl FuzzConfig {
    pub fn new(trials: usize, sampler: Sampler, seed: u64) -> Self {
        FuzzConfig { trials, sampler, seed, planted: Vec::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzViolation {
    pub trial: usize,
    pub f: Act,
    pub g: Act,
    pub verdict: AxiomVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub axiom: Axiom,
    pub sampler: Sampler,
    pub seed: u64,
    pub trials: usize,
    pub premise_hits: usize,
    pub violations: Vec<FuzzViolation>,
    /// SHA-256 over the serialized trial stream.
    pub digest: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Numerators in `[-20, 20]`, denominators in `1..=4`.
fn general_outcome(rng: &mut SplitMix64, d: usize) -> Vector {
    Vector((0..d).map(|_| Rational::new(rng.range(-20, 20).into(), rng.range(1, 4).into())).collect())
}

fn general_act(rng: &mut SplitMix64, m: usize, d: usize) -> Act {
    Act::new((0..m).map(|_| general_outcome(rng, d)).collect()).expect("m ≥ 2 rows of equal dimension")
}

const SEGMENT_STEPS: i64 = 12;

fn segment_act(rng: &mut SplitMix64, m: usize, top: &Vector, low: &Vector, constant: bool) -> Act {
    if constant {
        Act::constant(&Vector::lerp(top, low, &rng.unit_fraction(SEGMENT_STEPS)), m)
    } else {
        Act::new((0..m).map(|_| Vector::lerp(top, low, &rng.unit_fraction(SEGMENT_STEPS))).collect())
            .expect("m ≥ 2 rows of equal dimension")
    }
}

fn trial_record(trial: usize, f: &Act, g: &Act, v: &AxiomVerdict) -> Result<String> {
    Ok(format!(
        "{trial}|{}|{}|{}|{}|{}\n",
        serde_json::to_string(f)?,
        serde_json::to_string(g)?,
        v.premise_holds,
        v.conclusion_holds,
        v.violation
    ))
}

/// Evaluates `axiom` on planted pairs, then on sampled ones, up to
/// `config.trials` in total.
pub fn fuzz_axiom(prof: &Profile, axiom: Axiom, config: &FuzzConfig) -> Result<FuzzReport> {
    prof.society()?;
    let mut warnings = Vec::new();
    let segment = match config.sampler {
        Sampler::General => {
            if axiom.is_common_taste() {
                warnings.push(
                    "the general sampler rarely yields pairs without taste disagreement; premise coverage will be thin"
                        .to_string(),
                );
            }
            None
        }
        Sampler::CommonTaste => Some(check_c_minimal_agreement(prof).ok_or_else(|| {
            Error::Precondition("the common-taste sampler needs c-minimal agreement".into())
        })?),
    };

    let mut rng = SplitMix64::new(config.seed);
    let mut hasher = Sha256::new();
    let mut premise_hits = 0;
    let mut violations = Vec::new();
    for trial in 0..config.trials {
        let (f, g) = match config.planted.get(trial) {
            Some(pair) => pair.clone(),
            None => match &segment {
                None => (general_act(&mut rng, prof.states, prof.outcome_dim), general_act(&mut rng, prof.states, prof.outcome_dim)),
                Some((top, low)) => {
                    let constant_side = rng.below(3);
                    let f = segment_act(&mut rng, prof.states, top, low, constant_side == 0);
                    let g = segment_act(&mut rng, prof.states, top, low, constant_side == 1);
                    (f, g)
                }
            },
        };
        let verdict = check_axiom(prof, axiom, &f, &g)?;
        hasher.update(trial_record(trial, &f, &g, &verdict)?.as_bytes());
        if verdict.premise_holds {
            premise_hits += 1;
        }
        if verdict.violation {
            violations.push(FuzzViolation { trial, f, g, verdict });
        }
    }
    Ok(FuzzReport {
        axiom,
        sampler: config.sampler,
        seed: config.seed,
        trials: config.trials,
        premise_hits,
        violations,
        digest: hex::encode(hasher.finalize()),
        warnings,
    })
}
