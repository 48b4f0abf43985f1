//! Cross-validation of a condition checker against its axiom.
//!
//! A passing checker must survive fuzzing of the matching axiom; a failing one
//! must yield a witness whose violation re-validates. Anything else is a bug in
//! one of the two sides.

use serde::Serialize;

use super::fuzz::{fuzz_axiom, FuzzConfig, Sampler};
use crate::axioms::{check_axiom, Axiom};
use crate::characterizations::{check_condition, Condition, ConditionReport, Status, DEFAULT_COMBO_CAP};
use crate::error::{Error, Result};
use crate::preferences::{check_c_diversity, check_c_minimal_agreement, Profile};
use crate::witnesses::{witness_for_thm1, witness_for_thm2};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Consistency {
    Consistent { detail: String },
    Inconsistent { reason: String },
}

impl Consistency {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Consistency::Consistent { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossConfig {
    pub trials: usize,
    pub seed: u64,
    pub combo_cap: u128,
}

impl CrossConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        CrossConfig { trials, seed, combo_cap: DEFAULT_COMBO_CAP }
    }
}

/// The axiom a condition characterizes, with the sampler that exercises its
/// premise.
fn matching_axiom(condition: Condition) -> Result<(Axiom, Sampler)> {
    match condition {
        Condition::Thm1 => Ok((Axiom::ParetoStar, Sampler::General)),
        Condition::Thm2 => Ok((Axiom::CtParetoStar, Sampler::CommonTaste)),
        Condition::Prop2 => Ok((Axiom::ExchangeParetoStar, Sampler::CommonTaste)),
        other => Err(Error::InvalidParams(format!("no cross-validation for {other}"))),
    }
}

pub fn cross_validate(prof: &Profile, condition: Condition, config: &CrossConfig) -> Result<Consistency> {
    cross_validate_with(prof, condition, config, |p| check_condition(p, condition, config.combo_cap))
}

/// Same as [`cross_validate`] with the condition checker supplied by the caller.
pub fn cross_validate_with<F>(prof: &Profile, condition: Condition, config: &CrossConfig, checker: F) -> Result<Consistency>
where
    F: Fn(&Profile) -> Result<ConditionReport>,
{
    let (axiom, sampler) = matching_axiom(condition)?;
    prof.society()?;
    let hypotheses = match condition {
        Condition::Thm1 => check_c_diversity(prof).is_some(),
        _ => check_c_minimal_agreement(prof).is_some(),
    };
    if !hypotheses {
        return Err(Error::Precondition(format!("the hypotheses of {condition} do not hold")));
    }
    let report = checker(prof)?;
    let inconsistent = |reason: String| Ok(Consistency::Inconsistent { reason });
    match report.status {
        Status::PreconditionUnmet => Err(Error::Precondition(report.notes.join("; "))),
        Status::Holds => {
            let fuzz = fuzz_axiom(prof, axiom, &FuzzConfig::new(config.trials, sampler, config.seed))?;
            match fuzz.violations.first() {
                Some(v) => inconsistent(format!("{condition} holds but trial {} violates {axiom}", v.trial)),
                None => Ok(Consistency::Consistent {
                    detail: format!("{condition} holds; {} trials found no {axiom} violation", fuzz.trials),
                }),
            }
        }
        Status::Fails => {
            let built = match condition {
                Condition::Thm1 => witness_for_thm1(prof, &report),
                _ => witness_for_thm2(prof, &report),
            };
            let cert = match built {
                Ok(cert) => cert,
                Err(e) => return inconsistent(format!("{condition} fails but no witness could be built: {e}")),
            };
            if !cert.revalidate(prof) {
                return inconsistent(format!("{condition} fails but the {} witness does not validate", cert.kind.name()));
            }
            if axiom != cert.axiom && !check_axiom(prof, axiom, &cert.act_x, &cert.act_f)?.violation {
                return inconsistent(format!("the {} witness does not violate {axiom}", cert.kind.name()));
            }
            Ok(Consistency::Consistent {
                detail: format!("{condition} fails; the {} witness validates", cert.kind.name()),
            })
        }
    }
}
