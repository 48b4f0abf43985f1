//! Fuzz an axiom on a fixed profile, then cross-validate the condition
//! checkers on random profiles: a passing condition must survive fuzzing and
//! a failing one must produce a witness that re-validates.

use bewley_agg::axioms::Axiom;
use bewley_agg::characterizations::Condition;
use bewley_agg::document::ProfileDocument;
use bewley_agg::harness::{
    cross_validate, fuzz_axiom, random_profile, CrossConfig, FuzzConfig, GenParams, Sampler, SocietyRuleTag, TasteMode,
};

fn main() -> bewley_agg::Result<()> {
    let doc = ProfileDocument::parse(include_str!("../data/example1.profile"))?;
    let prof = doc.to_profile()?;
    let config = FuzzConfig { planted: doc.planted_pairs()?, ..FuzzConfig::new(500, Sampler::General, 42) };
    let report = fuzz_axiom(&prof, Axiom::ParetoStar, &config)?;
    println!(
        "pareto-star on example1: {} trials, {} premise hits, {} violations, digest {}",
        report.trials,
        report.premise_hits,
        report.violations.len(),
        &report.digest[..16]
    );

    let mut consistent = 0;
    let total = 20;
    for seed in 0..total {
        let params = GenParams {
            n: 2,
            m: 3,
            d: 2,
            max_vertices: 3,
            society_rule: SocietyRuleTag::Perturbed,
            taste: TasteMode::MinimalAgreement,
            ..GenParams::new(seed)
        };
        let prof = random_profile(&params)?;
        let verdict = cross_validate(&prof, Condition::Thm2, &CrossConfig::new(200, seed))?;
        if verdict.is_consistent() {
            consistent += 1;
        } else {
            println!("seed {seed}: {verdict:?}");
        }
    }
    println!("thm2 cross-validation: {consistent}/{total} consistent");
    Ok(())
}
