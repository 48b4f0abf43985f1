//! Two agents who agree on a ranking for opposite reasons, and a society that
//! averages both their tastes and their beliefs.
//!
//! Run with `cargo run --example spurious_unanimity`.

use bewley_agg::axioms::{pareto_star_check, Axiom};
use bewley_agg::characterizations::{check_thm1_condition, Failure};
use bewley_agg::document::{ActsDocument, ProfileDocument};
use bewley_agg::witnesses::witness_for_thm1;

const PROFILE: &str = include_str!("../data/example1.profile");
const ACTS: &str = include_str!("../data/sq_vs_reform.acts");

fn main() -> bewley_agg::Result<()> {
    let prof = ProfileDocument::parse(PROFILE)?.to_profile()?;
    let (status_quo, reform) = ActsDocument::parse(ACTS)?.pair()?;

    let verdict = pareto_star_check(&prof, &status_quo, &reform)?;
    println!("neither agent rules out the reform: {}", verdict.premise_holds);
    println!("society still ranks the status quo above it: {}", !verdict.conclusion_holds);
    for c in &verdict.certificates {
        println!("  {} gains {} from the reform under {}", prof.display_name(c.utility_of), c.margin, c.prior);
    }

    let report = check_thm1_condition(&prof)?;
    println!("\nthm1 condition: {:?}", report.status);
    if let Some(Failure::NoClause { support }) = &report.failure {
        println!("  weighted agents {support:?}: no common singleton prior, no dictator");
    }

    let cert = witness_for_thm1(&prof, &report)?;
    println!("\n{} witness violating {}", cert.kind.name(), Axiom::ParetoStar);
    println!("  epsilon = {}", cert.params.epsilon.as_ref().expect("set for this kind"));
    println!("  f = {:?}", cert.act_f.rows().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("  x = {}", cert.act_x.rows()[0]);
    for m in &cert.per_agent {
        println!("  {} prefers f by {} under {}", prof.display_name(m.party), m.margin, m.prior);
    }
    println!("  society prefers x by at least {}", cert.society_margin);
    println!("  re-validates: {}", cert.revalidate(&prof));
    Ok(())
}
