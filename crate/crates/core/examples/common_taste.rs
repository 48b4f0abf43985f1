//! Agents who share a utility but disagree on beliefs. Whether a social
//! belief set respects Common-Taste Pareto* depends on every combination of
//! belief vertices, not only on the pooled hull.

use bewley_agg::characterizations::{check_hull_bound, check_seu_existence, check_thm2_condition, DEFAULT_COMBO_CAP};
use bewley_agg::document::ProfileDocument;
use bewley_agg::geometry::Polytope;
use bewley_agg::witnesses::witness_for_thm2;

fn main() -> bewley_agg::Result<()> {
    for (label, text) in [
        ("P0 = {0.8}", include_str!("../data/example2_p08.profile")),
        ("P0 = [0.3, 0.6]", include_str!("../data/example2_mid.profile")),
        ("P0 = [0.2, 0.8]", include_str!("../data/example2_hull.profile")),
    ] {
        let prof = ProfileDocument::parse(text)?.to_profile()?;
        let hull = check_hull_bound(&prof)?;
        let thm2 = check_thm2_condition(&prof, DEFAULT_COMBO_CAP)?;
        println!("{label}: inside pooled hull {:?}, every combo meets P0 {:?}", hull.status, thm2.status);
        if !thm2.holds() {
            let cert = witness_for_thm2(&prof, &thm2)?;
            println!("  witness f = {:?}, x = {}", cert.act_f.rows().iter().map(ToString::to_string).collect::<Vec<_>>(), cert.act_x.rows()[0]);
            for m in &cert.per_agent {
                println!("  {} margin {} under {}", prof.display_name(m.party), m.margin, m.prior);
            }
            println!("  society margin {}; re-validates: {}", cert.society_margin, cert.revalidate(&prof));
        }

        if label.ends_with("{0.8}") {
            let beliefs: Vec<Polytope> = prof.agents.iter().map(|a| a.beliefs.clone()).collect();
            let prior = check_seu_existence(&beliefs, DEFAULT_COMBO_CAP)?.expect("the combo hulls share a point");
            println!("  a single prior compatible with every combo: {prior}");
        }
    }
    Ok(())
}
