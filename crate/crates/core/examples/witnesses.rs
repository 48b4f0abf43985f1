//! Every witness kind on a shipped profile, with the margins re-checked from
//! scratch.

use bewley_agg::characterizations::{check_thm1_condition, check_thm2_condition, DEFAULT_COMBO_CAP};
use bewley_agg::document::ProfileDocument;
use bewley_agg::witnesses::{witness_for_thm1, witness_for_thm2, WitnessCertificate};

fn show(label: &str, prof: &bewley_agg::preferences::Profile, cert: &WitnessCertificate) {
    println!("{label}: {} witness against {}", cert.kind.name(), cert.axiom);
    for m in &cert.per_agent {
        println!("  {:>8} prefers f by {}", prof.display_name(m.party), m.margin);
    }
    println!("  {:>8} prefers x by {}", "society", cert.society_margin);
    println!("  re-validates: {}", cert.revalidate(prof));
}

fn main() -> bewley_agg::Result<()> {
    for (label, text) in [
        ("example1", include_str!("../data/example1.profile")),
        ("narrow_dictator", include_str!("../data/narrow_dictator.profile")),
        ("taste_conflict", include_str!("../data/taste_conflict.profile")),
    ] {
        let prof = ProfileDocument::parse(text)?.to_profile()?;
        let report = check_thm1_condition(&prof)?;
        show(label, &prof, &witness_for_thm1(&prof, &report)?);
    }
    let prof = ProfileDocument::parse(include_str!("../data/example2_p08.profile"))?.to_profile()?;
    let report = check_thm2_condition(&prof, DEFAULT_COMBO_CAP)?;
    show("example2_p08", &prof, &witness_for_thm2(&prof, &report)?);

    let json = serde_json::to_string_pretty(&witness_for_thm2(&prof, &report)?)?;
    println!("\nmachine-readable form:\n{json}");
    Ok(())
}
