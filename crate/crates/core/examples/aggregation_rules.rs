//! Building a society from its members: utilitarian tastes with Minkowski
//! averaged or pooled beliefs, both of which satisfy every condition.

use bewley_agg::characterizations::{aggregate_society, check_condition, Condition, SocietyRule, DEFAULT_COMBO_CAP};
use bewley_agg::harness::{random_distribution, random_profile, GenParams, SplitMix64, TasteMode};
use bewley_agg::preferences::WeightVector;

fn main() -> bewley_agg::Result<()> {
    let params = GenParams { n: 3, m: 3, d: 3, max_vertices: 3, taste: TasteMode::Diversity, ..GenParams::new(7) };
    let base = random_profile(&params)?;
    let mut rng = SplitMix64::new(7);
    let gamma = random_distribution(&mut rng, base.n(), 6);
    let alpha = WeightVector::uniform(base.n());
    for (name, rule) in [("minkowski", SocietyRule::Minkowski(gamma)), ("hull-union", SocietyRule::HullUnion)] {
        let society = aggregate_society(&base, &alpha, bewley_agg::geometry::int(0), &rule)?;
        println!("{name}: society has {} belief vertices", society.beliefs.vertices().len());
        let prof = base.with_society(society);
        for condition in [Condition::HullBound, Condition::Thm2, Condition::Thm1] {
            let report = check_condition(&prof, condition, DEFAULT_COMBO_CAP)?;
            println!("  {condition}: {:?}", report.status);
        }
    }
    Ok(())
}
