//! Expected-utility lines for the status quo and the reform, as CSV.
//! Each row is a value of p_A; endpoint rows mark where a belief set ends.

use bewley_agg::cli::plot_csv;
use bewley_agg::document::{ActsDocument, ProfileDocument};

fn main() -> bewley_agg::Result<()> {
    let cases = [
        ("opposed tastes, common beliefs", include_str!("../data/example1.profile"), include_str!("../data/sq_vs_reform.acts")),
        (
            "common taste, heterogeneous beliefs",
            include_str!("../data/example2_p08.profile"),
            include_str!("../data/reform_vs_sq_common.acts"),
        ),
    ];
    for (title, profile, acts) in cases {
        let prof = ProfileDocument::parse(profile)?.to_profile()?;
        let acts = ActsDocument::parse(acts)?;
        println!("# {title}");
        print!("{}", plot_csv(&prof, &acts.acts, 11, 2)?);
        println!();
    }
    Ok(())
}
