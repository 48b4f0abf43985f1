//! Command-line front end: `check`, `witness`, `plot-data` and `fuzz`.
//!
//! Exit codes: 0 holds or no violation, 1 fails or violation found,
//! 2 precondition unmet or nothing to witness, 3 input error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::axioms::{check_axiom, Axiom, AxiomVerdict};
use crate::characterizations::{
    check_condition, check_seu_existence, check_thm1_condition, check_thm2_condition, utilitarian_decompose, BeliefRef, Condition,
    ConditionReport, Evidence, Failure, Status, DEFAULT_COMBO_CAP,
};
use crate::document::{load_acts, load_profile, NamedAct};
use crate::error::{Error, Result};
use crate::geometry::{format_decimal, format_rational, Polytope, Rational, Vector};
use crate::harness::{fuzz_axiom, FuzzConfig, FuzzReport, Sampler};
use crate::preferences::{c_diversity, eu, Act, Party, Profile};
use crate::witnesses::{
    pick_lemma1, pick_spurious_pair, witness_for_thm2, witness_lemma1, witness_spurious_unanimity,
    witness_taste_conflict, WitnessCertificate,
};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Relative `--out` paths are resolved against this directory when set.
pub const OUT_DIR_ENV: &str = "BEWLEY_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "bewley-agg", version, about = "Exact checks of Paretian aggregation for multi-prior preferences")]
struct Cli {
    /// Report style on stdout.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Also write the machine-readable report (CSV for plot-data) here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Refuse vertex-combination enumerations larger than this.
    #[arg(long, default_value_t = DEFAULT_COMBO_CAP as u64, global = true)]
    combo_cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum WitnessArg {
    CtParetoStar,
    Lemma1,
    SpuriousUnanimity,
    TasteConflict,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an axiom on an act pair, a condition, or `seu` (a common SEU
    /// prior compatible with every vertex combination).
    Check {
        profile: PathBuf,
        /// Axiom name (pareto-star, ...), condition name (thm2, ...) or `seu`.
        what: String,
        /// Acts document; its first two acts are the pair (f, g). Defaults to
        /// the profile's first planted pair.
        #[arg(long)]
        acts: Option<PathBuf>,
    },
    /// Build a certified counterexample.
    Witness {
        profile: PathBuf,
        #[arg(value_enum)]
        kind: WitnessArg,
    },
    /// Expected utility of each act for each party along p_A (two states only).
    PlotData {
        profile: PathBuf,
        acts: PathBuf,
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// Decimal places in the CSV.
        #[arg(long, default_value_t = 6)]
        precision: usize,
    },
    /// Sample act pairs and look for violations of an axiom.
    Fuzz {
        profile: PathBuf,
        axiom: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// general or common-taste; defaults to common-taste for the
        /// common-taste and exchange axioms.
        #[arg(long)]
        sampler: Option<String>,
        /// Acts document whose first two acts are evaluated first.
        #[arg(long)]
        acts: Option<PathBuf>,
    },
}

/// Output of one command: stdout text, optional file payload, exit code.
struct Outcome {
    text: String,
    file: Option<String>,
    code: i32,
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::Precondition(_) => EXIT_PRECONDITION,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{shown}");
                EXIT_HOLDS
            } else {
                let _ = write!(err, "{shown}");
                EXIT_INPUT
            };
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_for(&e);
        }
    };
    if let (Some(path), Some(payload)) = (&cli.out, &outcome.file) {
        let path = resolve_out(path);
        if let Err(e) = std::fs::write(&path, payload) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_INPUT;
        }
    }
    let _ = write!(out, "{}", outcome.text);
    outcome.code
}

fn resolve_out(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let cap = u128::from(cli.combo_cap);
    match &cli.command {
        Command::Check { profile, what, acts } => cmd_check(cli.format, profile, what, acts.as_deref(), cap),
        Command::Witness { profile, kind } => cmd_witness(cli.format, profile, *kind, cap),
        Command::PlotData { profile, acts, grid, precision } => {
            cmd_plot_data(profile, acts, *grid, *precision, cli.out.is_some())
        }
        Command::Fuzz { profile, axiom, trials, seed, sampler, acts } => {
            cmd_fuzz(cli.format, profile, axiom, *trials, *seed, sampler.as_deref(), acts.as_deref())
        }
    }
}

fn machine<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn finish<T: Serialize>(format: Format, value: &T, human: String, code: i32) -> Result<Outcome> {
    let json = machine(value)?;
    let text = match format {
        Format::Human => human,
        Format::Machine => json.clone(),
    };
    Ok(Outcome { text, file: Some(json), code })
}

#[derive(Serialize)]
struct AxiomReport<'a> {
    f: &'a Act,
    g: &'a Act,
    verdict: &'a AxiomVerdict,
}

#[derive(Serialize)]
struct SeuReport {
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    prior: Option<Vector>,
}

fn cmd_check(format: Format, profile: &Path, what: &str, acts: Option<&Path>, cap: u128) -> Result<Outcome> {
    let (doc, prof) = load_profile(profile)?;
    if what == "seu" {
        let beliefs: Vec<Polytope> = prof.agents.iter().map(|a| a.beliefs.clone()).collect();
        let prior = check_seu_existence(&beliefs, cap)?;
        let human = match &prior {
            Some(p) => format!("seu: holds\n  common prior {}\n", show_vector(p)),
            None => "seu: fails\n  no prior lies in the hull of every vertex combination\n".to_string(),
        };
        let code = if prior.is_some() { EXIT_HOLDS } else { EXIT_FAILS };
        return finish(format, &SeuReport { found: prior.is_some(), prior }, human, code);
    }
    if let Ok(axiom) = what.parse::<Axiom>() {
        let (f, g) = match acts {
            Some(path) => load_acts(path)?.pair()?,
            None => doc
                .planted_pairs()?
                .into_iter()
                .next()
                .ok_or_else(|| Error::Parse("axiom checks need --acts or a planted pair in the profile".into()))?,
        };
        let verdict = check_axiom(&prof, axiom, &f, &g)?;
        let code = if verdict.violation { EXIT_FAILS } else { EXIT_HOLDS };
        let human = human_verdict(&prof, &verdict);
        return finish(format, &AxiomReport { f: &f, g: &g, verdict: &verdict }, human, code);
    }
    let condition: Condition = what
        .parse()
        .map_err(|_| Error::Parse(format!("{what:?} is neither an axiom, a condition nor `seu`")))?;
    let report = check_condition(&prof, condition, cap)?;
    let code = match report.status {
        Status::Holds => EXIT_HOLDS,
        Status::Fails => EXIT_FAILS,
        Status::PreconditionUnmet => EXIT_PRECONDITION,
    };
    let human = human_report(&prof, &report);
    finish(format, &report, human, code)
}

fn cmd_witness(format: Format, profile: &Path, kind: WitnessArg, cap: u128) -> Result<Outcome> {
    let (_, prof) = load_profile(profile)?;
    let nothing = |why: &str| Error::Precondition(why.to_string());
    let cert = match kind {
        WitnessArg::CtParetoStar => {
            let report = check_thm2_condition(&prof, cap)?;
            match report.status {
                Status::Holds => return Err(nothing("thm2 holds; nothing to witness")),
                Status::PreconditionUnmet => return Err(nothing(&report.notes.join("; "))),
                Status::Fails => witness_for_thm2(&prof, &report)?,
            }
        }
        WitnessArg::Lemma1 => {
            let dec = utilitarian_decompose(&prof, None)?.ok_or_else(|| nothing("no utilitarian decomposition"))?;
            let (i, p) =
                pick_lemma1(&prof, &dec)?.ok_or_else(|| nothing("every weighted agent's beliefs lie inside P0"))?;
            witness_lemma1(&prof, &dec, i, &p)?
        }
        WitnessArg::SpuriousUnanimity => {
            if c_diversity(&prof.utilities()).is_none() {
                return Err(nothing("utilities are not c-diverse"));
            }
            let report = check_thm1_condition(&prof)?;
            if report.status == Status::Holds {
                return Err(nothing("thm1 holds; nothing to witness"));
            }
            let dec = report.decomposition.ok_or_else(|| nothing("no utilitarian decomposition"))?;
            let (i1, i2, p1, p2) = pick_spurious_pair(&prof, &dec)
                .ok_or_else(|| nothing("no two weighted agents with distinct priors"))?;
            witness_spurious_unanimity(&prof, &dec, i1, i2, &p1, &p2)?
        }
        WitnessArg::TasteConflict => {
            if utilitarian_decompose(&prof, None)?.is_some() {
                return Err(nothing("a utilitarian decomposition exists"));
            }
            witness_taste_conflict(&prof, Axiom::ParetoStar)?
        }
    };
    let human = human_witness(&prof, &cert);
    finish(format, &cert, human, EXIT_HOLDS)
}

fn cmd_fuzz(
    format: Format,
    profile: &Path,
    axiom: &str,
    trials: usize,
    seed: u64,
    sampler: Option<&str>,
    acts: Option<&Path>,
) -> Result<Outcome> {
    let (doc, prof) = load_profile(profile)?;
    let axiom: Axiom = axiom.parse()?;
    let sampler = match sampler {
        Some(s) => s.parse()?,
        None if matches!(axiom, Axiom::CtPareto | Axiom::CtParetoStar | Axiom::ExchangePareto | Axiom::ExchangeParetoStar) => {
            Sampler::CommonTaste
        }
        None => Sampler::General,
    };
    let mut planted = Vec::new();
    if let Some(path) = acts {
        planted.push(load_acts(path)?.pair()?);
    }
    planted.extend(doc.planted_pairs()?);
    let config = FuzzConfig { planted, ..FuzzConfig::new(trials, sampler, seed) };
    let report = fuzz_axiom(&prof, axiom, &config)?;
    let code = if report.violations.is_empty() { EXIT_HOLDS } else { EXIT_FAILS };
    let human = human_fuzz(&report);
    finish(format, &report, human, code)
}

fn cmd_plot_data(profile: &Path, acts: &Path, grid: usize, precision: usize, to_file: bool) -> Result<Outcome> {
    let (_, prof) = load_profile(profile)?;
    let acts_doc = load_acts(acts)?;
    if prof.states != 2 {
        return Err(Error::Precondition(format!("plot data needs two states, the profile has {}", prof.states)));
    }
    if grid < 2 {
        return Err(Error::InvalidParams("--grid needs at least two points".into()));
    }
    let csv = plot_csv(&prof, &acts_doc.acts, grid, precision)?;
    let rows = csv.lines().count() - 1;
    let text = if to_file { format!("wrote {rows} rows\n") } else { csv.clone() };
    Ok(Outcome { text, file: Some(csv), code: EXIT_HOLDS })
}

fn csv_safe(name: &str) -> String {
    name.chars().map(|c| if matches!(c, ',' | ';' | '"' | '\n') { '_' } else { c }).collect()
}

/// One row per grid point and per belief-set endpoint; the `endpoint` column
/// names the parties whose belief set ends there.
pub fn plot_csv(prof: &Profile, acts: &[NamedAct], grid: usize, precision: usize) -> Result<String> {
    let mut parties: Vec<Party> = (0..prof.n()).map(Party::Agent).collect();
    if prof.society.is_some() {
        parties.push(Party::Society);
    }
    let parsed: Vec<Act> = acts.iter().map(NamedAct::to_act).collect::<Result<_>>()?;
    for act in &parsed {
        if act.states() != prof.states || act.outcome_dim() != prof.outcome_dim {
            return Err(Error::DimensionMismatch { expected: prof.outcome_dim, found: act.outcome_dim() });
        }
    }

    let mut rows: BTreeMap<Rational, Vec<String>> = BTreeMap::new();
    let last = Rational::from_integer((grid - 1).into());
    for k in 0..grid {
        rows.entry(Rational::from_integer(k.into()) / &last).or_default();
    }
    for &who in &parties {
        let name = csv_safe(&prof.display_name(who));
        let agent = prof.party(who)?;
        let mut ends: Vec<&Rational> = agent.beliefs.vertices().iter().map(|v| &v[0]).collect();
        ends.dedup();
        for p_a in ends {
            let marks = rows.entry(p_a.clone()).or_default();
            if !marks.contains(&name) {
                marks.push(name.clone());
            }
        }
    }

    let mut header = vec!["p_A".to_string(), "endpoint".to_string()];
    for (a, named) in acts.iter().enumerate() {
        for &who in &parties {
            header.push(format!("{}:{}", csv_safe(&named.label(a)), csv_safe(&prof.display_name(who))));
        }
    }
    let mut csv = header.join(",") + "\n";
    for (p_a, marks) in &rows {
        let prior = Vector(vec![p_a.clone(), Rational::one() - p_a]);
        let mut cells = vec![format_decimal(p_a, precision), marks.join(" ")];
        for act in &parsed {
            for &who in &parties {
                cells.push(format_decimal(&eu(&prof.party(who)?.utility, &prior, act), precision));
            }
        }
        csv += &cells.join(",");
        csv.push('\n');
    }
    Ok(csv)
}

/// Finite decimals print as decimals, everything else as `p/q`.
fn show(r: &Rational) -> String {
    let mut den = r.denom().clone();
    let mut places = 0;
    let (two, five) = (num_bigint::BigInt::from(2), num_bigint::BigInt::from(5));
    while den.is_even() {
        den /= &two;
        places += 1;
    }
    let mut fives = 0;
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if den.is_one() {
        format_decimal(r, places.max(fives))
    } else {
        format_rational(r)
    }
}

fn show_vector(v: &Vector) -> String {
    format!("({})", v.iter().map(show).collect::<Vec<_>>().join(", "))
}

fn show_act(act: &Act) -> String {
    format!("[{}]", act.rows().iter().map(show_vector).collect::<Vec<_>>().join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn human_verdict(prof: &Profile, v: &AxiomVerdict) -> String {
    let mut s = format!(
        "{}: premise {}, conclusion {}{}\n",
        v.axiom,
        yes_no(v.premise_holds),
        yes_no(v.conclusion_holds),
        if v.violation { " -> VIOLATION" } else { "" }
    );
    if let Some(ntd) = v.no_taste_disagreement {
        s += &format!("  no taste disagreement: {}\n", if ntd { "yes" } else { "no" });
    }
    for c in &v.certificates {
        s += &format!(
            "  {} rates g above f by {} under prior {} of {}\n",
            prof.display_name(c.utility_of),
            show(&c.margin),
            show_vector(&c.prior),
            prof.display_name(c.prior_of)
        );
    }
    s
}

fn belief_name(prof: &Profile, within: BeliefRef) -> String {
    match within {
        BeliefRef::Agent(i) => format!("the beliefs of {}", prof.display_name(Party::Agent(i))),
        BeliefRef::Society => "P0".to_string(),
        BeliefRef::Pooled => "the hull of all agents' beliefs".to_string(),
    }
}

fn status_name(status: Status) -> &'static str {
    match status {
        Status::Holds => "holds",
        Status::Fails => "fails",
        Status::PreconditionUnmet => "precondition unmet",
    }
}

fn human_report(prof: &Profile, r: &ConditionReport) -> String {
    let mut s = format!("{}: {}\n", r.condition, status_name(r.status));
    if let Some(dec) = &r.decomposition {
        s += &format!("  decomposition alpha {} beta {}\n", show_vector(&Vector(dec.alpha.0.clone())), show(&dec.beta));
    }
    for e in &r.evidence {
        match e {
            Evidence::Member { point, within, .. } => {
                s += &format!("  {} lies in {}\n", show_vector(point), belief_name(prof, *within));
            }
            Evidence::ComboMeets { combo, .. } => {
                let pts: Vec<String> = combo.points.iter().map(show_vector).collect();
                s += &format!("  combo ({}) meets P0\n", pts.join(", "));
            }
        }
    }
    match &r.failure {
        None => {}
        Some(Failure::NoDecomposition) => s += "  no utilitarian decomposition of the social utility\n",
        Some(Failure::NotMember { point, within, hyperplane }) => {
            s += &format!(
                "  {} lies outside {}: separated by {}·p = {}\n",
                show_vector(point),
                belief_name(prof, *within),
                show_vector(&hyperplane.normal),
                show(&hyperplane.threshold)
            );
        }
        Some(Failure::ComboMisses { combo, hyperplane }) => {
            let pts: Vec<String> = combo.points.iter().map(show_vector).collect();
            s += &format!(
                "  failing combo ({}) misses P0: separated by {}·p = {}\n",
                pts.join(", "),
                show_vector(&hyperplane.normal),
                show(&hyperplane.threshold)
            );
        }
        Some(Failure::NoClause { support }) => {
            let names: Vec<String> = support.iter().map(|&i| prof.display_name(Party::Agent(i))).collect();
            s += &format!("  weighted agents {} share no singleton prior and none is a dictator\n", names.join(", "));
        }
    }
    for part in &r.parts {
        s += &format!("  part {}: {}\n", part.part, status_name(part.status));
    }
    for note in &r.notes {
        s += &format!("  note: {note}\n");
    }
    s
}

fn human_witness(prof: &Profile, c: &WitnessCertificate) -> String {
    let mut s = format!("{} witness against {}\n", c.kind.name(), c.axiom);
    s += &format!("  f = {}\n  x = {}\n", show_act(&c.act_f), show_act(&c.act_x));
    let p = &c.params;
    for (name, value) in [("epsilon", &p.epsilon), ("nu", &p.nu), ("b", &p.b), ("beta", &p.beta)] {
        if let Some(v) = value {
            s += &format!("  {name} = {}\n", show(v));
        }
    }
    if let Some(h) = &c.hyperplane {
        s += &format!("  hyperplane {}·p = {}\n", show_vector(&h.normal), show(&h.threshold));
    }
    for m in &c.per_agent {
        s += &format!(
            "  {} prefers f to x by {} under {}\n",
            prof.display_name(m.party),
            show(&m.margin),
            show_vector(&m.prior)
        );
    }
    s += &format!(
        "  society prefers x to f by at least {} (tight at {})\n",
        show(&c.society_margin),
        show_vector(&c.society_prior)
    );
    s
}

fn human_fuzz(r: &FuzzReport) -> String {
    let mut s = format!(
        "{}: {} trials, {} premise hits, {} violations\n  digest {}\n",
        r.axiom,
        r.trials,
        r.premise_hits,
        r.violations.len(),
        r.digest
    );
    if let Some(v) = r.violations.first() {
        s += &format!("  first violation at trial {}: f = {}, g = {}\n", v.trial, show_act(&v.f), show_act(&v.g));
    }
    for w in &r.warnings {
        s += &format!("  warning: {w}\n");
    }
    s
}
