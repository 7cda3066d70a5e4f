use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cogroup::arith::prime_divisors;
use cogroup::checks::theorem_verdict;
use cogroup::corpus::resolve_corpus;
use cogroup::group::DEFAULT_MAX_ORDER;
use cogroup::spec::parse_spec_with;
use cogroup::survey::{hunt_to_path, survey_to_path, SurveyCheck, SurveyOptions};
use cogroup::{
    derived_series, fitting_subgroup, lower_central_series, lower_fitting_series, p_core, realize, Error,
    GroupAnalysis, GroupTable, Limits, SeriesReport, Theorem,
};

#[derive(Parser)]
#[command(
    name = "cogroup",
    version,
    about = "Coprime commutators and the lower Fitting series of finite groups"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Refuse to build groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Check associativity of table() inputs exhaustively at any size.
    #[arg(long, global = true)]
    strict_assoc: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Order, solubility, nilpotency, γ∞, Fitting subgroup and height.
    Info { spec: String },
    /// Term orders of the lower central, derived and lower Fitting series.
    Series {
        spec: String,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    /// Evaluate one nilpotency criterion and print the verdict as JSON.
    Check {
        spec: String,
        /// bw, bs, main or level:K
        #[arg(long)]
        theorem: Theorem,
    },
    /// Run checks over a corpus, writing JSON Lines.
    Survey {
        /// `builtin` or a corpus file.
        #[arg(long, default_value = "builtin")]
        corpus: String,
        /// Comma-separated checks, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Search a corpus for groups whose D_k is not nilpotent although the
    /// coprime product property holds on δ_k*-commutator powers.
    Hunt {
        #[arg(long)]
        level: usize,
        #[arg(long, default_value = "builtin")]
        corpus: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn group(spec: &str, limits: &Limits) -> Result<GroupTable, Error> {
    let parsed = parse_spec_with(spec, limits)?;
    realize(&parsed, limits)
}

fn orders(s: &SeriesReport) -> String {
    let mut text = s.orders().iter().map(|o| o.to_string()).collect::<Vec<_>>().join(", ");
    if !s.stabilized {
        text.push_str(", ...");
    }
    text
}

fn info(spec: &str, limits: &Limits) -> Result<i32, Error> {
    let g = group(spec, limits)?;
    let a = GroupAnalysis::new(&g);
    println!("group: {}", g.label());
    println!("order: {}", g.order());
    println!("soluble: {}", a.is_soluble());
    println!("nilpotent: {}", a.is_nilpotent());
    println!("gamma_inf order: {}", a.residual().order());
    println!("fitting subgroup order: {}", fitting_subgroup(&g)?.order());
    for p in prime_divisors(g.order()) {
        println!("O_{p} order: {}", p_core(&g, p)?.order());
    }
    println!("fitting height: {}", a.fitting_height()?);
    Ok(0)
}

fn series(spec: &str, max_k: usize, limits: &Limits) -> Result<i32, Error> {
    let g = group(spec, limits)?;
    println!("lower central: {}", orders(&lower_central_series(&g)));
    println!("derived: {}", orders(&derived_series(&g)));
    println!("lower fitting: {}", orders(&lower_fitting_series(&g, max_k)?));
    Ok(0)
}

fn check(spec: &str, theorem: Theorem, limits: &Limits) -> Result<i32, Error> {
    let g = group(spec, limits)?;
    let v = theorem_verdict(&GroupAnalysis::new(&g), theorem)?;
    println!("{}", serde_json::to_string_pretty(&v)?);
    Ok(if v.is_implementation_failure() {
        2
    } else if v.is_candidate_counterexample() {
        3
    } else {
        0
    })
}

fn run(cli: Cli) -> Result<i32, Error> {
    let limits = Limits {
        max_order: cli.global.max_order,
        strict_assoc: cli.global.strict_assoc,
    };
    match cli.command {
        Command::Info { spec } => info(&spec, &limits),
        Command::Series { spec, max_k } => series(&spec, max_k, &limits),
        Command::Check { spec, theorem } => check(&spec, theorem, &limits),
        Command::Survey {
            corpus,
            checks,
            jobs,
            out,
        } => {
            let opts = SurveyOptions {
                checks: SurveyCheck::parse_list(&checks)?,
                jobs,
                limits,
            };
            let corpus = resolve_corpus(&corpus, &opts.limits)?;
            let summary = survey_to_path(&corpus, &opts, &out)?;
            eprintln!(
                "{} groups, {} verdicts, {} sound, {} unsound on proved results, {} open-question candidates",
                summary.groups,
                summary.verdicts,
                summary.sound,
                summary.implementation_failures.len(),
                summary.candidates.len()
            );
            for (spec, name) in &summary.implementation_failures {
                eprintln!("UNSOUND {name}: {spec}");
            }
            for (spec, name) in &summary.candidates {
                eprintln!("CANDIDATE COUNTEREXAMPLE {name}: {spec}");
            }
            Ok(summary.exit_code())
        }
        Command::Hunt {
            level,
            corpus,
            jobs,
            out,
        } => {
            let corpus = resolve_corpus(&corpus, &limits)?;
            let report = hunt_to_path(level, &corpus, jobs, &limits, &out)?;
            eprintln!(
                "level {}: {} groups, hypothesis holds for {}, {} candidates",
                report.level,
                report.evaluated,
                report.hypothesis_holds,
                report.candidates.len()
            );
            for spec in &report.candidates {
                eprintln!("CANDIDATE COUNTEREXAMPLE: {spec}");
            }
            Ok(report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
