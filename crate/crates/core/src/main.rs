//! Command-line front end: compute F/G elements, run verification suites,
//! benchmark symbolic against numeric evaluation, list standard tableaux.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 violated mathematical invariant (e.g. an unexpected pole).

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

use fusionq::arith::{QPool, DEFAULT_SEED};
use fusionq::cache::{unix_timestamp, Cache, CacheEntry, CacheKey};
use fusionq::error::Error;
use fusionq::fusion::{
    evaluate_f, evaluate_f_numeric, evaluate_g, evaluate_g_numeric, FusionSpec,
};
use fusionq::jsonio::{fusion_result_to_json, to_canonical_json, FusionResultJson};
use fusionq::tableaux::{Partition, StandardTableau, Variant};
use fusionq::verify::{all_pass, run_suites, CheckReport, Mode, Suite, VerifyOptions};

#[derive(Parser)]
#[command(name = "fusionq", version, about = "Fusion-procedure elements of the finite Hecke algebra, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute F_Λ or G_Λ for a shape and tableau and emit its JSON.
    Compute {
        /// Partition as comma-separated parts, e.g. "3,3,2".
        #[arg(long)]
        shape: String,
        /// Tableau selector: "hook" or an index into list-tableaux order.
        #[arg(long, default_value = "hook")]
        tableau: String,
        /// Subspace variant: hook, row or column.
        #[arg(long, default_value = "hook")]
        variant: String,
        /// Element kind: F or G.
        #[arg(long, default_value = "F")]
        kind: String,
        /// Evaluation mode: symbolic or numeric.
        #[arg(long, default_value = "symbolic")]
        mode: String,
        /// Seed for the numeric-q pool.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write the result JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property suites and write a JSON report.
    Verify {
        /// "all" or a comma-separated list of suite names.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest n swept by the suites.
        #[arg(long = "max-n", default_value_t = 4)]
        max_n: usize,
        /// Evaluation mode for the element-level suites.
        #[arg(long, default_value = "symbolic")]
        mode: String,
        /// Report file path.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Seed for randomized checks and the numeric-q pool.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Time symbolic vs numeric evaluation of F for the hook tableau.
    Bench {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 3)]
        repetitions: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print the standard tableaux of a shape with their indices.
    ListTableaux {
        #[arg(long)]
        shape: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    std::process::exit(code);
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::InvalidPartition(_)
        | Error::InvalidTableau(_)
        | Error::InvalidPermutation(_)
        | Error::InvalidDirection(_)
        | Error::TableauIndexOutOfRange { .. }
        | Error::Parse(_)
        | Error::Io(_) => 2,
        _ => 3,
    }
}

fn run(cli: Cli) -> fusionq::Result<i32> {
    match cli.command {
        Command::Compute {
            shape,
            tableau,
            variant,
            kind,
            mode,
            seed,
            out,
        } => cmd_compute(&shape, &tableau, &variant, &kind, &mode, seed, out),
        Command::Verify {
            suite,
            max_n,
            mode,
            report,
            seed,
        } => cmd_verify(&suite, max_n, &mode, report, seed),
        Command::Bench {
            shape,
            repetitions,
            seed,
        } => cmd_bench(&shape, repetitions, seed),
        Command::ListTableaux { shape } => cmd_list_tableaux(&shape),
    }
}

fn cmd_compute(
    shape: &str,
    tableau: &str,
    variant: &str,
    kind: &str,
    mode: &str,
    seed: u64,
    out: Option<PathBuf>,
) -> fusionq::Result<i32> {
    let shape = Partition::parse(shape)?;
    let tableau = StandardTableau::select(&shape, tableau)?;
    let variant: Variant = variant.parse()?;
    let mode: Mode = mode.parse()?;
    if kind != "F" && kind != "G" {
        return Err(Error::Parse(format!("kind must be F or G, got {kind:?}")));
    }
    if kind == "G" && variant != Variant::Hook {
        return Err(Error::Parse(
            "G elements are defined on the hook subspace; use --variant hook".into(),
        ));
    }
    let pool = QPool::seeded(seed);
    let cache = Cache::from_env();

    // probe the cache under the first pool candidate
    let probe_key = CacheKey {
        shape: shape.parts().to_vec(),
        tableau: tableau.rows().to_vec(),
        variant: variant.name().to_string(),
        kind: kind.to_string(),
        mode: match mode {
            Mode::Symbolic => "symbolic".into(),
            Mode::Numeric => "numeric".into(),
        },
        q0: match mode {
            Mode::Symbolic => None,
            Mode::Numeric => Some(pool.first().to_string()),
        },
    };
    let result_json: FusionResultJson = match cache.load(&probe_key)? {
        Some(entry) => entry.result,
        None => {
            let spec = FusionSpec::with_default_direction(tableau, variant);
            let json = match (kind, mode) {
                ("F", Mode::Symbolic) => fusion_result_to_json(&evaluate_f(&spec)?),
                ("F", Mode::Numeric) => fusion_result_to_json(&evaluate_f_numeric(&spec, &pool)?),
                ("G", Mode::Symbolic) => fusion_result_to_json(&evaluate_g(spec.tableau())?),
                ("G", Mode::Numeric) => {
                    fusion_result_to_json(&evaluate_g_numeric(spec.tableau(), &pool)?)
                }
                _ => unreachable!(),
            };
            let entry = CacheEntry {
                created: unix_timestamp(),
                key: CacheKey::for_result(&json),
                result: json.clone(),
            };
            cache.store(&entry)?;
            json
        }
    };
    let text = to_canonical_json(&result_json)?;
    match out {
        Some(path) => std::fs::write(path, text.as_bytes())?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn parse_suites(s: &str) -> fusionq::Result<Vec<Suite>> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    s.split(',').map(|name| name.trim().parse()).collect()
}

fn cmd_verify(
    suite: &str,
    max_n: usize,
    mode: &str,
    report: Option<PathBuf>,
    seed: u64,
) -> fusionq::Result<i32> {
    let suites = parse_suites(suite)?;
    let opts = VerifyOptions {
        max_n,
        mode: mode.parse()?,
        seed,
    };
    let reports = run_suites(&suites, &opts)?;
    print_summary(&reports);
    if let Some(path) = report {
        std::fs::write(path, to_canonical_json(&reports)?.as_bytes())?;
    }
    Ok(if all_pass(&reports) { 0 } else { 1 })
}

fn print_summary(reports: &[CheckReport]) {
    let mut checks: Vec<&str> = reports.iter().map(|r| r.check.as_str()).collect();
    checks.dedup();
    for check in checks {
        let group: Vec<&CheckReport> = reports.iter().filter(|r| r.check == check).collect();
        let passed = group.iter().filter(|r| r.pass).count();
        let status = if passed == group.len() { "PASS" } else { "FAIL" };
        println!("{status} {check}: {passed}/{} checks", group.len());
        for r in group.iter().filter(|r| !r.pass) {
            let shape = r
                .shape
                .as_ref()
                .map(|s| {
                    s.iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .unwrap_or_default();
            println!("  failed: {} {} {}", check, shape, r.detail);
        }
    }
}

fn cmd_bench(shape: &str, repetitions: usize, seed: u64) -> fusionq::Result<i32> {
    let shape = Partition::parse(shape)?;
    let n = shape.n();
    let tableau = StandardTableau::hook_tableau(&shape);
    let spec = FusionSpec::with_default_direction(tableau, Variant::Hook);
    let pool = QPool::seeded(seed);
    let reps = repetitions.max(1);

    let mut symbolic = None;
    if n <= 5 {
        let mut best = f64::INFINITY;
        let mut element = None;
        for _ in 0..reps {
            let start = Instant::now();
            let r = evaluate_f(&spec)?;
            best = best.min(start.elapsed().as_secs_f64());
            element = Some(r.element);
        }
        symbolic = Some(element.unwrap());
        println!("symbolic  shape {shape}  best of {reps}: {best:.3}s");
    } else {
        println!("symbolic  shape {shape}  skipped: n = {n} > 5 (size gate)");
    }

    let mut best = f64::INFINITY;
    let mut numeric = None;
    for _ in 0..reps {
        let start = Instant::now();
        let r = evaluate_f_numeric(&spec, &pool)?;
        best = best.min(start.elapsed().as_secs_f64());
        numeric = Some(r);
    }
    let numeric = numeric.unwrap();
    println!(
        "numeric   shape {shape}  best of {reps}: {best:.3}s (q0 = {})",
        numeric.q0.clone().unwrap()
    );

    if let Some(sym_element) = symbolic {
        let q0 = numeric.q0.as_ref().unwrap();
        let evaluated = sym_element.map_coeffs(|c| c.eval(q0))?;
        let equal = evaluated == numeric.element;
        println!("results equal: {equal}");
        if !equal {
            return Err(Error::InvariantViolated(
                "symbolic and numeric evaluations disagree".into(),
            ));
        }
    }
    Ok(0)
}

fn cmd_list_tableaux(shape: &str) -> fusionq::Result<i32> {
    let shape = Partition::parse(shape)?;
    for (index, t) in StandardTableau::standard_tableaux(&shape).iter().enumerate() {
        let value = serde_json::json!({ "index": index, "rows": t.rows() });
        print!("{}", to_canonical_json(&value)?);
    }
    Ok(0)
}
