//! Command-line surface: single-weight classification, profile dumps, Kostant
//! summand tables, Weyl/Kostant-set dumps, and exhaustive sweeps.
//!
//! Exit codes: 0 success, 2 input error, 3 internal consistency failure.

use std::io::Write as _;
use std::process::ExitCode;

use boundary_weights::{
    classify_weight, closed_form_avoidance, cusp_restriction, decompositions,
    double_degeneration_profile, hb_cusp_profile, hodge_weight, klingen_profile,
    kostant_parallel_presentations, kostant_set, levi_weight, parallel_condition,
    profile_avoidance, siegel_profile, AvoidanceReport, AvoidedInterval, HighestWeight, Stratum,
    WeylElement, RHO,
};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "boundary-weights",
    version,
    about = "Boundary degeneration data for genus-2 Hilbert-Siegel varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the avoidance report for one weight (profile route, cross-checked
    /// against the closed form).
    Classify {
        /// Weight as inline JSON `{"k1":[...],"k2":[...],"c":N}` (c optional)
        /// or a path to a file holding it.
        #[arg(long)]
        lambda: String,
    },
    /// Emit degeneration profiles for one weight.
    Profile {
        #[arg(long)]
        lambda: String,
        /// Restrict to one stratum family; all four when omitted.
        #[arg(long)]
        stratum: Option<ProfileStratum>,
    },
    /// Emit, for each degree q and each q-admissible decomposition, the Levi
    /// character, Hodge weight, and kappa (or null).
    Kostant {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        stratum: StratumArg,
    },
    /// Emit the Kostant set of the chosen parabolic with lengths, inversion
    /// sets, and per-element dot-action tables.
    WeylDump {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        stratum: StratumArg,
    },
    /// Classify every dominant weight with entries bounded by k-max.
    Sweep {
        #[arg(long)]
        d: usize,
        #[arg(long = "k-max")]
        k_max: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Maximum number of weights the sweep may enumerate.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        /// Worker threads; 0 uses the rayon default.
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum StratumArg {
    Siegel,
    Klingen,
}

impl From<StratumArg> for Stratum {
    fn from(value: StratumArg) -> Stratum {
        match value {
            StratumArg::Siegel => Stratum::Siegel,
            StratumArg::Klingen => Stratum::Klingen,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum ProfileStratum {
    Siegel,
    Klingen,
    Cusp,
    Double,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.to_string(),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { lambda } => {
            let weight = load_weight(&lambda)?;
            let report = cross_checked_report(&weight)?;
            print_serialized(&report);
            Ok(())
        }
        Command::Profile { lambda, stratum } => {
            let weight = load_weight(&lambda)?;
            let value = match stratum {
                Some(ProfileStratum::Siegel) => {
                    serde_json::to_value(siegel_profile(&weight)).unwrap()
                }
                Some(ProfileStratum::Klingen) => {
                    serde_json::to_value(klingen_profile(&weight)).unwrap()
                }
                Some(ProfileStratum::Cusp) => {
                    serde_json::to_value(hb_cusp_profile(&cusp_restriction(&weight), weight.d()))
                        .unwrap()
                }
                Some(ProfileStratum::Double) => {
                    serde_json::to_value(double_degeneration_profile(&weight)).unwrap()
                }
                None => json!({
                    "siegel": siegel_profile(&weight),
                    "klingen": klingen_profile(&weight),
                    "cusp": hb_cusp_profile(&cusp_restriction(&weight), weight.d()),
                    "double": double_degeneration_profile(&weight),
                }),
            };
            print_json(&value);
            Ok(())
        }
        Command::Kostant { lambda, stratum } => {
            let weight = load_weight(&lambda)?;
            let stratum = Stratum::from(stratum);
            let mut rows = Vec::new();
            for q in 0..=3 * weight.d() as i64 {
                for psi in decompositions(weight.d(), q) {
                    let levi = levi_weight(&weight, &psi, stratum).expect("dimensions agree");
                    let kappa = parallel_condition(&weight, &psi, stratum);
                    rows.push(json!({
                        "q": q,
                        "psi": psi,
                        "levi": {"e1": levi.e1, "e2": levi.e2, "c": levi.c},
                        "hodgeWeight": hodge_weight(&weight, &psi, stratum).unwrap(),
                        "kappa": kappa,
                    }));
                }
            }
            print_json(&json!({
                "lambda": weight,
                "stratum": stratum.to_string(),
                "summands": rows,
            }));
            Ok(())
        }
        Command::WeylDump { d, stratum } => {
            if d == 0 {
                return Err(input_error("d must be at least 1"));
            }
            let stratum = Stratum::from(stratum);
            let set = kostant_set(d, stratum).map_err(input_error)?;
            let elements: Vec<_> = set.iter().map(weyl_element_json).collect();
            print_json(&json!({
                "d": d,
                "stratum": stratum.to_string(),
                "elements": elements,
            }));
            Ok(())
        }
        Command::Sweep {
            d,
            k_max,
            format,
            cap,
            workers,
        } => {
            if d == 0 {
                return Err(input_error("d must be at least 1"));
            }
            if k_max < 0 {
                return Err(input_error("k-max must be non-negative"));
            }
            sweep(SweepSpec { d, k_max, format }, cap, workers)
        }
    }
}

fn load_weight(spec: &str) -> Result<HighestWeight, Failure> {
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        std::fs::read_to_string(spec)
            .map_err(|e| input_error(format!("cannot read weight file `{spec}`: {e}")))?
    };
    serde_json::from_str(&text).map_err(input_error)
}

fn cross_checked_report(weight: &HighestWeight) -> Result<AvoidanceReport, Failure> {
    let via_profiles = profile_avoidance(weight);
    let closed_form = closed_form_avoidance(weight);
    if via_profiles != closed_form {
        return Err(Failure {
            code: EXIT_INTERNAL,
            message: format!(
                "internal cross-check mismatch between avoidance routes for {}",
                serde_json::to_string(weight).unwrap()
            ),
        });
    }
    Ok(via_profiles)
}

fn weyl_element_json(w: &WeylElement) -> serde_json::Value {
    let factors: Vec<_> = w
        .factors()
        .iter()
        .map(|f| json!({"map": f.describe(), "length": f.length()}))
        .collect();
    let inversions: Vec<_> = w
        .inversion_set()
        .iter()
        .map(|r| json!({"embedding": r.embedding, "coords": [r.coords.0, r.coords.1]}))
        .collect();
    // dot-action table per embedding: e_i = row_i . (k1, k2) + offset_i
    let dot: Vec<_> = w
        .factors()
        .iter()
        .map(|f| {
            let col1 = f.apply((1, 0));
            let col2 = f.apply((0, 1));
            let rho_image = f.apply(RHO);
            json!({
                "e1": [col1.0, col2.0, rho_image.0 - RHO.0],
                "e2": [col1.1, col2.1, rho_image.1 - RHO.1],
            })
        })
        .collect();
    json!({
        "factors": factors,
        "length": w.length(),
        "inversions": inversions,
        "dotAction": dot,
    })
}

/// An exhaustive sweep over all dominant weights with per-entry bound
/// `0 <= k2 <= k1 <= k_max`; the grid has `((k_max+1)(k_max+2)/2)^d` weights.
struct SweepSpec {
    d: usize,
    k_max: i64,
    format: Format,
}

struct SweepRow {
    k1: Vec<i64>,
    k2: Vec<i64>,
    corank: u8,
    completely_irregular: bool,
    kostant_parallel: bool,
    beta: BetaCell,
    weights01_present: bool,
}

enum BetaCell {
    Zero,
    None,
    Value(i64),
}

impl BetaCell {
    fn as_string(&self) -> String {
        match self {
            BetaCell::Zero => "ZERO".to_string(),
            BetaCell::None => "NONE".to_string(),
            BetaCell::Value(v) => v.to_string(),
        }
    }

    fn as_json(&self) -> serde_json::Value {
        match self {
            BetaCell::Zero => json!("ZERO"),
            BetaCell::None => json!("NONE"),
            BetaCell::Value(v) => json!(v),
        }
    }
}

fn sweep(spec: SweepSpec, cap: u64, workers: usize) -> Result<(), Failure> {
    let SweepSpec { d, k_max, format } = spec;
    let pairs: Vec<(i64, i64)> = (0..=k_max)
        .flat_map(|k1| (0..=k1).map(move |k2| (k1, k2)))
        .collect();
    let total = (pairs.len() as u64).checked_pow(d as u32);
    match total {
        Some(total) if total <= cap => {}
        _ => {
            return Err(input_error(format!(
                "sweep of {} weights exceeds cap {cap}",
                total.map_or_else(|| "overflowing".to_string(), |t| t.to_string()),
            )))
        }
    }
    let total = total.unwrap() as usize;

    let classify = |index: usize| -> SweepRow {
        let mut rest = index;
        let mut choice = vec![0usize; d];
        for s in (0..d).rev() {
            choice[s] = rest % pairs.len();
            rest /= pairs.len();
        }
        let k1: Vec<i64> = choice.iter().map(|&i| pairs[i].0).collect();
        let k2: Vec<i64> = choice.iter().map(|&i| pairs[i].1).collect();
        let weight = HighestWeight::with_default_c(k1.clone(), k2.clone())
            .expect("sweep grid weights are dominant");
        let report = closed_form_avoidance(&weight);
        debug_assert_eq!(report, profile_avoidance(&weight));
        let classification = classify_weight(&weight);
        let beta = if report.boundary_zero {
            BetaCell::Zero
        } else {
            match report.avoided_interval {
                AvoidedInterval::Interval { hi, .. } => BetaCell::Value(hi),
                _ => BetaCell::None,
            }
        };
        SweepRow {
            k1,
            k2,
            corank: classification.corank,
            completely_irregular: classification.completely_irregular,
            kostant_parallel: !kostant_parallel_presentations(&weight).is_empty(),
            beta,
            weights01_present: report.weights01_present,
        }
    };

    // Rows are computed in parallel but collected in grid order, so output is
    // identical for any worker count.
    let rows: Vec<SweepRow> = if workers == 0 {
        (0..total).into_par_iter().map(classify).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| input_error(format!("cannot build worker pool: {e}")))?;
        pool.install(|| (0..total).into_par_iter().map(classify).collect())
    };

    let stdout = std::io::stdout();
    match format {
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(stdout.lock());
            writer
                .write_record([
                    "k1",
                    "k2",
                    "corank",
                    "completelyIrregular",
                    "kostantParallel",
                    "beta",
                    "weights01Present",
                ])
                .and_then(|()| {
                    for row in &rows {
                        writer.write_record([
                            serde_json::to_string(&row.k1).unwrap(),
                            serde_json::to_string(&row.k2).unwrap(),
                            row.corank.to_string(),
                            row.completely_irregular.to_string(),
                            row.kostant_parallel.to_string(),
                            row.beta.as_string(),
                            row.weights01_present.to_string(),
                        ])?;
                    }
                    writer.flush().map_err(csv::Error::from)
                })
                .map_err(|e| input_error(format!("cannot write csv: {e}")))?;
        }
        Format::Json => {
            let values: Vec<_> = rows
                .iter()
                .map(|row| {
                    json!({
                        "k1": row.k1,
                        "k2": row.k2,
                        "corank": row.corank,
                        "completelyIrregular": row.completely_irregular,
                        "kostantParallel": row.kostant_parallel,
                        "beta": row.beta.as_json(),
                        "weights01Present": row.weights01_present,
                    })
                })
                .collect();
            print_json(&serde_json::Value::Array(values));
        }
    }
    Ok(())
}

fn print_json(value: &serde_json::Value) {
    print_serialized(value);
}

fn print_serialized<T: serde::Serialize>(value: &T) {
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = serde_json::to_writer_pretty(&mut stdout, value) {
        if e.io_error_kind() == Some(std::io::ErrorKind::BrokenPipe) {
            std::process::exit(0);
        }
        panic!("stdout write: {e}");
    }
    if let Err(e) = stdout.write_all(b"\n") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("stdout write: {e}");
    }
}
