//! Command-line front door: parse matrix/algebra files, run checks and
//! constructions, emit and verify JSON certificates.
//!
//! Every command prints a single JSON document on standard output and
//! diagnostics on standard error. Exit status: 0 when the property holds or
//! the certificate is valid, 1 when refuted or not found, 2 on usage or
//! resource errors. Identical inputs (and seeds) produce byte-identical
//! reports.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use incline_core::json as wire;
use incline_core::{
    brute_force_cp_rank, check_axioms, cp_rank_upper_bound, djl_decompose, factor_3x3, is_cp,
    lu_factor, pairwise_decompose, ul_factor, verify_decomposition, verify_triangular, ApmEntry,
    CpVerdict, Error, ErrorClass, FactorOutcome, LawMode, Matrix, SearchOptions, SearchOutcome,
    TriangularCertificate,
};

#[derive(Parser)]
#[command(
    name = "incline",
    version,
    about = "Exact matrix algebra over incline semirings: complete positivity, CP decompositions, triangular factorizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Djl,
    Pairwise,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Ul,
    Lu,
    Auto,
}

#[derive(Subcommand)]
enum Command {
    /// Check the incline laws of an algebra: exhaustively when the carrier
    /// is finite, on seeded samples otherwise
    Axioms {
        /// Algebra fragment file, or a matrix file whose algebra is used
        input: PathBuf,
        /// Sample count for infinite carriers (default 10000)
        #[arg(long)]
        samples: Option<u64>,
        /// Seed for sampled checking (required for infinite carriers)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Test complete positivity of a symmetric matrix
    Check {
        /// Matrix file
        input: PathBuf,
    },
    /// Construct a CP decomposition certificate
    Decompose {
        /// Matrix file
        input: PathBuf,
        /// Construction to use
        #[arg(long, value_enum)]
        method: Method,
    },
    /// Construct a triangular factorization certificate
    Factor {
        /// Matrix file
        input: PathBuf,
        /// Direction, or auto (3x3 dichotomy for n = 3, else LU then UL)
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Bound the CP-rank, or measure it exactly by exhaustive search
    Cprank {
        /// Matrix file
        input: PathBuf,
        /// Run the exhaustive search instead of reporting the bound
        #[arg(long)]
        exact: bool,
        /// Largest factor width to try (default: the rank bound)
        #[arg(long)]
        max_width: Option<usize>,
        /// Node budget for the search
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Verify a certificate (decomposition or triangular) against a matrix
    Verify {
        /// Matrix file
        input: PathBuf,
        /// Certificate file to check
        #[arg(long)]
        certificate: PathBuf,
    },
}

/// Report plus exit status of a successfully executed command.
struct Report {
    body: Json,
    refuted: bool,
}

impl Report {
    fn holds(body: Json) -> Self {
        Report {
            body,
            refuted: false,
        }
    }

    fn refuted(body: Json) -> Self {
        Report {
            body,
            refuted: true,
        }
    }
}

fn read_json(path: &Path) -> Result<Json, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        reason: format!("malformed JSON: {e}"),
    })
}

fn load_matrix(path: &Path) -> Result<Matrix, Error> {
    wire::parse_matrix_json(&read_json(path)?)
}

fn witness_json(i: usize, j: usize) -> Json {
    json!({"i": i, "j": j})
}

fn apm_json(a: &Matrix, e: &ApmEntry) -> Json {
    let alg = a.algebra();
    json!({
        "alpha": e.alpha.indices(),
        "beta": e.beta.indices(),
        "det_plus": alg.format_value(&e.det.det_plus),
        "det_minus": alg.format_value(&e.det.det_minus),
    })
}

fn run_axioms(input: &Path, samples: Option<u64>, seed: Option<u64>) -> Result<Report, Error> {
    let doc = read_json(input)?;
    let alg = match doc.get("incline") {
        Some(fragment) => wire::parse_algebra(fragment)?,
        None => wire::parse_algebra(&doc)?,
    };
    let mode = if alg.is_finite() {
        LawMode::Exhaustive
    } else {
        let seed = seed.ok_or(Error::SeedRequired)?;
        LawMode::Sampled {
            samples: samples.unwrap_or(10_000),
            seed,
        }
    };
    let report = check_axioms(&alg, mode)?;
    let all_pass = report.all_pass();
    let mut body = wire::law_report_to_json(&report);
    let obj = body.as_object_mut().unwrap();
    obj.insert("command".into(), json!("axioms"));
    obj.insert(
        "claims".into(),
        json!(["incline-axioms", "normal-incline-laws"]),
    );
    if all_pass {
        Ok(Report::holds(body))
    } else {
        Ok(Report::refuted(body))
    }
}

fn run_check(input: &Path) -> Result<Report, Error> {
    let a = load_matrix(input)?;
    let verdict = is_cp(&a)?;
    let dominant = a.is_diagonally_dominant()?;
    let (cp, witness) = match verdict {
        CpVerdict::Cp => (true, Json::Null),
        CpVerdict::NotCp { i, j } => (false, witness_json(i, j)),
    };
    let body = json!({
        "command": "check",
        "carrier": a.algebra().kind_name(),
        "n": a.rows(),
        "cp": cp,
        "witness": witness,
        "diagonally_dominant": dominant,
        "claims": ["cp-principal-2x2-characterization"],
    });
    if cp {
        Ok(Report::holds(body))
    } else {
        Ok(Report::refuted(body))
    }
}

fn not_cp_report(command: &str, a: &Matrix, i: usize, j: usize) -> Report {
    Report::refuted(json!({
        "command": command,
        "carrier": a.algebra().kind_name(),
        "n": a.rows(),
        "cp": false,
        "witness": witness_json(i, j),
        "claims": ["cp-principal-2x2-characterization"],
    }))
}

fn run_decompose(input: &Path, method: Method) -> Result<Report, Error> {
    let a = load_matrix(input)?;
    if let CpVerdict::NotCp { i, j } = is_cp(&a)? {
        return Ok(not_cp_report("decompose", &a, i, j));
    }
    let (dec, claims) = match method {
        Method::Djl => (djl_decompose(&a)?, json!(["cp-rank-support3-bound"])),
        Method::Pairwise => (pairwise_decompose(&a)?, json!(["cp-pairwise-construction"])),
    };
    debug_assert!(verify_decomposition(&a, &dec)?);
    let body = json!({
        "command": "decompose",
        "method": match method { Method::Djl => "djl", Method::Pairwise => "pairwise" },
        "carrier": a.algebra().kind_name(),
        "n": a.rows(),
        "factor_count": dec.factor_count(),
        "max_support": dec.max_support(),
        "bound": cp_rank_upper_bound(a.rows()),
        "certificate": wire::decomposition_to_json(&dec),
        "claims": claims,
    });
    Ok(Report::holds(body))
}

fn factor_report(a: &Matrix, mode_str: &str, cert: &TriangularCertificate, claims: Json) -> Json {
    json!({
        "command": "factor",
        "mode": mode_str,
        "carrier": a.algebra().kind_name(),
        "n": a.rows(),
        "outcome": "factored",
        "certificate": wire::triangular_to_json(cert),
        "claims": claims,
    })
}

fn run_factor(input: &Path, mode: Mode) -> Result<Report, Error> {
    let a = load_matrix(input)?;
    if let CpVerdict::NotCp { i, j } = is_cp(&a)? {
        return Ok(not_cp_report("factor", &a, i, j));
    }
    match mode {
        Mode::Ul | Mode::Lu => {
            let (outcome, mode_str, claim) = match mode {
                Mode::Ul => (ul_factor(&a)?, "ul", "left-apm-ul-factorization"),
                _ => (lu_factor(&a)?, "lu", "right-apm-lu-factorization"),
            };
            match outcome {
                FactorOutcome::Factored(cert) => Ok(Report::holds(factor_report(
                    &a,
                    mode_str,
                    &cert,
                    json!([claim]),
                ))),
                FactorOutcome::Refused(v) => Ok(Report::refuted(json!({
                    "command": "factor",
                    "mode": mode_str,
                    "carrier": a.algebra().kind_name(),
                    "n": a.rows(),
                    "outcome": "refused",
                    "refusals": [apm_json(&a, &v)],
                    "claims": [claim],
                }))),
            }
        }
        Mode::Auto => {
            if a.rows() == 3 {
                let cert = factor_3x3(&a)?;
                let claims = json!([
                    "three-by-three-dichotomy",
                    match cert.mode {
                        incline_core::TriMode::Ul => "left-apm-ul-factorization",
                        incline_core::TriMode::Lu => "right-apm-lu-factorization",
                    }
                ]);
                return Ok(Report::holds(factor_report(&a, "auto", &cert, claims)));
            }
            match lu_factor(&a)? {
                FactorOutcome::Factored(cert) => Ok(Report::holds(factor_report(
                    &a,
                    "auto",
                    &cert,
                    json!(["right-apm-lu-factorization"]),
                ))),
                FactorOutcome::Refused(lu_refusal) => match ul_factor(&a)? {
                    FactorOutcome::Factored(cert) => Ok(Report::holds(factor_report(
                        &a,
                        "auto",
                        &cert,
                        json!(["left-apm-ul-factorization"]),
                    ))),
                    FactorOutcome::Refused(ul_refusal) => Ok(Report::refuted(json!({
                        "command": "factor",
                        "mode": "auto",
                        "carrier": a.algebra().kind_name(),
                        "n": a.rows(),
                        "outcome": "refused",
                        "refusals": [apm_json(&a, &lu_refusal), apm_json(&a, &ul_refusal)],
                        "claims": ["right-apm-lu-factorization", "left-apm-ul-factorization"],
                    }))),
                },
            }
        }
    }
}

fn run_cprank(
    input: &Path,
    exact: bool,
    max_width: Option<usize>,
    budget: Option<u64>,
) -> Result<Report, Error> {
    let a = load_matrix(input)?;
    let n = a.rows();
    if !exact {
        let mut body = json!({
            "command": "cprank",
            "exact": false,
            "carrier": a.algebra().kind_name(),
            "n": n,
            "bound": cp_rank_upper_bound(n),
            "claims": ["cp-rank-support3-bound"],
        });
        if a.algebra().totally_ordered() && is_cp(&a)?.is_cp() {
            let dec = djl_decompose(&a)?;
            body.as_object_mut().unwrap().insert(
                "construction_factor_count".into(),
                json!(dec.factor_count()),
            );
        }
        return Ok(Report::holds(body));
    }
    let mut opts = SearchOptions::default();
    if let Some(b) = budget {
        opts.node_budget = b;
    }
    let width = max_width.unwrap_or_else(|| cp_rank_upper_bound(n).min(opts.max_width));
    opts.max_width = opts.max_width.max(width);
    let transcript = brute_force_cp_rank(&a, width, &opts)?;
    let body = json!({
        "command": "cprank",
        "exact": true,
        "carrier": a.algebra().kind_name(),
        "n": n,
        "max_width": width,
        "rank": transcript.found_width(),
        "transcript": wire::transcript_to_json(&transcript),
        "claims": ["cp-rank-minimum-search"],
    });
    match transcript.outcome {
        SearchOutcome::Found { .. } => Ok(Report::holds(body)),
        SearchOutcome::Exhausted => Ok(Report::refuted(body)),
        SearchOutcome::BudgetExceeded => {
            // Print the partial transcript, then fail as a resource error.
            emit(&body);
            Err(Error::SearchLimit(format!(
                "node budget {} exhausted",
                opts.node_budget
            )))
        }
    }
}

fn run_verify(input: &Path, certificate: &Path) -> Result<Report, Error> {
    let a = load_matrix(input)?;
    let cert_json = read_json(certificate)?;
    let kind = wire::certificate_kind(&cert_json)?;
    let valid = match kind {
        "decomposition" => {
            let dec = wire::parse_decomposition_json(a.algebra(), &cert_json)?;
            verify_decomposition(&a, &dec)?
        }
        _ => {
            let cert = wire::parse_triangular_json(a.algebra(), &cert_json)?;
            verify_triangular(&a, &cert)?
        }
    };
    let body = json!({
        "command": "verify",
        "kind": kind,
        "carrier": a.algebra().kind_name(),
        "n": a.rows(),
        "valid": valid,
        "claims": ["gram-reconstruction-check"],
    });
    if valid {
        Ok(Report::holds(body))
    } else {
        Ok(Report::refuted(body))
    }
}

fn emit(body: &Json) {
    println!(
        "{}",
        serde_json::to_string_pretty(body).expect("report serializes")
    );
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Axioms {
            input,
            samples,
            seed,
        } => run_axioms(input, *samples, *seed),
        Command::Check { input } => run_check(input),
        Command::Decompose { input, method } => run_decompose(input, *method),
        Command::Factor { input, mode } => run_factor(input, *mode),
        Command::Cprank {
            input,
            exact,
            max_width,
            budget,
        } => run_cprank(input, *exact, *max_width, *budget),
        Command::Verify { input, certificate } => run_verify(input, certificate),
    };
    match result {
        Ok(report) => {
            emit(&report.body);
            if report.refuted {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("incline: {e}");
            match e.class() {
                ErrorClass::Domain => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
