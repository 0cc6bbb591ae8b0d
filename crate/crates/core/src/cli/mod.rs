//! Command-line front end.
//!
//! [`execute`] parses an argument vector, runs one subcommand and returns
//! everything the process should emit; `main` only prints and exits. Exit
//! status is `0` on success, `1` when `check-dimension` finds the bound
//! violated, `2` on usage errors, and the library error code otherwise.

pub mod cache;
pub mod matrix_file;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use self::cache::GraverCache;
pub use self::matrix_file::{parse_matrix, write_matrix};
use self::report::{error_json, int_json, matrix_hash, matrix_json, vec_json, Report, SCHEMA};
use crate::bouquet::{bouquet_decomposition, bouquet_ideal_of, cyclic_configuration};
use crate::error::Error;
use crate::graver::{graver_basis_with, graver_brute_force, CompletionMode, GraverBasis};
use crate::lattice::{IntMatrix, IntVec};
use crate::lawrence::{
    build_generalized_lawrence, lawrence_lift_omega, lifted_graver, GlmSpec, OmegaSet,
};
use crate::robustness::{complex_from_graver, indispensable_set, SimplicialComplex};

/// Environment variable naming the Graver cache directory.
pub const CACHE_ENV: &str = "TORIC_ROBUST_CACHE_DIR";

/// Largest box the `--oracle` brute force will scan.
const ORACLE_BOX_LIMIT: f64 = 2.0e7;

#[derive(Parser, Debug)]
#[command(
    name = "toric-robust",
    version,
    about = "Graver bases, bouquets and strongly robust complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the result to this file (a matrix for matrix-valued commands,
    /// the JSON report otherwise).
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    /// Print the JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Directory for cached Graver bases.
    #[arg(long = "cache-dir", global = true, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Cross-check against brute-force and direct computations.
    #[arg(long, global = true)]
    oracle: bool,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graver basis of a pointed matrix.
    Graver { input: PathBuf },
    /// Bouquet decomposition and bouquet matrix.
    Bouquets { input: PathBuf },
    /// Decide strong robustness.
    Robust { input: PathBuf },
    /// Strongly robust complex of a simple configuration.
    Complex { input: PathBuf },
    /// Partial Lawrence lifting.
    Lift {
        input: PathBuf,
        /// Comma-separated 1-based indices.
        #[arg(long, value_delimiter = ',')]
        omega: Vec<usize>,
    },
    /// Generalized Lawrence matrix over a base configuration.
    Glm {
        input: PathBuf,
        /// One c-vector per base column, comma-separated; repeat the flag.
        #[arg(long = "c", required = true, allow_hyphen_values = true)]
        c: Vec<String>,
        /// Optional λ-vectors, one per c-vector.
        #[arg(long = "lambda", allow_hyphen_values = true)]
        lambda: Vec<String>,
    },
    /// Cyclic configuration with columns (1, t, ..., t^(d-1)).
    Cyclic {
        #[arg(long)]
        d: usize,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        ts: Vec<i64>,
    },
    /// Exit 0 iff dim Δ_T < rank(T).
    CheckDimension { input: PathBuf },
}

/// Everything one invocation emits.
#[derive(Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    OracleMismatch(String),
    Threads(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn parts(&self) -> (&'static str, i32, String) {
        match self {
            CliError::Lib(e) => (e.kind(), e.code(), e.to_string()),
            CliError::OracleMismatch(m) => ("OracleMismatch", 80, m.clone()),
            CliError::Threads(m) => ("ThreadPool", 81, m.clone()),
        }
    }
}

struct Done {
    command: Value,
    input_hash: String,
    result: Value,
    human: String,
    artifact: Option<String>,
    exit_code: i32,
}

pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome {
                exit_code: code,
                stdout,
                stderr,
                report: None,
            };
        }
    };
    let started = Instant::now();
    let done = with_threads(cli.threads, || run(&cli)).and_then(|d| d);
    match done {
        Ok(done) => {
            let report = Report {
                schema: SCHEMA,
                command: done.command,
                input_hash: done.input_hash,
                result: done.result,
                timing_ms: cli.timing.then(|| started.elapsed().as_secs_f64() * 1e3),
                status: "ok",
            };
            if let Some(path) = &cli.output {
                let body = done.artifact.clone().unwrap_or_else(|| report.to_json());
                if let Err(e) = fs::write(path, body) {
                    return failure(CliError::Lib(e.into()));
                }
            }
            let stdout = if cli.json {
                report.to_json()
            } else {
                done.human
            };
            Outcome {
                exit_code: done.exit_code,
                stdout,
                stderr: String::new(),
                report: Some(report),
            }
        }
        Err(e) => failure(e),
    }
}

fn failure(e: CliError) -> Outcome {
    let (kind, code, message) = e.parts();
    Outcome {
        exit_code: code,
        stdout: String::new(),
        stderr: error_json(kind, code, &message),
        report: None,
    }
}

fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> Result<R, CliError> {
    if threads == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Threads(e.to_string()))?;
    Ok(pool.install(f))
}

fn read_matrix(path: &Path) -> Result<IntMatrix, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(parse_matrix(&text)?)
}

fn parse_int_list(text: &str) -> Result<IntVec, CliError> {
    let entries = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::NonIntegerToken(t.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntVec::new(entries))
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn faces_json(c: &SimplicialComplex) -> Value {
    json!(c.maximal_faces())
}

fn run(cli: &Cli) -> Result<Done, CliError> {
    let cache = GraverCache::new(cli.cache_dir.clone());
    match &cli.command {
        Command::Graver { input } => {
            let a = read_matrix(input)?;
            let gr = cache.graver(&a)?;
            let mut result = json!({
                "rows": a.rows(),
                "cols": a.cols(),
                "size": gr.len(),
                "max_norm": int_json(&gr.max_norm()),
                "elements": gr.elements().iter().map(vec_json).collect::<Vec<_>>(),
            });
            if cli.oracle {
                result["oracle"] = graver_oracle(&gr)?;
            }
            let text = write_matrix(&gr.to_matrix());
            let human = format!(
                "Graver basis: {} elements (one per ± pair)\n{text}",
                gr.len()
            );
            Ok(Done {
                command: json!({ "name": "graver", "input": path_str(input) }),
                input_hash: matrix_hash(&a),
                result,
                human,
                artifact: Some(text),
                exit_code: 0,
            })
        }
        Command::Bouquets { input } => {
            let a = read_matrix(input)?;
            let dec = bouquet_decomposition(&a);
            let bouquets: Vec<Value> = dec
                .bouquets()
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    json!({
                        "index": i + 1,
                        "members": b.members(),
                        "class": b.class(),
                        "c": b.c_vector().map(vec_json),
                        "a": b.a_vector().map(vec_json),
                    })
                })
                .collect();
            let ideal = bouquet_ideal_of(&dec).ok().map(|(m, _)| matrix_json(&m));
            let result = json!({
                "columns": a.cols(),
                "simple": dec.is_simple(),
                "mixed": dec.mixed_positions(),
                "free": dec.free_bouquet().map(|b| b.members().to_vec()),
                "bouquets": bouquets,
                "bouquet_matrix": ideal,
            });
            let mut human = format!("{} bouquets\n", dec.len());
            for (i, b) in dec.bouquets().iter().enumerate() {
                let c = b
                    .c_vector()
                    .map_or_else(|| "-".to_string(), ToString::to_string);
                human.push_str(&format!(
                    "{:>3}  {:<10} {:?}  c={c}\n",
                    i + 1,
                    b.class().to_string(),
                    b.members()
                ));
            }
            Ok(Done {
                command: json!({ "name": "bouquets", "input": path_str(input) }),
                input_hash: matrix_hash(&a),
                result,
                human,
                artifact: None,
                exit_code: 0,
            })
        }
        Command::Robust { input } => {
            let a = read_matrix(input)?;
            let gr = cache.graver(&a)?;
            let ind = indispensable_set(&gr);
            let dispensable: Vec<Value> = gr
                .elements()
                .iter()
                .filter(|g| !ind.contains(g))
                .map(vec_json)
                .collect();
            let robust = dispensable.is_empty();
            let mut result = json!({
                "strongly_robust": robust,
                "graver_size": gr.len(),
                "indispensable_size": ind.len(),
                "dispensable": dispensable,
            });
            if cli.oracle {
                result["oracle"] = graver_oracle(&gr)?;
            }
            let human = format!(
                "strongly robust: {robust}\nGraver elements: {}\nindispensable: {}\n",
                gr.len(),
                ind.len()
            );
            Ok(Done {
                command: json!({ "name": "robust", "input": path_str(input) }),
                input_hash: matrix_hash(&a),
                result,
                human,
                artifact: None,
                exit_code: 0,
            })
        }
        Command::Complex { input } => {
            let t = read_matrix(input)?;
            let gr = cache.graver(&t)?;
            let complex = complex_from_graver(&gr)?;
            let mut result = json!({
                "ground": complex.ground(),
                "rank": t.rank(),
                "maximal_faces": faces_json(&complex),
                "dimension": complex.dimension(),
                "face_count": complex.face_count(),
            });
            if cli.oracle {
                let mut checks = vec![graver_oracle(&gr)?];
                checks.extend(lift_oracle(&gr, &complex)?);
                result["oracle"] = Value::Array(checks);
            }
            let human = format!(
                "maximal faces: {complex}\ndimension: {}\nfaces: {}\nrank: {}\n",
                complex
                    .dimension()
                    .map_or_else(|| "void".into(), |d| d.to_string()),
                complex.face_count(),
                t.rank()
            );
            Ok(Done {
                command: json!({ "name": "complex", "input": path_str(input) }),
                input_hash: matrix_hash(&t),
                result,
                human,
                artifact: None,
                exit_code: 0,
            })
        }
        Command::Lift { input, omega } => {
            let t = read_matrix(input)?;
            let w = OmegaSet::new(t.cols(), omega.iter().copied())?;
            let m = lawrence_lift_omega(&t, &w)?;
            let text = write_matrix(&m);
            Ok(Done {
                command: json!({ "name": "lift", "input": path_str(input), "omega": w.members() }),
                input_hash: matrix_hash(&t),
                result: json!({ "omega": w.members(), "rows": m.rows(), "cols": m.cols(), "matrix": matrix_json(&m) }),
                human: text.clone(),
                artifact: Some(text),
                exit_code: 0,
            })
        }
        Command::Glm { input, c, lambda } => {
            let t = read_matrix(input)?;
            let cs = c
                .iter()
                .map(|s| parse_int_list(s))
                .collect::<Result<Vec<_>, _>>()?;
            let spec = if lambda.is_empty() {
                GlmSpec::new(t.clone(), cs)?
            } else {
                let ls = lambda
                    .iter()
                    .map(|s| parse_int_list(s))
                    .collect::<Result<Vec<_>, _>>()?;
                GlmSpec::with_lambdas(t.clone(), cs, ls)?
            };
            let m = build_generalized_lawrence(&spec)?;
            let text = write_matrix(&m);
            Ok(Done {
                command: json!({
                    "name": "glm",
                    "input": path_str(input),
                    "c": spec.c_vectors().iter().map(vec_json).collect::<Vec<_>>(),
                    "lambda": if lambda.is_empty() { Value::Null } else { json!(spec.lambdas().iter().map(vec_json).collect::<Vec<_>>()) },
                }),
                input_hash: matrix_hash(&t),
                result: json!({
                    "c_vectors": spec.c_vectors().iter().map(vec_json).collect::<Vec<_>>(),
                    "lambdas": spec.lambdas().iter().map(vec_json).collect::<Vec<_>>(),
                    "rows": m.rows(),
                    "cols": m.cols(),
                    "matrix": matrix_json(&m),
                }),
                human: text.clone(),
                artifact: Some(text),
                exit_code: 0,
            })
        }
        Command::Cyclic { d, ts } => {
            let m = cyclic_configuration(*d, ts)?;
            let text = write_matrix(&m);
            Ok(Done {
                command: json!({ "name": "cyclic", "d": d, "ts": ts }),
                input_hash: matrix_hash(&m),
                result: json!({ "rows": m.rows(), "cols": m.cols(), "matrix": matrix_json(&m) }),
                human: text.clone(),
                artifact: Some(text),
                exit_code: 0,
            })
        }
        Command::CheckDimension { input } => {
            let t = read_matrix(input)?;
            let gr = cache.graver(&t)?;
            let complex = complex_from_graver(&gr)?;
            let rank = t.rank() as isize;
            let holds = complex.dimension().is_none_or(|d| d < rank);
            let human = format!(
                "dim Δ_T = {}, rank(T) = {rank}: bound {}\n",
                complex
                    .dimension()
                    .map_or_else(|| "void".into(), |d| d.to_string()),
                if holds { "holds" } else { "violated" }
            );
            Ok(Done {
                command: json!({ "name": "check-dimension", "input": path_str(input) }),
                input_hash: matrix_hash(&t),
                result: json!({
                    "dimension": complex.dimension(),
                    "rank": rank,
                    "bound_holds": holds,
                    "maximal_faces": faces_json(&complex),
                }),
                human,
                artifact: None,
                exit_code: if holds { 0 } else { 1 },
            })
        }
    }
}

/// Compares `gr` with the brute-force box scan at radius `max-norm + 1`.
fn graver_oracle(gr: &GraverBasis) -> Result<Value, CliError> {
    let a = gr.source();
    let radius = gr.max_norm() + 1u32;
    let radius_u32: Option<u32> = num_traits::ToPrimitive::to_u32(&radius);
    let cells = radius_u32.map(|k| (2.0 * f64::from(k) + 1.0).powi(a.cols() as i32));
    match (radius_u32, cells) {
        (Some(k), Some(cells)) if cells <= ORACLE_BOX_LIMIT => {
            let brute = graver_brute_force(a, k)?;
            if brute != gr.elements() {
                return Err(CliError::OracleMismatch(format!(
                    "completion found {} elements, brute force {} (radius {k})",
                    gr.len(),
                    brute.len()
                )));
            }
            Ok(json!({ "check": "graver_brute_force", "radius": k, "agrees": true }))
        }
        _ => Ok(json!({ "check": "graver_brute_force", "skipped": "search box too large" })),
    }
}

/// Compares `D_ω(Gr(T))` with a direct completion on `Λ(T)_ω` for every
/// maximal face.
fn lift_oracle(gr: &GraverBasis, complex: &SimplicialComplex) -> Result<Vec<Value>, CliError> {
    let s = gr.source().cols();
    let mut checks = Vec::new();
    for face in complex.maximal_faces() {
        let w = OmegaSet::new(s, face.iter().copied())?;
        let via_map = lifted_graver(gr, &w)?;
        let direct = graver_basis_with(via_map.source(), CompletionMode::default())?;
        if direct != via_map {
            return Err(CliError::OracleMismatch(format!(
                "lifted Graver basis differs for ω = {w}"
            )));
        }
        checks.push(json!({ "check": "lifted_graver", "omega": face, "agrees": true }));
    }
    Ok(checks)
}
