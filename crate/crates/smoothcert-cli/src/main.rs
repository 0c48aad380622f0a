//! `smoothcert` command line: single certifications, table and simulation
//! emitters, seeded pipeline runs and batch certification.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 infeasible probability
//! pair, 3 solver failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use smoothcert::batch::{certify_record, result_row, run_batch, BatchMethod, BatchRecord};
use smoothcert::dsrs::heuristic_t;
use smoothcert::harness::{run_pipeline, ClassifierKind, PipelineOptions, SamplingConfig, SyntheticClassifier};
use smoothcert::io::{read_records, records_to_string, Format};
use smoothcert::lower_bound::{lambda_table, mu_table, ConcentrationParams, LambdaKind};
use smoothcert::parallel::with_threads;
use smoothcert::studies::{self, SweepOptions};
use smoothcert::{DistributionSpec, Error, Execution, Family, KPreset, SolverOptions};

const ERROR_SCHEMA: &str = "smoothcert.error.v1";
const INCREASE_SCHEMA: &str = "smoothcert.simulation-increase.v1";

#[derive(Parser, Debug)]
#[command(name = "smoothcert", version, about = "Certified l2 radii for randomized smoothing")]
struct Cli {
    /// Worker threads for grid commands (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Run grids and sampling on one thread in a fixed order.
    #[arg(long, global = true)]
    sequential: bool,
    /// Print failures as a JSON object on stdout.
    #[arg(long, global = true)]
    error_json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify one (A[, B]) pair.
    Certify(CertifyArgs),
    /// Emit a lower-bound or approximation table.
    Tables(TablesArgs),
    /// Run the EGG simulation studies.
    Simulate(SimulateArgs),
    /// Sample a synthetic classifier, bound, repair and certify.
    Pipeline(PipelineArgs),
    /// Certify every record of a CSV or JSON file.
    Batch(BatchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CertifyMethod {
    Np,
    Dsrs,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Preset {
    Cifar10,
    Imagenet,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum OutFormat {
    Csv,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Csv => Format::Csv,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct SpecArgs {
    /// Noise family.
    #[arg(long, default_value = "esg")]
    family: Family,
    /// Input dimension (taken from --k-preset when omitted).
    #[arg(long)]
    d: Option<u64>,
    #[arg(long, default_value_t = 1.0)]
    sigma: f64,
    /// Exponent η, decimal or fraction such as 1/50.
    #[arg(long, default_value = "2", value_parser = parse_eta)]
    eta: f64,
    /// EGG order k (taken from --k-preset when omitted).
    #[arg(long)]
    k: Option<u64>,
    /// Image-benchmark (d, k) preset.
    #[arg(long, value_enum)]
    k_preset: Option<Preset>,
}

impl SpecArgs {
    fn dims(&self) -> Result<(u64, u64), Error> {
        let preset = self.k_preset.map(|p| match p {
            Preset::Cifar10 => KPreset::Cifar10,
            Preset::Imagenet => KPreset::ImageNet,
        });
        let d = self
            .d
            .or(preset.map(KPreset::d))
            .ok_or_else(|| Error::InvalidParameter { name: "d", detail: "pass --d or --k-preset".into() })?;
        let k = match self.family {
            Family::Esg => 0,
            Family::Egg => self.k.or(preset.map(KPreset::k)).unwrap_or(0),
        };
        Ok((d, k))
    }

    fn spec(&self) -> Result<DistributionSpec, Error> {
        let (d, k) = self.dims()?;
        DistributionSpec::new(self.family, d, self.sigma, self.eta, k, None)
    }
}

#[derive(Args, Debug)]
struct CertifyArgs {
    #[arg(value_enum)]
    method: CertifyMethod,
    #[command(flatten)]
    spec: SpecArgs,
    /// Lower bound of the correct-class probability under P.
    #[arg(long = "A")]
    a: f64,
    /// Correct-class probability under Q (dsrs only).
    #[arg(long = "B")]
    b: Option<f64>,
    /// Truncation radius of Q (dsrs only; default from --kappa).
    #[arg(long = "T")]
    t: Option<f64>,
    /// Mass of P inside T when --T is omitted.
    #[arg(long, default_value_t = 0.5)]
    kappa: f64,
    /// Radius bisection tolerance.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
    /// Write the record here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TableKind {
    Mu,
    LambdaFixbase,
    LambdaThcorres,
    SigmaErrors,
    PsiPhi,
}

impl TableKind {
    fn stem(self) -> &'static str {
        match self {
            TableKind::Mu => "mu",
            TableKind::LambdaFixbase => "lambda-fixbase",
            TableKind::LambdaThcorres => "lambda-thcorres",
            TableKind::SigmaErrors => "sigma-errors",
            TableKind::PsiPhi => "psi-phi",
        }
    }
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    /// Directory for emitted files.
    #[arg(long, env = "SMOOTHCERT_OUT_DIR", default_value = ".")]
    out_dir: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutFormat,
    /// Print to stdout instead of writing files.
    #[arg(long)]
    stdout: bool,
}

#[derive(Args, Debug)]
struct TablesArgs {
    #[arg(value_enum)]
    table: TableKind,
    #[command(flatten)]
    out: OutputArgs,
    #[arg(long, default_value_t = 0.999)]
    theta: f64,
    #[arg(long, default_value_t = 0.99)]
    beta: f64,
    #[arg(long, default_value_t = 0.6)]
    tau: f64,
    /// μ (fixbase) or ζ (thcorres).
    #[arg(long, default_value_t = 0.02)]
    mu: f64,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 25_000)]
    d_tilde: u64,
    /// Bisection width for the tight-μ table.
    #[arg(long, default_value_t = 1e-4)]
    e: f64,
    /// Dimensions of the psi-phi table.
    #[arg(long, value_delimiter = ',', default_values_t = [10u64, 100, 1000, 10_000, 100_000, 1_000_000])]
    dims: Vec<u64>,
    /// Grid points of the psi-phi table.
    #[arg(long, default_value_t = 100_000)]
    points: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Study {
    Table,
    B1,
    Dims,
    Relaxation,
    All,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[arg(value_enum, default_value = "all")]
    study: Study,
    #[command(flatten)]
    out: OutputArgs,
    #[arg(long, default_value_t = studies::SIMULATION_D)]
    d: u64,
    #[arg(long, default_value_t = 1.0)]
    sigma: f64,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// η values (default depends on the study).
    #[arg(long, value_delimiter = ',', value_parser = parse_eta)]
    etas: Option<Vec<f64>>,
    /// (A, B) cells as A:B pairs for the table study.
    #[arg(long, value_delimiter = ',', value_parser = parse_cell)]
    cells: Option<Vec<(f64, f64)>>,
    /// Dimensions of the dims study.
    #[arg(long, value_delimiter = ',', default_values_t = [3072u64, 10_000, 30_000, 100_000, 150_528, 300_000, 1_000_000])]
    dims: Vec<u64>,
    /// A of the dims study and target A of the relaxation study.
    #[arg(long = "A", default_value_t = 0.8)]
    a: f64,
    /// B of the dims study.
    #[arg(long = "B", default_value_t = 0.7)]
    b: f64,
    /// Inner accuracies of the relaxation study.
    #[arg(long, value_delimiter = ',', default_values_t = [1.0, 0.999, 0.99, 0.98, 0.97, 0.96, 0.95])]
    p_inner: Vec<f64>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ClassifierArg {
    Concentrated,
    Shell,
    AlwaysCorrect,
    AlwaysWrong,
}

#[derive(Args, Debug)]
struct PipelineArgs {
    #[arg(long, value_enum, default_value = "concentrated")]
    classifier: ClassifierArg,
    /// Shell radius (default: the radius holding --concentration of the P mass).
    #[arg(long)]
    t_star: Option<f64>,
    /// P mass inside the default shell radius.
    #[arg(long, default_value_t = 0.8)]
    concentration: f64,
    #[arg(long, default_value_t = 1.0)]
    p_inner: f64,
    #[arg(long, default_value_t = 0.0)]
    p_outer: f64,
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    seed: u64,
    /// Mass of P inside T (default: --concentration when --t-star is
    /// omitted, else the P success rate).
    #[arg(long)]
    kappa: Option<f64>,
    #[arg(long, default_value_t = 50_000)]
    n1: u64,
    #[arg(long, default_value_t = 50_000)]
    n2: u64,
    #[arg(long, default_value_t = 5e-4)]
    alpha1: f64,
    #[arg(long, default_value_t = 5e-4)]
    alpha2: f64,
    #[arg(long, default_value_t = 100_000)]
    n_np: u64,
    #[arg(long, default_value_t = 1e-3)]
    alpha_np: f64,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// Input records (.csv or .json).
    #[arg(long)]
    input: PathBuf,
    /// Output file (format from its extension, else --format); stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
}

/// Parse η as a decimal or a fraction `p/q`.
fn parse_eta(s: &str) -> Result<f64, String> {
    let v = match s.split_once('/') {
        Some((n, d)) => {
            let n: f64 = n.trim().parse().map_err(|e| format!("bad numerator in `{s}`: {e}"))?;
            let d: f64 = d.trim().parse().map_err(|e| format!("bad denominator in `{s}`: {e}"))?;
            n / d
        }
        None => s.trim().parse().map_err(|e| format!("bad η `{s}`: {e}"))?,
    };
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("η = {s} must be positive and finite"))
    }
}

fn parse_cell(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("cell `{s}` must look like A:B"))?;
    let a = a.trim().parse().map_err(|e| format!("bad A in `{s}`: {e}"))?;
    let b = b.trim().parse().map_err(|e| format!("bad B in `{s}`: {e}"))?;
    Ok((a, b))
}

fn exit_code(e: &Error) -> u8 {
    if e.is_infeasible() {
        2
    } else if e.is_solver_failure() {
        3
    } else {
        1
    }
}

fn report_error(e: &Error, as_json: bool) -> ExitCode {
    let code = exit_code(e);
    if as_json {
        let v = json!({"schema": ERROR_SCHEMA, "kind": e.kind(), "message": e.to_string(), "exit_code": code});
        println!("{v}");
    } else {
        eprintln!("error: {e}");
    }
    ExitCode::from(code)
}

/// Write `text` to `dir/stem.ext` (or stdout) and name the file on stderr.
fn emit(out: &OutputArgs, stem: &str, text: &str) -> Result<(), Error> {
    if out.stdout {
        print!("{text}");
        return Ok(());
    }
    fs::create_dir_all(&out.out_dir)?;
    let path = out.out_dir.join(format!("{stem}.{}", Format::from(out.format).extension()));
    fs::write(&path, text)?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn write_to(path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir)?;
            }
            fs::write(p, text)?;
        }
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn single_record<T: serde::Serialize>(row: &T, format: Format) -> Result<String, Error> {
    match format {
        Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(row)?)),
        Format::Csv => records_to_string(std::slice::from_ref(row), format),
    }
}

fn cmd_certify(args: &CertifyArgs) -> Result<(), Error> {
    let (d, k) = args.spec.dims()?;
    let rec = BatchRecord {
        method: match args.method {
            CertifyMethod::Np => BatchMethod::Np,
            CertifyMethod::Dsrs => BatchMethod::Dsrs,
        },
        family: args.spec.family,
        d,
        sigma: args.spec.sigma,
        eta: args.spec.eta,
        k,
        t: args.t,
        a: args.a,
        b: args.b,
        kappa: Some(args.kappa),
        tol: Some(args.tol),
    };
    let outcome = certify_record(&rec, &SolverOptions::default());
    if let Err(e) = &outcome {
        return Err(e.clone());
    }
    let mut row = result_row(0, &rec, &outcome);
    row.schema = "smoothcert.certify.v1".to_string();
    write_to(args.output.as_deref(), &single_record(&row, args.format.into())?)
}

fn cmd_tables(args: &TablesArgs, exec: Execution) -> Result<(), Error> {
    let params = ConcentrationParams {
        theta: args.theta,
        beta: args.beta,
        tau: args.tau,
        mu_or_zeta: args.mu,
        p: args.p,
        d_tilde: args.d_tilde,
    };
    params.validate()?;
    let format: Format = args.out.format.into();
    let text = match args.table {
        TableKind::LambdaFixbase | TableKind::LambdaThcorres => {
            let kind = if matches!(args.table, TableKind::LambdaFixbase) {
                LambdaKind::Fixbase
            } else {
                LambdaKind::Thcorres
            };
            match format {
                Format::Csv => studies::wide_table_csv(&lambda_table(kind, &params, exec)?, studies::LAMBDA_SCHEMA),
                Format::Json => records_to_string(&studies::lambda_rows(kind, &params, exec)?, format)?,
            }
        }
        TableKind::Mu => match format {
            Format::Csv => studies::wide_table_csv(&mu_table(&params, args.e, exec)?, studies::MU_SCHEMA),
            Format::Json => records_to_string(&studies::mu_rows(&params, args.e, exec)?, format)?,
        },
        TableKind::SigmaErrors => records_to_string(&studies::sigma_error_table()?, format)?,
        TableKind::PsiPhi => {
            let rows: Result<Vec<_>, Error> = exec
                .map(&args.dims, |&d| studies::psi_phi_errors(d, args.points))
                .into_iter()
                .collect();
            records_to_string(&rows?, format)?
        }
    };
    emit(&args.out, args.table.stem(), &text)
}

#[derive(serde::Serialize)]
struct IncreaseRow {
    schema: &'static str,
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B")]
    b: f64,
    eta_from: f64,
    eta_to: f64,
    increase_percent: Option<f64>,
}

fn cmd_simulate(args: &SimulateArgs, exec: Execution) -> Result<(), Error> {
    let opts = SweepOptions {
        sigma: args.sigma,
        tol: args.tol,
        solver: SolverOptions::default(),
        exec,
    };
    let format: Format = args.out.format.into();
    let run = |s: Study| args.study == s || args.study == Study::All;
    if run(Study::Table) {
        let etas = args.etas.clone().unwrap_or_else(|| studies::SIMULATION_ETAS.to_vec());
        let cells = args.cells.clone().unwrap_or_else(|| studies::SIMULATION_CELLS.to_vec());
        let rows = studies::simulation_grid(args.d, &etas, &cells, &opts);
        emit(&args.out, "simulation", &records_to_string(&rows, format)?)?;
        let (lo, hi) = (etas.iter().cloned().fold(f64::INFINITY, f64::min), etas.iter().cloned().fold(0.0, f64::max));
        let from = if etas.contains(&2.0) { 2.0 } else { lo };
        let inc: Vec<IncreaseRow> = studies::eta_increase(&rows, from, hi)
            .into_iter()
            .map(|((a, b), v)| IncreaseRow {
                schema: INCREASE_SCHEMA,
                a,
                b,
                eta_from: from,
                eta_to: hi,
                increase_percent: v,
            })
            .collect();
        emit(&args.out, "simulation-increase", &records_to_string(&inc, format)?)?;
    }
    if run(Study::B1) {
        let etas = args.etas.clone().unwrap_or_else(|| vec![0.5, 1.0, 2.0, 4.0, 8.0]);
        let rows = studies::b1_sweep(&[args.d], &etas, &opts);
        emit(&args.out, "b1-sweep", &records_to_string(&rows, format)?)?;
    }
    if run(Study::Dims) {
        let etas = args.etas.clone().unwrap_or_else(|| vec![0.5, 1.0, 2.0, 4.0, 8.0]);
        let rows = studies::dimension_sweep(&args.dims, &etas, args.a, args.b, &opts);
        emit(&args.out, "d-sweep", &records_to_string(&rows, format)?)?;
    }
    if run(Study::Relaxation) {
        let etas = args.etas.clone().unwrap_or_else(|| vec![1.0, 2.0]);
        let rows = studies::relaxation_sweep(args.d, &etas, args.a, &args.p_inner, &opts);
        emit(&args.out, "relaxation-sweep", &records_to_string(&rows, format)?)?;
    }
    Ok(())
}

fn cmd_pipeline(args: &PipelineArgs, exec: Execution, error_json: bool) -> Result<(), Error> {
    let spec = args.spec.spec()?;
    let (t_star, kappa) = match args.t_star {
        Some(t) => (t, args.kappa),
        None => (heuristic_t(&spec, args.concentration)?, args.kappa.or(Some(args.concentration))),
    };
    let kind = match args.classifier {
        ClassifierArg::Concentrated => ClassifierKind::Concentrated { t_star },
        ClassifierArg::Shell => ClassifierKind::Shell {
            t_star,
            p_inner: args.p_inner,
            p_outer: args.p_outer,
        },
        ClassifierArg::AlwaysCorrect => ClassifierKind::AlwaysCorrect,
        ClassifierArg::AlwaysWrong => ClassifierKind::AlwaysWrong,
    };
    let cls = SyntheticClassifier::new(kind)?;
    let config = SamplingConfig {
        n1: args.n1,
        n2: args.n2,
        alpha1: args.alpha1,
        alpha2: args.alpha2,
        n_np: args.n_np,
        alpha_np: args.alpha_np,
    };
    let opts = PipelineOptions {
        kappa,
        solver: SolverOptions::default(),
        tol: args.tol,
        exec,
    };
    let format: Format = args.out.format.into();
    let render = |r: &smoothcert::harness::SamplingReport| -> Result<String, Error> {
        match format {
            Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(r)?)),
            Format::Csv => Ok(format!("{}\n{}\n", smoothcert::harness::SamplingReport::CSV_HEADER, r.csv_row())),
        }
    };
    let stem = format!("pipeline-{}", args.seed);
    match run_pipeline(&cls, &spec, &config, args.seed, &opts) {
        Ok(report) => emit(&args.out, &stem, &render(&report)?),
        Err(e) => {
            if let Some(report) = &e.report {
                // keep the partial report unless stdout is reserved for the error object
                if !(args.out.stdout && error_json) {
                    emit(&args.out, &stem, &render(report)?)?;
                }
            }
            Err(e.source)
        }
    }
}

fn cmd_batch(args: &BatchArgs, exec: Execution) -> Result<(), Error> {
    let in_format = Format::from_path(&args.input).unwrap_or_default();
    let records: Vec<BatchRecord> = read_records(fs::File::open(&args.input)?, in_format)?;
    let out_format = args
        .format
        .map(Format::from)
        .or_else(|| args.output.as_deref().and_then(Format::from_path))
        .unwrap_or(in_format);
    let rows = run_batch(&records, &SolverOptions::default(), exec);
    write_to(args.output.as_deref(), &records_to_string(&rows, out_format)?)
}

fn run(cli: &Cli) -> Result<(), Error> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match &cli.command {
        Command::Certify(a) => cmd_certify(a),
        Command::Tables(a) => cmd_tables(a, exec),
        Command::Simulate(a) => cmd_simulate(a, exec),
        Command::Pipeline(a) => cmd_pipeline(a, exec, cli.error_json),
        Command::Batch(a) => cmd_batch(a, exec),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let threads = if cli.sequential { 1 } else { cli.threads };
    match with_threads(threads, || run(&cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report_error(&e, cli.error_json),
    }
}
