//! Command-line front end.
//!
//! Exit codes: 0 success, 2 parse error, 3 validation error, 4 I/O error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::distributions::{merge_spaces, FiniteDistribution, Label};
use crate::error::Error;
use crate::ext_real::{ExtReal, LogBase};
use crate::finetune::{fine_tuning_report, target_event};
use crate::io::{read_distribution, read_event, read_family, read_graph, FileError};
use crate::markov::{trajectory, WalkConfig};
use crate::measures::{self, full_report, MeasureReport};
use crate::regimes::regime_report;

#[derive(Debug, Parser)]
#[command(name = "actinfo", version, about = "Active information, conserved active information and related divergences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaseArg {
    #[value(name = "2")]
    Two,
    #[value(name = "e")]
    E,
    #[value(name = "10")]
    Ten,
}

impl From<BaseArg> for LogBase {
    fn from(b: BaseArg) -> Self {
        match b {
            BaseArg::Two => LogBase::BITS,
            BaseArg::E => LogBase::NATS,
            BaseArg::Ten => LogBase::DECIMAL,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report every measure for a baseline, an informed distribution and a target.
    ///
    /// Distributions over different label sets are first extended to their
    /// union (sorted); target indices then refer to that union.
    Measure {
        /// Baseline distribution JSON
        #[arg(long)]
        p1: PathBuf,
        /// Informed distribution JSON
        #[arg(long)]
        p2: PathBuf,
        /// Target event JSON
        #[arg(long)]
        target: PathBuf,
        #[arg(long, value_enum, default_value = "2")]
        base: BaseArg,
    },
    /// Classify a (p, q) pair under the uniform baseline.
    Regime {
        /// Baseline target probability, 0 < p < 1/2
        #[arg(allow_negative_numbers = true)]
        p: f64,
        /// Informed target probability, 0 <= q <= 1
        #[arg(allow_negative_numbers = true)]
        q: f64,
        #[arg(long, value_enum, default_value = "2")]
        base: BaseArg,
    },
    /// Write a Bernoulli curve or surface as CSV.
    Sweep {
        #[arg(long, value_enum)]
        kind: SweepKind,
        #[arg(long, default_value_t = 0.01)]
        min: f64,
        #[arg(long, default_value_t = 0.99)]
        max: f64,
        #[arg(long, default_value_t = 99)]
        steps: usize,
        /// q range for surfaces; defaults to the p range
        #[arg(long)]
        q_min: Option<f64>,
        #[arg(long)]
        q_max: Option<f64>,
        #[arg(long)]
        q_steps: Option<usize>,
        #[arg(long, value_enum, default_value = "2")]
        base: BaseArg,
        /// Output file; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Trace a random walk on a regular graph as CSV.
    Markov {
        #[arg(long)]
        graph: PathBuf,
        /// Starting distribution JSON over the graph's vertices
        #[arg(long)]
        p1: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long, default_value_t = 500)]
        steps: usize,
        /// Holding probability; 0.5 on bipartite graphs and 0 otherwise when omitted
        #[arg(long)]
        laziness: Option<f64>,
        #[arg(long, value_enum, default_value = "2")]
        base: BaseArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximize the target probability over a parametric family.
    Finetune {
        /// Family JSON
        #[arg(long)]
        family: PathBuf,
        /// Target interval [A, B] within the domain
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
        interval: Vec<f64>,
        #[arg(long, allow_negative_numbers = true)]
        delta: f64,
        #[arg(long, value_enum, default_value = "2")]
        base: BaseArg,
    },
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Validation(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Validation(m) => write!(f, "invalid input: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<FileError> for CliError {
    fn from(e: FileError) -> Self {
        match e {
            FileError::Read { .. } => CliError::Io(e.to_string()),
            FileError::Parse { .. } => CliError::Parse(e.to_string()),
            FileError::Invalid { .. } => CliError::Validation(e.to_string()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

fn io_error(e: impl std::fmt::Display) -> CliError {
    CliError::Io(e.to_string())
}

/// Which Bernoulli quantity a sweep tabulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum SweepKind {
    /// Total information of Ber(p)
    TotalInfoCurve,
    /// Entropy of Ber(p)
    EntropyCurve,
    /// I⊕(Ber(p), Ber(q))
    CaiSurface,
    /// KL(Ber(p) ‖ Ber(q))
    KlSurface,
}

impl SweepKind {
    pub fn is_surface(self) -> bool {
        matches!(self, SweepKind::CaiSurface | SweepKind::KlSurface)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRange {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl GridRange {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self, Error> {
        if !(0.0 < min && min < max && max < 1.0) {
            return Err(Error::InvalidSweep(format!("need 0 < min < max < 1, got min {min}, max {max}")));
        }
        if steps < 2 {
            return Err(Error::InvalidSweep(format!("need at least 2 grid steps, got {steps}")));
        }
        Ok(GridRange { min, max, steps })
    }

    pub fn point(&self, i: usize) -> f64 {
        let last = (self.steps - 1) as f64;
        (self.min * (last - i as f64) + self.max * i as f64) / last
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|i| self.point(i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub kind: SweepKind,
    pub p: GridRange,
    /// Only read for surfaces.
    pub q: GridRange,
    pub base: LogBase,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub q: Option<f64>,
    pub value: ExtReal,
}

/// Evaluates the swept quantity at one grid point.
pub fn sweep_value(kind: SweepKind, p: f64, q: f64, base: LogBase) -> Result<ExtReal, Error> {
    let p1 = FiniteDistribution::bernoulli(p)?;
    Ok(match kind {
        SweepKind::TotalInfoCurve => measures::total_information(&p1, base),
        SweepKind::EntropyCurve => ExtReal::Finite(measures::entropy(&p1, base)),
        SweepKind::CaiSurface => measures::conserved_active_information(&p1, &FiniteDistribution::bernoulli(q)?, base)?,
        SweepKind::KlSurface => measures::kl_divergence(&p1, &FiniteDistribution::bernoulli(q)?, base)?,
    })
}

/// All rows of a sweep, p-major, in grid order.
pub fn sweep_rows(spec: &SweepSpec) -> Result<Vec<SweepRow>, Error> {
    let mut rows = Vec::new();
    for p in spec.p.points() {
        if spec.kind.is_surface() {
            for q in spec.q.points() {
                rows.push(SweepRow { p, q: Some(q), value: sweep_value(spec.kind, p, q, spec.base)? });
            }
        } else {
            rows.push(SweepRow { p, q: None, value: sweep_value(spec.kind, p, 0.5, spec.base)? });
        }
    }
    Ok(rows)
}

pub fn write_sweep_csv<W: Write>(spec: &SweepSpec, rows: &[SweepRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if spec.kind.is_surface() {
        w.write_record(["p", "q", "value"])?;
    } else {
        w.write_record(["p", "value"])?;
    }
    for row in rows {
        match row.q {
            Some(q) => w.write_record([row.p.to_string(), q.to_string(), row.value.to_string()])?,
            None => w.write_record([row.p.to_string(), row.value.to_string()])?,
        }
    }
    w.flush()?;
    Ok(())
}

/// Output of the `measure` subcommand: the report plus the outcome space it
/// was computed on.
#[derive(Debug, Serialize)]
pub struct MeasureOutput {
    pub labels: Vec<Label>,
    pub target: Vec<usize>,
    #[serde(flatten)]
    pub report: MeasureReport,
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => {
            Box::new(BufWriter::new(File::create(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: Serialize, W: Write>(value: &T, mut out: W) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, value).map_err(io_error)?;
    writeln!(out).map_err(io_error)?;
    out.flush().map_err(io_error)
}

pub fn run<W: Write>(cli: Cli, stdout: W) -> Result<(), CliError> {
    match cli.command {
        Command::Measure { p1, p2, target, base } => {
            let d1 = read_distribution(&p1)?;
            let d2 = read_distribution(&p2)?;
            if !d1.same_space(&d2) {
                log::info!("label sets differ; extending both distributions to their union");
            }
            let (d1, d2) = merge_spaces(&d1, &d2);
            let event = read_event(&target, d1.len())?;
            let report = full_report(&d1, &d2, &event, base.into())?;
            let output = MeasureOutput { labels: d1.labels().to_vec(), target: event.indices().to_vec(), report };
            write_json(&output, stdout)
        }
        Command::Regime { p, q, base } => write_json(&regime_report(p, q, base.into())?, stdout),
        Command::Sweep { kind, min, max, steps, q_min, q_max, q_steps, base, out } => {
            let p = GridRange::new(min, max, steps)?;
            let q = GridRange::new(q_min.unwrap_or(min), q_max.unwrap_or(max), q_steps.unwrap_or(steps))?;
            let spec = SweepSpec { kind, p, q, base: base.into() };
            let rows = sweep_rows(&spec)?;
            match out {
                Some(path) => write_sweep_csv(&spec, &rows, open_output(Some(&path))?),
                None => write_sweep_csv(&spec, &rows, stdout),
            }
            .map_err(io_error)
        }
        Command::Markov { graph, p1, target, steps, laziness, base, out } => {
            let g = read_graph(&graph)?;
            let start = read_distribution(&p1)?;
            if start.len() != g.n() {
                return Err(CliError::Validation(format!(
                    "{}: field `probs`: {} outcomes for a graph on {} vertices",
                    p1.display(),
                    start.len(),
                    g.n()
                )));
            }
            let event = read_event(&target, g.n())?;
            let cfg = match laziness {
                Some(l) => WalkConfig::new(l, steps)?,
                None => WalkConfig::for_graph(&g, steps),
            };
            log::info!("walking {} steps with laziness {}", cfg.steps(), cfg.laziness());
            let points = trajectory(&start, &g, &event, &cfg, base.into())?;
            let write = |sink: Box<dyn Write>| -> csv::Result<()> {
                let mut w = csv::Writer::from_writer(sink);
                w.write_record(["t", "q_t", "active_info", "cai_coarsened", "regime"])?;
                for pt in &points {
                    w.write_record([
                        pt.t.to_string(),
                        pt.q_t.to_string(),
                        pt.active_info.to_string(),
                        pt.cai_coarsened.to_string(),
                        pt.regime.map(|r| r.name().to_owned()).unwrap_or_default(),
                    ])?;
                }
                w.flush()?;
                Ok(())
            };
            let sink: Box<dyn Write> = match out {
                Some(path) => open_output(Some(&path))?,
                None => Box::new(stdout),
            };
            write(sink).map_err(io_error)
        }
        Command::Finetune { family, interval, delta, base } => {
            let fam = read_family(&family)?;
            let event = target_event(&fam, interval[0], interval[1])?;
            write_json(&fine_tuning_report(&fam, &event, delta, base.into())?, stdout)
        }
    }
}
