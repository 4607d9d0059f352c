use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use exq::config::{ExperimentConfig, R1Init};
use exq::container::{read_tokens, Container};
use exq::error::{ExqError, Result, Stage, StageExt};
use exq::generate::{generate, write_generated, Corpus, GenOptions};
use exq::model_io::load_model;
use exq::pipeline::run_quantize;
use exq::report::{pareto_frontier, read_reports, write_reports, ExperimentReport};
use exq::sweep::{check_violations, expanded_matrix, run_bound_sweep, write_bound_csv, write_matrix_csv, SweepSpec};
use exq_core::model::{perplexity, FixtureSpec, TinyLlmConfig};
use exq_core::quant::SchemeFamily;

#[derive(Parser)]
#[command(name = "exq", version, about = "Expanded-rotation quantization experiments")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Int4,
    Mxfp4,
}

impl From<Scheme> for SchemeFamily {
    fn from(s: Scheme) -> Self {
        match s {
            Scheme::Int4 => SchemeFamily::Int4,
            Scheme::Mxfp4 => SchemeFamily::Mxfp4,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum R1 {
    Identity,
    Hadamard,
    Cayley,
}

impl From<R1> for R1Init {
    fn from(r: R1) -> Self {
        match r {
            R1::Identity => R1Init::Identity,
            R1::Hadamard => R1Init::Hadamard,
            R1::Cayley => R1Init::Cayley,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpFormat {
    Csv,
    Exq,
}

/// Overrides applied on top of an experiment config file.
#[derive(clap::Args)]
struct Overrides {
    #[arg(long, value_enum)]
    scheme: Option<Scheme>,
    #[arg(long)]
    rtn: bool,
    #[arg(long)]
    act_order: bool,
    #[arg(long, value_enum)]
    r1: Option<R1>,
    #[arg(long)]
    r2_expanded_dim: Option<usize>,
    #[arg(long)]
    r4_expanded_dim: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

impl Overrides {
    fn apply(&self, cfg: &mut ExperimentConfig) {
        if let Some(s) = self.scheme {
            cfg.scheme = s.into();
        }
        if self.rtn {
            cfg.use_gptq = false;
        }
        if self.act_order {
            cfg.act_order = true;
        }
        if let Some(r) = self.r1 {
            cfg.r1 = r.into();
        }
        if self.r2_expanded_dim.is_some() {
            cfg.r2_expanded_dim = self.r2_expanded_dim;
        }
        if self.r4_expanded_dim.is_some() {
            cfg.r4_expanded_dim = self.r4_expanded_dim;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a random outlier fixture model and sampled token files.
    GenModel {
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, default_value = "fixture")]
        stem: String,
        /// JSON model config; the built-in fixture shape when absent.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.01)]
        outlier_frac: f64,
        #[arg(long, default_value_t = 20.0)]
        outlier_gain: f64,
        #[arg(long, default_value_t = 16)]
        calib_seqs: usize,
        #[arg(long, default_value_t = 32)]
        eval_seqs: usize,
        #[arg(long, default_value_t = 128)]
        seq_len: usize,
    },
    /// Run one experiment and write its report row.
    Quantize {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
        /// Report CSV (stdout when absent).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Perplexity of a float or quantized model.
    Eval {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        tokens: PathBuf,
        #[arg(long, default_value_t = 2048)]
        seq_len: usize,
    },
    /// GPTQ error-bound sweep; exits 3 on any violation.
    VerifyBounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value = "int4")]
        scheme: Scheme,
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an experiment grid over expansion sizes.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_delimiter = ',')]
        r2: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        r4: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        seeds: Vec<u64>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Keep the runs no other run beats in both volume and perplexity.
    Pareto {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Materialize an n×m expanded Hadamard rotation.
    DumpHadamard {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: DumpFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| ExqError::io(p, e))?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::GenModel {
            out_dir,
            stem,
            config,
            seed,
            outlier_frac,
            outlier_gain,
            calib_seqs,
            eval_seqs,
            seq_len,
        } => {
            let config = match config {
                Some(p) => {
                    let text = std::fs::read_to_string(&p).map_err(|e| ExqError::io(&p, e))?;
                    serde_json::from_str::<TinyLlmConfig>(&text)?
                }
                None => TinyLlmConfig::fixture(),
            };
            if !(0.0..=1.0).contains(&outlier_frac) || !outlier_gain.is_finite() {
                return Err(ExqError::Config("outlier_frac must be in [0, 1] and gain finite".into()));
            }
            let opts = GenOptions {
                config,
                spec: FixtureSpec {
                    outlier_frac,
                    outlier_gain,
                    ..FixtureSpec::default()
                },
                seed,
                calib: Corpus { n_seqs: calib_seqs, seq_len },
                eval: Corpus { n_seqs: eval_seqs, seq_len },
            };
            std::fs::create_dir_all(&out_dir).map_err(|e| ExqError::io(&out_dir, e))?;
            write_generated(&out_dir, &stem, &generate(&opts)?)
        }
        Cmd::Quantize {
            config,
            overrides,
            report,
        } => {
            let mut cfg = ExperimentConfig::load(&config)?;
            overrides.apply(&mut cfg);
            let (row, _) = run_quantize(&cfg)?;
            write_reports(output(report.as_deref())?, &[row])
        }
        Cmd::Eval { model, tokens, seq_len } => {
            let m = load_model(&model)?;
            let t = read_tokens(&tokens)?;
            let ppl = perplexity(&m, &t, seq_len).stage(Stage::Eval)?;
            println!("{ppl}");
            Ok(())
        }
        Cmd::VerifyBounds {
            n,
            m,
            d,
            scheme,
            seeds,
            out,
        } => {
            let rows = run_bound_sweep(&SweepSpec {
                n,
                m,
                d,
                scheme: SchemeFamily::from(scheme).weight_scheme(),
                seeds,
            })?;
            write_bound_csv(output(out.as_deref())?, &rows)?;
            check_violations(&rows)
        }
        Cmd::Sweep {
            config,
            r2,
            r4,
            seeds,
            report,
        } => {
            let base = ExperimentConfig::load(&config)?;
            let opt = |v: Vec<usize>| -> Vec<Option<usize>> {
                if v.is_empty() {
                    vec![None]
                } else {
                    v.into_iter().map(Some).collect()
                }
            };
            let (r2, r4) = (opt(r2), opt(r4));
            let mut rows: Vec<ExperimentReport> = Vec::new();
            for &seed in &seeds {
                for &a in &r2 {
                    for &b in &r4 {
                        let cfg = ExperimentConfig {
                            seed,
                            r2_expanded_dim: a,
                            r4_expanded_dim: b,
                            run_id: None,
                            output_path: None,
                            ..base.clone()
                        };
                        rows.push(run_quantize(&cfg)?.0);
                    }
                }
            }
            write_reports(output(report.as_deref())?, &rows)
        }
        Cmd::Pareto { input, out } => {
            let f = File::open(&input).map_err(|e| ExqError::io(&input, e))?;
            let rows = read_reports(BufReader::new(f))?;
            write_reports(output(out.as_deref())?, &pareto_frontier(&rows))
        }
        Cmd::DumpHadamard { n, m, format, out } => {
            let h = expanded_matrix(n, m)?;
            match format {
                DumpFormat::Csv => write_matrix_csv(output(out.as_deref())?, &h),
                DumpFormat::Exq => {
                    let path = out.ok_or_else(|| ExqError::Config("--out is required for exq output".into()))?;
                    let mut c = Container::new();
                    c.push_matrix(format!("hadamard.{n}x{m}"), &h)?;
                    c.write(&path)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
