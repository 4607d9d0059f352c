//! Seeded fixture models and synthetic token corpora.

use std::path::Path;

use exq_core::model::{generate_model, sample_tokens, FixtureSpec, ModelGraph, TinyLlmConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::container::write_tokens;
use crate::error::{Result, Stage, StageExt};
use crate::model_io::save_model;

/// Independent ChaCha streams derived from one seed.
const MODEL_STREAM: u64 = 0;
const CALIB_STREAM: u64 = 1;
const EVAL_STREAM: u64 = 2;

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

#[derive(Clone, Debug, PartialEq)]
pub struct Corpus {
    pub n_seqs: usize,
    pub seq_len: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenOptions {
    pub config: TinyLlmConfig,
    pub spec: FixtureSpec,
    pub seed: u64,
    pub calib: Corpus,
    pub eval: Corpus,
}

pub struct Generated {
    pub model: ModelGraph,
    pub calib_tokens: Vec<u32>,
    pub eval_tokens: Vec<u32>,
}

pub fn generate(opts: &GenOptions) -> Result<Generated> {
    opts.config.validate().stage(Stage::Generate)?;
    let model = generate_model(&opts.config, &opts.spec, &mut rng(opts.seed, MODEL_STREAM))
        .stage(Stage::Generate)?;
    let sample = |c: &Corpus, stream| {
        sample_tokens(&model, c.n_seqs, c.seq_len, &mut rng(opts.seed, stream)).stage(Stage::Generate)
    };
    let calib_tokens = sample(&opts.calib, CALIB_STREAM)?;
    let eval_tokens = sample(&opts.eval, EVAL_STREAM)?;
    Ok(Generated {
        model,
        calib_tokens,
        eval_tokens,
    })
}

/// Writes `<stem>.exq`, `<stem>.json`, `<stem>.calib.bin` and `<stem>.eval.bin`
/// into `dir`.
pub fn write_generated(dir: &Path, stem: &str, g: &Generated) -> Result<()> {
    save_model(&dir.join(format!("{stem}.exq")), &g.model)?;
    write_tokens(&dir.join(format!("{stem}.calib.bin")), &g.calib_tokens)?;
    write_tokens(&dir.join(format!("{stem}.eval.bin")), &g.eval_tokens)
}
