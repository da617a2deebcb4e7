//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TapeError {
    #[error("backward requires a scalar output, got shape {0:?}")]
    NonScalarOutput(Vec<usize>),
    #[error("non-finite value in node {node} ({op})")]
    NonFiniteValue { node: usize, op: &'static str },
    #[error("non-finite gradient flowing into node {node} ({op})")]
    NonFiniteGradient { node: usize, op: &'static str },
    #[error("unknown leaf name '{0}'")]
    UnknownLeaf(String),
    #[error("leaf '{name}' bound with shape {got:?}, recorded shape {want:?}")]
    LeafShapeMismatch {
        name: String,
        got: Vec<usize>,
        want: Vec<usize>,
    },
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("invalid architecture descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("vocabulary hash mismatch: checkpoint {ckpt:#x}, runtime {runtime:#x}")]
    VocabHashMismatch { ckpt: u64, runtime: u64 },
    #[error("unknown token id {0}")]
    UnknownToken(u32),
    #[error("prompt must have length {want}, got {got}")]
    PromptLength { want: usize, got: usize },
    #[error("invalid prompt: {0}")]
    InvalidPrompt(String),
    #[error("checkpoint is missing parameter '{0}'")]
    MissingParameter(String),
    #[error("parameter '{name}' has shape {got:?}, expected {want:?}")]
    ParameterShape {
        name: String,
        got: Vec<usize>,
        want: Vec<usize>,
    },
}

#[derive(Debug, Error)]
pub enum ScheduleError {
    #[error("invalid beta range: start {start}, end {end} (need 0 < start < end < 1)")]
    InvalidBetaRange { start: f64, end: f64 },
    #[error("timestep {t} out of range 1..={t_max}")]
    TimestepOutOfRange { t: usize, t_max: usize },
    #[error("ddim step requires t > t_prev, got t={t}, t_prev={t_prev}")]
    OutOfOrderTimesteps { t: usize, t_prev: usize },
    #[error("{num_steps} sampling steps do not evenly divide {t_train} training steps")]
    UnevenSchedule { num_steps: usize, t_train: usize },
}

#[derive(Debug, Error)]
pub enum TrainError {
    #[error("training diverged at step {step}: loss {loss}")]
    Diverged { step: usize, loss: f64 },
    #[error("subject set must contain exactly 4 images, got {0}")]
    BadSubjectSet(usize),
    #[error("fine-tuning prompt must contain the subject token")]
    MissingSubjectToken,
    #[error("invalid schedule: {0}")]
    BadSchedule(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Error)]
pub enum GuidanceError {
    #[error("non-finite guidance gradient at timestep {t}")]
    NonFiniteGradient { t: usize },
    #[error("reference record has {got} timesteps, sampler expects {want}")]
    StepCountMismatch { got: usize, want: usize },
    #[error("attention shape mismatch at timestep {t}, layer {layer}: {got:?} vs {want:?}")]
    ShapeMismatch {
        t: usize,
        layer: usize,
        got: Vec<usize>,
        want: Vec<usize>,
    },
    #[error("guidance and edit checkpoints disagree on vocabulary hash")]
    VocabMismatch,
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
}

#[derive(Debug, Error)]
pub enum MetricError {
    #[error("sprite template has zero variance")]
    DegenerateSprite,
    #[error("need at least 2 images for diversity, got {0}")]
    TooFewImages(usize),
    #[error("attention record does not cover the subject token")]
    MissingSubjectToken,
    #[error("empty metrics row list")]
    EmptyRows,
}

/// File-format errors; each failure mode is a distinct variant so callers
/// (and tests) can tell them apart.
#[derive(Debug, Error)]
pub enum IoFormatError {
    #[error("bad magic: expected {expected}, found {found}")]
    BadMagic { expected: String, found: String },
    #[error("unsupported format version {0}")]
    VersionMismatch(u32),
    #[error("file truncated while reading {0}")]
    Truncated(&'static str),
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
    #[error("vocabulary hash mismatch: file {file:#x}, runtime {runtime:#x}")]
    VocabHashMismatch { file: u64, runtime: u64 },
    #[error("attention dump row sums violate normalization (worst |sum-1| = {0})")]
    BadRowSums(f64),
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
