//! Auditory-inspired dysarthric speech detection.
//!
//! The library decomposes speech into temporal-envelope and temporal
//! fine-structure representations through a cochlear-map band-pass
//! filterbank and Hilbert analysis, and classifies them with a two-branch
//! convolutional network (with single-representation baselines for
//! comparison). The full pipeline is:
//!
//! 1. [`corpus`] — audio ingestion, resampling, and a synthetic
//!    labeled-corpus generator for desk-scale experiments.
//! 2. [`frontend`] — filterbank design, analytic-signal decomposition,
//!    frame averaging, log scaling, and an STFT baseline front-end.
//! 3. [`segments`] — fixed-size network inputs and z-score normalization
//!    fitted on training data only.
//! 4. [`network`] — a minimal CNN engine (conv / pool / batch norm /
//!    dropout / fully-connected) with exact forward and backward passes.
//! 5. [`training`] — SGD with a halving learning-rate schedule, early
//!    stopping on a development set, and transfer initialization of the
//!    two-branch model from trained baselines.
//! 6. [`evaluation`] — speaker-independent stratified cross-validation,
//!    soft voting, AUC/accuracy, and aggregation over seeds and splits.

pub mod corpus;
pub mod error;
pub mod evaluation;
pub mod frontend;
pub mod network;
pub mod segments;
pub mod training;

pub use corpus::{CorpusManifest, Gender, Speaker, SynthParams, Waveform};
pub use error::{Error, Result};
pub use evaluation::{EvalReport, FoldPlan, SpeakerScore, SystemId};
pub use frontend::{Filterbank, FrontendParams, RepKind, Representation};
pub use network::{ArchTag, Model};
pub use segments::{NormMode, NormStats, Segment};
pub use training::{TrainConfig, TrainLog};
