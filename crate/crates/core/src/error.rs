//! Error type shared across the crate.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("wav error: {0}")]
    Wav(#[from] hound::Error),

    #[error("manifest {path}: {msg}")]
    Manifest { path: PathBuf, msg: String },

    #[error("manifest references missing audio file {path}")]
    MissingAudio { path: PathBuf },

    #[error("duplicate manifest entry for speaker {speaker_id} and file {path}")]
    DuplicateEntry { speaker_id: String, path: PathBuf },

    #[error("audio: {0}")]
    Audio(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("dsp: {0}")]
    Dsp(String),

    #[error("utterance {utterance}: {frames} frames is shorter than one segment of {window} frames")]
    EmptySegments {
        utterance: String,
        frames: usize,
        window: usize,
    },

    #[error("representation kind mismatch: expected {expected}, got {got}")]
    KindMismatch { expected: String, got: String },

    #[error("shape: {0}")]
    Shape(String),

    #[error("training: {0}")]
    Train(String),

    #[error("evaluation: {0}")]
    Eval(String),

    #[error("container: {0}")]
    Container(String),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
