//! Corpus ingestion: speaker metadata, audio loading at a working rate,
//! and a synthetic labeled-corpus generator for desk-scale experiments.

mod resample;
mod synth;

pub use resample::resample;
pub use synth::{synth_corpus, ClassParams, SynthParams};

use std::collections::HashSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default working sample rate in Hz.
pub const DEFAULT_WORKING_RATE: u32 = 16_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gender {
    F,
    M,
}

impl FromStr for Gender {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "F" | "f" => Ok(Gender::F),
            "M" | "m" => Ok(Gender::M),
            other => Err(format!("gender must be F or M, got {other:?}")),
        }
    }
}

impl fmt::Display for Gender {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gender::F => "F",
            Gender::M => "M",
        })
    }
}

/// One speaker with binary class label (0 = neurotypical, 1 = dysarthric).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Speaker {
    pub id: String,
    pub label: u8,
    pub gender: Gender,
}

/// Mono audio samples at a known sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct Waveform {
    pub samples: Vec<f64>,
    pub sample_rate: u32,
}

impl Waveform {
    pub fn new(samples: Vec<f64>, sample_rate: u32) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Audio("waveform must contain at least one sample".into()));
        }
        if sample_rate == 0 {
            return Err(Error::Audio("sample rate must be positive".into()));
        }
        if samples.iter().any(|s| !s.is_finite()) {
            return Err(Error::Audio("waveform contains non-finite samples".into()));
        }
        Ok(Self { samples, sample_rate })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_secs(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate as f64
    }
}

/// One manifest row: a speaker plus one of their utterance files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub speaker_id: String,
    pub audio_path: PathBuf,
    pub label: u8,
    pub gender: Gender,
}

/// A validated corpus: utterance rows plus the target working rate.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusManifest {
    pub entries: Vec<ManifestEntry>,
    pub working_rate: u32,
}

impl CorpusManifest {
    /// Unique speakers in id order. Ids are unique by construction after
    /// [`load_manifest`] validation.
    pub fn speakers(&self) -> Vec<Speaker> {
        let mut seen = HashSet::new();
        let mut speakers: Vec<Speaker> = self
            .entries
            .iter()
            .filter(|e| seen.insert(e.speaker_id.clone()))
            .map(|e| Speaker {
                id: e.speaker_id.clone(),
                label: e.label,
                gender: e.gender,
            })
            .collect();
        speakers.sort_by(|a, b| a.id.cmp(&b.id));
        speakers
    }

    /// All utterance rows for one speaker, in manifest order.
    pub fn utterances_of(&self, speaker_id: &str) -> Vec<&ManifestEntry> {
        self.entries
            .iter()
            .filter(|e| e.speaker_id == speaker_id)
            .collect()
    }
}

const MANIFEST_HEADER: [&str; 4] = ["speaker_id", "audio_path", "label", "gender"];

/// Load and validate a CSV manifest (`speaker_id,audio_path,label,gender`).
///
/// Relative audio paths are resolved against the manifest's directory.
/// Every referenced file must exist; a speaker may appear on several rows
/// (multiple utterances) but each `(speaker_id, audio_path)` pair must be
/// unique and the label/gender must be consistent across a speaker's rows.
pub fn load_manifest(path: &Path, working_rate: u32) -> Result<CorpusManifest> {
    let manifest_err = |msg: String| Error::Manifest {
        path: path.to_path_buf(),
        msg,
    };
    let base = path.parent().unwrap_or_else(|| Path::new(""));

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)?;

    let headers = reader
        .headers()
        .map_err(|e| manifest_err(format!("cannot read header: {e}")))?
        .clone();
    if headers.len() != MANIFEST_HEADER.len()
        || headers.iter().zip(MANIFEST_HEADER).any(|(got, want)| got != want)
    {
        return Err(manifest_err(format!(
            "expected header {:?}, got {:?}",
            MANIFEST_HEADER.join(","),
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }

    let mut entries = Vec::new();
    let mut pairs = HashSet::new();
    let mut speaker_attrs: std::collections::HashMap<String, (u8, Gender)> =
        std::collections::HashMap::new();

    for (i, record) in reader.records().enumerate() {
        let line = i + 2; // header is line 1
        let record = record.map_err(|e| manifest_err(format!("line {line}: {e}")))?;
        if record.len() != 4 {
            return Err(manifest_err(format!(
                "line {line}: expected 4 fields, got {}",
                record.len()
            )));
        }
        let speaker_id = record[0].to_string();
        if speaker_id.is_empty() {
            return Err(manifest_err(format!("line {line}: empty speaker_id")));
        }
        let rel = PathBuf::from(&record[1]);
        let audio_path = if rel.is_absolute() { rel } else { base.join(rel) };
        let label: u8 = record[2]
            .parse()
            .ok()
            .filter(|l| *l <= 1)
            .ok_or_else(|| manifest_err(format!("line {line}: label must be 0 or 1, got {:?}", &record[2])))?;
        let gender = Gender::from_str(&record[3])
            .map_err(|e| manifest_err(format!("line {line}: {e}")))?;

        if !audio_path.is_file() {
            return Err(Error::MissingAudio { path: audio_path });
        }
        if !pairs.insert((speaker_id.clone(), audio_path.clone())) {
            return Err(Error::DuplicateEntry {
                speaker_id,
                path: audio_path,
            });
        }
        match speaker_attrs.get(&speaker_id) {
            None => {
                speaker_attrs.insert(speaker_id.clone(), (label, gender));
            }
            Some(&(l, g)) if l != label || g != gender => {
                return Err(manifest_err(format!(
                    "line {line}: speaker {speaker_id} has conflicting label/gender across rows"
                )));
            }
            Some(_) => {}
        }

        entries.push(ManifestEntry {
            speaker_id,
            audio_path,
            label,
            gender,
        });
    }

    if entries.is_empty() {
        return Err(manifest_err("manifest contains no entries".into()));
    }

    Ok(CorpusManifest {
        entries,
        working_rate,
    })
}

/// Read a PCM WAV file as a mono waveform at `target_rate`.
///
/// Multichannel input is averaged across channels. Downsampling is
/// band-limited (see [`resample`]); upsampling is unsupported.
pub fn load_waveform(path: &Path, target_rate: u32) -> Result<Waveform> {
    let mut reader = hound::WavReader::open(path)?;
    let spec = reader.spec();
    let channels = spec.channels as usize;
    if channels == 0 {
        return Err(Error::Audio(format!("{}: zero channels", path.display())));
    }

    let interleaved: Vec<f64> = match (spec.sample_format, spec.bits_per_sample) {
        (hound::SampleFormat::Int, 16) => reader
            .samples::<i16>()
            .map(|s| s.map(|v| v as f64 / 32768.0))
            .collect::<std::result::Result<_, _>>()?,
        (hound::SampleFormat::Float, 32) => reader
            .samples::<f32>()
            .map(|s| s.map(|v| v as f64))
            .collect::<std::result::Result<_, _>>()?,
        (format, bits) => {
            return Err(Error::Audio(format!(
                "{}: unsupported format {format:?}/{bits}-bit (expected 16-bit PCM or 32-bit float)",
                path.display()
            )))
        }
    };
    if interleaved.is_empty() {
        return Err(Error::Audio(format!("{}: empty audio file", path.display())));
    }

    let frames = interleaved.len() / channels;
    let mono: Vec<f64> = (0..frames)
        .map(|f| {
            interleaved[f * channels..(f + 1) * channels].iter().sum::<f64>() / channels as f64
        })
        .collect();

    let resampled = resample(&mono, spec.sample_rate, target_rate)?;
    Waveform::new(resampled, target_rate)
}
