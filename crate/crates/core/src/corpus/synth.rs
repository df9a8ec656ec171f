//! Deterministic synthetic speech corpus generator.
//!
//! Produces a gender-balanced two-class corpus of harmonic-source /
//! formant-filtered utterances. Class 1 ("dysarthric-like") voices are
//! drawn with reduced pitch variability, a flattened syllabic envelope,
//! and stronger aspiration noise; class 0 voices are the opposite. These
//! knobs mirror the perceptual cues the two-branch detector is built
//! around: envelope modulation contrast on one side, pitch movement and
//! breathiness on the other.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{CorpusManifest, Gender, ManifestEntry};
use crate::error::{Error, Result};

/// Class-conditional voice distribution parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ClassParams {
    /// Standard deviation of per-syllable pitch targets in Hz.
    pub pitch_std_hz: f64,
    /// Syllabic envelope modulation depth in [0, 1]; 1 means full
    /// suppression between syllable nuclei.
    pub modulation_depth: f64,
    /// Ratio of voiced power to aspiration-noise power in dB.
    pub aspiration_snr_db: f64,
}

impl Default for ClassParams {
    fn default() -> Self {
        // Neurotypical-like defaults; see SynthParams::default for class 1.
        Self {
            pitch_std_hz: 25.0,
            modulation_depth: 0.9,
            aspiration_snr_db: 30.0,
        }
    }
}

/// Generator configuration covering both classes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SynthParams {
    pub sample_rate: u32,
    pub utterances_per_speaker: usize,
    /// Approximate total speech per speaker in seconds.
    pub seconds_per_speaker: f64,
    /// Class 0 voice distribution.
    pub neurotypical: ClassParams,
    /// Class 1 voice distribution.
    pub dysarthric: ClassParams,
}

impl Default for SynthParams {
    fn default() -> Self {
        Self {
            sample_rate: 16_000,
            utterances_per_speaker: 6,
            seconds_per_speaker: 30.0,
            neurotypical: ClassParams::default(),
            dysarthric: ClassParams {
                pitch_std_hz: 3.0,
                modulation_depth: 0.35,
                aspiration_snr_db: 10.0,
            },
        }
    }
}

impl SynthParams {
    fn validate(&self) -> Result<()> {
        if self.sample_rate < 8_000 {
            return Err(Error::InvalidParam(format!(
                "sample_rate must be at least 8000 Hz, got {}",
                self.sample_rate
            )));
        }
        if self.utterances_per_speaker == 0 {
            return Err(Error::InvalidParam("utterances_per_speaker must be positive".into()));
        }
        if !(self.seconds_per_speaker > 0.0) {
            return Err(Error::InvalidParam("seconds_per_speaker must be positive".into()));
        }
        for (name, class) in [("neurotypical", &self.neurotypical), ("dysarthric", &self.dysarthric)] {
            if !(0.0..=1.0).contains(&class.modulation_depth) {
                return Err(Error::InvalidParam(format!(
                    "{name}.modulation_depth must lie in [0, 1], got {}",
                    class.modulation_depth
                )));
            }
            if !(class.pitch_std_hz >= 0.0 && class.pitch_std_hz.is_finite()) {
                return Err(Error::InvalidParam(format!(
                    "{name}.pitch_std_hz must be non-negative, got {}",
                    class.pitch_std_hz
                )));
            }
            if !class.aspiration_snr_db.is_finite() {
                return Err(Error::InvalidParam(format!(
                    "{name}.aspiration_snr_db must be finite, got {}",
                    class.aspiration_snr_db
                )));
            }
        }
        Ok(())
    }
}

/// Synthesize `n_speakers` (half per class, gender-balanced within class)
/// into `out_dir`, writing one 16-bit PCM WAV per utterance plus a
/// `manifest.csv`. Identical `(n_speakers, seed, params)` produce
/// byte-identical files.
pub fn synth_corpus(
    n_speakers: usize,
    seed: u64,
    params: &SynthParams,
    out_dir: &Path,
) -> Result<CorpusManifest> {
    params.validate()?;
    if n_speakers == 0 || n_speakers % 2 != 0 {
        return Err(Error::InvalidParam(format!(
            "n_speakers must be a positive even number, got {n_speakers}"
        )));
    }
    std::fs::create_dir_all(out_dir)?;

    let per_class = n_speakers / 2;
    let specs: Vec<SpeakerSpec> = (0..n_speakers)
        .map(|idx| {
            let label = if idx < per_class { 0 } else { 1 };
            let class_idx = idx % per_class;
            SpeakerSpec {
                id: match label {
                    0 => format!("n{:03}", class_idx + 1),
                    _ => format!("d{:03}", class_idx + 1),
                },
                label,
                gender: if class_idx % 2 == 0 { Gender::F } else { Gender::M },
                seed: mix_seed(seed, &[0x5EAF, label as u64, class_idx as u64]),
            }
        })
        .collect();

    let written: Vec<Result<Vec<ManifestEntry>>> = specs
        .par_iter()
        .map(|spec| synth_speaker(spec, params, out_dir))
        .collect();

    let mut entries = Vec::new();
    for speaker_entries in written {
        entries.extend(speaker_entries?);
    }

    let manifest_path = out_dir.join("manifest.csv");
    let mut writer = csv::Writer::from_path(&manifest_path)?;
    writer.write_record(["speaker_id", "audio_path", "label", "gender"])?;
    for e in &entries {
        let file_name = e.audio_path.file_name().unwrap().to_string_lossy().to_string();
        writer.write_record([
            e.speaker_id.as_str(),
            file_name.as_str(),
            &e.label.to_string(),
            &e.gender.to_string(),
        ])?;
    }
    writer.flush()?;

    Ok(CorpusManifest {
        entries,
        working_rate: params.sample_rate,
    })
}

struct SpeakerSpec {
    id: String,
    label: u8,
    gender: Gender,
    seed: u64,
}

struct Voice {
    base_f0: f64,
    /// Per-speaker multiplicative scatter on the vowel formant table.
    formant_scale: [f64; 3],
}

/// Vowel formant targets (F1, F2, F3) in Hz.
const VOWELS: [[f64; 3]; 5] = [
    [700.0, 1220.0, 2600.0],
    [530.0, 1840.0, 2480.0],
    [320.0, 2290.0, 3010.0],
    [500.0, 1000.0, 2400.0],
    [330.0, 800.0, 2430.0],
];
const FORMANT_BANDWIDTHS: [f64; 3] = [80.0, 100.0, 140.0];

fn synth_speaker(spec: &SpeakerSpec, params: &SynthParams, out_dir: &Path) -> Result<Vec<ManifestEntry>> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let voice = Voice {
        base_f0: match spec.gender {
            Gender::F => rng.random_range(190.0..230.0),
            Gender::M => rng.random_range(110.0..145.0),
        },
        formant_scale: [
            rng.random_range(0.94..1.06),
            rng.random_range(0.94..1.06),
            rng.random_range(0.96..1.04),
        ],
    };
    let class = match spec.label {
        0 => &params.neurotypical,
        _ => &params.dysarthric,
    };

    // Draw utterance durations and rescale so they sum to the per-speaker
    // total.
    let n_utt = params.utterances_per_speaker;
    let raw: Vec<f64> = (0..n_utt).map(|_| rng.random_range(0.85..1.15)).collect();
    let raw_sum: f64 = raw.iter().sum();
    let durations: Vec<f64> = raw
        .iter()
        .map(|r| params.seconds_per_speaker * r / raw_sum)
        .collect();

    let mut entries = Vec::with_capacity(n_utt);
    for (utt_idx, dur) in durations.iter().enumerate() {
        let utt_seed = mix_seed(spec.seed, &[0x07717, utt_idx as u64]);
        let samples = synth_utterance(utt_seed, *dur, params.sample_rate, &voice, class);
        let file_name = format!("{}_u{:02}.wav", spec.id, utt_idx + 1);
        let path = out_dir.join(&file_name);
        write_wav_i16(&path, &samples, params.sample_rate)?;
        entries.push(ManifestEntry {
            speaker_id: spec.id.clone(),
            audio_path: path,
            label: spec.label,
            gender: spec.gender,
        });
    }
    Ok(entries)
}

struct Syllable {
    start: usize,
    len: usize,
    f0: f64,
    formants: [f64; 3],
    harmonics: usize,
}

fn synth_utterance(seed: u64, duration_s: f64, fs: u32, voice: &Voice, class: &ClassParams) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fs_f = fs as f64;
    let n = (duration_s * fs_f).round().max(fs_f * 0.2) as usize;

    let pitch_dist = Normal::new(voice.base_f0, class.pitch_std_hz.max(1e-9)).unwrap();
    let harmonic_ceiling = (0.45 * fs_f).min(7_000.0);

    let mut syllables = Vec::new();
    let mut start = 0usize;
    while start < n {
        let len = ((rng.random_range(0.16..0.30) * fs_f) as usize).min(n - start).max(1);
        let f0 = pitch_dist.sample(&mut rng).clamp(75.0, 330.0);
        let vowel = VOWELS[rng.random_range(0..VOWELS.len())];
        let jitter: [f64; 3] = [
            rng.random_range(0.97..1.03),
            rng.random_range(0.97..1.03),
            rng.random_range(0.98..1.02),
        ];
        let mut formants = [0.0; 3];
        for i in 0..3 {
            formants[i] = (vowel[i] * voice.formant_scale[i] * jitter[i]).min(0.42 * fs_f);
        }
        syllables.push(Syllable {
            start,
            len,
            f0,
            formants,
            harmonics: ((harmonic_ceiling / f0) as usize).clamp(1, 48),
        });
        start += len;
    }

    // Piecewise-linear f0 contour through syllable midpoints.
    let midpoints: Vec<(f64, f64)> = syllables
        .iter()
        .map(|s| (s.start as f64 + s.len as f64 / 2.0, s.f0))
        .collect();

    let env_floor = 1.0 - class.modulation_depth;
    let mut voiced = vec![0.0f64; n];
    let mut envelope = vec![0.0f64; n];
    let mut phase = 0.0f64;

    for (si, syl) in syllables.iter().enumerate() {
        for i in 0..syl.len {
            let idx = syl.start + i;
            let f0_now = interp_track(&midpoints, idx as f64);
            phase += 2.0 * PI * f0_now / fs_f;
            if phase > 2.0 * PI {
                phase -= 2.0 * PI;
            }
            // Harmonic source with 1/h rolloff via complex rotation.
            let rot = num_complex(phase);
            let mut z = rot;
            let mut s = 0.0;
            for h in 1..=syl.harmonics {
                s += z.1 / h as f64;
                z = complex_mul(z, rot);
            }
            voiced[idx] = s;

            let u = (i as f64 + 0.5) / syl.len as f64;
            envelope[idx] = env_floor + (1.0 - env_floor) * (PI * u).sin().powf(0.8);
        }
        let _ = si;
    }

    // Vocal tract: cascade of three resonators over the voiced source and,
    // separately, over aspiration noise so breathiness shares the formant
    // structure.
    let mut tract_params: Vec<([f64; 3], usize, usize)> = Vec::new();
    for syl in &syllables {
        tract_params.push((syl.formants, syl.start, syl.len));
    }
    let voiced_out = formant_cascade(&voiced, &tract_params, fs_f);
    let noise: Vec<f64> = (0..n)
        .map(|_| {
            let g: f64 = Normal::new(0.0, 1.0).unwrap().sample(&mut rng);
            g
        })
        .collect();
    let noise_out = formant_cascade(&noise, &tract_params, fs_f);

    let p_voiced = power(&voiced_out);
    let p_noise = power(&noise_out).max(1e-30);
    let noise_gain = (p_voiced / p_noise).sqrt() / 10f64.powf(class.aspiration_snr_db / 20.0);

    let fade = (0.02 * fs_f) as usize;
    let mut out: Vec<f64> = (0..n)
        .map(|i| envelope[i] * (voiced_out[i] + noise_gain * noise_out[i]))
        .collect();
    for i in 0..fade.min(n) {
        let w = 0.5 - 0.5 * (PI * i as f64 / fade as f64).cos();
        out[i] *= w;
        out[n - 1 - i] *= w;
    }
    let peak = out.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1e-12);
    let scale = 0.35 / peak;
    for v in &mut out {
        *v *= scale;
    }
    out
}

fn interp_track(points: &[(f64, f64)], x: f64) -> f64 {
    match points.iter().position(|&(px, _)| px >= x) {
        Some(0) => points[0].1,
        None => points.last().unwrap().1,
        Some(i) => {
            let (x0, y0) = points[i - 1];
            let (x1, y1) = points[i];
            y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        }
    }
}

/// Cascade of second-order all-pole resonators with per-syllable targets.
fn formant_cascade(input: &[f64], sections: &[([f64; 3], usize, usize)], fs: f64) -> Vec<f64> {
    let mut out = input.to_vec();
    for (fi, bw) in FORMANT_BANDWIDTHS.iter().enumerate() {
        let mut y1 = 0.0;
        let mut y2 = 0.0;
        let mut filtered = vec![0.0; out.len()];
        for &(formants, start, len) in sections {
            let f = formants[fi];
            let c = -(-2.0 * PI * bw / fs).exp();
            let b = 2.0 * (-PI * bw / fs).exp() * (2.0 * PI * f / fs).cos();
            let a = 1.0 - b - c;
            for idx in start..start + len {
                let y = a * out[idx] + b * y1 + c * y2;
                y2 = y1;
                y1 = y;
                filtered[idx] = y;
            }
        }
        out = filtered;
    }
    out
}

fn power(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>() / x.len().max(1) as f64
}

fn num_complex(phase: f64) -> (f64, f64) {
    (phase.cos(), phase.sin())
}

fn complex_mul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn write_wav_i16(path: &PathBuf, samples: &[f64], sample_rate: u32) -> Result<()> {
    let spec = hound::WavSpec {
        channels: 1,
        sample_rate,
        bits_per_sample: 16,
        sample_format: hound::SampleFormat::Int,
    };
    let mut writer = hound::WavWriter::create(path, spec)?;
    for &s in samples {
        let v = (s * 32767.0).round().clamp(-32768.0, 32767.0) as i16;
        writer.write_sample(v)?;
    }
    writer.finalize()?;
    Ok(())
}

/// SplitMix64-style seed derivation so parallel generation stays
/// deterministic and independent of scheduling.
pub(crate) fn mix_seed(base: u64, parts: &[u64]) -> u64 {
    let mut state = base;
    for &p in parts {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15).wrapping_add(p);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        state = z ^ (z >> 31);
    }
    state
}
