//! Band-limited sample-rate reduction with a Kaiser-windowed sinc kernel.

use crate::error::{Error, Result};

/// Stopband attenuation the kernel is designed for, in dB.
const STOPBAND_DB: f64 = 70.0;
/// Fraction of the output Nyquist used as transition band.
const TRANSITION: f64 = 0.15;

/// Resample `samples` from `from_rate` to `to_rate` (downsampling only).
///
/// Equal rates pass the input through untouched. The anti-aliasing
/// low-pass sits just below the new Nyquist, so content above it is
/// attenuated by at least the stopband design target before decimation.
/// Output length is `round(n * to_rate / from_rate)`, which keeps the
/// duration in seconds within one sample period of the input.
pub fn resample(samples: &[f64], from_rate: u32, to_rate: u32) -> Result<Vec<f64>> {
    if from_rate == 0 || to_rate == 0 {
        return Err(Error::Audio("sample rates must be positive".into()));
    }
    if to_rate == from_rate {
        return Ok(samples.to_vec());
    }
    if to_rate > from_rate {
        return Err(Error::Audio(format!(
            "upsampling unsupported: target {to_rate} Hz > source {from_rate} Hz"
        )));
    }
    if samples.is_empty() {
        return Err(Error::Audio("cannot resample an empty signal".into()));
    }

    // Normalized frequencies in cycles per input sample.
    let out_nyquist = to_rate as f64 / (2.0 * from_rate as f64);
    let cutoff = out_nyquist * (1.0 - TRANSITION / 2.0);
    let transition_rad = 2.0 * std::f64::consts::PI * out_nyquist * TRANSITION;

    // Kaiser design relations for the attenuation target.
    let beta = 0.1102 * (STOPBAND_DB - 8.7);
    let taps = ((STOPBAND_DB - 8.0) / (2.285 * transition_rad)).ceil();
    let half_width = (taps / 2.0).ceil().max(4.0);
    let half_width_i = half_width as isize;

    let n_in = samples.len();
    let n_out = ((n_in as u64 * to_rate as u64 + from_rate as u64 / 2) / from_rate as u64) as usize;
    let n_out = n_out.max(1);
    let step = from_rate as f64 / to_rate as f64;
    let i0_beta = bessel_i0(beta);

    let mut out = Vec::with_capacity(n_out);
    for m in 0..n_out {
        let t = m as f64 * step;
        let center = t.floor() as isize;
        let mut acc = 0.0;
        for j in (center - half_width_i)..=(center + half_width_i + 1) {
            if j < 0 || j as usize >= n_in {
                continue;
            }
            let u = t - j as f64;
            if u.abs() > half_width {
                continue;
            }
            let window = bessel_i0(beta * (1.0 - (u / half_width).powi(2)).max(0.0).sqrt()) / i0_beta;
            acc += samples[j as usize] * 2.0 * cutoff * sinc(2.0 * cutoff * u) * window;
        }
        out.push(acc);
    }
    Ok(out)
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        1.0
    } else {
        let px = std::f64::consts::PI * x;
        px.sin() / px
    }
}

/// Modified Bessel function of the first kind, order zero (power series).
fn bessel_i0(x: f64) -> f64 {
    let half = x / 2.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..64 {
        term *= (half / k as f64) * (half / k as f64);
        sum += term;
        if term < sum * 1e-14 {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tone(freq: f64, rate: u32, secs: f64) -> Vec<f64> {
        let n = (secs * rate as f64) as usize;
        (0..n)
            .map(|i| (2.0 * std::f64::consts::PI * freq * i as f64 / rate as f64).sin())
            .collect()
    }

    fn rms(x: &[f64]) -> f64 {
        (x.iter().map(|v| v * v).sum::<f64>() / x.len() as f64).sqrt()
    }

    #[test]
    fn equal_rates_pass_through_bit_identical() {
        let x = tone(1000.0, 16_000, 0.25);
        let y = resample(&x, 16_000, 16_000).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn upsampling_is_rejected() {
        let x = tone(100.0, 8_000, 0.1);
        assert!(resample(&x, 8_000, 16_000).is_err());
    }

    #[test]
    fn output_length_preserves_duration() {
        let x = tone(440.0, 44_100, 1.0);
        let y = resample(&x, 44_100, 16_000).unwrap();
        let in_secs = x.len() as f64 / 44_100.0;
        let out_secs = y.len() as f64 / 16_000.0;
        assert!((in_secs - out_secs).abs() <= 1.0 / 16_000.0);
    }

    #[test]
    fn passband_tone_survives_with_unit_gain() {
        let x = tone(1000.0, 44_100, 0.5);
        let y = resample(&x, 44_100, 16_000).unwrap();
        let interior = &y[800..y.len() - 800];
        let gain = rms(interior) / (1.0 / 2f64.sqrt());
        assert!((gain - 1.0).abs() < 0.01, "passband gain {gain}");
    }

    #[test]
    fn stopband_tone_is_attenuated() {
        // 10 kHz sits above the 8 kHz output Nyquist and must be rejected
        // by the anti-aliasing filter before decimation.
        let x = tone(10_000.0, 44_100, 0.5);
        let y = resample(&x, 44_100, 16_000).unwrap();
        let atten_db = 20.0 * (rms(&y) / rms(&x)).log10();
        assert!(atten_db < -60.0, "stopband attenuation {atten_db} dB");
    }
}
