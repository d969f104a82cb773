// Copyright 2026 rASD Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RASD_DSP_DSP_H_
#define RASD_DSP_DSP_H_

#include <complex>
#include <cstdint>
#include <vector>

#include "rasd/core/tensor.h"

namespace rasd {
namespace dsp {

inline constexpr int kSampleRate = 16000;
inline constexpr int kWindowSize = 1022;
inline constexpr int kHop = 160;
inline constexpr int kFftSize = 1022;
inline constexpr int kFullFreqBins = kFftSize / 2 + 1;  // 512
inline constexpr int kNetFreqBins = 256;
inline constexpr double kMaskEps = 1e-8;

// Time-domain audio, nominal range [-1, 1], fixed 16 kHz.
struct Waveform {
  std::vector<double> samples;
  int sample_rate_hz = kSampleRate;

  int64_t NumSamples() const { return static_cast<int64_t>(samples.size()); }
  double DurationSeconds() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

// Centered STFT bins, 512 x T. num_samples keeps the original signal length
// so the inverse transform can trim the reflection padding.
struct ComplexSpectrogram {
  core::Tensor<std::complex<double>> bins;  // (F, T)
  int window_size = kWindowSize;
  int hop = kHop;
  int fft_size = kFftSize;
  int64_t num_samples = 0;

  int64_t freq_bins() const { return bins.dim(0); }
  int64_t frames() const { return bins.dim(1); }
};

// Nonnegative magnitude spectrogram (F, T). F is 512 raw, 256 after
// frequency resampling.
using MagSpectrogram = core::Tensor<double>;

// Ratio mask with entries clamped to [0, 1].
using RatioMask = core::Tensor<double>;

// Number of centered frames for a signal of `num_samples` samples.
int64_t NumStftFrames(int64_t num_samples);

// Centered STFT with a periodic Hann window and reflection padding.
// Throws InvalidInputError on an empty signal.
ComplexSpectrogram Stft(const Waveform& w);

// Weighted overlap-add inverse of Stft. Reconstruction is exact (up to
// rounding) for unmodified spectrograms. Throws NumericalError if the
// window normalization vanishes over the requested output range.
Waveform Istft(const ComplexSpectrogram& s);

// Element-wise modulus.
MagSpectrogram Magnitude(const ComplexSpectrogram& s);

// Linear interpolation over bin index along the frequency axis. Works in
// both directions; ResampleFreq below enforces the downsampling contract.
MagSpectrogram InterpFreqLinear(const MagSpectrogram& m, int64_t target_bins);

// 512 -> 256 frequency resampling. Throws ConfigError when target_bins
// exceeds the source resolution.
MagSpectrogram ResampleFreq(const MagSpectrogram& m, int64_t target_bins);

// samples = speech + alpha * noise. alpha = 0 returns speech bit-exactly.
// Throws InvalidInputError on length or sample-rate mismatch.
Waveform Mix(const Waveform& speech, const Waveform& noise, double alpha);

// Groundtruth ratio mask: clamp(mag_speech / (mag_mix + 1e-8), 0, 1).
// When raw_out is non-null it receives the un-clamped ratios.
RatioMask ComputeRatioMask(const MagSpectrogram& mag_speech,
                           const MagSpectrogram& mag_mix,
                           MagSpectrogram* raw_out = nullptr);

// Element-wise mask application.
MagSpectrogram ApplyMask(const RatioMask& mask, const MagSpectrogram& mag_mix);

// Rebuilds a waveform from a (possibly 256-bin) mask and the mixture
// spectrogram, reusing the mixture phase.
Waveform ReconstructFromMask(const RatioMask& mask,
                             const ComplexSpectrogram& mix);

// 10 log10(sum ref^2 / sum (ref - est)^2) over the common length.
double SnrDb(const std::vector<double>& ref, const std::vector<double>& est);

}  // namespace dsp
}  // namespace rasd

#endif  // RASD_DSP_DSP_H_
