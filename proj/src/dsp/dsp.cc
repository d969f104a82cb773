// Copyright 2026 rASD Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "rasd/dsp/dsp.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

#include "rasd/common/error.h"

namespace rasd {
namespace dsp {
namespace {

constexpr double kPi = 3.14159265358979323846;

// FFTW planning is not thread-safe; execution with per-call buffers is.
std::mutex& PlanMutex() {
  static std::mutex m;
  return m;
}

std::vector<double> HannPeriodic(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / n);
  }
  return w;
}

// Reflection ("mirror") index without edge repetition, period 2(N-1).
int64_t MirrorIndex(int64_t i, int64_t n) {
  if (n == 1) return 0;
  const int64_t period = 2 * (n - 1);
  i = i % period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

struct FftwPlanGuard {
  fftw_plan plan = nullptr;
  ~FftwPlanGuard() {
    if (plan) {
      std::lock_guard<std::mutex> lock(PlanMutex());
      fftw_destroy_plan(plan);
    }
  }
};

struct FftwBuffer {
  void* p = nullptr;
  explicit FftwBuffer(size_t bytes) : p(fftw_malloc(bytes)) {}
  ~FftwBuffer() { fftw_free(p); }
};

}  // namespace

int64_t NumStftFrames(int64_t num_samples) {
  RASD_CHECK(num_samples > 0, InvalidInputError, "empty signal");
  return 1 + num_samples / kHop;
}

ComplexSpectrogram Stft(const Waveform& w) {
  RASD_CHECK(!w.samples.empty(), InvalidInputError, "stft: empty signal");
  RASD_CHECK(w.sample_rate_hz == kSampleRate, InvalidInputError,
             "stft: expected 16 kHz audio");
  const int64_t n = w.NumSamples();
  const int64_t frames = NumStftFrames(n);
  const int64_t pad = kWindowSize / 2;  // 511
  const std::vector<double> window = HannPeriodic(kWindowSize);

  ComplexSpectrogram out;
  out.bins = core::Tensor<std::complex<double>>({kFullFreqBins, frames});
  out.num_samples = n;

  FftwBuffer in_buf(sizeof(double) * kFftSize);
  FftwBuffer out_buf(sizeof(fftw_complex) * kFullFreqBins);
  double* in = static_cast<double*>(in_buf.p);
  fftw_complex* spec = static_cast<fftw_complex*>(out_buf.p);

  FftwPlanGuard guard;
  {
    std::lock_guard<std::mutex> lock(PlanMutex());
    guard.plan =
        fftw_plan_dft_r2c_1d(kFftSize, in, spec, FFTW_ESTIMATE);
  }
  RASD_CHECK(guard.plan != nullptr, NumericalError, "fftw planning failed");

  for (int64_t m = 0; m < frames; ++m) {
    const int64_t start = m * kHop - pad;  // in original-signal coordinates
    for (int64_t k = 0; k < kWindowSize; ++k) {
      in[k] = w.samples[MirrorIndex(start + k, n)] * window[k];
    }
    fftw_execute(guard.plan);
    for (int64_t f = 0; f < kFullFreqBins; ++f) {
      out.bins.at(f, m) = std::complex<double>(spec[f][0], spec[f][1]);
    }
  }
  return out;
}

Waveform Istft(const ComplexSpectrogram& s) {
  RASD_CHECK(s.freq_bins() == kFullFreqBins, InvalidInputError,
             "istft: expected 512 frequency bins");
  RASD_CHECK(s.num_samples > 0, InvalidInputError,
             "istft: spectrogram carries no signal length");
  const int64_t frames = s.frames();
  const int64_t pad = kWindowSize / 2;
  const std::vector<double> window = HannPeriodic(kWindowSize);

  const int64_t padded_len = (frames - 1) * kHop + kWindowSize;
  std::vector<double> acc(padded_len, 0.0);
  std::vector<double> den(padded_len, 0.0);

  FftwBuffer in_buf(sizeof(fftw_complex) * kFullFreqBins);
  FftwBuffer out_buf(sizeof(double) * kFftSize);
  fftw_complex* spec = static_cast<fftw_complex*>(in_buf.p);
  double* frame = static_cast<double*>(out_buf.p);

  FftwPlanGuard guard;
  {
    std::lock_guard<std::mutex> lock(PlanMutex());
    guard.plan =
        fftw_plan_dft_c2r_1d(kFftSize, spec, frame, FFTW_ESTIMATE);
  }
  RASD_CHECK(guard.plan != nullptr, NumericalError, "fftw planning failed");

  for (int64_t m = 0; m < frames; ++m) {
    for (int64_t f = 0; f < kFullFreqBins; ++f) {
      const std::complex<double> v = s.bins.at(f, m);
      spec[f][0] = v.real();
      spec[f][1] = v.imag();
    }
    fftw_execute(guard.plan);
    const int64_t off = m * kHop;
    for (int64_t k = 0; k < kWindowSize; ++k) {
      acc[off + k] += window[k] * frame[k] / kFftSize;
      den[off + k] += window[k] * window[k];
    }
  }

  Waveform out;
  out.samples.resize(s.num_samples);
  for (int64_t i = 0; i < s.num_samples; ++i) {
    const int64_t j = i + pad;
    RASD_CHECK(j < padded_len && den[j] > 1e-12, NumericalError,
               "istft: window normalization vanished");
    out.samples[i] = acc[j] / den[j];
  }
  return out;
}

MagSpectrogram Magnitude(const ComplexSpectrogram& s) {
  MagSpectrogram m({s.freq_bins(), s.frames()});
  for (int64_t i = 0; i < m.size(); ++i) m[i] = std::abs(s.bins[i]);
  return m;
}

MagSpectrogram InterpFreqLinear(const MagSpectrogram& m, int64_t target_bins) {
  RASD_CHECK(m.rank() == 2, InvalidInputError, "expected (F, T) spectrogram");
  RASD_CHECK(target_bins >= 1, InvalidInputError, "target_bins must be >= 1");
  const int64_t src = m.dim(0);
  const int64_t t = m.dim(1);
  MagSpectrogram out({target_bins, t});
  if (target_bins == 1 || src == 1) {
    for (int64_t p = 0; p < target_bins; ++p)
      for (int64_t q = 0; q < t; ++q) out.at(p, q) = m.at(0, q);
    return out;
  }
  const double scale =
      static_cast<double>(src - 1) / static_cast<double>(target_bins - 1);
  for (int64_t p = 0; p < target_bins; ++p) {
    const double x = p * scale;
    int64_t lo = static_cast<int64_t>(x);
    if (lo >= src - 1) lo = src - 2;
    const double frac = x - lo;
    for (int64_t q = 0; q < t; ++q) {
      out.at(p, q) = (1.0 - frac) * m.at(lo, q) + frac * m.at(lo + 1, q);
    }
  }
  return out;
}

MagSpectrogram ResampleFreq(const MagSpectrogram& m, int64_t target_bins) {
  RASD_CHECK(m.rank() == 2, InvalidInputError, "expected (F, T) spectrogram");
  RASD_CHECK(target_bins <= m.dim(0), ConfigError,
             "resample_freq: upsampling is unsupported");
  return InterpFreqLinear(m, target_bins);
}

Waveform Mix(const Waveform& speech, const Waveform& noise, double alpha) {
  RASD_CHECK(speech.sample_rate_hz == noise.sample_rate_hz, InvalidInputError,
             "mix: sample rate mismatch");
  RASD_CHECK(speech.samples.size() == noise.samples.size(), InvalidInputError,
             "mix: length mismatch");
  if (alpha == 0.0) return speech;  // bit-identical, per the test protocol
  Waveform out;
  out.sample_rate_hz = speech.sample_rate_hz;
  out.samples.resize(speech.samples.size());
  for (size_t i = 0; i < out.samples.size(); ++i) {
    out.samples[i] = speech.samples[i] + alpha * noise.samples[i];
  }
  return out;
}

RatioMask ComputeRatioMask(const MagSpectrogram& mag_speech,
                           const MagSpectrogram& mag_mix,
                           MagSpectrogram* raw_out) {
  RASD_CHECK(mag_speech.SameShape(mag_mix), InvalidInputError,
             "ratio_mask: shape mismatch");
  RatioMask mask(mag_speech.shape());
  if (raw_out) *raw_out = MagSpectrogram(mag_speech.shape());
  for (int64_t i = 0; i < mask.size(); ++i) {
    const double raw = mag_speech[i] / (mag_mix[i] + kMaskEps);
    if (raw_out) (*raw_out)[i] = raw;
    mask[i] = std::clamp(raw, 0.0, 1.0);
  }
  return mask;
}

MagSpectrogram ApplyMask(const RatioMask& mask, const MagSpectrogram& mag_mix) {
  RASD_CHECK(mask.SameShape(mag_mix), InvalidInputError,
             "apply_mask: shape mismatch");
  MagSpectrogram out(mask.shape());
  for (int64_t i = 0; i < out.size(); ++i) out[i] = mask[i] * mag_mix[i];
  return out;
}

Waveform ReconstructFromMask(const RatioMask& mask,
                             const ComplexSpectrogram& mix) {
  RASD_CHECK(mask.dim(1) <= mix.frames(), InvalidInputError,
             "reconstruct: mask has more frames than the mixture");
  RatioMask full = mask.dim(0) == mix.freq_bins()
                       ? mask
                       : InterpFreqLinear(mask, mix.freq_bins());
  ComplexSpectrogram masked = mix;
  for (int64_t f = 0; f < mix.freq_bins(); ++f) {
    for (int64_t t = 0; t < mix.frames(); ++t) {
      const double g = t < full.dim(1) ? full.at(f, t) : 0.0;
      masked.bins.at(f, t) *= g;
    }
  }
  return Istft(masked);
}

double SnrDb(const std::vector<double>& ref, const std::vector<double>& est) {
  const size_t n = std::min(ref.size(), est.size());
  RASD_CHECK(n > 0, InvalidInputError, "snr: empty input");
  double sig = 0.0;
  double err = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sig += ref[i] * ref[i];
    const double d = ref[i] - est[i];
    err += d * d;
  }
  if (err == 0.0) return 300.0;  // exact reconstruction; report a ceiling
  if (sig == 0.0) return -300.0;
  return 10.0 * std::log10(sig / err);
}

}  // namespace dsp
}  // namespace rasd
