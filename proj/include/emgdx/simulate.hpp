#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "emgdx/rng.hpp"
#include "emgdx/types.hpp"

namespace emgdx {

// Synthetic tracing generator. Per-class defaults encode the clinical
// directions: neuropathic units are fewer, larger, longer and faster-firing
// with a nascent-unit fraction; myopathic units are many, small and brief.
struct SimConfig {
  Label label = Label::Healthy;
  double duration_s = 20.0;
  double sample_rate_hz = 24000.0;

  int n_units_min = 3;
  int n_units_max = 8;
  double amp_min_uv = 300.0;
  double amp_max_uv = 900.0;
  double amp_multiplier_min = 1.0;  // class multiplier on the base draw
  double amp_multiplier_max = 1.0;
  double duration_scale_min = 1.0;
  double duration_scale_max = 1.0;
  double base_duration_min_ms = 4.0;
  double base_duration_max_ms = 7.0;
  double firing_min_hz = 8.0;
  double firing_max_hz = 15.0;
  double isi_cv = 0.15;
  double polyphasic_fraction = 0.05;

  double snr_db = 20.0;
  std::optional<double> noise_sigma_uv;  // overrides snr_db when set

  std::uint64_t seed = 0;

  // When non-empty, fixes the unit count and per-unit peak-to-peak
  // amplitudes instead of drawing them (waveform shapes stay seeded).
  std::vector<double> unit_amplitudes_uv;

  static SimConfig for_label(Label label, std::uint64_t seed);
  void validate() const;
};

struct SimOutput {
  Signal signal;
  FiringAnnotation truth;
  std::vector<std::vector<double>> true_templates;  // index k-1 is unit k
  double noise_sigma_uv = 0.0;
};

struct TemplateParams {
  double amplitude_uv = 600.0;  // peak-to-peak target, matched exactly
  double duration_ms = 5.0;     // threshold-based duration target
  int n_lobes = 3;
};

// Sum of alternating-sign Gaussian lobes, peak-to-peak normalized to the
// requested amplitude, |peak| at the center sample, near-zero edges. Throws
// on a non-positive amplitude.
std::vector<double> make_template(const TemplateParams& params,
                                  double sample_rate_hz, Rng& rng);

// Renewal train: Gaussian inter-spike intervals (mean 1/rate, sd cv/rate,
// floored at 10 ms), random initial phase, events inside [0, duration].
std::vector<double> make_firing_train(double firing_rate_hz, double isi_cv,
                                      double duration_s, Rng& rng);

SimOutput simulate(const SimConfig& config);

}  // namespace emgdx
