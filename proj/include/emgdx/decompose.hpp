#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "emgdx/types.hpp"

namespace emgdx {

// One repeating motor-unit action potential shape. The waveform is a
// fixed-length window in µV with the |peak| at the center sample; all
// templates of one decomposition share the same window length.
struct MuapTemplate {
  int unit_id = 0;
  std::vector<double> waveform;
  int occurrences = 0;
};

struct Decomposition {
  std::vector<MuapTemplate> templates;  // unit_id k stored at index k-1
  FiringAnnotation annotation;
  double residual_energy_fraction = 0.0;

  const MuapTemplate* find_template(int unit_id) const;
};

struct DecomposeConfig {
  double window_ms = 6.0;
  double detect_k = 5.0;          // detection threshold in noise sigmas
  double match_threshold = 0.3;   // max normalized residual ‖w−t‖²/‖w‖²
  double merge_corr = 0.95;       // min normalized cross-correlation to merge
  int min_occurrences = 5;
  double rate_min_hz = 2.0;
  double rate_max_hz = 50.0;
  double highpass_hz = 100.0;
  bool peel_off = true;
  double refractory_ms = 10.0;

  void validate() const;  // throws Error on out-of-range values
};

// Robust noise scale: median(|x − median(x)|) / 0.6745.
double estimate_noise_sigma(std::span<const double> samples);

// Single-pole high-pass applied forward then backward (zero phase).
std::vector<double> highpass_filtfilt(std::span<const double> samples,
                                      double sample_rate_hz,
                                      double cutoff_hz);

// Indices of local maxima of the |high-passed| signal above
// detect_k · sigma. Each returned index is the argmax of its own window, so
// indices are always separated by more than half a window; peaks too close
// to either edge for a full window are skipped.
std::vector<std::size_t> detect_spikes(const Signal& signal,
                                       const DecomposeConfig& config = {});

// Full decomposition: detect, cluster into templates by normalized residual,
// merge near-duplicates, drop implausible templates, optionally peel off the
// reconstruction to recover superimposed firings. Deterministic.
Decomposition decompose(const Signal& signal, const DecomposeConfig& config = {});

// Sum of each template placed at each of its firing times (window centers at
// round(time·rate)); additive on overlaps, clipped at the signal edges.
// Throws if an event center falls outside [0, length).
Signal reconstruct(const Decomposition& decomposition, std::size_t length,
                   double sample_rate_hz);

// Template dump: one waveform per line, comma-separated µV; line k is unit k.
void write_templates(const std::vector<MuapTemplate>& templates,
                     const std::string& path);
std::vector<MuapTemplate> read_templates(const std::string& path);

}  // namespace emgdx
