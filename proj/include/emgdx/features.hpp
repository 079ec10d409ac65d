#pragma once

#include <array>
#include <span>
#include <string>

#include "emgdx/decompose.hpp"
#include "emgdx/types.hpp"

namespace emgdx {

// Per-MUAP characteristics in clinical EMG convention:
//  - firing_rate: (n_events − 1) / (t_last − t_first); 0 when < 2 events
//  - amplitude: peak-to-peak, max(w) − min(w)
//  - duration: span of samples with |w| > max(20 µV, 5% of amplitude)
//  - n_phases: baseline (0 µV) crossings inside the duration span, plus one
//  - n_turns: direction reversals inside the span with ≥ 25 µV excursion
//    from the previous counted turn
//  - energy: Σ w² · dt over the span, in µV²·ms
//  - time_spreading: 2 · RMS spread of time about the energy centroid,
//    computed over the span (so it never exceeds duration)
struct MuapFeatures {
  double firing_rate_hz = 0.0;
  double amplitude_uv = 0.0;
  int n_phases = 1;
  double energy_uv2ms = 0.0;
  int n_turns = 0;
  double duration_ms = 0.0;
  double time_spreading_ms = 0.0;
};

inline constexpr int kFeatureCount22 = 22;
inline constexpr int kFeatureCount18 = 18;

// Canonical 22-slot layout: n_muaps, then (min, mean, max) per characteristic
// in the order firing_rate, amplitude, n_phases, energy, n_turns, duration,
// time_spreading.
struct SignalFeatureVector {
  std::array<double, kFeatureCount22> values{};

  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
};

// Names of the 22 canonical slots (for table headers and exports).
const std::array<std::string, kFeatureCount22>& feature_names_22();

// Fixed selection used for classification: drops n_muaps, n_phases_min,
// energy_min and n_turns_min, keeping the canonical order of the rest.
inline constexpr std::array<bool, kFeatureCount22> kSelected18Mask = {
    false,                 // n_muaps
    true,  true,  true,    // firing rate min/mean/max
    true,  true,  true,    // amplitude
    false, true,  true,    // n_phases (min dropped)
    false, true,  true,    // energy (min dropped)
    false, true,  true,    // n_turns (min dropped)
    true,  true,  true,    // duration
    true,  true,  true,    // time spreading
};

MuapFeatures muap_features(std::span<const double> waveform,
                           std::span<const double> event_times_s,
                           double sample_rate_hz);

// Aggregates every template's MuapFeatures into the canonical 22-vector.
// Throws NoMuapsError when the decomposition has no templates.
SignalFeatureVector signal_features(const Decomposition& decomposition,
                                    double sample_rate_hz);

std::array<double, kFeatureCount18> select_18(
    const std::array<double, kFeatureCount22>& values);

}  // namespace emgdx
