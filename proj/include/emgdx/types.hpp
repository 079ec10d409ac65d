#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace emgdx {

// Diagnostic classes, in canonical index order. Confusion matrices, class
// priors and tie-breaking all use this order.
enum class Label : int { Healthy = 0, Myopathic = 1, Neuropathic = 2 };

inline constexpr std::array<Label, 3> kAllLabels = {
    Label::Healthy, Label::Myopathic, Label::Neuropathic};
inline constexpr int kNumClasses = 3;

std::string to_string(Label label);
Label label_from_string(const std::string& text);  // throws UnknownLabelError

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptySignalError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct UnknownLabelError : Error {
  using Error::Error;
};
struct NoMuapsError : Error {
  using Error::Error;
};
struct FormatVersionError : Error {
  using Error::Error;
};

// A uniformly sampled voltage trace in microvolts.
struct Signal {
  std::string id;
  std::vector<double> samples;  // µV
  double sample_rate_hz = 24000.0;
  std::optional<Label> label;
  std::string muscle;  // optional tag; empty = unset

  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

struct FiringEvent {
  double time_s = 0.0;
  int unit_id = 0;
};

inline bool operator==(const FiringEvent& a, const FiringEvent& b) {
  return a.time_s == b.time_s && a.unit_id == b.unit_id;
}

// (time, unit) events sorted ascending by time.
struct FiringAnnotation {
  std::vector<FiringEvent> events;

  // Sorts by (time, unit id); call after bulk edits.
  void sort();
  bool is_sorted() const;
  int max_unit_id() const;
  std::vector<double> times_of(int unit_id) const;
  // Remaps the distinct unit ids to a contiguous 1..K, ordered by ascending
  // original id.
  void normalize_unit_ids();
};

struct ManifestEntry {
  std::string signal_path;
  Label label = Label::Healthy;
  std::string muscle;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;

  std::array<int, kNumClasses> class_counts() const;
};

}  // namespace emgdx
