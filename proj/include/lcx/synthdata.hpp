#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lcx/image.hpp"

// Procedural knee-joint-like corpus with known generative factors.
//
// Each image shows two bright "bone" masses (top and bottom) separated by a
// dark horizontal joint gap of gap_width * resolution / 4 pixels, with
// bump-shaped protrusions near the lateral margins and low-amplitude value
// noise. Label 1 (severe) means the gap is narrower than kGapThreshold.
namespace lcx::synth {

inline constexpr double kGapThreshold = 0.45;
// Peak texture amplitude inside bone, in pixel units of the [-1, 1] range.
inline constexpr double kTextureAmplitude = 0.12;
inline constexpr float kBoneLevel = 0.8F;
inline constexpr float kBackgroundLevel = -0.8F;

struct FactorVector {
  double gap_width = 0.5;       // [0, 1]
  double bump_amplitude = 0.0;  // [0, 1]
  double x_offset = 0.0;        // [-0.1, 0.1]
  double y_offset = 0.0;        // [-0.1, 0.1]
  std::uint64_t texture_seed = 0;

  // Throws RangeError naming the offending field.
  void validate() const;
  int label() const { return gap_width < kGapThreshold ? 1 : 0; }

  bool operator==(const FactorVector&) const = default;
};

struct LabeledSample {
  Image image;
  int label = 0;
  FactorVector factors;  // kept for oracle checks only
};

struct DatasetSplit {
  std::vector<LabeledSample> train;
  std::vector<LabeledSample> val;
  std::vector<LabeledSample> test;
  std::uint64_t generation_seed = 0;
  int resolution = 0;
  std::string config_digest;
};

bool valid_resolution(int resolution);

LabeledSample generate_sample(const FactorVector& factors, int resolution);

// Factors are drawn uniformly from their ranges on per-split sub-streams of
// `seed`; each split is exactly balanced (rejection sampling on the label).
DatasetSplit generate_dataset(int n_train, int n_val, int n_test, std::uint64_t seed, int resolution);

std::string dataset_digest(int n_train, int n_val, int n_test, std::uint64_t seed, int resolution);

// Joint-gap geometry of a rendered sample, in pixel coordinates (rows).
struct GapBand {
  double top = 0.0;     // upper boundary of the gap
  double bottom = 0.0;  // lower boundary of the gap
};
GapBand gap_band(const FactorVector& factors, int resolution);

// Estimates gap_width from pixels. Thresholds the image at 0 and, for every
// column of the central band, finds the dark vertical run between the two
// masses; the run's width is its dark area (run rows plus the two boundary
// rows, each weighted by its darkness), which is exact for box-filtered edges
// and stays meaningful for sub-pixel gaps. Returns the median width
// normalized by resolution / 4, clamped to [0, 1]; std::nullopt
// ("unmeasurable") when fewer than half the band columns show a two-mass
// structure or the frame has no background.
std::optional<double> measure_gap(const Image& image);

// Directory of 8-bit PNGs plus manifest.json (filename, split, label,
// factors, seed, config digest).
void export_dataset(const DatasetSplit& split, const std::filesystem::path& dir);
DatasetSplit import_dataset(const std::filesystem::path& dir);

double label_mean(const std::vector<LabeledSample>& samples);

}  // namespace lcx::synth
