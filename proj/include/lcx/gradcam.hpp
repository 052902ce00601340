#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lcx/image.hpp"
#include "lcx/nets.hpp"
#include "lcx/synthdata.hpp"

namespace lcx::cam {

struct Heatmap {
  int size = 0;
  std::vector<float> values;  // row-major, in [0, 1]
  std::string layer_name;
  int target = 1;

  float at(int x, int y) const { return values[static_cast<std::size_t>(y) * size + x]; }
};

// Last residual block.
std::string default_layer(const nets::ClassifierSpec& spec);

// Channel weights are the spatial mean of d(logit)/d(feature) (the logit is
// negated for target 0); the map is ReLU(sum_c weight_c * feature_c),
// bilinearly upsampled and divided by its maximum. An all-zero map stays zero.
// A negative target selects the predicted class.
Heatmap gradcam(nets::Classifier& classifier, const Image& image, const std::string& layer = "", int target = -1);

using Rgb = std::array<std::uint8_t, 3>;
// 256-entry jet table: r = 1.5 - |4t - 3|, g = 1.5 - |4t - 2|, b = 1.5 - |4t - 1|
// clamped to [0, 1], t = i / 255, scaled by 255 and rounded.
const std::array<Rgb, 256>& colormap();

// (1 - alpha) * gray + alpha * colormap(heat), per channel, rounded.
RgbImage overlay(const Image& image, const Heatmap& heatmap, double alpha = 0.5);

// Rows [row_begin, row_end) around the gap of a rendered sample, widened by margin.
struct RowBand {
  int row_begin = 0;
  int row_end = 0;
};
RowBand gap_rows(const synth::FactorVector& factors, int resolution, int margin);

// (heat mass inside the band / total mass) / (band area / image area); 0 for an all-zero map.
double band_mass_ratio(const Heatmap& heatmap, RowBand band);

}  // namespace lcx::cam
