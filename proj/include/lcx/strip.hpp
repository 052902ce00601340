#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "lcx/gradcam.hpp"
#include "lcx/image.hpp"
#include "lcx/latent.hpp"

namespace lcx {

struct StripLayout {
  int margin = 4;
  int scale = 2;  // pixel replication of frames
};

// Horizontal strip: an optional GradCAM overlay of the input, then one panel per
// frame. Each frame is labelled with its lambda above, and with f (black) and
// f~ (blue) below. Width = panels * frame_width + (panels + 1) * margin.
RgbImage render_strip(const latent::TraversalSeries& series, const std::optional<RgbImage>& gradcam_panel,
                      const StripLayout& layout = {});
void export_strip(const latent::TraversalSeries& series, const std::optional<RgbImage>& gradcam_panel,
                  const std::filesystem::path& path, const StripLayout& layout = {});

// 5x7 bitmap text; supports digits, '.', '-', '+', '=', ' ' and the letters in
// "CAMf" plus 'L' (drawn as a lambda). Unknown characters render blank.
void draw_text(RgbImage& canvas, int x, int y, std::string_view text, cam::Rgb color);
int text_width(std::string_view text);

}  // namespace lcx
