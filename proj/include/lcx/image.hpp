#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcx {

// Single-channel square image, row-major, pixel values nominally in [-1, 1].
struct Image {
  int size = 0;
  std::vector<float> pixels;

  Image() = default;
  explicit Image(int side, float fill = 0.0F)
      : size(side), pixels(static_cast<std::size_t>(side) * side, fill) {}

  float& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * size + x]; }
  float at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * size + x]; }

  bool operator==(const Image&) const = default;
};

// 8-bit RGB raster used for strips and overlays.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // width * height * 3

  RgbImage() = default;
  RgbImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, fill) {}

  std::uint8_t* px(int x, int y) { return &data[(static_cast<std::size_t>(y) * width + x) * 3]; }
  const std::uint8_t* px(int x, int y) const {
    return &data[(static_cast<std::size_t>(y) * width + x) * 3];
  }
};

// p_png = round((p + 1) * 127.5), clamped to [0, 255].
std::uint8_t to_byte(float p);
float from_byte(std::uint8_t b);

// Grayscale PNG codec. Decoding accepts 8-bit gray, gray+alpha, RGB and RGBA
// (color inputs are reduced to luma); the result must be square.
std::vector<std::uint8_t> encode_png(const Image& image);
std::vector<std::uint8_t> encode_png(const RgbImage& image);
Image decode_png(std::span<const std::uint8_t> bytes);

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

// PSNR in dB over the [-1, 1] range (peak-to-peak 2). Identical images give +inf.
double psnr(const Image& a, const Image& b);

// Same image after an 8-bit PNG round trip.
Image quantize_8bit(const Image& image);

}  // namespace lcx
