#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "macgene/bmp.hpp"
#include "macgene/error.hpp"

namespace macgene {

enum class Direction { Horizontal, Vertical, Diagonal };

// Grayscale grid for neighbor-pixel statistics, row-major, top row first.
struct GrayGrid {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> values;

  std::uint8_t at(std::size_t row, std::size_t col) const {
    return values[row * width + col];
  }
};

// Pixel content as a flat R,G,B byte stream, row-major from the top row.
// This is the byte view the image-level metrics operate on; it excludes the
// header and the row padding, which never carry image content.
inline std::vector<std::uint8_t> pixel_bytes(const BmpImage& img) {
  std::vector<std::uint8_t> out;
  out.reserve(img.pixels.size() * 3);
  for (const Rgb& px : img.pixels) {
    out.push_back(px.r);
    out.push_back(px.g);
    out.push_back(px.b);
  }
  return out;
}

// Color reduction for the correlation metrics: floor((R+G+B)/3) per pixel.
inline GrayGrid grayscale(const BmpImage& img) {
  GrayGrid grid;
  grid.width = img.width;
  grid.height = img.height;
  grid.values.reserve(img.pixels.size());
  for (const Rgb& px : img.pixels) {
    grid.values.push_back(static_cast<std::uint8_t>((px.r + px.g + px.b) / 3));
  }
  return grid;
}

// Signal-to-noise ratio between a source and its encrypted counterpart:
// sum(E^2) / sum((E - S)^2), as a plain ratio. No logarithm is applied.
//
// Both sums are accumulated in 64-bit integers and divided once at the end.
// Each term is at most 255^2 < 2^17, so the accumulators are exact for any
// input shorter than 2^47 bytes; up to the stated 2^40-byte bound there are
// seven octaves of headroom.
inline double snr(std::span<const std::uint8_t> source,
                  std::span<const std::uint8_t> encrypted) {
  if (source.size() != encrypted.size()) {
    fail(Errc::LengthMismatch,
         "snr inputs differ in length: " + std::to_string(source.size()) +
             " vs " + std::to_string(encrypted.size()));
  }
  if (source.empty()) {
    fail(Errc::EmptyInput, "snr inputs are empty");
  }
  std::uint64_t energy = 0;
  std::uint64_t noise = 0;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const std::int64_t e = encrypted[i];
    const std::int64_t d = e - source[i];
    energy += static_cast<std::uint64_t>(e * e);
    noise += static_cast<std::uint64_t>(d * d);
  }
  if (noise == 0) {
    fail(Errc::IdenticalSignals, "snr undefined: signals are identical");
  }
  return static_cast<double>(energy) / static_cast<double>(noise);
}

inline std::array<std::uint64_t, 256> histogram(
    std::span<const std::uint8_t> data) {
  std::array<std::uint64_t, 256> counts{};
  for (const std::uint8_t b : data) {
    ++counts[b];
  }
  return counts;
}

// All neighbor pairs in the given direction, no sampling. Horizontal pairs
// each pixel with its right neighbor, Vertical with the one below, Diagonal
// with the one below-right.
inline std::vector<std::pair<double, double>> neighbor_pairs(
    const GrayGrid& image, Direction direction) {
  if (image.width < 2 || image.height < 2) {
    fail(Errc::DegenerateImage,
         "neighbor pairs need at least a 2x2 image, got " +
             std::to_string(image.width) + "x" + std::to_string(image.height));
  }
  const std::size_t dr = direction == Direction::Horizontal ? 0 : 1;
  const std::size_t dc = direction == Direction::Vertical ? 0 : 1;
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve((image.height - dr) * (image.width - dc));
  for (std::size_t r = 0; r + dr < image.height; ++r) {
    for (std::size_t c = 0; c + dc < image.width; ++c) {
      pairs.emplace_back(static_cast<double>(image.at(r, c)),
                         static_cast<double>(image.at(r + dr, c + dc)));
    }
  }
  return pairs;
}

// Pearson correlation coefficient over value pairs:
// sum((x - mx)(y - my)) / sqrt(sum((x - mx)^2) * sum((y - my)^2)).
inline double correlation(std::span<const std::pair<double, double>> pairs) {
  if (pairs.size() < 2) {
    fail(Errc::TooFewPairs, "correlation needs at least two pairs");
  }
  const auto n = static_cast<double>(pairs.size());
  double mean_x = 0;
  double mean_y = 0;
  for (const auto& [x, y] : pairs) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= n;
  mean_y /= n;

  double cov = 0;
  double var_x = 0;
  double var_y = 0;
  for (const auto& [x, y] : pairs) {
    cov += (x - mean_x) * (y - mean_y);
    var_x += (x - mean_x) * (x - mean_x);
    var_y += (y - mean_y) * (y - mean_y);
  }
  if (var_x == 0 || var_y == 0) {
    fail(Errc::ZeroVariance, "correlation undefined: a series is constant");
  }
  return cov / std::sqrt(var_x * var_y);
}

// Fraction of positions where the two sequences differ.
inline double diff_ratio(std::span<const std::uint8_t> a,
                         std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) {
    fail(Errc::LengthMismatch,
         "diff_ratio inputs differ in length: " + std::to_string(a.size()) +
             " vs " + std::to_string(b.size()));
  }
  if (a.empty()) {
    fail(Errc::EmptyInput, "diff_ratio inputs are empty");
  }
  std::size_t differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    differing += a[i] != b[i] ? 1 : 0;
  }
  return static_cast<double>(differing) / static_cast<double>(a.size());
}

struct AnalysisReport {
  double snr = 0;
  std::array<std::uint64_t, 256> histogram_source{};
  std::array<std::uint64_t, 256> histogram_encrypted{};
  std::optional<double> corr_horizontal;
  std::optional<double> corr_vertical;
  std::optional<double> corr_diagonal;
  double diff_ratio = 0;
};

// One CSV line per byte value, 0 through 255 in order.
inline std::string histogram_csv(const std::array<std::uint64_t, 256>& counts) {
  std::string out;
  for (std::size_t value = 0; value < counts.size(); ++value) {
    out += std::to_string(value);
    out += ',';
    out += std::to_string(counts[value]);
    out += '\n';
  }
  return out;
}

// Flat key/value report document. Field order is fixed and values use six
// decimal places, so identical inputs render identical documents.
inline std::string render_report(const AnalysisReport& report) {
  char buf[64];
  std::string out = "{\n";
  const auto field = [&](const char* name, double value, bool last = false) {
    std::snprintf(buf, sizeof(buf), "  \"%s\": %.6f%s\n", name, value,
                  last ? "" : ",");
    out += buf;
  };
  field("snr", report.snr);
  if (report.corr_horizontal) field("corr_horizontal", *report.corr_horizontal);
  if (report.corr_vertical) field("corr_vertical", *report.corr_vertical);
  if (report.corr_diagonal) field("corr_diagonal", *report.corr_diagonal);
  field("diff_ratio", report.diff_ratio, true);
  out += "}\n";
  return out;
}

}  // namespace macgene
