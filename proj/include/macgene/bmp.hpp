#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "macgene/cipher.hpp"
#include "macgene/error.hpp"
#include "macgene/mac_key.hpp"

namespace macgene {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Normalized view of an uncompressed 24-bit bitmap. Pixels are row-major
// with the top row first, regardless of the on-disk bottom-up layout.
struct BmpImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t pixel_data_offset = 0;
  std::size_t row_stride = 0;  // bytes per stored row, multiple of 4
  std::vector<Rgb> pixels;

  friend bool operator==(const BmpImage&, const BmpImage&) = default;

  Rgb& at(std::size_t row, std::size_t col) {
    return pixels[row * width + col];
  }
  const Rgb& at(std::size_t row, std::size_t col) const {
    return pixels[row * width + col];
  }
};

inline constexpr std::size_t kBmpHeaderBytes = 54;  // file header + info header

inline std::size_t bmp_row_stride(std::size_t width) {
  return (width * 3 + 3) & ~std::size_t{3};
}

// Blank image in the canonical layout produced by write_bmp.
inline BmpImage make_bmp_image(std::size_t width, std::size_t height) {
  BmpImage img;
  img.width = width;
  img.height = height;
  img.pixel_data_offset = kBmpHeaderBytes;
  img.row_stride = bmp_row_stride(width);
  img.pixels.resize(width * height);
  return img;
}

namespace detail {

inline std::uint32_t load_le32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 |
         static_cast<std::uint32_t>(p[3]) << 24;
}

inline std::uint16_t load_le16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

inline void store_le32(std::uint32_t v, std::uint8_t* p) {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
  p[2] = static_cast<std::uint8_t>(v >> 16);
  p[3] = static_cast<std::uint8_t>(v >> 24);
}

inline void store_le16(std::uint16_t v, std::uint8_t* p) {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
}

}  // namespace detail

// Parses an uncompressed 24-bit BI_RGB bitmap. Positive heights (bottom-up
// files) and negative heights (top-down) are both accepted; the result is
// always top-down. On-disk BGR is exposed as (R,G,B).
inline BmpImage parse_bmp(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'B' || data[1] != 'M') {
    fail(Errc::BadSignature, "not a BMP file: missing 'BM' signature");
  }
  if (data.size() < kBmpHeaderBytes) {
    fail(Errc::Truncated, "BMP header truncated: " +
                              std::to_string(data.size()) + " bytes");
  }
  const std::uint32_t offset = detail::load_le32(data.data() + 10);
  const std::uint32_t info_size = detail::load_le32(data.data() + 14);
  const auto width = static_cast<std::int32_t>(detail::load_le32(data.data() + 18));
  const auto height = static_cast<std::int32_t>(detail::load_le32(data.data() + 22));
  const std::uint16_t planes = detail::load_le16(data.data() + 26);
  const std::uint16_t bit_count = detail::load_le16(data.data() + 28);
  const std::uint32_t compression = detail::load_le32(data.data() + 30);

  if (bit_count != 24 || planes != 1) {
    fail(Errc::UnsupportedBitDepth,
         "unsupported BMP layout: " + std::to_string(bit_count) +
             " bits per pixel, " + std::to_string(planes) + " plane(s)");
  }
  if (compression != 0) {
    fail(Errc::UnsupportedCompression,
         "unsupported BMP compression " + std::to_string(compression));
  }
  if (info_size < 40) {
    fail(Errc::Truncated,
         "BMP info header too small: " + std::to_string(info_size) + " bytes");
  }
  const bool top_down = height < 0;
  const std::int64_t abs_height = top_down ? -static_cast<std::int64_t>(height)
                                           : static_cast<std::int64_t>(height);
  if (width < 1 || abs_height < 1) {
    fail(Errc::Truncated, "BMP declares degenerate dimensions " +
                              std::to_string(width) + "x" +
                              std::to_string(height));
  }

  BmpImage img;
  img.width = static_cast<std::size_t>(width);
  img.height = static_cast<std::size_t>(abs_height);
  img.pixel_data_offset = offset;
  img.row_stride = bmp_row_stride(img.width);

  if (offset < 14 + info_size ||
      offset + img.row_stride * img.height > data.size()) {
    fail(Errc::Truncated, "BMP pixel array extends past end of file");
  }

  img.pixels.resize(img.width * img.height);
  for (std::size_t row = 0; row < img.height; ++row) {
    const std::size_t disk_row = top_down ? row : img.height - 1 - row;
    const std::uint8_t* src = data.data() + offset + disk_row * img.row_stride;
    for (std::size_t col = 0; col < img.width; ++col) {
      img.at(row, col) = Rgb{src[col * 3 + 2], src[col * 3 + 1], src[col * 3]};
    }
  }
  return img;
}

// Emits the canonical on-disk form: 54-byte header block, bottom-up rows,
// zero pad bytes. The header fields are recomputed from width and height.
inline std::vector<std::uint8_t> write_bmp(const BmpImage& img) {
  const std::size_t stride = bmp_row_stride(img.width);
  const std::size_t file_size = kBmpHeaderBytes + stride * img.height;
  std::vector<std::uint8_t> out(file_size, 0);

  out[0] = 'B';
  out[1] = 'M';
  detail::store_le32(static_cast<std::uint32_t>(file_size), out.data() + 2);
  detail::store_le32(kBmpHeaderBytes, out.data() + 10);
  detail::store_le32(40, out.data() + 14);
  detail::store_le32(static_cast<std::uint32_t>(img.width), out.data() + 18);
  detail::store_le32(static_cast<std::uint32_t>(img.height), out.data() + 22);
  detail::store_le16(1, out.data() + 26);
  detail::store_le16(24, out.data() + 28);
  detail::store_le32(static_cast<std::uint32_t>(stride * img.height),
                     out.data() + 34);

  for (std::size_t row = 0; row < img.height; ++row) {
    const std::size_t disk_row = img.height - 1 - row;
    std::uint8_t* dst = out.data() + kBmpHeaderBytes + disk_row * stride;
    for (std::size_t col = 0; col < img.width; ++col) {
      const Rgb& px = img.at(row, col);
      dst[col * 3] = px.b;
      dst[col * 3 + 1] = px.g;
      dst[col * 3 + 2] = px.r;
    }
  }
  return out;
}

namespace detail {

inline std::vector<std::uint8_t> recode_bmp_body(
    std::span<const std::uint8_t> data, const MacKey& key, bool encrypting) {
  const BmpImage img = parse_bmp(data);  // validates layout, locates the body
  std::vector<std::uint8_t> out(data.begin(), data.end());
  const std::span<const std::uint8_t> body =
      data.subspan(img.pixel_data_offset);
  const auto recoded = encrypting ? encrypt(body, key, CipherMode::Raw)
                                  : decrypt(body, key, CipherMode::Raw);
  std::copy(recoded.begin(), recoded.end(),
            out.begin() + static_cast<std::ptrdiff_t>(img.pixel_data_offset));
  return out;
}

}  // namespace detail

// Encrypts everything from the pixel-data offset to end of file in Raw mode,
// leaving the header bytes untouched. The result is still a viewable BMP of
// the same dimensions, just scrambled.
inline std::vector<std::uint8_t> encrypt_bmp_body(
    std::span<const std::uint8_t> data, const MacKey& key) {
  return detail::recode_bmp_body(data, key, true);
}

inline std::vector<std::uint8_t> decrypt_bmp_body(
    std::span<const std::uint8_t> data, const MacKey& key) {
  return detail::recode_bmp_body(data, key, false);
}

}  // namespace macgene
