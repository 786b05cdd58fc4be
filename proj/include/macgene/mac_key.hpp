#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "macgene/error.hpp"

namespace macgene {

inline constexpr std::size_t kKeyBytes = 6;

// The key space is fixed by the address width: 48 bits, no more, no less.
inline constexpr int kKeyBits = 48;

// The 6-byte hardware-address key. bytes[0] is the leftmost printed octet;
// the paper's decimal tables only line up under this order.
struct MacKey {
  std::array<std::uint8_t, kKeyBytes> bytes{};

  friend bool operator==(const MacKey&, const MacKey&) = default;
};

enum class MacStyle { Colon, Hyphen };

namespace detail {

inline int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace detail

// Accepts "XX:XX:XX:XX:XX:XX" or "XX-XX-XX-XX-XX-XX", hex digits in either
// case. The separator must be uniform; anything else (wrong group count,
// mixed separators, whitespace) is MalformedMac.
inline MacKey parse_mac(std::string_view text) {
  if (text.size() != 17) {
    fail(Errc::MalformedMac,
         "malformed MAC address '" + std::string(text) +
             "': expected six two-digit hex groups");
  }
  const char sep = text[2];
  if (sep != ':' && sep != '-') {
    fail(Errc::MalformedMac,
         "malformed MAC address '" + std::string(text) +
             "': separator must be ':' or '-'");
  }
  MacKey key;
  for (std::size_t group = 0; group < kKeyBytes; ++group) {
    const std::size_t at = group * 3;
    if (group > 0 && text[at - 1] != sep) {
      fail(Errc::MalformedMac,
           "malformed MAC address '" + std::string(text) +
               "': mixed or misplaced separators");
    }
    const int hi = detail::hex_nibble(text[at]);
    const int lo = detail::hex_nibble(text[at + 1]);
    if (hi < 0 || lo < 0) {
      fail(Errc::MalformedMac,
           "malformed MAC address '" + std::string(text) + "': bad hex digit");
    }
    key.bytes[group] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return key;
}

// Canonical text form: uppercase hex, two digits per octet.
inline std::string format_mac(const MacKey& key, MacStyle style) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  const char sep = style == MacStyle::Colon ? ':' : '-';
  std::string out;
  out.reserve(17);
  for (std::size_t i = 0; i < kKeyBytes; ++i) {
    if (i > 0) out.push_back(sep);
    out.push_back(kHex[key.bytes[i] >> 4]);
    out.push_back(kHex[key.bytes[i] & 0x0F]);
  }
  return out;
}

// Flips a single key bit. Bit 0 is the most significant bit of byte 0 and
// bit 47 the least significant bit of byte 5.
inline MacKey flip_bit(const MacKey& key, int bit_index) {
  if (bit_index < 0 || bit_index >= kKeyBits) {
    fail(Errc::BitIndexOutOfRange,
         "key bit index " + std::to_string(bit_index) + " outside 0..47");
  }
  MacKey flipped = key;
  flipped.bytes[static_cast<std::size_t>(bit_index) / 8] ^=
      static_cast<std::uint8_t>(0x80u >> (bit_index % 8));
  return flipped;
}

}  // namespace macgene
