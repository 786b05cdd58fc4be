#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "macgene/error.hpp"
#include "macgene/mac_key.hpp"

namespace testutil {

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::string tmpl =
        (std::filesystem::temp_directory_path() / "macgene-test-XXXXXX")
            .string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (::mkdtemp(buf.data()) == nullptr) {
      throw std::runtime_error("mkdtemp failed");
    }
    path_ = buf.data();
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }

  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

// Runs fn, which must throw macgene::Error, and hands back the code.
template <typename Fn>
macgene::Errc error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const macgene::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a macgene::Error, none was thrown");
}

inline std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng,
                                              std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) {
    b = static_cast<std::uint8_t>(rng());
  }
  return out;
}

inline macgene::MacKey random_key(std::mt19937_64& rng) {
  macgene::MacKey key;
  for (auto& b : key.bytes) {
    b = static_cast<std::uint8_t>(rng());
  }
  return key;
}

}  // namespace testutil
