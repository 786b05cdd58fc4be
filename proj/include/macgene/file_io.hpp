#pragma once

#include <cstdio>
#include <fstream>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "macgene/error.hpp"

namespace macgene {

inline std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(Errc::IoError, "cannot open '" + path + "' for reading");
  }
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) {
    fail(Errc::IoError, "read error on '" + path + "'");
  }
  return data;
}

// Writes the whole buffer or nothing: a failed write removes the file so a
// caller never leaves partial output behind.
inline void write_file_bytes(const std::string& path,
                             std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    fail(Errc::IoError, "cannot open '" + path + "' for writing");
  }
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) {
    out.close();
    std::remove(path.c_str());
    fail(Errc::IoError, "write error on '" + path + "'");
  }
}

}  // namespace macgene
