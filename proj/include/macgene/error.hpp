#pragma once

#include <stdexcept>
#include <string>

namespace macgene {

// Every failure the library can report, grouped by subsystem.
enum class Errc {
  // key
  MalformedMac,
  BitIndexOutOfRange,
  InterfaceNotFound,
  NoHardwareAddress,
  // rng
  ZeroBound,
  NotAPermutation,
  // cipher / envelope
  BadMagic,
  UnsupportedVersion,
  TruncatedEnvelope,
  LengthMismatch,
  // analysis
  IdenticalSignals,
  EmptyInput,
  ZeroVariance,
  TooFewPairs,
  DegenerateImage,
  // bmp
  BadSignature,
  UnsupportedBitDepth,
  UnsupportedCompression,
  Truncated,
  // wire
  BindFailure,
  ConnectFailure,
  ProtocolViolation,
  DecryptFailure,
  RemoteDecryptFailure,
  // filesystem
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace macgene
