#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "macgene/endian.hpp"
#include "macgene/error.hpp"
#include "macgene/mac_key.hpp"
#include "macgene/rng.hpp"

namespace macgene {

// One data vector: 6 bytes ("genes"), the same length as the key.
using Chromosome = std::array<std::uint8_t, kKeyBytes>;

// Container mode frames the ciphertext with the original length so zero
// padding can be undone. Raw mode is length-preserving and headerless; it
// exists so a BMP pixel array can be encrypted in place and stay viewable.
enum class CipherMode { Container, Raw };

inline constexpr std::array<std::uint8_t, 4> kEnvelopeMagic = {'M', 'G', 'E',
                                                               '1'};
inline constexpr std::uint8_t kEnvelopeVersion = 1;
inline constexpr std::size_t kEnvelopeHeaderBytes = 16;

struct CipherEnvelope {
  std::uint64_t original_length = 0;
  std::vector<std::uint8_t> ciphertext;  // length is a multiple of 6
};

struct SplitData {
  std::vector<Chromosome> vectors;
  std::vector<std::uint8_t> tail;  // shorter than one vector
};

// Splits data into whole 6-byte vectors plus the remainder; concatenating
// vectors then tail reproduces the input.
inline SplitData split_vectors(std::span<const std::uint8_t> data) {
  SplitData out;
  const std::size_t whole = data.size() / kKeyBytes;
  out.vectors.resize(whole);
  for (std::size_t i = 0; i < whole; ++i) {
    for (std::size_t j = 0; j < kKeyBytes; ++j) {
      out.vectors[i][j] = data[i * kKeyBytes + j];
    }
  }
  out.tail.assign(data.begin() + static_cast<std::ptrdiff_t>(whole * kKeyBytes),
                  data.end());
  return out;
}

// Crossover: transposes the gene order inside one vector. The permutation is
// seeded with the 1-based vector number, so it is fixed per position in the
// file and key-independent.
inline Chromosome crossover_vector(const Chromosome& v,
                                   std::uint64_t vector_number) {
  const auto perm = shuffle_indices(vector_number, kKeyBytes);
  Chromosome out;
  for (std::size_t k = 0; k < kKeyBytes; ++k) {
    out[k] = v[perm[k]];
  }
  return out;
}

// Undoes crossover_vector for the same vector number.
inline Chromosome uncrossover_vector(const Chromosome& v,
                                     std::uint64_t vector_number) {
  const auto perm = shuffle_indices(vector_number, kKeyBytes);
  Chromosome out;
  for (std::size_t k = 0; k < kKeyBytes; ++k) {
    out[perm[k]] = v[k];
  }
  return out;
}

// Mutation: byte-wise XOR of a vector against the key. Self-inverse.
inline Chromosome mutate_vector(const Chromosome& v, const MacKey& key) {
  Chromosome out;
  for (std::size_t j = 0; j < kKeyBytes; ++j) {
    out[j] = v[j] ^ key.bytes[j];
  }
  return out;
}

// The re-sequencing seed: the key as a 48-bit big-endian integer. Deriving
// it from the key keeps the vector order reproducible by the receiver, which
// is what makes decryption possible at all.
inline std::uint64_t resequence_seed(const MacKey& key) {
  std::uint64_t seed = 0;
  for (std::size_t i = 0; i < kKeyBytes; ++i) {
    seed = (seed << 8) | key.bytes[i];
  }
  return seed;
}

// Re-sequencing: reorders whole vectors with the key-seeded permutation.
// output[p] = vectors[perm[p]].
inline std::vector<Chromosome> resequence(const std::vector<Chromosome>& vectors,
                                          const MacKey& key) {
  const auto perm = shuffle_indices(resequence_seed(key), vectors.size());
  std::vector<Chromosome> out(vectors.size());
  for (std::size_t p = 0; p < vectors.size(); ++p) {
    out[p] = vectors[perm[p]];
  }
  return out;
}

namespace detail {

// Shared core: crossover + mutate each whole vector, then re-sequence.
// Assumes data.size() is a multiple of the vector size.
inline std::vector<std::uint8_t> encrypt_whole_vectors(
    std::span<const std::uint8_t> data, const MacKey& key) {
  auto split = split_vectors(data);
  for (std::size_t i = 0; i < split.vectors.size(); ++i) {
    split.vectors[i] = mutate_vector(crossover_vector(split.vectors[i], i + 1), key);
  }
  const auto ordered = resequence(split.vectors, key);
  std::vector<std::uint8_t> out;
  out.reserve(data.size());
  for (const auto& v : ordered) {
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// Inverse of encrypt_whole_vectors: un-resequence, un-mutate, un-crossover.
inline std::vector<std::uint8_t> decrypt_whole_vectors(
    std::span<const std::uint8_t> data, const MacKey& key) {
  const auto split = split_vectors(data);
  const auto perm = shuffle_indices(resequence_seed(key), split.vectors.size());
  const auto inverse = invert_permutation(perm);
  std::vector<std::uint8_t> out;
  out.reserve(data.size());
  for (std::size_t i = 0; i < split.vectors.size(); ++i) {
    const Chromosome& stored = split.vectors[inverse[i]];
    const Chromosome v = uncrossover_vector(mutate_vector(stored, key), i + 1);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace detail

// Container framing: magic, version, reserved zeros, original length as a
// big-endian u64, then the ciphertext.
inline std::vector<std::uint8_t> make_envelope(
    std::uint64_t original_length, std::span<const std::uint8_t> ciphertext) {
  std::vector<std::uint8_t> out(kEnvelopeHeaderBytes + ciphertext.size());
  out[0] = kEnvelopeMagic[0];
  out[1] = kEnvelopeMagic[1];
  out[2] = kEnvelopeMagic[2];
  out[3] = kEnvelopeMagic[3];
  out[4] = kEnvelopeVersion;
  // bytes 5..7 reserved, already zero
  store_be64(original_length, out.data() + 8);
  std::copy(ciphertext.begin(), ciphertext.end(),
            out.begin() + kEnvelopeHeaderBytes);
  return out;
}

inline CipherEnvelope parse_envelope(std::span<const std::uint8_t> data) {
  if (data.size() < kEnvelopeHeaderBytes) {
    fail(Errc::TruncatedEnvelope,
         "envelope truncated: " + std::to_string(data.size()) +
             " bytes, header needs " + std::to_string(kEnvelopeHeaderBytes));
  }
  if (!std::equal(kEnvelopeMagic.begin(), kEnvelopeMagic.end(), data.begin())) {
    fail(Errc::BadMagic, "not a cipher envelope: bad magic");
  }
  if (data[4] != kEnvelopeVersion) {
    fail(Errc::UnsupportedVersion,
         "unsupported envelope version " + std::to_string(data[4]));
  }
  CipherEnvelope env;
  env.original_length = load_be64(data.data() + 8);
  const std::size_t ct_len = data.size() - kEnvelopeHeaderBytes;
  if (env.original_length > ct_len) {
    fail(Errc::LengthMismatch,
         "original length exceeds ciphertext length");
  }
  const std::uint64_t expected =
      env.original_length + (kKeyBytes - env.original_length % kKeyBytes) % kKeyBytes;
  if (ct_len != expected) {
    fail(Errc::LengthMismatch,
         "ciphertext length " + std::to_string(ct_len) +
             " inconsistent with original length " +
             std::to_string(env.original_length));
  }
  env.ciphertext.assign(data.begin() + kEnvelopeHeaderBytes, data.end());
  return env;
}

// Encrypts plaintext under the key.
//
// Container: zero-pad to a multiple of 6, crossover + mutate each vector,
// re-sequence, and frame the result in an envelope carrying the true length.
//
// Raw: the same pipeline over the largest whole-vector prefix; the short
// tail is XORed against the key prefix, so output length equals input
// length exactly.
inline std::vector<std::uint8_t> encrypt(std::span<const std::uint8_t> plaintext,
                                         const MacKey& key, CipherMode mode) {
  if (mode == CipherMode::Container) {
    std::vector<std::uint8_t> padded(plaintext.begin(), plaintext.end());
    padded.resize(plaintext.size() +
                      (kKeyBytes - plaintext.size() % kKeyBytes) % kKeyBytes,
                  0);
    const auto body = detail::encrypt_whole_vectors(padded, key);
    return make_envelope(plaintext.size(), body);
  }
  const std::size_t whole = plaintext.size() - plaintext.size() % kKeyBytes;
  auto out = detail::encrypt_whole_vectors(plaintext.first(whole), key);
  for (std::size_t j = 0; whole + j < plaintext.size(); ++j) {
    out.push_back(plaintext[whole + j] ^ key.bytes[j]);
  }
  return out;
}

// Inverse of encrypt for the same key and mode.
inline std::vector<std::uint8_t> decrypt(std::span<const std::uint8_t> data,
                                         const MacKey& key, CipherMode mode) {
  if (mode == CipherMode::Container) {
    const auto env = parse_envelope(data);
    auto out = detail::decrypt_whole_vectors(env.ciphertext, key);
    out.resize(static_cast<std::size_t>(env.original_length));
    return out;
  }
  const std::size_t whole = data.size() - data.size() % kKeyBytes;
  auto out = detail::decrypt_whole_vectors(data.first(whole), key);
  for (std::size_t j = 0; whole + j < data.size(); ++j) {
    out.push_back(data[whole + j] ^ key.bytes[j]);
  }
  return out;
}

}  // namespace macgene
