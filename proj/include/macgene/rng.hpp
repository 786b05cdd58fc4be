#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "macgene/error.hpp"

namespace macgene {

// Deterministic 64-bit linear congruential generator. The multiplier and
// increment are Knuth's MMIX constants; the output of one step is the high
// 31 bits of the freshly advanced state. The state moves before extraction,
// so the seed itself never appears in the output stream.
//
// Every permutation in the cipher is derived from this generator, so the
// update rule and the extraction rule are both load-bearing: change either
// and ciphertexts stop being decryptable across implementations.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  // Advances the state and returns a value in [0, 2^31).
  std::uint32_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 33);
  }

  // next() reduced modulo n. Plain modulo, not rejection sampling: the
  // contract here is reproducibility, not uniformity, and the bias is
  // irrelevant to correctness.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) {
      fail(Errc::ZeroBound, "rand_below: bound must be positive");
    }
    return next() % n;
  }

 private:
  std::uint64_t state_;
};

// Fisher-Yates permutation of [0..n): start from the identity, then for
// i = n-1 down to 1 swap position i with a generator-chosen j <= i. A fresh
// generator is seeded per call, so equal seeds give equal permutations on
// every platform.
inline std::vector<std::size_t> shuffle_indices(std::uint64_t seed,
                                                std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Lcg64 gen(seed);
  for (std::size_t i = n; i-- > 1;) {
    const auto j = static_cast<std::size_t>(gen.below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// Inverse permutation: result[p[i]] == i. Rejects anything that is not a
// bijection on [0..n).
inline std::vector<std::size_t> invert_permutation(
    const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> inverse(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n) {
      fail(Errc::NotAPermutation,
           "entry " + std::to_string(perm[i]) + " out of range at position " +
               std::to_string(i));
    }
    if (inverse[perm[i]] != kUnset) {
      fail(Errc::NotAPermutation,
           "duplicate entry " + std::to_string(perm[i]));
    }
    inverse[perm[i]] = i;
  }
  return inverse;
}

}  // namespace macgene
