#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace blackwell {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Child stream key derived from a parent key and a tag.
inline std::uint64_t mix(std::uint64_t key, std::uint64_t tag) { return splitmix64(key ^ splitmix64(tag)); }

/// Uniform integer in [0, n) by rejection sampling. Unlike
/// std::uniform_int_distribution the stream is identical on every platform.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: empty range");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace blackwell
