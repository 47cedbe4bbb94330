#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tilinglab/graph.hpp"

namespace tilinglab {

// Seed discipline: every random component draws from its own stream,
// derive_seed(parent, stream_tag("name"), index...). Streams are a pure
// function of the 64-bit root seed, so any trial can be replayed alone.

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// FNV-1a of the stream name; constexpr so tags can be compile-time constants.
constexpr std::uint64_t stream_tag(std::string_view name) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t part) noexcept;

template <class... Parts>
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t first, Parts... rest) noexcept {
  if constexpr (sizeof...(rest) == 0) {
    return derive_seed(parent, first);
  } else {
    return derive_seed(derive_seed(parent, first), static_cast<std::uint64_t>(rest)...);
  }
}

/// mt19937_64 wrapper with platform-independent derived distributions
/// (the standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform in [0, bound); bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    shuffle(std::span<T>(items));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tilinglab
