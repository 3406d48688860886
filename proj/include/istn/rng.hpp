#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace istn {

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// Named substream of a master seed. Every stochastic subsystem owns its own
// stream, so results do not depend on the order subsystems run in.
class RngStream {
 public:
  RngStream(uint64_t master_seed, std::string_view label, uint64_t a = 0, uint64_t b = 0) {
    uint64_t h = detail::fnv1a64(label);
    h = detail::splitmix64(h ^ master_seed);
    h = detail::splitmix64(h ^ a);
    h = detail::splitmix64(h ^ b);
    engine_.seed(h);
  }

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  double gamma(double shape, double scale) {
    return std::gamma_distribution<double>(shape, scale)(engine_);
  }

  // Uniform integer in [0, n).
  uint64_t below(uint64_t n) {
    return std::uniform_int_distribution<uint64_t>(0, n - 1)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace istn
