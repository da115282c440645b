#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

// One deterministic random stream, addressed by (master seed, stream index).
// Equal addresses replay the same sample sequence on every run and platform:
// the engine is mt19937_64 (bit-exact per the standard) and every derived
// sampler below is implemented here rather than delegated to the standard
// library's unspecified distribution algorithms.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : master_(master_seed), index_(stream_index) {
    std::uint64_t s = master_seed ^ (0x9E3779B97F4A7C15ull * (stream_index + 1));
    std::uint64_t a = detail::splitmix64(s);
    std::uint64_t b = detail::splitmix64(s);
    rng_.seed(a ^ (b << 1));
  }

  std::uint64_t master_seed() const { return master_; }
  std::uint64_t stream_index() const { return index_; }

  std::uint64_t next_u64() { return rng_(); }

  // Uniform on the open interval (0,1); safe to pass to log().
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, n). Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw DomainError("RngStream::below: n must be positive");
    while (true) {
      std::uint64_t x = next_u64();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      auto lo = static_cast<std::uint64_t>(m);
      if (lo < n) {
        std::uint64_t threshold = (0 - n) % n;
        if (lo < threshold) continue;
      }
      return static_cast<std::uint64_t>(m >> 64);
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 rng_;
  std::uint64_t master_;
  std::uint64_t index_;
};

}  // namespace rainbow
