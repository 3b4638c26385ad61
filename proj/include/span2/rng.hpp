#pragma once

#include <cstdint>

namespace span2 {

// splitmix64. Deterministic across platforms, unlike the standard library
// distributions, so identical seeds give byte-identical reports everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  std::size_t pick_size(std::size_t max_inclusive) {
    return static_cast<std::size_t>(below(max_inclusive + 1));
  }

  bool coin() { return (next() & 1) != 0; }

  // Derives an independent stream seed from a base seed and a stream index.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
    return r.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace span2
