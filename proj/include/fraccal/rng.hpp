#ifndef FRACCAL_RNG_HPP
#define FRACCAL_RNG_HPP

#include <cstdint>
#include <random>

namespace fraccal {

// Seeded generator with hand-rolled conversions. std::uniform_real_distribution
// is implementation-defined, so results would not reproduce across standard
// libraries; mt19937_64 itself is pinned by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  std::uint64_t index(std::uint64_t n) {
    // rejection-free modulo is fine here; n is tiny against 2^64
    return engine_() % n;
  }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a, used for config and matrix fingerprints.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace fraccal

#endif
