#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace drx {

// 64-bit FNV-1a, also used for input-file fingerprints in run manifests.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a(std::string_view s,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  return fnv1a(s.data(), s.size(), h);
}

// Exact match for string literals; without it the (void*, size_t) overload
// wins against string_view and treats the chain value as a byte count.
inline std::uint64_t fnv1a(const char* s,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  return fnv1a(std::string_view(s), h);
}

// Deterministic generator with hand-rolled distributions. The mt19937_64
// engine is specified bit-exactly by the standard; std::uniform_*_distribution
// is not, so every draw here goes through fixed arithmetic on raw 64-bit
// outputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }

  // Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased index in [0,n); rejection keeps the modulo exact.
  std::size_t index(std::size_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = u64();
    } while (r >= limit);
    return static_cast<std::size_t>(r % n);
  }

  // Box-Muller; one value per call keeps replay independent of call pairing.
  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double z = std::sqrt(-2.0 * std::log(u1)) *
                     std::cos(2.0 * 3.14159265358979323846 * u2);
    return mean + stddev * z;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Fisher-Yates.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Named sub-stream: consumers draw from independent streams keyed by purpose,
// so adding a draw in one place never shifts another consumer's sequence.
inline Rng substream(std::uint64_t master, std::string_view name,
                     std::uint64_t k = 0) {
  std::uint64_t h = fnv1a(name);
  h = fnv1a(&master, sizeof(master), h);
  h = fnv1a(&k, sizeof(k), h);
  return Rng(h);
}

}  // namespace drx
