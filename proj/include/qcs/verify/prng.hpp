// SplitMix64: 64-bit state, add 0x9e3779b97f4a7c15 per step, then the
// Stafford variant-13 finalizer. Same stream on every platform.
#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace qcs::verify {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }
  /// Modulus uniform in [r_lo, r_hi], phase uniform.
  std::complex<double> complex_polar(double r_lo, double r_hi) {
    const double r = uniform(r_lo, r_hi);
    return std::polar(r, uniform(-std::numbers::pi, std::numbers::pi));
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a, used to derive independent per-job seeds from names.
constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// A generator for job (tag, index) under a run seed.
inline SplitMix64 job_rng(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  SplitMix64 mix(seed ^ fnv1a(tag));
  mix.next();
  return SplitMix64(mix.next() + 0x632be59bd9b4e019ULL * (index + 1));
}

}  // namespace qcs::verify
