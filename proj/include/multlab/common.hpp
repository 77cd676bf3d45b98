#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multlab {

using Complex = std::complex<double>;

inline constexpr const char* kVersion = "0.1.0";

/// Deterministic splittable generator used for all randomized searches.
/// Streams are identified by (stream, index) so that restarts can run in
/// any order, or in parallel, and still produce identical numbers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() {  // in (0,1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(6.283185307179586476925287 * u2);
    have_spare_ = true;
    return r * std::cos(6.283185307179586476925287 * u2);
  }

  Complex cgauss() { return Complex(gauss(), gauss()); }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
  a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
  return a;
}

/// Number of worker threads: explicit request, else MULTLAB_THREADS, else
/// hardware concurrency.
int thread_cap(int requested);

/// Runs fn(0..count-1), possibly concurrently. Each index must be
/// independent; results should go to preallocated slots.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

/// Fixed CSV number format: '.' decimal separator, 9 significant digits.
std::string fmt9(double v);

}  // namespace multlab
