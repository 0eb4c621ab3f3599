// Seeded random streams. One master seed per simulation; each consumer
// (gps, compass, lidar, world generation, ...) derives its own stream so
// adding a sensor never perturbs the draws of another.
//
// Gaussian variates use an explicit Box-Muller transform on top of
// mt19937_64 instead of std::normal_distribution, whose output is
// implementation defined. Every artifact we emit has to be byte-stable.
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace usv {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derive a child seed from a master seed and a stream tag.
inline uint64_t derive_seed(uint64_t base, std::string_view tag) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : tag) {
    h ^= static_cast<uint64_t>(static_cast<unsigned char>(c));
    h *= 1099511628211ULL;
  }
  return splitmix64(base ^ h);
}

inline uint64_t derive_seed(uint64_t base, std::string_view tag, uint64_t index) {
  return splitmix64(derive_seed(base, tag) ^ splitmix64(index));
}

class RngStream {
 public:
  explicit RngStream(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi] inclusive, hi >= lo.
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(gen_() % span);
  }

  // Standard Box-Muller; draws two uniforms per variate.
  double gaussian(double mean, double sigma) {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    return mean + sigma * z;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace usv
