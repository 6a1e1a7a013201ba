// Deterministic RNG (splitmix64 core). All stochastic search in the repo
// derives from explicit seeds so identical (argv, seed) runs reproduce
// byte-identical reports on any platform.

#pragma once

#include <cmath>
#include <cstdint>

namespace planelab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Derive an independent stream, e.g. per worker index.
  static Rng derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    r.next();
    return r;
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Standard normal via Box-Muller (deterministic two-draw form).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace planelab
