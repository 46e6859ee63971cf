#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cpnets {

/// Seed for a named sub-stream of a root seed (IC sampling, weight init, noise, ...).
std::uint64_t derive_seed(std::uint64_t root, std::string_view stream);

class Rng {
public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}
  Rng(std::uint64_t root, std::string_view stream) : Rng(derive_seed(root, stream)) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal(double mean = 0.0, double stddev = 1.0) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }
  std::uint64_t seed() const { return seed_; }
  std::mt19937_64& engine() { return engine_; }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace cpnets
