#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "lhsolve/game.hpp"

namespace lhsolve {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of substream `index`: the index-th output of a SplitMix64 generator
/// started at `master`. Batch items draw from their own substream, so results
/// do not depend on evaluation order.
constexpr std::uint64_t substream_seed(std::uint64_t master,
                                       std::uint64_t index) {
  return splitmix64(master + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Uniform and normal variates over std::mt19937_64, whose output sequence is
/// fixed by the standard. Not thread-safe; one stream per consumer.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Two independent standard normals by Marsaglia's polar method.
  std::pair<double, double> normal_pair();

 private:
  std::mt19937_64 engine_;
};

enum class GameClass { uniform, covariant };

std::string to_string(GameClass c);
GameClass parse_game_class(const std::string& name);

struct GenSpec {
  GameClass game_class = GameClass::uniform;
  int m = 1;
  int n = 1;
  double rho = 0.0;  // covariant only, in [-1, 1]
  std::uint64_t seed = 0;
};

/// Every entry of A, then of B, drawn i.i.d. uniform on [0, 1).
Game gen_uniform(int m, int n, std::uint64_t seed);

/// Per cell, (a_ij, b_ij) is bivariate standard normal with correlation rho:
/// a = u, b = rho u + sqrt(1 - rho^2) v. Payoffs are left unbounded.
Game gen_covariant(int m, int n, double rho, std::uint64_t seed);

Game generate(const GenSpec& spec);

}  // namespace lhsolve
