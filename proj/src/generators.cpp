#include "lhsolve/generators.hpp"

#include <cmath>

namespace lhsolve {

namespace {

void check_sizes(int m, int n) {
  if (m < 1 || n < 1) throw InvalidInput("game sizes must be at least 1");
}

}  // namespace

std::pair<double, double> RandomStream::normal_pair() {
  double u = 0, v = 0, s = 0;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  return {u * f, v * f};
}

std::string to_string(GameClass c) {
  return c == GameClass::uniform ? "uniform" : "covariant";
}

GameClass parse_game_class(const std::string& name) {
  if (name == "uniform") return GameClass::uniform;
  if (name == "covariant") return GameClass::covariant;
  throw InvalidInput("unknown game class '" + name + "'");
}

Game gen_uniform(int m, int n, std::uint64_t seed) {
  check_sizes(m, n);
  RandomStream rng(seed);
  Matrix<double> a(m, n), b(m, n);
  for (auto* mat : {&a, &b})
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) (*mat)(i, j) = rng.uniform();
  return Game(std::move(a), std::move(b), GameMeta{"uniform", seed});
}

Game gen_covariant(int m, int n, double rho, std::uint64_t seed) {
  check_sizes(m, n);
  if (!(rho >= -1.0 && rho <= 1.0))
    throw InvalidInput("rho must lie in [-1, 1]");
  RandomStream rng(seed);
  const double orth = std::sqrt(1.0 - rho * rho);
  Matrix<double> a(m, n), b(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [u, v] = rng.normal_pair();
      a(i, j) = u;
      b(i, j) = rho * u + orth * v;
    }
  }
  return Game(std::move(a), std::move(b), GameMeta{"covariant", seed});
}

Game generate(const GenSpec& spec) {
  switch (spec.game_class) {
    case GameClass::uniform:
      return gen_uniform(spec.m, spec.n, spec.seed);
    case GameClass::covariant:
      return gen_covariant(spec.m, spec.n, spec.rho, spec.seed);
  }
  throw InvalidInput("unknown game class");
}

}  // namespace lhsolve
