#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lhsolve/game.hpp"
#include "lhsolve/lemke_howson.hpp"

namespace lhsolve {

template <typename Scalar>
struct BasicVerifyReport {
  bool is_equilibrium = true;
  Scalar max_violation{};
  std::optional<Label> violating_label;  // set when the check fails
};

using VerifyReport = BasicVerifyReport<double>;

/// Best-response check: every strategy played with probability above `eps`
/// must earn within `eps` of the best payoff against the opponent's mix.
template <typename Scalar>
BasicVerifyReport<Scalar> verify_equilibrium(const BasicGame<Scalar>& g,
                                             const MixedProfile<Scalar>& p,
                                             Scalar eps = Scalar(kEpsVerify)) {
  check_profile(g, p);
  const Vector<Scalar> row_gain = g.A() * p.y;
  const Vector<Scalar> col_gain = g.B().transpose() * p.x;
  const Scalar row_best = row_gain.maxCoeff();
  const Scalar col_best = col_gain.maxCoeff();

  BasicVerifyReport<Scalar> report;
  int worst = 0;
  for (int i = 0; i < g.m(); ++i) {
    if (!(p.x(i) > eps)) continue;
    const Scalar gap = row_best - row_gain(i);
    if (gap > report.max_violation) {
      report.max_violation = gap;
      worst = i + 1;
    }
  }
  for (int j = 0; j < g.n(); ++j) {
    if (!(p.y(j) > eps)) continue;
    const Scalar gap = col_best - col_gain(j);
    if (gap > report.max_violation) {
      report.max_violation = gap;
      worst = g.m() + j + 1;
    }
  }
  report.is_equilibrium = report.max_violation <= eps;
  if (!report.is_equilibrium) report.violating_label = Label(worst);
  return report;
}

inline constexpr int kSupportEnumerationLimit = 12;

namespace detail {

// Solves, for a fixed pair of supports, the indifference system of the player
// whose mixed strategy lives on `own` and makes the opponent indifferent over
// `other`:  sum_{s in own} M(o, s) p_s = v  (o in other),  sum p_s = 1.
// `M` is indexed (opponent strategy, own strategy). Returns nothing when the
// system is singular, underdetermined or inconsistent.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_indifference(
    const Matrix<Scalar>& M, const std::vector<int>& own,
    const std::vector<int>& other, int own_size) {
  const Index unknowns = static_cast<Index>(own.size()) + 1;
  const Index equations = static_cast<Index>(other.size()) + 1;
  if (equations < unknowns) return std::nullopt;

  Matrix<Scalar> sys = Matrix<Scalar>::Zero(equations, unknowns);
  Vector<Scalar> rhs = Vector<Scalar>::Zero(equations);
  for (std::size_t r = 0; r < other.size(); ++r) {
    for (std::size_t c = 0; c < own.size(); ++c)
      sys(static_cast<Index>(r), static_cast<Index>(c)) = M(other[r], own[c]);
    sys(static_cast<Index>(r), unknowns - 1) = Scalar(-1);
  }
  sys.row(equations - 1).head(unknowns - 1).setOnes();
  rhs(equations - 1) = Scalar(1);

  Vector<Scalar> sol;
  if (equations == unknowns) {
    Eigen::PartialPivLU<Matrix<Scalar>> lu(sys);
    if (!(lu.rcond() > Scalar(1e-12))) return std::nullopt;
    sol = lu.solve(rhs);
  } else {
    Eigen::FullPivLU<Matrix<Scalar>> lu(sys);
    if (lu.rank() < unknowns) return std::nullopt;
    sol = lu.solve(rhs);
    if (!((sys * sol - rhs).template lpNorm<Eigen::Infinity>() <
          Scalar(1e-10)))
      return std::nullopt;
  }

  Vector<Scalar> full = Vector<Scalar>::Zero(own_size);
  for (std::size_t c = 0; c < own.size(); ++c) {
    const Scalar v = sol(static_cast<Index>(c));
    if (v < -Scalar(kEpsSupport)) return std::nullopt;
    full(own[c]) = std::max(v, Scalar(0));
  }
  const Scalar total = full.sum();
  if (!(total > Scalar(0))) return std::nullopt;
  return full / total;
}

inline std::vector<int> members(std::uint32_t mask, int size) {
  std::vector<int> out;
  for (int i = 0; i < size; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

}  // namespace detail

/// Brute-force oracle for small games: every pair of nonempty supports,
/// indifference systems solved by dense elimination, survivors checked with
/// verify_equilibrium. Deduplicated at 1e-8 and returned in lexicographic
/// order. Refuses games with more than 12 strategies per player.
template <typename Scalar>
std::vector<BasicEquilibrium<Scalar>> solve_support_enumeration(
    const BasicGame<Scalar>& g, Scalar eps = Scalar(kEpsVerify)) {
  const int m = g.m();
  const int n = g.n();
  if (m > kSupportEnumerationLimit || n > kSupportEnumerationLimit)
    throw SizeRefused("support enumeration is limited to 12x12 games");

  const Matrix<Scalar> bt = g.B().transpose();
  std::map<std::vector<long long>, BasicEquilibrium<Scalar>> found;
  for (std::uint32_t rmask = 1; rmask < (1u << m); ++rmask) {
    const auto rows = detail::members(rmask, m);
    for (std::uint32_t cmask = 1; cmask < (1u << n); ++cmask) {
      const auto cols = detail::members(cmask, n);
      // y makes the row player indifferent over `rows`.
      auto y = detail::solve_indifference<Scalar>(g.A(), cols, rows, n);
      if (!y) continue;
      auto x = detail::solve_indifference<Scalar>(bt, rows, cols, m);
      if (!x) continue;
      MixedProfile<Scalar> p{std::move(*x), std::move(*y)};
      if (!verify_equilibrium(g, p, eps).is_equilibrium) continue;
      auto key = detail::profile_key(p);
      if (found.count(key)) continue;
      found.emplace(std::move(key), make_equilibrium(g, std::move(p)));
    }
  }
  std::vector<BasicEquilibrium<Scalar>> out;
  out.reserve(found.size());
  for (auto& [key, eq] : found) out.push_back(std::move(eq));
  return out;
}

}  // namespace lhsolve
