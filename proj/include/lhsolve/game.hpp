#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lhsolve/types.hpp"

namespace lhsolve {

struct GameMeta {
  std::string generator;
  std::uint64_t seed = 0;
};

/// Two-player normal-form game: `row_payoff` (A) and `col_payoff` (B) are both
/// m x n, indexed by (row strategy, column strategy).
template <typename Scalar>
class BasicGame {
 public:
  BasicGame(Matrix<Scalar> row_payoff, Matrix<Scalar> col_payoff,
            std::optional<GameMeta> meta = std::nullopt)
      : a_(std::move(row_payoff)), b_(std::move(col_payoff)),
        meta_(std::move(meta)) {
    if (a_.rows() < 1 || a_.cols() < 1)
      throw InvalidInput("game needs at least one strategy per player");
    if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
      throw InvalidInput("payoff matrices differ in shape");
    if (!a_.allFinite() || !b_.allFinite())
      throw InvalidInput("payoff matrices contain non-finite entries");
  }

  int m() const { return static_cast<int>(a_.rows()); }
  int n() const { return static_cast<int>(a_.cols()); }
  int num_labels() const { return m() + n(); }

  const Matrix<Scalar>& A() const { return a_; }
  const Matrix<Scalar>& B() const { return b_; }
  const std::optional<GameMeta>& meta() const { return meta_; }

  bool strictly_positive() const {
    return (a_.array() > Scalar(0)).all() && (b_.array() > Scalar(0)).all();
  }

  friend bool operator==(const BasicGame& l, const BasicGame& r) {
    return l.a_.rows() == r.a_.rows() && l.a_.cols() == r.a_.cols() &&
           l.a_ == r.a_ && l.b_ == r.b_;
  }

 private:
  Matrix<Scalar> a_;
  Matrix<Scalar> b_;
  std::optional<GameMeta> meta_;
};

using Game = BasicGame<double>;

template <typename Scalar>
struct MixedProfile {
  Vector<Scalar> x;
  Vector<Scalar> y;
};

template <typename Scalar>
struct BasicEquilibrium {
  MixedProfile<Scalar> profile;
  std::vector<int> support_row;  // 0-based row strategies with x_i > eps
  std::vector<int> support_col;  // 0-based column strategies with y_j > eps
  Scalar payoff_row{};
  Scalar payoff_col{};

  int support_size() const {
    return static_cast<int>(support_row.size() + support_col.size());
  }
  bool is_pure() const { return support_size() == 2; }
};

using Equilibrium = BasicEquilibrium<double>;

/// Throws InvalidInput unless `p` matches the game's dimensions, is
/// nonnegative and sums to one on both sides.
template <typename Scalar>
void check_profile(const BasicGame<Scalar>& g, const MixedProfile<Scalar>& p) {
  if (p.x.size() != g.m() || p.y.size() != g.n())
    throw InvalidInput("profile dimensions do not match the game");
  const Scalar eps(kEpsNormalization);
  if ((p.x.array() < Scalar(0)).any() || (p.y.array() < Scalar(0)).any())
    throw InvalidInput("profile has negative probabilities");
  using std::abs;
  if (abs(p.x.sum() - Scalar(1)) > eps || abs(p.y.sum() - Scalar(1)) > eps)
    throw InvalidInput("profile does not sum to one");
}

/// Supports and payoffs of `p` in `g`.
template <typename Scalar>
BasicEquilibrium<Scalar> make_equilibrium(const BasicGame<Scalar>& g,
                                          MixedProfile<Scalar> p) {
  BasicEquilibrium<Scalar> eq;
  for (int i = 0; i < g.m(); ++i)
    if (p.x(i) > Scalar(kEpsSupport)) eq.support_row.push_back(i);
  for (int j = 0; j < g.n(); ++j)
    if (p.y(j) > Scalar(kEpsSupport)) eq.support_col.push_back(j);
  eq.payoff_row = p.x.dot(g.A() * p.y);
  eq.payoff_col = p.x.dot(g.B() * p.y);
  eq.profile = std::move(p);
  return eq;
}

namespace detail {

template <typename Derived>
auto normalized(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Scalar lo = m.minCoeff();
  const Scalar hi = m.maxCoeff();
  if (!(hi > lo))
    return Matrix<Scalar>::Ones(m.rows(), m.cols()).eval();
  const Scalar half(0.5);
  return (((m.array() - lo) / (hi - lo) + Scalar(1)) * half).matrix().eval();
}

}  // namespace detail

/// Maps each payoff matrix independently into [1/2, 1] with its maximum at
/// exactly 1. A constant matrix becomes all ones. Positive affine maps leave
/// best responses, and hence equilibria, unchanged.
template <typename Scalar>
BasicGame<Scalar> normalize_game(const BasicGame<Scalar>& g) {
  return BasicGame<Scalar>(detail::normalized(g.A()), detail::normalized(g.B()),
                           g.meta());
}

}  // namespace lhsolve
