#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lhsolve {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Tableau rows are updated as whole rows, so they are stored row-major.
template <typename Scalar>
using RowMajorMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Index = Eigen::Index;

/// A pure strategy of either player, numbered 1..m for the row player and
/// m+1..m+n for the column player.
class Label {
 public:
  constexpr Label() = default;
  constexpr explicit Label(int value) : value_(value) {}

  constexpr int value() const { return value_; }

  constexpr bool is_row(int m) const { return value_ <= m; }

  friend constexpr auto operator<=>(Label, Label) = default;

 private:
  int value_ = 1;
};

/// Identifies the basic variable of a tableau row: +k is the variable with
/// label k, -k is the slack of label k.
class BasicId {
 public:
  constexpr BasicId() = default;
  constexpr explicit BasicId(int value) : value_(value) {}

  static constexpr BasicId variable(Label l) { return BasicId(l.value()); }
  static constexpr BasicId slack(Label l) { return BasicId(-l.value()); }

  constexpr int value() const { return value_; }
  constexpr Label label() const { return Label(value_ < 0 ? -value_ : value_); }
  constexpr bool is_slack() const { return value_ < 0; }
  constexpr bool is_variable() const { return value_ > 0; }

  /// Complementary partner: variable k <-> slack k.
  constexpr BasicId complement() const { return BasicId(-value_); }

  friend constexpr auto operator<=>(BasicId, BasicId) = default;

 private:
  int value_ = 1;
};

inline constexpr double kEpsPivot = 1e-9;
inline constexpr double kEpsFeasible = 1e-9;
inline constexpr double kEpsSupport = 1e-9;
inline constexpr double kEpsNormalization = 1e-9;
inline constexpr double kEpsVerify = 1e-7;
inline constexpr double kEpsDedup = 1e-8;

// Pivot budget used when no explicit limit is given; exceeding it is treated
// as cycling on a degenerate game.
inline constexpr std::int64_t kSafetyCap = 1'000'000;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The entering column has no negative coefficient. Impossible for positive
/// payoff matrices, so it indicates a corrupted tableau.
class UnboundedRay : public Error {
 public:
  using Error::Error;
};

class CycleSuspected : public Error {
 public:
  using Error::Error;
};

/// Raised when extracting a profile from the all-slack basis.
class ArtificialEquilibrium : public Error {
 public:
  using Error::Error;
};

class SizeRefused : public Error {
 public:
  using Error::Error;
};

}  // namespace lhsolve
