#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <vector>

#include "lhsolve/game.hpp"

namespace lhsolve {

/// One half of the complementary system. Row r reads
///   basis[r] = body(r, 0) + sum_c body(r, c) * (nonbasic of column c)
/// so column 0 holds the current value of the basic variable and the
/// remaining columns are coefficients of slacks first, then variables.
template <typename Scalar>
struct Tableau {
  RowMajorMatrix<Scalar> body;
  std::vector<BasicId> basis;

  Index rows() const { return body.rows(); }
  Scalar value(Index r) const { return body(r, 0); }
};

/// The two independent tableaux of a bimatrix game:
///  - first():  m rows for (A y)_i + s_i = 1, columns [value | s_1..s_m |
///    y_{m+1}..y_{m+n}];
///  - second(): n rows for (B^T x)_j + s_j = 1, columns [value |
///    s_{m+1}..s_{m+n} | x_1..x_m].
/// Variables x_i and slacks s_j (j > m) live in the second tableau; slacks
/// s_i (i <= m) and variables y_j live in the first.
template <typename Scalar>
class TableauPair {
 public:
  TableauPair(int m, int n) : m_(m), n_(n) {
    first_.body = RowMajorMatrix<Scalar>::Zero(m, 1 + m + n);
    second_.body = RowMajorMatrix<Scalar>::Zero(n, 1 + n + m);
    first_.basis.reserve(m);
    second_.basis.reserve(n);
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int num_labels() const { return m_ + n_; }

  const Tableau<Scalar>& first() const { return first_; }
  const Tableau<Scalar>& second() const { return second_; }
  Tableau<Scalar>& first() { return first_; }
  Tableau<Scalar>& second() { return second_; }

  bool in_first(BasicId id) const {
    const bool row_label = id.label().is_row(m_);
    return id.is_slack() == row_label;
  }

  Tableau<Scalar>& tableau_of(BasicId id) {
    return in_first(id) ? first_ : second_;
  }
  const Tableau<Scalar>& tableau_of(BasicId id) const {
    return in_first(id) ? first_ : second_;
  }

  /// Column of `id` inside its own tableau (column 0 is the value column).
  Index column_of(BasicId id) const {
    const int k = id.label().value();
    if (in_first(id)) return k;
    return id.is_slack() ? k - m_ : n_ + k;
  }

  /// Row in which `id` is basic, or -1.
  Index row_of(BasicId id) const {
    const auto& t = tableau_of(id);
    const auto it = std::find(t.basis.begin(), t.basis.end(), id);
    return it == t.basis.end() ? -1 : static_cast<Index>(it - t.basis.begin());
  }

  bool is_basic(BasicId id) const { return row_of(id) >= 0; }

  /// Value of `id` in the current basic solution (0 if nonbasic).
  Scalar value_of(BasicId id) const {
    const Index r = row_of(id);
    return r < 0 ? Scalar(0) : tableau_of(id).value(r);
  }

  /// All slacks basic: the artificial equilibrium (0, 0).
  bool is_artificial() const {
    auto slack = [](BasicId b) { return b.is_slack(); };
    return std::all_of(first_.basis.begin(), first_.basis.end(), slack) &&
           std::all_of(second_.basis.begin(), second_.basis.end(), slack);
  }

  /// No label has both its variable and its slack basic.
  bool completely_labeled() const {
    std::vector<int> seen(num_labels() + 1, 0);
    for (const auto* t : {&first_, &second_})
      for (BasicId b : t->basis)
        if (++seen[b.label().value()] > 1) return false;
    return true;
  }

  /// Sorted basic ids of both tableaux; identifies the vertex pair.
  std::vector<int> signature() const {
    std::vector<int> sig;
    sig.reserve(num_labels());
    for (const auto* t : {&first_, &second_})
      for (BasicId b : t->basis) sig.push_back(b.value());
    std::sort(sig.begin(), sig.end());
    return sig;
  }

  /// Tableau `which` (0 or 1) in the layout [basic id | value |
  /// coefficients], with ids as signed reals.
  Matrix<Scalar> dense(int which) const {
    const auto& t = which == 0 ? first_ : second_;
    Matrix<Scalar> out(t.rows(), t.body.cols() + 1);
    for (Index r = 0; r < t.rows(); ++r)
      out(r, 0) = Scalar(t.basis[static_cast<std::size_t>(r)].value());
    out.rightCols(t.body.cols()) = t.body;
    return out;
  }

 private:
  int m_;
  int n_;
  Tableau<Scalar> first_;
  Tableau<Scalar> second_;
};

/// Tableaux of the artificial equilibrium: every slack basic at value 1.
/// Requires strictly positive payoffs.
template <typename Scalar>
TableauPair<Scalar> init_tableaux(const BasicGame<Scalar>& g) {
  if (!g.strictly_positive())
    throw PreconditionError("tableau construction needs positive payoffs");
  const int m = g.m();
  const int n = g.n();
  TableauPair<Scalar> t(m, n);
  auto& t1 = t.first();
  t1.body.col(0).setOnes();
  t1.body.rightCols(n) = -g.A();
  for (int i = 1; i <= m; ++i) t1.basis.push_back(BasicId::slack(Label(i)));

  auto& t2 = t.second();
  t2.body.col(0).setOnes();
  t2.body.rightCols(m) = -g.B().transpose();
  for (int j = m + 1; j <= m + n; ++j)
    t2.basis.push_back(BasicId::slack(Label(j)));
  return t;
}

namespace detail {

// Ratio-test tie order: smaller label first, slack before variable.
inline bool precedes(BasicId a, BasicId b) {
  const int la = a.label().value();
  const int lb = b.label().value();
  if (la != lb) return la < lb;
  return a.is_slack() && !b.is_slack();
}

}  // namespace detail

/// One complementary pivot. `entering` must be nonbasic. The leaving row is
/// chosen by the minimum ratio test over rows whose entering coefficient is
/// below -eps; the row is solved for the entering variable and substituted
/// into every other row with a nonzero entering coefficient.
/// Returns the id that left the basis.
template <typename Scalar>
BasicId pivot_step(TableauPair<Scalar>& t, BasicId entering) {
  auto& tab = t.tableau_of(entering);
  auto& body = tab.body;
  const Index col_in = t.column_of(entering);
  const Scalar eps(kEpsPivot);

  Index pivot_row = -1;
  Scalar best_ratio = std::numeric_limits<Scalar>::infinity();
  for (Index r = 0; r < body.rows(); ++r) {
    const Scalar coeff = body(r, col_in);
    if (!(coeff < -eps)) continue;
    const Scalar ratio = -body(r, 0) / coeff;
    if (pivot_row < 0 || ratio < best_ratio ||
        (ratio == best_ratio &&
         detail::precedes(tab.basis[static_cast<std::size_t>(r)],
                          tab.basis[static_cast<std::size_t>(pivot_row)]))) {
      best_ratio = ratio;
      pivot_row = r;
    }
  }
  if (pivot_row < 0)
    throw UnboundedRay("no negative coefficient in entering column");

  const BasicId leaving = tab.basis[static_cast<std::size_t>(pivot_row)];
  const Index col_out = t.column_of(leaving);

  const Scalar e = body(pivot_row, col_in);
  body(pivot_row, col_in) = Scalar(0);
  body(pivot_row, col_out) = Scalar(-1);
  body.row(pivot_row) /= -e;

  for (Index r = 0; r < body.rows(); ++r) {
    if (r == pivot_row) continue;
    const Scalar c = body(r, col_in);
    if (c == Scalar(0)) continue;
    body.row(r) += c * body.row(pivot_row);
    body(r, col_in) = Scalar(0);
  }
  tab.basis[static_cast<std::size_t>(pivot_row)] = entering;
  return leaving;
}

}  // namespace lhsolve
