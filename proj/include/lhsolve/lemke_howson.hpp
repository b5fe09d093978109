#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lhsolve/game.hpp"
#include "lhsolve/tableau.hpp"

namespace lhsolve {

template <typename Scalar>
struct BasicRunResult {
  std::optional<BasicEquilibrium<Scalar>> equilibrium;  // empty if truncated
  Label start_label;
  std::int64_t path_steps = 0;   // pivots on the returned path
  std::int64_t total_steps = 0;  // pivots over every attempt
  bool truncated = false;
  bool truncated_fallback = false;  // capped heuristic fell back to last label
};

using RunResult = BasicRunResult<double>;

/// A single Lemke-Howson path, advanced one complementary pivot at a time.
/// The first entering id is whichever of variable(start) / slack(start) is
/// nonbasic; afterwards the complement of the last leaving id enters. The
/// path ends when the id leaving the basis carries the start label.
template <typename Scalar>
class ComplementaryPath {
 public:
  ComplementaryPath(TableauPair<Scalar> tableaux, Label start)
      : tableaux_(std::move(tableaux)), start_(start) {
    if (start.value() < 1 || start.value() > tableaux_.num_labels())
      throw InvalidInput("start label out of range");
    const BasicId var = BasicId::variable(start);
    entering_ = tableaux_.is_basic(var) ? var.complement() : var;
  }

  ComplementaryPath(const BasicGame<Scalar>& g, Label start)
      : ComplementaryPath(init_tableaux(g), start) {}

  /// Performs one pivot and returns the leaving id.
  BasicId step() {
    const BasicId leaving = pivot_step(tableaux_, entering_);
    ++steps_;
    last_entering_ = entering_;
    entering_ = leaving.complement();
    done_ = leaving.label() == start_;
    return leaving;
  }

  bool done() const { return done_; }
  std::int64_t steps() const { return steps_; }
  Label start() const { return start_; }
  BasicId next_entering() const { return entering_; }
  BasicId last_entering() const { return last_entering_; }

  const TableauPair<Scalar>& tableaux() const { return tableaux_; }
  TableauPair<Scalar> release() && { return std::move(tableaux_); }

 private:
  TableauPair<Scalar> tableaux_;
  Label start_;
  BasicId entering_;
  BasicId last_entering_;
  std::int64_t steps_ = 0;
  bool done_ = false;
};

/// Normalized profile of a completely labeled basis: x from the variables
/// basic in the second tableau, y from those basic in the first.
template <typename Scalar>
BasicEquilibrium<Scalar> extract_equilibrium(const TableauPair<Scalar>& t,
                                             const BasicGame<Scalar>& g) {
  if (!t.completely_labeled())
    throw PreconditionError("basis is not completely labeled");
  MixedProfile<Scalar> p{Vector<Scalar>::Zero(g.m()),
                         Vector<Scalar>::Zero(g.n())};
  auto collect = [&](const Tableau<Scalar>& tab) {
    for (Index r = 0; r < tab.rows(); ++r) {
      const BasicId b = tab.basis[static_cast<std::size_t>(r)];
      if (!b.is_variable()) continue;
      const int k = b.label().value();
      const Scalar v = std::max(tab.value(r), Scalar(0));
      if (k <= g.m())
        p.x(k - 1) = v;
      else
        p.y(k - g.m() - 1) = v;
    }
  };
  collect(t.first());
  collect(t.second());

  const Scalar sx = p.x.sum();
  const Scalar sy = p.y.sum();
  if (!(sx > Scalar(0)) || !(sy > Scalar(0)))
    throw ArtificialEquilibrium("basis encodes the artificial equilibrium");
  p.x /= sx;
  p.y /= sy;
  return make_equilibrium(g, std::move(p));
}

/// Runs `path` for at most `max_steps` pivots (kSafetyCap when unbounded,
/// in which case running out raises CycleSuspected). Returns true if the path
/// reached its end.
template <typename Scalar>
bool advance_path(ComplementaryPath<Scalar>& path,
                  std::optional<std::int64_t> max_steps) {
  const std::int64_t budget = max_steps.value_or(kSafetyCap);
  while (!path.done() && path.steps() < budget) path.step();
  if (!path.done() && !max_steps)
    throw CycleSuspected("no equilibrium within " +
                         std::to_string(kSafetyCap) + " pivots");
  return path.done();
}

/// Lemke-Howson from the artificial equilibrium, dropping label `start`.
template <typename Scalar>
BasicRunResult<Scalar> run_lh(const BasicGame<Scalar>& g, Label start,
                              std::optional<std::int64_t> max_steps = {}) {
  if (max_steps && *max_steps < 1)
    throw InvalidInput("max_steps must be at least 1");
  ComplementaryPath<Scalar> path(g, start);
  BasicRunResult<Scalar> result;
  result.start_label = start;
  const bool finished = advance_path(path, max_steps);
  result.path_steps = path.steps();
  result.total_steps = path.steps();
  result.truncated = !finished;
  if (finished) result.equilibrium = extract_equilibrium(path.tableaux(), g);
  return result;
}

namespace detail {

inline std::vector<long long> rounded_key(const Vector<double>& x,
                                          const Vector<double>& y,
                                          double quantum) {
  std::vector<long long> key;
  key.reserve(static_cast<std::size_t>(x.size() + y.size()));
  for (const auto* v : {&x, &y})
    for (Index i = 0; i < v->size(); ++i)
      key.push_back(std::llround((*v)(i) / quantum));
  return key;
}

template <typename Scalar>
std::vector<long long> profile_key(const MixedProfile<Scalar>& p) {
  return rounded_key(p.x.template cast<double>(), p.y.template cast<double>(),
                     kEpsDedup);
}

}  // namespace detail

struct EnumerateOptions {
  // Only follow paths that start at the artificial equilibrium.
  bool from_artificial_only = false;
};

/// Equilibria reachable by Lemke-Howson paths. Breadth-first over vertex
/// pairs: from the artificial equilibrium and then from every equilibrium
/// found, every label is dropped in turn. Equilibria are deduplicated on
/// profiles rounded to 1e-8 and returned in lexicographic order.
template <typename Scalar>
std::vector<BasicEquilibrium<Scalar>> enumerate_reachable(
    const BasicGame<Scalar>& g, EnumerateOptions opts = {}) {
  using Key = std::vector<long long>;
  std::map<Key, BasicEquilibrium<Scalar>> found;
  std::set<std::pair<Key, std::vector<int>>> visited;
  std::deque<TableauPair<Scalar>> frontier;
  frontier.push_back(init_tableaux(g));

  while (!frontier.empty()) {
    const TableauPair<Scalar> node = std::move(frontier.front());
    frontier.pop_front();
    for (int k = 1; k <= g.num_labels(); ++k) {
      ComplementaryPath<Scalar> path(node, Label(k));
      advance_path(path, std::nullopt);
      if (path.tableaux().is_artificial()) continue;
      auto eq = extract_equilibrium(path.tableaux(), g);
      Key key = detail::profile_key(eq.profile);
      auto node_id = std::make_pair(key, path.tableaux().signature());
      if (!visited.insert(std::move(node_id)).second) continue;
      found.emplace(std::move(key), std::move(eq));
      if (!opts.from_artificial_only)
        frontier.push_back(std::move(path).release());
    }
  }

  std::vector<BasicEquilibrium<Scalar>> out;
  out.reserve(found.size());
  for (auto& [key, eq] : found) out.push_back(std::move(eq));
  return out;
}

}  // namespace lhsolve
