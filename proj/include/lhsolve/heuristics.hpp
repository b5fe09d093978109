#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "lhsolve/lemke_howson.hpp"

namespace lhsolve {

struct HeuristicConfig {
  // Pivots allowed per start label before moving on; empty means unbounded.
  std::optional<std::int64_t> capping = 10;
  // Order in which start labels are tried; empty means 1..m+n ascending.
  std::vector<Label> label_order;
  // run_interleaved keeps m+n tableaux alive at once and refuses games with
  // more labels than this.
  int interleaved_label_limit = 600;
};

namespace detail {

inline std::vector<Label> resolve_order(const HeuristicConfig& cfg,
                                        int num_labels) {
  if (cfg.label_order.empty()) {
    std::vector<Label> order;
    order.reserve(static_cast<std::size_t>(num_labels));
    for (int k = 1; k <= num_labels; ++k) order.emplace_back(k);
    return order;
  }
  if (static_cast<int>(cfg.label_order.size()) != num_labels)
    throw InvalidInput("label order must be a permutation of 1..m+n");
  std::vector<bool> seen(static_cast<std::size_t>(num_labels) + 1, false);
  for (Label l : cfg.label_order) {
    if (l.value() < 1 || l.value() > num_labels ||
        seen[static_cast<std::size_t>(l.value())])
      throw InvalidInput("label order must be a permutation of 1..m+n");
    seen[static_cast<std::size_t>(l.value())] = true;
  }
  return cfg.label_order;
}

}  // namespace detail

/// Clairvoyant baseline: runs every start label to completion and keeps the
/// shortest path (lowest label on ties). total_steps sums all runs.
template <typename Scalar>
BasicRunResult<Scalar> run_nd(const BasicGame<Scalar>& g) {
  std::optional<BasicRunResult<Scalar>> best;
  std::int64_t total = 0;
  for (int k = 1; k <= g.num_labels(); ++k) {
    auto r = run_lh(g, Label(k));
    total += r.total_steps;
    if (!best || r.path_steps < best->path_steps) best = std::move(r);
  }
  best->total_steps = total;
  return *std::move(best);
}

/// Capped restarts: each start label but the last gets at most `capping`
/// pivots from a fresh artificial tableau; the first path that finishes wins.
/// If all of them are cut off, the last label is run without a cap.
template <typename Scalar>
BasicRunResult<Scalar> run_capped(const BasicGame<Scalar>& g,
                                  const HeuristicConfig& cfg = {}) {
  if (cfg.capping && *cfg.capping < 1)
    throw InvalidInput("capping must be at least 1");
  const auto order = detail::resolve_order(cfg, g.num_labels());
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    auto r = run_lh(g, order[i], cfg.capping);
    total += r.total_steps;
    if (!r.truncated) {
      r.total_steps = total;
      return r;
    }
  }
  auto r = run_lh(g, order.back());
  r.total_steps += total;
  r.truncated_fallback = true;
  return r;
}

/// Round-robin over one path per start label, one pivot each per round,
/// until some path ends. Memory grows as (m+n) tableaux.
template <typename Scalar>
BasicRunResult<Scalar> run_interleaved(const BasicGame<Scalar>& g,
                                       const HeuristicConfig& cfg = {}) {
  if (g.num_labels() > cfg.interleaved_label_limit)
    throw SizeRefused("interleaved search refused: " +
                      std::to_string(g.num_labels()) + " labels exceed " +
                      std::to_string(cfg.interleaved_label_limit));
  const auto order = detail::resolve_order(cfg, g.num_labels());
  const auto initial = init_tableaux(g);
  std::vector<ComplementaryPath<Scalar>> paths;
  paths.reserve(order.size());
  for (Label l : order) paths.emplace_back(initial, l);

  std::int64_t total = 0;
  for (std::int64_t round = 0; round < kSafetyCap; ++round) {
    for (auto& path : paths) {
      path.step();
      ++total;
      if (!path.done()) continue;
      BasicRunResult<Scalar> r;
      r.start_label = path.start();
      r.path_steps = path.steps();
      r.total_steps = total;
      r.equilibrium = extract_equilibrium(path.tableaux(), g);
      return r;
    }
  }
  throw CycleSuspected("no interleaved path ended within " +
                       std::to_string(kSafetyCap) + " rounds");
}

}  // namespace lhsolve
