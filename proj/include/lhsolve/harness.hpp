#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lhsolve/generators.hpp"
#include "lhsolve/heuristics.hpp"

namespace lhsolve {

enum class Algorithm { lh, nd, capped, interleaved };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

enum class LabelPolicy {
  fixed,  // one plain-LH run per game from `start_label`
  all,    // one plain-LH run per game and start label
};

struct ExperimentConfig {
  GenSpec gen;  // class, sizes and rho; the seed comes from master_seed
  std::int64_t count = 1;
  Algorithm algorithm = Algorithm::lh;
  HeuristicConfig heuristic;
  LabelPolicy label_policy = LabelPolicy::fixed;
  Label start_label{1};
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
};

enum class RecordStatus {
  ok,
  failed,      // the solver raised (cycling, size guard)
  unverified,  // returned profile failed the best-response check
};

struct RunRecord {
  std::int64_t game_index = 0;
  int m = 0;
  int n = 0;
  Algorithm algorithm = Algorithm::lh;
  int start_label = 0;
  std::optional<std::int64_t> capping;
  std::int64_t path_steps = 0;
  std::int64_t total_steps = 0;
  bool truncated_fallback = false;
  int support_size = 0;
  int support_row_size = 0;
  int support_col_size = 0;
  double payoff_row = 0.0;
  double payoff_col = 0.0;
  std::uint64_t substream_seed = 0;
  RecordStatus status = RecordStatus::ok;
  std::string error;
};

/// Generates game i from substream_seed(master_seed, i), normalizes it and
/// solves it per `cfg`. Records come back in game-index order (then label
/// order for the all-labels policy) and do not depend on `workers`.
std::vector<RunRecord> run_batch(const ExperimentConfig& cfg);

/// The exact game a batch solves for index `game_index` (normalized).
Game batch_game(const ExperimentConfig& cfg, std::int64_t game_index);

struct SummaryStats {
  std::int64_t mode = 0;
  double mean = 0.0;
  std::int64_t q1 = 0;
  std::int64_t q3 = 0;
  std::int64_t p95 = 0;
  std::int64_t p995 = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
  std::int64_t count = 0;
};

/// Mode is the smallest most frequent value; quantile p is the element of
/// 1-based rank ceil(p N) in sorted order (nearest rank).
SummaryStats summarize_steps(std::span<const std::int64_t> sample);

/// path_steps of the successful records.
std::vector<std::int64_t> path_steps_of(std::span<const RunRecord> records);
std::vector<std::int64_t> total_steps_of(std::span<const RunRecord> records);

double mean_of(std::span<const std::int64_t> sample);

struct CappingPoint {
  std::optional<std::int64_t> capping;  // empty = unbounded
  double mean_total_steps = 0.0;
  double fallback_fraction = 0.0;
  std::vector<RunRecord> records;
};

/// Runs the capped batch once per capping value.
std::vector<CappingPoint> sweep_capping(
    const ExperimentConfig& cfg,
    std::span<const std::optional<std::int64_t>> cappings);

/// Count of successful records per support size.
std::map<int, std::int64_t> support_histogram(
    std::span<const RunRecord> records);

extern const char* const kRecordCsvHeader;

void write_records_csv(std::ostream& out, std::span<const RunRecord> records);
void write_summary(std::ostream& out, const SummaryStats& s);
void write_histogram_csv(std::ostream& out,
                         const std::map<int, std::int64_t>& histogram);
void write_sweep_csv(std::ostream& out, std::span<const CappingPoint> points);

}  // namespace lhsolve
