#include "lhsolve/harness.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "lhsolve/game_io.hpp"
#include "lhsolve/verification.hpp"

namespace lhsolve {

namespace {

RunRecord to_record(const ExperimentConfig& cfg, std::int64_t index,
                    std::uint64_t seed, const Game& g, const RunResult& r) {
  RunRecord rec;
  rec.game_index = index;
  rec.m = g.m();
  rec.n = g.n();
  rec.algorithm = cfg.algorithm;
  rec.start_label = r.start_label.value();
  if (cfg.algorithm == Algorithm::capped) rec.capping = cfg.heuristic.capping;
  rec.path_steps = r.path_steps;
  rec.total_steps = r.total_steps;
  rec.truncated_fallback = r.truncated_fallback;
  rec.substream_seed = seed;
  const auto& eq = *r.equilibrium;
  rec.support_size = eq.support_size();
  rec.support_row_size = static_cast<int>(eq.support_row.size());
  rec.support_col_size = static_cast<int>(eq.support_col.size());
  rec.payoff_row = eq.payoff_row;
  rec.payoff_col = eq.payoff_col;
  if (!verify_equilibrium(g, eq.profile).is_equilibrium)
    rec.status = RecordStatus::unverified;
  return rec;
}

RunRecord failed_record(const ExperimentConfig& cfg, std::int64_t index,
                        std::uint64_t seed, int start_label,
                        const std::string& what) {
  RunRecord rec;
  rec.game_index = index;
  rec.m = cfg.gen.m;
  rec.n = cfg.gen.n;
  rec.algorithm = cfg.algorithm;
  rec.start_label = start_label;
  if (cfg.algorithm == Algorithm::capped) rec.capping = cfg.heuristic.capping;
  rec.substream_seed = seed;
  rec.status = RecordStatus::failed;
  rec.error = what;
  return rec;
}

std::vector<RunRecord> solve_one(const ExperimentConfig& cfg,
                                 std::int64_t index) {
  const std::uint64_t seed =
      substream_seed(cfg.master_seed, static_cast<std::uint64_t>(index));
  std::vector<RunRecord> out;
  const Game g = batch_game(cfg, index);

  auto attempt = [&](int label, auto&& solve) {
    try {
      out.push_back(to_record(cfg, index, seed, g, solve()));
    } catch (const Error& e) {
      out.push_back(failed_record(cfg, index, seed, label, e.what()));
    }
  };

  switch (cfg.algorithm) {
    case Algorithm::lh:
      if (cfg.label_policy == LabelPolicy::all) {
        for (int k = 1; k <= g.num_labels(); ++k)
          attempt(k, [&] { return run_lh(g, Label(k)); });
      } else {
        attempt(cfg.start_label.value(),
                [&] { return run_lh(g, cfg.start_label); });
      }
      break;
    case Algorithm::nd:
      attempt(0, [&] { return run_nd(g); });
      break;
    case Algorithm::capped:
      attempt(0, [&] { return run_capped(g, cfg.heuristic); });
      break;
    case Algorithm::interleaved:
      attempt(0, [&] { return run_interleaved(g, cfg.heuristic); });
      break;
  }
  return out;
}

std::int64_t nearest_rank(const std::vector<std::int64_t>& sorted,
                          std::int64_t per_mille) {
  const auto n = static_cast<std::int64_t>(sorted.size());
  const std::int64_t rank = std::max<std::int64_t>(1, (per_mille * n + 999) / 1000);
  return sorted[static_cast<std::size_t>(rank - 1)];
}

}  // namespace

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::lh: return "lh";
    case Algorithm::nd: return "nd";
    case Algorithm::capped: return "capped";
    case Algorithm::interleaved: return "interleaved";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "lh") return Algorithm::lh;
  if (name == "nd") return Algorithm::nd;
  if (name == "capped") return Algorithm::capped;
  if (name == "interleaved") return Algorithm::interleaved;
  throw InvalidInput("unknown algorithm '" + name + "'");
}

Game batch_game(const ExperimentConfig& cfg, std::int64_t game_index) {
  GenSpec spec = cfg.gen;
  spec.seed =
      substream_seed(cfg.master_seed, static_cast<std::uint64_t>(game_index));
  return normalize_game(generate(spec));
}

std::vector<RunRecord> run_batch(const ExperimentConfig& cfg) {
  if (cfg.count < 1) throw InvalidInput("batch count must be at least 1");
  if (cfg.gen.m < 1 || cfg.gen.n < 1)
    throw InvalidInput("game sizes must be at least 1");
  if (cfg.algorithm == Algorithm::lh && cfg.label_policy == LabelPolicy::fixed &&
      (cfg.start_label.value() < 1 ||
       cfg.start_label.value() > cfg.gen.m + cfg.gen.n))
    throw InvalidInput("start label out of range");

  const auto count = static_cast<std::size_t>(cfg.count);
  std::vector<std::vector<RunRecord>> slots(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++)
      slots[i] = solve_one(cfg, static_cast<std::int64_t>(i));
  };

  const unsigned width =
      std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(count)));
  if (width == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(width);
    for (unsigned w = 0; w < width; ++w) pool.emplace_back(worker);
  }

  std::vector<RunRecord> records;
  for (auto& slot : slots)
    std::move(slot.begin(), slot.end(), std::back_inserter(records));
  return records;
}

SummaryStats summarize_steps(std::span<const std::int64_t> sample) {
  if (sample.empty()) throw InvalidInput("cannot summarize an empty sample");
  std::vector<std::int64_t> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());

  SummaryStats s;
  s.count = static_cast<std::int64_t>(sorted.size());
  s.min = sorted.front();
  s.max = sorted.back();
  s.mean = mean_of(sorted);
  s.q1 = nearest_rank(sorted, 250);
  s.q3 = nearest_rank(sorted, 750);
  s.p95 = nearest_rank(sorted, 950);
  s.p995 = nearest_rank(sorted, 995);

  // Runs in a sorted sample; strict '>' keeps the smallest value on ties.
  std::int64_t best_run = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (static_cast<std::int64_t>(j - i) > best_run) {
      best_run = static_cast<std::int64_t>(j - i);
      s.mode = sorted[i];
    }
    i = j;
  }
  return s;
}

double mean_of(std::span<const std::int64_t> sample) {
  if (sample.empty()) return 0.0;
  long double sum = 0;
  for (auto v : sample) sum += static_cast<long double>(v);
  return static_cast<double>(sum / static_cast<long double>(sample.size()));
}

std::vector<std::int64_t> path_steps_of(std::span<const RunRecord> records) {
  std::vector<std::int64_t> out;
  out.reserve(records.size());
  for (const auto& r : records)
    if (r.status != RecordStatus::failed) out.push_back(r.path_steps);
  return out;
}

std::vector<std::int64_t> total_steps_of(std::span<const RunRecord> records) {
  std::vector<std::int64_t> out;
  out.reserve(records.size());
  for (const auto& r : records)
    if (r.status != RecordStatus::failed) out.push_back(r.total_steps);
  return out;
}

std::vector<CappingPoint> sweep_capping(
    const ExperimentConfig& cfg,
    std::span<const std::optional<std::int64_t>> cappings) {
  if (cfg.algorithm != Algorithm::capped)
    throw InvalidInput("capping sweep needs the capped algorithm");
  std::vector<CappingPoint> points;
  for (const auto& cap : cappings) {
    ExperimentConfig run = cfg;
    run.heuristic.capping = cap;
    CappingPoint pt;
    pt.capping = cap;
    pt.records = run_batch(run);
    const auto totals = total_steps_of(pt.records);
    pt.mean_total_steps = mean_of(totals);
    std::int64_t fallbacks = 0;
    for (const auto& r : pt.records)
      if (r.status != RecordStatus::failed && r.truncated_fallback) ++fallbacks;
    pt.fallback_fraction =
        totals.empty() ? 0.0
                       : static_cast<double>(fallbacks) /
                             static_cast<double>(totals.size());
    points.push_back(std::move(pt));
  }
  return points;
}

std::map<int, std::int64_t> support_histogram(
    std::span<const RunRecord> records) {
  std::map<int, std::int64_t> hist;
  for (const auto& r : records)
    if (r.status != RecordStatus::failed) ++hist[r.support_size];
  return hist;
}

const char* const kRecordCsvHeader =
    "game_index,m,n,algorithm,start_label,capping,path_steps,total_steps,"
    "truncated_fallback,support_size,support_row,support_col,payoff_row,"
    "payoff_col,substream_seed";

// Failed runs keep their identifying columns and total_steps; the columns
// that describe an equilibrium are left empty.
void write_records_csv(std::ostream& out, std::span<const RunRecord> records) {
  out << kRecordCsvHeader << '\n';
  for (const auto& r : records) {
    const bool ok = r.status != RecordStatus::failed;
    out << r.game_index << ',' << r.m << ',' << r.n << ','
        << to_string(r.algorithm) << ',';
    if (r.start_label > 0) out << r.start_label;
    out << ',';
    if (r.capping) out << *r.capping;
    out << ',';
    if (ok) out << r.path_steps;
    out << ',' << r.total_steps << ',' << (r.truncated_fallback ? 1 : 0) << ',';
    if (ok)
      out << r.support_size << ',' << r.support_row_size << ','
          << r.support_col_size << ',' << format_double(r.payoff_row) << ','
          << format_double(r.payoff_col);
    else
      out << ",,,,";
    out << ',' << r.substream_seed << '\n';
  }
}

void write_summary(std::ostream& out, const SummaryStats& s) {
  out << "mode=" << s.mode << '\n'
      << "mean=" << format_double(s.mean) << '\n'
      << "q1=" << s.q1 << '\n'
      << "q3=" << s.q3 << '\n'
      << "p95=" << s.p95 << '\n'
      << "p995=" << s.p995 << '\n'
      << "min=" << s.min << '\n'
      << "max=" << s.max << '\n'
      << "count=" << s.count << '\n';
}

void write_histogram_csv(std::ostream& out,
                         const std::map<int, std::int64_t>& histogram) {
  out << "support_size,count\n";
  for (const auto& [size, count] : histogram) out << size << ',' << count << '\n';
}

void write_sweep_csv(std::ostream& out, std::span<const CappingPoint> points) {
  out << "capping,mean_total_steps,fallback_fraction\n";
  for (const auto& p : points) {
    if (p.capping)
      out << *p.capping;
    else
      out << "inf";
    out << ',' << format_double(p.mean_total_steps) << ','
        << format_double(p.fallback_fraction) << '\n';
  }
}

}  // namespace lhsolve
