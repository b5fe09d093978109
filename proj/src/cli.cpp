#include "lhsolve/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lhsolve/game_io.hpp"
#include "lhsolve/harness.hpp"
#include "lhsolve/heuristics.hpp"
#include "lhsolve/verification.hpp"

namespace lhsolve::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<std::int64_t> parse_capping(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "infinity") return std::nullopt;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size() || v < 1) throw UsageError("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("capping must be a positive integer or 'inf': " + text);
  }
}

std::vector<std::optional<std::int64_t>> parse_capping_list(
    const std::string& text) {
  std::vector<std::optional<std::int64_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_capping(item));
  if (out.empty()) throw UsageError("empty capping list");
  return out;
}

std::string join(const Vector<double>& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ' ';
    s += format_double(v(i));
  }
  return s;
}

void print_profile(std::ostream& out, const MixedProfile<double>& p) {
  out << "x=" << join(p.x) << '\n' << "y=" << join(p.y) << '\n';
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + path);
  return f;
}

struct GenerateArgs {
  std::string game_class = "uniform";
  int m = 2;
  int n = 2;
  double rho = 0.0;
  std::uint64_t seed = 1;
  std::string out_path;
};

struct SolveArgs {
  std::string in;
  std::optional<int> pivot;
  std::string algorithm = "lh";
  std::string capping = "10";
  std::optional<std::int64_t> max_steps;
  bool no_normalize = false;
};

struct EnumerateArgs {
  std::string in;
  bool from_artificial_only = false;
  bool no_normalize = false;
};

struct VerifyArgs {
  std::string in;
  std::string profile;
  double eps = kEpsVerify;
};

struct ExperimentArgs {
  GenerateArgs gen;
  std::int64_t count = 100;
  std::string algorithm = "lh";
  std::string capping = "10";
  std::string cappings = "2,5,10,20,50,100";
  std::string label_policy = "fixed";
  int start_label = 1;
  unsigned workers = 1;
  std::string csv;
  std::string summary;
  std::string histogram;
};

void add_generation_flags(CLI::App* cmd, GenerateArgs& g) {
  cmd->add_option("--class", g.game_class, "uniform | covariant")
      ->check(CLI::IsMember({"uniform", "covariant"}));
  cmd->add_option("-m", g.m, "row strategies")->check(CLI::PositiveNumber);
  cmd->add_option("-n", g.n, "column strategies")->check(CLI::PositiveNumber);
  cmd->add_option("--rho", g.rho, "covariant correlation")
      ->check(CLI::Range(-1.0, 1.0));
  cmd->add_option("--seed", g.seed, "seed");
}

int do_generate(const GenerateArgs& a, std::ostream& out) {
  GenSpec spec{parse_game_class(a.game_class), a.m, a.n, a.rho, a.seed};
  const Game g = generate(spec);
  if (a.out_path.empty())
    out << serialize_game_text(g);
  else
    write_game_file(g, a.out_path);
  return kExitOk;
}

int do_solve(const SolveArgs& a, std::ostream& out) {
  const Game raw = read_game_file(a.in);
  const Game g = a.no_normalize ? raw : normalize_game(raw);
  const Algorithm alg = parse_algorithm(a.algorithm);
  if (a.pivot && alg != Algorithm::lh)
    throw UsageError("--pivot only applies to --algorithm lh");
  const int pivot = a.pivot.value_or(1);
  if (pivot < 1 || pivot > g.num_labels())
    throw UsageError("--pivot must lie in 1.." +
                     std::to_string(g.num_labels()));
  if (a.max_steps && alg != Algorithm::lh)
    throw UsageError("--max-steps only applies to --algorithm lh");
  if (a.max_steps && *a.max_steps < 1)
    throw UsageError("--max-steps must be at least 1");

  HeuristicConfig cfg;
  cfg.capping = parse_capping(a.capping);

  RunResult r;
  switch (alg) {
    case Algorithm::lh: r = run_lh(g, Label(pivot), a.max_steps); break;
    case Algorithm::nd: r = run_nd(g); break;
    case Algorithm::capped: r = run_capped(g, cfg); break;
    case Algorithm::interleaved: r = run_interleaved(g, cfg); break;
  }

  out << "algorithm=" << to_string(alg) << '\n'
      << "start_label=" << r.start_label.value() << '\n'
      << "steps=" << r.path_steps << '\n'
      << "total_steps=" << r.total_steps << '\n'
      << "truncated=" << (r.truncated ? 1 : 0) << '\n'
      << "truncated_fallback=" << (r.truncated_fallback ? 1 : 0) << '\n';
  if (r.equilibrium) {
    // Report payoffs of the game as given, not of its normalized copy.
    const auto eq = make_equilibrium(raw, r.equilibrium->profile);
    print_profile(out, eq.profile);
    out << "support_size=" << eq.support_size() << '\n'
        << "payoff_row=" << format_double(eq.payoff_row) << '\n'
        << "payoff_col=" << format_double(eq.payoff_col) << '\n';
  }
  return kExitOk;
}

int do_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const Game raw = read_game_file(a.in);
  const Game g = a.no_normalize ? raw : normalize_game(raw);
  const auto eqs =
      enumerate_reachable(g, EnumerateOptions{a.from_artificial_only});
  out << "count=" << eqs.size() << '\n';
  for (const auto& eq : eqs) print_profile(out, eq.profile);
  return kExitOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const Game g = read_game_file(a.in);
  const auto p = read_profile_file(a.profile);
  const auto rep = verify_equilibrium(g, p, a.eps);
  out << "is_equilibrium=" << (rep.is_equilibrium ? 1 : 0) << '\n'
      << "max_violation=" << format_double(rep.max_violation) << '\n'
      << "violating_label=";
  if (rep.violating_label)
    out << rep.violating_label->value();
  else
    out << "none";
  out << '\n';
  return kExitOk;
}

ExperimentConfig experiment_config(const ExperimentArgs& a) {
  ExperimentConfig cfg;
  cfg.gen = GenSpec{parse_game_class(a.gen.game_class), a.gen.m, a.gen.n,
                    a.gen.rho, 0};
  cfg.count = a.count;
  cfg.algorithm = parse_algorithm(a.algorithm);
  cfg.heuristic.capping = parse_capping(a.capping);
  cfg.label_policy =
      a.label_policy == "all" ? LabelPolicy::all : LabelPolicy::fixed;
  if (a.start_label < 1 || a.start_label > a.gen.m + a.gen.n)
    throw UsageError("--start-label must lie in 1.." +
                     std::to_string(a.gen.m + a.gen.n));
  cfg.start_label = Label(a.start_label);
  cfg.master_seed = a.gen.seed;
  cfg.workers = std::max(1u, a.workers);
  return cfg;
}

void log_timing(std::ostream& err, const char* what, std::size_t records,
                std::chrono::steady_clock::time_point t0) {
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  err << what << ": " << records << " records in " << dt.count() << " s\n";
}

int do_batch(const ExperimentArgs& a, std::ostream& out, std::ostream& err) {
  const ExperimentConfig cfg = experiment_config(a);
  const auto t0 = std::chrono::steady_clock::now();
  const auto records = run_batch(cfg);
  log_timing(err, "batch", records.size(), t0);

  if (!a.csv.empty()) {
    auto f = open_out(a.csv);
    write_records_csv(f, records);
  }
  const auto steps = path_steps_of(records);
  if (!steps.empty()) {
    const auto stats = summarize_steps(steps);
    if (a.summary.empty()) {
      write_summary(out, stats);
    } else {
      auto f = open_out(a.summary);
      write_summary(f, stats);
    }
  }
  if (!a.histogram.empty()) {
    auto f = open_out(a.histogram);
    write_histogram_csv(f, support_histogram(records));
  }
  const auto failed = records.size() - steps.size();
  if (failed > 0) err << "batch: " << failed << " failed runs\n";
  return kExitOk;
}

int do_sweep(const ExperimentArgs& a, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg = experiment_config(a);
  cfg.algorithm = Algorithm::capped;
  const auto cappings = parse_capping_list(a.cappings);
  const auto t0 = std::chrono::steady_clock::now();
  const auto points = sweep_capping(cfg, cappings);
  std::size_t n_records = 0;
  for (const auto& p : points) n_records += p.records.size();
  log_timing(err, "sweep-capping", n_records, t0);

  if (!a.csv.empty()) {
    std::vector<RunRecord> all;
    for (const auto& p : points)
      all.insert(all.end(), p.records.begin(), p.records.end());
    auto f = open_out(a.csv);
    write_records_csv(f, all);
  }
  if (a.summary.empty()) {
    write_sweep_csv(out, points);
  } else {
    auto f = open_out(a.summary);
    write_sweep_csv(f, points);
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Lemke-Howson bimatrix game solver", "lhsolve"};
  app.require_subcommand(1);
  app.allow_extras(false);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "write a random game");
  add_generation_flags(generate_cmd, gen);
  generate_cmd->add_option("--out", gen.out_path, "output file (stdout if omitted)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "compute one equilibrium");
  solve_cmd->add_option("--in", solve.in, "game file")->required();
  solve_cmd->add_option("--pivot", solve.pivot, "start label for lh");
  solve_cmd->add_option("--algorithm", solve.algorithm)
      ->check(CLI::IsMember({"lh", "nd", "capped", "interleaved"}));
  solve_cmd->add_option("--capping", solve.capping, "pivots per label or 'inf'");
  solve_cmd->add_option("--max-steps", solve.max_steps, "pivot budget for lh");
  solve_cmd->add_flag("--no-normalize", solve.no_normalize);

  EnumerateArgs enumerate;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "equilibria reachable by LH paths");
  enum_cmd->add_option("--in", enumerate.in, "game file")->required();
  enum_cmd->add_flag("--from-artificial-only", enumerate.from_artificial_only);
  enum_cmd->add_flag("--no-normalize", enumerate.no_normalize);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a profile");
  verify_cmd->add_option("--in", verify.in, "game file")->required();
  verify_cmd->add_option("--profile", verify.profile, "profile file")->required();
  verify_cmd->add_option("--eps", verify.eps)->check(CLI::NonNegativeNumber);

  ExperimentArgs batch;
  auto* batch_cmd = app.add_subcommand("batch", "run an experiment batch");
  ExperimentArgs sweep;
  sweep.algorithm = "capped";
  sweep.gen.m = sweep.gen.n = 100;
  auto* sweep_cmd =
      app.add_subcommand("sweep-capping", "capped heuristic over cappings");
  for (auto [cmd, ea] : {std::pair{batch_cmd, &batch}, std::pair{sweep_cmd, &sweep}}) {
    add_generation_flags(cmd, ea->gen);
    cmd->add_option("--count", ea->count)->check(CLI::PositiveNumber);
    cmd->add_option("--workers", ea->workers)->check(CLI::PositiveNumber);
    cmd->add_option("--csv", ea->csv, "per-run CSV");
    cmd->add_option("--summary", ea->summary, "summary file (stdout if omitted)");
  }
  batch_cmd->add_option("--algorithm", batch.algorithm)
      ->check(CLI::IsMember({"lh", "nd", "capped", "interleaved"}));
  batch_cmd->add_option("--capping", batch.capping);
  batch_cmd->add_option("--label-policy", batch.label_policy)
      ->check(CLI::IsMember({"fixed", "all"}));
  batch_cmd->add_option("--start-label", batch.start_label);
  batch_cmd->add_option("--histogram", batch.histogram, "support-size CSV");
  sweep_cmd->add_option("--cappings", sweep.cappings, "comma-separated list");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*generate_cmd) return do_generate(gen, out);
    if (*solve_cmd) return do_solve(solve, out);
    if (*enum_cmd) return do_enumerate(enumerate, out);
    if (*verify_cmd) return do_verify(verify, out);
    if (*batch_cmd) return do_batch(batch, out, err);
    if (*sweep_cmd) return do_sweep(sweep, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolverError;
  }
  return kExitUsage;
}

}  // namespace lhsolve::cli
