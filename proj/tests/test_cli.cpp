#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lhsolve/cli.hpp"
#include "lhsolve/game_io.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace lhsolve;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "lhsolve");
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "lhsolve_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

const std::string kExample = "3 2\n1 2\n3 4\n5 6\n7 8\n9 10\n11 12\n";

}  // namespace

TEST_CASE("solve from a given pivot") {
  const auto game = write("example.txt", kExample);
  for (bool raw : {false, true}) {
    std::vector<std::string> args{"solve", "--in", game, "--pivot", "3"};
    if (raw) args.push_back("--no-normalize");
    const auto r = run(args);
    CHECK(r.code == cli::kExitOk);
    CHECK(has_line(r.out, "x=0 0 1"));
    CHECK(has_line(r.out, "y=0 1"));
    CHECK(has_line(r.out, "steps=2"));
    CHECK(has_line(r.out, "payoff_row=6"));
    CHECK(has_line(r.out, "payoff_col=12"));
  }
}

TEST_CASE("solve with each algorithm") {
  const auto game = write("example.txt", kExample);
  CHECK(has_line(run({"solve", "--in", game, "--algorithm", "nd"}).out,
                 "start_label=3"));
  const auto capped = run({"solve", "--in", game, "--algorithm", "capped",
                           "--capping", "2", "--no-normalize"});
  CHECK(has_line(capped.out, "total_steps=6"));
  const auto il = run({"solve", "--in", game, "--algorithm", "interleaved"});
  CHECK(has_line(il.out, "total_steps=8"));
  const auto truncated =
      run({"solve", "--in", game, "--pivot", "3", "--max-steps", "1"});
  CHECK(truncated.code == cli::kExitOk);
  CHECK(has_line(truncated.out, "truncated=1"));
  CHECK(truncated.out.find("x=") == std::string::npos);
}

TEST_CASE("solve usage errors") {
  const auto game = write("example.txt", kExample);
  const auto r = run({"solve", "--in", game, "--pivot", "99"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("1..5") != std::string::npos);
  CHECK(run({"solve", "--in", game, "--bogus"}).code == cli::kExitUsage);
  CHECK(run({"solve"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--in", game, "--algorithm", "nd", "--pivot", "1"}).code ==
        cli::kExitUsage);
  CHECK(run({"solve", "--in", game, "--capping", "zero"}).code ==
        cli::kExitUsage);
  const auto bad = write("bad.txt", "2 2\n1 2\n3\n");
  CHECK(run({"solve", "--in", bad}).code == cli::kExitUsage);
  CHECK(run({"solve", "--in", scratch("missing.txt").string()}).code ==
        cli::kExitUsage);
}

TEST_CASE("solver errors exit with 1") {
  const auto mp = write("pennies.txt", "2 2\n1 -1\n-1 1\n-1 1\n1 -1\n");
  const auto r = run({"solve", "--in", mp, "--no-normalize"});
  CHECK(r.code == cli::kExitSolverError);
  CHECK(run({"solve", "--in", mp}).code == cli::kExitOk);
}

TEST_CASE("generate is deterministic") {
  const auto a = scratch("g1.txt").string();
  const auto b = scratch("g2.txt").string();
  for (const auto& path : {a, b})
    CHECK(run({"generate", "--class", "uniform", "-m", "2", "-n", "2", "--seed",
               "42", "--out", path})
              .code == cli::kExitOk);
  CHECK(read(a) == read(b));
  CHECK(parse_game_text(read(a)) == gen_uniform(2, 2, 42));

  const auto cov = run({"generate", "--class", "covariant", "-m", "3", "-n",
                        "4", "--rho", "-0.7", "--seed", "5"});
  CHECK(parse_game_text(cov.out) == gen_covariant(3, 4, -0.7, 5));
  CHECK(run({"generate", "--rho", "2"}).code == cli::kExitUsage);
  CHECK(run({"generate", "-m", "0"}).code == cli::kExitUsage);
}

TEST_CASE("enumerate") {
  const auto bos = write("bos.txt", "2 2\n2 0\n0 1\n1 0\n0 2\n");
  const auto r = run({"enumerate", "--in", bos});
  CHECK(r.code == cli::kExitOk);
  CHECK(has_line(r.out, "count=3"));
  CHECK(has_line(r.out, "x=1 0"));
  const auto direct = run({"enumerate", "--in", bos, "--from-artificial-only"});
  CHECK(direct.code == cli::kExitOk);
}

TEST_CASE("verify") {
  const auto game = write("example.txt", kExample);
  const auto good = write("good.txt", "0 0 1\n0 1\n");
  const auto bad = write("badprof.txt", "1 0 0\n0 1\n");
  const auto r1 = run({"verify", "--in", game, "--profile", good});
  CHECK(has_line(r1.out, "is_equilibrium=1"));
  CHECK(has_line(r1.out, "violating_label=none"));
  const auto r2 = run({"verify", "--in", game, "--profile", bad});
  CHECK(has_line(r2.out, "is_equilibrium=0"));
  CHECK(has_line(r2.out, "max_violation=4"));
  CHECK(has_line(r2.out, "violating_label=1"));
  const auto wrong = write("wrong.txt", "0.5 0.5\n0 1\n");
  CHECK(run({"verify", "--in", game, "--profile", wrong}).code ==
        cli::kExitUsage);
}

TEST_CASE("batch and sweep-capping") {
  const auto csv1 = scratch("b1.csv").string();
  const auto csv2 = scratch("b2.csv").string();
  const auto hist = scratch("h.csv").string();
  const auto sum = scratch("s.txt").string();
  const auto r1 = run({"batch", "-m", "8", "-n", "8", "--count", "20",
                       "--label-policy", "all", "--seed", "3", "--csv", csv1,
                       "--histogram", hist, "--summary", sum});
  CHECK(r1.code == cli::kExitOk);
  const auto r2 = run({"batch", "-m", "8", "-n", "8", "--count", "20",
                       "--label-policy", "all", "--seed", "3", "--csv", csv2,
                       "--workers", "4"});
  CHECK(r2.code == cli::kExitOk);
  CHECK(read(csv1) == read(csv2));
  CHECK(read(hist).rfind("support_size,count\n", 0) == 0);
  CHECK(has_line(read(sum), "count=320"));
  CHECK(has_line(r2.out, "count=320"));

  const auto sweep = run({"sweep-capping", "-m", "6", "-n", "6", "--count",
                          "10", "--cappings", "1,inf"});
  CHECK(sweep.code == cli::kExitOk);
  CHECK(sweep.out.find("\n1,") != std::string::npos);
  CHECK(sweep.out.find(",1\ninf,") != std::string::npos);
  CHECK(sweep.out.find("\ninf,") != std::string::npos);

  CHECK(run({"batch", "--start-label", "99"}).code == cli::kExitUsage);
  CHECK(run({"batch", "--algorithm", "simplex"}).code == cli::kExitUsage);
  CHECK(run({"sweep-capping", "--cappings", "0"}).code == cli::kExitUsage);
}
