#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "driftmax/cli/app.hpp"
#include "driftmax/cli/checks.hpp"
#include "driftmax/cli/config.hpp"
#include "driftmax/cli/experiment.hpp"

using namespace driftmax;
using namespace driftmax::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) {
      out.push_back(cell);
      cell.clear();
    } else cell += c;
  }
  out.push_back(cell);
  return out;
}

std::string temp_path(const std::string& name) { return "driftmax_test_" + name; }

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  auto r = run({});
  CHECK(r.code == kExitUsage);
  r = run({"constants", "--dist", "gaussian(0,1)", "--cm", "2"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("required") != std::string::npos);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"simulate", "--dist", "cauchy(0,1)", "--n", "10", "--x", "1"}).code == kExitUsage);
  CHECK(run({"simulate", "--dist", "gaussian(0,1)", "--n", "ten", "--x", "1"}).code == kExitUsage);
  CHECK(run({"check", "--only", "nope"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"--version"}).out.find("driftmax") == 0);
}

TEST_CASE("constants command") {
  const std::vector<std::string> args{"constants", "--dist", "gaussian(0,1)", "--cm", "2", "--thetabar", "0.5",
                                      "--sigmastar2", "1", "--cmu", "1", "--n", "1048576"};
  const auto table = run(args);
  REQUIRE(table.code == 0);
  CHECK(table.out.find("c_tau") != std::string::npos);
  CHECK(table.out.find("0.0230129093") != std::string::npos);
  CHECK(table.out.find("(h)") != std::string::npos);

  auto json_args = args;
  json_args.push_back("--json");
  const auto js = run(json_args);
  REQUIRE(js.code == 0);
  CHECK(lines_of(js.out).size() == 1);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(std::abs(doc["c_tau"].get<double>() - 0.0230129093289635) < 1e-12);
  CHECK(doc["C"]["log"].get<double>() > 1e12);
  CHECK(doc["ledger"].size() == 14);
  CHECK(doc.contains("C0_split"));
  // Same fields in both forms.
  for (const auto& [key, value] : doc.items())
    if (key != "assumptions" && key != "ledger") CHECK(table.out.find(key) != std::string::npos);
}

TEST_CASE("simulate output is deterministic and locale-independent") {
  const std::vector<std::string> args{"simulate", "--dist", "expdiff(1.2,1)", "--n", "100000", "--x", "1",
                                      "--reps", "10000", "--seed", "42"};
  auto one = args;
  one.insert(one.end(), {"--threads", "1"});
  auto eight = args;
  eight.insert(eight.end(), {"--threads", "8"});
  const auto a = run(one);
  const auto b = run(eight);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == run(one).out);
  const auto rows = lines_of(a.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "N,x,mu,estimator,p_hat,se,ci_lo,ci_hi,reps,seed,elapsed_ms,chunk_size,n_chunks,dist,version,status");
  const auto cells = split_csv(rows[1]);
  REQUIRE(cells.size() == 16);
  CHECK(cells[0] == "100000");
  CHECK(cells[3] == "max_le");
  CHECK(cells[8] == "10000");
  CHECK(cells[9] == "42");
  CHECK(cells[10].empty());
  CHECK(cells[11] == "4096");
  CHECK(cells[13] == "expdiff(1.2,1)");
  CHECK(cells[14] == version_string());
  CHECK(cells[15] == "ok");
  CHECK(a.out.find('\r') == std::string::npos);
  const double p = std::stod(cells[4]);
  CHECK(p > 0.28);
  CHECK(p < 0.36);

  auto timed = one;
  timed.push_back("--timing");
  CHECK(!split_csv(lines_of(run(timed).out)[1])[10].empty());

  auto with_oracle = one;
  with_oracle.push_back("--oracle");
  const auto o = split_csv(lines_of(run(with_oracle).out)[1]);
  REQUIRE(o.size() == 17);
  CHECK(std::abs(std::stod(o[16]) - 0.31772437243501506) < 1e-15);
}

TEST_CASE("simulate config file with sections and overrides") {
  const auto path = temp_path("sim.cfg");
  {
    std::ofstream f(path);
    f << "# defaults\nreps = 2000\nseed = 5\n\n[a]\ndist = rademacher(0.45)\nestimator = exit_up\ny = 5\n"
         "[b]\ndist = gaussian(0,1)\nN = 1048576\nx = 1e6\nestimator = trial\n"
         "[c]\ndist = expdiff(2,1)\nestimator = ladder_infinite\n";
  }
  const auto r = run({"simulate", "--config", path, "--oracle"});
  REQUIRE(r.code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 4);
  const auto a = split_csv(rows[1]);
  CHECK(a[3] == "exit_up");
  CHECK(a[8] == "2000");
  CHECK(a[9] == "5");
  CHECK(std::abs(std::stod(a[16]) - 0.26828259881871870916) < 1e-15);
  const auto b = split_csv(rows[2]);
  CHECK(b[15].rfind("error:", 0) == 0);
  CHECK(b[4].empty());
  CHECK(split_csv(rows[3])[16] == "0.5");

  const auto over = run({"simulate", "--config", path, "--reps", "300", "--seed", "9"});
  REQUIRE(over.code == 0);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(split_csv(lines_of(over.out)[i])[8] == "300");
    CHECK(split_csv(lines_of(over.out)[i])[9] == "9");
  }

  {
    std::ofstream f(path);
    f << "[a]\ndist = gaussian(0,1)\nN = 10\nx = 1\ncolour = blue\n";
  }
  CHECK(run({"simulate", "--config", path}).code == kExitUsage);
  {
    std::ofstream f(path);
    f << "[a\n";
  }
  CHECK(run({"simulate", "--config", path}).code == kExitUsage);
  CHECK(run({"simulate", "--config", temp_path("missing.cfg")}).code == kExitUsage);
  std::remove(path.c_str());
}

TEST_CASE("config parser") {
  std::istringstream in("A = 1\n; note\n[one]\nB= two words \n[two]\nA=3\n");
  const auto cfg = parse_config(in);
  CHECK(cfg.defaults.at("a") == "1");
  REQUIRE(cfg.sections.size() == 2);
  const auto ex = cfg.experiments();
  CHECK(ex[0].first == "one");
  CHECK(ex[0].second.at("a") == "1");
  CHECK(ex[0].second.at("b") == "two words");
  CHECK(ex[1].second.at("a") == "3");
  std::istringstream bad("novalue\n");
  CHECK_THROWS_AS(parse_config(bad), ConfigError);

  ExperimentSpec spec;
  apply_settings(spec, {{"reps", "1e5"}, {"n", "1048576"}, {"x", "+2.5"}, {"horizon", "inf"}});
  CHECK(spec.reps == 100000);
  CHECK(spec.N == 1048576);
  CHECK(spec.x == 2.5);
  CHECK(std::isinf(*spec.horizon));
  CHECK_THROWS_AS(apply_settings(spec, {{"reps", "1.5"}}), ConfigError);
  CHECK_THROWS_AS(apply_settings(spec, {{"reps", "-3"}}), ConfigError);
}

TEST_CASE("sweep rows and ratio column") {
  const auto svg = temp_path("ratio.svg");
  const auto r = run({"sweep", "--dist", "gaussian(0,1)", "--reps", "500", "--plot", svg});
  REQUIRE(r.code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].substr(rows[0].size() - 6) == ",ratio");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split_csv(rows[i]);
    const double N = std::stod(cells[0]);
    CHECK(N == std::ldexp(1.0, 11 + static_cast<int>(i)));
    const double L = std::log(N);
    CHECK(std::stod(cells[1]) == doctest::Approx(L * L));
    CHECK(std::stod(cells[2]) == doctest::Approx(-1.0 / std::sqrt(N)));
    CHECK(std::stod(cells.back()) == doctest::Approx(std::stod(cells[4]) / (L * L * L / std::sqrt(N))));
  }
  std::ifstream f(svg);
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str().rfind("<svg", 0) == 0);
  CHECK(content.str().find("polyline") != std::string::npos);
  std::remove(svg.c_str());

  const auto fixed = run({"sweep", "--dist", "expdiff(1.2,1)", "--n-list", "100,1000", "--drift", "fixed",
                          "--mu", "-0.1", "--x-rule", "fixed", "--x", "2", "--reps", "200"});
  REQUIRE(fixed.code == 0);
  CHECK(lines_of(fixed.out).size() == 3);
  CHECK(std::stod(split_csv(lines_of(fixed.out)[1])[2]) == doctest::Approx(-0.1));
  CHECK(run({"sweep", "--dist", "gaussian(0,1)", "--drift", "fixed", "--mu", "0.5", "--reps", "10"}).code == kExitUsage);
  CHECK(run({"sweep", "--dist", "gaussian(0,1)", "--x-rule", "fixed", "--x", "-1", "--reps", "10"}).code == kExitUsage);
}

TEST_CASE("moving the mean of a step law") {
  for (const char* text : {"gaussian(0,2)", "expdiff(1.5,1)", "rademacher(0.5)", "loggamma(1.5,1.5)"}) {
    const auto moved = with_mean(walks::parse_distribution(text), -0.05);
    INFO(text);
    CHECK(moved.mean() == doctest::Approx(-0.05).epsilon(1e-10));
  }
  CHECK(with_mean(walks::parse_distribution("gaussian(0,2)"), -1.0).variance() == doctest::Approx(2.0));
  CHECK_THROWS_AS(with_mean(walks::parse_distribution("expdiff(2,1)"), -1.5), DomainError);
}

TEST_CASE("oracle command") {
  auto r = run({"oracle", "brownian", "--mu", "-1", "--b", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0.9095822264335") != std::string::npos);
  r = run({"oracle", "--json", "gambler", "--p", "0.45", "--y", "5"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(nlohmann::json::parse(r.out)["up"].get<double>() - 0.26828259881871870916) < 1e-15);
  r = run({"oracle", "--json", "berry-esseen", "--sigma2", "1", "--rho", "1", "--n", "10000"});
  CHECK(nlohmann::json::parse(r.out)["gap"].get<double>() == doctest::Approx(0.03));
  r = run({"oracle", "--json", "thm", "--c", "1", "--n", "22026", "--x", "2", "--mu", "-0.05"});
  CHECK(nlohmann::json::parse(r.out)["value"].get<double>() == doctest::Approx(0.99999788527248898489));
  CHECK(run({"oracle", "expsup", "--alpha", "1", "--beta", "1", "--x", "1"}).code == kExitUsage);
  CHECK(run({"oracle"}).code == kExitUsage);
}

TEST_CASE("check command") {
  auto r = run({"check", "--only", "brownian,tilt"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS  criterion 1 [brownian]") == 0);
  CHECK(r.out.find("criterion 7 [tilt]") != std::string::npos);
  CHECK(r.out.find("all 2 checks passed") != std::string::npos);
  r = run({"check", "--list"});
  CHECK(lines_of(r.out).size() == 11);
  CHECK(check_catalog().size() == 11);
  r = run({"check", "--only", "8", "--seed", "2"});
  CHECK(r.code == kExitOk);
  CHECK_THROWS_AS(run_check("nope", 1, 1), ConfigError);
}
