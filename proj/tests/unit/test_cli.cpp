#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "config.hpp"
#include "kset/errors.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run kset_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kset::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kset_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("point-coverage") {
    auto r = kset_cli({"point-coverage", "--c", "3", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "point_coverage: 0.875\n"));

    r = kset_cli({"point-coverage", "--c", "3", "--k", "2", "--exact"});
    CHECK(contains(r.out, "exact: 7/8\n"));
    CHECK(contains(r.out, "difference: 0\n"));

    r = kset_cli({"point-coverage", "--c", "0", "--k", "7"});
    CHECK(contains(r.out, "point_coverage: 0\n"));

    r = kset_cli({"point-coverage", "--c", "3", "--k", "0"});
    CHECK(r.code == kset::cli::kExitUsage);
    CHECK(contains(r.err, "k must be >= 1"));
  }

  TEST_CASE("network-coverage") {
    auto r = kset_cli({"network-coverage", "--profile", "forest", "--n", "1606", "--k", "4", "--oracle"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "coverage: 0.700294\n"));
    CHECK(contains(r.out, "oracle_coverage: 0.700294\n"));

    CHECK(contains(kset_cli({"network-coverage", "--q", "0", "--n", "10", "--k", "2"}).out, "coverage: 0\n"));
    CHECK(contains(kset_cli({"network-coverage", "--q", "1", "--n", "1", "--k", "1"}).out, "coverage: 1\n"));
    CHECK(kset_cli({"network-coverage", "--q", "2", "--n", "1", "--k", "1"}).code == 2);
    CHECK(kset_cli({"network-coverage", "--n", "1", "--k", "1"}).code == 2);  // q missing

    r = kset_cli({"network-coverage", "--q", "0.1", "--n", "200000", "--k", "2", "--oracle"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "note: n exceeds the summation oracle budget"));
  }

  TEST_CASE("plan") {
    auto r = kset_cli({"plan", "nodes", "--profile", "forest", "--k", "4", "--t", "0.7"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "bound_value: 1605\n"));
    CHECK(contains(r.out, "binding_check.adjacent: 1604\n"));
    CHECK(contains(r.out, "1606 nodes"));
    CHECK(contains(r.out, "closed-form ceiling is 1605"));

    r = kset_cli({"plan", "subsets", "--profile", "forest", "--n", "1606", "--t", "0.9"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "bound_value: 2\n"));

    r = kset_cli({"plan", "nodes", "--q", "0.5", "--k", "1", "--t", "1.0"});
    CHECK(r.code == kset::cli::kExitInfeasible);
    CHECK(contains(r.out, "status: infeasible"));

    r = kset_cli({"plan", "subsets", "--q", "0.001", "--n", "10", "--t", "0.99", "--format", "json"});
    CHECK(r.code == kset::cli::kExitInfeasible);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["best_coverage"].get<double>() == doctest::Approx(0.0099551197902517901));

    CHECK(kset_cli({"plan"}).code == 2);
  }

  TEST_CASE("plan json carries bound, coverage and binding check") {
    const auto r = kset_cli({"plan", "nodes", "--profile", "forest", "--k", "4", "--t", "0.7", "--format", "json"});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["bound_value"] == 1605);
    CHECK(doc["achieved_coverage"].get<double>() >= 0.7);
    CHECK(doc["binding_check"]["adjacent"] == 1604);
    CHECK(doc["binding_check"]["coverage_at_adjacent"].get<double>() < 0.7);
    CHECK(doc["notes"].size() == 1);
  }

  TEST_CASE("simulate") {
    auto r = kset_cli({"simulate", "--profile", "forest", "--n", "200", "--k", "4", "--trials", "200", "--seed", "9"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "agreement: PASS\n"));

    r = kset_cli({"simulate", "--n", "5", "--k", "1", "--radius", "10000", "--trials", "20"});
    CHECK(contains(r.out, "empirical_mean: 1\n"));
    CHECK(contains(r.out, "std_error: 0\n"));

    r = kset_cli({"simulate", "--n", "5", "--k", "1", "--trials", "0"});
    CHECK(r.code == 2);
    CHECK(kset_cli({"simulate", "--n", "5", "--k", "1", "--grid", "0"}).code == 2);

    r = kset_cli({"simulate", "--profile", "forest", "--match-q", "--n", "10", "--k", "1", "--trials", "5"});
    CHECK(contains(r.out, "radius: 3.09019\n"));
  }

  TEST_CASE("verify") {
    auto r = kset_cli({"verify"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "status: PASS"));
    CHECK_FALSE(contains(r.out, "FAIL"));

    r = kset_cli({"verify", "--format", "json"});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "verify");
    REQUIRE(doc["checks"].is_array());
    CHECK(doc["checks"].size() >= 6);
    for (const auto& check : doc["checks"]) {
      CHECK(check["status"] == "PASS");
      CHECK(check["cells"].get<int>() > 0);
    }
  }

  TEST_CASE("sweep csv layout") {
    auto r = kset_cli({"sweep", "--profile", "forest", "--n-values", "1600:1610", "--k-values", "4"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == "n,k,q,analytic_coverage,empirical_mean,std_error,trials,seed");
    CHECK(rows[5] == "1604,4,0.003,0.699844,,,,");
    CHECK(rows[6] == "1605,4,0.003,0.700069,,,,");

    r = kset_cli({"sweep", "--q", "0.1", "--n-values", "10", "--k-values", "2"});
    CHECK(lines(r.out).size() == 2);

    r = kset_cli({"sweep", "--n-values", "100,200", "--k-values", "2,4", "--simulate", "--trials", "10", "--grid", "10"});
    CHECK(r.code == 0);
    const auto sim_rows = lines(r.out);
    REQUIRE(sim_rows.size() == 5);
    CHECK(sim_rows[1].substr(0, 6) == "100,2,");
    CHECK(sim_rows[1].substr(sim_rows[1].size() - 5) == ",10,0");

    CHECK(kset_cli({"sweep", "--q", "0.1", "--n-values", "5:1", "--k-values", "2"}).code == 2);
    CHECK(kset_cli({"sweep", "--q", "0.1", "--n-values", "", "--k-values", "2"}).code == 2);
    CHECK(kset_cli({"sweep", "--q", "0.1", "--n-values", "10", "--k-values", "2", "--output",
                    "/nonexistent-dir/out.csv"})
              .code == 2);
  }

  TEST_CASE("json output re-renders to identical bytes") {
    const std::vector<std::vector<std::string>> commands = {
        {"point-coverage", "--c", "3", "--k", "2", "--exact"},
        {"network-coverage", "--q", "0.1", "--n", "10", "--k", "3", "--oracle"},
        {"plan", "nodes", "--profile", "forest", "--k", "4", "--t", "0.7"},
        {"plan", "subsets", "--profile", "forest", "--n", "1606", "--t", "0.9"},
        {"simulate", "--n", "50", "--k", "2", "--trials", "10", "--grid", "10"},
        {"sweep", "--q", "0.3", "--n-values", "1:3", "--k-values", "1,2"},
        {"verify"},
    };
    for (auto args : commands) {
      args.push_back("--format");
      args.push_back("json");
      const auto r = kset_cli(args);
      CAPTURE(args[0]);
      const auto reparsed = nlohmann::ordered_json::parse(r.out);
      CHECK(reparsed.dump(2) + "\n" == r.out);
      CHECK(reparsed["schema_version"] == 1);
    }
  }

  TEST_CASE("config file with flag overrides") {
    const auto path = temp_path("config.txt");
    {
      std::ofstream f(path);
      f << "# forest design\nprofile = forest\nk = 4\nt=0.7\n\ntrials = 3\n";
    }
    auto r = kset_cli({"plan", "nodes", "--config", path.string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "bound_value: 1605\n"));

    r = kset_cli({"plan", "nodes", "--config", path.string(), "--k", "1"});
    CHECK(contains(r.out, "k: 1\n"));

    r = kset_cli({"plan", "nodes", "--config", path.string(), "--q", "0.01"});
    CHECK(contains(r.out, "q: 0.01\n"));

    {
      std::ofstream f(path);
      f << "bogus = 1\n";
    }
    CHECK(kset_cli({"plan", "nodes", "--config", path.string()}).code == 2);
    CHECK(kset_cli({"plan", "nodes", "--config", (path.string() + ".missing")}).code == 2);
    std::filesystem::remove(path);
  }

  TEST_CASE("config text parsing") {
    const auto cfg = kset::cli::parse_config_text("q=0.25\nseed = 18446744073709551615\nn-values = 1:4 # tail\n");
    CHECK(*cfg.q == 0.25);
    CHECK(*cfg.seed == 18446744073709551615ULL);
    CHECK(*cfg.n_values == "1:4");
    CHECK_THROWS_AS(kset::cli::parse_config_text("n = ten\n"), kset::InvalidArgument);
    CHECK_THROWS_AS(kset::cli::parse_config_text("just words\n"), kset::InvalidArgument);
    CHECK_THROWS_AS(kset::cli::apply_profile(kset::cli::parse_config_text("profile = desert\n")),
                    kset::InvalidArgument);
  }

  TEST_CASE("value lists") {
    using kset::cli::parse_value_list;
    CHECK(parse_value_list("3:5") == std::vector<std::int64_t>{3, 4, 5});
    CHECK(parse_value_list("7") == std::vector<std::int64_t>{7});
    CHECK(parse_value_list("1,4,9") == std::vector<std::int64_t>{1, 4, 9});
    CHECK_THROWS_AS(parse_value_list("5:1"), kset::InvalidArgument);
    CHECK_THROWS_AS(parse_value_list(""), kset::InvalidArgument);
    CHECK_THROWS_AS(parse_value_list("1,x"), kset::InvalidArgument);
  }

  TEST_CASE("output files are byte-stable across runs") {
    const auto a = temp_path("a.csv"), b = temp_path("b.csv");
    const std::vector<std::string> base = {"simulate", "--n", "80", "--k", "3", "--trials", "25", "--seed", "4"};
    auto with_output = [&](const std::filesystem::path& p) {
      auto args = base;
      args.insert(args.end(), {"--output", p.string()});
      return args;
    };
    CHECK(kset_cli(with_output(a)).code == 0);
    CHECK(kset_cli(with_output(b)).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }
}
