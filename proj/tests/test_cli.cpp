#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "zetasum/cli.hpp"

using namespace zetasum;
namespace cli = zetasum::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

// Minimal RFC-4180 field splitter for the rows the CLI emits.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

double value_re(const Run& r) {
  const auto j = nlohmann::json::parse(r.out);
  return j.at("value").at("re").get<double>();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval examples") {
    Run r = run({"eval", "hurwitz_zeta", "--s", "-1", "--a", "1", "-o", "json"});
    REQUIRE(r.code == cli::kOk);
    CHECK(value_re(r) == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));

    r = run({"eval", "S", "--t", "0", "--a", "1", "--p", "2", "-o", "json"});
    REQUIRE(r.code == cli::kOk);
    CHECK(value_re(r) == 0.0);

    r = run({"eval", "barnes_log_g", "--a", "2", "-o", "json"});
    REQUIRE(r.code == cli::kOk);
    CHECK(std::abs(value_re(r)) < 1e-15);

    r = run({"eval", "lerch_phi", "--lambda=-0.5", "--s", "0.5", "--a", "0.7"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("0.91876709857384") != std::string::npos);
  }

  TEST_CASE("complex parameters") {
    const Run r = run({"eval", "digamma", "--s", "2,3", "-o", "json"});
    REQUIRE(r.code == cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"]["im"].get<double>() == doctest::Approx(1.1041296805875762).epsilon(1e-14));
    CHECK(j["params"]["s"]["im"].get<double>() == 3.0);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"eval", "hurwitz_zeta", "--s", "1", "--a", "1"}).code == cli::kDomain);
    CHECK(run({"eval", "S", "--t", "2", "--a", "1", "--p", "1"}).code == cli::kDomain);
    CHECK(run({"eval", "S", "--t", "0.1", "--a", "-1", "--p", "1"}).code == cli::kDomain);
    CHECK(run({"eval", "lerch_phi", "--lambda", "0.999", "--s", "2", "--a", "1", "--config", "/nonexistent"}).code ==
          cli::kUsage);
    CHECK(run({"eval", "nonsense"}).code == cli::kUsage);
    CHECK(run({"eval", "hurwitz_zeta", "--s", "abc", "--a", "1"}).code == cli::kUsage);
    CHECK(run({"eval", "hurwitz_zeta", "--a", "1"}).code == cli::kUsage);
    CHECK(run({"eval", "S", "--t", "0.1", "--a", "1", "--p", "1.5"}).code == cli::kUsage);
    CHECK(run({"eval", "S", "--t", "0.1", "--a", "1", "--p", "1", "--m", "3"}).code == cli::kUsage);
    CHECK(run({"eval", "hurwitz_zeta", "--s", "2", "--a", "1", "--epsilon", "9"}).code == cli::kUsage);
    CHECK(run({"check", "thm99"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);

    const Run slow = run({"eval", "lerch_phi", "--lambda", "0.99999", "--s", "2", "--a", "1"});
    CHECK(slow.code == cli::kConvergence);
    CHECK(slow.err.find("best") != std::string::npos);
  }

  TEST_CASE("check verb") {
    Run r = run({"check", "thm1", "eq6.2", "eps-independence"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("3/3") != std::string::npos);
    r = run({"check", "thm1", "--max-terms", "10"});
    CHECK(r.code == cli::kCheckFailed);
    r = run({"check", "thm1", "-o", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at(0).at("id") == "s-series");
    CHECK(j.at(0).at("passed") == true);
    CHECK(j.at(0).at("max_deviation").get<double>() < 1e-9);
    r = run({"check", "--list"});
    CHECK(r.out.find("lgamma-moment") != std::string::npos);
  }

  TEST_CASE("oracle verb") {
    Run r = run({"oracle", "g", "--n", "2", "--a", "0.5,0.5", "-o", "json"});
    REQUIRE(r.code == cli::kOk);
    CHECK(nlohmann::json::parse(r.out).at("deviation").get<double>() < 1e-9);
    r = run({"oracle", "S", "--t", "0.3", "--a", "1", "--p", "3", "-o", "json"});
    REQUIRE(r.code == cli::kOk);
    CHECK(nlohmann::json::parse(r.out).at("deviation").get<double>() < 1e-10);
    CHECK(run({"oracle", "stirling2", "--n", "5", "--k", "2"}).code == cli::kUsage);
    for (const std::string& name : cli::target_names()) CHECK(run({"eval", name, "--help"}).code == cli::kOk);
  }

  TEST_CASE("sweep examples") {
    Run r = run({"sweep", "hurwitz_zeta", "--s", "-3;-2;-1", "--a", "1", "-o", "csv"});
    REQUIRE(r.code == cli::kOk);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "s,a,value_re,value_im,abs_err,method,error");
    CHECK(std::stod(split_csv(lines[1])[2]) == doctest::Approx(1.0 / 120.0).epsilon(1e-15));
    CHECK(std::abs(std::stod(split_csv(lines[2])[2])) < 1e-18);
    CHECK(std::stod(split_csv(lines[3])[2]) == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));

    r = run({"sweep", "lerch_phi_neg", "--lambda", "0.5", "--m", "0;1;2", "--a", "1", "-o", "csv"});
    lines = split_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(std::stod(split_csv(lines[1])[3]) == 2.0);
    CHECK(std::stod(split_csv(lines[2])[3]) == 4.0);
    CHECK(std::stod(split_csv(lines[3])[3]) == 12.0);

    r = run({"sweep", "S", "--t", "linspace(0,0.4,5)", "--a", "1", "--p", "1", "-o", "json"});
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 5);
    CHECK(j[0]["value"]["re"].get<double>() == 0.0);
    CHECK(j[4]["params"]["t"].get<double>() == 0.4);
  }

  TEST_CASE("sweep marks domain errors instead of aborting") {
    const Run r = run({"sweep", "S", "--t", "0.5;1.5", "--a", "1", "--p", "1", "-o", "csv"});
    CHECK(r.code == cli::kOk);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(split_csv(lines[1]).back().empty());
    const auto bad = split_csv(lines[2]);
    CHECK(bad[3].empty());
    CHECK(bad.back().find("|t| < Re(a)") != std::string::npos);
  }

  TEST_CASE("sweep CSV round-trips bit for bit") {
    const Run sweep =
        run({"sweep", "lerch_phi", "--lambda", "-0.5;0.3,0.4", "--s", "linspace(-1.5,2.5,4)", "--a", "0.7;1,0.5", "-o", "csv"});
    REQUIRE(sweep.code == cli::kOk);
    const auto lines = split_lines(sweep.out);
    REQUIRE(lines.size() == 1 + 2 * 4 * 2);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto f = split_csv(lines[i]);
      const Run again = run({"eval", "lerch_phi", "--lambda", f[0], "--s", f[1], "--a", f[2], "-o", "csv"});
      REQUIRE(again.code == cli::kOk);
      CHECK(split_lines(again.out).at(1) == lines[i]);
      // The printed value parses back to the computed double.
      const double re = std::stod(f[3]);
      CHECK(cli::format_number(re) == f[3]);
    }
  }

  TEST_CASE("settings precedence: defaults, config file, flags") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto good = dir / "zetasum_cli_test.json";
    const auto env = dir / "zetasum_cli_env.json";
    std::ofstream(good) << R"({"series": {"max_terms": 10}})";
    std::ofstream(env) << R"({"series": {"max_terms": 12}, "contour": {"epsilon": 0.5}})";

    const std::vector<std::string> base = {"oracle", "S", "--t", "0.45", "--a", "1", "--p", "1"};
    auto with = [&](std::vector<std::string> extra) {
      std::vector<std::string> args = base;
      args.insert(args.end(), extra.begin(), extra.end());
      return run(args);
    };
    CHECK(with({}).code == cli::kOk);
    CHECK(with({"--config", good.string()}).code == cli::kConvergence);
    CHECK(with({"--config", good.string(), "--max-terms", "100000"}).code == cli::kOk);

    ::setenv("ZETASUM_CONFIG", env.string().c_str(), 1);
    CHECK(with({}).code == cli::kConvergence);
    CHECK(with({"--max-terms", "5000"}).code == cli::kOk);
    ::unsetenv("ZETASUM_CONFIG");

    std::ofstream(good) << R"({"series": {"max_term": 10}})";
    CHECK(with({"--config", good.string()}).code == cli::kUsage);
    std::filesystem::remove(good);
    std::filesystem::remove(env);
  }

  TEST_CASE("config documents") {
    cli::Settings st;
    cli::apply_config(st, R"({"contour": {"epsilon": 0.5, "n_ray": 24}, "euler_maclaurin": {"order": 12}})");
    CHECK(st.contour.epsilon == 0.5);
    CHECK(st.contour.n_ray == 24);
    CHECK(st.euler_maclaurin.order == 12);
    CHECK_THROWS_AS(cli::apply_config(st, R"({"contour": {"epsilon": "big"}})"), cli::UsageError);
    CHECK_THROWS_AS(cli::apply_config(st, R"({"other": {}})"), cli::UsageError);
    CHECK_THROWS_AS(cli::apply_config(st, "[1, 2"), cli::UsageError);
  }

  TEST_CASE("value syntax") {
    CHECK(cli::parse_scalar("-1.5") == Complex(-1.5, 0));
    CHECK(cli::parse_scalar("0.5,-2") == Complex(0.5, -2));
    CHECK(cli::parse_values("1;2,1;3").size() == 3);
    const auto lin = cli::parse_values("linspace(0,1,3)");
    REQUIRE(lin.size() == 3);
    CHECK(lin[1] == Complex(0.5, 0));
    CHECK_THROWS_AS(cli::parse_values("linspace(0,1)"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_scalar("1e"), cli::UsageError);
    CHECK(cli::format_scalar({0.1, -0.2}) == "0.10000000000000001,-0.20000000000000001");
  }
}
