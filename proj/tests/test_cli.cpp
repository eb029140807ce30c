#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "trient/cli.hpp"
#include "trient/measures.hpp"
#include "trient/state_json.hpp"

using namespace trient;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    const auto tick =
        std::chrono::steady_clock::now().time_since_epoch().count();
    path = fs::temp_directory_path() /
           ("trient_test_" + std::to_string(tick));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("state JSON round-trips exactly") {
  TempDir tmp;
  const TripartitePureState s = ghz_state({0.6, 0.8, 0.4});
  const std::string path = tmp.file("state.json");
  save_state_file(s, path);
  const TripartitePureState back = load_state_file(path);
  CHECK(back.n() == s.n());
  CHECK((back.amplitudes() - s.amplitudes()).norm() < 1e-15);
  const MeasureReport r0 = full_report(s);
  const MeasureReport r1 = full_report(back);
  CHECK(std::abs(r0.chi - r1.chi) < 1e-12);
  CHECK(std::abs(r0.coa - r1.coa) < 1e-12);
}

TEST_CASE("state JSON parser names the violated constraint") {
  const auto parse = [](const char* text) {
    return state_from_json(nlohmann::json::parse(text));
  };
  CHECK_THROWS_WITH_AS(parse("{\"amplitudes\": []}"),
                       doctest::Contains("\"n\""), ParseError);
  CHECK_THROWS_WITH_AS(parse("{\"n\": 2, \"amplitudes\": [[1, 0]]}"),
                       doctest::Contains("length"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse("{\"n\": 1, \"amplitudes\": [[1], [0], [0], [0]]}"),
      doctest::Contains("pair"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse("{\"n\": 1, \"amplitudes\": [[0,0],[0,0],[0,0],[0,0]]}"),
      doctest::Contains("zero"), ParseError);
  CHECK_THROWS_AS(parse("[1, 2]"), ParseError);
}

TEST_CASE("cmd_measure emits valid JSON with full precision") {
  TempDir tmp;
  const std::string path = tmp.file("w.json");
  const double t = 1.0 / std::sqrt(3.0);
  const TripartitePureState s = w_state({t, t, t, 0.0});
  save_state_file(s, path);

  std::ostringstream out, err;
  CHECK(cli::cmd_measure(path, "json", out, err) == cli::kOk);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["n"] == 2);
  CHECK(j["local_ranks"] == nlohmann::json({2, 2, 2}));
  const MeasureReport r = full_report(s);
  CHECK(std::abs(j["measures"]["chi"].get<double>() - r.chi) < 1e-15);
  CHECK(std::abs(j["measures"]["concurrence"].get<double>() -
                 r.concurrence) < 1e-15);
}

TEST_CASE("cmd_measure csv has one header and one data row") {
  TempDir tmp;
  const std::string path = tmp.file("s.json");
  save_state_file(standard_state(StandardState::S224), path);
  std::ostringstream out, err;
  CHECK(cli::cmd_measure(path, "csv", out, err) == cli::kOk);
  std::istringstream lines(out.str());
  std::string header, row, extra;
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, row));
  CHECK(!std::getline(lines, extra));
  CHECK(header ==
        "n,rank_a,rank_b,rank_c,concurrence,negativity,coa,tau,chi,varpi,"
        "eta");
  CHECK(row.substr(0, 8) == "4,2,2,4,");
}

TEST_CASE("cmd_measure maps bad input to exit code 2") {
  std::ostringstream out, err;
  CHECK(cli::cmd_measure("/nonexistent/state.json", "json", out, err) ==
        cli::kBadInput);
  CHECK(err.str().find("error") != std::string::npos);

  TempDir tmp;
  const std::string path = tmp.file("short.json");
  std::ofstream(path) << "{\"n\": 2, \"amplitudes\": [[1, 0]]}";
  std::ostringstream out2, err2;
  CHECK(cli::cmd_measure(path, "json", out2, err2) == cli::kBadInput);
  CHECK(err2.str().find("length") != std::string::npos);

  std::ostringstream out3, err3;
  CHECK(cli::cmd_measure(path, "xml", out3, err3) == cli::kBadInput);
}

TEST_CASE("parse_sweep_spec validates axis grammar and names") {
  const auto spec = cli::parse_sweep_spec(
      "ghz", {"lambda0=0.2:0.8:4"}, {"theta=0.5"});
  REQUIRE(spec.axes.size() == 1);
  CHECK(spec.axes[0].name == "lambda0");
  CHECK(spec.axes[0].steps == 4);
  REQUIRE(spec.fixed.size() == 1);
  CHECK(spec.fixed[0].value == 0.5);

  CHECK_THROWS_AS(cli::parse_sweep_spec("ghz", {"lambda0=0.2:0.8"}, {}),
                  InvalidParams);
  CHECK_THROWS_AS(cli::parse_sweep_spec("ghz", {"lt0=0.1:0.2:2"}, {}),
                  InvalidParams);
  CHECK_THROWS_AS(cli::parse_sweep_spec("ghz", {"lambda0=a:b:2"}, {}),
                  InvalidParams);
  CHECK_THROWS_AS(cli::parse_sweep_spec(
                      "ghz", {"lambda0=0.2:0.8:2"}, {"lambda0=0.5"}),
                  InvalidParams);
  CHECK_THROWS_AS(cli::parse_sweep_spec("xyz", {}, {}), InvalidParams);
  CHECK_THROWS_AS(cli::parse_sweep_spec("ghz", {"lambda0=0:1:0"}, {}),
                  InvalidParams);
}

TEST_CASE("cmd_sweep tabulates a GHZ grid") {
  TempDir tmp;
  const std::string out_path = tmp.file("ghz.csv");
  const auto spec = cli::parse_sweep_spec(
      "ghz", {"lambda0=0.2:0.8:4"}, {"theta=0.3"});
  std::ostringstream err;
  REQUIRE(cli::cmd_sweep(spec, out_path, err) == cli::kOk);

  std::ifstream in(out_path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line ==
        "lambda0,lambda1,theta,concurrence,negativity,coa,tau,chi,varpi,"
        "eta");
  int rows = 0;
  double prev_l0 = -1.0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string cell;
    REQUIRE(std::getline(fields, cell, ','));
    const double l0 = std::stod(cell);
    CHECK(l0 > prev_l0);
    prev_l0 = l0;
    REQUIRE(std::getline(fields, cell, ','));
    const double l1 = std::stod(cell);
    CHECK(std::abs(l0 * l0 + l1 * l1 - 1.0) < 1e-12);
    int extra = 0;
    while (std::getline(fields, cell, ',')) ++extra;
    CHECK(extra == 8);
  }
  CHECK(rows == 4);
}

TEST_CASE("cmd_sweep covers the W family with a dependent lt3") {
  TempDir tmp;
  const std::string out_path = tmp.file("w.csv");
  const auto spec = cli::parse_sweep_spec(
      "w", {"lt0=0.3:0.5:3", "lt1=0.3:0.4:2"}, {"lt2=0.55"});
  std::ostringstream err;
  REQUIRE(cli::cmd_sweep(spec, out_path, err) == cli::kOk);
  std::ifstream in(out_path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line.substr(0, 16) == "lt0,lt1,lt2,lt3,");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream fields(line);
    double v[4];
    std::string cell;
    for (double& x : v) {
      REQUIRE(std::getline(fields, cell, ','));
      x = std::stod(cell);
    }
    CHECK(std::abs(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3] -
                   1.0) < 1e-9);
  }
  CHECK(rows == 6);  // last axis varies fastest: 3 x 2 grid
}

TEST_CASE("cmd_sweep rejects infeasible grids without writing") {
  TempDir tmp;
  const std::string out_path = tmp.file("bad.csv");
  const auto spec = cli::parse_sweep_spec(
      "w", {"lt0=0.7:0.9:3"}, {"lt1=0.7", "lt2=0.3"});
  std::ostringstream err;
  CHECK(cli::cmd_sweep(spec, out_path, err) == cli::kBadInput);
  CHECK(err.str().find("infeasible") != std::string::npos);
  CHECK(!fs::exists(out_path));

  const auto ghz_bad =
      cli::parse_sweep_spec("ghz", {"lambda0=0.5:1.5:3"}, {});
  std::ostringstream err2;
  CHECK(cli::cmd_sweep(ghz_bad, tmp.file("bad2.csv"), err2) ==
        cli::kBadInput);

  const auto no_l0 = cli::parse_sweep_spec("ghz", {}, {"theta=0.1"});
  std::ostringstream err3;
  CHECK(cli::cmd_sweep(no_l0, tmp.file("bad3.csv"), err3) == cli::kBadInput);
}

TEST_CASE("cmd_verify prints one JSON line per suite and is repeatable") {
  std::ostringstream out1, out2, err;
  const std::vector<std::string> suites = {"ordering", "lu_invariance"};
  CHECK(cli::cmd_verify(9, 20, 1e-8, suites, "", out1, err) == cli::kOk);
  CHECK(cli::cmd_verify(9, 20, 1e-8, suites, "", out2, err) == cli::kOk);
  CHECK(out1.str() == out2.str());
  std::istringstream lines(out1.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["violations"] == 0);
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("cmd_verify writes the JSONL file when asked") {
  TempDir tmp;
  const std::string out_path = tmp.file("report.jsonl");
  std::ostringstream out, err;
  CHECK(cli::cmd_verify(9, 10, 1e-8, {"ordering"}, out_path, out, err) ==
        cli::kOk);
  CHECK(slurp(out_path) == out.str());
}

TEST_CASE("cmd_verify maps bad arguments to exit code 2") {
  std::ostringstream out, err;
  CHECK(cli::cmd_verify(1, 10, 1e-8, {"nope"}, "", out, err) ==
        cli::kBadInput);
  CHECK(err.str().find("nope") != std::string::npos);
  std::ostringstream out2, err2;
  CHECK(cli::cmd_verify(1, 0, 1e-8, {"ordering"}, "", out2, err2) ==
        cli::kBadInput);
}

TEST_CASE("cmd_classify labels the named families") {
  TempDir tmp;
  std::ostringstream err;

  const auto classify = [&](const TripartitePureState& s) {
    const std::string path = tmp.file("c.json");
    save_state_file(s, path);
    std::ostringstream out;
    REQUIRE(cli::cmd_classify(path, out, err) == cli::kOk);
    return out.str();
  };

  const std::string ghz = classify(ghz_state({0.6, 0.8, 0.0}));
  CHECK(ghz.find("GHZ-type (2,2,2)") != std::string::npos);
  CHECK(ghz.find("ranks: (2,2,2)") != std::string::npos);
  CHECK(ghz.find("thresholds:") != std::string::npos);

  const double t = 1.0 / std::sqrt(3.0);
  CHECK(classify(w_state({t, t, t, 0.0})).find("W-type (2,2,2)") !=
        std::string::npos);

  Eigen::Vector4cd bell;
  bell << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(3);
  e0[0] = 1.0;
  CHECK(classify(product_AB_C(bell, e0)).find("separable (A-BC or AB-C)") !=
        std::string::npos);

  CHECK(classify(standard_state(StandardState::S223))
            .find("(2,2,3) class") != std::string::npos);
  CHECK(classify(standard_state(StandardState::S224))
            .find("(2,2,4) class") != std::string::npos);

  std::ostringstream out, err2;
  CHECK(cli::cmd_classify("/nonexistent.json", out, err2) == cli::kBadInput);
}
