#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "vibqubit/config.hpp"
#include "vibqubit/run.hpp"

using namespace vibq;
using namespace vibq::cli;

namespace {

std::string error_key(const std::string& text) {
  try {
    (void)parse_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

}  // namespace

TEST_CASE("defaults") {
  const RunConfig cfg = parse_config(R"({"mode":"evolve"})");
  CHECK(cfg.mode == Mode::evolve);
  CHECK(cfg.params.nu == 1.0);
  CHECK(cfg.params.omega == 2.0);
  CHECK(cfg.params.eta == 0.3);
  CHECK(cfg.params.delta == 0.0);
  CHECK(cfg.dim == 64);
  CHECK(cfg.guard == kDefaultGuard);
  CHECK(cfg.format == Format::csv);
  CHECK(cfg.pipeline == Pipeline::exact);
  REQUIRE(cfg.times.size() == 11);
  CHECK(cfg.times.front() == 0.0);
  CHECK(cfg.times.back() == 10.0);
  CHECK_FALSE(cfg.seed.has_value());

  const RunConfig scan = parse_config(R"({"mode":"scan","omega":3})");
  CHECK(scan.scan_etas == std::vector<double>{0.05, 0.1, 0.2, 0.3});
  CHECK(scan.scan_omegas == std::vector<double>{3.0});
}

TEST_CASE("explicit values") {
  const RunConfig cfg = parse_config(
      R"({"mode":"qubit","eta":0.1,"omega":1.5,"times":[1,2,4],"dim":96,"seed":7,
          "format":"json","pipeline":"closed_form","outcome":"g"})");
  CHECK(cfg.params.eta == 0.1);
  CHECK(cfg.times == std::vector<double>{1.0, 2.0, 4.0});
  CHECK(cfg.dim == 96);
  CHECK(cfg.seed == std::optional<std::uint64_t>(7));
  CHECK(cfg.format == Format::json);
  CHECK(cfg.pipeline == Pipeline::closed_form);
  CHECK(cfg.outcome == OutcomeChoice::ground);

  const RunConfig grid = parse_config(R"({"mode":"evolve","t_min":1,"t_max":2,"t_steps":5})");
  REQUIRE(grid.times.size() == 5);
  CHECK(grid.times[1] == doctest::Approx(1.25));
  CHECK(grid.times.back() == 2.0);

  const RunConfig cat = parse_config(R"({"mode":"cat","wigner_points":41,"wigner_projection":"minus"})");
  CHECK(cat.wigner.points == 41);
  CHECK(cat.wigner_projection == Projection::minus);
}

TEST_CASE("rejections name the offending key") {
  CHECK(error_key("{}") == "mode");
  CHECK(error_key(R"({"mode":"evolve","eta":-0.1})") == "eta");
  CHECK(error_key(R"({"mode":"evolve","laser_power":1.0})") == "laser_power");
  CHECK(error_key(R"({"mode":"evolve","nu":0})") == "nu");
  CHECK(error_key(R"({"mode":"evolve","dim":8})") == "dim");
  CHECK(error_key(R"({"mode":"evolve","dim":64.5})") == "dim");
  CHECK(error_key(R"({"mode":"evolve","guard":40})") == "guard");
  CHECK(error_key(R"({"mode":"evolve","times":[2,1]})") == "times");
  CHECK(error_key(R"({"mode":"evolve","times":[]})") == "times");
  CHECK(error_key(R"({"mode":"evolve","times":[1],"t_min":0})") == "times");
  CHECK(error_key(R"({"mode":"evolve","t_min":2,"t_max":1})") == "t_max");
  CHECK(error_key(R"({"mode":"evolve","format":"xml"})") == "format");
  CHECK(error_key(R"({"mode":"evolve","pipeline":"closed_form"})") == "pipeline");
  CHECK(error_key(R"({"mode":"scan","outcome":"sample"})") == "outcome");
  CHECK(error_key(R"({"mode":"qubit","delta":0.1})") == "delta");
  CHECK(error_key(R"({"mode":"evolve","pipeline":"analytic","delta":0.1})") == "delta");
  CHECK(error_key(R"({"mode":"evolve","seed":-1})") == "seed");
  CHECK(error_key(R"({"mode":"evolve","nested":{"a":1}})") == "nested");
  CHECK(error_key(R"({"mode":"teleport"})") == "mode");
  CHECK(error_key(R"({"mode":"evolve")") == "<document>");
  CHECK(error_key("[1,2]") == "<document>");
  CHECK(error_key(R"({"mode":"evolve","delta":0.1})").empty());
}

TEST_CASE("run exit codes") {
  std::ostringstream out, diag;
  RunConfig ok = parse_config(R"({"mode":"evolve","times":[0,1],"dim":32})");
  CHECK(run(ok, out, diag) == kExitOk);
  CHECK(out.str().find("# table: evolve") != std::string::npos);

  std::ostringstream out2, diag2;
  RunConfig bad = parse_config(R"({"mode":"evolve","eta":3.0,"omega":20,"times":[0,5],"dim":16,"guard":4})");
  CHECK(run(bad, out2, diag2) == kExitNumericalFailure);
  CHECK_FALSE(diag2.str().empty());

  std::ostringstream out3, diag3;
  RunConfig unwritable = ok;
  unwritable.output = "/nonexistent-dir/out.csv";
  CHECK(run(unwritable, out3, diag3) != kExitOk);
}

TEST_CASE("execute produces the documented columns") {
  const auto cols = [](const std::string& text) {
    return execute(parse_config(text)).front().columns;
  };
  CHECK(cols(R"({"mode":"evolve","times":[0,1],"dim":32})") ==
        std::vector<std::string>{"t", "P_e", "mean_n", "norm", "tail", "epsilon", "lambda", "Delta"});
  CHECK(cols(R"({"mode":"qubit","times":[1],"dim":32})") ==
        std::vector<std::string>{"t", "outcome", "P_outcome", "c0_sq", "c1_sq", "leakage", "P_e",
                                 "epsilon", "lambda", "Delta", "error"});
}

TEST_CASE("impossible qubit outcomes are reported in-row") {
  const auto tables = execute(parse_config(R"({"mode":"qubit","times":[0,1],"outcome":"g","dim":32})"));
  const Table& t = tables.front();
  REQUIRE(t.rows.size() == 2);
  const auto err = std::find(t.columns.begin(), t.columns.end(), "error") - t.columns.begin();
  CHECK_FALSE(std::get<std::string>(t.rows[0][err]).empty());
  CHECK(std::get<std::string>(t.rows[1][err]).empty());
}

TEST_CASE("qubit at t = 0 sits in |0>") {
  const Table t = execute(parse_config(R"({"mode":"qubit","times":[0],"dim":32})")).front();
  REQUIRE(t.rows.size() == 1);
  CHECK(std::get<double>(t.rows[0][3]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::get<double>(t.rows[0][4]) <= 1e-20);
  CHECK(std::get<std::string>(t.rows[0][1]) == "e");
}

TEST_CASE("cat mode reports t_cat and a Wigner grid") {
  const auto tables = execute(parse_config(R"({"mode":"cat","wigner_points":11})"));
  REQUIRE(tables.size() == 2);
  CHECK(tables[0].name == "cat_state");
  CHECK(tables[1].name == "wigner");
  CHECK(tables[1].rows.size() == 121);
  const auto& meta = tables[0].meta;
  const auto it = std::find_if(meta.begin(), meta.end(), [](const auto& kv) { return kv.first == "t_cat"; });
  REQUIRE(it != meta.end());
  CHECK(std::stod(it->second) == doctest::Approx(std::acos(-1.0) / std::sqrt(2.25 + 0.0576)).epsilon(1e-12));
}

TEST_CASE("csv output is byte-identical across runs") {
  const RunConfig cfg = parse_config(R"({"mode":"qubit","times":[1,2,3],"outcome":"sample","seed":9,"dim":32})");
  std::ostringstream a, b, diag;
  REQUIRE(run(cfg, a, diag) == kExitOk);
  REQUIRE(run(cfg, b, diag) == kExitOk);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("# seed: 9") != std::string::npos);
}
