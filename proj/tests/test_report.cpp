#include <nlohmann/json.hpp>
#include <sstream>

#include "doctest.h"
#include "vibqubit/errors.hpp"
#include "vibqubit/report.hpp"

using namespace vibq::cli;

namespace {

Table sample() {
  Table t;
  t.name = "demo";
  t.meta = {{"eta", "0.3"}, {"schema", "1"}};
  t.columns = {"t", "n", "flag", "label"};
  t.add_row({0.1, 3LL, true, std::string("plain")});
  t.add_row({-2.5e-17, -1LL, false, std::string("has,comma \"q\"")});
  return t;
}

}  // namespace

TEST_CASE("format_real round-trips") {
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(-0.03) == "-0.03");
  CHECK(format_real(2.0) == "2");
  for (double v : {1.0 / 3.0, 2.0680851394385487, 1e-300, -7.25e12}) {
    CHECK(std::stod(format_real(v)) == v);
  }
}

TEST_CASE("csv layout") {
  std::ostringstream out;
  write_csv(out, sample());
  const std::string expected =
      "# table: demo\n"
      "# eta: 0.3\n"
      "# schema: 1\n"
      "t,n,flag,label\n"
      "0.1,3,1,plain\n"
      "-2.5e-17,-1,0,\"has,comma \"\"q\"\"\"\n";
  CHECK(out.str() == expected);

  std::ostringstream again;
  write_csv(again, sample());
  CHECK(again.str() == out.str());
}

TEST_CASE("row width is enforced") {
  Table t = sample();
  CHECK_THROWS_AS(t.add_row({1.0}), std::logic_error);
}

TEST_CASE("json output") {
  std::ostringstream out;
  write_json(out, {sample()});
  const nlohmann::json doc = nlohmann::json::parse(out.str());
  CHECK(doc["schema"] == "vibqubit-output/1");
  REQUIRE(doc["tables"].size() == 1);
  const auto& t = doc["tables"][0];
  CHECK(t["name"] == "demo");
  CHECK(t["columns"].size() == 4);
  CHECK(t["rows"][0][0].get<double>() == 0.1);
  CHECK(t["rows"][0][1].get<long long>() == 3);
  CHECK(t["rows"][0][2].get<bool>() == true);
  CHECK(t["rows"][1][3] == "has,comma \"q\"");
}
