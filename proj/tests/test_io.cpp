#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "rnc/io.hpp"

using namespace rnc;

TEST_CASE("parse_configuration") {
  auto config = parse_configuration(
      R"({"dimension":2,"points":[["1","0","0"],["1","1","1"],["1","2","4"],)"
      R"(["1","3","9"],["1","4","16"],["1","5","25"]]})");
  CHECK(config.dimension() == 2);
  CHECK(config.size() == 6);
  CHECK(config.point(3) == std::vector<Rat>{1, 2, 4});

  // Integer coordinates and rational strings both parse exactly.
  auto mixed = parse_configuration(
      R"({"dimension":1,"points":[[1,"1/3"],["-2/7",5]]})");
  CHECK(mixed.point(1)[1] == Rat(1) / 3);
  CHECK(mixed.point(2)[0] == Rat(-2) / 7);

  CHECK_THROWS_AS(parse_configuration("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_configuration(R"({"points":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_configuration(R"({"dimension":2,"points":[["1","0"]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_configuration(R"({"dimension":1,"points":[["0","0"]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_configuration(R"({"dimension":1,"points":[["1","1/0"]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_configuration(R"({"dimension":1,"points":[[1.5,"1"]]})"),
      std::invalid_argument);
}

TEST_CASE("configuration JSON round-trip") {
  auto config = parse_configuration(
      R"({"dimension":2,"points":[["1","1/3","0"],["-1","2","4"]]})");
  auto again = parse_configuration(configuration_to_json(config));
  CHECK(again.dimension() == config.dimension());
  CHECK(again.size() == config.size());
  for (int p = 1; p <= config.size(); ++p) {
    CHECK(again.point(p) == config.point(p));
  }
}

TEST_CASE("report serialization") {
  auto cubic = sample_moment_curve(
      3, {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(1) / 2});
  auto report = check_membership(cubic, CheckMethod::Both);

  auto doc = nlohmann::json::parse(report_to_json(report, 42));
  CHECK(doc["dimension"] == 3);
  CHECK(doc["n"] == 7);
  CHECK(doc["seed"] == 42);
  CHECK(doc["on_hyperplane"] == false);
  CHECK(doc["general_position"] == true);
  CHECK(doc["verdict"] == "in_V");
  CHECK(doc["subsets"].size() == 7);
  for (const auto& entry : doc["subsets"]) {
    CHECK(entry["I"].size() == 6);
    CHECK(entry["residue"] == "0");
    CHECK(entry["geometric_determinant"] == "0");
    CHECK(entry["degenerate"] == false);
  }

  // No seed key unless a seed was used.
  auto quiet = nlohmann::json::parse(report_to_json(report));
  CHECK_FALSE(quiet.contains("seed"));

  auto text = report_to_text(report, 42);
  CHECK(text.find("seed: 42") != std::string::npos);
  CHECK(text.find("verdict: in_V") != std::string::npos);
  CHECK(text.find("I = {1,2,3,4,5,6}") != std::string::npos);
}

TEST_CASE("report serialization surfaces the advisory note") {
  std::vector<std::vector<Rat>> flat;
  for (int p = 0; p < 7; ++p) {
    flat.push_back({Rat(p + 1), Rat(p * p), Rat(1), Rat(0)});
  }
  auto report = check_membership(PointConfiguration(3, flat));
  REQUIRE(report.verdict == Verdict::HyperplaneCase);

  auto doc = nlohmann::json::parse(report_to_json(report));
  CHECK(doc["verdict"] == "hyperplane_case");
  CHECK(doc.contains("advisory"));
  CHECK(report_to_text(report).find("note:") != std::string::npos);
}

TEST_CASE("residues serialize as exact rationals") {
  // A configuration engineered to give a fractional residue.
  auto config = parse_configuration(
      R"({"dimension":2,"points":[["1","0","0"],["1","1","1"],["1","2","4"],)"
      R"(["1","3","9"],["1","4","16"],["1/7","5","1/2"]]})");
  auto report = check_membership(config, CheckMethod::Algebraic);
  CHECK(report.verdict == Verdict::NotInV);
  auto doc = nlohmann::json::parse(report_to_json(report));
  std::string residue = doc["subsets"][0]["residue"];
  CHECK(residue.find('/') != std::string::npos);
  CHECK(rat_from_string(residue) == *report.subsets[0].residue);
}
