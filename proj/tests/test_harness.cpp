#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "wbound/harness.hpp"

using namespace wbound;

namespace {
  std::string data(char const* name) {
    return std::string(WBOUND_DATA_DIR) + "/" + name;
  }

  RunConfig small() {
    RunConfig c;
    c.seed           = 3;
    c.cases          = 50;
    c.max_len        = 60;
    c.radius         = 2;
    c.exhaustive_len = 3;
    return c;
  }
}  // namespace

TEST(Io, CircuitRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Circuit c = random_circuit(seed, 30);
    c.start.g = g_from_word(parse_sided_word("0:ta 1:aB"));
    EXPECT_EQ(circuit_from_json(to_json(c)), c);
  }
}

TEST(Io, CircuitFiles) {
  Circuit fig = circuit_from_json(read_json_file(data("four_crossings.json")));
  EXPECT_EQ(fig, four_crossing_circuit());
  EXPECT_EQ(area(fig), 2);
  Circuit rect = circuit_from_json(read_json_file(data("rectangle_3.json")));
  EXPECT_EQ(rect, rectangle(3));
}

TEST(Io, ErrorsCarryContext) {
  try {
    read_json_file(data("malformed.json"));
    FAIL();
  } catch (parse_error const& e) {
    EXPECT_NE(std::string(e.what()).find("malformed.json:3:"), std::string::npos)
        << e.what();
  }
  EXPECT_THROW(read_json_file(data("missing.json")), parse_error);
  EXPECT_THROW(circuit_from_json(json{{"steps", {"q"}}}), parse_error);
  EXPECT_THROW(circuit_from_json(json{{"start", {{"side", 2}}}, {"steps", json::array()}}),
               parse_error);
  EXPECT_THROW(circuit_from_json(json::object()), parse_error);
  EXPECT_THROW(complex_from_json(json{{"edges", {"a"}},
                                      {"triangles", {{{"boundary", {{"a", 1}}},
                                                      {"corners", {4}}}}}}),
               parse_error);
}

TEST(Io, ComplexFile) {
  ComplexSpec spec = complex_from_json(read_json_file(data("g_model.json")));
  EXPECT_EQ(to_json(spec), to_json(builtin_complex("g")));
}

TEST(Harness, SmallRunIsCleanExceptTheQuarterTurnCylinder) {
  Report r = run_checks({}, small());
  ASSERT_EQ(r.checks.size(), suite().size());
  for (auto const& c : r.checks) {
    if (c.name == "links") {
      EXPECT_EQ(c.violations, 1u);
    } else {
      EXPECT_EQ(c.violations, 0u) << c.name << " " << c.witnesses.dump();
    }
    EXPECT_GT(c.cases_run, 0u) << c.name;
  }
}

TEST(Harness, QuarterTurnReplacedByHalfTurnPasses) {
  RunConfig c = small();
  c.cylinder_total = Angle{12};
  Report r = run_checks({"links"}, c);
  EXPECT_EQ(r.total_violations(), 0u);
}

TEST(Harness, ReportsAreDeterministic) {
  RunConfig c = small();
  EXPECT_EQ(run_checks({}, c).to_json().dump(2), run_checks({}, c).to_json().dump(2));
  RunConfig d = c;
  d.seed      = 4;
  EXPECT_NE(run_checks({"isoperimetric"}, c).to_json().dump(),
            run_checks({"isoperimetric"}, d).to_json().dump());
  EXPECT_FALSE(run_checks({"coloring"}, c).to_json().dump().find("wall_time") != std::string::npos);
  EXPECT_TRUE(run_checks({"coloring"}, c).to_json(true).dump().find("wall_time") != std::string::npos);
}

TEST(Harness, Selection) {
  Report r = run_checks({"strip-chain", "word-problem"}, small());
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_EQ(r.checks[0].name, "word-problem");  // suite order
  EXPECT_THROW(run_checks({"nope"}, small()), std::invalid_argument);
}

TEST(Harness, WitnessLimit) {
  RunConfig c     = small();
  c.witness_limit = 0;
  Report r        = run_checks({"links"}, c);
  EXPECT_EQ(r.checks[0].violations, 1u);
  EXPECT_TRUE(r.checks[0].witnesses.empty());
  c.witness_limit = 5;
  json w          = run_checks({"links"}, c).checks[0].witnesses.at(0);
  // the witness carries the complex; rebuilding it reproduces the failure
  ComplexSpec spec = complex_from_json(w.at("complex"));
  EXPECT_FALSE(shortest_injective_loop(build_link(spec)).ok);
}

TEST(Harness, ViolationsAreRecorded) {
  CheckParams p;
  p.witness_limit = 2;
  CheckResult r;
  for (int i = 0; i < 5; ++i) {
    r.violation(p, json{{"i", i}});
  }
  EXPECT_EQ(r.violations, 5u);
  EXPECT_EQ(r.witnesses.size(), 2u);
}

TEST(Harness, BoundedCircuitsRespectTheLengthCap) {
  for (std::uint64_t s = 1; s <= 300; ++s) {
    EXPECT_LE(detail::bounded_circuit(s, 400).len(), 400u);
    EXPECT_LE(detail::bounded_circuit(s, 40).len(), 40u);
  }
}

TEST(Harness, PerturbedWordsAreEqual) {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    LetterSeq u = detail::random_word(rng, 30);
    EXPECT_EQ(h_normalize(detail::perturb(rng, u)), h_normalize(u));
  }
}
