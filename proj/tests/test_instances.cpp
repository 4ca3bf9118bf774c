#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "posauct/instances.hpp"
#include "posauct/io.hpp"
#include "posauct/welfare.hpp"

using namespace posauct;

TEST_CASE("gen_theorem1 builds the two-player family") {
  Instance inst = gen_theorem1({100.0, 0.01});
  CHECK(inst.ctrs == std::vector<double>{1.0, 0.01});
  CHECK(inst.valuations == std::vector<double>{100.0, 1.0});
  CHECK(inst.budgets == std::vector<double>{1.01, 1.0});
}

TEST_CASE("gen_theorem1 parameter range") {
  CHECK_THROWS_WITH_AS(gen_theorem1({2.0, 0.1}), doctest::Contains("ParamOutOfRange"), Error);
  CHECK_THROWS_AS(gen_theorem1({10.0, 0.5}), Error);
  CHECK_THROWS_AS(gen_theorem1({10.0, 0.0}), Error);
}

TEST_CASE("gen_theorem1 closed-form welfare identities") {
  for (auto [lambda, eps] : {std::pair{10.0, 0.4}, {100.0, 0.01}, {1000.0, 0.001}}) {
    Instance inst = gen_theorem1({lambda, eps});
    double lw21 = liquid_welfare(inst, assignment_from_sigma({1, 0}));
    double lw12 = liquid_welfare(inst, assignment_from_sigma({0, 1}));
    CHECK(lw21 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(lw12 == doctest::Approx(((1.0 + eps) * lambda + 1.0) / lambda).epsilon(1e-12));
    CHECK(lw21 > lw12);
    CHECK(theorem1_ratio({lambda, eps}) == doctest::Approx(lw21 / lw12).epsilon(1e-12));
  }
}

TEST_CASE("gen_random is deterministic per seed and always validates") {
  Instance a = gen_random(1, 4);
  Instance b = gen_random(1, 4);
  CHECK(a.ctrs == b.ctrs);
  CHECK(a.valuations == b.valuations);
  CHECK(a.budgets == b.budgets);
  CHECK(gen_random(2, 4).ctrs != a.ctrs);
  for (int seed = 0; seed < 200; ++seed) {
    Instance inst = gen_random(seed, 1 + seed % 6);
    // re-validating the generated fields must succeed
    CHECK_NOTHROW(validate_instance(inst.ctrs, inst.valuations, inst.budgets));
  }
}

TEST_CASE("default budget range straddles the binding threshold") {
  int binding = 0, total = 0;
  for (int seed = 0; seed < 1000; ++seed) {
    Instance inst = gen_random(seed, 3);
    for (int i = 0; i < inst.n; ++i) {
      ++total;
      if (inst.budgets[i] < inst.ctrs[0] * inst.valuations[i]) ++binding;
    }
  }
  CHECK(binding > 0);
  CHECK(binding < total);
}

TEST_CASE("instance JSON round trip is bit exact") {
  Instance inst = gen_random(77, 5);
  const std::string path = "test_instance_roundtrip.json";
  save_instance(inst, path);
  Instance back = load_instance(path);
  CHECK(back.ctrs == inst.ctrs);
  CHECK(back.valuations == inst.valuations);
  CHECK(back.budgets == inst.budgets);
  std::remove(path.c_str());
}

TEST_CASE("load_instance error paths") {
  const std::string path = "test_instance_bad.json";
  SUBCASE("malformed JSON") {
    std::ofstream(path) << "{not json";
    CHECK_THROWS_WITH_AS(load_instance(path), doctest::Contains("ParseError"), Error);
  }
  SUBCASE("unsorted ctrs") {
    std::ofstream(path) << R"({"ctrs":[0.5,1.0],"valuations":[1,1],"budgets":[1,1]})";
    CHECK_THROWS_WITH_AS(load_instance(path), doctest::Contains("CtrsNotSorted"), Error);
  }
  SUBCASE("missing field") {
    std::ofstream(path) << R"({"ctrs":[1.0,0.5],"budgets":[1,1]})";
    CHECK_THROWS_AS(load_instance(path), Error);
  }
  std::remove(path.c_str());
}

TEST_CASE("outcome JSON renders -inf and 1-indexed positions") {
  Instance inst = validate_instance({1.0, 0.1}, {10.0, 9.0}, {1.0, 100.0});
  Outcome out = gsp_outcome(inst, {{10.0, 9.0}});
  json j = outcome_to_json(out);
  CHECK(j["sigma"] == json::array({1, 2}));
  CHECK(j["utilities"][0] == "-inf");
  CHECK(j["utilities"][1].is_number());
}

TEST_CASE("profile JSON parsing accepts bare arrays and objects") {
  auto s = scalar_profile_from_json(json::parse(R"([1.01, 1])"));
  CHECK(s.bids == std::vector<double>{1.01, 1.0});
  auto s2 = scalar_profile_from_json(json::parse(R"({"bids":[0.5,2]})"));
  CHECK(s2.bids == std::vector<double>{0.5, 2.0});
  auto m = matrix_profile_from_json(json::parse(R"({"bids":[[1,0],[0.5,0]]})"));
  CHECK(m.bids[1][0] == 0.5);
  CHECK_THROWS_AS(matrix_profile_from_json(json::parse(R"([1,2])")), Error);
  CHECK_THROWS_AS(scalar_profile_from_json(json::parse(R"([[1],[2]])")), Error);
}
