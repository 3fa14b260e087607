#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccover/corpus.hpp"
#include "ccover/errors.hpp"
#include "ccover/transform.hpp"

using namespace ccover;

namespace {
Clause C(std::initializer_list<int> lits) {
  Clause c;
  for (int l : lits) c.push_back({std::abs(l), l < 0});
  return c;
}
}  // namespace

TEST_CASE("uniform size-3 elimination produces the three expected clauses") {
  // (x | y | z) with aux 5, t 6, f 7.
  auto out = eliminate_uniform_size3(C({1, 2, 3}), 5, 6, 7);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == C({1, 2, -5}));
  CHECK(out[1] == C({5, 3, -6}));
  CHECK(out[2] == C({-5, -3, 7}));
  // (-x | -y | -z)
  out = eliminate_uniform_size3(C({-1, -2, -3}), 5, 6, 7);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == C({-1, -2, 5}));
  CHECK(out[1] == C({5, 3, -6}));
  CHECK(out[2] == C({-5, -3, 7}));
}

TEST_CASE("short uniform clauses get padded with the polarity variables") {
  CHECK(pad_short_uniform(C({1, 2}), 6, 7) == C({1, 2, -6}));
  CHECK(pad_short_uniform(C({-1, -2}), 6, 7) == C({-1, -2, 7}));
}

TEST_CASE("splitting renames repeated size-3 occurrences and chains copies") {
  // Variable 1 appears positively in two size-3 clauses.
  Formula f{5, {C({1, 2, -3}), C({1, 4, -5})}};
  SplitResult r = split_size3_occurrences(f);
  CHECK(r.formula.num_vars == 6);
  REQUIRE(r.copies.size() == 1);
  CHECK(r.copies[0].second == 1);
  int copy = r.copies[0].first;
  CHECK(r.formula.clauses[1] == C({copy, 4, -5}));
  // Equivalence clauses chain the copy to the original.
  bool fwd = false, bwd = false;
  for (const Clause& c : r.formula.clauses) {
    if (c == C({1, -copy})) fwd = true;
    if (c == C({-1, copy})) bwd = true;
  }
  CHECK(fwd);
  CHECK(bwd);
  CHECK(validate_nas(r.formula).is_nas);
}

TEST_CASE("sat_to_nas frozen example") {
  // (x1|x2|x3) & (-x1|x2|-x3): clause 1 is uniform and gains aux 6 (after
  // t=4, f=5); clause 2 is already mixed.
  Formula f{3, {C({1, 2, 3}), C({-1, 2, -3})}};
  TransformResult r = sat_to_nas(f);
  CHECK(validate_nas(r.formula).is_nas);
  CHECK(r.formula.num_vars >= 6);
  CHECK(r.map.origins[0].kind == VarOrigin::Original);
  CHECK(r.map.origins[3].kind == VarOrigin::GlobalTrue);
  CHECK(r.map.origins[4].kind == VarOrigin::GlobalFalse);
  CHECK(r.map.origins[5].kind == VarOrigin::Aux);
}

TEST_CASE("sat_to_nas skips the polarity variables when nothing is uniform") {
  Formula f{2, {C({1, -2})}};
  TransformResult r = sat_to_nas(f);
  CHECK(r.formula.num_vars == 2);
  CHECK(r.formula.clauses == f.clauses);
}

TEST_CASE("sat_to_nas rejects clauses wider than three literals") {
  Formula f{4, {C({1, 2, 3, 4})}};
  CHECK_THROWS_AS(sat_to_nas(f), BuildError);
}

TEST_CASE("sat_to_nas output validates and stays equisatisfiable, with projection") {
  Rng rng(21);
  for (int iter = 0; iter < 250; ++iter) {
    Formula f = random_3cnf(rng, 2 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 10));
    TransformResult r = sat_to_nas(f);
    CHECK(validate_nas(r.formula).is_nas);
    auto orig = dpll_sat(f);
    auto nas = dpll_sat(r.formula);
    REQUIRE(orig.has_value() == nas.has_value());
    if (nas) {
      Assignment projected = r.map.project(*nas, f.num_vars);
      CHECK(evaluate(f, projected));
    }
  }
}

TEST_CASE("var map serializes to json and back") {
  Formula f{3, {C({1, 2, 3}), C({1, 2, -3})}};
  TransformResult r = sat_to_nas(f);
  VarMap m = VarMap::from_json(r.map.to_json());
  REQUIRE(m.origins.size() == r.map.origins.size());
  for (size_t i = 0; i < m.origins.size(); ++i) {
    CHECK(m.origins[i].kind == r.map.origins[i].kind);
    CHECK(m.origins[i].source == r.map.origins[i].source);
  }
}
