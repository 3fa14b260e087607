#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccover/corpus.hpp"
#include "ccover/errors.hpp"
#include "ccover/reduction.hpp"
#include "ccover/solver.hpp"
#include "ccover/transform.hpp"
#include "ccover/verify.hpp"

using namespace ccover;

namespace {
Clause C(std::initializer_list<int> lits) {
  Clause c;
  for (int l : lits) c.push_back({std::abs(l), l < 0});
  return c;
}

Formula vars_only(int n) { return Formula{n, {}}; }
}  // namespace

TEST_CASE("variables-only instances: 4v blues, optimum 2v, 2^v optimal covers") {
  for (int v = 1; v <= 4; ++v) {
    Instance inst = build_bcc(vars_only(v));
    CHECK(inst.blue.size() == 4u * v);
    // 5 reds per gadget plus one guard between consecutive gadgets.
    CHECK(inst.red.size() == 5u * v + (v - 1));
    auto [cover, stats] = exact_cover(inst);
    CHECK(stats.optimum == 2 * v);
    CHECK(count_optimal_covers(inst) == (1L << v));
  }
}

TEST_CASE("frozen example: single positive unit clause") {
  Formula f{1, {C({1})}};
  Instance inst = build_bcc(f);
  CHECK(inst.blue.size() == 5);  // 4 variable points + 1 equivalence point
  CHECK(inst.red.size() == 5);   // center + 4 caps
  // Equivalence point at the midpoint of the left-vertical pair.
  bool found = false;
  for (size_t i = 0; i < inst.blue.size(); ++i)
    if (inst.blue_ann[i].role == Role::EquivBlue) {
      found = true;
      CHECK(inst.blue[i] == Point{Rat(0), Rat(8)});
    }
  CHECK(found);
  auto [cover, stats] = exact_cover(inst);
  CHECK(stats.optimum == 2);
  CHECK(count_optimal_covers(inst) == 1);  // only the vertical strip pair
}

TEST_CASE("frozen example: contradictory units cost an extra rectangle") {
  Formula f{1, {C({1}), C({-1})}};
  Instance inst = build_bcc(f);
  auto [cover, stats] = exact_cover(inst);
  CHECK(stats.optimum == 3);  // 2n+m = 2, unsat pushes it past the target
}

TEST_CASE("frozen example: mixed size-2 clause") {
  Formula f{2, {C({1, -2})}};
  Instance inst = build_bcc(f);
  CHECK(inst.blue.size() == 9);  // 8 variable points + 1 clause point
  // Clause point where variable 1's left vertical meets variable 2's lower
  // horizontal, with its four diagonal corridor reds.
  Point c{Rat(0), Rat(128)};
  int hits = 0, corridors = 0;
  for (size_t i = 0; i < inst.blue.size(); ++i)
    if (inst.blue_ann[i].role == Role::ClauseBlue) {
      ++hits;
      CHECK(inst.blue[i] == c);
    }
  CHECK(hits == 1);
  for (size_t i = 0; i < inst.red.size(); ++i)
    if (inst.red_ann[i].role == Role::CorridorRed) {
      ++corridors;
      CHECK(abs(inst.red[i].x - c.x) == 4);
      CHECK(abs(inst.red[i].y - c.y) == 4);
    }
  CHECK(corridors == 4);
  CHECK(check_gadgets(inst).pass());
  CHECK(check_lemma1(f, inst).pass());
}

TEST_CASE("size-3 gadget emits both clause points and a shielded helping point") {
  Formula f{3, {C({1, -2, -3})}};
  Instance inst = build_bcc(f);
  CHECK(inst.num_size3 == 1);
  REQUIRE(inst.clauses.size() == 1);
  const ClauseGeom& g = inst.clauses[0];
  REQUIRE(g.blue_ids.size() == 3);
  CHECK(inst.blue_ann[g.blue_ids[0]].role == Role::ClauseBlue);
  CHECK(inst.blue_ann[g.blue_ids[1]].role == Role::ClauseBlue);
  CHECK(inst.blue_ann[g.blue_ids[2]].role == Role::HelpBlue);
  CHECK(g.conds[2].empty());
  CHECK(check_gadgets(inst).pass());
  CHECK(check_lemma1(f, inst).pass());
}

TEST_CASE("one-negative size-3 clause builds the transposed gadget") {
  Formula f{3, {C({-1, 2, 3})}};
  Instance inst = build_bcc(f);
  CHECK(check_gadgets(inst).pass());
  CHECK(check_lemma1(f, inst).pass());
  // The helping rectangle mechanics must be the coordinate transpose of the
  // positive case: swap roles, same counts.
  int help_blues = 0;
  for (const Annot& a : inst.blue_ann)
    if (a.role == Role::HelpBlue) ++help_blues;
  CHECK(help_blues == 1);
}

TEST_CASE("builder reorders the diagonal when a size-3 clause needs it") {
  // Spine 2 sits between its partners 1 and 3 under the identity order, so
  // some variable must move.
  Formula f{3, {C({2, -1, -3})}};
  Instance inst = build_bcc(f);
  int s2 = inst.slot[1];
  int lo = std::min(inst.slot[0], inst.slot[2]);
  int hi = std::max(inst.slot[0], inst.slot[2]);
  bool between = lo < s2 && s2 < hi;
  CHECK_FALSE(between);
  CHECK(check_lemma1(f, inst).pass());
}

TEST_CASE("builder rejects formulas it cannot lay out") {
  CHECK_THROWS_AS(build_bcc(Formula{0, {}}), BuildError);
  // Not in NAS form: uniform size-2 clause.
  CHECK_THROWS_AS(build_bcc(Formula{2, {C({1, 2})}}), BuildError);
}

TEST_CASE("assignment-to-cover round trip on satisfiable formulas") {
  Rng rng(41);
  int done = 0;
  for (int iter = 0; iter < 60 && done < 30; ++iter) {
    Formula nas = random_nas(rng, 2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 5));
    auto model = dpll_sat(nas);
    if (!model) continue;
    Instance inst;
    try {
      inst = build_bcc(nas);
    } catch (const BuildError&) {
      continue;
    }
    ++done;
    Cover c = assign_to_cover(inst, *model);
    CHECK(is_valid_cover(inst, c));
    CHECK(static_cast<long>(c.rects.size()) == 2L * inst.num_vars + inst.num_size3);
    Assignment back = cover_to_assign(inst, c);
    CHECK(evaluate(nas, back));
  }
  CHECK(done >= 30);
}

TEST_CASE("assign_to_cover rejects non-satisfying assignments") {
  Formula f{1, {C({1})}};
  Instance inst = build_bcc(f);
  CHECK_THROWS_AS(assign_to_cover(inst, {false}), BuildError);
  CHECK_THROWS_AS(assign_to_cover(inst, {true, false}), BuildError);  // size mismatch
}

TEST_CASE("lemma 1 equivalence on a random NAS corpus") {
  Rng rng(42);
  int done = 0, sat = 0, unsat = 0;
  for (int iter = 0; iter < 80 && done < 40; ++iter) {
    Formula nas = random_nas(rng, 1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 5));
    Instance inst;
    try {
      inst = build_bcc(nas);
    } catch (const BuildError&) {
      continue;
    }
    ++done;
    (dpll_sat(nas) ? sat : unsat) += 1;
    Report r = check_lemma1(nas, inst);
    if (!r.pass()) MESSAGE(write_dimacs(nas), r.text());
    CHECK(r.pass());
  }
  CHECK(done >= 40);
  CHECK(sat > 0);
  CHECK(unsat > 0);
}

TEST_CASE("abcc augmentation conserves the reduction") {
  Rng rng(43);
  int done = 0;
  for (int iter = 0; iter < 20 && done < 6; ++iter) {
    Formula nas = random_nas(rng, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 4));
    Instance inst;
    try {
      inst = build_bcc(nas);
    } catch (const BuildError&) {
      continue;
    }
    ++done;
    Instance ab = augment_abcc(inst);
    Report r = check_abcc(inst, ab);
    if (!r.pass()) MESSAGE(write_dimacs(nas), r.text());
    CHECK(r.pass());
  }
  CHECK(done >= 6);
}

TEST_CASE("full pipeline from 3-CNF through the point instance") {
  Rng rng(44);
  for (int iter = 0; iter < 10; ++iter) {
    Formula f = random_3cnf(rng, 2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 3));
    TransformResult t = sat_to_nas(f);
    Instance inst = build_bcc(t.formula);
    Report r = check_lemma1(t.formula, inst);
    if (!r.pass()) MESSAGE(write_dimacs(f), r.text());
    CHECK(r.pass());
    CHECK(check_gadgets(inst).pass());
  }
}
