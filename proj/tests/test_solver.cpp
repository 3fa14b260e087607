#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccover/corpus.hpp"
#include "ccover/errors.hpp"
#include "ccover/solver.hpp"

#include <cmath>

using namespace ccover;

namespace {
Instance tiny(Rng& rng) {
  int nb = 1 + static_cast<int>(rng() % 10);
  int nr = static_cast<int>(rng() % 11);
  return random_instance(rng, nb, nr, 8);
}
}  // namespace

TEST_CASE("candidates are red-free, tight, and inclusion-maximal") {
  Rng rng(31);
  for (int iter = 0; iter < 150; ++iter) {
    Instance inst = tiny(rng);
    CandidateSet cs = enumerate_candidates(inst);
    for (const Candidate& c : cs.cands) {
      CHECK(c.covers.any());
      for (const Point& r : inst.red) CHECK_FALSE(c.rect.contains(r));
      // The rect is exactly the bbox of its blues, and covers exactly them.
      std::vector<Point> members;
      for (size_t b = 0; b < inst.blue.size(); ++b)
        CHECK(c.covers.test(b) == c.rect.contains(inst.blue[b]));
      for (size_t b = c.covers.find_first(); b != BlueSet::npos; b = c.covers.find_next(b))
        members.push_back(inst.blue[b]);
      CHECK(bbox(members) == c.rect);
    }
    // Pairwise non-nested blue sets.
    for (size_t a = 0; a < cs.cands.size(); ++a)
      for (size_t b = 0; b < cs.cands.size(); ++b)
        if (a != b) CHECK_FALSE(cs.cands[a].covers.is_subset_of(cs.cands[b].covers));
  }
}

TEST_CASE("every single blue admits a candidate") {
  Rng rng(32);
  for (int iter = 0; iter < 60; ++iter) {
    Instance inst = tiny(rng);
    CandidateSet cs = enumerate_candidates(inst);
    for (size_t b = 0; b < inst.blue.size(); ++b) {
      bool covered = false;
      for (const Candidate& c : cs.cands) covered = covered || c.covers.test(b);
      CHECK(covered);
    }
  }
}

TEST_CASE("exact optimum matches the exhaustive oracle on 500 tiny instances") {
  Rng rng(33);
  for (int iter = 0; iter < 500; ++iter) {
    Instance inst = tiny(rng);
    auto [cover, stats] = exact_cover(inst);
    CHECK(is_valid_cover(inst, cover));
    CHECK(static_cast<int>(cover.rects.size()) == stats.optimum);
    CandidateSet cs = enumerate_candidates(inst);
    std::vector<BlueSet> sets;
    for (const Candidate& c : cs.cands) sets.push_back(c.covers);
    CHECK(stats.optimum == exhaustive_min_cover_size(sets, inst.blue.size()));
  }
}

TEST_CASE("greedy is valid, at least exact, and within the harmonic bound") {
  Rng rng(34);
  for (int iter = 0; iter < 200; ++iter) {
    Instance inst = tiny(rng);
    Cover g = greedy_cover(inst);
    CHECK(is_valid_cover(inst, g));
    auto [cover, stats] = exact_cover(inst);
    CHECK(static_cast<int>(g.rects.size()) >= stats.optimum);
    double bound = (std::log(static_cast<double>(inst.blue.size())) + 1.0) * stats.optimum;
    CHECK(static_cast<double>(g.rects.size()) <= bound + 1e-9);
  }
}

TEST_CASE("cover counting agrees with a direct subset enumeration") {
  Rng rng(35);
  for (int iter = 0; iter < 60; ++iter) {
    int nb = 1 + static_cast<int>(rng() % 6);
    Instance inst = random_instance(rng, nb, static_cast<int>(rng() % 7), 6);
    auto [cover, stats] = exact_cover(inst);
    CandidateSet cs = enumerate_candidates(inst);
    int k = stats.optimum;
    // Count k-subsets of candidates covering everything.
    long expect = 0;
    std::vector<int> idx;
    auto rec = [&](auto&& self, size_t start) -> void {
      if (static_cast<int>(idx.size()) == k) {
        BlueSet covered(inst.blue.size());
        for (int i : idx) covered |= cs.cands[i].covers;
        if (covered.count() == inst.blue.size()) ++expect;
        return;
      }
      for (size_t i = start; i < cs.cands.size(); ++i) {
        idx.push_back(static_cast<int>(i));
        self(self, i + 1);
        idx.pop_back();
      }
    };
    rec(rec, 0);
    CHECK(count_optimal_covers(inst) == expect);
  }
}

TEST_CASE("co-coverability predicates") {
  Instance inst;
  inst.blue = {{Rat(0), Rat(0)}, {Rat(4), Rat(4)}, {Rat(0), Rat(4)}, {Rat(4), Rat(3)}};
  inst.blue_ann.resize(4);
  inst.red = {{Rat(2), Rat(2)}};
  inst.red_ann.resize(1);
  // Red at the center blocks the diagonal pair both ways (it is on the segment).
  CHECK_FALSE(pair_cocover_axis(inst, 0, 1));
  CHECK_FALSE(pair_cocover_any(inst, 0, 1));
  // Degenerate vertical box [0,0]x[0,4] misses the red.
  CHECK(pair_cocover_axis(inst, 0, 2));
  CHECK(pair_cocover_any(inst, 0, 2));
  // Box [0,4]x[0,3] contains the red, but the segment to (4,3) misses it:
  // a thin tilted rectangle covers the pair even though no axis box does.
  CHECK_FALSE(pair_cocover_axis(inst, 0, 3));
  CHECK(pair_cocover_any(inst, 0, 3));
}

TEST_CASE("oriented search is never worse than axis-aligned and wins on a diagonal") {
  Rng rng(36);
  for (int iter = 0; iter < 40; ++iter) {
    int nb = 1 + static_cast<int>(rng() % 7);
    Instance inst = random_instance(rng, nb, static_cast<int>(rng() % 8), 6);
    auto [ac, as] = exact_cover(inst);
    auto [oc, os] = min_cover_oriented(inst);
    CHECK(os.optimum <= as.optimum);
    CHECK(is_valid_cover(inst, oc));
    bool all_covered = true;
    for (const Point& b : inst.blue) {
      bool cov = false;
      for (const CoverRect& cr : oc.rects)
        cov = cov || std::visit([&](const auto& r) { return r.contains(b); }, cr);
      all_covered = all_covered && cov;
    }
    CHECK(all_covered);
  }
  // Blues on a diagonal with reds beside it: axis needs one box per blue,
  // a tilted sliver takes all of them at once.
  Instance d;
  for (int i = 0; i < 4; ++i) {
    d.blue.push_back({Rat(i), Rat(i)});
    if (i < 3) {
      d.red.push_back({Rat(i + 1), Rat(i)});
      d.red.push_back({Rat(i), Rat(i + 1)});
    }
  }
  d.blue_ann.resize(d.blue.size());
  d.red_ann.resize(d.red.size());
  auto [ac, as] = exact_cover(d);
  auto [oc, os] = min_cover_oriented(d);
  CHECK(as.optimum == 4);
  CHECK(os.optimum == 1);
}

TEST_CASE("caps raise CapExceededError") {
  Rng rng(37);
  Instance inst = random_instance(rng, 12, 3, 30);
  CHECK_THROWS_AS(exact_cover(inst, 10), CapExceededError);
  CHECK_THROWS_AS(count_optimal_covers(inst, 10), CapExceededError);
  CHECK_THROWS_AS(min_cover_oriented(inst, {}, 10), CapExceededError);
}
