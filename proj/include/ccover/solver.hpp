#pragma once

#include "ccover/instance.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace ccover {

using BlueSet = boost::dynamic_bitset<>;

struct Candidate {
  Rect rect;           // bounding box of the covered blue points
  BlueSet covers;      // covered blue indices
};

struct CandidateSet {
  std::vector<Candidate> cands;
};

// All inclusion-maximal red-free rectangles, represented by the bounding box
// of the blue subset they cover; maximality is by covered blue set.  Restricting
// any optimal cover to such boxes never increases its size, so the exact solver
// can search over this set alone.
CandidateSet enumerate_candidates(const Instance& inst);

// A cover is valid iff every blue is covered and every rectangle is red-free.
bool is_valid_cover(const Instance& inst, const Cover& c);

struct SolveStats {
  int optimum = 0;
  long nodes = 0;
};

// Exact minimum cover by branch and bound over the candidate set.  Throws
// CapExceededError when the blue count exceeds max_blues.
std::pair<Cover, SolveStats> exact_cover(const Instance& inst, int max_blues = 128);

// Greedy baseline: repeatedly take the candidate covering the most uncovered
// blues (lowest index on ties).
Cover greedy_cover(const Instance& inst);

// Number of distinct minimum covers, identified by their sets of covered-blue
// sets.  Throws CapExceededError when the blue count exceeds max_blues.
long count_optimal_covers(const Instance& inst, int max_blues = 24);

// True iff the axis-aligned bounding box of the two blues is red-free.
bool pair_cocover_axis(const Instance& inst, int blue_a, int blue_b);

// True iff no red lies on the closed segment between the two blues (i.e. an
// arbitrarily thin rectangle of some orientation covers both).
bool pair_cocover_any(const Instance& inst, int blue_a, int blue_b);

// Exact set cover over rectangles of every direction in `dirs` (pairwise
// point-difference directions and their perpendiculars when empty).  Exact per
// pooled candidate set; heuristic only in the direction list.  Throws
// CapExceededError when the blue count exceeds max_blues.
std::pair<Cover, SolveStats> min_cover_oriented(const Instance& inst,
                                                std::vector<std::pair<Int, Int>> dirs = {},
                                                int max_blues = 32);

// Exhaustive minimum over subsets of a candidate pool; independent oracle for
// the branch-and-bound solver (no bounding, no greedy ordering).
int exhaustive_min_cover_size(const std::vector<BlueSet>& cands, size_t num_blues);

}  // namespace ccover
