#pragma once

#include "ccover/formula.hpp"
#include "ccover/instance.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ccover {

using Rng = std::mt19937_64;

// Random 3-CNF: each clause has 1-3 distinct variables (sizes weighted
// toward 3) with independent random signs.
Formula random_3cnf(Rng& rng, int num_vars, int num_clauses);

// Random formula already in NAS form: sizes 1-3, multi-literal clauses mix
// polarities, and no literal is used by two size-3 clauses.
Formula random_nas(Rng& rng, int num_vars, int num_clauses);

// Every 3-CNF formula with exactly `num_vars` variables and up to
// `max_clauses` clauses (distinct variables per clause, no duplicate
// clauses), reduced to one representative per variable-permutation orbit.
std::vector<Formula> exhaustive_tiny_3cnf(int num_vars, int max_clauses);

// Random bicolored point set for solver oracle tests: distinct points with
// integer coordinates in [0, coord_range]^2.
Instance random_instance(Rng& rng, int num_blue, int num_red, int coord_range);

}  // namespace ccover
