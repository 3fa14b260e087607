#pragma once

#include "ccover/formula.hpp"

#include <string>
#include <vector>

namespace ccover {

// Tracks how each output variable of the 3-CNF -> NAS-CNF transformation
// relates to the input formula.
struct VarOrigin {
  enum Kind { Original, Aux, GlobalTrue, GlobalFalse, Copy } kind = Original;
  int source = 0;  // Original/Copy: input/output variable it mirrors; Aux: input clause index
};

struct VarMap {
  std::vector<VarOrigin> origins;  // index v-1 describes output variable v

  std::string to_json() const;
  static VarMap from_json(const std::string& text);

  // Restrict an assignment over the output variables to the input variables.
  Assignment project(const Assignment& a, int original_vars) const;
};

struct TransformResult {
  Formula formula;
  VarMap map;
};

// Rewrite one uniform size-3 clause using a fresh auxiliary variable aux and
// the shared polarity variables t/f:
//   ( x| y| z) -> ( x| y|-aux) (aux| z|-t) (-aux|-z| f)
//   (-x|-y|-z) -> (-x|-y| aux) (aux| z|-t) (-aux|-z| f)
// where z is the clause's third variable.  The unit clauses (t), (-f) are
// emitted once per formula by sat_to_nas.
std::vector<Clause> eliminate_uniform_size3(const Clause& c, int aux, int t, int f);

// Pad a uniform size-2 clause to a mixed size-3 clause:
//   ( x| y) -> ( x| y|-t),   (-x|-y) -> (-x|-y| f).
Clause pad_short_uniform(const Clause& c, int t, int f);

// Rename repeated size-3 occurrences of a variable to fresh copies, chaining
// each copy to the original with (orig|-copy) (-orig|copy).
struct SplitResult {
  Formula formula;
  std::vector<std::pair<int, int>> copies;  // (copy var, original var)
};
SplitResult split_size3_occurrences(const Formula& f);

// Full pipeline: normalize, rewrite uniform clauses, emit shared units,
// split repeated size-3 occurrences.  Output satisfies validate_nas and is
// equisatisfiable with the input; a satisfying output assignment projected
// through the VarMap satisfies the input.
TransformResult sat_to_nas(const Formula& f);

}  // namespace ccover
