#pragma once

#include "ccover/formula.hpp"
#include "ccover/instance.hpp"

namespace ccover {

// Build the bicolored point instance for a NAS formula.  Requires
// validate_nas(f) to pass; chooses a diagonal ordering of the variables so
// every size-3 clause can be laid out, and throws BuildError when no ordering
// exists or an internal placement check fails.
Instance build_bcc(const Formula& nas);

// Cover of size 2*num_vars + num_size3 realizing a satisfying assignment:
// two degenerate strips per variable plus one helping rectangle per size-3
// clause.  Throws BuildError if the assignment does not satisfy the formula
// the instance was built from.
Cover assign_to_cover(const Instance& inst, const Assignment& a);

// Read an assignment back out of a cover: a variable is true iff some
// rectangle contains both blues of one of its vertical lines.
Assignment cover_to_assign(const Instance& inst, const Cover& c);

// Augment to the any-orientation variant: add a blocker red on the open
// segment of every blue pair that no axis rectangle co-covers, placed outside
// every maximal axis candidate so the axis optimum is untouched.  Afterwards
// two blues are co-coverable at some orientation iff they were axis
// co-coverable before.  Throws BuildError if a pair cannot be blocked.
Instance augment_abcc(const Instance& inst);

}  // namespace ccover
