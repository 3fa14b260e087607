#pragma once

#include "ccover/formula.hpp"
#include "ccover/instance.hpp"

#include <string>
#include <vector>

namespace ccover {

struct Failure {
  std::string check;    // e.g. "R1", "lemma1", "pairwise"
  std::string witness;  // human-readable description of the offending object
};

struct Report {
  std::vector<Failure> failures;

  bool pass() const { return failures.empty(); }
  void add(const std::string& check, const std::string& witness) {
    failures.push_back({check, witness});
  }
  void merge(const Report& o) {
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
  std::string text() const;
};

// Both formulas satisfiable or both unsatisfiable, decided by DPLL.
Report check_equisat(const Formula& f, const Formula& g);

// Gadget predicates over the inclusion-maximal red-free candidates:
//   R1  no candidate mixes variable points of two variables or holds three
//       of one variable's points
//   R2  each strip line admits a rectangle with its two variable points and
//       every clause/equivalence point assigned to it
//   R3  a candidate with an equivalence point and any variable point holds
//       the equivalence point's full line pair
//   R4  a candidate with a size-2 clause point and any variable point holds
//       one of the clause's two line pairs
//   R5  helping points pair with no variable point and no other helping
//       point; {H,C1} and {H,C2} are each coverable; {H,C1,C2} is not
Report check_gadgets(const Instance& inst);

// Minimum cover equals 2n+m exactly when the formula is satisfiable, plus
// both conversion directions (assignment -> valid cover of that size, and
// optimal cover -> satisfying assignment).
Report check_lemma1(const Formula& nas, const Instance& inst, int max_blues = 256);

// Augmentation conservation: pairwise any-orientation co-coverability in
// `abcc` matches axis co-coverability in `bcc`; axis optimum unchanged;
// blocker count at most C(|B|,2); and (when |B| <= oriented_max_blues) no
// oriented cover beats the axis optimum.
Report check_abcc(const Instance& bcc, const Instance& abcc, int oriented_max_blues = 20);

}  // namespace ccover
