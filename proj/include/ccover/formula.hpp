#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ccover {

// A literal over variable 1..num_vars; neg = true means the negated literal.
struct Literal {
  int var = 0;
  bool neg = false;

  bool operator==(const Literal& o) const { return var == o.var && neg == o.neg; }
  bool operator<(const Literal& o) const {
    if (var != o.var) return var < o.var;
    return neg < o.neg;
  }
};

using Clause = std::vector<Literal>;

struct Formula {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

// Assignment: values[v-1] is the value of variable v.
using Assignment = std::vector<bool>;

// Parse DIMACS CNF.  Accepts 'c' comment lines and a single 'p cnf V C'
// header; literals are nonzero ints terminated by 0.  Throws FormatError
// with a line number on malformed input.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs_file(const std::string& path);

// Serialize to DIMACS.  parse(write(f)) == f for well-formed formulas.
std::string write_dimacs(const Formula& f);

bool evaluate(const Formula& f, const Assignment& a);

// Exhaustive SAT oracle.  Returns the lexicographically first satisfying
// assignment (variable 1 most significant, false < true) or nullopt.
// Throws CapExceededError when num_vars > max_vars.  OpenMP-parallel over
// blocks of the assignment space; result is schedule-independent.
std::optional<Assignment> brute_force_sat(const Formula& f, int max_vars = 24);

// Serial reference implementation, kept for testing and benchmarking.
std::optional<Assignment> brute_force_sat_serial(const Formula& f, int max_vars = 24);

// DPLL with unit propagation.  No variable cap: handles formulas whose
// auxiliary variables are forced by propagation far beyond the brute-force
// range.  Returns some satisfying assignment or nullopt.
std::optional<Assignment> dpll_sat(const Formula& f);

// Not-all-same validation report.
struct NasViolation {
  int clause_index = 0;  // 0-based
  int condition = 0;     // 2: size > 3, 3: uniform multi-literal, 4: literal in >1 size-3 clause
  std::string detail;
};

struct NasReport {
  bool is_nas = true;
  std::vector<NasViolation> violations;
};

NasReport validate_nas(const Formula& f);

// Remove duplicate literals inside clauses, drop tautological clauses, and
// remove duplicate clauses (set-equality, first occurrence kept).
Formula normalize(const Formula& f);

std::string to_string(const Clause& c);

}  // namespace ccover
