#include "ccover/formula.hpp"

#include "ccover/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ccover {

Formula parse_dimacs(std::istream& in) {
  Formula f;
  bool header_seen = false;
  int declared_clauses = -1;
  Clause current;
  bool clause_open = false;
  std::string line;
  int line_no = 0;

  auto fail = [&](const std::string& msg) {
    throw FormatError("dimacs line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "p") {
      if (header_seen) fail("duplicate header");
      std::string fmt;
      if (!(ls >> fmt) || fmt != "cnf") fail("expected 'p cnf V C'");
      if (!(ls >> f.num_vars >> declared_clauses)) fail("expected 'p cnf V C'");
      if (f.num_vars < 0 || declared_clauses < 0) fail("negative counts in header");
      header_seen = true;
      continue;
    }
    if (!header_seen) fail("literals before 'p cnf' header");
    ls.clear();
    ls.str(line);
    long lit;
    while (ls >> lit) {
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
        clause_open = false;
      } else {
        long v = lit < 0 ? -lit : lit;
        if (v > f.num_vars) fail("literal " + std::to_string(lit) + " out of range");
        current.push_back(Literal{static_cast<int>(v), lit < 0});
        clause_open = true;
      }
    }
    if (!ls.eof()) fail("non-integer token");
  }
  if (clause_open) throw FormatError("dimacs: unterminated clause at end of input");
  if (!header_seen) throw FormatError("dimacs: missing 'p cnf' header");
  if (declared_clauses != static_cast<int>(f.clauses.size()))
    throw FormatError("dimacs: header declares " + std::to_string(declared_clauses) +
                      " clauses, found " + std::to_string(f.clauses.size()));
  return f;
}

Formula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_dimacs(in);
}

std::string write_dimacs(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << (l.neg ? -l.var : l.var) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool evaluate(const Formula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.num_vars)
    throw BuildError("assignment size mismatch");
  for (const Clause& c : f.clauses) {
    bool sat = false;
    for (const Literal& l : c) {
      if (a[l.var - 1] != l.neg) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

// Bitmask evaluation: bit (n - v) of the counter is the value of variable v,
// so ascending counters enumerate assignments in lexicographic order with
// variable 1 most significant and false < true.
struct MaskFormula {
  int n;
  std::vector<uint32_t> pos, neg;
  bool has_empty = false;

  explicit MaskFormula(const Formula& f) : n(f.num_vars) {
    pos.reserve(f.clauses.size());
    neg.reserve(f.clauses.size());
    for (const Clause& c : f.clauses) {
      if (c.empty()) {
        has_empty = true;
        continue;
      }
      uint32_t p = 0, m = 0;
      for (const Literal& l : c) {
        uint32_t bit = 1u << (n - l.var);
        if (l.neg)
          m |= bit;
        else
          p |= bit;
      }
      pos.push_back(p);
      neg.push_back(m);
    }
  }

  bool sat(uint32_t a) const {
    for (size_t i = 0; i < pos.size(); ++i)
      if ((a & pos[i]) == 0 && (~a & neg[i]) == 0) return false;
    return true;
  }
};

Assignment unpack(uint32_t a, int n) {
  Assignment out(n);
  for (int v = 1; v <= n; ++v) out[v - 1] = (a >> (n - v)) & 1u;
  return out;
}

}  // namespace

std::optional<Assignment> brute_force_sat_serial(const Formula& f, int max_vars) {
  if (f.num_vars > max_vars)
    throw CapExceededError("brute_force_sat: " + std::to_string(f.num_vars) +
                           " variables exceeds cap " + std::to_string(max_vars));
  MaskFormula mf(f);
  if (mf.has_empty) return std::nullopt;
  uint64_t total = 1ull << f.num_vars;
  for (uint64_t a = 0; a < total; ++a)
    if (mf.sat(static_cast<uint32_t>(a))) return unpack(static_cast<uint32_t>(a), f.num_vars);
  return std::nullopt;
}

std::optional<Assignment> brute_force_sat(const Formula& f, int max_vars) {
  if (f.num_vars > max_vars)
    throw CapExceededError("brute_force_sat: " + std::to_string(f.num_vars) +
                           " variables exceeds cap " + std::to_string(max_vars));
  MaskFormula mf(f);
  if (mf.has_empty) return std::nullopt;
  uint64_t total = 1ull << f.num_vars;
  const uint64_t chunk = 1ull << 14;
  // Chunks are scanned in ascending order so the first hit is the
  // lexicographically first witness; within a chunk the minimum is reduced.
  for (uint64_t base = 0; base < total; base += chunk) {
    uint64_t hi = std::min(total, base + chunk);
    uint64_t best = UINT64_MAX;
#pragma omp parallel for reduction(min : best) schedule(static)
    for (uint64_t a = base; a < hi; ++a)
      if (mf.sat(static_cast<uint32_t>(a)) && a < best) best = a;
    if (best != UINT64_MAX) return unpack(static_cast<uint32_t>(best), f.num_vars);
  }
  return std::nullopt;
}

NasReport validate_nas(const Formula& f) {
  NasReport rep;
  std::map<std::pair<int, bool>, int> size3_uses;
  for (size_t i = 0; i < f.clauses.size(); ++i) {
    const Clause& c = f.clauses[i];
    if (c.size() > 3) {
      rep.violations.push_back({static_cast<int>(i), 2,
                                "clause has " + std::to_string(c.size()) + " literals"});
    }
    if (c.size() >= 2) {
      bool all_pos = std::all_of(c.begin(), c.end(), [](const Literal& l) { return !l.neg; });
      bool all_neg = std::all_of(c.begin(), c.end(), [](const Literal& l) { return l.neg; });
      if (all_pos || all_neg)
        rep.violations.push_back({static_cast<int>(i), 3,
                                  std::string("uniform clause ") + to_string(c)});
    }
    if (c.size() == 3) {
      std::set<std::pair<int, bool>> seen;
      for (const Literal& l : c) seen.insert({l.var, l.neg});
      for (const auto& key : seen) {
        if (++size3_uses[key] == 2) {
          std::string lit = (key.second ? "-" : "") + std::to_string(key.first);
          rep.violations.push_back({static_cast<int>(i), 4,
                                    "literal " + lit + " occurs in more than one size-3 clause"});
        }
      }
    }
  }
  rep.is_nas = rep.violations.empty();
  return rep;
}

Formula normalize(const Formula& f) {
  Formula out;
  out.num_vars = f.num_vars;
  std::set<std::set<std::pair<int, bool>>> seen_clauses;
  for (const Clause& c : f.clauses) {
    Clause dedup;
    std::set<std::pair<int, bool>> lits;
    bool tautology = false;
    for (const Literal& l : c) {
      if (lits.count({l.var, !l.neg})) {
        tautology = true;
        break;
      }
      if (lits.insert({l.var, l.neg}).second) dedup.push_back(l);
    }
    if (tautology) continue;
    std::set<std::pair<int, bool>> key;
    for (const Literal& l : dedup) key.insert({l.var, l.neg});
    if (!seen_clauses.insert(key).second) continue;
    out.clauses.push_back(dedup);
  }
  return out;
}


namespace {

// -1 unassigned, 0 false, 1 true.
bool dpll_rec(const std::vector<Clause>& clauses, std::vector<signed char>& val) {
  // Unit propagation to fixpoint.
  std::vector<std::pair<int, signed char>> trail;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& c : clauses) {
      bool sat = false;
      int unassigned = 0;
      const Literal* unit = nullptr;
      for (const Literal& l : c) {
        signed char v = val[l.var - 1];
        if (v < 0) {
          ++unassigned;
          unit = &l;
        } else if ((v == 1) != l.neg) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      if (unassigned == 0) {
        for (auto& [var, old] : trail) val[var - 1] = old;
        return false;
      }
      if (unassigned == 1) {
        trail.push_back({unit->var, val[unit->var - 1]});
        val[unit->var - 1] = unit->neg ? 0 : 1;
        changed = true;
      }
    }
  }
  int branch = 0;
  for (size_t v = 0; v < val.size() && branch == 0; ++v)
    if (val[v] < 0) branch = static_cast<int>(v) + 1;
  if (branch == 0) return true;
  for (signed char choice : {1, 0}) {
    val[branch - 1] = choice;
    if (dpll_rec(clauses, val)) return true;
    val[branch - 1] = -1;
  }
  for (auto& [var, old] : trail) val[var - 1] = old;
  return false;
}

}  // namespace

std::optional<Assignment> dpll_sat(const Formula& f) {
  std::vector<signed char> val(f.num_vars, -1);
  if (!dpll_rec(f.clauses, val)) return std::nullopt;
  Assignment a(f.num_vars, false);
  for (int v = 0; v < f.num_vars; ++v) a[v] = val[v] == 1;
  return a;
}

std::string to_string(const Clause& c) {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += " ";
    if (c[i].neg) s += "-";
    s += std::to_string(c[i].var);
  }
  return s + ")";
}

}  // namespace ccover
