#include "ccover/corpus.hpp"

#include "ccover/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ccover {

namespace {

Clause random_clause(Rng& rng, int num_vars, int size) {
  std::vector<int> vars(num_vars);
  for (int v = 0; v < num_vars; ++v) vars[v] = v + 1;
  std::shuffle(vars.begin(), vars.end(), rng);
  Clause c;
  for (int i = 0; i < size; ++i)
    c.push_back({vars[i], std::uniform_int_distribution<int>(0, 1)(rng) == 1});
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

Formula random_3cnf(Rng& rng, int num_vars, int num_clauses) {
  Formula f;
  f.num_vars = num_vars;
  std::discrete_distribution<int> size_dist({1, 2, 4});
  for (int i = 0; i < num_clauses; ++i) {
    int size = std::min(num_vars, size_dist(rng) + 1);
    f.clauses.push_back(random_clause(rng, num_vars, size));
  }
  return f;
}

Formula random_nas(Rng& rng, int num_vars, int num_clauses) {
  Formula f;
  f.num_vars = num_vars;
  std::set<std::pair<int, bool>> size3_used;
  std::set<std::vector<std::pair<int, bool>>> seen;
  int attempts = 0;
  while (static_cast<int>(f.clauses.size()) < num_clauses && attempts < 1000 * num_clauses) {
    ++attempts;
    std::discrete_distribution<int> size_dist({1, 2, 2});
    int size = std::min(num_vars, size_dist(rng) + 1);
    Clause c = random_clause(rng, num_vars, size);
    if (size >= 2) {
      // Force mixed polarity: flip one literal when uniform.
      bool all_same = true;
      for (const Literal& l : c) all_same = all_same && l.neg == c[0].neg;
      if (all_same) {
        size_t i = std::uniform_int_distribution<size_t>(0, c.size() - 1)(rng);
        c[i].neg = !c[i].neg;
      }
    }
    if (size == 3) {
      bool clash = false;
      for (const Literal& l : c) clash = clash || size3_used.count({l.var, l.neg}) > 0;
      if (clash) continue;
    }
    std::vector<std::pair<int, bool>> key;
    for (const Literal& l : c) key.push_back({l.var, l.neg});
    if (!seen.insert(key).second) continue;
    if (size == 3)
      for (const Literal& l : c) size3_used.insert({l.var, l.neg});
    f.clauses.push_back(c);
  }
  return f;
}

std::vector<Formula> exhaustive_tiny_3cnf(int num_vars, int max_clauses) {
  // All clause shapes: 1-3 distinct variables, each sign pattern, literals
  // sorted by variable.
  std::vector<Clause> shapes;
  for (int size = 1; size <= std::min(3, num_vars); ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i + 1;
    while (true) {
      for (int signs = 0; signs < (1 << size); ++signs) {
        Clause c;
        for (int i = 0; i < size; ++i) c.push_back({idx[i], (signs >> i & 1) == 1});
        shapes.push_back(c);
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == num_vars - (size - 1 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::sort(shapes.begin(), shapes.end());
  auto code_of = [&](const Clause& c) {
    return static_cast<int>(std::lower_bound(shapes.begin(), shapes.end(), c) - shapes.begin());
  };

  // A formula, as a sorted clause-code list, is kept iff it is the
  // lexicographically smallest member of its variable-permutation orbit.
  std::vector<int> perm(num_vars);
  for (int v = 0; v < num_vars; ++v) perm[v] = v + 1;
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm); while (std::next_permutation(perm.begin(), perm.end()));

  auto canonical = [&](const std::vector<int>& codes) {
    for (const std::vector<int>& p : perms) {
      std::vector<int> mapped;
      for (int code : codes) {
        Clause c = shapes[code];
        for (Literal& l : c) l.var = p[l.var - 1];
        std::sort(c.begin(), c.end());
        mapped.push_back(code_of(c));
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped < codes) return false;
    }
    return true;
  };

  std::vector<Formula> out;
  std::vector<int> codes;
  auto emit = [&]() {
    if (!canonical(codes)) return;
    Formula f;
    f.num_vars = num_vars;
    for (int code : codes) f.clauses.push_back(shapes[code]);
    out.push_back(f);
  };
  // Nondecreasing code sequences; strictly increasing would drop duplicate
  // clauses, which normalize removes anyway, so skip exact repeats.
  auto rec = [&](auto&& self, int min_code) -> void {
    emit();
    if (static_cast<int>(codes.size()) == max_clauses) return;
    for (int code = min_code; code < static_cast<int>(shapes.size()); ++code) {
      codes.push_back(code);
      self(self, code + 1);
      codes.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Instance random_instance(Rng& rng, int num_blue, int num_red, int coord_range) {
  Instance inst;
  std::set<std::pair<int, int>> taken;
  std::uniform_int_distribution<int> coord(0, coord_range);
  int guard = 0;
  while (static_cast<int>(inst.blue.size()) < num_blue ||
         static_cast<int>(inst.red.size()) < num_red) {
    if (++guard > 100000)
      throw BuildError("random_instance: grid too small for requested point count");
    int x = coord(rng), y = coord(rng);
    if (!taken.insert({x, y}).second) continue;
    if (static_cast<int>(inst.blue.size()) < num_blue) {
      inst.blue.push_back({Rat(x), Rat(y)});
      inst.blue_ann.push_back({});
    } else {
      inst.red.push_back({Rat(x), Rat(y)});
      inst.red_ann.push_back({});
    }
  }
  return inst;
}

}  // namespace ccover
