#include "ccover/verify.hpp"

#include "ccover/errors.hpp"
#include "ccover/reduction.hpp"
#include "ccover/solver.hpp"

#include <array>
#include <map>
#include <set>
#include <sstream>

namespace ccover {

namespace {

std::string rect_str(const Rect& r) {
  return "[" + format_rat(r.x_lo) + "," + format_rat(r.y_lo) + " .. " + format_rat(r.x_hi) +
         "," + format_rat(r.y_hi) + "]";
}

bool bbox_red_free(const Instance& inst, const std::vector<int>& blues) {
  std::vector<Point> pts;
  for (int b : blues) pts.push_back(inst.blue[b]);
  Rect r = bbox(pts);
  for (const Point& p : inst.red)
    if (r.contains(p)) return false;
  return true;
}

}  // namespace

std::string Report::text() const {
  if (pass()) return "all checks passed\n";
  std::ostringstream os;
  for (const Failure& f : failures) os << f.check << ": " << f.witness << "\n";
  return os.str();
}

Report check_equisat(const Formula& f, const Formula& g) {
  Report r;
  bool fs = dpll_sat(f).has_value();
  bool gs = dpll_sat(g).has_value();
  if (fs != gs)
    r.add("equisat", std::string("first formula ") + (fs ? "satisfiable" : "unsatisfiable") +
                         ", second " + (gs ? "satisfiable" : "unsatisfiable"));
  return r;
}

Report check_gadgets(const Instance& inst) {
  Report rep;
  CandidateSet cs = enumerate_candidates(inst);

  // Corner blue ids per variable, and the blue pair of each strip line.
  std::map<std::pair<int, std::string>, int> corner;
  std::vector<int> var_of_blue(inst.blue.size(), 0);  // nonzero for variable points
  for (size_t i = 0; i < inst.blue.size(); ++i) {
    const Annot& a = inst.blue_ann[i];
    if (a.role == Role::VarPoint) {
      corner[{a.var, a.detail}] = static_cast<int>(i);
      var_of_blue[i] = a.var;
    }
  }
  auto line_pair = [&](const LineRef& l) -> std::pair<int, int> {
    const char* d1 = nullptr;
    const char* d2 = nullptr;
    switch (l.which) {
      case LineRef::LeftV: d1 = "ll"; d2 = "ul"; break;
      case LineRef::RightV: d1 = "lr"; d2 = "ur"; break;
      case LineRef::LowerH: d1 = "ll"; d2 = "lr"; break;
      case LineRef::UpperH: d1 = "ul"; d2 = "ur"; break;
    }
    return {corner.at({l.var, d1}), corner.at({l.var, d2})};
  };

  // R1: variable isolation.
  for (const Candidate& c : cs.cands) {
    std::map<int, int> per_var;
    for (size_t b = c.covers.find_first(); b != BlueSet::npos; b = c.covers.find_next(b))
      if (var_of_blue[b]) ++per_var[var_of_blue[b]];
    if (per_var.size() >= 2)
      rep.add("R1", "candidate " + rect_str(c.rect) + " holds variable points of " +
                        std::to_string(per_var.size()) + " variables");
    for (auto& [v, cnt] : per_var)
      if (cnt >= 3)
        rep.add("R1", "candidate " + rect_str(c.rect) + " holds " + std::to_string(cnt) +
                          " points of variable " + std::to_string(v));
  }

  // Blues assigned to each line, from the clause cover conditions.
  std::map<std::pair<int, int>, std::vector<int>> on_line;  // (var, which) -> blue ids
  for (const ClauseGeom& g : inst.clauses)
    for (size_t i = 0; i < g.blue_ids.size(); ++i)
      for (const CoverCond& cc : g.conds[i])
        on_line[{cc.line.var, cc.line.which}].push_back(g.blue_ids[i]);

  // R2: strip feasibility.
  for (int v = 1; v <= inst.num_vars; ++v)
    for (auto which : {LineRef::LeftV, LineRef::RightV, LineRef::LowerH, LineRef::UpperH}) {
      auto [p1, p2] = line_pair({v, which});
      std::vector<int> members = {p1, p2};
      auto it = on_line.find({v, static_cast<int>(which)});
      if (it != on_line.end()) members.insert(members.end(), it->second.begin(), it->second.end());
      if (!bbox_red_free(inst, members))
        rep.add("R2", "strip of variable " + std::to_string(v) + ", line " +
                          std::to_string(static_cast<int>(which)) + " is not red-free");
    }

  // Equivalence points (size-1), size-2 clause points, helping points.
  struct EquivInfo { int blue; LineRef line; };
  struct Size2Info { int blue; LineRef a, b; };
  std::vector<EquivInfo> equivs;
  std::vector<Size2Info> twos;
  std::vector<int> helpers;
  std::vector<std::array<int, 3>> triples;  // C1, C2, H
  for (const ClauseGeom& g : inst.clauses) {
    if (g.size == 1) equivs.push_back({g.blue_ids[0], g.conds[0][0].line});
    if (g.size == 2) twos.push_back({g.blue_ids[0], g.conds[0][0].line, g.conds[0][1].line});
    if (g.size == 3) {
      helpers.push_back(g.blue_ids[2]);
      triples.push_back({g.blue_ids[0], g.blue_ids[1], g.blue_ids[2]});
    }
  }
  std::set<int> helper_set(helpers.begin(), helpers.end());

  for (const Candidate& c : cs.cands) {
    bool has_var = false;
    for (size_t b = c.covers.find_first(); b != BlueSet::npos; b = c.covers.find_next(b))
      if (var_of_blue[b]) has_var = true;

    // R3: equivalence forcing.
    if (has_var)
      for (const EquivInfo& e : equivs)
        if (c.covers.test(e.blue)) {
          auto [p1, p2] = line_pair(e.line);
          if (!(c.covers.test(p1) && c.covers.test(p2)))
            rep.add("R3", "candidate " + rect_str(c.rect) + " holds equivalence point " +
                              std::to_string(e.blue) + " without its full line pair");
        }

    // R4: clause-point corridors.
    if (has_var)
      for (const Size2Info& t : twos)
        if (c.covers.test(t.blue)) {
          auto [a1, a2] = line_pair(t.a);
          auto [b1, b2] = line_pair(t.b);
          if (!((c.covers.test(a1) && c.covers.test(a2)) ||
                (c.covers.test(b1) && c.covers.test(b2))))
            rep.add("R4", "candidate " + rect_str(c.rect) + " holds clause point " +
                              std::to_string(t.blue) + " without either line pair");
        }

    // R5: helping-point mechanics (negative parts).
    int n_help = 0;
    for (int h : helpers)
      if (c.covers.test(h)) ++n_help;
    if (n_help >= 2)
      rep.add("R5", "candidate " + rect_str(c.rect) + " holds two helping points");
    if (n_help >= 1 && has_var)
      rep.add("R5", "candidate " + rect_str(c.rect) + " holds a helping point and a variable point");
  }

  // R5: coverability parts.
  for (auto& [c1, c2, h] : triples) {
    if (!bbox_red_free(inst, {h, c1}))
      rep.add("R5", "{H,C1} not coverable for helping point " + std::to_string(h));
    if (!bbox_red_free(inst, {h, c2}))
      rep.add("R5", "{H,C2} not coverable for helping point " + std::to_string(h));
    if (bbox_red_free(inst, {h, c1, c2}))
      rep.add("R5", "{H,C1,C2} coverable for helping point " + std::to_string(h));
  }
  return rep;
}

Report check_lemma1(const Formula& nas, const Instance& inst, int max_blues) {
  Report rep;
  if (nas.num_vars != inst.num_vars) {
    rep.add("lemma1", "variable count mismatch between formula and instance");
    return rep;
  }
  long target = 2L * inst.num_vars + inst.num_size3;
  int opt;
  Cover best;
  try {
    auto [cover, stats] = exact_cover(inst, max_blues);
    best = cover;
    opt = stats.optimum;
  } catch (const CapExceededError& e) {
    rep.add("lemma1", e.what());
    return rep;
  }
  auto model = dpll_sat(nas);
  if (model) {
    if (opt != target)
      rep.add("lemma1", "satisfiable formula but optimum " + std::to_string(opt) +
                            " != 2n+m = " + std::to_string(target));
    try {
      Cover c = assign_to_cover(inst, *model);
      if (static_cast<long>(c.rects.size()) != target)
        rep.add("lemma1", "assignment cover has size " + std::to_string(c.rects.size()) +
                              " != 2n+m = " + std::to_string(target));
      if (!is_valid_cover(inst, c)) rep.add("lemma1", "assignment cover is invalid");
    } catch (const BuildError& e) {
      rep.add("lemma1", std::string("assign_to_cover: ") + e.what());
    }
    if (opt == target) {
      Assignment back = cover_to_assign(inst, best);
      if (!evaluate(nas, back))
        rep.add("lemma1", "optimal cover converts to a non-satisfying assignment");
    }
  } else {
    if (opt <= target)
      rep.add("lemma1", "unsatisfiable formula but optimum " + std::to_string(opt) +
                            " <= 2n+m = " + std::to_string(target));
  }
  return rep;
}

Report check_abcc(const Instance& bcc, const Instance& abcc, int oriented_max_blues) {
  Report rep;
  if (bcc.blue.size() != abcc.blue.size() || bcc.blue != abcc.blue) {
    rep.add("abcc", "augmentation changed the blue point set");
    return rep;
  }
  int nb = static_cast<int>(bcc.blue.size());
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j)
      if (pair_cocover_any(abcc, i, j) != pair_cocover_axis(bcc, i, j))
        rep.add("pairwise", "blue pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                "): any-orientation co-coverability after != axis before");
  try {
    auto [c1, s1] = exact_cover(bcc, 256);
    auto [c2, s2] = exact_cover(abcc, 256);
    if (s1.optimum != s2.optimum)
      rep.add("optimum", "axis optimum changed: " + std::to_string(s1.optimum) + " -> " +
                             std::to_string(s2.optimum));
    if (nb <= oriented_max_blues) {
      auto [c3, s3] = min_cover_oriented(abcc, {}, oriented_max_blues);
      if (s3.optimum != s1.optimum)
        rep.add("oriented", "oriented optimum " + std::to_string(s3.optimum) +
                                " differs from axis optimum " + std::to_string(s1.optimum));
    }
  } catch (const CapExceededError& e) {
    rep.add("abcc", e.what());
  }
  long blockers = 0;
  for (const Annot& a : abcc.red_ann)
    if (a.role == Role::BlockerRed) ++blockers;
  long limit = static_cast<long>(nb) * (nb - 1) / 2;
  if (blockers > limit)
    rep.add("blockers", std::to_string(blockers) + " blockers exceed C(|B|,2) = " +
                            std::to_string(limit));
  return rep;
}

}  // namespace ccover
