#include "ccover/reduction.hpp"

#include "ccover/errors.hpp"
#include "ccover/solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace ccover {

namespace {

// Oriented size-3 clause: the spine variable carries the clause's unique
// polarity (the single positive literal, or the single negative literal in
// the transposed case); pk/pl are the partner variables.
struct Size3 {
  int clause = 0;
  int spine = 0;
  int pk = 0, pl = 0;
  bool transposed = false;
  // Variables paired with the spine literal in size-2 clauses; when the spine
  // sits above both partners, such a clause point lands on the spine's strip
  // line and must stay out of the helping-point channel.
  std::vector<int> mates;
};

// The size-3 gadget needs the spine's diagonal slot outside the open interval
// between its partners' slots; search for a variable-to-slot assignment
// satisfying every clause, preferring the identity.
bool assign_slots(int next_var, int n, std::vector<int>& slot, std::vector<bool>& used,
                  const std::vector<Size3>& s3) {
  if (next_var > n) return true;
  for (int s = 0; s < n; ++s) {
    if (used[s]) continue;
    slot[next_var - 1] = s;
    used[s] = true;
    bool ok = true;
    for (const Size3& c : s3) {
      if (c.spine > next_var || c.pk > next_var || c.pl > next_var) continue;
      int sj = slot[c.spine - 1];
      int lo = std::min(slot[c.pk - 1], slot[c.pl - 1]);
      int hi = std::max(slot[c.pk - 1], slot[c.pl - 1]);
      if (lo < sj && sj < hi) {
        ok = false;
        break;
      }
      if (sj > hi) {
        for (int q : c.mates) {
          if (q > next_var) continue;
          int sq = slot[q - 1];
          if (lo < sq && sq <= hi) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
    }
    if (ok && assign_slots(next_var + 1, n, slot, used, s3)) return true;
    used[s] = false;
    slot[next_var - 1] = -1;
  }
  return false;
}

struct Builder {
  Instance inst;
  bool transpose = false;  // current gadget is emitted with x/y swapped

  int add_blue(Rat x, Rat y, Annot a) {
    if (transpose) std::swap(x, y);
    inst.blue.push_back({std::move(x), std::move(y)});
    inst.blue_ann.push_back(std::move(a));
    return static_cast<int>(inst.blue.size()) - 1;
  }
  void add_red(Rat x, Rat y, Annot a) {
    if (transpose) std::swap(x, y);
    inst.red.push_back({std::move(x), std::move(y)});
    inst.red_ann.push_back(std::move(a));
  }
  // A cover condition transposes to the opposite strip orientation of the
  // same line pair: left vertical <-> lower horizontal, right <-> upper.
  CoverCond cond(int var, bool value, LineRef::Which which) const {
    if (transpose) {
      value = !value;
      switch (which) {
        case LineRef::LeftV: which = LineRef::LowerH; break;
        case LineRef::LowerH: which = LineRef::LeftV; break;
        case LineRef::RightV: which = LineRef::UpperH; break;
        case LineRef::UpperH: which = LineRef::RightV; break;
      }
    }
    return {var, value, {var, which}};
  }
};

void check_distinct(const Instance& inst) {
  std::set<Point> seen;
  for (const Point& p : inst.blue)
    if (!seen.insert(p).second)
      throw BuildError("build_bcc: duplicate point at (" + format_rat(p.x) + ", " +
                       format_rat(p.y) + ")");
  for (const Point& p : inst.red)
    if (!seen.insert(p).second)
      throw BuildError("build_bcc: red collides with earlier point at (" + format_rat(p.x) +
                       ", " + format_rat(p.y) + ")");
}

void check_strips_red_free(const Instance& inst) {
  for (int v = 1; v <= inst.num_vars; ++v)
    for (auto which : {LineRef::LeftV, LineRef::RightV, LineRef::LowerH, LineRef::UpperH}) {
      Rat c = inst.line_coord({v, which});
      for (const Point& r : inst.red)
        if ((Instance::vertical(which) ? r.x : r.y) == c)
          throw BuildError("build_bcc: red on a strip line of variable " + std::to_string(v));
    }
}

// Every helping blue must form a red-free box with exactly its own C1 and C2
// among all blues; anything else would let a single rectangle serve two
// clause points for free and break the counting argument.
void check_help_isolation(const Instance& inst) {
  for (const ClauseGeom& g : inst.clauses) {
    if (g.size != 3) continue;
    int h = g.blue_ids[2];
    std::set<int> allowed = {g.blue_ids[0], g.blue_ids[1], h};
    for (size_t q = 0; q < inst.blue.size(); ++q) {
      Rect box = Rect::from_corners(inst.blue[h], inst.blue[q]);
      bool free = true;
      for (const Point& r : inst.red)
        if (box.contains(r)) {
          free = false;
          break;
        }
      if (free != (allowed.count(static_cast<int>(q)) > 0))
        throw BuildError("build_bcc: helping point isolation failed between blue " +
                         std::to_string(h) + " (" + format_rat(inst.blue[h].x) + ", " +
                         format_rat(inst.blue[h].y) + ", " + inst.blue_ann[h].tag() +
                         ") and blue " + std::to_string(q) + " (" +
                         format_rat(inst.blue[q].x) + ", " + format_rat(inst.blue[q].y) + ", " +
                         inst.blue_ann[q].tag() + ")");
    }
  }
}

}  // namespace

Instance build_bcc(const Formula& nas) {
  NasReport rep = validate_nas(nas);
  if (!rep.is_nas)
    throw BuildError("build_bcc: formula is not in NAS form (" +
                     std::to_string(rep.violations.size()) + " violation(s), first: clause " +
                     std::to_string(rep.violations[0].clause_index) + ", " +
                     rep.violations[0].detail + ")");

  int n = nas.num_vars;
  if (n == 0) throw BuildError("build_bcc: formula has no variables");

  // Orient every size-3 clause around its unique-polarity literal.
  std::vector<Size3> s3;
  for (size_t ci = 0; ci < nas.clauses.size(); ++ci) {
    const Clause& c = nas.clauses[ci];
    if (c.size() != 3) continue;
    int pos = 0;
    for (const Literal& l : c) pos += l.neg ? 0 : 1;
    Size3 o;
    o.clause = static_cast<int>(ci);
    o.transposed = (pos == 2);
    bool spine_neg = o.transposed;
    std::vector<int> partners;
    for (const Literal& l : c) {
      if (l.neg == spine_neg && o.spine == 0)
        o.spine = l.var;
      else
        partners.push_back(l.var);
    }
    o.pk = partners[0];
    o.pl = partners[1];
    s3.push_back(o);
  }
  for (Size3& o : s3)
    for (const Clause& c : nas.clauses) {
      if (c.size() != 2) continue;
      for (size_t i = 0; i < 2; ++i)
        if (c[i].var == o.spine && c[i].neg == o.transposed)
          o.mates.push_back(c[1 - i].var);
    }

  Builder b;
  b.inst.num_vars = n;
  b.inst.num_size3 = static_cast<int>(s3.size());
  b.inst.layout.validate();
  b.inst.slot.assign(n, -1);
  {
    std::vector<bool> used(n, false);
    if (!assign_slots(1, n, b.inst.slot, used, s3))
      throw BuildError("build_bcc: no diagonal ordering admits every size-3 clause");
  }
  const Layout& L = b.inst.layout;
  auto anchor = [&](int v) { return Rat(L.pitch * b.inst.slot[v - 1]); };

  // Variable gadgets: a blue square, a center red, and four cap reds flanking
  // the strip midlines just outside the square.
  for (int v = 1; v <= n; ++v) {
    Rat a = anchor(v);
    b.add_blue(a, a, {Role::VarPoint, v, -1, "ll"});
    b.add_blue(a, a + L.side, {Role::VarPoint, v, -1, "ul"});
    b.add_blue(a + L.side, a, {Role::VarPoint, v, -1, "lr"});
    b.add_blue(a + L.side, a + L.side, {Role::VarPoint, v, -1, "ur"});
    Rat mid = a + L.side / 2;
    b.add_red(mid, mid, {Role::CenterRed, v, -1, ""});
    b.add_red(a - L.cap, mid, {Role::CapRed, v, -1, "w"});
    b.add_red(a + L.side + L.cap, mid, {Role::CapRed, v, -1, "e"});
    b.add_red(mid, a - L.cap, {Role::CapRed, v, -1, "s"});
    b.add_red(mid, a + L.side + L.cap, {Role::CapRed, v, -1, "n"});
  }

  // Guards between consecutive diagonal slots stop any box from straddling
  // two gadgets.
  {
    std::vector<int> var_at_slot(n, 0);
    for (int v = 1; v <= n; ++v) var_at_slot[b.inst.slot[v - 1]] = v;
    for (int s = 0; s + 1 < n; ++s) {
      Rat g = Rat(L.pitch * s) + L.guard();
      b.add_red(g, g, {Role::GuardRed, var_at_slot[s], -1, ""});
    }
  }

  // Clause gadgets.
  for (size_t ci = 0; ci < nas.clauses.size(); ++ci) {
    const Clause& c = nas.clauses[ci];
    int ici = static_cast<int>(ci);
    ClauseGeom g;
    g.size = static_cast<int>(c.size());
    if (c.size() == 1) {
      int v = c[0].var;
      b.transpose = c[0].neg;
      Rat a = anchor(v);
      int id = b.add_blue(a, a + L.side / 2, {Role::EquivBlue, v, ici, ""});
      g.blue_ids = {id};
      g.conds = {{b.cond(v, true, LineRef::LeftV)}};
    } else if (c.size() == 2) {
      // Mixed pair: the clause point sits on the crossing of the positive
      // variable's left vertical and the negative variable's lower
      // horizontal, fenced by four diagonal corridor reds.
      b.transpose = false;
      int p = c[0].neg ? c[1].var : c[0].var;
      int q = c[0].neg ? c[0].var : c[1].var;
      Rat x = anchor(p), y = anchor(q);
      int id = b.add_blue(x, y, {Role::ClauseBlue, p, ici, ""});
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          b.add_red(x + sx * L.corridor, y + sy * L.corridor,
                    {Role::CorridorRed, p, ici, std::string(sx < 0 ? "w" : "e") + (sy < 0 ? "s" : "n")});
      g.blue_ids = {id};
      g.conds = {{b.cond(p, true, LineRef::LeftV), b.cond(q, false, LineRef::LowerH)}};
    } else {
      const Size3& o = *std::find_if(s3.begin(), s3.end(),
                                     [&](const Size3& s) { return s.clause == ici; });
      b.transpose = o.transposed;
      // Order the partners along the diagonal.
      int k = o.pk, l = o.pl;
      if (b.inst.slot[k - 1] > b.inst.slot[l - 1]) std::swap(k, l);
      Rat xL = anchor(o.spine), xR = xL + L.side;
      Rat yk = anchor(k) + L.side, yl = anchor(l) + L.side;
      int c1 = b.add_blue(xL, yk, {Role::ClauseBlue, o.spine, ici, "c1"});
      int c2 = b.add_blue(xR, yl, {Role::ClauseBlue, o.spine, ici, "c2"});
      std::vector<std::tuple<Rat, Rat, const char*>> cps = {{xL, yk, "c1"}, {xR, yl, "c2"}};
      for (auto& [cx, cy, who] : cps)
        for (int sx : {-1, 1})
          for (int sy : {-1, 1})
            b.add_red(cx + sx * L.corridor, cy + sy * L.corridor,
                      {Role::CorridorRed, o.spine, ici,
                       std::string(who) + (sx < 0 ? "w" : "e") + (sy < 0 ? "s" : "n")});
      int h;
      if (b.inst.slot[o.spine - 1] < b.inst.slot[k - 1]) {
        // Spine below both partners: the helping point hangs off C1's row to
        // the right of the spine column, shielded on its far sides.
        h = b.add_blue(xR + L.help, yk + L.help, {Role::HelpBlue, o.spine, ici, ""});
        b.add_red(xR + L.help, yk - L.help, {Role::HelpRed, o.spine, ici, "v"});
        b.add_red(xR + 3 * L.help, yk + L.help, {Role::HelpRed, o.spine, ici, "h"});
      } else {
        // Spine above both partners: mirrored off C2's row to the left.
        h = b.add_blue(xL - L.help, yl - L.help, {Role::HelpBlue, o.spine, ici, ""});
        b.add_red(xL - L.help, yl + L.help, {Role::HelpRed, o.spine, ici, "v"});
        b.add_red(xL - 3 * L.help, yl - L.help, {Role::HelpRed, o.spine, ici, "h"});
        // Cuts the column below the channel: clause points further down the
        // spine's strip line must not pair with the helping point.
        b.add_red(xL - L.help, yk - L.help, {Role::HelpRed, o.spine, ici, "d"});
      }
      g.blue_ids = {c1, c2, h};
      g.conds = {{b.cond(o.spine, true, LineRef::LeftV), b.cond(k, false, LineRef::UpperH)},
                 {b.cond(o.spine, true, LineRef::RightV), b.cond(l, false, LineRef::UpperH)},
                 {}};
    }
    b.transpose = false;
    b.inst.clauses.push_back(std::move(g));
  }

  check_distinct(b.inst);
  check_strips_red_free(b.inst);
  check_help_isolation(b.inst);
  return b.inst;
}

Cover assign_to_cover(const Instance& inst, const Assignment& a) {
  if (static_cast<int>(a.size()) != inst.num_vars)
    throw BuildError("assign_to_cover: assignment size mismatch");
  Cover cover;
  for (int v = 1; v <= inst.num_vars; ++v) {
    auto lines = a[v - 1] ? std::vector<LineRef::Which>{LineRef::LeftV, LineRef::RightV}
                          : std::vector<LineRef::Which>{LineRef::LowerH, LineRef::UpperH};
    for (auto which : lines) {
      Rat c = inst.line_coord({v, which});
      bool vert = Instance::vertical(which);
      bool any = false;
      Rat lo, hi;
      for (const Point& p : inst.blue) {
        if ((vert ? p.x : p.y) != c) continue;
        const Rat& t = vert ? p.y : p.x;
        if (!any) {
          lo = hi = t;
          any = true;
        } else {
          lo = std::min(lo, t);
          hi = std::max(hi, t);
        }
      }
      cover.rects.push_back(vert ? Rect{c, lo, c, hi} : Rect{lo, c, hi, c});
    }
  }
  for (size_t ci = 0; ci < inst.clauses.size(); ++ci) {
    const ClauseGeom& g = inst.clauses[ci];
    auto covered = [&](size_t which) {
      for (const CoverCond& cc : g.conds[which])
        if (a[cc.var - 1] == cc.value) return true;
      return false;
    };
    if (g.size < 3) {
      if (!covered(0))
        throw BuildError("assign_to_cover: assignment leaves clause " + std::to_string(ci) +
                         " unsatisfied");
      continue;
    }
    const Point& h = inst.blue[g.blue_ids[2]];
    bool c1 = covered(0), c2 = covered(1);
    if (!c1 && !c2)
      throw BuildError("assign_to_cover: assignment leaves clause " + std::to_string(ci) +
                       " unsatisfied");
    if (c1 && c2)
      cover.rects.push_back(Rect{h.x, h.y, h.x, h.y});
    else
      cover.rects.push_back(Rect::from_corners(h, inst.blue[g.blue_ids[c1 ? 1 : 0]]));
  }
  return cover;
}

Assignment cover_to_assign(const Instance& inst, const Cover& c) {
  Assignment a(inst.num_vars, false);
  std::map<std::pair<int, std::string>, Point> corners;
  for (size_t i = 0; i < inst.blue.size(); ++i) {
    const Annot& an = inst.blue_ann[i];
    if (an.role == Role::VarPoint) corners[{an.var, an.detail}] = inst.blue[i];
  }
  auto both_in_one = [&](const Point& p, const Point& q) {
    for (const CoverRect& cr : c.rects) {
      bool in = std::visit([&](const auto& r) { return r.contains(p) && r.contains(q); }, cr);
      if (in) return true;
    }
    return false;
  };
  for (int v = 1; v <= inst.num_vars; ++v) {
    auto at = [&](const char* d) {
      auto it = corners.find({v, d});
      if (it == corners.end())
        throw BuildError("cover_to_assign: instance lacks variable gadget " + std::to_string(v));
      return it->second;
    };
    a[v - 1] = both_in_one(at("ll"), at("ul")) || both_in_one(at("lr"), at("ur"));
  }
  return a;
}

Instance augment_abcc(const Instance& inst) {
  Instance out = inst;
  CandidateSet cs = enumerate_candidates(inst);

  // Forbidden parameter interval of a segment A + t*(B - A) inside an axis
  // rectangle; returns false when they do not meet.
  auto clip = [](const Rect& r, const Point& A, const Point& B, Rat& tlo, Rat& thi) {
    tlo = 0;
    thi = 1;
    auto axis = [&](const Rat& a0, const Rat& d, const Rat& lo, const Rat& hi) {
      if (d == 0) return a0 >= lo && a0 <= hi;
      Rat t0 = (lo - a0) / d, t1 = (hi - a0) / d;
      if (t0 > t1) std::swap(t0, t1);
      tlo = std::max(tlo, t0);
      thi = std::min(thi, t1);
      return true;
    };
    if (!axis(A.x, B.x - A.x, r.x_lo, r.x_hi)) return false;
    if (!axis(A.y, B.y - A.y, r.y_lo, r.y_hi)) return false;
    return tlo <= thi;
  };

  size_t nb = inst.blue.size();
  for (size_t i = 0; i < nb; ++i) {
    for (size_t j = i + 1; j < nb; ++j) {
      if (pair_cocover_axis(inst, static_cast<int>(i), static_cast<int>(j))) continue;
      const Point& A = inst.blue[i];
      const Point& B = inst.blue[j];
      bool blocked = false;
      for (const Point& r : out.red)
        if (point_on_segment(r, A, B)) {
          blocked = true;
          break;
        }
      if (blocked) continue;

      // Candidate blocker positions: midpoints between consecutive critical
      // parameters (candidate-rectangle crossings and existing points on the
      // segment).  A blocker outside every maximal candidate leaves the axis
      // candidate set, and hence the axis optimum, unchanged.
      std::vector<Rat> crit = {Rat(0), Rat(1)};
      for (const Candidate& cand : cs.cands) {
        Rat tlo, thi;
        if (clip(cand.rect, A, B, tlo, thi)) {
          crit.push_back(tlo);
          crit.push_back(thi);
        }
      }
      auto seg_t = [&](const Point& p) {
        if (!point_on_segment(p, A, B)) return;
        crit.push_back(B.x != A.x ? (p.x - A.x) / (B.x - A.x) : (p.y - A.y) / (B.y - A.y));
      };
      for (const Point& p : inst.blue) seg_t(p);
      for (const Point& p : out.red) seg_t(p);
      std::sort(crit.begin(), crit.end());
      crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

      bool placed = false;
      for (size_t t = 0; t + 1 < crit.size() && !placed; ++t) {
        Rat m = (crit[t] + crit[t + 1]) / 2;
        if (m <= 0 || m >= 1) continue;
        Point p{A.x + m * (B.x - A.x), A.y + m * (B.y - A.y)};
        bool bad = false;
        for (const Candidate& cand : cs.cands)
          if (cand.rect.contains(p)) {
            bad = true;
            break;
          }
        if (bad) continue;
        for (const Point& q : inst.blue)
          if (q == p) {
            bad = true;
            break;
          }
        for (const Point& q : out.red)
          if (q == p) {
            bad = true;
            break;
          }
        if (bad) continue;
        out.red.push_back(p);
        out.red_ann.push_back({Role::BlockerRed, 0, -1,
                               std::to_string(i) + "-" + std::to_string(j)});
        placed = true;
      }
      if (!placed)
        throw BuildError("augment_abcc: no admissible blocker for blue pair " +
                         std::to_string(i) + ", " + std::to_string(j));
    }
  }
  return out;
}

}  // namespace ccover
