#include "ccover/solver.hpp"

#include "ccover/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace ccover {

namespace {

bool rect_red_free(const Rect& r, const std::vector<Point>& red) {
  for (const Point& p : red)
    if (r.contains(p)) return false;
  return true;
}

// Maximal red-free blue-bbox enumeration in an arbitrary frame.  For every
// window spanned by two blue x-coordinates, the red y-coordinates inside the
// window split the y-axis into open gaps; the blues of each gap form a
// red-free bounding box.  Every red-free blue bbox is dominated by one of
// these, so keeping the inclusion-maximal blue sets is exhaustive.
std::vector<std::pair<BlueSet, Rect>> enumerate_frame(const std::vector<Point>& blue,
                                                      const std::vector<Point>& red) {
  size_t nb = blue.size();
  std::vector<std::pair<BlueSet, Rect>> found;
  if (nb == 0) return found;

  std::vector<Rat> xs;
  for (const Point& b : blue) xs.push_back(b.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::set<BlueSet> seen;
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = i; j < xs.size(); ++j) {
      const Rat& xlo = xs[i];
      const Rat& xhi = xs[j];
      std::vector<Rat> red_ys;
      for (const Point& r : red)
        if (xlo <= r.x && r.x <= xhi) red_ys.push_back(r.y);
      std::sort(red_ys.begin(), red_ys.end());
      red_ys.erase(std::unique(red_ys.begin(), red_ys.end()), red_ys.end());

      std::vector<size_t> in_window;
      for (size_t b = 0; b < nb; ++b)
        if (xlo <= blue[b].x && blue[b].x <= xhi) in_window.push_back(b);

      // Gap g covers y in (red_ys[g-1], red_ys[g]) with open infinities.
      for (size_t g = 0; g <= red_ys.size(); ++g) {
        BlueSet cover(nb);
        bool any = false;
        Rect box;
        for (size_t b : in_window) {
          const Rat& y = blue[b].y;
          if (g > 0 && y <= red_ys[g - 1]) continue;
          if (g < red_ys.size() && y >= red_ys[g]) continue;
          if (!any) {
            box = Rect{blue[b].x, y, blue[b].x, y};
            any = true;
          } else {
            box.x_lo = std::min(box.x_lo, blue[b].x);
            box.x_hi = std::max(box.x_hi, blue[b].x);
            box.y_lo = std::min(box.y_lo, y);
            box.y_hi = std::max(box.y_hi, y);
          }
          cover.set(b);
        }
        if (any && seen.insert(cover).second) found.push_back({cover, box});
      }
    }
  }

  // Drop blue sets strictly contained in another.
  std::vector<std::pair<BlueSet, Rect>> maximal;
  for (size_t a = 0; a < found.size(); ++a) {
    bool dominated = false;
    for (size_t b = 0; b < found.size() && !dominated; ++b)
      if (a != b && found[a].first.is_subset_of(found[b].first) &&
          found[a].first != found[b].first)
        dominated = true;
    if (!dominated) maximal.push_back(found[a]);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return maximal;
}

struct CoreResult {
  std::vector<int> chosen;
  long nodes = 0;
};

// Shared branch-and-bound set-cover core: branch on the uncovered blue with
// the fewest covering sets; greedy upper bound, lower bound from a greedy
// packing of blues no single set covers together.
class CoverCore {
 public:
  CoverCore(const std::vector<BlueSet>& sets, size_t nb) : sets_(sets), nb_(nb) {
    covering_.resize(nb_);
    for (size_t s = 0; s < sets_.size(); ++s)
      for (size_t b = sets_[s].find_first(); b != BlueSet::npos; b = sets_[s].find_next(b))
        covering_[b].push_back(static_cast<int>(s));
  }

  std::vector<int> greedy() const {
    std::vector<int> out;
    BlueSet covered(nb_);
    while (covered.count() < nb_) {
      int best = -1;
      size_t best_gain = 0;
      for (size_t s = 0; s < sets_.size(); ++s) {
        size_t gain = (sets_[s] - covered).count();
        if (gain > best_gain) {
          best_gain = gain;
          best = static_cast<int>(s);
        }
      }
      if (best < 0) throw BuildError("set cover: uncoverable blue point");
      covered |= sets_[best];
      out.push_back(best);
    }
    return out;
  }

  CoreResult solve() {
    best_ = greedy();
    nodes_ = 0;
    std::vector<int> chosen;
    BlueSet covered(nb_);
    dfs(covered, chosen);
    std::sort(best_.begin(), best_.end());
    return {best_, nodes_};
  }

  // Count covers of size exactly k; each subset is counted via its unique
  // minimum-index member covering the lowest uncovered blue.
  long count_covers(size_t k) {
    BlueSet covered(nb_);
    std::vector<char> banned(sets_.size(), 0);
    return count_rec(covered, banned, k);
  }

 private:
  int lower_bound(const BlueSet& covered) const {
    // Blues such that no single set covers any two of them each need a
    // distinct set.
    std::vector<size_t> picked;
    int lb = 0;
    for (size_t b = 0; b < nb_; ++b) {
      if (covered.test(b)) continue;
      bool clash = false;
      for (size_t p : picked) {
        for (int s : covering_[b])
          if (sets_[s].test(p)) {
            clash = true;
            break;
          }
        if (clash) break;
      }
      if (!clash) {
        picked.push_back(b);
        ++lb;
      }
    }
    return lb;
  }

  void dfs(BlueSet& covered, std::vector<int>& chosen) {
    ++nodes_;
    if (covered.count() == nb_) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + static_cast<size_t>(lower_bound(covered)) >= best_.size()) return;

    size_t branch = BlueSet::npos;
    size_t fewest = SIZE_MAX;
    for (size_t b = 0; b < nb_; ++b) {
      if (covered.test(b)) continue;
      if (covering_[b].size() < fewest) {
        fewest = covering_[b].size();
        branch = b;
      }
    }
    std::vector<int> opts = covering_[branch];
    std::sort(opts.begin(), opts.end(), [&](int a, int b) {
      size_t ga = (sets_[a] - covered).count();
      size_t gb = (sets_[b] - covered).count();
      if (ga != gb) return ga > gb;
      return a < b;
    });
    for (int s : opts) {
      BlueSet saved = covered;
      covered |= sets_[s];
      chosen.push_back(s);
      dfs(covered, chosen);
      chosen.pop_back();
      covered = saved;
    }
  }

  long count_rec(const BlueSet& covered, const std::vector<char>& banned, size_t left) {
    if (covered.count() == nb_) return left == 0 ? 1 : 0;
    if (left == 0) return 0;
    size_t b = 0;
    while (b < nb_ && covered.test(b)) ++b;
    long total = 0;
    for (int s : covering_[b]) {
      if (banned[s]) continue;
      std::vector<char> nb_banned = banned;
      for (int s2 : covering_[b])
        if (s2 <= s) nb_banned[s2] = 1;
      total += count_rec(covered | sets_[s], nb_banned, left - 1);
    }
    return total;
  }

  const std::vector<BlueSet>& sets_;
  size_t nb_;
  std::vector<std::vector<int>> covering_;
  std::vector<int> best_;
  long nodes_ = 0;
};

}  // namespace

CandidateSet enumerate_candidates(const Instance& inst) {
  CandidateSet cs;
  for (auto& [set, rect] : enumerate_frame(inst.blue, inst.red))
    cs.cands.push_back({rect, set});
  return cs;
}

bool is_valid_cover(const Instance& inst, const Cover& c) {
  for (const CoverRect& cr : c.rects) {
    bool bad = false;
    std::visit([&](const auto& r) {
      for (const Point& p : inst.red)
        if (r.contains(p)) bad = true;
    }, cr);
    if (bad) return false;
  }
  for (const Point& b : inst.blue) {
    bool covered = false;
    for (const CoverRect& cr : c.rects) {
      std::visit([&](const auto& r) {
        if (r.contains(b)) covered = true;
      }, cr);
      if (covered) break;
    }
    if (!covered) return false;
  }
  return true;
}

std::pair<Cover, SolveStats> exact_cover(const Instance& inst, int max_blues) {
  if (static_cast<int>(inst.blue.size()) > max_blues)
    throw CapExceededError("exact_cover: " + std::to_string(inst.blue.size()) +
                           " blues exceeds cap " + std::to_string(max_blues));
  Cover cover;
  SolveStats stats;
  if (inst.blue.empty()) return {cover, stats};
  CandidateSet cs = enumerate_candidates(inst);
  std::vector<BlueSet> sets;
  for (const Candidate& c : cs.cands) sets.push_back(c.covers);
  CoverCore core(sets, inst.blue.size());
  CoreResult res = core.solve();
  for (int s : res.chosen) cover.rects.push_back(cs.cands[s].rect);
  stats.optimum = static_cast<int>(res.chosen.size());
  stats.nodes = res.nodes;
  return {cover, stats};
}

Cover greedy_cover(const Instance& inst) {
  Cover cover;
  if (inst.blue.empty()) return cover;
  CandidateSet cs = enumerate_candidates(inst);
  std::vector<BlueSet> sets;
  for (const Candidate& c : cs.cands) sets.push_back(c.covers);
  CoverCore core(sets, inst.blue.size());
  for (int s : core.greedy()) cover.rects.push_back(cs.cands[s].rect);
  return cover;
}

long count_optimal_covers(const Instance& inst, int max_blues) {
  if (static_cast<int>(inst.blue.size()) > max_blues)
    throw CapExceededError("count_optimal_covers: " + std::to_string(inst.blue.size()) +
                           " blues exceeds cap " + std::to_string(max_blues));
  if (inst.blue.empty()) return 1;
  CandidateSet cs = enumerate_candidates(inst);
  std::vector<BlueSet> sets;
  for (const Candidate& c : cs.cands) sets.push_back(c.covers);
  CoverCore core(sets, inst.blue.size());
  size_t k = core.solve().chosen.size();
  CoverCore counter(sets, inst.blue.size());
  return counter.count_covers(k);
}

bool pair_cocover_axis(const Instance& inst, int blue_a, int blue_b) {
  Rect r = Rect::from_corners(inst.blue[blue_a], inst.blue[blue_b]);
  return rect_red_free(r, inst.red);
}

bool pair_cocover_any(const Instance& inst, int blue_a, int blue_b) {
  const Point& a = inst.blue[blue_a];
  const Point& b = inst.blue[blue_b];
  for (const Point& r : inst.red)
    if (point_on_segment(r, a, b)) return false;
  return true;
}

std::pair<Cover, SolveStats> min_cover_oriented(const Instance& inst,
                                                std::vector<std::pair<Int, Int>> dirs,
                                                int max_blues) {
  if (static_cast<int>(inst.blue.size()) > max_blues)
    throw CapExceededError("min_cover_oriented: " + std::to_string(inst.blue.size()) +
                           " blues exceeds cap " + std::to_string(max_blues));
  Cover cover;
  SolveStats stats;
  if (inst.blue.empty()) return {cover, stats};

  if (dirs.empty()) {
    std::set<std::pair<Int, Int>> dirset;
    auto canon = [&](Int a, Int b) {
      if (a == 0 && b == 0) return;
      Int g = gcd(abs(a), abs(b));
      a /= g;
      b /= g;
      if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
      }
      dirset.insert({a, b});
    };
    auto canon_with_perp = [&](Int a, Int b) {
      canon(a, b);
      canon(-b, a);
    };
    // Blue-blue directions only: any useful non-degenerate rectangle aligns
    // with some pair of the blues it covers once shrunk onto them, and the
    // red set (large after augmentation) would blow the direction count up.
    const std::vector<Point>& all = inst.blue;
    dirset.insert({1, 0});
    dirset.insert({0, 1});
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) {
        Rat dx = all[j].x - all[i].x;
        Rat dy = all[j].y - all[i].y;
        Int a = numerator(dx) * denominator(dy);
        Int b = numerator(dy) * denominator(dx);
        canon_with_perp(a, b);
      }
    dirs.assign(dirset.begin(), dirset.end());
  }

  struct DirPool {
    std::vector<std::pair<BlueSet, OrientedRect>> items;
  };
  std::vector<DirPool> pools(dirs.size());

#pragma omp parallel for schedule(dynamic)
  for (size_t d = 0; d < dirs.size(); ++d) {
    const Int& a = dirs[d].first;
    const Int& b = dirs[d].second;
    Rat ra(a), rb(b);
    Rat norm2 = ra * ra + rb * rb;
    std::vector<Point> blue_rot, red_rot;
    for (const Point& p : inst.blue) blue_rot.push_back({p.x * ra + p.y * rb, -p.x * rb + p.y * ra});
    for (const Point& p : inst.red) red_rot.push_back({p.x * ra + p.y * rb, -p.x * rb + p.y * ra});
    for (auto& [set, rect] : enumerate_frame(blue_rot, red_rot)) {
      Rat cx = (rect.x_lo + rect.x_hi) / 2;
      Rat cy = (rect.y_lo + rect.y_hi) / 2;
      OrientedRect o;
      o.center = {(cx * ra - cy * rb) / norm2, (cx * rb + cy * ra) / norm2};
      o.dx = ra;
      o.dy = rb;
      o.u = (rect.x_hi - rect.x_lo) / 2;
      o.v = (rect.y_hi - rect.y_lo) / 2;
      pools[d].items.push_back({set, o});
    }
  }

  std::map<BlueSet, OrientedRect> pooled;
  for (const DirPool& dp : pools)
    for (const auto& [set, rect] : dp.items)
      pooled.try_emplace(set, rect);

  std::vector<BlueSet> sets;
  std::vector<OrientedRect> rects;
  for (auto& [set, rect] : pooled) {
    sets.push_back(set);
    rects.push_back(rect);
  }
  CoverCore core(sets, inst.blue.size());
  CoreResult res = core.solve();
  for (int s : res.chosen) cover.rects.push_back(rects[s]);
  stats.optimum = static_cast<int>(res.chosen.size());
  stats.nodes = res.nodes;
  return {cover, stats};
}

namespace {
bool exhaustive_exists(const std::vector<BlueSet>& cands, const BlueSet& covered, size_t nb,
                       size_t start, size_t left) {
  if (covered.count() == nb) return true;
  if (left == 0) return false;
  for (size_t i = start; i < cands.size(); ++i) {
    BlueSet next = covered | cands[i];
    if (next == covered) continue;
    if (exhaustive_exists(cands, next, nb, i + 1, left - 1)) return true;
  }
  return false;
}
}  // namespace

int exhaustive_min_cover_size(const std::vector<BlueSet>& cands, size_t num_blues) {
  if (num_blues == 0) return 0;
  BlueSet covered(num_blues);
  for (size_t k = 1; k <= num_blues; ++k)
    if (exhaustive_exists(cands, covered, num_blues, 0, k)) return static_cast<int>(k);
  throw BuildError("exhaustive_min_cover_size: uncoverable blue point");
}

}  // namespace ccover
