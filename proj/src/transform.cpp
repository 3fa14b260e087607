#include "ccover/transform.hpp"

#include "ccover/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace ccover {

namespace {
const char* kind_name(VarOrigin::Kind k) {
  switch (k) {
    case VarOrigin::Original: return "original";
    case VarOrigin::Aux: return "aux";
    case VarOrigin::GlobalTrue: return "true";
    case VarOrigin::GlobalFalse: return "false";
    case VarOrigin::Copy: return "copy";
  }
  return "?";
}

VarOrigin::Kind kind_from_name(const std::string& s) {
  if (s == "original") return VarOrigin::Original;
  if (s == "aux") return VarOrigin::Aux;
  if (s == "true") return VarOrigin::GlobalTrue;
  if (s == "false") return VarOrigin::GlobalFalse;
  if (s == "copy") return VarOrigin::Copy;
  throw FormatError("varmap: unknown origin kind '" + s + "'");
}
}  // namespace

std::string VarMap::to_json() const {
  nlohmann::json j;
  j["vars"] = nlohmann::json::array();
  for (size_t i = 0; i < origins.size(); ++i) {
    nlohmann::json v;
    v["index"] = i + 1;
    v["kind"] = kind_name(origins[i].kind);
    v["source"] = origins[i].source;
    j["vars"].push_back(v);
  }
  return j.dump(2) + "\n";
}

VarMap VarMap::from_json(const std::string& text) {
  VarMap m;
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("vars") || !j["vars"].is_array())
    throw FormatError("varmap: malformed json");
  for (const auto& v : j["vars"]) {
    VarOrigin o;
    o.kind = kind_from_name(v.at("kind").get<std::string>());
    o.source = v.at("source").get<int>();
    m.origins.push_back(o);
  }
  return m;
}

Assignment VarMap::project(const Assignment& a, int original_vars) const {
  if (a.size() != origins.size()) throw BuildError("varmap: assignment size mismatch");
  Assignment out(original_vars, false);
  for (size_t i = 0; i < origins.size(); ++i)
    if (origins[i].kind == VarOrigin::Original) {
      if (origins[i].source < 1 || origins[i].source > original_vars)
        throw BuildError("varmap: original source out of range");
      out[origins[i].source - 1] = a[i];
    }
  return out;
}

std::vector<Clause> eliminate_uniform_size3(const Clause& c, int aux, int t, int f) {
  if (c.size() != 3) throw BuildError("eliminate_uniform_size3: clause size != 3");
  bool neg = c[0].neg;
  for (const Literal& l : c)
    if (l.neg != neg) throw BuildError("eliminate_uniform_size3: clause is not uniform");
  int z = c[2].var;
  std::vector<Clause> out;
  out.push_back({c[0], c[1], Literal{aux, !neg}});
  out.push_back({Literal{aux, false}, Literal{z, false}, Literal{t, true}});
  out.push_back({Literal{aux, true}, Literal{z, true}, Literal{f, false}});
  return out;
}

Clause pad_short_uniform(const Clause& c, int t, int f) {
  if (c.size() != 2) throw BuildError("pad_short_uniform: clause size != 2");
  if (c[0].neg != c[1].neg) throw BuildError("pad_short_uniform: clause is not uniform");
  Clause out = c;
  if (!c[0].neg)
    out.push_back(Literal{t, true});
  else
    out.push_back(Literal{f, false});
  return out;
}

SplitResult split_size3_occurrences(const Formula& f) {
  SplitResult res;
  res.formula.num_vars = f.num_vars;
  std::map<int, int> size3_seen;  // variable -> occurrences so far in size-3 clauses
  std::vector<Clause> equiv;
  for (const Clause& c : f.clauses) {
    if (c.size() != 3) {
      res.formula.clauses.push_back(c);
      continue;
    }
    Clause out;
    for (const Literal& l : c) {
      int n = size3_seen[l.var]++;
      if (n == 0) {
        out.push_back(l);
      } else {
        int copy = ++res.formula.num_vars;
        res.copies.push_back({copy, l.var});
        out.push_back(Literal{copy, l.neg});
        // Star topology: each copy is tied directly to the original.
        equiv.push_back({Literal{l.var, false}, Literal{copy, true}});
        equiv.push_back({Literal{l.var, true}, Literal{copy, false}});
      }
    }
    res.formula.clauses.push_back(out);
  }
  res.formula.clauses.insert(res.formula.clauses.end(), equiv.begin(), equiv.end());
  return res;
}

TransformResult sat_to_nas(const Formula& input) {
  for (const Clause& c : input.clauses)
    if (c.size() > 3)
      throw BuildError("sat_to_nas: input is not 3-CNF (clause with " +
                       std::to_string(c.size()) + " literals)");
  Formula g = normalize(input);

  bool need_tf = false;
  for (const Clause& c : g.clauses) {
    if (c.size() < 2) continue;
    bool uniform = std::all_of(c.begin(), c.end(),
                               [&](const Literal& l) { return l.neg == c[0].neg; });
    if (uniform) need_tf = true;
  }

  Formula out;
  out.num_vars = g.num_vars;
  VarMap map;
  for (int v = 1; v <= g.num_vars; ++v) map.origins.push_back({VarOrigin::Original, v});

  int t = 0, f = 0;
  if (need_tf) {
    t = ++out.num_vars;
    map.origins.push_back({VarOrigin::GlobalTrue, 0});
    f = ++out.num_vars;
    map.origins.push_back({VarOrigin::GlobalFalse, 0});
  }

  for (size_t i = 0; i < g.clauses.size(); ++i) {
    const Clause& c = g.clauses[i];
    if (c.empty()) {
      out.clauses.push_back(c);
      continue;
    }
    bool uniform = std::all_of(c.begin(), c.end(),
                               [&](const Literal& l) { return l.neg == c[0].neg; });
    if (c.size() == 3 && uniform) {
      int aux = ++out.num_vars;
      map.origins.push_back({VarOrigin::Aux, static_cast<int>(i)});
      for (Clause& nc : eliminate_uniform_size3(c, aux, t, f)) out.clauses.push_back(nc);
    } else if (c.size() == 2 && uniform) {
      out.clauses.push_back(pad_short_uniform(c, t, f));
    } else {
      out.clauses.push_back(c);
    }
  }
  if (need_tf) {
    out.clauses.push_back({Literal{t, false}});
    out.clauses.push_back({Literal{f, true}});
  }

  SplitResult split = split_size3_occurrences(out);
  for (const auto& [copy, orig] : split.copies) {
    (void)copy;
    map.origins.push_back({VarOrigin::Copy, orig});
  }
  return {split.formula, map};
}

}  // namespace ccover
