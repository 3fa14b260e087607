#include "ccover/instance.hpp"

#include "ccover/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ccover {

namespace {
const char* role_name(Role r) {
  switch (r) {
    case Role::Unknown: return "point";
    case Role::VarPoint: return "var";
    case Role::CenterRed: return "center";
    case Role::CapRed: return "cap";
    case Role::GuardRed: return "guard";
    case Role::EquivBlue: return "equiv";
    case Role::ClauseBlue: return "clause";
    case Role::CorridorRed: return "corridor";
    case Role::HelpBlue: return "help";
    case Role::HelpRed: return "helpred";
    case Role::BlockerRed: return "blocker";
  }
  return "point";
}

Role role_from_name(const std::string& s) {
  if (s == "point") return Role::Unknown;
  if (s == "var") return Role::VarPoint;
  if (s == "center") return Role::CenterRed;
  if (s == "cap") return Role::CapRed;
  if (s == "guard") return Role::GuardRed;
  if (s == "equiv") return Role::EquivBlue;
  if (s == "clause") return Role::ClauseBlue;
  if (s == "corridor") return Role::CorridorRed;
  if (s == "help") return Role::HelpBlue;
  if (s == "helpred") return Role::HelpRed;
  if (s == "blocker") return Role::BlockerRed;
  throw FormatError("unknown point role '" + s + "'");
}

std::vector<std::string> split_colons(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ':') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}
}  // namespace

std::string Annot::tag() const {
  std::string s = role_name(role);
  s += ":" + std::to_string(var) + ":" + std::to_string(clause);
  if (!detail.empty()) s += ":" + detail;
  return s;
}

Annot Annot::from_tag(const std::string& tag) {
  Annot a;
  std::vector<std::string> parts = split_colons(tag);
  if (parts.empty()) throw FormatError("empty point tag");
  a.role = role_from_name(parts[0]);
  try {
    if (parts.size() > 1) a.var = std::stoi(parts[1]);
    if (parts.size() > 2) a.clause = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw FormatError("bad point tag '" + tag + "'");
  }
  if (parts.size() > 3) a.detail = parts[3];
  return a;
}

void Layout::validate() const {
  if (!(0 < help && help < cap && cap < corridor && corridor < side && side < pitch))
    throw BuildError("layout: require 0 < help < cap < corridor < side < pitch");
  if (pitch < 4 * side) throw BuildError("layout: pitch too small for guard spacing");
}

Rat Instance::line_coord(const LineRef& l) const {
  long a = anchor(l.var);
  switch (l.which) {
    case LineRef::LeftV:
    case LineRef::LowerH: return Rat(a);
    case LineRef::RightV:
    case LineRef::UpperH: return Rat(a + layout.side);
  }
  return Rat(a);
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "classcover 1\n";
  for (size_t i = 0; i < inst.blue.size(); ++i)
    out << "b " << format_rat(inst.blue[i].x) << ' ' << format_rat(inst.blue[i].y) << ' '
        << inst.blue_ann[i].tag() << '\n';
  for (size_t i = 0; i < inst.red.size(); ++i)
    out << "r " << format_rat(inst.red[i].x) << ' ' << format_rat(inst.red[i].y) << ' '
        << inst.red_ann[i].tag() << '\n';
  return out.str();
}

Instance parse_instance(const std::string& text) {
  Instance inst;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw FormatError("instance line " + std::to_string(line_no) + ": " + msg);
  };
  if (!std::getline(in, line)) throw FormatError("instance: empty input");
  ++line_no;
  {
    std::istringstream hs(line);
    std::string magic;
    int version = 0;
    if (!(hs >> magic >> version) || magic != "classcover" || version != 1)
      fail("expected header 'classcover 1'");
  }
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind, xs, ys, tag;
    if (!(ls >> kind)) continue;
    if (!(ls >> xs >> ys)) fail("expected '<b|r> <x> <y> [tag]'");
    if (!(ls >> tag)) tag = "point:0:-1";
    Point p{parse_rat(xs), parse_rat(ys)};
    Annot a = Annot::from_tag(tag);
    if (kind == "b") {
      inst.blue.push_back(p);
      inst.blue_ann.push_back(a);
    } else if (kind == "r") {
      inst.red.push_back(p);
      inst.red_ann.push_back(a);
    } else {
      fail("point kind must be 'b' or 'r'");
    }
  }
  for (const Point& b : inst.blue)
    for (const Point& r : inst.red)
      if (b == r) throw FormatError("instance: blue and red point coincide");
  return inst;
}

std::string write_sidecar(const Instance& inst) {
  nlohmann::json j;
  j["num_vars"] = inst.num_vars;
  j["num_size3"] = inst.num_size3;
  j["layout"] = {{"pitch", inst.layout.pitch},
                 {"side", inst.layout.side},
                 {"cap", inst.layout.cap},
                 {"corridor", inst.layout.corridor},
                 {"help", inst.layout.help}};
  j["slot"] = inst.slot;
  j["clauses"] = nlohmann::json::array();
  for (const ClauseGeom& cg : inst.clauses) {
    nlohmann::json c;
    c["size"] = cg.size;
    c["blues"] = cg.blue_ids;
    c["conds"] = nlohmann::json::array();
    for (const auto& conds : cg.conds) {
      nlohmann::json arr = nlohmann::json::array();
      for (const CoverCond& cc : conds)
        arr.push_back({{"var", cc.var},
                       {"value", cc.value},
                       {"line_var", cc.line.var},
                       {"line_which", static_cast<int>(cc.line.which)}});
      c["conds"].push_back(arr);
    }
    j["clauses"].push_back(c);
  }
  return j.dump(2) + "\n";
}

void apply_sidecar(Instance& inst, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw FormatError("sidecar: malformed json");
  try {
    inst.num_vars = j.at("num_vars").get<int>();
    inst.num_size3 = j.at("num_size3").get<int>();
    inst.layout.pitch = j.at("layout").at("pitch").get<long>();
    inst.layout.side = j.at("layout").at("side").get<long>();
    inst.layout.cap = j.at("layout").at("cap").get<long>();
    inst.layout.corridor = j.at("layout").at("corridor").get<long>();
    inst.layout.help = j.at("layout").at("help").get<long>();
    inst.slot = j.at("slot").get<std::vector<int>>();
    inst.clauses.clear();
    for (const auto& c : j.at("clauses")) {
      ClauseGeom cg;
      cg.size = c.at("size").get<int>();
      cg.blue_ids = c.at("blues").get<std::vector<int>>();
      for (const auto& arr : c.at("conds")) {
        std::vector<CoverCond> conds;
        for (const auto& e : arr) {
          CoverCond cc;
          cc.var = e.at("var").get<int>();
          cc.value = e.at("value").get<bool>();
          cc.line.var = e.at("line_var").get<int>();
          cc.line.which = static_cast<LineRef::Which>(e.at("line_which").get<int>());
          conds.push_back(cc);
        }
        cg.conds.push_back(conds);
      }
      inst.clauses.push_back(cg);
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("sidecar: ") + e.what());
  }
}

std::string write_cover(const Cover& c) {
  std::ostringstream out;
  for (const CoverRect& cr : c.rects) {
    if (const Rect* r = std::get_if<Rect>(&cr)) {
      out << "axis " << format_rat(r->x_lo) << ' ' << format_rat(r->y_lo) << ' '
          << format_rat(r->x_hi) << ' ' << format_rat(r->y_hi) << '\n';
    } else {
      const OrientedRect& o = std::get<OrientedRect>(cr);
      out << "orient " << format_rat(o.center.x) << ' ' << format_rat(o.center.y) << ' '
          << format_rat(o.dx) << ' ' << format_rat(o.dy) << ' ' << format_rat(o.u) << ' '
          << format_rat(o.v) << '\n';
    }
  }
  return out.str();
}

Cover parse_cover(const std::string& text) {
  Cover c;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto fail = [&](const std::string& msg) {
      throw FormatError("cover line " + std::to_string(line_no) + ": " + msg);
    };
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (kind == "axis") {
      if (toks.size() != 4) fail("expected 'axis xlo ylo xhi yhi'");
      Rect r{parse_rat(toks[0]), parse_rat(toks[1]), parse_rat(toks[2]), parse_rat(toks[3])};
      if (!r.valid()) fail("empty rectangle");
      c.rects.push_back(r);
    } else if (kind == "orient") {
      if (toks.size() != 6) fail("expected 'orient cx cy dx dy u v'");
      OrientedRect o;
      o.center = {parse_rat(toks[0]), parse_rat(toks[1])};
      o.dx = parse_rat(toks[2]);
      o.dy = parse_rat(toks[3]);
      o.u = parse_rat(toks[4]);
      o.v = parse_rat(toks[5]);
      if (o.dx == 0 && o.dy == 0) fail("zero direction");
      if (o.u < 0 || o.v < 0) fail("negative half-extent");
      c.rects.push_back(o);
    } else {
      fail("rectangle kind must be 'axis' or 'orient'");
    }
  }
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace ccover
