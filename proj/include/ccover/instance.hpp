#pragma once

#include "ccover/geom.hpp"

#include <string>
#include <variant>
#include <vector>

namespace ccover {

// Role of a point within a reduction instance.  Free-form instances loaded
// from bare point files use Unknown.
enum class Role {
  Unknown,
  VarPoint,    // blue corner of a variable gadget
  CenterRed,   // red at the gadget center
  CapRed,      // red flanking a gadget line at the midline
  GuardRed,    // red between consecutive gadgets on the diagonal
  EquivBlue,   // size-1 clause equivalence point
  ClauseBlue,  // size-2 clause point or size-3 C1/C2
  CorridorRed, // diagonal red next to a clause point
  HelpBlue,    // size-3 helping point
  HelpRed,     // red shielding a helping point
  BlockerRed,  // red added by the ABCC augmentation
};

struct Annot {
  Role role = Role::Unknown;
  int var = 0;     // 1-based variable, when applicable
  int clause = -1; // 0-based clause index, when applicable
  std::string detail;

  std::string tag() const;
  static Annot from_tag(const std::string& tag);
};

// One of the four strip lines of a variable gadget.
struct LineRef {
  int var = 0;
  enum Which { LeftV, RightV, LowerH, UpperH } which = LeftV;

  bool operator==(const LineRef& o) const { return var == o.var && which == o.which; }
};

// A clause blue point is covered by the strips of (var == value); each such
// option names the strip line the point sits on.
struct CoverCond {
  int var = 0;
  bool value = false;
  LineRef line;
};

struct ClauseGeom {
  int size = 0;                          // 1, 2, or 3
  std::vector<int> blue_ids;             // indices into Instance::blue (E, or C, or C1,C2,H)
  std::vector<std::vector<CoverCond>> conds;  // per blue point (helping point: empty)
};

struct Layout {
  long pitch = 128;
  long side = 16;
  long cap = 2;
  long corridor = 4;
  long help = 1;

  long guard() const { return 2 * side; }
  void validate() const;
};

struct Instance {
  std::vector<Point> blue, red;
  std::vector<Annot> blue_ann, red_ann;
  int num_vars = 0;
  int num_size3 = 0;
  Layout layout;
  std::vector<int> slot;  // slot[v-1] = diagonal position of variable v
  std::vector<ClauseGeom> clauses;

  long anchor(int var) const { return layout.pitch * slot[var - 1]; }
  Rat line_coord(const LineRef& l) const;
  // True if the line is vertical (strips run in y).
  static bool vertical(LineRef::Which w) { return w == LineRef::LeftV || w == LineRef::RightV; }
};

using CoverRect = std::variant<Rect, OrientedRect>;

struct Cover {
  std::vector<CoverRect> rects;
};

// Point-set file: "classcover 1" header, then one "b|r <x> <y> <tag>" line
// per point, rationals as p/q.  Structural data (vars, slots, clause geometry)
// lives in a JSON sidecar written/read separately.
std::string write_instance(const Instance& inst);
Instance parse_instance(const std::string& text);
std::string write_sidecar(const Instance& inst);
void apply_sidecar(Instance& inst, const std::string& json_text);

std::string write_cover(const Cover& c);
Cover parse_cover(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ccover
