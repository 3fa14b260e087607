#include "ccover/corpus.hpp"
#include "ccover/errors.hpp"
#include "ccover/formula.hpp"
#include "ccover/instance.hpp"
#include "ccover/reduction.hpp"
#include "ccover/render.hpp"
#include "ccover/solver.hpp"
#include "ccover/transform.hpp"
#include "ccover/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace ccover;

Instance load_instance(const std::string& path, const std::string& sidecar) {
  Instance inst = parse_instance(read_file(path));
  if (!sidecar.empty()) apply_sidecar(inst, read_file(sidecar));
  return inst;
}

Assignment parse_assignment(const std::string& text, int num_vars) {
  Assignment a(num_vars, false);
  std::istringstream is(text);
  int lit;
  while (is >> lit) {
    if (lit == 0) break;
    int v = std::abs(lit);
    if (v < 1 || v > num_vars)
      throw FormatError("assignment literal " + std::to_string(lit) + " out of range");
    a[v - 1] = lit > 0;
  }
  return a;
}

std::string format_assignment(const Assignment& a) {
  std::string s;
  for (size_t v = 0; v < a.size(); ++v)
    s += (a[v] ? "" : "-") + std::to_string(v + 1) + " ";
  return s + "0\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Class-cover reduction laboratory: 3-CNF -> NAS-CNF -> bicolored point sets"};
  app.require_subcommand(1);

  std::string in_path, out_path, map_path, sidecar_path, cover_path, assign_text, report_path;
  int max_blues = 128;
  int max_vars = 4;
  int seeds = 20;
  bool greedy = false, oriented = false;

  auto* sat2nas = app.add_subcommand("sat2nas", "Transform a 3-CNF file to NAS form");
  sat2nas->add_option("input", in_path, "DIMACS CNF input")->required();
  sat2nas->add_option("output", out_path, "DIMACS CNF output")->required();
  sat2nas->add_option("--map", map_path, "write the variable-origin map (JSON)");

  auto* checknas = app.add_subcommand("check-nas", "Validate the NAS conditions");
  checknas->add_option("input", in_path)->required();

  auto* nas2bcc = app.add_subcommand("nas2bcc", "Compile a NAS formula into a point instance");
  nas2bcc->add_option("input", in_path)->required();
  nas2bcc->add_option("output", out_path, "instance file")->required();
  nas2bcc->add_option("--sidecar", sidecar_path, "write structural sidecar (JSON)");

  auto* bcc2abcc = app.add_subcommand("bcc2abcc", "Add orientation-blocking red points");
  bcc2abcc->add_option("input", in_path)->required();
  bcc2abcc->add_option("output", out_path)->required();

  auto* solve = app.add_subcommand("solve", "Minimum red-free rectangle cover");
  solve->add_option("input", in_path)->required();
  solve->add_option("-o,--output", cover_path, "write the cover");
  solve->add_flag("--greedy", greedy, "greedy baseline instead of exact search");
  solve->add_flag("--oriented", oriented, "search rectangles of any orientation");
  solve->add_option("--max-blues", max_blues, "exact-search size cap");

  auto* c2a = app.add_subcommand("cover2assign", "Read an assignment out of a cover");
  c2a->add_option("input", in_path, "instance file")->required();
  c2a->add_option("sidecar", sidecar_path, "structural sidecar (JSON)")->required();
  c2a->add_option("cover", cover_path, "cover file")->required();

  auto* a2c = app.add_subcommand("assign2cover", "Build the 2n+m cover of an assignment");
  a2c->add_option("input", in_path, "instance file")->required();
  a2c->add_option("sidecar", sidecar_path, "structural sidecar (JSON)")->required();
  a2c->add_option("assignment", assign_text, "literals, e.g. '1 -2 3 0'")->required();
  a2c->add_option("-o,--output", cover_path, "write the cover");

  auto* vl = app.add_subcommand("verify-lemma1", "Corpus check: optimum = 2n+m iff satisfiable");
  vl->add_option("--max-vars", max_vars, "corpus variable count");
  vl->add_option("--seeds", seeds, "number of random formulas");
  vl->add_option("--report", report_path, "write machine-readable report");

  auto* va = app.add_subcommand("verify-abcc", "Corpus check: augmentation conservation");
  va->add_option("--max-vars", max_vars, "corpus variable count");
  va->add_option("--seeds", seeds, "number of random formulas");
  va->add_option("--report", report_path, "write machine-readable report");

  auto* render = app.add_subcommand("render", "Draw an instance as SVG");
  render->add_option("input", in_path)->required();
  render->add_option("output", out_path)->required();
  render->add_option("--cover", cover_path, "overlay a cover file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*sat2nas) {
    TransformResult r = sat_to_nas(parse_dimacs_file(in_path));
    write_file(out_path, write_dimacs(r.formula));
    if (!map_path.empty()) write_file(map_path, r.map.to_json());
  } else if (*checknas) {
    NasReport rep = validate_nas(parse_dimacs_file(in_path));
    for (const NasViolation& v : rep.violations)
      std::cout << "clause " << v.clause_index << " violates condition " << v.condition << ": "
                << v.detail << "\n";
    if (!rep.is_nas) return 1;
    std::cout << "formula is in NAS form\n";
  } else if (*nas2bcc) {
    Instance inst = build_bcc(parse_dimacs_file(in_path));
    write_file(out_path, write_instance(inst));
    if (!sidecar_path.empty()) write_file(sidecar_path, write_sidecar(inst));
    std::cout << inst.blue.size() << " blue, " << inst.red.size() << " red, target 2n+m = "
              << 2 * inst.num_vars + inst.num_size3 << "\n";
  } else if (*bcc2abcc) {
    Instance inst = load_instance(in_path, "");
    Instance out = augment_abcc(inst);
    write_file(out_path, write_instance(out));
    std::cout << (out.red.size() - inst.red.size()) << " blockers added\n";
  } else if (*solve) {
    Instance inst = load_instance(in_path, "");
    Cover cover;
    if (greedy) {
      cover = greedy_cover(inst);
      std::cout << "greedy cover size " << cover.rects.size() << "\n";
    } else if (oriented) {
      auto [c, stats] = min_cover_oriented(inst, {}, max_blues);
      cover = c;
      std::cout << "oriented optimum " << stats.optimum << " (" << stats.nodes << " nodes)\n";
    } else {
      auto [c, stats] = exact_cover(inst, max_blues);
      cover = c;
      std::cout << "optimum " << stats.optimum << " (" << stats.nodes << " nodes)\n";
    }
    if (!cover_path.empty()) write_file(cover_path, write_cover(cover));
  } else if (*c2a) {
    Instance inst = load_instance(in_path, sidecar_path);
    Cover cover = parse_cover(read_file(cover_path));
    std::cout << format_assignment(cover_to_assign(inst, cover));
  } else if (*a2c) {
    Instance inst = load_instance(in_path, sidecar_path);
    Cover cover = assign_to_cover(inst, parse_assignment(assign_text, inst.num_vars));
    std::string text = write_cover(cover);
    if (!cover_path.empty())
      write_file(cover_path, text);
    else
      std::cout << text;
  } else if (*vl || *va) {
    Rng rng(20240817);
    Report all;
    int built = 0;
    for (int s = 0; s < seeds; ++s) {
      Formula nas = random_nas(rng, max_vars, 5);
      Instance inst;
      try {
        inst = build_bcc(nas);
      } catch (const BuildError&) {
        continue;  // no admissible diagonal ordering for this draw
      }
      ++built;
      Report r;
      if (*vl) {
        r.merge(check_gadgets(inst));
        r.merge(check_lemma1(nas, inst));
      } else {
        r.merge(check_abcc(inst, augment_abcc(inst)));
      }
      if (!r.pass()) {
        std::cout << "formula " << write_dimacs(nas) << "failures:\n" << r.text();
        all.merge(r);
      }
    }
    std::cout << built << "/" << seeds << " instances checked, "
              << (all.pass() ? "all passed" : std::to_string(all.failures.size()) + " failures")
              << "\n";
    if (!report_path.empty()) {
      std::string json = "{\"checked\": " + std::to_string(built) + ", \"failures\": " +
                         std::to_string(all.failures.size()) + "}\n";
      write_file(report_path, json);
    }
    if (!all.pass()) return 1;
  } else if (*render) {
    Instance inst = load_instance(in_path, "");
    std::optional<Cover> cover;
    if (!cover_path.empty()) cover = parse_cover(read_file(cover_path));
    write_file(out_path, render_svg(inst, cover));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ccover::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 5;
  } catch (const ccover::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const ccover::CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const ccover::BuildError& e) {
    std::cerr << "build error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
