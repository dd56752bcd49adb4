// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand prints one JSON document on
// standard output (or a text rendering with --pretty) and exits with
//   0 success, 1 validation or count mismatch, 2 input error,
//   3 budget exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "ktq/catalog.hpp"
#include "ktq/colorsys.hpp"
#include "ktq/diagrams.hpp"
#include "ktq/error.hpp"
#include "ktq/io.hpp"
#include "ktq/surfaces.hpp"
#include "ktq/tribracket.hpp"

namespace {

using ktq::Json;

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kBudget = 3 };

struct Options {
  bool pretty = false;
  std::uint64_t max_assignments = 10'000'000;
};

int emit(const Options& opt, const Json& payload, int code,
         const std::string& text = "") {
  if (opt.pretty && !text.empty()) std::cout << text;
  else std::cout << (opt.pretty ? payload.dump(2) : payload.dump()) << "\n";
  return code;
}

Json status(const char* s) { return Json{{"status", s}}; }

ktq::Tribracket load_tribracket(const std::string& path) {
  ktq::Tribracket t = ktq::tribracket_from_json(ktq::read_json_file(path));
  if (t.name().empty()) t.set_name(path);
  return t;
}

int cmd_validate(const Options& opt, const std::string& file) {
  const ktq::Tribracket t = load_tribracket(file);
  const ktq::ValidationReport r = ktq::validate(t);
  Json out = status(r.valid ? "ok" : "invalid");
  out["tribracket"] = t.name();
  out["size"] = t.size();
  out.update(ktq::validation_to_json(r));
  return emit(opt, out, r.valid ? kOk : kMismatch);
}

int cmd_count(const Options& opt, const std::string& tfile,
              const std::string& sfile, bool reverse, bool oracle) {
  const ktq::Tribracket t = load_tribracket(tfile);
  ktq::EquationSystem sys = ktq::system_from_json(ktq::read_json_file(sfile));
  if (reverse) sys = ktq::reverse_orientation(sys);
  const ktq::CountResult r = ktq::count_colorings(sys, t);
  Json out = status("ok");
  out["count"] = ktq::count_to_json(r.count);
  out["reversed"] = reverse;
  out["tribracket_valid"] = ktq::validate(t).valid;
  out["stats"] = ktq::stats_to_json(r.stats);
  if (oracle) {
    const mpz_class o = ktq::brute_force_count(sys, t, opt.max_assignments);
    out["oracle"] = ktq::count_to_json(o);
    if (o != r.count) {
      out["status"] = "mismatch";
      return emit(opt, out, kMismatch);
    }
  }
  return emit(opt, out, kOk);
}

int cmd_table(const Options& opt, const std::string& tfile,
              const std::string& data_dir) {
  const ktq::Tribracket t = load_tribracket(tfile);
  const ktq::Catalog cat = ktq::load_catalog(data_dir);
  const ktq::TableReport r = ktq::run_table(t, cat);
  return emit(opt, ktq::table_to_json(r), r.all_match ? kOk : kMismatch,
              ktq::table_to_text(r));
}

int cmd_spin(const Options& opt, const std::string& pfile,
             const std::string& emit_file, bool count, const std::string& tfile) {
  const ktq::PlatPresentation plat = ktq::plat_from_json(ktq::read_json_file(pfile));
  const ktq::TriplaneDiagram tp = ktq::spun_triplane(plat);
  Json out = status("ok");
  out["bridges"] = tp.bridges;
  out["patches"] = ktq::patch_numbers(tp);
  out["euler_characteristic"] = ktq::euler_characteristic(tp);
  if (!emit_file.empty()) {
    ktq::write_json_file(emit_file, ktq::triplane_to_json(tp));
    out["triplane_file"] = emit_file;
  }
  if (count) {
    if (tfile.empty()) throw ktq::InputError("--count needs --tribracket");
    const ktq::Tribracket t = load_tribracket(tfile);
    const mpz_class knot = ktq::count_colorings(ktq::plat_to_system(plat), t).count;
    const mpz_class spun = ktq::count_colorings(ktq::triplane_to_system(tp), t).count;
    out["knot"] = ktq::count_to_json(knot);
    out["spun"] = ktq::count_to_json(spun);
    out["equal"] = knot == spun;
    if (knot != spun) {
      out["status"] = "mismatch";
      return emit(opt, out, kMismatch);
    }
  }
  return emit(opt, out, kOk);
}

int cmd_enumerate(const Options& opt, std::size_t n, std::size_t limit) {
  if (n == 0 || n > 4) throw ktq::InputError("enumeration supports sizes 1..4");
  Json tensors = Json::array();
  const ktq::EnumerationStats stats = ktq::enumerate_tribrackets(
      n, opt.max_assignments, [&](const ktq::Tribracket& t) {
        tensors.push_back(ktq::tribracket_to_json(t)["tensor"]);
        return limit == 0 || tensors.size() < limit;
      });
  Json out = status("ok");
  out["size"] = n;
  out["count"] = tensors.size();
  out["complete"] = stats.completed;
  out["nodes"] = stats.nodes;
  out["tribrackets"] = tensors;
  return emit(opt, out, kOk);
}

int cmd_bounds(const Options& opt, const std::string& tpfile,
               const std::string& tfile) {
  const ktq::TriplaneDiagram tp = ktq::triplane_from_json(ktq::read_json_file(tpfile));
  if (!ktq::validate_orientation(tp))
    throw ktq::InputError("triplane orientation is invalid");
  const ktq::Tribracket t = load_tribracket(tfile);
  const mpz_class count = ktq::count_colorings(ktq::triplane_to_system(tp), t).count;
  const ktq::BoundsReport r = ktq::bounds_report(tp, count, t.size());
  Json out = status(r.satisfied ? "ok" : "violated");
  out.update(ktq::bounds_to_json(r));
  return emit(opt, out, r.satisfied ? kOk : kMismatch);
}

int cmd_faces(const Options& opt, const std::string& pdfile, bool emit_system,
              const std::string& system_out) {
  const ktq::PDCode pd = ktq::pd_from_json(ktq::read_json_file(pdfile));
  const ktq::FaceTrace ft = ktq::trace_faces(pd);
  Json out = status("ok");
  out["crossings"] = pd.crossings.size();
  out["regions"] = ft.rad.region_count;
  out["rad"] = ktq::rad_to_json(ft.rad);
  if (emit_system || !system_out.empty()) {
    const Json sys = ktq::system_to_json(ktq::emit_equations(ft.rad));
    if (emit_system) out["system"] = sys;
    if (!system_out.empty()) {
      ktq::write_json_file(system_out, sys);
      out["system_file"] = system_out;
    }
  }
  return emit(opt, out, kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tribracket region colorings of knots and surface-links"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--pretty", opt.pretty, "Human-readable output");
  app.add_option("--max-assignments", opt.max_assignments,
                 "Budget for brute-force oracles and enumeration nodes");

  std::string tribracket, system, data_dir = ktq::default_data_dir().string();
  std::string plat, emit_triplane, triplane, pd, system_out;
  bool reverse = false, oracle = false, count = false, emit_system = false;
  std::size_t size = 0, limit = 0;

  auto* validate = app.add_subcommand("validate", "Check the tribracket axioms");
  validate->add_option("--tribracket", tribracket, "Tribracket file")->required();

  auto* countc = app.add_subcommand("count", "Count colorings of an equation system");
  countc->add_option("--tribracket", tribracket, "Tribracket file")->required();
  countc->add_option("--system", system, "Equation system file")->required();
  countc->add_flag("--reverse", reverse, "Reverse the orientation first");
  countc->add_flag("--oracle", oracle, "Cross-check with brute force");

  auto* table = app.add_subcommand("table", "Reproduce the bundled table of counts");
  table->add_option("--tribracket", tribracket, "Tribracket file")->required();
  table->add_option("--data-dir", data_dir, "Directory of bundled data");

  auto* spin = app.add_subcommand("spin", "Spun-knot triplane of a plat");
  spin->add_option("--plat", plat, "Plat file")->required();
  spin->add_option("--emit-triplane", emit_triplane, "Write the triplane to FILE");
  spin->add_flag("--count", count, "Compare knot and spun-knot counts");
  spin->add_option("--tribracket", tribracket, "Tribracket file for --count");

  auto* enumerate = app.add_subcommand("enumerate", "List all tribrackets of a size");
  enumerate->add_option("-n", size, "Size")->required();
  enumerate->add_option("--limit", limit, "Stop after K tribrackets (0: all)");

  auto* bounds = app.add_subcommand("bounds", "Check the bridge/patch inequalities");
  bounds->add_option("--triplane", triplane, "Triplane file")->required();
  bounds->add_option("--tribracket", tribracket, "Tribracket file")->required();

  auto* faces = app.add_subcommand("faces", "Trace the regions of a PD code");
  faces->add_option("--pd", pd, "PD code file")->required();
  faces->add_flag("--emit-system", emit_system, "Include the equation system");
  faces->add_option("--system-out", system_out, "Write the equation system to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, tribracket);
    if (countc->parsed()) return cmd_count(opt, tribracket, system, reverse, oracle);
    if (table->parsed()) return cmd_table(opt, tribracket, data_dir);
    if (spin->parsed()) return cmd_spin(opt, plat, emit_triplane, count, tribracket);
    if (enumerate->parsed()) return cmd_enumerate(opt, size, limit);
    if (bounds->parsed()) return cmd_bounds(opt, triplane, tribracket);
    if (faces->parsed()) return cmd_faces(opt, pd, emit_system, system_out);
  } catch (const ktq::BudgetExceeded& e) {
    Json out = status("budget_exceeded");
    out["error"] = e.what();
    out["progress"] = e.progress();
    return emit(opt, out, kBudget);
  } catch (const ktq::Error& e) {
    Json out = status("error");
    out["error"] = e.what();
    return emit(opt, out, kInput);
  }
  return kInput;
}
