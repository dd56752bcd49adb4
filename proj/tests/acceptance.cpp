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

// Acceptance report: one PASS/FAIL line per criterion, with the evidence
// behind each verdict. The process exits 0 once the report is complete so
// that a red criterion is visible without masking the other results; it
// exits 1 only if the harness itself cannot run.

#include <gmpxx.h>

#include <chrono>
#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ktq/catalog.hpp"
#include "ktq/colorsys.hpp"
#include "ktq/diagrams.hpp"
#include "ktq/error.hpp"
#include "ktq/io.hpp"
#include "ktq/surfaces.hpp"
#include "ktq/tribracket.hpp"

using namespace ktq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

int g_passed = 0;
int g_total = 0;

void report(int id, const std::string& title, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.notes.push_back(std::string("exception: ") + e.what());
  }
  ++g_total;
  if (v.pass) ++g_passed;
  std::ostringstream time;
  time.precision(2);
  time << std::fixed << seconds_since(start) << "s";
  std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " ("
            << time.str() << ")\n";
  for (const std::string& n : v.notes) std::cout << "     " << n << "\n";
}

std::string str(const mpz_class& x) { return x.get_str(); }

mpz_class power(std::size_t base, std::size_t exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// ---- Independent oracles -------------------------------------------------

// Direct check of both axioms on a flat n^3 tensor indexed (a*n + b)*n + c.
bool oracle_is_tribracket(std::size_t n, const std::vector<Element>& t) {
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) { return t[(a * n + b) * n + c]; };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      std::vector<int> s0(n, 0), s1(n, 0), s2(n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        if (s0[at(x, u, w)]++ || s1[at(u, x, w)]++ || s2[at(u, w, x)]++) return false;
      }
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Element abc = at(a, b, c), abd = at(a, b, d), acd = at(a, c, d);
          const Element x = at(b, abc, abd), y = at(c, abc, acd), z = at(d, abd, acd);
          if (x != y || y != z) return false;
        }
  return true;
}

// Plain enumeration of all assignments, independent of the library solver.
mpz_class oracle_count(const EquationSystem& sys, const Tribracket& t) {
  const std::size_t n = t.size();
  std::vector<Element> x(sys.var_count, 0);
  mpz_class total = 0;
  while (true) {
    bool ok = true;
    for (const EqVar& e : sys.eq_vars) ok = ok && x[e.i] == x[e.j];
    for (const TriEq& e : sys.tri_eqs) ok = ok && t(x[e.p], x[e.q], x[e.r]) == x[e.s];
    if (ok) ++total;
    std::size_t k = 0;
    while (k < x.size() && ++x[k] == n) x[k++] = 0;
    if (k == x.size()) break;
  }
  return total;
}

// ---- Fixtures ------------------------------------------------------------

const Catalog& cat() {
  static const Catalog c = load_catalog();
  return c;
}

std::vector<Tribracket> bundled_tribrackets() {
  std::vector<Tribracket> all = cat().tribrackets;
  for (const char* file : {"x3_printed.json", "x3_inline.json"})
    all.push_back(tribracket_from_json(load_data_file(std::string("tribrackets/") + file)));
  return all;
}

std::vector<Tribracket> valid_catalog_tribrackets() {
  std::vector<Tribracket> out;
  for (const Tribracket& t : cat().tribrackets)
    if (validate(t).valid) out.push_back(t);
  return out;
}

PDCode pd(const std::string& name) { return pd_from_json(load_data_file("pd/" + name + ".json")); }
PlatPresentation plat(const std::string& name) {
  return plat_from_json(load_data_file("plats/" + name + ".json"));
}
TriplaneDiagram triplane(const std::string& name) {
  return triplane_from_json(load_data_file("triplanes/" + name + ".json"));
}

const std::vector<std::string> kPds = {"unknot", "kinked_unknot", "trefoil",
                                       "figure_eight", "trefoil_4", "trefoil_r2"};
const std::vector<std::string> kTriplanes = {"unknotted_sphere", "unknotted_torus_4plane",
                                             "two_spheres_identical", "spun_trefoil",
                                             "spun_figure_eight"};

mpz_class count(const EquationSystem& sys, const Tribracket& t) {
  return count_colorings(sys, t).count;
}

// ---- Criteria ------------------------------------------------------------

Verdict table_reproduction() {
  Verdict v;
  const auto start = Clock::now();
  const Tribracket& x3 = cat().tribracket("X3");
  const std::vector<std::pair<std::string, int>> expected = {
      {"0_1", 9},   {"8_1", 15},   {"-8_1", 15},  {"9_1", 25},  {"-9_1", 21}, {"10_1", 13},
      {"-10_1", 13}, {"10_2", 37}, {"-10_2", 37}, {"10_3", 14}, {"-10_3", 10}};
  std::string got;
  for (const auto& [name, value] : expected) {
    const mpz_class c = count(cat().entry(name).system, x3);
    got += (got.empty() ? "" : ", ") + str(c);
    v.require(c == value, name + " counts " + str(c) + ", expected " + std::to_string(value));
  }
  v.note("counts: " + got);
  v.require(seconds_since(start) < 10.0, "runtime under 10 s");
  return v;
}

Verdict non_invertibility() {
  Verdict v;
  const Tribracket& x3 = cat().tribracket("X3");
  struct Want {
    const char* name;
    int forward, reversed;
    bool distinguishes;
  };
  for (const Want& w : {Want{"9_1", 25, 21, true}, Want{"10_3", 14, 10, true},
                        Want{"10_2", 37, 37, false}}) {
    const InvertibilityWitness r = invertibility_witness(cat().entry(w.name).system, x3);
    std::ostringstream line;
    line << w.name << ": (" << str(r.forward) << ", " << str(r.reversed) << ", "
         << (r.distinguishes ? "true" : "false") << ")";
    v.note(line.str());
    v.require(r.forward == w.forward && r.reversed == w.reversed &&
                  r.distinguishes == w.distinguishes,
              w.name);
  }
  return v;
}

Verdict dehn_abelian() {
  Verdict v;
  const auto start = Clock::now();
  for (std::size_t n = 2; n <= 5; ++n) {
    const Tribracket t = dehn_tribracket(cyclic_group(n));
    for (const CatalogEntry& e : cat().entries) {
      const mpz_class want = power(n, e.components + 1);
      const mpz_class got = count(e.system, t);
      v.require(got == want, "Z" + std::to_string(n) + " on " + e.name + ": " + str(got) +
                                 " != " + str(want));
    }
  }
  v.note("all " + std::to_string(cat().entries.size()) + " entries checked for Z2..Z5");
  v.require(seconds_since(start) < 5.0, "runtime under 5 s");
  return v;
}

Verdict spun_knots() {
  Verdict v;
  std::vector<Tribracket> tables = {cat().tribracket("X3"), cat().tribracket("X4")};
  for (std::size_t n = 2; n <= 4; ++n) tables.push_back(dehn_tribracket(cyclic_group(n)));
  for (const char* name : {"unknot", "trefoil", "figure_eight"}) {
    const PlatPresentation p = plat(name);
    const EquationSystem knot = plat_to_system(p);
    const EquationSystem spun = triplane_to_system(spun_triplane(p));
    for (const Tribracket& t : tables) {
      const mpz_class a = count(knot, t), b = count(spun, t);
      if (a != b)
        v.require(false, std::string(name) + " under " + t.name() + ": knot " + str(a) +
                             ", spun " + str(b));
    }
  }
  const Tribracket& x3 = cat().tribracket("X3");
  const mpz_class tre = count(triplane_to_system(spun_triplane(plat("trefoil"))), x3);
  const mpz_class fig = count(triplane_to_system(spun_triplane(plat("figure_eight"))), x3);
  v.note("spun trefoil under X3: " + str(tre) + " (expected 15)");
  v.note("spun figure-eight under X3: " + str(fig) + " (expected 13)");
  v.require(tre == 15 && fig == 13, "X3 spun counts");
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  std::size_t checks = 0, skipped = 0;
  for (const Tribracket& t : bundled_tribrackets()) {
    for (const CatalogEntry& e : cat().entries) {
      if (power(t.size(), e.system.var_count) > 10'000'000) {
        ++skipped;
        continue;
      }
      const mpz_class solver = count(e.system, t);
      const mpz_class oracle = oracle_count(e.system, t);
      const mpz_class library_oracle = brute_force_count(e.system, t, 10'000'000);
      ++checks;
      v.require(solver == oracle && library_oracle == oracle,
                e.name + " under " + t.name() + ": solver " + str(solver) + ", oracle " +
                    str(oracle));
    }
  }
  v.note(std::to_string(checks) + " system/table pairs compared, " + std::to_string(skipped) +
         " over the 10^7 space limit");
  return v;
}

Verdict axiom_suite() {
  Verdict v;
  auto accepts = [&](const Tribracket& t) {
    const bool lib = validate(t).valid;
    const bool oracle = oracle_is_tribracket(t.size(), t.tensor());
    v.require(lib == oracle, "validator disagrees with the direct axiom check on " + t.name());
    return lib;
  };
  const Tribracket& x3 = cat().tribracket("X3");
  if (!accepts(x3)) {
    const ValidationReport r = validate(x3);
    v.require(false, "X3 rejected: " + std::to_string(r.axiom1_failures.size()) +
                         " axiom-1 and " + std::to_string(r.axiom2_failures.size()) +
                         " axiom-2 failures");
  }
  v.require(accepts(cat().tribracket("X4")), "X4 accepted");
  std::vector<FiniteGroup> groups;
  for (std::size_t n = 1; n <= 8; ++n) groups.push_back(cyclic_group(n));
  groups.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  groups.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
  groups.push_back(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
  groups.push_back(dihedral_group(3));
  groups.push_back(dihedral_group(4));
  groups.push_back(quaternion_group());
  for (const FiniteGroup& g : groups) {
    const Tribracket t = dehn_tribracket(g);
    v.require(accepts(t), t.name() + " accepted");
  }
  v.note("Dehn tribrackets of " + std::to_string(groups.size()) + " groups of order <= 8");
  const Tribracket inline_x3 =
      tribracket_from_json(load_data_file("tribrackets/x3_inline.json"));
  const ValidationReport r = validate(inline_x3);
  v.require(!accepts(inline_x3), "in-text X3 rejected");
  bool located = false;
  for (const Axiom1Failure& f : r.axiom1_failures)
    located = located || (f.axis == 2 && f.fixed[0] == 1 && f.fixed[1] == 1 && f.duplicated == 1);
  v.require(located, "axiom-1 failure on the line [2,2,.] = 2 1 2");
  if (located) v.note("in-text X3: axiom-1 failure on the line [2,2,.] = 2 1 2");
  return v;
}

Verdict invariance_suite() {
  Verdict v;
  const std::vector<Tribracket>& tables = cat().tribrackets;
  std::vector<std::string> bad;
  auto fail = [&](const std::string& what, const Tribracket& t) {
    const std::string key = what + " under " + t.name();
    for (const std::string& b : bad)
      if (b == key) return;
    bad.push_back(key);
  };
  std::size_t kinks = 0, moves = 0;
  for (const std::string& name : kPds) {
    const PDCode code = pd(name);
    const RAD rad = trace_faces(code).rad;
    const EquationSystem sys = emit_equations(rad);
    v.require(same_constraints(emit_equations(mirror_reverse(rad)), sys),
              "mirror-reverse system equality on " + name);
    const EquationSystem retraced = emit_equations(trace_faces(mirror_reverse(code)).rad);
    v.require(isomorphic(retraced, sys), "mirror-reverse retraced system on " + name);
    std::vector<EdgeId> edges;
    for (const PDCrossing& c : code.crossings)
      for (EdgeId e : c.slots)
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    if (edges.empty()) edges.push_back(1);
    for (const Tribracket& t : tables) {
      const mpz_class base = count(sys, t);
      for (EdgeId e : edges)
        for (KinkSide side : {KinkSide::Left, KinkSide::Right})
          for (int sign : {1, -1}) {
            ++kinks;
            const PDCode kinked = add_r1_kink(code, e, side, sign);
            if (count(emit_equations(trace_faces(kinked).rad), t) != base) fail("R1 kink", t);
          }
    }
  }
  for (const std::string& name : kTriplanes) {
    const TriplaneDiagram tp = triplane(name);
    const EquationSystem sys = triplane_to_system(tp);
    for (const Tribracket& t : tables) {
      const mpz_class base = count(sys, t);
      for (int j = 1; j < static_cast<int>(2 * tp.bridges); ++j)
        for (int sign : {1, -1}) {
          ++moves;
          const TriplaneDiagram moved = mutual_braid_transposition(tp, j, sign);
          v.require(validate_orientation(moved), "transposition keeps orientation on " + name);
          if (count(triplane_to_system(moved), t) != base) fail("mutual braid transposition", t);
        }
    }
  }
  for (const CatalogEntry& e : cat().entries) {
    v.require(same_constraints(reverse_orientation(reverse_orientation(e.system)), e.system),
              "reversal involution on " + e.name);
    for (const Tribracket& t : tables) {
      const mpz_class twice = count(reverse_orientation(reverse_orientation(e.system)), t);
      if (twice != count(e.system, t)) fail("reversal involution", t);
    }
  }
  v.note(std::to_string(kinks) + " kinked diagrams and " + std::to_string(moves) +
         " transposed triplanes counted under " + std::to_string(tables.size()) + " tables");
  for (const std::string& b : bad) v.require(false, b + " changes the count");
  return v;
}

Verdict bounds_suite() {
  Verdict v;
  std::vector<std::pair<std::string, TriplaneDiagram>> presentations;
  for (const std::string& name : kTriplanes) presentations.emplace_back(name, triplane(name));
  for (const char* name : {"trefoil_alt", "figure_eight", "trefoil_4"})
    presentations.emplace_back(std::string("spun ") + name, spun_triplane(plat(name)));
  std::size_t checks = 0;
  for (const auto& [name, tp] : presentations) {
    const EquationSystem sys = triplane_to_system(tp);
    for (const Tribracket& t : valid_catalog_tribrackets()) {
      if (t.size() < 2) continue;
      ++checks;
      const BoundsReport r = bounds_report(tp, count(sys, t), t.size());
      v.require(r.satisfied, name + " under " + t.name() + " (slacks " +
                                 std::to_string(r.slack_i) + ", " + std::to_string(r.slack_ii) +
                                 ")");
    }
  }
  v.note(std::to_string(checks) + " presentation/table pairs satisfy both inequalities");
  const TriplaneDiagram sphere = triplane("unknotted_sphere");
  const BoundsReport tight = bounds_report(sphere, 9, 3);
  v.require(tight.satisfied && tight.slack_i == 0 && tight.slack_ii == 0,
            "unknotted sphere is tight");
  const BoundsReport fabricated = bounds_report(sphere, 25, 3);
  v.require(!fabricated.satisfied, "fabricated violation (b=1, c=(1,1,1), 25, |X|=3) flagged");
  if (!fabricated.satisfied) v.note("fabricated violation flagged");
  const Tribracket& x3 = cat().tribracket("X3");
  const BoundsReport spun = bounds_report(triplane("spun_trefoil"),
                                          count(triplane_to_system(triplane("spun_trefoil")), x3),
                                          3);
  v.note("not a tribracket, so outside the hypothesis: X3 on the spun trefoil counts " +
         str(spun.count) + (spun.satisfied ? " (within bounds)" : " (exceeds the bounds)"));
  return v;
}

Verdict enumeration() {
  Verdict v;
  // Size 2: every one of the 2^8 tensors, in lexicographic order.
  std::vector<std::vector<Element>> oracle;
  for (unsigned bits = 0; bits < 256; ++bits) {
    std::vector<Element> t(8);
    for (int k = 0; k < 8; ++k) t[k] = static_cast<Element>((bits >> (7 - k)) & 1);
    if (oracle_is_tribracket(2, t)) oracle.push_back(t);
  }
  std::vector<std::vector<Element>> found2;
  enumerate_tribrackets(2, 10'000'000, [&](const Tribracket& t) {
    found2.push_back(t.tensor());
    return true;
  });
  v.require(found2 == oracle, "size-2 enumeration equals the 256-tensor oracle");
  v.note("size 2: " + std::to_string(found2.size()) + " tribrackets, oracle " +
         std::to_string(oracle.size()));
  const auto start = Clock::now();
  std::vector<std::vector<Element>> found3;
  const EnumerationStats stats = enumerate_tribrackets(3, 1'000'000'000, [&](const Tribracket& t) {
    found3.push_back(t.tensor());
    return true;
  });
  v.require(stats.completed, "size-3 enumeration completed");
  v.require(seconds_since(start) < 60.0, "size-3 enumeration under 60 s");
  v.note("size 3: " + std::to_string(found3.size()) + " tribrackets");
  auto contains = [&](const Tribracket& t) {
    return std::find(found3.begin(), found3.end(), t.tensor()) != found3.end();
  };
  v.require(contains(dehn_tribracket(cyclic_group(3))), "size-3 list contains Dehn(Z3)");
  v.require(contains(cat().tribracket("X3")), "size-3 list contains X3");
  return v;
}

}  // namespace

int main() {
  try {
    report(1, "table reproduction with X3", table_reproduction);
    report(2, "non-invertibility certificates", non_invertibility);
    report(3, "Dehn tribrackets of abelian groups count |A|^(components+1)", dehn_abelian);
    report(4, "spun knots have the classical count", spun_knots);
    report(5, "solver agrees with exhaustive counting", oracle_equivalence);
    report(6, "axiom suite", axiom_suite);
    report(7, "invariance suite", invariance_suite);
    report(8, "bounds suite", bounds_suite);
    report(9, "enumeration of small tribrackets", enumeration);
  } catch (const std::exception& e) {
    std::cerr << "acceptance harness failed: " << e.what() << "\n";
    return 1;
  }
  std::cout << "SUMMARY " << g_passed << "/" << g_total << " criteria pass\n";
  return 0;
}
