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

// Region-equation systems over a tribracket and exact counting of their
// solutions.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ktq/tribracket.hpp"

namespace ktq {

using VarId = std::uint32_t;

// [x_p, x_q, x_r] = x_s.
struct TriEq {
  VarId p, q, r, s;
  friend auto operator<=>(const TriEq&, const TriEq&) = default;
};

// x_i = x_j.
struct EqVar {
  VarId i, j;
  friend auto operator<=>(const EqVar&, const EqVar&) = default;
};

struct EquationSystem {
  std::size_t var_count = 0;
  std::vector<std::string> var_names;  // empty, or one name per variable
  std::vector<TriEq> tri_eqs;
  std::vector<EqVar> eq_vars;

  VarId add_var(std::string name = "");
  // Throws DomainError if an index is out of range or names mismatch.
  void check() const;
  std::string name_of(VarId v) const;
};

struct Normalized {
  EquationSystem system;
  // class_of[v] is the variable of `system` that original variable v maps to.
  std::vector<VarId> class_of;
};

// Merges EqVar classes, rewrites TriEqs onto the class representatives,
// drops duplicate TriEqs and compacts indices. Free variables are kept, so
// the solution count is preserved exactly. The result has no EqVars.
Normalized normalize_with_map(const EquationSystem& sys);
EquationSystem normalize(const EquationSystem& sys);

struct SolveStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t propagations = 0;
  std::uint64_t branch_depth_max = 0;
};

struct CountResult {
  mpz_class count;
  SolveStats stats;
};

// Exact number of assignments satisfying every constraint. Works for any
// table, including ones that violate the axioms.
CountResult count_colorings(const EquationSystem& sys, const Tribracket& t);

// Reference oracle: tries all |X|^var_count assignments. Throws
// BudgetExceeded (without counting anything) if that exceeds `budget`.
mpz_class brute_force_count(const EquationSystem& sys, const Tribracket& t,
                            std::uint64_t budget);

using Coloring = std::vector<Element>;

// Up to `limit` solutions in lexicographic order of the assignment vector.
std::vector<Coloring> enumerate_colorings(const EquationSystem& sys,
                                          const Tribracket& t,
                                          std::size_t limit);

bool satisfies(const EquationSystem& sys, const Tribracket& t,
               const Coloring& c);

// TriEq(p,q,r,s) -> TriEq(s,r,q,p); EqVars and variables unchanged.
EquationSystem reverse_orientation(const EquationSystem& sys);

struct InvertibilityWitness {
  mpz_class forward;
  mpz_class reversed;
  bool distinguishes;
};

InvertibilityWitness invertibility_witness(const EquationSystem& sys,
                                           const Tribracket& t);

// Multiset equality of constraints under the identity variable map.
bool same_constraints(const EquationSystem& a, const EquationSystem& b);

// Systems equal up to a renaming of variables (exhaustive search over
// bijections guided by constraint structure; intended for small systems).
bool isomorphic(const EquationSystem& a, const EquationSystem& b);

}  // namespace ktq
