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

#include "ktq/colorsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ktq/error.hpp"

namespace ktq {

VarId EquationSystem::add_var(std::string name) {
  if (!name.empty() && var_names.size() < var_count) {
    for (std::size_t v = var_names.size(); v < var_count; ++v)
      var_names.push_back("v" + std::to_string(v));
  }
  if (!var_names.empty() || !name.empty()) {
    var_names.push_back(name.empty() ? "v" + std::to_string(var_count)
                                     : std::move(name));
  }
  return static_cast<VarId>(var_count++);
}

void EquationSystem::check() const {
  if (!var_names.empty() && var_names.size() != var_count)
    throw DomainError("variable name list does not match variable count");
  auto in_range = [&](VarId v) {
    if (v >= var_count)
      throw DomainError("variable index " + std::to_string(v) +
                        " out of range (" + std::to_string(var_count) +
                        " variables)");
  };
  for (const TriEq& e : tri_eqs) {
    in_range(e.p);
    in_range(e.q);
    in_range(e.r);
    in_range(e.s);
  }
  for (const EqVar& e : eq_vars) {
    in_range(e.i);
    in_range(e.j);
  }
}

std::string EquationSystem::name_of(VarId v) const {
  if (v < var_names.size()) return var_names[v];
  return "v" + std::to_string(v);
}

Normalized normalize_with_map(const EquationSystem& sys) {
  sys.check();
  std::vector<VarId> parent(sys.var_count);
  std::iota(parent.begin(), parent.end(), VarId{0});
  auto find = [&](VarId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const EqVar& e : sys.eq_vars) {
    VarId a = find(e.i), b = find(e.j);
    if (a == b) continue;
    // The smaller index becomes the root so class order follows first use.
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  Normalized out;
  out.class_of.assign(sys.var_count, 0);
  std::vector<VarId> compact(sys.var_count, 0);
  std::vector<bool> is_root(sys.var_count, false);
  for (VarId v = 0; v < sys.var_count; ++v) {
    if (find(v) == v) {
      compact[v] = out.system.add_var(sys.var_names.empty() ? ""
                                                           : sys.var_names[v]);
      is_root[v] = true;
    }
  }
  if (sys.var_names.empty()) out.system.var_names.clear();
  for (VarId v = 0; v < sys.var_count; ++v) out.class_of[v] = compact[find(v)];
  std::vector<TriEq> seen;
  for (const TriEq& e : sys.tri_eqs) {
    TriEq m{out.class_of[e.p], out.class_of[e.q], out.class_of[e.r],
            out.class_of[e.s]};
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
    seen.push_back(m);
    out.system.tri_eqs.push_back(m);
  }
  return out;
}

EquationSystem normalize(const EquationSystem& sys) {
  return normalize_with_map(sys).system;
}

namespace {

constexpr int kUndecided = -1;

// Backtracking search over a normalized system with unit propagation.
class Search {
 public:
  Search(const EquationSystem& sys, const Tribracket& t)
      : sys_(sys), t_(t), n_(t.size()), value_(sys.var_count, kUndecided),
        occ_(sys.var_count), score_(sys.var_count, 0) {
    for (std::uint32_t c = 0; c < sys_.tri_eqs.size(); ++c) {
      const TriEq& e = sys_.tri_eqs[c];
      for (VarId v : {e.p, e.q, e.r, e.s}) {
        if (occ_[v].empty() || occ_[v].back() != c) occ_[v].push_back(c);
      }
    }
  }

  const std::vector<std::vector<std::uint32_t>>& occurrences() const {
    return occ_;
  }
  SolveStats& stats() { return stats_; }
  const std::vector<int>& values() const { return value_; }

  // Examines every constraint once; used before the first branch.
  bool propagate_all() {
    const std::size_t mark = trail_.size();
    for (std::uint32_t c = 0; c < sys_.tri_eqs.size(); ++c)
      if (!examine(c)) return false;
    return propagate_from(mark);
  }

  // Assigns v = x and propagates. On failure the caller must undo.
  bool assign_and_propagate(VarId v, Element x) {
    const std::size_t mark = trail_.size();
    assign(v, x);
    return propagate_from(mark);
  }

  std::size_t trail_size() const { return trail_.size(); }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = kUndecided;
      trail_.pop_back();
    }
  }

  // Counts solutions over the undecided variables in `order`, which lists
  // one component by decreasing occurrence count. Each node branches on the
  // variable that turns the most constraints into unit constraints, so that
  // propagation does most of the work; `order` breaks ties.
  std::uint64_t count(const std::vector<VarId>& order, std::uint64_t depth) {
    ++stats_.nodes_visited;
    stats_.branch_depth_max = std::max(stats_.branch_depth_max, depth);
    bool found = false;
    const VarId branch = pick(order, found);
    if (!found) return 1;
    std::uint64_t total = 0;
    for (Element x = 0; x < n_; ++x) {
      const std::size_t mark = trail_.size();
      if (assign_and_propagate(branch, x)) total += count(order, depth + 1);
      undo_to(mark);
    }
    return total;
  }

  // Collects solutions in lexicographic order of `order` (which must be the
  // identity order) until `limit` are found.
  void collect(const std::vector<VarId>& order, std::size_t limit,
               std::vector<Coloring>& out) {
    if (out.size() >= limit) return;
    ++stats_.nodes_visited;
    for (VarId v : order) {
      if (value_[v] != kUndecided) continue;
      for (Element x = 0; x < n_ && out.size() < limit; ++x) {
        const std::size_t mark = trail_.size();
        if (assign_and_propagate(v, x)) collect(order, limit, out);
        undo_to(mark);
      }
      return;
    }
    Coloring c(value_.size());
    for (std::size_t v = 0; v < value_.size(); ++v)
      c[v] = static_cast<Element>(value_[v]);
    out.push_back(std::move(c));
  }

 private:
  void assign(VarId v, Element x) {
    value_[v] = x;
    trail_.push_back(v);
  }

  // Scores each undecided variable by the constraints it shares with at most
  // two other undecided variables, weighting near-unit constraints heavily.
  VarId pick(const std::vector<VarId>& order, bool& found) {
    for (VarId v : order) {
      if (value_[v] != kUndecided) continue;
      score_[v] = 0;
      for (std::uint32_t c : occ_[v]) {
        const TriEq& e = sys_.tri_eqs[c];
        VarId open[4];
        int k = 0;
        for (VarId w : {e.p, e.q, e.r, e.s}) {
          if (value_[w] != kUndecided) continue;
          if (std::find(open, open + k, w) == open + k) open[k++] = w;
        }
        if (k == 2) score_[v] += 64;
        else if (k == 3) score_[v] += 1;
      }
    }
    VarId best = 0;
    std::uint64_t best_score = 0;
    for (VarId v : order) {
      if (value_[v] != kUndecided) continue;
      if (!found || score_[v] > best_score) {
        best = v;
        best_score = score_[v];
        found = true;
      }
    }
    return best;
  }

  bool propagate_from(std::size_t head) {
    while (head < trail_.size()) {
      const VarId v = trail_[head++];
      for (std::uint32_t c : occ_[v])
        if (!examine(c)) return false;
    }
    return true;
  }

  // Checks constraint c; forces its last undecided variable when the table
  // leaves a single candidate. Returns false on conflict.
  bool examine(std::uint32_t c) {
    const TriEq& e = sys_.tri_eqs[c];
    const VarId vars[4] = {e.p, e.q, e.r, e.s};
    int unknown = -1;
    int unknown_slots = 0;
    int slot = -1;
    for (int k = 0; k < 4; ++k) {
      if (value_[vars[k]] != kUndecided) continue;
      if (unknown == -1) {
        unknown = static_cast<int>(vars[k]);
      } else if (static_cast<int>(vars[k]) != unknown) {
        return true;  // two distinct unknowns: nothing to infer yet
      }
      ++unknown_slots;
      slot = k;
    }
    if (unknown == -1) {
      return t_(value_[e.p], value_[e.q], value_[e.r]) == value_[e.s];
    }
    if (unknown_slots == 1) {
      Element known[3];
      int idx = 0;
      for (int k = 0; k < 4; ++k)
        if (k != slot) known[idx++] = static_cast<Element>(value_[vars[k]]);
      auto pre = t_.preimages(static_cast<Slot>(slot), known[0], known[1],
                              known[2]);
      if (pre.empty()) return false;
      if (pre.size() == 1) {
        assign(static_cast<VarId>(unknown), pre[0]);
        ++stats_.propagations;
      }
      return true;
    }
    // The same variable sits in several slots: scan the colors.
    int candidate = -1;
    int candidates = 0;
    for (Element x = 0; x < n_; ++x) {
      auto get = [&](int k) {
        return vars[k] == static_cast<VarId>(unknown)
                   ? x
                   : static_cast<Element>(value_[vars[k]]);
      };
      if (t_(get(0), get(1), get(2)) == get(3)) {
        if (++candidates > 1) return true;
        candidate = x;
      }
    }
    if (candidates == 0) return false;
    assign(static_cast<VarId>(unknown), static_cast<Element>(candidate));
    ++stats_.propagations;
    return true;
  }

  const EquationSystem& sys_;
  const Tribracket& t_;
  std::size_t n_;
  std::vector<int> value_;
  std::vector<VarId> trail_;
  std::vector<std::vector<std::uint32_t>> occ_;
  std::vector<std::uint64_t> score_;
  SolveStats stats_;
};

// Connected components of the variable/constraint incidence graph,
// restricted to constrained variables; each list is sorted.
std::vector<std::vector<VarId>> components(
    const EquationSystem& sys,
    const std::vector<std::vector<std::uint32_t>>& occ) {
  std::vector<int> comp(sys.var_count, -1);
  std::vector<std::vector<VarId>> out;
  for (VarId root = 0; root < sys.var_count; ++root) {
    if (comp[root] != -1 || occ[root].empty()) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VarId> stack{root};
    comp[root] = id;
    while (!stack.empty()) {
      const VarId v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (std::uint32_t c : occ[v]) {
        const TriEq& e = sys.tri_eqs[c];
        for (VarId w : {e.p, e.q, e.r, e.s}) {
          if (comp[w] == -1) {
            comp[w] = id;
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace

CountResult count_colorings(const EquationSystem& input, const Tribracket& t) {
  const EquationSystem sys = normalize(input);
  Search search(sys, t);
  CountResult result;
  const auto& occ = search.occurrences();
  std::size_t free_vars = 0;
  for (VarId v = 0; v < sys.var_count; ++v)
    if (occ[v].empty()) ++free_vars;
  mpz_class total = 1;
  mpz_class free_factor;
  mpz_ui_pow_ui(free_factor.get_mpz_t(), t.size(), free_vars);
  if (!search.propagate_all()) {
    result.count = 0;
    result.stats = search.stats();
    return result;
  }
  for (std::vector<VarId>& comp : components(sys, occ)) {
    // Branch order: most constraint occurrences first, ties to lower index.
    std::stable_sort(comp.begin(), comp.end(), [&](VarId a, VarId b) {
      return occ[a].size() > occ[b].size();
    });
    // Every solution is a separate leaf, so a 64-bit count cannot overflow
    // within any feasible running time.
    const std::uint64_t c = search.count(comp, 0);
    total *= mpz_class(std::to_string(c));
    if (total == 0) break;
  }
  result.count = total * free_factor;
  result.stats = search.stats();
  return result;
}

mpz_class brute_force_count(const EquationSystem& sys, const Tribracket& t,
                            std::uint64_t budget) {
  sys.check();
  const std::size_t n = t.size();
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), n, sys.var_count);
  if (space > mpz_class(std::to_string(budget))) {
    throw BudgetExceeded("brute force needs " + space.get_str() +
                             " assignments, budget is " +
                             std::to_string(budget),
                         0);
  }
  std::vector<Element> x(sys.var_count, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const EqVar& e : sys.eq_vars)
      if (x[e.i] != x[e.j]) {
        ok = false;
        break;
      }
    if (ok) {
      for (const TriEq& e : sys.tri_eqs)
        if (t(x[e.p], x[e.q], x[e.r]) != x[e.s]) {
          ok = false;
          break;
        }
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < x.size() && ++x[k] == n) x[k++] = 0;
    if (k == x.size()) break;
  }
  return mpz_class(std::to_string(count));
}

std::vector<Coloring> enumerate_colorings(const EquationSystem& input,
                                          const Tribracket& t,
                                          std::size_t limit) {
  std::vector<Coloring> out;
  if (limit == 0) return out;
  const Normalized norm = normalize_with_map(input);
  Search search(norm.system, t);
  if (!search.propagate_all()) return out;
  std::vector<VarId> order(norm.system.var_count);
  std::iota(order.begin(), order.end(), VarId{0});
  std::vector<Coloring> compact;
  search.collect(order, limit, compact);
  for (const Coloring& c : compact) {
    Coloring full(input.var_count);
    for (std::size_t v = 0; v < input.var_count; ++v)
      full[v] = c[norm.class_of[v]];
    out.push_back(std::move(full));
  }
  return out;
}

bool satisfies(const EquationSystem& sys, const Tribracket& t,
               const Coloring& c) {
  if (c.size() != sys.var_count) return false;
  for (Element x : c)
    if (x >= t.size()) return false;
  for (const EqVar& e : sys.eq_vars)
    if (c[e.i] != c[e.j]) return false;
  for (const TriEq& e : sys.tri_eqs)
    if (t(c[e.p], c[e.q], c[e.r]) != c[e.s]) return false;
  return true;
}

EquationSystem reverse_orientation(const EquationSystem& sys) {
  EquationSystem out = sys;
  for (TriEq& e : out.tri_eqs) e = TriEq{e.s, e.r, e.q, e.p};
  return out;
}

InvertibilityWitness invertibility_witness(const EquationSystem& sys,
                                           const Tribracket& t) {
  InvertibilityWitness w;
  w.forward = count_colorings(sys, t).count;
  w.reversed = count_colorings(reverse_orientation(sys), t).count;
  w.distinguishes = w.forward != w.reversed;
  return w;
}

bool same_constraints(const EquationSystem& a, const EquationSystem& b) {
  if (a.var_count != b.var_count) return false;
  auto tri_a = a.tri_eqs, tri_b = b.tri_eqs;
  std::sort(tri_a.begin(), tri_a.end());
  std::sort(tri_b.begin(), tri_b.end());
  auto eq_norm = [](std::vector<EqVar> v) {
    for (EqVar& e : v)
      if (e.j < e.i) std::swap(e.i, e.j);
    std::sort(v.begin(), v.end());
    return v;
  };
  return tri_a == tri_b && eq_norm(a.eq_vars) == eq_norm(b.eq_vars);
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const EquationSystem& a, const EquationSystem& b)
      : a_(a), b_(b), fwd_(a.var_count, -1), bwd_(b.var_count, -1),
        used_(b.tri_eqs.size(), false) {}

  bool run() { return match(0); }

 private:
  bool bind(VarId x, VarId y, std::vector<VarId>& bound) {
    if (fwd_[x] == -1 && bwd_[y] == -1) {
      fwd_[x] = static_cast<int>(y);
      bwd_[y] = static_cast<int>(x);
      bound.push_back(x);
      return true;
    }
    return fwd_[x] == static_cast<int>(y);
  }

  void unbind(const std::vector<VarId>& bound) {
    for (VarId x : bound) {
      bwd_[fwd_[x]] = -1;
      fwd_[x] = -1;
    }
  }

  bool match(std::size_t k) {
    if (k == a_.tri_eqs.size()) return true;
    const TriEq& e = a_.tri_eqs[k];
    for (std::size_t c = 0; c < b_.tri_eqs.size(); ++c) {
      if (used_[c]) continue;
      const TriEq& f = b_.tri_eqs[c];
      std::vector<VarId> bound;
      if (bind(e.p, f.p, bound) && bind(e.q, f.q, bound) &&
          bind(e.r, f.r, bound) && bind(e.s, f.s, bound)) {
        used_[c] = true;
        if (match(k + 1)) return true;
        used_[c] = false;
      }
      unbind(bound);
    }
    return false;
  }

  const EquationSystem& a_;
  const EquationSystem& b_;
  std::vector<int> fwd_, bwd_;
  std::vector<bool> used_;
};

}  // namespace

bool isomorphic(const EquationSystem& a, const EquationSystem& b) {
  const EquationSystem na = normalize(a), nb = normalize(b);
  if (na.var_count != nb.var_count || na.tri_eqs.size() != nb.tri_eqs.size())
    return false;
  // Remaining (free) variables can be paired arbitrarily once the constraint
  // structure matches, because the variable counts agree.
  return IsoSearch(na, nb).run();
}

}  // namespace ktq
