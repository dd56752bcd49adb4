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

#include "ktq/surfaces.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ktq/error.hpp"

namespace ktq {

namespace {

struct Vec {
  int x, y;
};

// Emits the equation of one braid crossing while sweeping upward. `ori`
// holds the direction (+1 up) of the strand at each position and `gaps` the
// region variable of each gap, gaps[i] lying left of position i.
void sweep_crossing(EquationSystem& sys, int gen, std::vector<int>& ori,
                    std::vector<VarId>& gaps, const std::string& prefix) {
  const std::size_t j = static_cast<std::size_t>(std::abs(gen)) - 1;
  const Vec left = ori[j] > 0 ? Vec{1, 1} : Vec{-1, -1};
  const Vec right = ori[j + 1] > 0 ? Vec{-1, 1} : Vec{1, -1};
  const Vec over = gen > 0 ? left : right;
  const Vec under = gen > 0 ? right : left;
  const int sign = over.x * under.y - over.y * under.x > 0 ? 1 : -1;
  // The two outgoing ends point along `exit`.
  const Vec exit{(left.x + right.x) / 2, (left.y + right.y) / 2};
  const VarId top = sys.add_var(prefix + std::to_string(sys.var_count));
  auto region = [&](Vec d) {
    if (d.y < 0) return gaps[j + 1];
    if (d.y > 0) return top;
    return d.x < 0 ? gaps[j] : gaps[j + 2];
  };
  const VarId north = region(exit);
  const VarId south = region({-exit.x, -exit.y});
  const VarId west = region({-exit.y, exit.x});
  const VarId east = region({exit.y, -exit.x});
  if (sign > 0) sys.tri_eqs.push_back({west, south, north, east});
  else sys.tri_eqs.push_back({west, north, south, east});
  gaps[j + 1] = top;
  std::swap(ori[j], ori[j + 1]);
}

// pos[i] = starting position of the strand found at position i afterwards.
std::vector<std::size_t> braid_permutation(const BraidWord& word,
                                           std::size_t positions) {
  std::vector<std::size_t> pos(positions);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  for (int g : word) {
    const std::size_t j = static_cast<std::size_t>(std::abs(g)) - 1;
    std::swap(pos[j], pos[j + 1]);
  }
  return pos;
}

// Number of cycles of the union of two perfect matchings.
std::size_t union_cycles(const std::vector<std::size_t>& a,
                         const std::vector<std::size_t>& b) {
  std::vector<bool> seen(a.size(), false);
  std::size_t cycles = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (seen[x]) continue;
    ++cycles;
    std::size_t cur = x;
    while (!seen[cur]) {
      seen[cur] = true;
      const std::size_t y = a[cur];
      seen[y] = true;
      cur = b[y];
    }
  }
  return cycles;
}

// Smallest e with base^e >= value (0 when value <= 1).
long ceil_log(const mpz_class& value, std::size_t base) {
  long e = 0;
  mpz_class p = 1;
  while (p < value) {
    p *= static_cast<unsigned long>(base);
    ++e;
  }
  return e;
}

}  // namespace

void check_braid(const BraidWord& word, std::size_t positions) {
  for (int g : word) {
    if (g == 0 || static_cast<std::size_t>(std::abs(g)) >= positions)
      throw DomainError("braid generator " + std::to_string(g) +
                        " out of range for " + std::to_string(positions) +
                        " positions");
  }
}

std::vector<std::size_t> strand_matching(const TrivialTangle& t,
                                         std::size_t bridges) {
  const std::size_t m = 2 * bridges;
  check_braid(t.braid, m);
  const auto pos = braid_permutation(t.braid, m);
  std::vector<std::size_t> match(m);
  for (std::size_t i = 0; i < m; i += 2) {
    match[pos[i]] = pos[i + 1];
    match[pos[i + 1]] = pos[i];
  }
  return match;
}

void check_diagram(const TriplaneDiagram& tp) {
  if (tp.bridges == 0) throw DomainError("a diagram needs at least one bridge");
  if (tp.tangles.size() < 3)
    throw DomainError("a multiplane diagram needs at least three tangles");
  if (tp.signs.size() != 2 * tp.bridges)
    throw DomainError("expected " + std::to_string(2 * tp.bridges) +
                      " endpoint signs, got " + std::to_string(tp.signs.size()));
  for (int s : tp.signs)
    if (s != 1 && s != -1) throw DomainError("endpoint signs must be +1 or -1");
  for (const TrivialTangle& t : tp.tangles) check_braid(t.braid, 2 * tp.bridges);
}

bool validate_orientation(const TriplaneDiagram& tp) {
  check_diagram(tp);
  for (const TrivialTangle& t : tp.tangles) {
    const auto match = strand_matching(t, tp.bridges);
    for (std::size_t x = 0; x < match.size(); ++x)
      if (tp.signs[x] == tp.signs[match[x]]) return false;
  }
  return true;
}

EquationSystem triplane_to_system(const TriplaneDiagram& tp) {
  if (!validate_orientation(tp))
    throw StructuralError("triplane orientation is invalid: some strand does "
                          "not join a +1 endpoint to a -1 endpoint");
  const std::size_t m = 2 * tp.bridges;
  EquationSystem sys;
  // Boundary gaps are shared by all tangles; gap m is the outer region again.
  std::vector<VarId> boundary;
  for (std::size_t i = 0; i < m; ++i)
    boundary.push_back(sys.add_var("g" + std::to_string(i)));
  boundary.push_back(boundary[0]);
  for (std::size_t k = 0; k < tp.tangles.size(); ++k) {
    std::vector<VarId> gaps = boundary;
    std::vector<int> ori(m);
    for (std::size_t i = 0; i < m; ++i) ori[i] = -tp.signs[i];
    const std::string prefix = "t" + std::to_string(k + 1) + ".r";
    for (int g : tp.tangles[k].braid) sweep_crossing(sys, g, ori, gaps, prefix);
    // Above the caps every even gap is the outer region.
    for (std::size_t i = 2; i < m; i += 2)
      if (gaps[i] != boundary[0]) sys.eq_vars.push_back({gaps[i], boundary[0]});
  }
  return sys;
}

std::vector<std::size_t> patch_numbers(const TriplaneDiagram& tp) {
  check_diagram(tp);
  std::vector<std::vector<std::size_t>> matchings;
  for (const TrivialTangle& t : tp.tangles)
    matchings.push_back(strand_matching(t, tp.bridges));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < matchings.size(); ++i)
    out.push_back(union_cycles(matchings[i], matchings[(i + 1) % matchings.size()]));
  return out;
}

long euler_characteristic(const TriplaneDiagram& tp) {
  const auto c = patch_numbers(tp);
  const long n = static_cast<long>(tp.tangles.size());
  long chi = (2 - n) * static_cast<long>(tp.bridges);
  for (std::size_t ci : c) chi += static_cast<long>(ci);
  return chi;
}

BoundsReport bounds_report(const TriplaneDiagram& tp, const mpz_class& count,
                           std::size_t x_size) {
  if (x_size < 2) throw DomainError("bounds need a tribracket of size >= 2");
  if (count < 0) throw DomainError("count must be non-negative");
  BoundsReport r;
  r.count = count;
  r.x_size = x_size;
  r.patches = patch_numbers(tp);
  r.bridges = tp.bridges;
  r.euler = euler_characteristic(tp);
  const long n = static_cast<long>(tp.tangles.size());
  mpz_class count_n;
  mpz_pow_ui(count_n.get_mpz_t(), count.get_mpz_t(), static_cast<unsigned long>(n));
  r.log_ceil = ceil_log(count, x_size);
  r.n_log_ceil = ceil_log(count_n, x_size);
  const long min_c = static_cast<long>(*std::min_element(r.patches.begin(), r.patches.end()));
  r.slack_i = (min_c + 1) - r.log_ceil;
  r.slack_ii = ((n - 2) * static_cast<long>(tp.bridges) + n + r.euler) - r.n_log_ceil;
  r.satisfied_i = r.slack_i >= 0;
  r.satisfied_ii = r.slack_ii >= 0;
  r.satisfied = r.satisfied_i && r.satisfied_ii;
  return r;
}

TriplaneDiagram mutual_braid_transposition(const TriplaneDiagram& tp, int j,
                                           int sign) {
  check_diagram(tp);
  if (j < 1 || static_cast<std::size_t>(j) >= 2 * tp.bridges)
    throw DomainError("transposition index " + std::to_string(j) +
                      " outside [1, " + std::to_string(2 * tp.bridges - 1) + "]");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  TriplaneDiagram out = tp;
  for (TrivialTangle& t : out.tangles) t.braid.insert(t.braid.begin(), sign * j);
  std::swap(out.signs[j - 1], out.signs[j]);
  return out;
}

PlatTrace trace_plat(const PlatPresentation& plat) {
  if (plat.bridges == 0) throw DomainError("a plat needs at least one bridge");
  const std::size_t m = 2 * plat.bridges;
  check_braid(plat.braid, m);
  const auto pos = braid_permutation(plat.braid, m);
  std::vector<std::size_t> top_of(m);
  for (std::size_t i = 0; i < m; ++i) top_of[pos[i]] = i;
  PlatTrace out;
  out.bottom_orientation.assign(m, 0);
  for (std::size_t start = 0; start < m; ++start) {
    if (out.bottom_orientation[start] != 0) continue;
    ++out.components;
    std::size_t s = start;
    // Up strand s, cap, down strand s2, cup, up again.
    while (out.bottom_orientation[s] == 0) {
      out.bottom_orientation[s] = 1;
      const std::size_t s2 = pos[top_of[s] ^ 1];
      out.bottom_orientation[s2] = -1;
      s = s2 ^ 1;
    }
  }
  return out;
}

EquationSystem plat_to_system(const PlatPresentation& plat) {
  const PlatTrace trace = trace_plat(plat);
  EquationSystem sys;
  const VarId outer = sys.add_var("o");
  std::vector<VarId> gaps{outer};
  for (std::size_t i = 0; i < plat.bridges; ++i) {
    gaps.push_back(sys.add_var("cup" + std::to_string(i)));
    gaps.push_back(outer);
  }
  std::vector<int> ori = trace.bottom_orientation;
  for (int g : plat.braid) sweep_crossing(sys, g, ori, gaps, "r");
  for (std::size_t i = 2; i < gaps.size() - 1; i += 2)
    if (gaps[i] != outer) sys.eq_vars.push_back({gaps[i], outer});
  return sys;
}

PDCode plat_to_pd(const PlatPresentation& plat) {
  const PlatTrace trace = trace_plat(plat);
  const std::size_t m = 2 * plat.bridges;
  // Segments are the pieces of strands between crossings; cups and caps glue
  // segments into edges.
  std::vector<std::size_t> parent;
  auto fresh = [&] {
    parent.push_back(parent.size());
    return parent.size() - 1;
  };
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> seg(m);
  for (std::size_t i = 0; i < m; ++i) seg[i] = fresh();
  for (std::size_t i = 0; i < m; i += 2) parent[find(seg[i + 1])] = find(seg[i]);
  std::vector<int> ori = trace.bottom_orientation;
  struct Raw {
    int sign;
    std::array<std::size_t, 4> slots;
  };
  std::vector<Raw> raw;
  for (int g : plat.braid) {
    const std::size_t j = static_cast<std::size_t>(std::abs(g)) - 1;
    const Vec left = ori[j] > 0 ? Vec{1, 1} : Vec{-1, -1};
    const Vec right = ori[j + 1] > 0 ? Vec{-1, 1} : Vec{1, -1};
    const Vec over = g > 0 ? left : right;
    const Vec under = g > 0 ? right : left;
    const int sign = over.x * under.y - over.y * under.x > 0 ? 1 : -1;
    const std::size_t tl = fresh(), tr = fresh();
    // Ends counterclockwise: bottom-left, bottom-right, top-right, top-left.
    const std::array<std::size_t, 4> ends{seg[j], seg[j + 1], tr, tl};
    // The under strand runs bottom-right to top-left when the left strand is
    // over, bottom-left to top-right otherwise.
    const bool under_up = g > 0 ? ori[j + 1] > 0 : ori[j] > 0;
    std::size_t first;
    if (g > 0) first = under_up ? 1 : 3;
    else first = under_up ? 0 : 2;
    Raw x{sign, {}};
    for (int s = 0; s < 4; ++s) x.slots[s] = ends[(first + s) % 4];
    raw.push_back(x);
    seg[j] = tl;
    seg[j + 1] = tr;
    std::swap(ori[j], ori[j + 1]);
  }
  for (std::size_t i = 0; i < m; i += 2) parent[find(seg[i + 1])] = find(seg[i]);
  PDCode pd;
  if (raw.empty()) {
    if (trace.components > 1)
      throw UnsupportedError("split plat diagrams have no PD code");
    return pd;
  }
  std::map<std::size_t, EdgeId> ids;
  for (const Raw& x : raw) {
    PDCrossing c;
    c.sign = x.sign;
    for (int s = 0; s < 4; ++s) {
      const std::size_t root = find(x.slots[s]);
      auto it = ids.find(root);
      if (it == ids.end()) it = ids.emplace(root, static_cast<EdgeId>(ids.size() + 1)).first;
      c.slots[s] = it->second;
    }
    pd.crossings.push_back(c);
  }
  // Every closed-up edge must meet a crossing, otherwise a component is split.
  for (std::size_t x = 0; x < parent.size(); ++x)
    if (!ids.count(find(x)))
      throw UnsupportedError("split plat diagrams have no PD code");
  validate_pd(pd);
  return pd;
}

namespace {

// Moves every arc of a crossingless tangle on `positions` punctures to the
// right end, passing over everything, and returns the braid that undoes the
// motion. `legs` must end up at positions 0..legs.size()-1 in order.
BraidWord normal_form(const std::vector<std::size_t>& legs,
                      std::vector<std::pair<std::size_t, std::size_t>> arcs,
                      std::size_t positions) {
  std::vector<std::size_t> line(positions);
  std::iota(line.begin(), line.end(), std::size_t{0});
  BraidWord word;
  std::size_t placed = 0;
  while (!arcs.empty()) {
    // An innermost arc has adjacent endpoints.
    std::size_t pick = arcs.size(), p = 0;
    for (std::size_t k = 0; k < arcs.size() && pick == arcs.size(); ++k) {
      const auto i = std::find(line.begin(), line.end(), arcs[k].first) - line.begin();
      const auto j = std::find(line.begin(), line.end(), arcs[k].second) - line.begin();
      if (std::abs(i - j) == 1) {
        pick = k;
        p = static_cast<std::size_t>(std::min(i, j));
      }
    }
    if (pick == arcs.size()) throw StructuralError("arcs are not nested");
    arcs.erase(arcs.begin() + static_cast<long>(pick));
    const std::size_t end = positions - placed - 2;
    for (; p < end; ++p) {
      word.push_back(static_cast<int>(p + 2));
      word.push_back(static_cast<int>(p + 1));
      const std::size_t moved = line[p + 2];
      line[p + 2] = line[p + 1];
      line[p + 1] = line[p];
      line[p] = moved;
    }
    placed += 2;
  }
  if (!std::equal(legs.begin(), legs.end(), line.begin()))
    throw StructuralError("legs did not end up on the left");
  return word;
}

struct SextetPattern {
  std::pair<std::size_t, std::size_t> legs;
  std::array<std::pair<std::size_t, std::size_t>, 2> arcs;
};

// How the six punctures replacing a local minimum are used by each tangle:
// which two carry the knot's strands and how the other four are capped.
const std::array<SextetPattern, 3> kSextets{{
    {{0, 1}, {{{2, 5}, {3, 4}}}},
    {{4, 5}, {{{0, 3}, {1, 2}}}},
    {{0, 5}, {{{1, 4}, {2, 3}}}},
}};

}  // namespace

TriplaneDiagram spun_triplane(const PlatPresentation& plat) {
  const PlatTrace trace = trace_plat(plat);
  if (trace.components != 1)
    throw UnsupportedError("spinning needs a knot, the plat closes to " +
                           std::to_string(trace.components) + " components");
  const std::size_t k = plat.bridges;
  TriplaneDiagram tp;
  tp.bridges = 3 * k - 2;
  const std::size_t m = 2 * tp.bridges;
  std::vector<std::size_t> first_legs;
  for (std::size_t t = 0; t < 3; ++t) {
    // The leftmost minimum keeps its two punctures; each other minimum j
    // becomes six punctures starting at 2 + 6 (j - 1).
    std::vector<std::size_t> legs{0, 1};
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t j = 1; j < k; ++j) {
      const std::size_t base = 2 + 6 * (j - 1);
      const SextetPattern& pat = kSextets[t];
      legs.push_back(base + pat.legs.first);
      legs.push_back(base + pat.legs.second);
      for (const auto& [x, y] : pat.arcs) arcs.push_back({base + x, base + y});
    }
    if (t == 0) first_legs = legs;
    TrivialTangle tangle;
    tangle.braid = normal_form(legs, arcs, m);
    tangle.braid.insert(tangle.braid.end(), plat.braid.begin(), plat.braid.end());
    tp.tangles.push_back(std::move(tangle));
  }
  // Legs inherit the knot's orientation; every other endpoint follows from
  // the strand matchings.
  std::vector<int> signs(m, 0);
  for (std::size_t i = 0; i < first_legs.size(); ++i)
    signs[first_legs[i]] = -trace.bottom_orientation[i];
  std::vector<std::vector<std::size_t>> matchings;
  for (const TrivialTangle& t : tp.tangles) matchings.push_back(strand_matching(t, tp.bridges));
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& match : matchings) {
      for (std::size_t x = 0; x < m; ++x) {
        if (signs[x] != 0 && signs[match[x]] == 0) {
          signs[match[x]] = -signs[x];
          changed = true;
        }
      }
    }
  }
  for (int s : signs)
    if (s == 0) throw StructuralError("spun triplane left an endpoint unoriented");
  tp.signs = signs;
  if (!validate_orientation(tp))
    throw StructuralError("spun triplane orientation is inconsistent");
  return tp;
}

void check_mvd(const MarkedVertexDiagram& mvd) {
  auto in_range = [&](RegionId r) {
    if (r >= mvd.region_count)
      throw DomainError("region id " + std::to_string(r) + " out of range (" +
                        std::to_string(mvd.region_count) + " regions)");
  };
  for (const RadCrossing& x : mvd.crossings) {
    if (x.sign != 1 && x.sign != -1)
      throw DomainError("crossing without orientation in marked vertex diagram");
    for (RegionId r : {x.south, x.west, x.east, x.north}) in_range(r);
  }
  for (const MarkedVertex& v : mvd.marked)
    for (RegionId r : {v.north, v.east, v.south, v.west}) in_range(r);
}

EquationSystem marked_vertex_to_system(const MarkedVertexDiagram& mvd) {
  check_mvd(mvd);
  EquationSystem sys = emit_equations(RAD{mvd.region_count, mvd.crossings});
  for (const MarkedVertex& v : mvd.marked) {
    sys.eq_vars.push_back({v.north, v.south});
    sys.eq_vars.push_back({v.east, v.west});
  }
  return sys;
}

RAD smooth(const MarkedVertexDiagram& mvd, const std::vector<Smoothing>& choices) {
  check_mvd(mvd);
  if (choices.size() != mvd.marked.size())
    throw DomainError("expected " + std::to_string(mvd.marked.size()) +
                      " smoothing choices, got " + std::to_string(choices.size()));
  std::vector<RegionId> parent(mvd.region_count);
  std::iota(parent.begin(), parent.end(), RegionId{0});
  auto find = [&](RegionId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const MarkedVertex& v = mvd.marked[i];
    if (choices[i] == Smoothing::A) parent[find(v.north)] = find(v.south);
    else parent[find(v.east)] = find(v.west);
  }
  std::vector<RegionId> compact(mvd.region_count, ~RegionId{0});
  RegionId next = 0;
  for (RegionId r = 0; r < mvd.region_count; ++r)
    if (compact[find(r)] == ~RegionId{0}) compact[find(r)] = next++;
  RAD out;
  out.region_count = next;
  for (RadCrossing x : mvd.crossings) {
    x.south = compact[find(x.south)];
    x.west = compact[find(x.west)];
    x.east = compact[find(x.east)];
    x.north = compact[find(x.north)];
    out.crossings.push_back(x);
  }
  return out;
}

MarkedVertexDiagram mark_crossings(const PDCode& pd,
                                   const std::vector<std::size_t>& marked) {
  const FaceTrace ft = trace_faces(pd);
  std::vector<bool> is_marked(pd.crossings.size(), false);
  for (std::size_t c : marked) {
    if (c >= pd.crossings.size())
      throw DomainError("crossing index " + std::to_string(c) + " out of range");
    is_marked[c] = true;
  }
  MarkedVertexDiagram mvd;
  mvd.region_count = ft.rad.region_count;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    const auto& k = ft.faces.corners[c];
    if (is_marked[c]) mvd.marked.push_back({k[1], k[0], k[3], k[2]});
    else mvd.crossings.push_back(ft.rad.crossings[c]);
  }
  return mvd;
}

}  // namespace ktq
