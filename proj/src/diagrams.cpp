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

#include "ktq/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ktq/error.hpp"

namespace ktq {

namespace {

// Slot of the incoming over-strand end; it leaves through the opposite slot.
int over_in(int sign) { return sign > 0 ? 3 : 1; }

bool is_incoming(const PDCrossing& x, int slot) {
  return slot == 0 || slot == over_in(x.sign);
}

struct End {
  std::size_t crossing;
  int slot;
};

// Both ends of every edge, indexed by edge id.
std::map<EdgeId, std::vector<End>> edge_ends(const PDCode& pd) {
  std::map<EdgeId, std::vector<End>> ends;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c)
    for (int s = 0; s < 4; ++s) ends[pd.crossings[c].slots[s]].push_back({c, s});
  return ends;
}

}  // namespace

void validate_pd(const PDCode& pd) {
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    const int sign = pd.crossings[c].sign;
    if (sign != 1 && sign != -1)
      throw StructuralError("crossing " + std::to_string(c) +
                            " has sign other than +1/-1");
  }
  for (const auto& [edge, ends] : edge_ends(pd)) {
    if (ends.size() != 2)
      throw StructuralError("edge " + std::to_string(edge) + " occurs " +
                            std::to_string(ends.size()) +
                            " times, expected twice");
    const bool in0 = is_incoming(pd.crossings[ends[0].crossing], ends[0].slot);
    const bool in1 = is_incoming(pd.crossings[ends[1].crossing], ends[1].slot);
    if (in0 == in1)
      throw StructuralError("edge " + std::to_string(edge) +
                            " is not oriented consistently");
  }
}

FaceTrace trace_faces(const PDCode& pd) {
  FaceTrace out;
  const std::size_t v = pd.crossings.size();
  if (v == 0) {
    out.rad.region_count = 2;
    return out;
  }
  validate_pd(pd);
  const auto ends = edge_ends(pd);

  // Connectivity over crossings.
  std::vector<std::size_t> parent(v);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [edge, e] : ends) parent[find(e[0].crossing)] = find(e[1].crossing);
  for (std::size_t c = 1; c < v; ++c)
    if (find(c) != find(0))
      throw UnsupportedError("disconnected diagrams are not supported");

  auto partner = [&](std::size_t c, int s) {
    const auto& e = ends.at(pd.crossings[c].slots[s]);
    // An edge may join two slots of the same crossing (a kink).
    return (e[0].crossing == c && e[0].slot == s) ? e[1] : e[0];
  };

  constexpr RegionId kNone = ~RegionId{0};
  out.faces.corners.assign(v, {kNone, kNone, kNone, kNone});
  RegionId regions = 0;
  for (std::size_t c0 = 0; c0 < v; ++c0) {
    for (int i0 = 0; i0 < 4; ++i0) {
      if (out.faces.corners[c0][i0] != kNone) continue;
      std::size_t c = c0;
      int i = i0;
      // Walk the face: leave along the slot after the corner, arrive at the
      // partner slot, whose following corner continues the same face.
      while (true) {
        if (out.faces.corners[c][i] != kNone) {
          if (c == c0 && i == i0 && out.faces.corners[c][i] == regions) break;
          throw StructuralError("face tracing revisited a corner; the code is "
                                "not planar-consistent");
        }
        out.faces.corners[c][i] = regions;
        const End next = partner(c, (i + 1) % 4);
        c = next.crossing;
        i = next.slot;
      }
      ++regions;
    }
  }
  if (regions != v + 2)
    throw StructuralError("face tracing found " + std::to_string(regions) +
                          " regions, a connected planar diagram with " +
                          std::to_string(v) + " crossings has " +
                          std::to_string(v + 2));
  out.rad.region_count = regions;
  for (std::size_t c = 0; c < v; ++c) {
    const auto& k = out.faces.corners[c];
    RadCrossing x;
    x.sign = pd.crossings[c].sign;
    if (x.sign > 0) {
      // Strands leave through slots 2 and 1.
      x.south = k[3];
      x.west = k[2];
      x.east = k[0];
      x.north = k[1];
    } else {
      // Strands leave through slots 2 and 3.
      x.south = k[0];
      x.west = k[3];
      x.east = k[1];
      x.north = k[2];
    }
    out.rad.crossings.push_back(x);
  }
  return out;
}

EquationSystem emit_equations(const RAD& rad) {
  EquationSystem sys;
  for (std::size_t r = 0; r < rad.region_count; ++r)
    sys.add_var("r" + std::to_string(r));
  for (std::size_t c = 0; c < rad.crossings.size(); ++c) {
    const RadCrossing& x = rad.crossings[c];
    if (x.sign != 1 && x.sign != -1)
      throw StructuralError("crossing " + std::to_string(c) +
                            " has no orientation");
    if (x.sign > 0) sys.tri_eqs.push_back({x.west, x.south, x.north, x.east});
    else sys.tri_eqs.push_back({x.west, x.north, x.south, x.east});
  }
  sys.check();
  return sys;
}

RAD mirror_reverse(const RAD& rad) {
  RAD out = rad;
  for (RadCrossing& x : out.crossings) {
    std::swap(x.south, x.north);
    x.sign = -x.sign;
  }
  return out;
}

PDCode mirror_reverse(const PDCode& pd) {
  PDCode out;
  for (const PDCrossing& x : pd.crossings) {
    PDCrossing y;
    y.sign = -x.sign;
    y.slots = {x.slots[2], x.slots[1], x.slots[0], x.slots[3]};
    out.crossings.push_back(y);
  }
  return out;
}

PDCode add_r1_kink(const PDCode& pd, EdgeId edge, KinkSide side, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("kink sign must be +1 or -1");
  PDCode out = pd;
  EdgeId max_id = 1;
  for (const PDCrossing& x : pd.crossings)
    for (EdgeId e : x.slots) max_id = std::max(max_id, e);
  const EdgeId tail = edge;
  EdgeId head = edge;
  const EdgeId loop = max_id + 1;
  if (pd.crossings.empty()) {
    if (edge != 1)
      throw DomainError("the crossingless diagram only has edge 1");
  } else {
    validate_pd(pd);
    // Redirect the end where `edge` enters a crossing to a fresh edge.
    bool found = false;
    head = max_id + 2;
    for (PDCrossing& x : out.crossings) {
      for (int s = 0; s < 4 && !found; ++s) {
        if (x.slots[s] == edge && is_incoming(x, s)) {
          x.slots[s] = head;
          found = true;
        }
      }
    }
    if (!found) throw DomainError("unknown edge " + std::to_string(edge));
  }
  PDCrossing k;
  k.sign = sign;
  if (side == KinkSide::Right && sign < 0) k.slots = {tail, loop, loop, head};
  else if (side == KinkSide::Left && sign > 0) k.slots = {tail, head, loop, loop};
  else if (side == KinkSide::Left) k.slots = {loop, tail, head, loop};
  else k.slots = {loop, loop, head, tail};
  out.crossings.push_back(k);
  return out;
}

}  // namespace ktq
