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

// Classical diagrams: planar-diagram codes, face tracing, and emission of
// region equations.
//
// Crossing convention. Rotate a crossing so both strands leave towards the
// top. Let S be the region between the incoming ends, N the region between
// the outgoing ends, W and E the regions to the left and right. A positive
// crossing imposes [W,S,N] = E and a negative one [W,N,S] = E. This is the
// labeling under which the counts are invariant under all oriented
// Reidemeister moves (checked against every valid tribracket of size 3) and
// under which mirror image with reversed orientation gives identical
// equations.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ktq/colorsys.hpp"

namespace ktq {

using EdgeId = std::int64_t;
using RegionId = std::uint32_t;

struct PDCrossing {
  int sign = 1;  // +1 or -1
  // Half-edges counterclockwise, starting at the incoming under-strand.
  std::array<EdgeId, 4> slots{};
};

struct PDCode {
  std::vector<PDCrossing> crossings;
};

// A crossing of a region-annotated diagram, in its canonical frame.
struct RadCrossing {
  int sign = 1;  // +1, -1; 0 marks a crossing without orientation data
  RegionId south = 0, west = 0, east = 0, north = 0;
  friend bool operator==(const RadCrossing&, const RadCrossing&) = default;
};

struct RegionAnnotatedDiagram {
  std::size_t region_count = 0;
  std::vector<RadCrossing> crossings;
};
using RAD = RegionAnnotatedDiagram;

// corners[c][i] is the region at corner i of crossing c, where corner i lies
// counterclockwise between slot i and slot i+1.
struct FaceMap {
  std::vector<std::array<RegionId, 4>> corners;
};

struct FaceTrace {
  RAD rad;
  FaceMap faces;
};

// Checks that every edge occurs exactly twice, once entering and once
// leaving a crossing. Throws StructuralError otherwise.
void validate_pd(const PDCode& pd);

// Recovers the complementary regions. Throws StructuralError if the faces do
// not close up into a planar diagram and UnsupportedError if the diagram is
// disconnected. The crossingless diagram has two regions.
FaceTrace trace_faces(const PDCode& pd);

// One TriEq per crossing; variables are region ids.
EquationSystem emit_equations(const RAD& rad);

// Reflects the diagram in the plane and reverses every strand.
RAD mirror_reverse(const RAD& rad);
PDCode mirror_reverse(const PDCode& pd);

enum class KinkSide { Left, Right };

// Inserts a Reidemeister-I kink on `edge`. For the crossingless diagram the
// only edge is 1. Throws DomainError for an unknown edge or bad sign.
PDCode add_r1_kink(const PDCode& pd, EdgeId edge, KinkSide side, int sign);

}  // namespace ktq
