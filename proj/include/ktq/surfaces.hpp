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

// Surface-link presentations compiled to region-equation systems: plats of
// classical knots, triplane and multiplane diagrams built from trivial
// tangles in braid-plus-caps form, the spun-knot triplane, and marked vertex
// diagrams.
//
// Positions and boundary endpoints are 0-based internally; braid generators
// are written 1-based and signed: +j crosses positions j-1 and j with the
// left strand over, -j with the right strand over.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "ktq/colorsys.hpp"
#include "ktq/diagrams.hpp"

namespace ktq {

using BraidWord = std::vector<int>;

// Throws DomainError unless every generator lies in [1, positions-1].
void check_braid(const BraidWord& word, std::size_t positions);

// A trivial tangle: the braid read from the boundary inward, closed by caps
// joining positions (0,1), (2,3), ... at the far end.
struct TrivialTangle {
  BraidWord braid;
};

// Endpoint pairing of a trivial tangle on 2b boundary points:
// result[x] is the endpoint joined to x by a strand.
std::vector<std::size_t> strand_matching(const TrivialTangle& t,
                                         std::size_t bridges);

struct TriplaneDiagram {
  std::size_t bridges = 0;
  // +1 marks an endpoint where strands enter the boundary (a sink), -1 one
  // where they leave it (a source).
  std::vector<int> signs;
  std::vector<TrivialTangle> tangles;  // 3 for a triplane, n >= 3 otherwise
};

// Throws DomainError/StructuralError for malformed diagrams.
void check_diagram(const TriplaneDiagram& tp);

// True iff every strand of every tangle joins a +1 endpoint to a -1 endpoint.
bool validate_orientation(const TriplaneDiagram& tp);

// Throws StructuralError if the orientation is invalid.
EquationSystem triplane_to_system(const TriplaneDiagram& tp);

// c_i = number of components of T_i joined with the mirror of T_{i+1}.
std::vector<std::size_t> patch_numbers(const TriplaneDiagram& tp);

// (2 - n) b + sum c_i.
long euler_characteristic(const TriplaneDiagram& tp);

struct BoundsReport {
  mpz_class count;
  std::size_t x_size = 0;
  std::vector<std::size_t> patches;
  std::size_t bridges = 0;
  long euler = 0;
  // Smallest e with |X|^e >= count (0 for count 0).
  long log_ceil = 0;
  // Smallest e with |X|^e >= count^n.
  long n_log_ceil = 0;
  // Inequality (i):  -1 + log|X| Col <= min c_i, i.e. Col <= |X|^(min c + 1).
  // Slack in whole powers of |X|: (min c + 1) - log_ceil.
  long slack_i = 0;
  // Inequality (ii): -chi - n + n log|X| Col <= (n - 2) b, i.e.
  // Col^n <= |X|^((n-2) b + n + chi). Slack: exponent minus n_log_ceil.
  long slack_ii = 0;
  bool satisfied_i = false;
  bool satisfied_ii = false;
  bool satisfied = false;
};

// Evaluates both inequalities by exact integer power comparison.
// Throws DomainError if x_size < 2.
BoundsReport bounds_report(const TriplaneDiagram& tp, const mpz_class& count,
                           std::size_t x_size);

// Adds sigma_j^sign at the boundary end of every tangle and transposes the
// endpoint signs j-1 and j. Throws DomainError if j is not in [1, 2b-1].
TriplaneDiagram mutual_braid_transposition(const TriplaneDiagram& tp, int j,
                                           int sign);

// A knot or link as the plat closure of a braid on 2k strands: cups join
// positions (0,1), (2,3), ... at the bottom and caps join them at the top.
struct PlatPresentation {
  std::size_t bridges = 0;
  BraidWord braid;
};

struct PlatTrace {
  std::size_t components = 0;
  // Direction of each strand at the bottom: +1 up, -1 down. Each component is
  // oriented upward from its leftmost bottom position.
  std::vector<int> bottom_orientation;
};

PlatTrace trace_plat(const PlatPresentation& plat);

// Region equations of the plat diagram itself (the classical count).
EquationSystem plat_to_system(const PlatPresentation& plat);

// The same diagram as a PD code. Throws UnsupportedError if a component has
// no crossings while others do (a split diagram).
PDCode plat_to_pd(const PlatPresentation& plat);

// Triplane diagram of the spun knot. Bridge number 3k - 2. Throws
// UnsupportedError for plats of links.
TriplaneDiagram spun_triplane(const PlatPresentation& plat);

struct MarkedVertex {
  RegionId north = 0, east = 0, south = 0, west = 0;
};

struct MarkedVertexDiagram {
  std::size_t region_count = 0;
  std::vector<RadCrossing> crossings;
  std::vector<MarkedVertex> marked;
};

void check_mvd(const MarkedVertexDiagram& mvd);

// Classical crossings emit their TriEq; a marked vertex identifies its north
// and south regions and its east and west regions.
EquationSystem marked_vertex_to_system(const MarkedVertexDiagram& mvd);

// A merges the north/south regions of a vertex, B the east/west regions.
enum class Smoothing { A, B };

// Region ids of the result are compacted in order of first occurrence.
RAD smooth(const MarkedVertexDiagram& mvd, const std::vector<Smoothing>& choices);

// Turns the listed crossings of a PD code into marked vertices.
MarkedVertexDiagram mark_crossings(const PDCode& pd,
                                   const std::vector<std::size_t>& marked);

}  // namespace ktq
