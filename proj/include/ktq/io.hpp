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

// JSON reading and writing for every file format of the library.
// Parse failures are reported as InputError with the offending field.

#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>

#include "ktq/colorsys.hpp"
#include "ktq/diagrams.hpp"
#include "ktq/surfaces.hpp"
#include "ktq/tribracket.hpp"

namespace ktq {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

// {"size": n, "one_indexed": bool, "tensor": [[[...]]]}; "name" optional.
Tribracket tribracket_from_json(const Json& j);
Json tribracket_to_json(const Tribracket& t);

// {"size": n, "cayley": [[...]], "identity": i}; "name" optional.
FiniteGroup group_from_json(const Json& j);

// {"variables": [names], "equations": [{"op": "tri"|"eq", "args": [...]}]}.
EquationSystem system_from_json(const Json& j);
Json system_to_json(const EquationSystem& sys);

// {"crossings": [{"sign": +-1, "slots": [e0, e1, e2, e3]}, ...]}.
PDCode pd_from_json(const Json& j);
Json pd_to_json(const PDCode& pd);

// {"bridges": b, "signs": [...], "tangles": [{"braid": [...]}, ...]}.
TriplaneDiagram triplane_from_json(const Json& j);
Json triplane_to_json(const TriplaneDiagram& tp);

// {"bridges": k, "braid": [...]}.
PlatPresentation plat_from_json(const Json& j);

// {"regions": r, "crossings": [{"sign", "south", "west", "east", "north"}],
//  "marked": [{"nesw": [n, e, s, w]}]}.
MarkedVertexDiagram mvd_from_json(const Json& j);

Json validation_to_json(const ValidationReport& r);
Json stats_to_json(const SolveStats& s);
Json bounds_to_json(const BoundsReport& r);
Json rad_to_json(const RAD& rad);

// Big integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise.
Json count_to_json(const mpz_class& c);

}  // namespace ktq
