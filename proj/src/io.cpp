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

#include "ktq/io.hpp"

#include <fstream>
#include <map>

#include "ktq/error.hpp"

namespace ktq {

namespace {

// Runs `f`, turning library-level JSON errors into InputError.
template <typename F>
auto parsing(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed " + what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(what + " is missing field \"" + key + "\"");
  return j.at(key);
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << doc.dump(2) << "\n";
}

Tribracket tribracket_from_json(const Json& j) {
  return parsing("tribracket", [&] {
    const std::size_t n = field(j, "size", "tribracket").get<std::size_t>();
    const bool one = j.value("one_indexed", false);
    const Json& t = field(j, "tensor", "tribracket");
    if (!t.is_array() || t.size() != n)
      throw InputError("tribracket tensor must have " + std::to_string(n) + " slices");
    std::vector<Element> flat;
    for (const Json& slice : t) {
      if (!slice.is_array() || slice.size() != n)
        throw InputError("tribracket slice must have " + std::to_string(n) + " rows");
      for (const Json& row : slice) {
        if (!row.is_array() || row.size() != n)
          throw InputError("tribracket row must have " + std::to_string(n) + " entries");
        for (const Json& v : row) {
          long x = v.get<long>() - (one ? 1 : 0);
          if (x < 0 || static_cast<std::size_t>(x) >= n)
            throw InputError("tribracket entry " + v.dump() + " out of range");
          flat.push_back(static_cast<Element>(x));
        }
      }
    }
    return Tribracket(n, std::move(flat), j.value("name", std::string()));
  });
}

Json tribracket_to_json(const Tribracket& t) {
  const std::size_t n = t.size();
  Json tensor = Json::array();
  for (Element a = 0; a < n; ++a) {
    Json slice = Json::array();
    for (Element b = 0; b < n; ++b) {
      Json row = Json::array();
      for (Element c = 0; c < n; ++c) row.push_back(t(a, b, c));
      slice.push_back(row);
    }
    tensor.push_back(slice);
  }
  Json j;
  if (!t.name().empty()) j["name"] = t.name();
  j["size"] = n;
  j["one_indexed"] = false;
  j["tensor"] = tensor;
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  return parsing("group", [&] {
    const std::size_t n = field(j, "size", "group").get<std::size_t>();
    const Json& rows = field(j, "cayley", "group");
    if (!rows.is_array() || rows.size() != n)
      throw InputError("cayley table must have " + std::to_string(n) + " rows");
    std::vector<Element> flat;
    for (const Json& row : rows) {
      if (!row.is_array() || row.size() != n)
        throw InputError("cayley row must have " + std::to_string(n) + " entries");
      for (const Json& v : row) {
        const long x = v.get<long>();
        if (x < 0 || static_cast<std::size_t>(x) >= n)
          throw InputError("cayley entry " + v.dump() + " out of range");
        flat.push_back(static_cast<Element>(x));
      }
    }
    const long id = field(j, "identity", "group").get<long>();
    if (id < 0 || static_cast<std::size_t>(id) >= n) throw InputError("identity out of range");
    return FiniteGroup(n, std::move(flat), static_cast<Element>(id),
                       j.value("name", std::string()));
  });
}

EquationSystem system_from_json(const Json& j) {
  return parsing("equation system", [&] {
    EquationSystem sys;
    std::map<std::string, VarId> ids;
    for (const Json& v : field(j, "variables", "equation system")) {
      const std::string name = v.get<std::string>();
      if (ids.count(name)) throw InputError("duplicate variable \"" + name + "\"");
      ids[name] = sys.add_var(name);
    }
    auto id = [&](const Json& v) {
      const std::string name = v.get<std::string>();
      auto it = ids.find(name);
      if (it == ids.end()) throw InputError("undeclared variable \"" + name + "\"");
      return it->second;
    };
    for (const Json& e : field(j, "equations", "equation system")) {
      const std::string op = field(e, "op", "equation").get<std::string>();
      const Json& args = field(e, "args", "equation");
      if (op == "tri") {
        if (args.size() != 4) throw InputError("\"tri\" takes four arguments");
        sys.tri_eqs.push_back({id(args[0]), id(args[1]), id(args[2]), id(args[3])});
      } else if (op == "eq") {
        if (args.size() != 2) throw InputError("\"eq\" takes two arguments");
        sys.eq_vars.push_back({id(args[0]), id(args[1])});
      } else {
        throw InputError("unknown equation op \"" + op + "\"");
      }
    }
    return sys;
  });
}

Json system_to_json(const EquationSystem& sys) {
  Json vars = Json::array();
  for (VarId v = 0; v < sys.var_count; ++v) vars.push_back(sys.name_of(v));
  Json eqs = Json::array();
  for (const TriEq& e : sys.tri_eqs)
    eqs.push_back({{"op", "tri"},
                   {"args", {sys.name_of(e.p), sys.name_of(e.q), sys.name_of(e.r),
                             sys.name_of(e.s)}}});
  for (const EqVar& e : sys.eq_vars)
    eqs.push_back({{"op", "eq"}, {"args", {sys.name_of(e.i), sys.name_of(e.j)}}});
  return {{"variables", vars}, {"equations", eqs}};
}

PDCode pd_from_json(const Json& j) {
  return parsing("PD code", [&] {
    PDCode pd;
    for (const Json& x : field(j, "crossings", "PD code")) {
      PDCrossing c;
      c.sign = field(x, "sign", "crossing").get<int>();
      const Json& slots = field(x, "slots", "crossing");
      if (!slots.is_array() || slots.size() != 4)
        throw InputError("a crossing has exactly four slots");
      for (int s = 0; s < 4; ++s) c.slots[s] = slots[s].get<EdgeId>();
      pd.crossings.push_back(c);
    }
    return pd;
  });
}

Json pd_to_json(const PDCode& pd) {
  Json xs = Json::array();
  for (const PDCrossing& c : pd.crossings)
    xs.push_back({{"sign", c.sign}, {"slots", c.slots}});
  return {{"crossings", xs}};
}

TriplaneDiagram triplane_from_json(const Json& j) {
  return parsing("triplane", [&] {
    TriplaneDiagram tp;
    tp.bridges = field(j, "bridges", "triplane").get<std::size_t>();
    tp.signs = field(j, "signs", "triplane").get<std::vector<int>>();
    for (const Json& t : field(j, "tangles", "triplane"))
      tp.tangles.push_back({field(t, "braid", "tangle").get<BraidWord>()});
    check_diagram(tp);
    return tp;
  });
}

Json triplane_to_json(const TriplaneDiagram& tp) {
  Json tangles = Json::array();
  for (const TrivialTangle& t : tp.tangles) tangles.push_back({{"braid", t.braid}});
  return {{"bridges", tp.bridges}, {"signs", tp.signs}, {"tangles", tangles}};
}

PlatPresentation plat_from_json(const Json& j) {
  return parsing("plat", [&] {
    PlatPresentation p;
    p.bridges = field(j, "bridges", "plat").get<std::size_t>();
    p.braid = field(j, "braid", "plat").get<BraidWord>();
    if (p.bridges == 0) throw InputError("a plat needs at least one bridge");
    check_braid(p.braid, 2 * p.bridges);
    return p;
  });
}

MarkedVertexDiagram mvd_from_json(const Json& j) {
  return parsing("marked vertex diagram", [&] {
    MarkedVertexDiagram mvd;
    mvd.region_count = field(j, "regions", "marked vertex diagram").get<std::size_t>();
    if (j.contains("crossings")) {
      for (const Json& x : j.at("crossings")) {
        RadCrossing c;
        c.sign = field(x, "sign", "crossing").get<int>();
        c.south = field(x, "south", "crossing").get<RegionId>();
        c.west = field(x, "west", "crossing").get<RegionId>();
        c.east = field(x, "east", "crossing").get<RegionId>();
        c.north = field(x, "north", "crossing").get<RegionId>();
        mvd.crossings.push_back(c);
      }
    }
    if (j.contains("marked")) {
      for (const Json& v : j.at("marked")) {
        const auto nesw = field(v, "nesw", "marked vertex").get<std::vector<RegionId>>();
        if (nesw.size() != 4) throw InputError("\"nesw\" needs four region ids");
        mvd.marked.push_back({nesw[0], nesw[1], nesw[2], nesw[3]});
      }
    }
    try {
      check_mvd(mvd);
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }
    return mvd;
  });
}

Json validation_to_json(const ValidationReport& r) {
  static const char* kAxes[] = {"(.,b,c)", "(a,.,c)", "(a,b,.)"};
  Json a1 = Json::array();
  for (const Axiom1Failure& f : r.axiom1_failures)
    a1.push_back({{"line", kAxes[f.axis]}, {"fixed", f.fixed}, {"duplicated", f.duplicated}});
  Json a2 = Json::array();
  for (const Axiom2Failure& f : r.axiom2_failures)
    a2.push_back({{"abcd", f.abcd}, {"values", f.values}});
  return {{"valid", r.valid},
          {"axiom1_failure_count", r.axiom1_failures.size()},
          {"axiom2_failure_count", r.axiom2_failures.size()},
          {"axiom1_failures", a1},
          {"axiom2_failures", a2}};
}

Json stats_to_json(const SolveStats& s) {
  return {{"nodes_visited", s.nodes_visited},
          {"propagations", s.propagations},
          {"branch_depth_max", s.branch_depth_max}};
}

Json count_to_json(const mpz_class& c) {
  if (c >= 0 && mpz_sizeinbase(c.get_mpz_t(), 2) <= 63)
    return static_cast<std::int64_t>(std::stoll(c.get_str()));
  return c.get_str();
}

Json bounds_to_json(const BoundsReport& r) {
  return {{"count", count_to_json(r.count)},
          {"tribracket_size", r.x_size},
          {"patches", r.patches},
          {"bridges", r.bridges},
          {"euler_characteristic", r.euler},
          {"inequality_i", {{"slack", r.slack_i}, {"satisfied", r.satisfied_i}}},
          {"inequality_ii", {{"slack", r.slack_ii}, {"satisfied", r.satisfied_ii}}},
          {"satisfied", r.satisfied}};
}

Json rad_to_json(const RAD& rad) {
  Json xs = Json::array();
  for (const RadCrossing& c : rad.crossings)
    xs.push_back({{"sign", c.sign},
                  {"south", c.south},
                  {"west", c.west},
                  {"east", c.east},
                  {"north", c.north}});
  return {{"regions", rad.region_count}, {"crossings", xs}};
}

}  // namespace ktq
