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

#include "ktq/catalog.hpp"

#include <iomanip>
#include <sstream>

#include "ktq/error.hpp"

#ifndef KTQ_DATA_DIR
#define KTQ_DATA_DIR "data"
#endif

namespace ktq {

const CatalogEntry& Catalog::entry(const std::string& name) const {
  for (const CatalogEntry& e : entries)
    if (e.name == name) return e;
  throw InputError("no catalog entry named \"" + name + "\"");
}

const Tribracket& Catalog::tribracket(const std::string& name) const {
  for (const Tribracket& t : tribrackets)
    if (t.name() == name) return t;
  throw InputError("no bundled tribracket named \"" + name + "\"");
}

std::filesystem::path default_data_dir() { return KTQ_DATA_DIR; }

Json load_data_file(const std::string& relative, const std::filesystem::path& dir) {
  return read_json_file(dir / relative);
}

Catalog load_catalog(const std::filesystem::path& dir) {
  const Json index = read_json_file(dir / "catalog.json");
  Catalog cat;
  auto list = [&](const char* key) {
    if (!index.contains(key) || !index.at(key).is_array())
      throw InputError("catalog index lacks \"" + std::string(key) + "\"");
    return index.at(key);
  };
  for (const Json& item : list("tribrackets")) {
    const std::string file = item.get<std::string>();
    try {
      Tribracket t = tribracket_from_json(read_json_file(dir / file));
      if (t.name().empty()) throw InputError("tribracket has no name");
      cat.tribrackets.push_back(std::move(t));
    } catch (const Error& e) {
      throw InputError("catalog tribracket " + file + ": " + e.what());
    }
  }
  for (const Json& item : list("groups")) {
    const std::string file = item.get<std::string>();
    try {
      cat.tribrackets.push_back(dehn_tribracket(group_from_json(read_json_file(dir / file))));
    } catch (const Error& e) {
      throw InputError("catalog group " + file + ": " + e.what());
    }
  }
  for (const Json& item : list("systems")) {
    const std::string file = item.get<std::string>();
    try {
      const Json j = read_json_file(dir / file);
      CatalogEntry e;
      e.name = j.at("name").get<std::string>();
      e.system = system_from_json(j);
      e.system.check();
      e.components = j.value("components", std::size_t{1});
      e.reverse_of = j.value("reverse_of", std::string());
      e.provenance = j.value("provenance", std::string());
      if (j.contains("expected"))
        for (const auto& [key, value] : j.at("expected").items())
          e.expected[key] = mpz_class(value.dump());
      cat.entries.push_back(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw InputError("catalog entry " + file + ": " + ex.what());
    } catch (const Error& ex) {
      throw InputError("catalog entry " + file + ": " + ex.what());
    }
  }
  return cat;
}

TableReport run_table(const Tribracket& t, const Catalog& catalog) {
  TableReport report;
  report.tribracket = t.name();
  const std::optional<std::size_t> abelian = abelian_dehn_order(t);
  for (const CatalogEntry& e : catalog.entries) {
    TableRow row;
    row.name = e.name;
    row.count = count_colorings(e.system, t).count;
    row.reversed_count = count_colorings(reverse_orientation(e.system), t).count;
    auto it = t.name().empty() ? e.expected.end() : e.expected.find(t.name());
    if (it != e.expected.end()) {
      row.expected = it->second;
    } else if (abelian) {
      mpz_class x;
      mpz_ui_pow_ui(x.get_mpz_t(), *abelian, e.components + 1);
      row.expected = x;
    }
    if (row.expected) {
      ++report.checked;
      row.matches = row.count == *row.expected;
      if (row.matches) ++report.matched;
    }
    if (!e.reverse_of.empty()) {
      const EquationSystem fwd = reverse_orientation(catalog.entry(e.reverse_of).system);
      row.reverse_consistent = same_constraints(fwd, e.system) || isomorphic(fwd, e.system);
      if (!*row.reverse_consistent) row.matches = false;
    }
    if (!row.matches) report.all_match = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

Json table_to_json(const TableReport& r) {
  Json rows = Json::array();
  for (const TableRow& row : r.rows) {
    Json j{{"name", row.name},
           {"count", count_to_json(row.count)},
           {"reversed_count", count_to_json(row.reversed_count)}};
    j["expected"] = row.expected ? count_to_json(*row.expected) : Json(nullptr);
    j["matches"] = row.matches;
    if (row.reverse_consistent) j["reverse_consistent"] = *row.reverse_consistent;
    rows.push_back(j);
  }
  return {{"tribracket", r.tribracket},
          {"status", r.all_match ? "ok" : "mismatch"},
          {"checked", r.checked},
          {"matched", r.matched},
          {"rows", rows}};
}

std::string table_to_text(const TableReport& r) {
  std::ostringstream out;
  out << "tribracket " << (r.tribracket.empty() ? "(unnamed)" : r.tribracket) << "\n";
  out << std::left << std::setw(14) << "entry" << std::right << std::setw(10) << "count"
      << std::setw(10) << "reversed" << std::setw(10) << "expected" << "  status\n";
  for (const TableRow& row : r.rows) {
    out << std::left << std::setw(14) << row.name << std::right << std::setw(10)
        << row.count.get_str() << std::setw(10) << row.reversed_count.get_str()
        << std::setw(10) << (row.expected ? row.expected->get_str() : "-") << "  "
        << (row.matches ? "ok" : "MISMATCH") << "\n";
  }
  out << r.matched << "/" << r.checked << " expectations matched\n";
  return out.str();
}

}  // namespace ktq
