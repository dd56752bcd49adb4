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

// Bundled golden data (tribrackets, Yoshikawa-table systems, plats, PD codes,
// triplanes, marked vertex diagrams) and the table reproduction runner.

#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktq/colorsys.hpp"
#include "ktq/io.hpp"
#include "ktq/tribracket.hpp"

namespace ktq {

struct CatalogEntry {
  std::string name;  // e.g. "9_1", "-10_3"
  EquationSystem system;
  // Number of components of the surface-link.
  std::size_t components = 1;
  // For a stored reversed row, the name of the forward row.
  std::string reverse_of;
  // Expected counts keyed by tribracket name.
  std::map<std::string, mpz_class> expected;
  std::string provenance;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<Tribracket> tribrackets;

  const CatalogEntry& entry(const std::string& name) const;
  const Tribracket& tribracket(const std::string& name) const;
};

// Directory holding the bundled data files.
std::filesystem::path default_data_dir();

// Reads <dir>/catalog.json and every file it lists. Throws InputError naming
// the entry whose file is missing or corrupt.
Catalog load_catalog(const std::filesystem::path& dir = default_data_dir());

// Loads a data file relative to the data directory.
Json load_data_file(const std::string& relative,
                    const std::filesystem::path& dir = default_data_dir());

struct TableRow {
  std::string name;
  mpz_class count;
  mpz_class reversed_count;
  std::optional<mpz_class> expected;
  bool matches = true;
  // For stored reversed rows: whether the stored system equals
  // reverse_orientation of its forward row (identity map, else up to
  // renaming).
  std::optional<bool> reverse_consistent;
};

struct TableReport {
  std::string tribracket;
  std::vector<TableRow> rows;
  bool all_match = true;
  std::size_t matched = 0;
  std::size_t checked = 0;
};

// Counts every entry forward and reversed. Expectations: the entry's stored
// count for this tribracket name when present; otherwise |A|^(components+1)
// when the table is the Dehn tribracket of an abelian group A (which covers
// size 1).
TableReport run_table(const Tribracket& t, const Catalog& catalog);

Json table_to_json(const TableReport& r);
std::string table_to_text(const TableReport& r);

}  // namespace ktq
