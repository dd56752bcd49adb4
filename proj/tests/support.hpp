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

// Shared fixtures for the test binaries.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ktq/catalog.hpp"
#include "ktq/colorsys.hpp"
#include "ktq/diagrams.hpp"
#include "ktq/io.hpp"
#include "ktq/surfaces.hpp"
#include "ktq/tribracket.hpp"

namespace ktq::testing {

inline const Catalog& catalog() {
  static const Catalog cat = load_catalog();
  return cat;
}

inline Tribracket bundled_tribracket(const std::string& file) {
  return tribracket_from_json(load_data_file("tribrackets/" + file));
}

inline PDCode bundled_pd(const std::string& name) {
  return pd_from_json(load_data_file("pd/" + name + ".json"));
}

inline PlatPresentation bundled_plat(const std::string& name) {
  return plat_from_json(load_data_file("plats/" + name + ".json"));
}

inline TriplaneDiagram bundled_triplane(const std::string& name) {
  return triplane_from_json(load_data_file("triplanes/" + name + ".json"));
}

inline MarkedVertexDiagram bundled_mvd(const std::string& name) {
  return mvd_from_json(load_data_file("mvd/" + name + ".json"));
}

inline std::vector<Tribracket> enumerated(std::size_t n) {
  std::vector<Tribracket> out;
  enumerate_tribrackets(n, 100'000'000, [&](const Tribracket& t) {
    out.push_back(t);
    out.back().set_name("E" + std::to_string(n) + "." + std::to_string(out.size()));
    return true;
  });
  return out;
}

// Every valid tribracket of size at most 4, in enumeration order.
inline const std::vector<Tribracket>& valid_small_tribrackets() {
  static const std::vector<Tribracket> all = [] {
    std::vector<Tribracket> v;
    for (std::size_t n = 1; n <= 4; ++n)
      for (Tribracket& t : enumerated(n)) v.push_back(std::move(t));
    return v;
  }();
  return all;
}

// A sample of the above for the heavier property tests: all of sizes 1-3
// plus X4 and the Dehn tribrackets of the groups of order 4.
inline const std::vector<Tribracket>& sample_small_tribrackets() {
  static const std::vector<Tribracket> sample = [] {
    std::vector<Tribracket> v;
    for (std::size_t n = 1; n <= 3; ++n)
      for (Tribracket& t : enumerated(n)) v.push_back(std::move(t));
    v.push_back(bundled_tribracket("x4.json"));
    v.push_back(dehn_tribracket(cyclic_group(4)));
    v.push_back(dehn_tribracket(direct_product(cyclic_group(2), cyclic_group(2))));
    return v;
  }();
  return sample;
}

inline mpz_class count(const EquationSystem& sys, const Tribracket& t) {
  return count_colorings(sys, t).count;
}

inline mpz_class power(std::size_t base, std::size_t exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

}  // namespace ktq::testing
