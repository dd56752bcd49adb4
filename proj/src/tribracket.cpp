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

#include "ktq/tribracket.hpp"

#include <algorithm>
#include <numeric>

#include "ktq/error.hpp"

namespace ktq {

namespace {

std::size_t index3(std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
  return (a * n + b) * n + c;
}

}  // namespace

Tribracket::Tribracket(std::size_t n, std::vector<Element> tensor,
                       std::string name)
    : n_(n), tensor_(std::move(tensor)), name_(std::move(name)) {
  if (n_ == 0) throw DomainError("tribracket size must be positive");
  if (n_ > 1024) throw DomainError("tribracket size too large");
  if (tensor_.size() != n_ * n_ * n_) {
    throw DomainError("tribracket tensor has " + std::to_string(tensor_.size()) +
                      " entries, expected " + std::to_string(n_ * n_ * n_));
  }
  for (std::size_t i = 0; i < tensor_.size(); ++i) {
    if (tensor_[i] >= n_) {
      throw DomainError("tribracket entry " + std::to_string(tensor_[i]) +
                        " out of range at flat index " + std::to_string(i));
    }
  }
  build_inverses();
}

void Tribracket::build_inverses() {
  const std::size_t n3 = n_ * n_ * n_;
  for (int s = 0; s < 3; ++s) {
    auto& off = inv_offsets_[s];
    auto& val = inv_values_[s];
    off.assign(n3 + 1, 0);
    val.assign(n3, 0);
    auto key = [&](std::size_t a, std::size_t b, std::size_t c) {
      const std::size_t d = tensor_[index3(n_, a, b, c)];
      switch (s) {
        case 0: return index3(n_, b, c, d);
        case 1: return index3(n_, a, c, d);
        default: return index3(n_, a, b, d);
      }
    };
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c) ++off[key(a, b, c) + 1];
    std::partial_sum(off.begin(), off.end(), off.begin());
    std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
    // Lexicographic iteration keeps every bucket sorted by the unknown.
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        for (std::size_t c = 0; c < n_; ++c) {
          const Element unknown =
              static_cast<Element>(s == 0 ? a : (s == 1 ? b : c));
          val[fill[key(a, b, c)]++] = unknown;
        }
      }
    }
  }
}

Element Tribracket::eval(Element a, Element b, Element c) const {
  if (a >= n_ || b >= n_ || c >= n_) {
    throw DomainError("element out of range for tribracket of size " +
                      std::to_string(n_));
  }
  return (*this)(a, b, c);
}

std::span<const Element> Tribracket::preimages(Slot slot, Element x, Element y,
                                               Element z) const {
  if (slot == Slot::D) {
    return {&tensor_[index3(n_, x, y, z)], 1};
  }
  const int s = static_cast<int>(slot);
  const std::size_t k = index3(n_, x, y, z);
  const auto& off = inv_offsets_[s];
  return {inv_values_[s].data() + off[k], off[k + 1] - off[k]};
}

Element Tribracket::solve_slot(Slot slot, Element x, Element y,
                               Element z) const {
  if (x >= n_ || y >= n_ || z >= n_) {
    throw DomainError("element out of range for tribracket of size " +
                      std::to_string(n_));
  }
  auto pre = preimages(slot, x, y, z);
  if (pre.size() != 1) {
    throw DomainError("slot is not uniquely determined (" +
                      std::to_string(pre.size()) +
                      " candidates); the table violates axiom (1)");
  }
  return pre[0];
}

ValidationReport validate(const Tribracket& t) {
  ValidationReport report;
  const std::size_t n = t.size();
  std::vector<int> seen(n);
  for (int axis = 0; axis < 3; ++axis) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t w = 0; w < n; ++w) {
          Element d;
          if (axis == 0) d = t(w, u, v);
          else if (axis == 1) d = t(u, w, v);
          else d = t(u, v, w);
          ++seen[d];
        }
        for (std::size_t d = 0; d < n; ++d) {
          if (seen[d] > 1) {
            report.axiom1_failures.push_back(
                {axis,
                 {static_cast<Element>(u), static_cast<Element>(v)},
                 static_cast<Element>(d)});
          }
        }
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        const Element abc = t(a, b, c);
        for (Element d = 0; d < n; ++d) {
          const Element abd = t(a, b, d);
          const Element acd = t(a, c, d);
          const Element v1 = t(b, abc, abd);
          const Element v2 = t(c, abc, acd);
          const Element v3 = t(d, abd, acd);
          if (v1 != v2 || v2 != v3) {
            report.axiom2_failures.push_back({{a, b, c, d}, {v1, v2, v3}});
          }
        }
      }
    }
  }
  report.valid =
      report.axiom1_failures.empty() && report.axiom2_failures.empty();
  return report;
}

bool is_commutative(const Tribracket& t) {
  const std::size_t n = t.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const Element v = t(a, b, c);
        if (t(b, c, a) != v || t(a, c, b) != v || t(c, b, a) != v) return false;
      }
  return true;
}

bool is_symmetric_in_last_two(const Tribracket& t) {
  const std::size_t n = t.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (t(a, b, c) != t(a, c, b)) return false;
  return true;
}

std::optional<std::size_t> abelian_dehn_order(const Tribracket& t) {
  const std::size_t n = t.size();
  auto mul = [&](Element x, Element y) { return t(0, x, y); };
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) return std::nullopt;
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) {
      if (mul(x, y) == 0) {
        inv[x] = y;
        found = true;
      }
    }
    if (!found) return std::nullopt;
    for (Element y = 0; y < n; ++y) {
      if (mul(x, y) != mul(y, x)) return std::nullopt;
      for (Element z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return std::nullopt;
    }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (t(a, b, c) != mul(mul(b, inv[a]), c)) return std::nullopt;
  return n;
}

}  // namespace ktq
