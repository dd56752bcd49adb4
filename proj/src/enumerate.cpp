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

// Exhaustive enumeration of tribrackets as Latin cubes satisfying the
// second axiom. Cells are filled in row-major order with values ascending,
// which yields the tables in lexicographic order without any sorting.

#include <vector>

#include "ktq/error.hpp"
#include "ktq/tribracket.hpp"

namespace ktq {

namespace {

constexpr int kUnset = -1;

class Enumerator {
 public:
  Enumerator(std::size_t n, std::uint64_t budget,
             const std::function<bool(const Tribracket&)>& sink)
      : n_(n),
        budget_(budget),
        sink_(sink),
        cell_(n * n * n, kUnset),
        used_bc_(n * n, 0),
        used_ac_(n * n, 0),
        used_ab_(n * n, 0) {}

  EnumerationStats run() {
    stats_.completed = search(0);
    return stats_;
  }

 private:
  int at(std::size_t a, std::size_t b, std::size_t c) const {
    return cell_[(a * n_ + b) * n_ + c];
  }

  // Rejects the partial table when some axiom-(2) quadruple already has two
  // decided, different values.
  bool axiom2_consistent() const {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        for (std::size_t c = 0; c < n_; ++c) {
          const int abc = at(a, b, c);
          for (std::size_t d = 0; d < n_; ++d) {
            const int abd = at(a, b, d);
            const int acd = at(a, c, d);
            int v[3] = {kUnset, kUnset, kUnset};
            if (abc != kUnset && abd != kUnset) v[0] = at(b, abc, abd);
            if (abc != kUnset && acd != kUnset) v[1] = at(c, abc, acd);
            if (abd != kUnset && acd != kUnset) v[2] = at(d, abd, acd);
            int seen = kUnset;
            for (int x : v) {
              if (x == kUnset) continue;
              if (seen != kUnset && seen != x) return false;
              seen = x;
            }
          }
        }
      }
    }
    return true;
  }

  // Returns false when the sink asked to stop.
  bool search(std::size_t pos) {
    if (++stats_.nodes > budget_) {
      throw BudgetExceeded("tribracket enumeration exceeded node budget of " +
                               std::to_string(budget_),
                           stats_.nodes);
    }
    if (pos == cell_.size()) {
      std::vector<Element> t(cell_.begin(), cell_.end());
      ++stats_.found;
      return sink_(Tribracket(n_, std::move(t)));
    }
    const std::size_t a = pos / (n_ * n_), b = (pos / n_) % n_, c = pos % n_;
    const std::uint32_t blocked =
        used_bc_[b * n_ + c] | used_ac_[a * n_ + c] | used_ab_[a * n_ + b];
    for (std::size_t v = 0; v < n_; ++v) {
      const std::uint32_t bit = 1u << v;
      if (blocked & bit) continue;
      cell_[pos] = static_cast<int>(v);
      used_bc_[b * n_ + c] |= bit;
      used_ac_[a * n_ + c] |= bit;
      used_ab_[a * n_ + b] |= bit;
      bool keep_going = true;
      if (axiom2_consistent()) keep_going = search(pos + 1);
      used_bc_[b * n_ + c] &= ~bit;
      used_ac_[a * n_ + c] &= ~bit;
      used_ab_[a * n_ + b] &= ~bit;
      cell_[pos] = kUnset;
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t n_;
  std::uint64_t budget_;
  const std::function<bool(const Tribracket&)>& sink_;
  std::vector<int> cell_;
  // Bitmasks of values already used on each axis line.
  std::vector<std::uint32_t> used_bc_, used_ac_, used_ab_;
  EnumerationStats stats_;
};

}  // namespace

EnumerationStats enumerate_tribrackets(
    std::size_t n, std::uint64_t node_budget,
    const std::function<bool(const Tribracket&)>& sink) {
  if (n == 0) throw DomainError("tribracket size must be positive");
  if (n > 8) throw DomainError("enumeration is limited to size 8");
  return Enumerator(n, node_budget, sink).run();
}

}  // namespace ktq
