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

#include <algorithm>
#include <numeric>

#include "ktq/error.hpp"
#include "ktq/tribracket.hpp"

namespace ktq {

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Element> cayley,
                         Element identity, std::string name)
    : n_(n),
      cayley_(std::move(cayley)),
      identity_(identity),
      name_(std::move(name)) {
  if (n_ == 0) throw DomainError("group order must be positive");
  if (cayley_.size() != n_ * n_) throw DomainError("cayley table has wrong size");
  if (identity_ >= n_) throw DomainError("identity out of range");
  for (Element v : cayley_)
    if (v >= n_) throw DomainError("cayley entry out of range");
  for (Element x = 0; x < n_; ++x) {
    if (mul(identity_, x) != x || mul(x, identity_) != x)
      throw DomainError("identity is not two-sided");
  }
  inverse_.assign(n_, 0);
  for (Element x = 0; x < n_; ++x) {
    bool found = false;
    for (Element y = 0; y < n_ && !found; ++y) {
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inverse_[x] = y;
        found = true;
      }
    }
    if (!found) throw DomainError("element without a two-sided inverse");
  }
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      for (Element z = 0; z < n_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw DomainError("cayley table is not associative");
}

bool FiniteGroup::is_abelian() const {
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("group order must be positive");
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = (x + y) % n;
  return FiniteGroup(n, std::move(t), 0, "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t gn = g.size(), hn = h.size(), n = gn * hn;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = g.mul(x / hn, y / hn) * hn + h.mul(x % hn, y % hn);
  return FiniteGroup(n, std::move(t), g.identity() * hn + h.identity(),
                     g.name() + "x" + h.name());
}

FiniteGroup dihedral_group(std::size_t m) {
  if (m == 0) throw DomainError("dihedral group needs m >= 1");
  // Element r^i s^j is stored at index i + m*j; s r = r^-1 s.
  const std::size_t n = 2 * m;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
      const std::size_t i = (j1 ? i1 + m - i2 : i1 + i2) % m;
      t[x * n + y] = i + m * (j1 ^ j2);
    }
  }
  return FiniteGroup(n, std::move(t), 0, "D" + std::to_string(m));
}

FiniteGroup symmetric_group(std::size_t m) {
  if (m == 0 || m > 4) throw DomainError("symmetric group supported for 1..4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<int> r(m);
      for (std::size_t k = 0; k < m; ++k) r[k] = perms[x][perms[y][k]];
      t[x * n + y] = static_cast<Element>(
          std::find(perms.begin(), perms.end(), r) - perms.begin());
    }
  }
  return FiniteGroup(n, std::move(t), 0, "S" + std::to_string(m));
}

FiniteGroup quaternion_group() {
  // Units 1,i,j,k at 0..3; index + 4 negates.
  static const int kUnit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int kSign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<Element> t(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      int sign = kSign[u][v];
      if (x >= 4) sign = -sign;
      if (y >= 4) sign = -sign;
      t[x * 8 + y] = static_cast<Element>(kUnit[u][v] + (sign < 0 ? 4 : 0));
    }
  }
  return FiniteGroup(8, std::move(t), 0, "Q8");
}

Tribracket dehn_tribracket(const FiniteGroup& g) {
  const std::size_t n = g.size();
  std::vector<Element> t(n * n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        t[(a * n + b) * n + c] = g.mul(g.mul(b, g.inv(a)), c);
  return Tribracket(n, std::move(t), "Dehn(" + g.name() + ")");
}

}  // namespace ktq
