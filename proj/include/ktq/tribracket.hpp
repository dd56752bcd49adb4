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

// Finite tribrackets (knot-theoretic ternary quasigroups).
//
// A tribracket on X = {0..n-1} is a ternary operation [a,b,c] such that any
// three of (a, b, c, [a,b,c]) determine the fourth, and
//   [b,[a,b,c],[a,b,d]] = [c,[a,b,c],[a,c,d]] = [d,[a,b,d],[a,c,d]].
// The Tribracket class stores any n^3 table with entries in range; whether
// the axioms hold is reported by validate(). Tables that fail the axioms are
// still usable for counting, which is what makes invalid published tensors
// inspectable.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ktq {

using Element = std::uint16_t;

// Position of the unknown in [a,b,c] = d.
enum class Slot : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

class Tribracket {
 public:
  // `tensor` is row-major: entry (a,b,c) at index (a*n + b)*n + c.
  // Throws DomainError if n == 0, the size is wrong or an entry is >= n.
  Tribracket(std::size_t n, std::vector<Element> tensor, std::string name = "");

  std::size_t size() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<Element>& tensor() const { return tensor_; }

  // Unchecked lookup, used on hot paths.
  Element operator()(Element a, Element b, Element c) const {
    return tensor_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c];
  }
  // Range-checked lookup; throws DomainError.
  Element eval(Element a, Element b, Element c) const;

  // All values of the unknown slot compatible with the three known values,
  // given in slot order with the unknown removed (e.g. for Slot::A the known
  // values are b, c, d). A valid tribracket always yields exactly one.
  std::span<const Element> preimages(Slot slot, Element x, Element y,
                                     Element z) const;

  // The unique completion of [a,b,c]=d. Throws DomainError if the table does
  // not determine the slot uniquely (only possible for invalid tables).
  Element solve_slot(Slot slot, Element x, Element y, Element z) const;

  friend bool operator==(const Tribracket& l, const Tribracket& r) {
    return l.n_ == r.n_ && l.tensor_ == r.tensor_;
  }

 private:
  void build_inverses();

  std::size_t n_;
  std::vector<Element> tensor_;
  std::string name_;
  // Inverse tables for slots A, B, C in CSR form keyed by the three known
  // values; for valid tables every bucket has exactly one entry.
  std::array<std::vector<std::uint32_t>, 3> inv_offsets_;
  std::array<std::vector<Element>, 3> inv_values_;
};

struct Axiom1Failure {
  // Index of the varying argument: 0 for (.,b,c), 1 for (a,.,c), 2 for (a,b,.).
  int axis;
  // The two fixed arguments, in argument order.
  std::array<Element, 2> fixed;
  Element duplicated;
};

struct Axiom2Failure {
  std::array<Element, 4> abcd;
  std::array<Element, 3> values;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Axiom1Failure> axiom1_failures;
  std::vector<Axiom2Failure> axiom2_failures;
};

ValidationReport validate(const Tribracket& t);

// True iff [a,b,c] = [b,c,a] = [a,c,b] = [c,b,a] for all triples.
bool is_commutative(const Tribracket& t);

// True iff [a,b,c] = [a,c,b] for all triples.
bool is_symmetric_in_last_two(const Tribracket& t);

// If t is the Dehn tribracket of an abelian group, returns the order of that
// group. The candidate group law is x*y = [0,x,y] with identity 0.
std::optional<std::size_t> abelian_dehn_order(const Tribracket& t);

class FiniteGroup {
 public:
  // Throws DomainError unless `cayley` is a group table on {0..n-1}.
  FiniteGroup(std::size_t n, std::vector<Element> cayley, Element identity,
              std::string name = "");

  std::size_t size() const { return n_; }
  Element identity() const { return identity_; }
  const std::string& name() const { return name_; }
  const std::vector<Element>& cayley() const { return cayley_; }
  Element mul(Element x, Element y) const { return cayley_[x * n_ + y]; }
  Element inv(Element x) const { return inverse_[x]; }
  bool is_abelian() const;

 private:
  std::size_t n_;
  std::vector<Element> cayley_;
  Element identity_;
  std::vector<Element> inverse_;
  std::string name_;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
// Dihedral group of order 2m.
FiniteGroup dihedral_group(std::size_t m);
// Symmetric group on m <= 4 letters.
FiniteGroup symmetric_group(std::size_t m);
FiniteGroup quaternion_group();

// [a,b,c] = b * a^-1 * c.
Tribracket dehn_tribracket(const FiniteGroup& g);

struct EnumerationStats {
  std::uint64_t found = 0;
  std::uint64_t nodes = 0;
  bool completed = false;
};

// Calls `sink` for every valid size-n tribracket in row-major lexicographic
// tensor order. The sink may return false to stop early. Throws
// BudgetExceeded (progress = nodes visited) once more than `node_budget`
// search nodes have been expanded.
EnumerationStats enumerate_tribrackets(
    std::size_t n, std::uint64_t node_budget,
    const std::function<bool(const Tribracket&)>& sink);

}  // namespace ktq
