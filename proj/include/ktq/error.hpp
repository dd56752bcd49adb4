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

// Exception hierarchy shared by every module. Each class maps onto one CLI
// exit code, so callers can translate failures without string matching.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ktq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (element index
// out of range, non-group Cayley table, generator out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or unreadable input document.
class InputError : public Error {
 public:
  using Error::Error;
};

// Combinatorial object that is internally inconsistent (PD code whose faces
// do not close, tangle orientation that does not alternate, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that lies outside what the library handles.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A search or enumeration refused to continue past its budget. `progress`
// records how much work was done before the refusal.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t progress)
      : Error(what), progress_(progress) {}
  std::uint64_t progress() const { return progress_; }

 private:
  std::uint64_t progress_;
};

}  // namespace ktq
