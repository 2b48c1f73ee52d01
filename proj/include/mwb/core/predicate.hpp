/*
   Copyright 2026 The mathieu-workbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MWB_CORE_PREDICATE_HPP
#define MWB_CORE_PREDICATE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <variant>

#include "mwb/core/laurent.hpp"
#include "mwb/core/linalg.hpp"

namespace mwb {

enum class AmbientKind { laurent, polynomial, matrix };

/// The algebra a predicate lives in: Laurent or polynomial ring in dim
/// variables, or dim x dim rational matrices.
struct Ambient {
  AmbientKind kind = AmbientKind::laurent;
  std::size_t dim = 1;

  std::string str() const;
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

using Element = std::variant<LaurentPoly, RationalMatrix>;

/// Throws PreconditionError unless e belongs to the ambient algebra.
void require_in_ambient(const Element& e, const Ambient& a);

Element identity_element(const Ambient& a);
Element multiply(const Element& a, const Element& b);
std::string to_string(const Element& e);
bool same_element(const Element& a, const Element& b);

/// An exactly decidable "e is in M" for a linear subspace M.
class MembershipPredicate {
 public:
  using Test = std::function<bool(const Element&)>;

  MembershipPredicate(std::string name, Ambient ambient, Test test)
      : name_(std::move(name)), ambient_(ambient), test_(std::move(test)) {}

  const std::string& name() const noexcept { return name_; }
  const Ambient& ambient() const noexcept { return ambient_; }

  bool contains(const Element& e) const {
    require_in_ambient(e, ambient_);
    return test_(e);
  }
  bool operator()(const Element& e) const { return contains(e); }

 private:
  std::string name_;
  Ambient ambient_;
  Test test_;
};

}  // namespace mwb

#endif  // MWB_CORE_PREDICATE_HPP
