#pragma once

#include <stdexcept>
#include <string>

namespace kyfan {

/// Argument outside the domain of a mean, Seiffert function or grid.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unknown mean, Seiffert function, chain or diagnostic identifier.
class RegistryError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A computed value broke a structural invariant, e.g. a mean generated from
/// a function that is not a Seiffert function left [min(x,y), max(x,y)].
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kyfan
