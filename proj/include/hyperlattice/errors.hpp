#pragma once

#include <stdexcept>
#include <string>

namespace hyperlattice {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotShipped : Error { using Error::Error; };
struct InternalConsistency : Error { using Error::Error; };
struct BasisDegenerate : Error { using Error::Error; };
struct NotInLattice : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct FractionalExponent : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

struct BudgetExceeded : Error {
  unsigned long long nodes;
  BudgetExceeded(const std::string& what, unsigned long long n) : Error(what), nodes(n) {}
};

}  // namespace hyperlattice
