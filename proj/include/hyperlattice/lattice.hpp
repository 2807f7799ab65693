#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperlattice/matrix.hpp"

namespace hyperlattice {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigMatrix = std::vector<std::vector<BigInt>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

BigMatrix to_big(const IntMatrix& a);

// Fraction-free Bareiss elimination.
BigInt determinant(const IntMatrix& a);
BigInt determinant(BigMatrix a);
int exact_rank(const IntMatrix& a);

RationalMatrix inverse(const IntMatrix& a);

// A^-1 = numerator / denominator with the smallest positive denominator.
struct ScaledInverse {
  IntMatrix numerator;
  std::int64_t denominator = 1;
};
ScaledInverse scaled_inverse(const IntMatrix& a);
std::vector<Rational> solve(const IntMatrix& a, const std::vector<Rational>& b);
std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b);

// LDL^T pivots over the rationals; empty optional when a pivot is <= 0.
std::optional<std::vector<Rational>> rational_cholesky_pivots(const IntMatrix& a);
bool is_positive_definite(const IntMatrix& a);

// Full Smith normal form diagonal, each entry dividing the next.
std::vector<BigInt> smith_diagonal(const IntMatrix& a);

// Smallest l with l * A^-1 integral with even diagonal.
BigInt modular_level(const IntMatrix& a);
bool is_even_integral(const RationalMatrix& m, const BigInt& scale);

int legendre_symbol(const BigInt& a, std::int64_t p);
bool is_prime(std::int64_t n);

struct LatticeInvariants {
  int rank = 0;
  BigInt discriminant;
  BigInt level;
  int weight = 0;
  std::vector<BigInt> dual_quotient;  // Smith invariant factors > 1
  std::vector<std::pair<std::int64_t, int>> legendre_profile;
};

LatticeInvariants invariants(const IntMatrix& a);

// Witness for S A S^T = B: row i of S has entry sign[i] in column perm[i],
// so B[i][j] = sign[i] sign[j] A[perm[i]][perm[j]].
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;
};

enum class Equivalence { Equivalent, NotEquivalent, Inconclusive };

struct EquivalenceResult {
  Equivalence status = Equivalence::Inconclusive;
  std::optional<SignedPermutation> witness;
  std::uint64_t nodes = 0;
};

EquivalenceResult signed_perm_equivalent(const IntMatrix& a, const IntMatrix& b,
                                         std::uint64_t node_budget = 20'000'000);
IntMatrix apply_signed_permutation(const IntMatrix& a, const SignedPermutation& s);

}  // namespace hyperlattice
