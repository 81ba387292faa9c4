#pragma once

// The lens spaces L_{m,n} with continued fraction [[9]^n, [3,2,2,2,2]^m]^-,
// which admit no small negative-definite filling in either orientation.
//
// Any negative-definite filling X satisfies
//   b2(X) >= m - n + 1   for -L_{m,n},
//   b2(X) >= n - 1       for  L_{m,n},
// so m = 2k, n = k + 1 forces b2(X) >= k on both sides.
//
// The closed spin case is not modelled here; its only arithmetic content is
// the inequality n <= 9 b2(X) + 1 for L(n, n-1) with n odd, exposed as
// spin_b2_lower_bound.

#include <cstdint>
#include <optional>

#include "plumblat/contfrac.hpp"
#include "plumblat/lattice.hpp"

namespace plumblat {

struct LmnSpec {
  std::int64_t m = 1;
  std::int64_t n = 1;

  /// Throws std::invalid_argument unless m, n >= 1.
  void validate() const;
};

struct LmnData {
  Fraction fraction;
  NegCF cf;
  NegCF dual_cf;
};

/// [9]^n ++ [3,2,2,2,2]^m.
NegCF lmn_cf(const LmnSpec& s);

/// [2] ++ [2,2,2,2,2,2,3]^n ++ [7]^{m-1} ++ [6].
NegCF lmn_dual_closed_form(const LmnSpec& s);

/// p/q, its expansion and the dual expansion. Throws std::logic_error if the
/// point rule disagrees with the closed form.
LmnData build_lmn(const LmnSpec& s);

struct BoundReport {
  BigInt p;
  BigInt q;
  std::int64_t b2_canonical = 0;  // b2 X(p, q) = n + 5m
  std::int64_t b2_dual = 0;       // b2 X(p, p-q) = m + 7n + 1
  std::int64_t bound_reversed = 0;  // fillings of -L_{m,n}: m - n + 1
  std::int64_t bound_same = 0;      // fillings of  L_{m,n}: n - 1
  /// Set when m = 2k and n = k + 1.
  std::optional<std::int64_t> k;
};

BoundReport lower_bounds(const LmnSpec& s);

/// ceil((n - 1) / 9) for odd n >= 1.
std::int64_t spin_b2_lower_bound(std::int64_t n);

struct SubchainCertificate {
  bool working_conditions = false;
  Rigidity rigidity = Rigidity::budget_exceeded;
  std::size_t minimal_dimension = 0;
  std::size_t expected_dimension = 0;  // 6m + 1

  bool ok() const {
    return working_conditions && rigidity == Rigidity::rigid &&
           minimal_dimension == expected_dimension;
  }
};

/// Certifies that the chain [3,2,2,2,2]^m satisfies the Working Conditions,
/// is rigid, and needs exactly 6m + 1 dimensions. `max_m` caps the size that
/// is attempted (default 2); larger m throws std::invalid_argument.
SubchainCertificate rigid_subchain_certificate(std::int64_t m,
                                               const SearchOptions& options = {},
                                               std::int64_t max_m = 2);

/// Smallest norm of a nonzero vector with entries in [-entry_bound,
/// entry_bound] orthogonal to the standard embedding of the first 7n
/// vertices of the dual chain, (2, [2,2,2,2,2,2,3]^{n-1}, 2,2,2,2,2,2),
/// inside Z^{8n}. Zero if no such vector exists in the box.
std::int64_t complement_norm_floor(std::int64_t n, int entry_bound);

}  // namespace plumblat
