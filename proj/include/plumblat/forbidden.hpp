#pragma once

// Minimality criterion for canonical plumbings and the dual-side Working
// Conditions.
//
// A canonical plumbing is minimal exactly when none of ten weighted
// configurations (a)-(j) occurs in it as an induced subgraph. On the dual
// side the same information is carried by six conditions on adjusted weights
// w'(v) = w(v) - deg(v):
//
//   I    every w(v) >= 2
//   II   every w'(v) <= 3, and at most one vertex has w'(v) > 1
//   III  no three adjacent vertices all with w'(v) > 0
//   IV   if some w'(v) = 3, no two adjacent vertices with w' = 1, 1
//   V    for a run v_0, ..., v_{k+1} with w'(v_0) >= 1, zeros in between,
//        w'(v_{k+1}) = 1 and k != 0, we need k >= w'(v_0) + 1
//   VI   no run with adjusted weights (1,1,0,0,1,2) or (3,1,0,0,1)

#include <span>
#include <string>
#include <vector>

#include "plumblat/contfrac.hpp"
#include "plumblat/plumbing.hpp"

namespace plumblat {

/// An induced weighted subgraph of a linear plumbing, stored as pairwise
/// non-adjacent consecutive runs of weights.
struct ForbiddenConfig {
  char id;
  std::vector<Chain> parts;

  /// The pattern viewed as a plumbing of its own.
  Plumbing as_plumbing() const { return Plumbing(parts); }
};

/// The ten configurations (a)-(j), in order.
const std::vector<ForbiddenConfig>& forbidden_configs();

struct Violation {
  std::string rule;  // "a".."j" or "I".."VI"
  std::vector<VertexRef> witnesses;
  std::string detail;
};

struct ConditionReport {
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  bool fired(std::string_view rule) const;
};

ConditionReport check_configurations(const Plumbing& plumbing);

ConditionReport check_working_conditions(const Plumbing& plumbing);

/// True unless the canonical plumbing of the sum passes the configuration
/// check while its dual fails the Working Conditions.
bool duality_bridge_test(std::span<const Fraction> summands);

/// Converse direction, which is not claimed to hold: true unless the dual
/// passes the Working Conditions while the canonical plumbing contains a
/// configuration. Sweeps log failures; nothing asserts on this.
bool converse_bridge_test(std::span<const Fraction> summands);

}  // namespace plumblat
