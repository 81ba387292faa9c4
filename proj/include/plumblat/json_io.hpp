#pragma once

// JSON interchange.
//
//   plumbing:   {"chains": [[w, ...], ...]}
//   embedding:  [[row of signed integers], ...], one row per vertex
//   fraction:   {"p": "...", "q": "...", "text": "p/q"} (decimal strings, p
//               can exceed 64 bits)
//   cf:         [a1, a2, ...] as numbers; a coefficient beyond 64 bits is
//               written as a decimal string

#include <json.hpp>

#include "plumblat/bounds.hpp"
#include "plumblat/contfrac.hpp"
#include "plumblat/forbidden.hpp"
#include "plumblat/lattice.hpp"
#include "plumblat/plumbing.hpp"

namespace plumblat {

using Json = nlohmann::json;

Json to_json(const Plumbing& p);
/// Throws std::invalid_argument on a malformed document.
Plumbing plumbing_from_json(const Json& j);

Json to_json(const Fraction& f);
Json to_json(const NegCF& cf);
Json to_json(const GramMatrix& g);
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const VertexRef& v);
Json to_json(const ConditionReport& r);
Json to_json(const RigidityVerdict& v);
Json to_json(const BoundReport& r);

}  // namespace plumblat
