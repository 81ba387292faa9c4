#include "plumblat/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace plumblat {
namespace {

Json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() &&
      v >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

}  // namespace

Json to_json(const Plumbing& p) { return Json{{"chains", p.chains()}}; }

Plumbing plumbing_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("chains") || !j["chains"].is_array()) {
    throw std::invalid_argument("plumbing JSON needs a \"chains\" array");
  }
  std::vector<Chain> chains;
  for (const auto& chain : j["chains"]) {
    if (!chain.is_array()) {
      throw std::invalid_argument("each chain must be an array of weights");
    }
    Chain c;
    for (const auto& w : chain) {
      if (!w.is_number_integer()) {
        throw std::invalid_argument("vertex weights must be integers");
      }
      c.push_back(w.get<Weight>());
    }
    chains.push_back(std::move(c));
  }
  return Plumbing(std::move(chains));
}

Json to_json(const Fraction& f) {
  return Json{{"p", f.p().str()}, {"q", f.q().str()}, {"text", f.str()}};
}

Json to_json(const NegCF& cf) {
  Json out = Json::array();
  for (const auto& a : cf.coeffs()) out.push_back(big_to_json(a));
  return out;
}

Json to_json(const GramMatrix& g) {
  Json out = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.size(); ++j) row.push_back(g(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const IntMatrix& m) { return m.to_rows(); }

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) {
        throw std::invalid_argument("matrix entries must be integers");
      }
      r.push_back(x.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

Json to_json(const VertexRef& v) { return Json{{"chain", v.chain}, {"pos", v.pos}}; }

Json to_json(const ConditionReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json witnesses = Json::array();
    for (const auto& w : v.witnesses) witnesses.push_back(to_json(w));
    violations.push_back(
        {{"rule", v.rule}, {"witnesses", witnesses}, {"detail", v.detail}});
  }
  return Json{{"verdict", r.pass() ? "pass" : "fail"}, {"violations", violations}};
}

Json to_json(const RigidityVerdict& v) {
  Json out{{"verdict", to_string(v.kind)},
           {"embeddings", v.embeddings},
           {"nodes", v.nodes}};
  if (v.witness) out["witness"] = to_json(v.witness->matrix());
  return out;
}

Json to_json(const BoundReport& r) {
  Json out{{"p", r.p.str()},
           {"q", r.q.str()},
           {"b2_canonical", r.b2_canonical},
           {"b2_dual", r.b2_dual},
           {"bound_reversed", r.bound_reversed},
           {"bound_same", r.bound_same},
           {"k", nullptr}};
  if (r.k) out["k"] = *r.k;
  return out;
}

}  // namespace plumblat
