#include "plumblat/bounds.hpp"

#include <stdexcept>
#include <string>

#include "plumblat/forbidden.hpp"
#include "plumblat/plumbing.hpp"

namespace plumblat {
namespace {

void append(std::vector<BigInt>& out, std::initializer_list<int> block,
            std::int64_t times) {
  for (std::int64_t i = 0; i < times; ++i) out.insert(out.end(), block.begin(), block.end());
}

}  // namespace

void LmnSpec::validate() const {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("L_{m,n} needs m, n >= 1 (got m=" +
                                std::to_string(m) + ", n=" + std::to_string(n) +
                                ")");
  }
}

NegCF lmn_cf(const LmnSpec& s) {
  s.validate();
  std::vector<BigInt> coeffs;
  append(coeffs, {9}, s.n);
  append(coeffs, {3, 2, 2, 2, 2}, s.m);
  return NegCF(std::move(coeffs));
}

NegCF lmn_dual_closed_form(const LmnSpec& s) {
  s.validate();
  std::vector<BigInt> coeffs{2};
  append(coeffs, {2, 2, 2, 2, 2, 2, 3}, s.n);
  append(coeffs, {7}, s.m - 1);
  coeffs.push_back(6);
  return NegCF(std::move(coeffs));
}

LmnData build_lmn(const LmnSpec& s) {
  NegCF cf = lmn_cf(s);
  NegCF dual_cf = riemenschneider_dual(cf);
  if (dual_cf != lmn_dual_closed_form(s)) {
    throw std::logic_error("dual of L_{m,n} disagrees with its closed form");
  }
  Fraction f = cf_eval(cf);
  return {std::move(f), std::move(cf), std::move(dual_cf)};
}

BoundReport lower_bounds(const LmnSpec& s) {
  const LmnData data = build_lmn(s);
  BoundReport r;
  r.p = data.fraction.p();
  r.q = data.fraction.q();
  r.b2_canonical = static_cast<std::int64_t>(data.cf.size());
  r.b2_dual = static_cast<std::int64_t>(data.dual_cf.size());
  r.bound_reversed = s.m - s.n + 1;
  r.bound_same = s.n - 1;
  if (s.m % 2 == 0 && s.n == s.m / 2 + 1) r.k = s.m / 2;
  return r;
}

std::int64_t spin_b2_lower_bound(std::int64_t n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("spin bound needs odd n >= 1");
  }
  return (n - 1 + 8) / 9;
}

SubchainCertificate rigid_subchain_certificate(std::int64_t m,
                                               const SearchOptions& options,
                                               std::int64_t max_m) {
  if (m < 1 || m > max_m) {
    throw std::invalid_argument("subchain certificate needs 1 <= m <= " +
                                std::to_string(max_m));
  }
  Chain chain;
  for (std::int64_t i = 0; i < m; ++i) {
    chain.insert(chain.end(), {3, 2, 2, 2, 2});
  }
  const Plumbing p({chain});
  SubchainCertificate cert;
  cert.expected_dimension = static_cast<std::size_t>(6 * m + 1);
  cert.working_conditions = check_working_conditions(p).pass();

  // One enumeration answers both rigidity and the minimal dimension.
  const auto result = enumerate_embeddings(p, max_ambient_dimension(p), options);
  if (result.status == SearchStatus::budget_exceeded) {
    cert.rigidity = Rigidity::budget_exceeded;
    return cert;
  }
  cert.rigidity = Rigidity::rigid;
  cert.minimal_dimension = max_ambient_dimension(p);
  for (const auto& form : result.embeddings) {
    if (!is_standard(form.matrix(), p)) cert.rigidity = Rigidity::not_rigid;
    cert.minimal_dimension = std::min(cert.minimal_dimension, form.dimension());
  }
  return cert;
}

std::int64_t complement_norm_floor(std::int64_t n, int entry_bound) {
  if (n < 1 || 8 * n > 10 || entry_bound < 1) {
    throw std::invalid_argument("exhaustive norm floor search supports n = 1");
  }
  Chain chain{2};
  for (std::int64_t i = 0; i + 1 < n; ++i) {
    chain.insert(chain.end(), {2, 2, 2, 2, 2, 2, 3});
  }
  chain.insert(chain.end(), {2, 2, 2, 2, 2, 2});
  const IntMatrix rows = standard_embedding(Plumbing({chain}));
  const std::size_t dim = rows.cols();

  std::vector<int> x(dim, -entry_bound);
  std::int64_t best = 0;
  while (true) {
    bool zero = true;
    std::int64_t norm = 0;
    for (int v : x) {
      zero = zero && v == 0;
      norm += std::int64_t{v} * v;
    }
    if (!zero && (best == 0 || norm < best)) {
      bool orthogonal = true;
      for (std::size_t r = 0; r < rows.rows() && orthogonal; ++r) {
        orthogonal = dot(rows.row(r), x) == 0;
      }
      if (orthogonal) best = norm;
    }
    std::size_t i = 0;
    while (i < dim && x[i] == entry_bound) x[i++] = -entry_bound;
    if (i == dim) break;
    ++x[i];
  }
  return best;
}

}  // namespace plumblat
