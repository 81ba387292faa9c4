#include "plumblat/plumbing.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace plumblat {

Plumbing::Plumbing(std::vector<Chain> chains) : chains_(std::move(chains)) {
  if (chains_.empty()) {
    throw std::invalid_argument("plumbing must have at least one chain");
  }
  for (std::size_t c = 0; c < chains_.size(); ++c) {
    if (chains_[c].empty()) {
      throw std::invalid_argument("plumbing chain " + std::to_string(c) +
                                  " is empty");
    }
    offsets_.push_back(refs_.size());
    for (std::size_t i = 0; i < chains_[c].size(); ++i) {
      if (chains_[c][i] < 2) {
        throw std::invalid_argument("vertex weight " +
                                    std::to_string(chains_[c][i]) +
                                    " is below 2");
      }
      refs_.push_back({c, i});
    }
  }
}

Weight Plumbing::weight_sum() const {
  Weight total = 0;
  for (const auto& chain : chains_) {
    for (Weight w : chain) total += w;
  }
  return total;
}

std::size_t Plumbing::index(VertexRef v) const {
  if (v.chain >= chains_.size() || v.pos >= chains_[v.chain].size()) {
    throw std::out_of_range("vertex reference out of range");
  }
  return offsets_[v.chain] + v.pos;
}

bool Plumbing::adjacent(std::size_t u, std::size_t v) const {
  const auto& a = refs_[u];
  const auto& b = refs_[v];
  return a.chain == b.chain && (a.pos + 1 == b.pos || b.pos + 1 == a.pos);
}

int Plumbing::degree(std::size_t index) const {
  const auto& r = refs_[index];
  const std::size_t len = chains_[r.chain].size();
  return (r.pos > 0 ? 1 : 0) + (r.pos + 1 < len ? 1 : 0);
}

std::int64_t Plumbing::pairing(std::size_t u, std::size_t v) const {
  if (u == v) return weight(u);
  return adjacent(u, v) ? -1 : 0;
}

Plumbing Plumbing::with_chain_reversed(std::size_t c) const {
  auto chains = chains_;
  std::reverse(chains.at(c).begin(), chains.at(c).end());
  return Plumbing(std::move(chains));
}

std::string Plumbing::str() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < chains_.size(); ++c) {
    if (c) out << " + ";
    out << '(';
    for (std::size_t i = 0; i < chains_[c].size(); ++i) {
      if (i) out << ',';
      out << chains_[c][i];
    }
    out << ')';
  }
  return out.str();
}

Chain chain_from_cf(const NegCF& cf) {
  Chain chain;
  chain.reserve(cf.size());
  for (const auto& a : cf.coeffs()) {
    if (a > std::numeric_limits<Weight>::max()) {
      throw std::overflow_error("continued fraction coefficient " + a.str() +
                                " exceeds the vertex weight range");
    }
    chain.push_back(static_cast<Weight>(a));
  }
  return chain;
}

NegCF cf_from_chain(const Chain& chain) {
  std::vector<BigInt> coeffs(chain.begin(), chain.end());
  return NegCF(std::move(coeffs));
}

Plumbing from_lens_sum(std::span<const Fraction> summands) {
  std::vector<Chain> chains;
  for (const auto& f : summands) chains.push_back(chain_from_cf(cf_expand(f)));
  return Plumbing(std::move(chains));
}

Plumbing dual(const Plumbing& plumbing) {
  std::vector<Chain> chains;
  for (const auto& chain : plumbing.chains()) {
    chains.push_back(chain_from_cf(riemenschneider_dual(cf_from_chain(chain))));
  }
  return Plumbing(std::move(chains));
}

GramMatrix gram(const Plumbing& plumbing) {
  const std::size_t n = plumbing.vertex_count();
  GramMatrix g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) g(u, v) = plumbing.pairing(u, v);
  }
  return g;
}

namespace {

// Fraction-free Bareiss elimination. The int64 instantiation reports overflow
// through `ok` so the caller can redo the work exactly.
template <class T, class Wide>
T bareiss(std::vector<std::vector<T>> m, bool& ok) {
  const std::size_t n = m.size();
  T sign = 1;
  T prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Wide v = (Wide(m[i][j]) * m[k][k] - Wide(m[i][k]) * m[k][j]) / prev;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          if (v > std::numeric_limits<std::int64_t>::max() ||
              v < std::numeric_limits<std::int64_t>::min()) {
            ok = false;
            return 0;
          }
        }
        m[i][j] = static_cast<T>(v);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

BigInt determinant(const GramMatrix& g) {
  const std::size_t n = g.size();
  if (n == 0) return 1;
  std::vector<std::vector<std::int64_t>> small(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) small[i][j] = g(i, j);
  }
  bool ok = true;
  const std::int64_t fast = bareiss<std::int64_t, __int128>(small, ok);
  if (ok) return fast;
  std::vector<std::vector<BigInt>> big(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) big[i][j] = small[i][j];
  }
  return bareiss<BigInt, BigInt>(std::move(big), ok);
}

std::vector<Weight> adjusted_weights(const Plumbing& plumbing) {
  std::vector<Weight> out(plumbing.vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = plumbing.weight(v) - plumbing.degree(v);
  }
  return out;
}

}  // namespace plumblat
