#include "plumblat/complement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace plumblat {
namespace {

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t narrow(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("kernel entry exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

using Real = long double;

struct Gso {
  std::vector<std::vector<Real>> mu;
  std::vector<Real> norms;  // |b*_i|^2
};

Gso gram_schmidt(const std::vector<IntVector>& b) {
  const std::size_t n = b.size();
  Gso g{std::vector<std::vector<Real>>(n, std::vector<Real>(n, 0)),
        std::vector<Real>(n, 0)};
  std::vector<std::vector<Real>> star(n);
  for (std::size_t i = 0; i < n; ++i) {
    star[i].assign(b[i].begin(), b[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      Real d = 0;
      for (std::size_t c = 0; c < b[i].size(); ++c) d += b[i][c] * star[j][c];
      g.mu[i][j] = d / g.norms[j];
      for (std::size_t c = 0; c < b[i].size(); ++c) {
        star[i][c] -= g.mu[i][j] * star[j][c];
      }
    }
    Real s = 0;
    for (Real x : star[i]) s += x * x;
    g.norms[i] = s;
  }
  return g;
}

}  // namespace

std::vector<IntVector> integer_kernel(const IntMatrix& rows) {
  const std::size_t r = rows.rows();
  const std::size_t n = rows.cols();
  // Row j of the work matrix is (column j of `rows` | e_j).
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(r + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r; ++i) m[j][i] = rows(i, j);
    m[j][r + j] = 1;
  }
  std::size_t top = 0;
  for (std::size_t col = 0; col < r && top < n; ++col) {
    while (true) {
      std::size_t pivot = n;
      for (std::size_t j = top; j < n; ++j) {
        if (m[j][col] != 0 &&
            (pivot == n || abs(m[j][col]) < abs(m[pivot][col]))) {
          pivot = j;
        }
      }
      if (pivot == n) break;
      std::swap(m[top], m[pivot]);
      bool clean = true;
      for (std::size_t j = top + 1; j < n; ++j) {
        if (m[j][col] == 0) continue;
        const BigInt q = m[j][col] / m[top][col];
        for (std::size_t c = 0; c < r + n; ++c) m[j][c] -= q * m[top][c];
        if (m[j][col] != 0) clean = false;
      }
      if (clean) {
        ++top;
        break;
      }
    }
  }
  std::vector<IntVector> basis;
  for (std::size_t j = top; j < n; ++j) {
    IntVector v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = narrow(m[j][r + c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<IntVector> lll_reduce(std::vector<IntVector> b) {
  constexpr Real kDelta = 0.99L;
  const std::size_t n = b.size();
  if (n < 2) return b;
  Gso g = gram_schmidt(b);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      const Real q = std::round(g.mu[k][j]);
      if (q == 0) continue;
      const auto qi = static_cast<std::int64_t>(q);
      for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= qi * b[j][c];
      for (std::size_t l = 0; l < j; ++l) g.mu[k][l] -= q * g.mu[j][l];
      g.mu[k][j] -= q;
    }
    if (g.norms[k] >= (kDelta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norms[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      g = gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

namespace {

// All vectors offset + sum z_i basis[i] of norm at most max_norm. Fincke-Pohst
// around the point of the span closest to -offset.
std::vector<IntVector> coset_vectors(const IntVector& offset,
                                     const std::vector<IntVector>& basis,
                                     std::int64_t max_norm, bool skip_zero) {
  const std::size_t n = basis.size();
  std::vector<IntVector> out;
  auto keep = [&](IntVector v) {
    if (skip_zero && std::all_of(v.begin(), v.end(), [](auto c) { return c == 0; })) return;
    if (dot(v, v) <= max_norm) out.push_back(std::move(v));
  };
  if (n == 0) {
    keep(offset);
    return out;
  }
  // Quadratic form in coefficient space, brought to the completed-square shape
  // Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2.
  std::vector<std::vector<Real>> q(n, std::vector<Real>(n));
  std::vector<Real> mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q[i][j] = dot(basis[i], basis[j]);
    mu[i] = dot(basis[i], offset);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
  }
  // |offset + xB|^2 = |offset|^2 - m.G.m + Q(x + m) with G m = B.offset.
  // Forward then back substitution through the factorisation above.
  Real base = dot(offset, offset);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) mu[i] -= q[i][j] / q[j][j] * mu[j];
  }
  for (std::size_t i = 0; i < n; ++i) base -= mu[i] * mu[i] / q[i][i];
  for (std::size_t i = 0; i < n; ++i) mu[i] /= q[i][i];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) mu[i] -= q[i][j] * mu[j];
  }

  constexpr Real kSlack = 1e-6L;
  std::vector<std::int64_t> x(n, 0);
  auto emit = [&] {
    IntVector v = offset;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] += x[i] * basis[i][c];
    }
    keep(std::move(v));
  };
  auto rec = [&](auto&& self, std::size_t i, Real budget) -> void {
    Real center = -mu[i];
    for (std::size_t j = i + 1; j < n; ++j) center -= q[i][j] * (x[j] + mu[j]);
    const Real radius = std::sqrt(std::max<Real>(budget, 0) / q[i][i]);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - radius - kSlack));
    const auto hi = static_cast<std::int64_t>(std::floor(center + radius + kSlack));
    for (std::int64_t v = lo; v <= hi; ++v) {
      x[i] = v;
      const Real rest = budget - q[i][i] * (v - center) * (v - center);
      if (rest < -kSlack) continue;
      if (i == 0) {
        emit();
      } else {
        self(self, i - 1, rest);
      }
    }
    x[i] = 0;
  };
  const Real budget = static_cast<Real>(max_norm) - base;
  if (budget >= -kSlack) rec(rec, n - 1, budget);
  return out;
}

}  // namespace

std::vector<IntVector> short_vectors(const std::vector<IntVector>& basis,
                                     std::int64_t max_norm) {
  if (basis.empty()) return {};
  return coset_vectors(IntVector(basis.front().size(), 0), basis, max_norm, true);
}

GramMatrix gram_of(const std::vector<IntVector>& vectors) {
  GramMatrix g(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      g(i, j) = dot(vectors[i], vectors[j]);
    }
  }
  return g;
}

namespace {

// One step of the flag L = L_0 > L_1 > ... where L_d is the part of L
// orthogonal to the first d picked vectors. Splitting L_d = L_{d+1} + Z u
// with u.v = g > 0 lets the pairings of a new vector be solved triangularly.
struct FlagStep {
  std::vector<IntVector> rest;
  IntVector u;
  std::int64_t g = 0;
};

// Babai nearest plane: v minus a nearby lattice vector, so the coset search
// starts close to its centre.
IntVector nearest_plane(IntVector v, const std::vector<IntVector>& b) {
  if (b.empty()) return v;
  const Gso g = gram_schmidt(b);
  const std::size_t n = b.size();
  std::vector<Real> t(n);  // <v, b*_i>
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = dot(v, b[i]);
    for (std::size_t j = 0; j < i; ++j) t[i] -= g.mu[i][j] * t[j];
  }
  for (std::size_t i = n; i-- > 0;) {
    const auto c = static_cast<std::int64_t>(std::round(t[i] / g.norms[i]));
    if (c == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * b[i][k];
    t[i] -= c * g.norms[i];
    for (std::size_t j = 0; j < i; ++j) t[j] -= c * g.mu[i][j] * g.norms[j];
  }
  return v;
}

FlagStep split_off(std::vector<IntVector> rows, const IntVector& v) {
  std::vector<std::int64_t> s(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) s[k] = dot(rows[k], v);
  FlagStep step;
  while (true) {
    std::size_t piv = rows.size();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (s[k] != 0 && (piv == rows.size() || std::abs(s[k]) < std::abs(s[piv]))) piv = k;
    }
    if (piv == rows.size()) return step;  // v is orthogonal to all of L_d
    bool done = true;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == piv || s[k] == 0) continue;
      const std::int64_t q = s[k] / s[piv];
      for (std::size_t c = 0; c < v.size(); ++c) rows[k][c] -= q * rows[piv][c];
      s[k] -= q * s[piv];
      if (s[k] != 0) done = false;
    }
    if (!done) continue;
    step.g = std::abs(s[piv]);
    step.u = rows[piv];
    if (s[piv] < 0) {
      for (auto& c : step.u) c = -c;
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != piv) step.rest.push_back(std::move(rows[k]));
    }
    step.rest = lll_reduce(std::move(step.rest));
    return step;
  }
}

}  // namespace

bool is_isometric_to_chain(const std::vector<IntVector>& basis,
                           const Chain& chain) {
  if (basis.size() != chain.size()) return false;
  const Plumbing target({chain});
  if (determinant(gram_of(basis)) != determinant(gram(target))) return false;
  const std::size_t n = chain.size();

  // Grow a connected interval from the longest run of lightest vertices,
  // heavier ends last, so big norms are only searched for in small sublattices.
  const Weight light = *std::min_element(chain.begin(), chain.end());
  std::size_t best = 0;
  std::size_t best_len = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && chain[j] == light) ++j;
    if (j - i > best_len) {
      best = (i + j - 1) / 2;
      best_len = j - i;
    }
    i = std::max(j, i + 1);
  }
  std::vector<std::size_t> order{best};
  for (std::size_t lo = order[0], hi = order[0]; order.size() < n;) {
    const bool left = lo > 0 && (hi + 1 == n || chain[lo - 1] <= chain[hi + 1]);
    order.push_back(left ? --lo : ++hi);
  }

  // Vectors with the chain's pairings and the lattice's determinant span a
  // sublattice of index one, i.e. the whole lattice.
  std::vector<IntVector> picked;
  std::vector<FlagStep> flag;
  auto rec = [&](auto&& self, std::vector<IntVector> rows) -> bool {
    const std::size_t d = picked.size();
    if (d == n) return true;
    const std::size_t pos = order[d];
    std::vector<std::int64_t> coef(d);
    IntVector offset(basis.front().size(), 0);
    for (std::size_t j = 0; j < d; ++j) {
      const auto dist = static_cast<std::int64_t>(order[j]) - static_cast<std::int64_t>(pos);
      std::int64_t want = (dist == 1 || dist == -1) ? -1 : 0;
      for (std::size_t k = 0; k < j; ++k) want -= coef[k] * dot(flag[k].u, picked[j]);
      if (want % flag[j].g != 0) return false;
      coef[j] = want / flag[j].g;
      for (std::size_t c = 0; c < offset.size(); ++c) offset[c] += coef[j] * flag[j].u[c];
    }
    offset = nearest_plane(std::move(offset), rows);
    for (auto& v : coset_vectors(offset, rows, chain[pos], false)) {
      if (dot(v, v) != chain[pos]) continue;
      if (d == 0) {
        auto lead = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
        if (*lead < 0) continue;
      }
      FlagStep step = split_off(rows, v);
      if (step.g == 0) continue;
      auto next = std::move(step.rest);
      step.rest.clear();
      picked.push_back(std::move(v));
      flag.push_back(std::move(step));
      if (self(self, std::move(next))) return true;
      picked.pop_back();
      flag.pop_back();
    }
    return false;
  };
  return rec(rec, lll_reduce(basis));
}

bool orthogonal_complement_check(const Fraction& f) {
  const Chain canonical = chain_from_cf(cf_expand(f));
  const Plumbing dual_chain({chain_from_cf(riemenschneider_dual(cf_expand(f)))});
  const auto basis = integer_kernel(standard_embedding(dual_chain));
  return is_isometric_to_chain(basis, canonical);
}

}  // namespace plumblat
