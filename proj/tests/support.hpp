#pragma once

// Slow, independent reference implementations used as test oracles, plus
// small generators shared by the suites.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plumblat/json_io.hpp"
#include "plumblat/lattice.hpp"
#include "plumblat/plumbing.hpp"

namespace oracle {

using plumblat::Chain;
using plumblat::IntMatrix;
using plumblat::Plumbing;

struct Frac {
  std::int64_t p;
  std::int64_t q;
};

inline std::vector<Frac> reduced_fractions(std::int64_t pmax) {
  std::vector<Frac> out;
  for (std::int64_t p = 2; p <= pmax; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) == 1) out.push_back({p, q});
    }
  }
  return out;
}

/// Right-to-left fold of a - 1/x on plain 64-bit fractions.
inline Frac eval(const std::vector<std::int64_t>& a) {
  std::int64_t num = a.back();
  std::int64_t den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    // a_i - den/num
    const std::int64_t n2 = a[i] * num - den;
    den = num;
    num = n2;
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return {num, den};
}

/// Riemenschneider's point diagram: row i holds a_i - 1 points and starts in
/// the column where row i-1 ends; the dual reads columns, one more than the
/// number of points in each.
inline std::vector<std::int64_t> point_rule(const std::vector<std::int64_t>& a) {
  std::vector<std::int64_t> columns;
  std::size_t start = 0;
  for (std::int64_t ai : a) {
    const std::size_t points = static_cast<std::size_t>(ai - 1);
    if (columns.size() < start + points) columns.resize(start + points, 0);
    for (std::size_t c = start; c < start + points; ++c) ++columns[c];
    start += points - 1;
  }
  for (auto& c : columns) c += 1;
  return columns;
}

/// Tridiagonal determinant by the continuant recurrence.
inline std::int64_t continuant(const Chain& w) {
  std::int64_t prev = 1;
  std::int64_t cur = w[0];
  for (std::size_t i = 1; i < w.size(); ++i) {
    const std::int64_t next = w[i] * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Calls `fn` on every disjoint union of chains with at most `max_vertices`
/// vertices, weight sum at most `max_sum` and weights in [2, max_weight]. Each
/// plumbing is visited once up to reordering chains; a chain and its reverse
/// are both visited.
inline void for_each_plumbing(std::size_t max_vertices, std::int64_t max_sum,
                              std::int64_t max_weight,
                              const std::function<void(const Plumbing&)>& fn) {
  std::vector<Chain> pool;
  std::function<void(Chain&, std::int64_t)> grow = [&](Chain& c, std::int64_t sum) {
    if (!c.empty()) pool.push_back(c);
    if (c.size() == max_vertices) return;
    for (std::int64_t w = 2; w <= max_weight && sum + w <= max_sum; ++w) {
      c.push_back(w);
      grow(c, sum + w);
      c.pop_back();
    }
  };
  Chain scratch;
  grow(scratch, 0);
  std::sort(pool.begin(), pool.end());
  std::vector<std::int64_t> sums;
  for (const auto& c : pool) sums.push_back(std::accumulate(c.begin(), c.end(), std::int64_t{0}));

  std::vector<Chain> current;
  std::function<void(std::size_t, std::size_t, std::int64_t)> pick =
      [&](std::size_t from, std::size_t verts, std::int64_t sum) {
        if (!current.empty()) fn(Plumbing(current));
        for (std::size_t i = from; i < pool.size(); ++i) {
          if (verts + pool[i].size() > max_vertices || sum + sums[i] > max_sum) continue;
          current.push_back(pool[i]);
          pick(i, verts + pool[i].size(), sum + sums[i]);
          current.pop_back();
        }
      };
  pick(0, 0, 0);
}

inline std::vector<Plumbing> small_plumbings(std::size_t max_vertices,
                                             std::int64_t max_sum,
                                             std::int64_t max_weight = 1'000) {
  std::vector<Plumbing> out;
  for_each_plumbing(max_vertices, max_sum, max_weight,
                    [&](const Plumbing& p) { out.push_back(p); });
  return out;
}

/// All vectors of Z^n with the given norm.
inline std::vector<std::vector<int>> vectors_of_norm(std::size_t n, int norm) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
    if (i == n) {
      if (rem == 0) out.push_back(v);
      return;
    }
    for (int x = -norm; x <= norm; ++x) {
      if (x * x > rem) continue;
      v[i] = x;
      rec(i + 1, rem - x * x);
    }
    v[i] = 0;
  };
  rec(0, norm);
  return out;
}

/// Brute force: vertex 0 runs over the sorted positive vectors of its norm
/// (every row is equivalent to one of those), every other vertex over all
/// vectors of its norm in Z^n. Results are canonicalized and deduplicated.
inline std::set<plumblat::CanonicalForm> brute_force_embeddings(const Plumbing& p,
                                                                std::size_t n) {
  const std::size_t v = p.vertex_count();
  std::vector<std::vector<std::vector<int>>> candidates(v);
  for (std::size_t i = 1; i < v; ++i) {
    candidates[i] = vectors_of_norm(n, static_cast<int>(p.weight(i)));
  }
  for (const auto& row : vectors_of_norm(n, static_cast<int>(p.weight(0)))) {
    const bool sorted = std::is_sorted(row.rbegin(), row.rend());
    if (sorted && row.back() >= 0) candidates[0].push_back(row);
  }

  std::set<plumblat::CanonicalForm> out;
  std::vector<const std::vector<int>*> rows(v);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == v) {
      IntMatrix m(v, n);
      for (std::size_t r = 0; r < v; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = (*rows[r])[c];
      }
      out.insert(plumblat::CanonicalForm::of(m));
      return;
    }
    for (const auto& cand : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = plumblat::dot(*rows[j], cand) == p.pairing(i, j);
      }
      if (!ok) continue;
      rows[i] = &cand;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

struct Golden {
  Plumbing plumbing;
  std::vector<plumblat::VertexRef> marked;
  std::vector<plumblat::CanonicalForm> embeddings;  // sorted
};

inline Golden load_golden(int k) {
  std::ifstream in(std::string(PLUMBLAT_APPENDIX_DIR) + "/graph" +
                   std::to_string(k) + ".json");
  const auto doc = plumblat::Json::parse(in);
  Golden g{plumblat::plumbing_from_json(doc), {}, {}};
  for (const auto& v : doc.at("marked")) {
    g.marked.push_back({v.at("chain").get<std::size_t>(), v.at("pos").get<std::size_t>()});
  }
  for (const auto& m : doc.at("embeddings")) {
    g.embeddings.push_back(plumblat::CanonicalForm::of(plumblat::matrix_from_json(m)));
  }
  std::sort(g.embeddings.begin(), g.embeddings.end());
  return g;
}

}  // namespace oracle
