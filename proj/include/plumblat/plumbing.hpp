#pragma once

// Disjoint unions of weighted linear chains and their Gram lattices.
//
// Weights are stored positive: a vertex of weight w stands for a sphere of
// self-intersection -w in the negative-definite plumbing. Every lattice
// computation here lives in the sign-flipped, positive-definite form.
//
// Vertices are enumerated chain by chain in input order, left to right inside
// each chain. Embedding matrices and Gram matrices use that order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plumblat/contfrac.hpp"

namespace plumblat {

using Weight = std::int64_t;
using Chain = std::vector<Weight>;

struct VertexRef {
  std::size_t chain = 0;
  std::size_t pos = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

class GramMatrix {
 public:
  explicit GramMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return entries_[i * n_ + j];
  }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> entries_;
};

class Plumbing {
 public:
  /// Throws std::invalid_argument on an empty plumbing, an empty chain, or a
  /// weight below 2.
  explicit Plumbing(std::vector<Chain> chains);

  const std::vector<Chain>& chains() const { return chains_; }

  std::size_t vertex_count() const { return refs_.size(); }
  std::size_t edge_count() const { return vertex_count() - chains_.size(); }
  Weight weight_sum() const;

  /// Flat index <-> (chain, position) under the public vertex order.
  const VertexRef& ref(std::size_t index) const { return refs_[index]; }
  std::size_t index(VertexRef v) const;

  Weight weight(std::size_t index) const {
    return chains_[refs_[index].chain][refs_[index].pos];
  }
  bool adjacent(std::size_t u, std::size_t v) const;
  int degree(std::size_t index) const;

  /// Target value of the Gram pairing between two vertices.
  std::int64_t pairing(std::size_t u, std::size_t v) const;

  /// Same plumbing with chain `c` read right to left.
  Plumbing with_chain_reversed(std::size_t c) const;

  std::string str() const;

  friend bool operator==(const Plumbing& a, const Plumbing& b) {
    return a.chains_ == b.chains_;
  }

 private:
  std::vector<Chain> chains_;
  std::vector<VertexRef> refs_;
  std::vector<std::size_t> offsets_;
};

/// One chain per summand, weights taken from the continued fraction.
/// Throws std::overflow_error if a coefficient does not fit a Weight.
Plumbing from_lens_sum(std::span<const Fraction> summands);

Chain chain_from_cf(const NegCF& cf);
NegCF cf_from_chain(const Chain& chain);

/// Replaces each chain by its Riemenschneider dual.
Plumbing dual(const Plumbing& plumbing);

GramMatrix gram(const Plumbing& plumbing);

/// Exact determinant by Bareiss fraction-free elimination.
BigInt determinant(const GramMatrix& g);

/// w'(v) = w(v) - deg(v), in vertex order.
std::vector<Weight> adjusted_weights(const Plumbing& plumbing);

}  // namespace plumblat
