#pragma once

// Orthogonal complements of embedded plumbing lattices.
//
// If the dual plumbing of p/q is embedded standardly in Z^N, the vectors of
// Z^N orthogonal to its image form a lattice isometric to the canonical
// plumbing lattice of p/q. The helpers below compute that complement exactly
// and decide the isometry by finding a chain basis inside it.

#include <cstdint>
#include <vector>

#include "plumblat/contfrac.hpp"
#include "plumblat/lattice.hpp"
#include "plumblat/plumbing.hpp"

namespace plumblat {

using IntVector = std::vector<std::int64_t>;

/// Basis (one vector per entry) of { x in Z^N : rows * x = 0 }, by unimodular
/// row reduction of [rows^T | I] over exact integers.
std::vector<IntVector> integer_kernel(const IntMatrix& rows);

/// LLL-reduced copy of a lattice basis (delta = 0.99). Vectors stay exact;
/// only the Gram-Schmidt data is floating point.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis);

/// Every nonzero lattice vector of norm at most `max_norm`, both signs.
std::vector<IntVector> short_vectors(const std::vector<IntVector>& basis,
                                     std::int64_t max_norm);

/// Gram matrix of a list of vectors.
GramMatrix gram_of(const std::vector<IntVector>& vectors);

/// True if the lattice spanned by `basis` is isometric to the Gram lattice of
/// the chain: same rank, same determinant, and a chain of vectors with the
/// right pairings exists inside it.
bool is_isometric_to_chain(const std::vector<IntVector>& basis,
                           const Chain& chain);

/// Complement of the standard embedding of the dual plumbing of p/q,
/// compared against the canonical chain of p/q.
bool orthogonal_complement_check(const Fraction& f);

}  // namespace plumblat
