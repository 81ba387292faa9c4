#pragma once

// Embeddings of plumbing lattices into the standard diagonal lattice Z^N.
//
// An embedding assigns each vertex a row vector in Z^N with
//   row(u) . row(v) = w(u) if u = v, -1 if u, v adjacent, 0 otherwise.
// Two embeddings are identified when they differ by a signed permutation of
// the columns (an automorphism of Z^N); CanonicalForm picks one
// representative per class, independent of N.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plumblat/plumbing.hpp"

namespace plumblat {

/// Dense row-major integer matrix; one row per vertex in embedding use.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Throws std::invalid_argument on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const int> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<std::vector<int>> to_rows() const;

  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> data_;
};

std::int64_t dot(std::span<const int> a, std::span<const int> b);

/// Representative of an embedding up to signed column permutation: zero
/// columns dropped, each column's first nonzero entry made positive, columns
/// sorted lexicographically (top entry first).
class CanonicalForm {
 public:
  static CanonicalForm of(const IntMatrix& m);

  const IntMatrix& matrix() const { return m_; }
  /// Number of columns used, i.e. the smallest N this embedding lives in.
  std::size_t dimension() const { return m_.cols(); }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  IntMatrix m_;
};

/// True when the rows realize the Gram pairing of the plumbing.
bool realizes(const IntMatrix& rows, const Plumbing& plumbing);

/// Column indices where the row is nonzero.
std::vector<std::size_t> support(std::span<const int> row);

/// |supp(u) & supp(v)| is w(v), 1 or 0 for equal, adjacent and other pairs.
bool is_standard(const IntMatrix& rows, const Plumbing& plumbing);

/// The same table restricted to pairs of marked vertices (flat indices).
bool restricts_standardly(const IntMatrix& rows, const Plumbing& plumbing,
                          std::span<const std::size_t> marked);

/// Sum of weights minus number of edges: the dimension a standard embedding
/// needs.
std::int64_t standard_dimension(const Plumbing& plumbing);

/// Explicit standard embedding in Z^{standard_dimension}: adjacent vertices
/// share one column (+1 on the left vertex, -1 on the right), every vertex
/// fills the rest of its norm with private +1 columns.
IntMatrix standard_embedding(const Plumbing& plumbing);

struct SearchOptions {
  std::uint64_t node_budget = 100'000'000;
  unsigned workers = 1;
};

enum class SearchStatus { complete, budget_exceeded };

struct EnumerationResult {
  SearchStatus status = SearchStatus::complete;
  /// Sorted, duplicate-free. Partial when the budget ran out.
  std::vector<CanonicalForm> embeddings;
  std::uint64_t nodes = 0;
};

/// All embeddings of the plumbing into Z^n up to automorphism.
///
/// Depth-first over vertices in the public order. Each row is built column
/// by column over the columns already touched, pruned by the remaining norm
/// and a Cauchy-Schwarz bound on every pairing still to be met; whatever norm
/// is left goes onto fresh columns as a non-increasing block of positive
/// entries. Touched columns that agree on all placed rows are
/// interchangeable, so the new row must be non-increasing across each such
/// class. Throws std::invalid_argument when n == 0.
EnumerationResult enumerate_embeddings(const Plumbing& plumbing, std::size_t n,
                                       const SearchOptions& options = {});

/// Every embedding touches at most sum w(v) columns, so this ambient dimension
/// sees every class.
std::size_t max_ambient_dimension(const Plumbing& plumbing);

enum class Rigidity { rigid, not_rigid, budget_exceeded };

std::string to_string(Rigidity r);

struct RigidityVerdict {
  Rigidity kind = Rigidity::rigid;
  /// A non-standard embedding (or non-standard restriction) when not rigid.
  std::optional<CanonicalForm> witness;
  std::size_t embeddings = 0;
  std::uint64_t nodes = 0;
};

RigidityVerdict is_rigid(const Plumbing& plumbing,
                         const SearchOptions& options = {});

/// Relative rigidity: every embedding of the whole plumbing restricts to a
/// standard embedding of the marked vertices.
RigidityVerdict is_subgraph_rigid(const Plumbing& plumbing,
                                  std::span<const VertexRef> marked,
                                  const SearchOptions& options = {});

struct DimensionResult {
  SearchStatus status = SearchStatus::complete;
  std::size_t dimension = 0;
};

/// Smallest N such that the plumbing embeds in Z^N.
DimensionResult minimal_embedding_dimension(const Plumbing& plumbing,
                                            const SearchOptions& options = {});

}  // namespace plumblat
