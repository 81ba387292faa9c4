#include "plumblat/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace plumblat {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("matrix rows have different lengths");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<int>> IntMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  return out;
}

std::int64_t dot(std::span<const int> a, std::span<const int> b) {
  std::int64_t s = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += std::int64_t{a[i]} * b[i];
  return s;
}

CanonicalForm CanonicalForm::of(const IntMatrix& m) {
  std::vector<std::vector<int>> columns;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<int> col(m.rows());
    int sign = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      col[r] = m(r, c);
      if (sign == 0 && col[r] != 0) sign = col[r] > 0 ? 1 : -1;
    }
    if (sign == 0) continue;
    if (sign < 0) {
      for (int& x : col) x = -x;
    }
    columns.push_back(std::move(col));
  }
  std::sort(columns.begin(), columns.end());
  CanonicalForm form;
  form.m_ = IntMatrix(m.rows(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) form.m_(r, c) = columns[c][r];
  }
  return form;
}

bool realizes(const IntMatrix& rows, const Plumbing& plumbing) {
  if (rows.rows() != plumbing.vertex_count()) return false;
  for (std::size_t u = 0; u < rows.rows(); ++u) {
    for (std::size_t v = u; v < rows.rows(); ++v) {
      if (dot(rows.row(u), rows.row(v)) != plumbing.pairing(u, v)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> support(std::span<const int> row) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0) out.push_back(c);
  }
  return out;
}

namespace {

std::int64_t support_overlap(std::span<const int> a, std::span<const int> b) {
  std::int64_t n = 0;
  for (std::size_t c = 0; c < a.size(); ++c) n += (a[c] != 0 && b[c] != 0);
  return n;
}

bool standard_on(const IntMatrix& rows, const Plumbing& plumbing,
                 std::span<const std::size_t> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i; j < vertices.size(); ++j) {
      const std::size_t u = vertices[i];
      const std::size_t v = vertices[j];
      const std::int64_t expected =
          u == v ? plumbing.weight(u) : (plumbing.adjacent(u, v) ? 1 : 0);
      if (support_overlap(rows.row(u), rows.row(v)) != expected) return false;
    }
  }
  return true;
}

}  // namespace

bool is_standard(const IntMatrix& rows, const Plumbing& plumbing) {
  std::vector<std::size_t> all(plumbing.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  return restricts_standardly(rows, plumbing, all);
}

bool restricts_standardly(const IntMatrix& rows, const Plumbing& plumbing,
                          std::span<const std::size_t> marked) {
  if (rows.rows() != plumbing.vertex_count()) {
    throw std::invalid_argument("embedding has wrong number of rows");
  }
  return standard_on(rows, plumbing, marked);
}

std::int64_t standard_dimension(const Plumbing& plumbing) {
  return plumbing.weight_sum() - static_cast<std::int64_t>(plumbing.edge_count());
}

IntMatrix standard_embedding(const Plumbing& plumbing) {
  IntMatrix m(plumbing.vertex_count(),
              static_cast<std::size_t>(standard_dimension(plumbing)));
  std::size_t col = 0;
  for (std::size_t v = 0; v < plumbing.vertex_count(); ++v) {
    const VertexRef r = plumbing.ref(v);
    const bool has_next = r.pos + 1 < plumbing.chains()[r.chain].size();
    // Shared column with the left neighbour was opened by that neighbour.
    if (r.pos > 0) m(v, col - 1) = -1;
    const Weight own = plumbing.weight(v) - plumbing.degree(v);
    for (Weight i = 0; i < own; ++i) m(v, col++) = 1;
    if (has_next) m(v, col++) = 1;
  }
  return m;
}

std::size_t max_ambient_dimension(const Plumbing& plumbing) {
  return static_cast<std::size_t>(plumbing.weight_sum());
}

namespace {

// Search state that a worker can pick up: the rows placed so far and the
// column classes they induce.
struct Frontier {
  std::vector<std::vector<int>> rows;
  std::size_t touched = 0;
  std::vector<char> class_start;
};

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}

  // Returns false once the shared budget is spent.
  bool tick(std::uint64_t& local) {
    if (++local % kBatch == 0) {
      const auto total = shared_.fetch_add(kBatch, std::memory_order_relaxed);
      if (total + kBatch > budget_) exceeded_.store(true);
    }
    return !exceeded_.load(std::memory_order_relaxed);
  }
  void flush(std::uint64_t local) {
    const auto rest = local % kBatch;
    const auto total = shared_.fetch_add(rest, std::memory_order_relaxed);
    if (total + rest > budget_) exceeded_.store(true);
  }
  bool exceeded() const { return exceeded_.load(); }
  std::uint64_t total() const { return shared_.load(); }

 private:
  static constexpr std::uint64_t kBatch = 1024;
  std::uint64_t budget_;
  std::atomic<std::uint64_t> shared_{0};
  std::atomic<bool> exceeded_{false};
};

class Search {
 public:
  Search(const Plumbing& plumbing, std::size_t max_cols, NodeCounter& counter)
      : plumbing_(plumbing),
        n_(plumbing.vertex_count()),
        max_cols_(max_cols),
        counter_(counter) {}

  // Runs from `start` down to depth `stop`; states reaching `stop` < n are
  // stored as frontier instead of being expanded.
  void run(const Frontier& start, std::size_t stop) {
    rows_ = start.rows;
    rows_.resize(n_, std::vector<int>(max_cols_, 0));
    touched_ = start.touched;
    class_start_ = start.class_start;
    class_start_.resize(max_cols_, 1);
    stop_ = stop;
    place(start.rows.size());
    counter_.flush(local_nodes_);
  }

  std::set<CanonicalForm>& found() { return found_; }
  std::vector<Frontier>& frontier() { return frontier_; }

 private:
  void place(std::size_t k) {
    if (!counter_.tick(local_nodes_)) return;
    if (k == n_) {
      record();
      return;
    }
    if (k == stop_) {
      Frontier f;
      f.rows.assign(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(k));
      f.touched = touched_;
      f.class_start = class_start_;
      frontier_.push_back(std::move(f));
      return;
    }
    // Only rows with something on the touched columns constrain the new one.
    targets_[k].clear();
    for (std::size_t u = 0; u < k; ++u) {
      Constraint con{u, plumbing_.pairing(u, k), {}};
      con.suffix.assign(touched_ + 1, 0);
      for (std::size_t c = touched_; c-- > 0;) {
        con.suffix[c] = con.suffix[c + 1] +
                        std::int64_t{rows_[u][c]} * rows_[u][c];
      }
      targets_[k].push_back(std::move(con));
    }
    dots_[k].assign(k, 0);
    fill(k, 0, plumbing_.weight(k));
  }

  struct Constraint {
    std::size_t row;
    std::int64_t target;
    std::vector<std::int64_t> suffix;  // sum of squares of row from column c on
  };

  void fill(std::size_t k, std::size_t c, std::int64_t rem) {
    if (!counter_.tick(local_nodes_)) return;
    auto& dots = dots_[k];
    const auto& cons = targets_[k];
    for (std::size_t i = 0; i < cons.size(); ++i) {
      const std::int64_t gap = cons[i].target - dots[i];
      if (gap != 0 && gap * gap > rem * cons[i].suffix[c]) return;
    }
    auto& row = rows_[k];
    if (c == touched_ || rem == 0) {
      if (c < touched_) {
        // Nothing left to spend: the rest of the touched columns stay zero.
        if (!class_start_[c] && row[c - 1] < 0) return;
      }
      for (std::size_t i = 0; i < cons.size(); ++i) {
        if (dots[i] != cons[i].target) return;
      }
      spread(k, rem, touched_, rem);
      return;
    }
    int hi = isqrt(rem);
    const int lo = -hi;
    if (!class_start_[c]) hi = std::min(hi, row[c - 1]);
    for (int x = hi; x >= lo; --x) {
      row[c] = x;
      for (std::size_t i = 0; i < cons.size(); ++i) {
        dots[i] += std::int64_t{x} * rows_[cons[i].row][c];
      }
      fill(k, c + 1, rem - std::int64_t{x} * x);
      for (std::size_t i = 0; i < cons.size(); ++i) {
        dots[i] -= std::int64_t{x} * rows_[cons[i].row][c];
      }
    }
    row[c] = 0;
  }

  // Places the remaining norm on fresh columns as a non-increasing run of
  // positive entries starting at column `col`.
  void spread(std::size_t k, std::int64_t rem, std::size_t col, std::int64_t cap) {
    if (rem == 0) {
      descend(k, col);
      return;
    }
    if (col >= max_cols_) return;
    auto& row = rows_[k];
    for (int x = static_cast<int>(std::min<std::int64_t>(isqrt(rem), cap)); x >= 1;
         --x) {
      row[col] = x;
      spread(k, rem - std::int64_t{x} * x, col + 1, x);
    }
    row[col] = 0;
  }

  void descend(std::size_t k, std::size_t new_touched) {
    const auto& row = rows_[k];
    const std::size_t old_touched = touched_;
    const auto saved = class_start_;
    for (std::size_t c = 1; c < old_touched; ++c) {
      if (row[c] != row[c - 1]) class_start_[c] = 1;
    }
    for (std::size_t c = old_touched; c < new_touched; ++c) {
      class_start_[c] = c == old_touched || row[c] != row[c - 1];
    }
    touched_ = new_touched;
    place(k + 1);
    touched_ = old_touched;
    class_start_ = saved;
  }

  void record() {
    IntMatrix m(n_, touched_);
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < touched_; ++c) m(r, c) = rows_[r][c];
    }
    found_.insert(CanonicalForm::of(m));
  }

  static int isqrt(std::int64_t v) {
    int r = 0;
    while (std::int64_t{r + 1} * (r + 1) <= v) ++r;
    return r;
  }

  const Plumbing& plumbing_;
  std::size_t n_;
  std::size_t max_cols_;
  NodeCounter& counter_;
  std::uint64_t local_nodes_ = 0;
  std::size_t stop_ = 0;

  std::vector<std::vector<int>> rows_;
  std::size_t touched_ = 0;
  std::vector<char> class_start_;
  std::vector<std::vector<Constraint>> targets_ =
      std::vector<std::vector<Constraint>>(n_);
  std::vector<std::vector<std::int64_t>> dots_ =
      std::vector<std::vector<std::int64_t>>(n_);

  std::set<CanonicalForm> found_;
  std::vector<Frontier> frontier_;
};

}  // namespace

EnumerationResult enumerate_embeddings(const Plumbing& plumbing, std::size_t n,
                                       const SearchOptions& options) {
  if (n == 0) throw std::invalid_argument("ambient dimension must be positive");
  NodeCounter counter(options.node_budget);
  const unsigned workers = std::max(1u, options.workers);

  std::set<CanonicalForm> found;
  if (workers == 1) {
    Search search(plumbing, n, counter);
    search.run(Frontier{}, plumbing.vertex_count());
    found = std::move(search.found());
  } else {
    // Split after the first two rows; workers take frontier states round robin.
    const std::size_t split = std::min<std::size_t>(2, plumbing.vertex_count());
    Search seed(plumbing, n, counter);
    seed.run(Frontier{}, split);
    found = std::move(seed.found());
    const auto frontier = std::move(seed.frontier());
    std::vector<std::set<CanonicalForm>> partial(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < frontier.size(); i += workers) {
          Search search(plumbing, n, counter);
          search.run(frontier[i], plumbing.vertex_count());
          partial[w].merge(search.found());
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& p : partial) found.merge(p);
  }

  EnumerationResult result;
  result.status = counter.exceeded() ? SearchStatus::budget_exceeded
                                     : SearchStatus::complete;
  result.embeddings.assign(found.begin(), found.end());
  result.nodes = counter.total();
  return result;
}

std::string to_string(Rigidity r) {
  switch (r) {
    case Rigidity::rigid:
      return "rigid";
    case Rigidity::not_rigid:
      return "not_rigid";
    case Rigidity::budget_exceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

namespace {

RigidityVerdict rigidity_on(const Plumbing& plumbing,
                            std::span<const std::size_t> marked,
                            const SearchOptions& options) {
  RigidityVerdict verdict;
  if (marked.empty()) return verdict;
  const auto result =
      enumerate_embeddings(plumbing, max_ambient_dimension(plumbing), options);
  verdict.nodes = result.nodes;
  verdict.embeddings = result.embeddings.size();
  if (result.status == SearchStatus::budget_exceeded) {
    verdict.kind = Rigidity::budget_exceeded;
    return verdict;
  }
  for (const auto& form : result.embeddings) {
    if (!restricts_standardly(form.matrix(), plumbing, marked)) {
      verdict.kind = Rigidity::not_rigid;
      verdict.witness = form;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace

RigidityVerdict is_rigid(const Plumbing& plumbing, const SearchOptions& options) {
  std::vector<std::size_t> all(plumbing.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  return rigidity_on(plumbing, all, options);
}

RigidityVerdict is_subgraph_rigid(const Plumbing& plumbing,
                                  std::span<const VertexRef> marked,
                                  const SearchOptions& options) {
  std::vector<std::size_t> indices;
  for (const auto& v : marked) indices.push_back(plumbing.index(v));
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return rigidity_on(plumbing, indices, options);
}

DimensionResult minimal_embedding_dimension(const Plumbing& plumbing,
                                            const SearchOptions& options) {
  const auto result =
      enumerate_embeddings(plumbing, max_ambient_dimension(plumbing), options);
  DimensionResult out;
  if (result.status == SearchStatus::budget_exceeded) {
    out.status = SearchStatus::budget_exceeded;
    return out;
  }
  out.dimension = max_ambient_dimension(plumbing);
  for (const auto& form : result.embeddings) {
    out.dimension = std::min(out.dimension, form.dimension());
  }
  return out;
}

}  // namespace plumblat
