#ifndef GRAPHEVO_SPARSE_GRAPH_HPP
#define GRAPHEVO_SPARSE_GRAPH_HPP

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

namespace graphevo {

/// Undirected graph stored as a dictionary-of-keys edge set. Only the sorted
/// pair (u, v) with u < v is kept, which enforces symmetry and excludes
/// self-loops. All mutating and querying operations tolerate arbitrary
/// indices: writes outside [0, node_count) or on the diagonal do nothing,
/// reads return false/0.
class SparseGraph {
 public:
  SparseGraph() = default;
  explicit SparseGraph(int64_t node_count)
      : n_(node_count < 0 ? 0 : node_count),
        degrees_(static_cast<size_t>(n_), 0) {}

  int64_t node_count() const { return n_; }
  int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }

  void add_edge(int64_t u, int64_t v) {
    if (!valid_pair(u, v)) return;
    if (edges_.insert(key(u, v)).second) {
      ++degrees_[static_cast<size_t>(u)];
      ++degrees_[static_cast<size_t>(v)];
    }
  }

  void remove_edge(int64_t u, int64_t v) {
    if (!valid_pair(u, v)) return;
    if (edges_.erase(key(u, v)) > 0) {
      --degrees_[static_cast<size_t>(u)];
      --degrees_[static_cast<size_t>(v)];
    }
  }

  void flip_edge(int64_t u, int64_t v) {
    if (!valid_pair(u, v)) return;
    if (edges_.contains(key(u, v))) {
      remove_edge(u, v);
    } else {
      add_edge(u, v);
    }
  }

  bool is_edge(int64_t u, int64_t v) const {
    if (!valid_pair(u, v)) return false;
    return edges_.contains(key(u, v));
  }

  /// Number of stored pairs containing u; 0 for out-of-range u.
  int64_t degree(int64_t u) const {
    if (u < 0 || u >= n_) return 0;
    return degrees_[static_cast<size_t>(u)];
  }

  int64_t max_degree() const {
    int64_t m = 0;
    for (int64_t d : degrees_) m = d > m ? d : m;
    return m;
  }

  /// Edge list sorted lexicographically, each pair with u < v. Deterministic
  /// regardless of hash-set iteration order.
  std::vector<std::pair<int32_t, int32_t>> edges() const;

  /// Neighbor lists, each sorted ascending.
  std::vector<std::vector<int32_t>> adjacency() const;

  /// Identical node count and edge set (label-sensitive, not isomorphism).
  bool operator==(const SparseGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  static uint64_t key(int64_t u, int64_t v) {
    uint64_t a = static_cast<uint64_t>(u < v ? u : v);
    uint64_t b = static_cast<uint64_t>(u < v ? v : u);
    return (a << 32) | b;
  }

  bool valid_pair(int64_t u, int64_t v) const {
    return u >= 0 && v >= 0 && u < n_ && v < n_ && u != v;
  }

  int64_t n_ = 0;
  std::unordered_set<uint64_t> edges_;
  std::vector<int64_t> degrees_;
};

}  // namespace graphevo

#endif
