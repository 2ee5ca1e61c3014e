#include "graphevo/sparse_graph.hpp"

#include <algorithm>

namespace graphevo {

std::vector<std::pair<int32_t, int32_t>> SparseGraph::edges() const {
  std::vector<std::pair<int32_t, int32_t>> out;
  out.reserve(edges_.size());
  for (uint64_t k : edges_) {
    out.emplace_back(static_cast<int32_t>(k >> 32),
                     static_cast<int32_t>(k & 0xFFFFFFFFULL));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int32_t>> SparseGraph::adjacency() const {
  std::vector<std::vector<int32_t>> adj(static_cast<size_t>(n_));
  for (size_t u = 0; u < adj.size(); ++u) {
    adj[u].reserve(static_cast<size_t>(degrees_[u]));
  }
  for (auto [u, v] : edges()) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  return adj;
}

}  // namespace graphevo
