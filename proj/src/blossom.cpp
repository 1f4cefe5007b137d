// Edmonds' blossom algorithm for maximum-cardinality matching, O(n^3).

#include <algorithm>
#include <queue>
#include <vector>

#include "bgcolor/structures.hpp"

namespace bgcolor {
namespace {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g), n_(g.size()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (auto [u, v] : g.edges()) {
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
  }

  Matching run() {
    // Greedy warm start; augmentation then proceeds from each free vertex.
    for (auto [u, v] : g_.edges()) {
      if (match_[idx(u)] == -1 && match_[idx(v)] == -1) {
        match_[idx(u)] = v;
        match_[idx(v)] = u;
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[idx(root)] != -1) continue;
      Vertex v = find_path(root);
      while (v != -1) {
        const Vertex pv = parent_[idx(v)];
        const Vertex ppv = match_[idx(pv)];
        match_[idx(v)] = pv;
        match_[idx(pv)] = v;
        v = ppv;
      }
    }
    Matching m;
    for (Vertex v = 0; v < n_; ++v)
      if (match_[idx(v)] > v) m.edges.emplace_back(v, match_[idx(v)]);
    return m;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(idx(n_), 0);
    for (;;) {
      a = base_[idx(a)];
      seen[idx(a)] = 1;
      if (match_[idx(a)] == -1) break;
      a = parent_[idx(match_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      blossom_[idx(base_[idx(v)])] = blossom_[idx(base_[idx(match_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  // Returns the free endpoint of an augmenting path from root, or -1.
  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex v = 0; v < n_; ++v) base_[idx(v)] = v;
    used_[idx(root)] = 1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex to : adj_[idx(v)]) {
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root || (match_[idx(to)] != -1 && parent_[idx(match_[idx(to)])] != -1)) {
          const Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = cur;
              if (!used_[idx(i)]) {
                used_[idx(i)] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] == -1) return to;
          used_[idx(match_[idx(to)])] = 1;
          q.push(match_[idx(to)]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g) { return BlossomMatcher(g).run(); }

}  // namespace bgcolor
