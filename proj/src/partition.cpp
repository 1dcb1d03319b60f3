#include "epikit/partition.hpp"

#include <algorithm>
#include <numeric>

namespace epikit {

namespace {

// Plain union-find over 0..n-1.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

}  // namespace

void Partition::normalize() {
  int max_id = -1;
  for (int b : block_of_) max_id = std::max(max_id, b);
  std::vector<int> remap(max_id + 1, -1);
  int next = 0;
  for (int& b : block_of_) {
    if (remap[b] == -1) remap[b] = next++;
    b = remap[b];
  }
  block_count_ = next;
}

Partition Partition::identity(int n) {
  Partition p;
  p.block_of_.resize(n);
  std::iota(p.block_of_.begin(), p.block_of_.end(), 0);
  p.block_count_ = n;
  return p;
}

Partition Partition::single_block(int n) {
  Partition p;
  p.block_of_.assign(n, 0);
  p.block_count_ = n > 0 ? 1 : 0;
  return p;
}

Partition Partition::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(n);
  for (const auto& [a, b] : pairs) uf.unite(a, b);
  Partition p;
  p.block_of_.resize(n);
  for (int i = 0; i < n; ++i) p.block_of_[i] = uf.find(i);
  p.normalize();
  return p;
}

Partition Partition::from_block_of(std::vector<int> raw) {
  Partition p;
  p.block_of_ = std::move(raw);
  p.normalize();
  return p;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(block_count_);
  for (int i = 0; i < size(); ++i) out[block_of_[i]].push_back(i);
  return out;
}

Partition closure_of_relation(int n, const std::set<std::pair<int, int>>& rel,
                              bool* was_equivalence) {
  std::vector<std::pair<int, int>> pairs(rel.begin(), rel.end());
  Partition p = Partition::from_pairs(n, pairs);
  if (was_equivalence != nullptr) {
    bool eq = true;
    for (int i = 0; i < n && eq; ++i) {
      for (int j = 0; j < n && eq; ++j) {
        const bool related = rel.count({i, j}) > 0;
        if (related != p.same_block(i, j)) eq = false;
      }
    }
    *was_equivalence = eq;
  }
  return p;
}

}  // namespace epikit
