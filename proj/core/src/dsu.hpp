#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace surftrace::detail {

// Union-find with path compression.
struct Dsu {
  std::vector<int> parent;
  int components = 0;

  explicit Dsu(int n = 0) { reset(n); }
  void reset(int n) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
    components = n;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    --components;
    return true;
  }
};

// Union by size without compression, so merges can be undone in LIFO order.
struct RollbackDsu {
  std::vector<int> parent, size;
  std::vector<int> history;  // absorbed roots
  int components = 0;

  void reset(int n) {
    parent.resize(n);
    size.assign(n, 1);
    std::iota(parent.begin(), parent.end(), 0);
    history.clear();
    components = n;
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] > size[b]) std::swap(a, b);
    parent[a] = b;
    size[b] += size[a];
    history.push_back(a);
    --components;
  }
  size_t mark() const { return history.size(); }
  void rollback(size_t m) {
    while (history.size() > m) {
      int a = history.back();
      history.pop_back();
      int b = parent[a];
      size[b] -= size[a];
      parent[a] = a;
      ++components;
    }
  }
};

}  // namespace surftrace::detail
