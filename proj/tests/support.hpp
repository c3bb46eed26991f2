#pragma once

// Brute-force helpers shared by the unit tests and the acceptance runner.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "surftrace/layout.hpp"
#include "surftrace/matchenum.hpp"

namespace testsupport {

// Counts assignments of indices in [0,n) to every interval endpoint that satisfy all the
// Kronecker deltas of one matching datum. Plain backtracking, no union-find.
inline uint64_t brute_index_count(const surftrace::MatchingDatum& d,
                                  const surftrace::MatchLayout& lay, int n) {
  using surftrace::MatchLayout;
  const int V = lay.num_endpoints();
  std::vector<std::vector<int>> adj(V);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (size_t f = 0; f < lay.plus.size(); ++f)
    for (size_t i = 0; i < lay.plus[f].size(); ++i) {
      link(MatchLayout::endpoint(lay.plus[f][i], 0), MatchLayout::endpoint(lay.minus[f][d.sigma[f](i)], 1));
      link(MatchLayout::endpoint(lay.plus[f][i], 1), MatchLayout::endpoint(lay.minus[f][d.tau[f](i)], 0));
    }
  for (auto [a, b] : lay.w_links) link(a, b);
  for (int t = 0; t < lay.num_pis(); ++t)
    for (int m = 0; m < lay.k + lay.l; ++m) link(lay.pi_dom[t][m], lay.pi_cod[t][d.pis[t](m)]);

  // Visit order: grow from each unvisited vertex so most vertices have an earlier neighbour.
  std::vector<int> order;
  std::vector<char> seen(V, 0);
  for (int s = 0; s < V; ++s) {
    if (seen[s]) continue;
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      order.push_back(v);
      for (int u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          q.push_back(u);
        }
    }
  }
  std::vector<int> pos(V);
  for (int i = 0; i < V; ++i) pos[order[i]] = i;
  std::vector<int> val(V, -1);
  uint64_t count = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == V) {
      ++count;
      return;
    }
    int v = order[i];
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      for (int u : adj[v])
        if (pos[u] < i && val[u] != x) {
          ok = false;
          break;
        }
      if (!ok) continue;
      val[v] = x;
      self(self, i + 1);
    }
    val[v] = -1;
  };
  rec(rec, 0);
  return count;
}

// Words as strings over a..z / A..Z, with case swap as inversion.
inline char inv_char(char c) {
  return std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(c))
                                                      : static_cast<char>(std::tolower(c));
}

inline std::string free_reduce(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!out.empty() && out.back() == inv_char(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

inline std::string cyclic_canon(const std::string& s) {
  std::string w = free_reduce(s);
  while (w.size() >= 2 && w.front() == inv_char(w.back())) w = w.substr(1, w.size() - 2);
  if (w.empty()) return w;
  std::string best = w;
  for (size_t i = 1; i < w.size(); ++i) best = std::min(best, w.substr(i) + w.substr(0, i));
  return best;
}

inline std::string str_inverse(const std::string& s) {
  std::string out(s.rbegin(), s.rend());
  for (char& c : out) c = inv_char(c);
  return out;
}

// Cyclic words reachable from s by one insertion of a cyclic rotation of rel^{+-1}.
inline std::set<std::string> relator_moves(const std::string& s, const std::string& rel, size_t max_len) {
  std::set<std::string> out;
  std::vector<std::string> rots;
  for (const std::string& r : {rel, str_inverse(rel)})
    for (size_t i = 0; i < r.size(); ++i) rots.push_back(r.substr(i) + r.substr(0, i));
  const size_t cuts = std::max<size_t>(s.size(), 1);
  for (size_t c = 0; c < cuts; ++c)
    for (const auto& r : rots) {
      std::string t = cyclic_canon(s.substr(0, c) + r + s.substr(c));
      if (t.size() <= max_len) out.insert(t);
    }
  return out;
}

// True when a and b are shown conjugate in the surface group <rel> by at most `radius` relator
// insertions on each side (lengths capped at max_len).
inline bool conjugate_by_search(const std::string& a, const std::string& b, const std::string& rel,
                                int radius = 1, size_t max_len = 14) {
  auto grow = [&](const std::string& s) {
    std::set<std::string> ball{cyclic_canon(s)}, frontier = ball;
    for (int step = 0; step < radius; ++step) {
      std::set<std::string> next;
      for (const auto& x : frontier)
        for (const auto& y : relator_moves(x, rel, max_len))
          if (!ball.count(y)) next.insert(y);
      ball.insert(next.begin(), next.end());
      frontier = std::move(next);
    }
    return ball;
  };
  auto A = grow(a), B = grow(b);
  for (const auto& x : A)
    if (B.count(x)) return true;
  return false;
}

}  // namespace testsupport
