#include "surftrace/crosscheck.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "surftrace/errors.hpp"
#include "surftrace/symgroup.hpp"

namespace surftrace::crosscheck {

namespace {

// Solves G x = e_id over Q by Gauss-Jordan elimination.
std::vector<Rat> solve_identity_column(std::vector<std::vector<Rat>> G, size_t id_col) {
  const size_t N = G.size();
  std::vector<Rat> rhs(N, 0);
  rhs[id_col] = 1;
  for (size_t c = 0; c < N; ++c) {
    size_t piv = c;
    while (piv < N && G[piv][c] == 0) ++piv;
    if (piv == N) throw DomainError("Gram matrix is singular at this n");
    std::swap(G[piv], G[c]);
    std::swap(rhs[piv], rhs[c]);
    Rat inv = 1 / G[c][c];
    for (size_t j = c; j < N; ++j) G[c][j] *= inv;
    rhs[c] *= inv;
    for (size_t r = 0; r < N; ++r) {
      if (r == c || G[r][c] == 0) continue;
      Rat f = G[r][c];
      for (size_t j = c; j < N; ++j) G[r][j] -= f * G[c][j];
      rhs[r] -= f * rhs[c];
    }
  }
  return rhs;
}

int find_root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

std::vector<Rat> weingarten_gram(int m, long n0) {
  static std::mutex mu;
  static std::map<std::pair<int, long>, std::vector<Rat>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({m, n0});
    if (it != cache.end()) return it->second;
  }
  if (n0 < m) throw DomainError("Gram matrix needs n0 >= m");
  auto perms = enumerate_sym(m);
  const size_t N = perms.size();
  std::vector<std::vector<Rat>> G(N, std::vector<Rat>(N));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n0),
                    static_cast<unsigned long>((perms[i] * perms[j].inverse()).cycle_count()));
      G[i][j] = Rat(p);
    }
  // perms are in rank order, so the identity has rank 0
  std::vector<Rat> wg = solve_identity_column(std::move(G), 0);
  std::lock_guard<std::mutex> lock(mu);
  cache[{m, n0}] = wg;
  return wg;
}

Rat multitrace_integral(int r, const std::vector<Word>& words, long n0) {
  // Letters are numbered globally; joint q precedes letter q inside its own word.
  std::vector<Letter> letters;
  std::vector<int> next_joint;
  for (const auto& w : words) {
    int base = static_cast<int>(letters.size());
    for (int j = 0; j < w.size(); ++j) {
      letters.push_back(w[j]);
      next_joint.push_back(base + (j + 1) % w.size());
    }
  }
  const int L = static_cast<int>(letters.size());
  int empty_traces = 0;
  for (const auto& w : words) empty_traces += w.empty();

  struct Gen {
    std::vector<int> plus, minus;
    std::vector<Permutation> perms;
    std::vector<Rat> wg;
  };
  std::vector<Gen> gens;
  for (int f = 0; f < r; ++f) {
    Gen g;
    for (int q = 0; q < L; ++q)
      if (letters[q].gen == f) (letters[q].sign > 0 ? g.plus : g.minus).push_back(q);
    if (g.plus.size() != g.minus.size()) return Rat(0);
    if (g.plus.empty()) continue;
    int p = static_cast<int>(g.plus.size());
    g.perms = enumerate_sym(p);
    g.wg = weingarten_gram(p, n0);
    gens.push_back(std::move(g));
  }
  for (const auto& x : letters)
    if (x.gen >= r) throw DomainError("word uses a generator beyond r");

  Rat total = 0;
  std::vector<int> choice(2 * gens.size(), 0);
  const int G = static_cast<int>(gens.size());
  // odometer over (sigma_f, tau_f)
  while (true) {
    Rat weight = 1;
    std::vector<int> parent(L);
    std::iota(parent.begin(), parent.end(), 0);
    for (int gi = 0; gi < G; ++gi) {
      const Gen& g = gens[gi];
      const Permutation& s = g.perms[choice[2 * gi]];
      const Permutation& t = g.perms[choice[2 * gi + 1]];
      weight *= g.wg[(s * t.inverse()).rank()];
      for (size_t a = 0; a < g.plus.size(); ++a) {
        // row of a positive letter = row of the matched negative letter
        int x = find_root(parent, g.plus[a]);
        int y = find_root(parent, next_joint[g.minus[s(static_cast<int>(a))]]);
        parent[x] = y;
        x = find_root(parent, next_joint[g.plus[a]]);
        y = find_root(parent, g.minus[t(static_cast<int>(a))]);
        parent[x] = y;
      }
    }
    int loops = empty_traces;
    for (int q = 0; q < L; ++q) loops += find_root(parent, q) == q;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n0), static_cast<unsigned long>(loops));
    total += weight * Rat(p);

    int pos = 0;
    while (pos < 2 * G) {
      if (++choice[pos] < static_cast<int>(gens[pos / 2].perms.size())) break;
      choice[pos++] = 0;
    }
    if (pos == 2 * G) break;
  }
  return total;
}

Rat j_oracle(const Word& w, const MixedLabel& label, long n0) {
  label.validate();
  const int r = w.rank();
  const Word R = relator(w.genus());
  auto power = [&](int e) {
    Word out(r);
    Word base = e > 0 ? R : R.inverse();
    for (int i = 0; i < std::abs(e); ++i) out = out * base;
    return out;
  };
  if (label.k() + label.l() == 0) return multitrace_integral(r, {w}, n0);
  if (label.mu == Partition{1} && label.nu == Partition{1}) {
    return multitrace_integral(r, {w, R, R.inverse()}, n0) - multitrace_integral(r, {w}, n0);
  }
  if (label.k() > 0 && label.l() > 0) throw DomainError("oracle supports [mu,0], [0,nu] and [(1),(1)] only");
  const Partition& lam = label.k() > 0 ? label.mu : label.nu;
  const int sign = label.k() > 0 ? 1 : -1;
  Rat total = 0;
  for (const auto& rho : partitions_of(partition_size(lam))) {
    long chi = character(lam, rho);
    if (chi == 0) continue;
    std::vector<Word> words{w};
    for (int part : rho) words.push_back(power(sign * part));
    total += Rat(chi) / Rat(centralizer_order(rho)) * multitrace_integral(r, words, n0);
  }
  return total;
}

}  // namespace surftrace::crosscheck
