#include "surftrace/wordintegral.hpp"

#include <map>

#include "dsu.hpp"
#include "surftrace/errors.hpp"
#include "surftrace/symgroup.hpp"
#include "surftrace/weingarten.hpp"

namespace surftrace {

namespace {

struct GenData {
  std::vector<int> plus_pos, minus_pos;
  std::vector<Permutation> perms;
  const WgTable* wg = nullptr;
};

}  // namespace

WordIntegralResult haar_word_integral(int r, const Word& w) {
  for (const auto& x : w.letters())
    if (x.gen >= r) throw DomainError("word uses a generator beyond r");
  if (w.size() > kMaxWordIntegralLength)
    throw GuardError("word length " + std::to_string(w.size()) + " exceeds the guard of " +
                     std::to_string(kMaxWordIntegralLength));
  WordIntegralResult res;
  if (w.empty()) {
    res.value = RatFuncN::var();
  } else {
    for (int s : w.exponent_sums())
      if (s != 0) {
        res.normalized = RatFuncN();
        return res;
      }
    // Joint j sits between letter j-1 and letter j. A positive letter at j reads entry
    // (u_j, u_{j+1}) of its matrix; a negative one reads the conjugate of entry (u_{j+1}, u_j).
    const int L = w.size();
    std::vector<GenData> gens;
    for (int f = 0; f < r; ++f) {
      GenData gd;
      for (int j = 0; j < L; ++j)
        if (w[j].gen == f) (w[j].sign > 0 ? gd.plus_pos : gd.minus_pos).push_back(j);
      if (gd.plus_pos.empty()) continue;
      int p = static_cast<int>(gd.plus_pos.size());
      gd.perms = enumerate_sym(p);
      gd.wg = &wg_table(p);
      gens.push_back(std::move(gd));
    }
    const int G = static_cast<int>(gens.size());
    // tally[class tuple][joint components]
    std::map<std::vector<int>, std::vector<int64_t>> tally;
    std::vector<int> cls(G);
    detail::RollbackDsu dsu;
    dsu.reset(L);
    std::vector<int> sig(G);

    auto rec = [&](auto&& self, int gi) -> void {
      if (gi == G) {
        auto& row = tally[cls];
        if (row.empty()) row.assign(L + 1, 0);
        ++row[dsu.components];
        return;
      }
      const GenData& gd = gens[gi];
      const int p = static_cast<int>(gd.plus_pos.size());
      for (const auto& s : gd.perms) {
        size_t m1 = dsu.mark();
        for (int a = 0; a < p; ++a) dsu.unite(gd.plus_pos[a], (gd.minus_pos[s(a)] + 1) % L);
        for (const auto& t : gd.perms) {
          size_t m2 = dsu.mark();
          for (int a = 0; a < p; ++a) dsu.unite((gd.plus_pos[a] + 1) % L, gd.minus_pos[t(a)]);
          cls[gi] = gd.wg->index.at((s * t.inverse()).cycle_type());
          self(self, gi + 1);
          dsu.rollback(m2);
        }
        dsu.rollback(m1);
      }
    };
    rec(rec, 0);

    PolyN num;
    PolyN den(1);
    for (const auto& gd : gens) den *= gd.wg->den;
    for (const auto& [key, row] : tally) {
      PolyN term(1);
      for (int gi = 0; gi < G; ++gi) term *= gens[gi].wg->nums[key[gi]];
      std::vector<Rat> cs(row.begin(), row.end());
      num += term * PolyN(std::move(cs));
    }
    res.value = RatFuncN(num, den);
  }
  res.normalized = res.value / RatFuncN::var();
  res.degree = res.value.degree();
  return res;
}

RatFuncN normalized_trace(int r, const Word& w) { return haar_word_integral(r, w).normalized; }

}  // namespace surftrace
