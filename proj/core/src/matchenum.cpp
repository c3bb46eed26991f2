#include "surftrace/matchenum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <tuple>

#include "dsu.hpp"
#include "surftrace/errors.hpp"
#include "surftrace/mixedrep.hpp"
#include "surftrace/weingarten.hpp"
#include "surftrace/wordintegral.hpp"

namespace surftrace {

namespace {

double factorial_d(int m) {
  double r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

// Validated enumeration space shared by the visitor and the tally.
struct Space {
  MatchLayout lay;
  bool star = false;
  std::vector<std::vector<Permutation>> choices;  // per generator, filter-passing
  std::vector<Permutation> pi_choices;
  uint64_t sigma_tuples = 1;
  uint64_t pi_tuples = 1;
};

Space make_space(const Word& w, int k, int l, bool star, const MatchOptions& opts) {
  if (k + l < 1) throw DomainError("matching data need k + l >= 1");
  if (!in_commutator_subgroup(w)) throw DomainError("word is not in the commutator subgroup");
  if (w.genus() != 2 && !opts.allow_general_genus)
    throw DomainError("genus " + std::to_string(w.genus()) + " needs the general-genus option");
  double cost = match_cost(w, k, l, star);
  if (cost > kMatchCostGuard && !opts.unsafe)
    throw GuardError("matching space of size " + std::to_string(static_cast<long long>(cost)) +
                     " exceeds the guard of 1e8");
  Space sp;
  sp.lay = make_layout(w, k, l);
  sp.star = star;
  for (int mf : sp.lay.m) {
    if (mf > kMaxSymDegree) throw GuardError("block size exceeds the supported permutation degree");
    std::vector<Permutation> c;
    for (auto& s : enumerate_sym(mf))
      if (passes_forbidden(s, k, l)) c.push_back(std::move(s));
    sp.sigma_tuples *= c.size();
    sp.choices.push_back(std::move(c));
  }
  sp.pi_choices = star ? enumerate_young_product(k, l) : enumerate_sym(k + l);
  for (int t = 0; t < sp.lay.num_pis(); ++t) sp.pi_tuples *= sp.pi_choices.size();
  return sp;
}

// Mixed-radix decode, first generator most significant.
void decode(uint64_t idx, const std::vector<std::vector<Permutation>>& choices, std::vector<int>& out) {
  const int F = static_cast<int>(choices.size());
  out.resize(F);
  for (int f = F - 1; f >= 0; --f) {
    uint64_t base = choices[f].size();
    out[f] = static_cast<int>(idx % base);
    idx /= base;
  }
}

void add_arcs(const MatchLayout& lay, const std::vector<const Permutation*>& sig,
              const std::vector<const Permutation*>& tau, detail::Dsu& dsu) {
  for (size_t f = 0; f < lay.plus.size(); ++f) {
    const auto& P = lay.plus[f];
    const auto& M = lay.minus[f];
    for (size_t i = 0; i < P.size(); ++i) {
      dsu.unite(MatchLayout::endpoint(P[i], 0), MatchLayout::endpoint(M[(*sig[f])(i)], 1));
      dsu.unite(MatchLayout::endpoint(P[i], 1), MatchLayout::endpoint(M[(*tau[f])(i)], 0));
    }
  }
  for (auto [a, b] : lay.w_links) dsu.unite(a, b);
}

struct TallyWorker {
  const Space& sp;
  MatchTally& out;
  detail::Dsu base;
  detail::RollbackDsu roll;
  std::vector<int> comp_of;
  // pi_edges[t][opt] = component pairs joined by pi_t = choice opt
  std::vector<std::vector<std::vector<std::pair<int, int>>>> pi_edges;
  std::vector<int64_t>* row = nullptr;
  int leaf_max = -1;

  TallyWorker(const Space& s, MatchTally& o) : sp(s), out(o) {}

  void descend(int t, int pi_index) {
    const int T = sp.lay.num_pis();
    const int nopt = static_cast<int>(sp.pi_choices.size());
    if (t == T) {
      ++(*row)[static_cast<size_t>(pi_index) * (out.cmax + 1) + roll.components];
      leaf_max = std::max(leaf_max, roll.components);
      return;
    }
    for (int o = 0; o < nopt; ++o) {
      size_t mk = roll.mark();
      for (auto [a, b] : pi_edges[t][o]) roll.unite(a, b);
      descend(t + 1, pi_index * nopt + o);
      roll.rollback(mk);
    }
  }

  void run_pair(const std::vector<int>& sd, const std::vector<int>& td) {
    const MatchLayout& lay = sp.lay;
    const int F = static_cast<int>(sd.size());
    std::vector<const Permutation*> sig(F), tau(F);
    int cls = 0, type2 = 0;
    for (int f = 0; f < F; ++f) {
      sig[f] = &sp.choices[f][sd[f]];
      tau[f] = &sp.choices[f][td[f]];
      Permutation q = (*sig[f]) * tau[f]->inverse();
      type2 += q.cycle_count();
      cls = cls * out.class_radix[f] + wg_table(lay.m[f]).index.at(q.cycle_type());
    }
    auto& r = out.counts[cls];
    if (r.empty()) r.assign(static_cast<size_t>(out.num_pi_tuples) * (out.cmax + 1), 0);
    row = &r;

    base.reset(lay.num_endpoints());
    add_arcs(lay, sig, tau, base);
    comp_of.assign(lay.num_endpoints(), -1);
    int C = 0;
    for (int e = 0; e < lay.num_endpoints(); ++e) {
      int root = base.find(e);
      if (comp_of[root] < 0) comp_of[root] = C++;
      comp_of[e] = comp_of[root];
    }
    const int T = lay.num_pis();
    pi_edges.assign(T, {});
    for (int t = 0; t < T; ++t) {
      for (const auto& pi : sp.pi_choices) {
        std::vector<std::pair<int, int>> edges;
        for (int m = 0; m < pi.degree(); ++m)
          edges.emplace_back(comp_of[lay.pi_dom[t][m]], comp_of[lay.pi_cod[t][pi(m)]]);
        pi_edges[t].push_back(std::move(edges));
      }
    }
    roll.reset(C);
    leaf_max = -1;
    descend(0, 0);
    out.total += sp.pi_tuples;
    int I = lay.num_intervals();
    out.max_chi = std::max(out.max_chi, -I + leaf_max + type2);
  }

  void run_sigma(uint64_t s_idx) {
    std::vector<int> sd, td;
    decode(s_idx, sp.choices, sd);
    if (sp.star) {
      run_pair(sd, sd);
      return;
    }
    for (uint64_t t_idx = 0; t_idx < sp.sigma_tuples; ++t_idx) {
      decode(t_idx, sp.choices, td);
      run_pair(sd, td);
    }
  }
};

MatchTally empty_tally(const Space& sp, int k, int l) {
  MatchTally t;
  t.g = sp.lay.g;
  t.k = k;
  t.l = l;
  t.star = sp.star;
  t.m = sp.lay.m;
  t.pi_choices = sp.pi_choices;
  if (sp.pi_tuples > (1u << 22)) throw GuardError("too many junction tuples to tally");
  t.num_pi_tuples = static_cast<int>(sp.pi_tuples);
  t.cmax = sp.lay.num_intervals();
  size_t ncls = 1;
  for (int mf : t.m) {
    if (mf > kMaxWgDegree) throw GuardError("Weingarten degree beyond the supported range");
    t.class_radix.push_back(static_cast<int>(wg_table(mf).classes.size()));
    ncls *= t.class_radix.back();
  }
  t.counts.assign(ncls, {});
  return t;
}

void merge_into(MatchTally& dst, MatchTally& src) {
  for (size_t c = 0; c < src.counts.size(); ++c) {
    auto& s = src.counts[c];
    if (s.empty()) continue;
    auto& d = dst.counts[c];
    if (d.empty()) {
      d = std::move(s);
    } else {
      for (size_t i = 0; i < s.size(); ++i) d[i] += s[i];
    }
  }
  dst.total += src.total;
  dst.max_chi = std::max(dst.max_chi, src.max_chi);
}

MatchTally build_tally(const Space& sp, int k, int l, int threads) {
  MatchTally result = empty_tally(sp, k, l);
  threads = std::max(1, threads);
  if (threads == 1 || sp.sigma_tuples < 2) {
    TallyWorker wk(sp, result);
    for (uint64_t s = 0; s < sp.sigma_tuples; ++s) wk.run_sigma(s);
    return result;
  }
  std::vector<MatchTally> parts(threads, empty_tally(sp, k, l));
  std::atomic<uint64_t> next{0};
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) {
    pool.emplace_back([&, i] {
      TallyWorker wk(sp, parts[i]);
      for (uint64_t s; (s = next.fetch_add(1)) < sp.sigma_tuples;) wk.run_sigma(s);
    });
  }
  for (auto& th : pool) th.join();
  for (auto& p : parts) merge_into(result, p);
  return result;
}

}  // namespace

double match_cost(const Word& w, int k, int l, bool star) {
  std::vector<int> p = w.positive_counts();
  double cost = 1;
  for (int pf : p) {
    double f = factorial_d(k + l + pf);
    cost *= star ? f : f * f;
  }
  double pi = star ? factorial_d(k) * factorial_d(l) : factorial_d(k + l);
  return cost * std::pow(pi, 2 * w.rank());
}

bool passes_forbidden(const Permutation& s, int k, int l) {
  for (int i = 0; i < k + l && i < s.degree(); ++i) {
    int j = s(i);
    if (i < k && j >= k && j < k + l) return false;
    if (i >= k && j < k) return false;
  }
  return true;
}

uint64_t enumerate_match(const Word& w, int k, int l, bool star,
                         const std::function<void(const MatchingDatum&)>& visit,
                         const MatchOptions& opts) {
  Space sp = make_space(w, k, l, star, opts);
  const int F = static_cast<int>(sp.choices.size());
  const int T = sp.lay.num_pis();
  const uint64_t npi = sp.pi_choices.size();
  MatchingDatum d;
  d.g = sp.lay.g;
  d.k = k;
  d.l = l;
  d.sigma.resize(F);
  d.tau.resize(F);
  d.pis.resize(T);
  uint64_t count = 0;
  std::vector<int> sd, td;
  for (uint64_t s = 0; s < sp.sigma_tuples; ++s) {
    decode(s, sp.choices, sd);
    for (int f = 0; f < F; ++f) d.sigma[f] = sp.choices[f][sd[f]];
    uint64_t t_begin = star ? s : 0, t_end = star ? s + 1 : sp.sigma_tuples;
    for (uint64_t t = t_begin; t < t_end; ++t) {
      decode(t, sp.choices, td);
      for (int f = 0; f < F; ++f) d.tau[f] = sp.choices[f][td[f]];
      for (uint64_t q = 0; q < sp.pi_tuples; ++q) {
        uint64_t x = q;
        for (int i = T - 1; i >= 0; --i) {
          d.pis[i] = sp.pi_choices[x % npi];
          x /= npi;
        }
        visit(d);
        ++count;
      }
    }
  }
  return count;
}

int count_N_exponent(const MatchingDatum& d, const MatchLayout& lay) {
  const int F = static_cast<int>(lay.plus.size());
  if (d.k != lay.k || d.l != lay.l || static_cast<int>(d.sigma.size()) != F ||
      static_cast<int>(d.tau.size()) != F || static_cast<int>(d.pis.size()) != lay.num_pis())
    throw DomainError("matching datum does not fit the word");
  std::vector<const Permutation*> sig(F), tau(F);
  for (int f = 0; f < F; ++f) {
    if (d.sigma[f].degree() != lay.m[f] || d.tau[f].degree() != lay.m[f])
      throw DomainError("matching datum has a wrong block size");
    sig[f] = &d.sigma[f];
    tau[f] = &d.tau[f];
  }
  detail::Dsu dsu(lay.num_endpoints());
  add_arcs(lay, sig, tau, dsu);
  for (int t = 0; t < lay.num_pis(); ++t) {
    if (d.pis[t].degree() != lay.k + lay.l) throw DomainError("junction permutation has a wrong degree");
    for (int m = 0; m < lay.k + lay.l; ++m) dsu.unite(lay.pi_dom[t][m], lay.pi_cod[t][d.pis[t](m)]);
  }
  return dsu.components;
}

int count_N_exponent(const MatchingDatum& d, const Word& w) {
  return count_N_exponent(d, make_layout(w, d.k, d.l));
}

const MatchTally& match_tally(const Word& w, int k, int l, bool star, const MatchOptions& opts) {
  using Key = std::tuple<std::string, int, int, int, bool>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<MatchTally>> cache;
  Key key{w.key(), w.rank(), k, l, star};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  Space sp = make_space(w, k, l, star, opts);
  auto tally = std::make_unique<MatchTally>(build_tally(sp, k, l, opts.threads));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(tally));
  return *it->second;
}

JResult j_from_tally(const MatchTally& tally, const MixedLabel& label) {
  label.validate();
  if (label.k() != tally.k || label.l() != tally.l) throw DomainError("label size does not match the tally");
  const GroupAlgElem& z = z_theta(label);

  // Distinct nonzero z values over one common denominator.
  std::vector<RatFuncN> zvals;
  std::vector<int> zid;
  for (const auto& pi : tally.pi_choices) {
    RatFuncN v = z.coeff(pi);
    if (v.is_zero()) {
      zid.push_back(-1);
      continue;
    }
    auto it = std::find(zvals.begin(), zvals.end(), v);
    zid.push_back(static_cast<int>(it - zvals.begin()));
    if (it == zvals.end()) zvals.push_back(v);
  }
  CommonDenominator zc = common_denominator(zvals);
  const int nz = static_cast<int>(zvals.size());
  const int T = 4 * tally.g;
  const int nopt = static_cast<int>(tally.pi_choices.size());
  const int F = static_cast<int>(tally.m.size());

  std::map<std::vector<uint8_t>, PolyN> zprod_cache;
  auto zprod = [&](const std::vector<uint8_t>& sig) -> const PolyN& {
    auto it = zprod_cache.find(sig);
    if (it != zprod_cache.end()) return it->second;
    PolyN p(1);
    for (int i = 0; i < nz; ++i)
      if (sig[i]) p *= zc.nums[i].pow(sig[i]);
    return zprod_cache.emplace(sig, std::move(p)).first->second;
  };

  // Pre-decode each pi tuple into its z signature.
  std::vector<std::vector<uint8_t>> tuple_sig(tally.num_pi_tuples);
  std::vector<char> tuple_zero(tally.num_pi_tuples, 0);
  for (int q = 0; q < tally.num_pi_tuples; ++q) {
    std::vector<uint8_t> sig(nz, 0);
    int x = q;
    for (int t = 0; t < T; ++t) {
      int id = zid[x % nopt];
      x /= nopt;
      if (id < 0) {
        tuple_zero[q] = 1;
        break;
      }
      ++sig[id];
    }
    tuple_sig[q] = std::move(sig);
  }

  PolyN num;
  const int width = tally.cmax + 1;
  for (size_t c = 0; c < tally.counts.size(); ++c) {
    const auto& row = tally.counts[c];
    if (row.empty()) continue;
    std::map<std::vector<uint8_t>, std::vector<int64_t>> by_sig;
    for (int q = 0; q < tally.num_pi_tuples; ++q) {
      if (tuple_zero[q]) continue;
      const int64_t* r = row.data() + static_cast<size_t>(q) * width;
      bool any = false;
      for (int i = 0; i < width && !any; ++i) any = r[i] != 0;
      if (!any) continue;
      auto& acc = by_sig[tuple_sig[q]];
      if (acc.empty()) acc.assign(width, 0);
      for (int i = 0; i < width; ++i) acc[i] += r[i];
    }
    if (by_sig.empty()) continue;
    PolyN inner;
    for (const auto& [sig, counts] : by_sig) {
      std::vector<Rat> cs(counts.begin(), counts.end());
      inner += zprod(sig) * PolyN(std::move(cs));
    }
    size_t x = c;
    PolyN wg(1);
    for (int f = F - 1; f >= 0; --f) {
      int ci = static_cast<int>(x % tally.class_radix[f]);
      x /= tally.class_radix[f];
      wg *= wg_table(tally.m[f]).nums[ci];
    }
    num += wg * inner;
  }
  PolyN den = zc.den.pow(T);
  for (int mf : tally.m) den *= wg_table(mf).den;
  PolyN D = dim_mixed_poly(label);

  JResult res;
  res.j = RatFuncN(num * D.pow(T), den);
  res.dj = res.j * RatFuncN(D);
  res.match_count = tally.total;
  res.max_chi = tally.max_chi;
  return res;
}

JResult j_n(const Word& w, const MixedLabel& label, bool star_only, const MatchOptions& opts) {
  label.validate();
  if (label.k() + label.l() == 0) {
    JResult res;
    res.j = haar_word_integral(w.rank(), w).value;
    res.dj = res.j;
    return res;
  }
  return j_from_tally(match_tally(w, label.k(), label.l(), star_only, opts), label);
}

Rat assemble_expected_trace(const Word& w, int max_boxes, long n0, const MatchOptions& opts) {
  if (max_boxes < 0) throw DomainError("max_boxes must be non-negative");
  if (n0 < 2 * max_boxes || n0 < 2) throw DomainError("n0 must be at least 2*max_boxes and at least 2");
  const int g = w.genus();
  if (!in_commutator_subgroup(w)) return Rat(0);
  Rat sum = 0;
  for (int b = 0; b <= max_boxes; ++b) {
    for (int k = 0; k <= b; ++k) {
      for (const auto& label : labels_with_sizes(k, b - k)) {
        JResult jr = j_n(w, label, false, opts);
        sum += dim_mixed_poly(label).eval(Rat(n0)) * jr.j.eval(n0);
      }
    }
  }
  return sum / witten_zeta_truncated(2 * g - 2, n0, max_boxes);
}

}  // namespace surftrace
