#include "surftrace/weingarten.hpp"

#include <mutex>

#include "surftrace/errors.hpp"
#include "surftrace/repdata.hpp"

namespace surftrace {

RatFuncN GroupAlgElem::coeff(const Permutation& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? RatFuncN() : it->second;
}

void GroupAlgElem::add_term(const Permutation& s, const RatFuncN& c) {
  if (s.degree() != m_) throw DomainError("group algebra degree mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupAlgElem& GroupAlgElem::operator+=(const GroupAlgElem& o) {
  if (o.m_ != m_) throw DomainError("group algebra degree mismatch");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

GroupAlgElem GroupAlgElem::scaled(const RatFuncN& c) const {
  GroupAlgElem r(m_);
  if (c.is_zero()) return r;
  for (const auto& [s, v] : terms_) r.terms_.emplace(s, v * c);
  return r;
}

GroupAlgElem operator*(const GroupAlgElem& x, const GroupAlgElem& y) {
  if (x.m_ != y.m_) throw DomainError("group algebra degree mismatch");
  std::map<Permutation, RatFuncN> acc;
  for (const auto& [a, ca] : x.terms_)
    for (const auto& [b, cb] : y.terms_) acc[a * b] += ca * cb;
  GroupAlgElem r(x.m_);
  for (auto& [s, c] : acc)
    if (!c.is_zero()) r.terms_.emplace(s, std::move(c));
  return r;
}

namespace {
std::mutex g_wg_mu;
std::map<std::pair<int, Partition>, RatFuncN> g_wg_cache;
std::map<int, WgTable> g_wg_tables;
}  // namespace

const RatFuncN& wg_class_coeff(int k, const Partition& cycle_type) {
  if (k < 0 || k > kMaxWgDegree) throw DomainError("Weingarten degree outside [0,7]");
  if (partition_size(cycle_type) != k) throw DomainError("cycle type does not match Weingarten degree");
  std::lock_guard<std::mutex> lock(g_wg_mu);
  auto key = std::make_pair(k, cycle_type);
  auto it = g_wg_cache.find(key);
  if (it != g_wg_cache.end()) return it->second;
  RatFuncN total;
  BigInt kf = factorial(k);
  for (const auto& lambda : partitions_of(k)) {
    long d = dim_irrep(lambda);
    long chi = character(lambda, cycle_type);
    if (chi == 0) continue;
    Rat c(BigInt(d) * d * chi, kf * kf);
    c.canonicalize();
    total += RatFuncN(PolyN(c), dim_un_poly(lambda));
  }
  return g_wg_cache.emplace(key, std::move(total)).first->second;
}

RatFuncN wg_coeff(int k, const Permutation& s) {
  if (s.degree() != k) throw DomainError("wg_coeff: permutation degree differs from k");
  return wg_class_coeff(k, s.cycle_type());
}

GroupAlgElem wg_element(int k) {
  if (k < 1 || k > kMaxWgDegree) throw DomainError("wg_element: k must lie in [1,7]");
  GroupAlgElem e(k);
  for (const auto& s : enumerate_sym(k)) e.add_term(s, wg_class_coeff(k, s.cycle_type()));
  return e;
}

const WgTable& wg_table(int m) {
  {
    std::lock_guard<std::mutex> lock(g_wg_mu);
    auto it = g_wg_tables.find(m);
    if (it != g_wg_tables.end()) return it->second;
  }
  WgTable t;
  t.m = m;
  t.classes = partitions_of(m);
  std::vector<RatFuncN> vals;
  for (size_t i = 0; i < t.classes.size(); ++i) {
    t.index[t.classes[i]] = static_cast<int>(i);
    vals.push_back(wg_class_coeff(m, t.classes[i]));
  }
  CommonDenominator cd = common_denominator(vals);
  t.den = std::move(cd.den);
  t.nums = std::move(cd.nums);
  std::lock_guard<std::mutex> lock(g_wg_mu);
  return g_wg_tables.emplace(m, std::move(t)).first->second;
}

Rat entry_integral(int k, const std::vector<int>& i, const std::vector<int>& j,
                   const std::vector<int>& ip, const std::vector<int>& jp, long n0) {
  if (k < 1 || k > kMaxWgDegree) throw DomainError("entry_integral: k must lie in [1,7]");
  if (n0 < k) throw DomainError("entry_integral: need n0 >= k");
  for (const auto* v : {&i, &j, &ip, &jp}) {
    if (static_cast<int>(v->size()) != k) throw DomainError("entry_integral: index tuple length != k");
    for (int x : *v)
      if (x < 1 || x > n0) throw DomainError("entry_integral: index out of range");
  }
  auto perms = enumerate_sym(k);
  auto matches = [&](const std::vector<int>& a, const std::vector<int>& b, const Permutation& s) {
    for (int t = 0; t < k; ++t)
      if (a[t] != b[s(t)]) return false;
    return true;
  };
  Rat total = 0;
  for (const auto& s : perms) {
    if (!matches(i, ip, s)) continue;
    for (const auto& t : perms) {
      if (!matches(j, jp, t)) continue;
      total += wg_class_coeff(k, (t * s.inverse()).cycle_type()).eval(n0);
    }
  }
  return total;
}

}  // namespace surftrace
