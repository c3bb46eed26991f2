#include "surftrace/mixedrep.hpp"

#include <mutex>

#include "surftrace/errors.hpp"

namespace surftrace {

namespace {

constexpr int kMaxThetaSize = 6;
constexpr int kMaxZSize = 5;

using RatElem = std::map<Permutation, Rat>;

RatElem convolve(const RatElem& x, const RatElem& y) {
  RatElem r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r[a * b] += ca * cb;
  for (auto it = r.begin(); it != r.end();)
    it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

// (d/k!)^2 sum over cosets s S_lambda of (sum_{t in S_lambda} chi(s t))^2
Rat one_sided_norm(const Partition& lambda) {
  int k = partition_size(lambda);
  if (k == 0) return Rat(1);
  auto sub = enumerate_block_subgroup(k, 0, lambda);
  BigInt acc = 0;
  for (const auto& s : enumerate_sym(k)) {
    long inner = 0;
    for (const auto& t : sub) inner += character(lambda, (s * t).cycle_type());
    acc += BigInt(inner) * inner;
  }
  Rat d(BigInt(dim_irrep(lambda)), factorial(k));
  d.canonicalize();
  Rat cosets(acc, BigInt(static_cast<long>(sub.size())));
  cosets.canonicalize();
  return d * d * cosets;
}

RatElem p_rat(const MixedLabel& label) {
  int k = label.k(), l = label.l();
  Rat scale(BigInt(dim_irrep(label.mu) * dim_irrep(label.nu)), factorial(k) * factorial(l));
  scale.canonicalize();
  RatElem p;
  for (const auto& s : enumerate_young_product(k, l)) {
    std::vector<int> a(k), b(l);
    for (int i = 0; i < k; ++i) a[i] = s(i) + 1;
    for (int i = 0; i < l; ++i) b[i] = s(k + i) - k + 1;
    long chi = character(label.mu, Permutation::from_images(a).cycle_type()) *
               character(label.nu, Permutation::from_images(b).cycle_type());
    if (chi != 0) p[s] = scale * chi;
  }
  return p;
}

void check_size(const MixedLabel& label, int max) {
  label.validate();
  if (label.k() + label.l() > max)
    throw DomainError("label " + label.to_string() + " exceeds size bound " + std::to_string(max));
}

}  // namespace

std::vector<Permutation> young_subgroup(const MixedLabel& label) {
  std::vector<int> blocks(label.mu.begin(), label.mu.end());
  blocks.insert(blocks.end(), label.nu.begin(), label.nu.end());
  return enumerate_block_subgroup(label.k() + label.l(), 0, blocks);
}

Rat theta_norm_sq(const MixedLabel& label) {
  check_size(label, kMaxThetaSize);
  return one_sided_norm(label.mu) * one_sided_norm(label.nu);
}

GroupAlgElem p_mu_tensor_nu(const MixedLabel& label) {
  check_size(label, kMaxThetaSize);
  GroupAlgElem e(label.k() + label.l());
  for (const auto& [s, c] : p_rat(label)) e.add_term(s, RatFuncN(c));
  return e;
}

const GroupAlgElem& z_theta(const MixedLabel& label) {
  label.validate();
  int m = label.k() + label.l();
  if (m == 0) throw DomainError("z_theta is not defined for the empty label");
  check_size(label, kMaxZSize);
  static std::mutex mu;
  static std::map<MixedLabel, GroupAlgElem> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(label);
    if (it != cache.end()) return it->second;
  }
  RatElem p = p_rat(label);
  RatElem sum;
  for (const auto& s : young_subgroup(label)) sum[s] = 1;
  RatElem a = convolve(convolve(p, sum), p);
  Rat inv_norm = 1 / theta_norm_sq(label);

  const WgTable& wt = wg_table(m);
  GroupAlgElem z(m);
  for (const auto& tau : enumerate_sym(m)) {
    std::vector<Rat> per_class(wt.classes.size());
    for (const auto& [s, c] : a) per_class[wt.index.at((s.inverse() * tau).cycle_type())] += c;
    PolyN num;
    for (size_t i = 0; i < per_class.size(); ++i)
      if (per_class[i] != 0) num += wt.nums[i] * per_class[i];
    if (num.is_zero()) continue;
    z.add_term(tau, RatFuncN(num * inv_norm, wt.den));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(label, std::move(z)).first->second;
}

ThetaData theta_data(const MixedLabel& label) {
  return {label, theta_norm_sq(label), z_theta(label)};
}

}  // namespace surftrace
