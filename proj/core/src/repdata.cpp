#include "surftrace/repdata.hpp"

#include <map>
#include <mutex>

#include "surftrace/errors.hpp"

namespace surftrace {

void MixedLabel::validate() const {
  check_partition(mu);
  check_partition(nu);
}

std::string MixedLabel::to_string() const {
  return "[" + partition_to_string(mu) + "," + partition_to_string(nu) + "]";
}

std::vector<MixedLabel> labels_with_sizes(int k, int l) {
  std::vector<MixedLabel> out;
  for (const auto& mu : partitions_of(k))
    for (const auto& nu : partitions_of(l)) out.push_back({mu, nu});
  return out;
}

Signature signature_of(const MixedLabel& label, long n) {
  label.validate();
  if (n < label.rows())
    throw DomainError("signature_of: n=" + std::to_string(n) + " smaller than rows(mu)+rows(nu)=" +
                      std::to_string(label.rows()));
  Signature sig(n, 0);
  for (size_t i = 0; i < label.mu.size(); ++i) sig[i] = label.mu[i];
  for (size_t i = 0; i < label.nu.size(); ++i) sig[n - 1 - i] = -label.nu[i];
  return sig;
}

BigInt weyl_dimension(const Signature& sig) {
  size_t n = sig.size();
  BigInt num = 1, den = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      num *= sig[i] - sig[j] + static_cast<long>(j - i);
      den *= static_cast<long>(j - i);
    }
  return num / den;
}

PolyN dim_un_poly(const Partition& lambda) {
  check_partition(lambda);
  std::vector<long> contents;
  BigInt hooks = 1;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      contents.push_back(static_cast<long>(j) - static_cast<long>(i));
      int leg = 0;
      for (size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) ++leg;
      hooks *= lambda[i] - j - 1 + leg + 1;
    }
  PolyN p = PolyN::from_linear_factors(contents);
  return p * Rat(BigInt(1), hooks);
}

PolyN dim_mixed_poly(const MixedLabel& label) {
  label.validate();
  static std::mutex mu;
  static std::map<MixedLabel, PolyN> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(label);
    if (it != cache.end()) return it->second;
  }
  int deg = label.k() + label.l();
  long start = std::max(1, label.rows());
  std::vector<std::pair<long, Rat>> pts;
  for (long n = start; n < start + deg + 3; ++n)
    pts.emplace_back(n, Rat(weyl_dimension(signature_of(label, n))));
  PolyN p = poly_interpolate(pts, deg);
  if (p.degree() != deg) throw InternalError("dim_mixed_poly: unexpected degree");
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(label, p);
  return p;
}

Rat witten_zeta_truncated(int s, long n, int max_boxes) {
  if (s < 1) throw DomainError("witten_zeta_truncated: s must be a positive integer");
  if (n < 2) throw DomainError("witten_zeta_truncated: n must be at least 2");
  if (max_boxes < 0) throw DomainError("witten_zeta_truncated: negative box bound");
  Rat total = 0;
  for (int b = 0; b <= max_boxes; ++b)
    for (const auto& lambda : partitions_of(b)) {
      if (static_cast<long>(lambda.size()) > n - 1) continue;
      Rat d = dim_un_poly(lambda).eval(Rat(n));
      Rat term = 1;
      for (int i = 0; i < s; ++i) term /= d;
      total += term;
    }
  return total;
}

}  // namespace surftrace
