#pragma once

#include <string>
#include <vector>

#include "surftrace/exactnum.hpp"
#include "surftrace/symgroup.hpp"

namespace surftrace {

// Label [mu, nu] of a rational irreducible representation of U(n).
struct MixedLabel {
  Partition mu;
  Partition nu;

  int k() const { return partition_size(mu); }
  int l() const { return partition_size(nu); }
  int rows() const { return static_cast<int>(mu.size() + nu.size()); }
  void validate() const;
  std::string to_string() const;  // "[[2,1],[1]]"
  friend bool operator==(const MixedLabel& a, const MixedLabel& b) {
    return a.mu == b.mu && a.nu == b.nu;
  }
  friend bool operator<(const MixedLabel& a, const MixedLabel& b) {
    return a.mu != b.mu ? a.mu < b.mu : a.nu < b.nu;
  }
};

// All labels with |mu| = k and |nu| = l.
std::vector<MixedLabel> labels_with_sizes(int k, int l);

using Signature = std::vector<long>;

Signature signature_of(const MixedLabel& label, long n);
// Weyl dimension prod_{i<j} (L_i - L_j + j - i)/(j - i).
BigInt weyl_dimension(const Signature& sig);
// Hook-content polynomial prod_{boxes} (n + c)/h.
PolyN dim_un_poly(const Partition& lambda);
// Interpolated from Weyl dimensions; cached.
PolyN dim_mixed_poly(const MixedLabel& label);

// Sum of dim^{-s} over partitions with at most n-1 rows and at most max_boxes boxes.
Rat witten_zeta_truncated(int s, long n, int max_boxes);

}  // namespace surftrace
