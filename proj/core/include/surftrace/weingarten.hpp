#pragma once

#include <map>
#include <vector>

#include "surftrace/exactnum.hpp"
#include "surftrace/symgroup.hpp"

namespace surftrace {

// Sparse element of C[S_m] with rational-function coefficients.
class GroupAlgElem {
 public:
  explicit GroupAlgElem(int m = 0) : m_(m) {}

  int degree() const { return m_; }
  const std::map<Permutation, RatFuncN>& terms() const { return terms_; }
  RatFuncN coeff(const Permutation& s) const;
  void add_term(const Permutation& s, const RatFuncN& c);

  GroupAlgElem& operator+=(const GroupAlgElem& o);
  GroupAlgElem scaled(const RatFuncN& c) const;
  // Convolution: (x*y)(s) = sum_{a b = s} x(a) y(b).
  friend GroupAlgElem operator*(const GroupAlgElem& x, const GroupAlgElem& y);
  friend bool operator==(const GroupAlgElem& a, const GroupAlgElem& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

 private:
  int m_;
  std::map<Permutation, RatFuncN> terms_;
};

inline constexpr int kMaxWgDegree = 7;

// Wg_{n,k} restricted to a conjugacy class; k = 0 gives 1. The sum runs over every lambda |- k
// with D_lambda(n) taken as its polynomial, so the value is exact for every integer n >= k.
const RatFuncN& wg_class_coeff(int k, const Partition& cycle_type);
RatFuncN wg_coeff(int k, const Permutation& s);
GroupAlgElem wg_element(int k);

// All class values of Wg_{n,m} over one monic common denominator, indexed like partitions_of(m).
struct WgTable {
  int m = 0;
  std::vector<Partition> classes;
  std::map<Partition, int> index;
  PolyN den;
  std::vector<PolyN> nums;
};
const WgTable& wg_table(int m);

// sum_{s,t in S_k} [i = i' o s][j = j' o t] Wg(t s^{-1}) at n = n0. Indices are 1-based.
Rat entry_integral(int k, const std::vector<int>& i, const std::vector<int>& j,
                   const std::vector<int>& ip, const std::vector<int>& jp, long n0);

}  // namespace surftrace
