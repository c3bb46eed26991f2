#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surftrace {

using BigInt = mpz_class;
using Rat = mpq_class;

// Sentinel degree of the zero polynomial / zero rational function.
inline constexpr int kDegNegInf = INT_MIN;

std::string rat_to_string(const Rat& r);       // always "p/q"
Rat rat_from_string(std::string_view text);    // accepts "p/q" or "p"

// Dense univariate polynomial in n over Q, ascending coefficients.
// The zero polynomial has an empty coefficient list.
class PolyN {
 public:
  PolyN() = default;
  explicit PolyN(std::vector<Rat> coeffs);
  PolyN(const Rat& c);  // NOLINT(google-explicit-constructor)
  PolyN(long c);        // NOLINT(google-explicit-constructor)

  static PolyN var();  // the polynomial n
  static PolyN monomial(int degree, const Rat& c = 1);
  // prod_i (n + shifts[i])
  static PolyN from_linear_factors(const std::vector<long>& shifts);

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
  const Rat& lead() const { return c_.back(); }
  Rat coeff(int i) const;

  Rat eval(const Rat& x) const;
  PolyN monic() const;
  PolyN derivative() const;

  PolyN& operator+=(const PolyN& o);
  PolyN& operator-=(const PolyN& o);
  PolyN& operator*=(const PolyN& o);
  PolyN& operator*=(const Rat& s);
  friend PolyN operator+(PolyN a, const PolyN& b) { return a += b; }
  friend PolyN operator-(PolyN a, const PolyN& b) { return a -= b; }
  friend PolyN operator*(const PolyN& a, const PolyN& b);
  friend PolyN operator*(PolyN a, const Rat& s) { return a *= s; }
  PolyN operator-() const;
  PolyN pow(unsigned e) const;

  friend bool operator==(const PolyN& a, const PolyN& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyN& a, const PolyN& b) { return !(a == b); }

  // Human readable, e.g. "n^2 - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Quotient and remainder; throws DomainError when b is zero.
std::pair<PolyN, PolyN> divmod(const PolyN& a, const PolyN& b);
// Monic gcd (zero if both are zero).
PolyN gcd(const PolyN& a, const PolyN& b);
PolyN lcm(const PolyN& a, const PolyN& b);
// Exact division; throws InternalError when b does not divide a.
PolyN exact_div(const PolyN& a, const PolyN& b);

// Unique polynomial of degree <= degree_bound through the first degree_bound+1
// points; every further point must lie on it (else DomainError "interpolation mismatch").
PolyN poly_interpolate(const std::vector<std::pair<long, Rat>>& points, int degree_bound);

// Reduced rational function num/den in n: gcd(num,den)=1, den monic, zero is 0/1.
class RatFuncN {
 public:
  RatFuncN() : den_(1) {}
  RatFuncN(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncN(long c) : num_(c), den_(1) {}        // NOLINT(google-explicit-constructor)
  RatFuncN(const PolyN& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncN(PolyN num, PolyN den);

  static RatFuncN var() { return RatFuncN(PolyN::var()); }

  const PolyN& num() const { return num_; }
  const PolyN& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // deg(num) - deg(den), kDegNegInf for zero.
  int degree() const;

  Rat eval(long n0) const;  // DomainError on a pole

  RatFuncN& operator+=(const RatFuncN& o);
  RatFuncN& operator-=(const RatFuncN& o);
  RatFuncN& operator*=(const RatFuncN& o);
  RatFuncN& operator/=(const RatFuncN& o);
  friend RatFuncN operator+(RatFuncN a, const RatFuncN& b) { return a += b; }
  friend RatFuncN operator-(RatFuncN a, const RatFuncN& b) { return a -= b; }
  friend RatFuncN operator*(RatFuncN a, const RatFuncN& b) { return a *= b; }
  friend RatFuncN operator/(RatFuncN a, const RatFuncN& b) { return a /= b; }
  RatFuncN operator-() const;
  RatFuncN pow(int e) const;

  friend bool operator==(const RatFuncN& a, const RatFuncN& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFuncN& a, const RatFuncN& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();
  PolyN num_;
  PolyN den_;
};

// Free-function forms of the operators.
enum class ArithOp { Add, Sub, Mul, Div };
RatFuncN ratfunc_arith(const RatFuncN& a, const RatFuncN& b, ArithOp op);
inline Rat ratfunc_eval(const RatFuncN& f, long n0) { return f.eval(n0); }
inline int ratfunc_degree(const RatFuncN& f) { return f.degree(); }

// Puts a family of rational functions over one monic common denominator:
// f_i = nums[i] / den.
struct CommonDenominator {
  PolyN den;
  std::vector<PolyN> nums;
};
CommonDenominator common_denominator(const std::vector<RatFuncN>& fs);

// JSON {"num":["p/q",...],"den":[...]}.
std::string ratfunc_to_json(const RatFuncN& f);
RatFuncN ratfunc_from_json(std::string_view text);

std::string degree_to_string(int d);  // "-inf" for kDegNegInf

}  // namespace surftrace
