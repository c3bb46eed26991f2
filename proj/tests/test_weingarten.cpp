#include <doctest.h>

#include "surftrace/crosscheck.hpp"
#include "surftrace/errors.hpp"
#include "surftrace/weingarten.hpp"

using namespace surftrace;

namespace {

RatFuncN n_pow(int e) { return RatFuncN(PolyN::monomial(e)); }

}  // namespace

TEST_SUITE("weingarten") {

TEST_CASE("small k closed forms") {
  RatFuncN n = RatFuncN::var();
  CHECK(wg_coeff(1, Permutation(1)) == RatFuncN(1) / n);
  GroupAlgElem w2 = wg_element(2);
  CHECK(w2.coeff(Permutation(2)) == RatFuncN(1) / (n * n - 1));
  CHECK(w2.coeff(Permutation::from_cycles(2, {{1, 2}})) == RatFuncN(-1) / (n * (n * n - 1)));
  CHECK(wg_coeff(3, Permutation(3)) == (n * n - 2) / (n * (n * n - 1) * (n * n - 4)));
  CHECK(wg_coeff(3, Permutation::from_cycles(3, {{1, 2, 3}})) == RatFuncN(2) / (n * (n * n - 1) * (n * n - 4)));
  CHECK_THROWS(wg_element(kMaxWgDegree + 1));
}

TEST_CASE("agrees with the inverse Gram matrix at fixed n") {
  for (int k = 1; k <= 4; ++k) {
    auto perms = enumerate_sym(k);
    for (long n0 = k; n0 <= k + 3; ++n0) {
      std::vector<Rat> oracle = crosscheck::weingarten_gram(k, n0);
      for (size_t i = 0; i < perms.size(); ++i) CHECK(wg_coeff(k, perms[i]).eval(n0) == oracle[i]);
    }
  }
}

TEST_CASE("class function") {
  for (int k = 2; k <= 4; ++k) {
    auto perms = enumerate_sym(k);
    for (const auto& s : perms)
      for (const auto& h : perms) CHECK(wg_coeff(k, h * s * h.inverse()) == wg_coeff(k, s));
  }
}

TEST_CASE("Wg inverts the Gram element exactly") {
  // sum_t Wg(s t^{-1}) n^{#cyc(t)} = [s = id]
  for (int k = 1; k <= 4; ++k) {
    auto perms = enumerate_sym(k);
    for (const auto& s : perms) {
      RatFuncN sum;
      for (const auto& t : perms) sum += wg_coeff(k, s * t.inverse()) * n_pow(t.cycle_count());
      CHECK(sum == RatFuncN(s.is_identity() ? 1 : 0));
    }
  }
}

TEST_CASE("degree bound") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& s : enumerate_sym(k)) {
      int d = wg_coeff(k, s).degree();
      CHECK(d <= -k - transposition_norm(s));
      CHECK(d == -k - transposition_norm(s));  // leading Moebius term is nonzero
    }
}

TEST_CASE("table denominators") {
  const WgTable& t = wg_table(3);
  CHECK(t.classes.size() == 3);
  for (size_t c = 0; c < t.classes.size(); ++c)
    CHECK(RatFuncN(t.nums[c], t.den) == wg_class_coeff(3, t.classes[c]));
}

TEST_CASE("entry integrals") {
  CHECK(entry_integral(1, {1}, {1}, {1}, {1}, 5) == Rat(1, 5));
  CHECK(entry_integral(1, {1}, {1}, {2}, {1}, 5) == 0);
  CHECK(entry_integral(2, {1, 1}, {1, 1}, {1, 1}, {1, 1}, 4) == Rat(1, 10));
  // row of a unitary has unit norm
  for (long n0 : {3L, 6L}) {
    Rat s = 0;
    for (int j = 1; j <= n0; ++j) s += entry_integral(1, {1}, {j}, {1}, {j}, n0);
    CHECK(s == 1);
  }
  // E |u11|^2 |u22|^2 = 1/(n^2-1) for n >= 2
  for (long n0 : {2L, 5L}) CHECK(entry_integral(2, {1, 2}, {1, 2}, {1, 2}, {1, 2}, n0) == Rat(1, n0 * n0 - 1));
  // unbalanced multisets vanish
  CHECK(entry_integral(2, {1, 1}, {1, 2}, {1, 1}, {1, 1}, 4) == 0);
}

}  // TEST_SUITE
