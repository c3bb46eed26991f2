#include <doctest.h>

#include "surftrace/errors.hpp"
#include "surftrace/repdata.hpp"

using namespace surftrace;

namespace {

// Weyl product over a signature, written out directly.
Rat weyl_product(const std::vector<long>& sig) {
  Rat out = 1;
  for (size_t i = 0; i < sig.size(); ++i)
    for (size_t j = i + 1; j < sig.size(); ++j)
      out *= Rat(sig[i] - sig[j] + static_cast<long>(j - i)) / static_cast<long>(j - i);
  return out;
}

// Semistandard tableaux of shape lam with entries in [1,n], filled cell by cell.
long count_ssyt(const Partition& lam, int n) {
  std::vector<std::vector<int>> t;
  for (int len : lam) t.emplace_back(len, 0);
  std::vector<std::pair<int, int>> cells;
  for (size_t r = 0; r < lam.size(); ++r)
    for (int c = 0; c < lam[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  long count = 0;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[i];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_SUITE("repdata") {

TEST_CASE("signatures") {
  CHECK(signature_of({{1}, {1}}, 4) == Signature{1, 0, 0, -1});
  CHECK(signature_of({{2, 1}, {}}, 3) == Signature{2, 1, 0});
  CHECK_THROWS_AS(signature_of({{1}, {1}}, 1), DomainError);
  CHECK_THROWS_AS(signature_of({{1, 1}, {1, 1}}, 3), DomainError);
}

TEST_CASE("U(n) dimension polynomials") {
  PolyN n = PolyN::var();
  CHECK(dim_un_poly({1}) == n);
  CHECK(dim_un_poly({2}) == n * (n + PolyN(1)) * Rat(1, 2));
  CHECK(dim_un_poly({1, 1}) == n * (n - PolyN(1)) * Rat(1, 2));
  for (int k = 1; k <= 5; ++k)
    for (const auto& lam : partitions_of(k)) {
      PolyN p = dim_un_poly(lam);
      CHECK(p.degree() == k);
      for (int n0 = static_cast<int>(lam.size()); n0 <= 10; ++n0) {
        Rat v = p.eval(n0);
        CHECK(v > 0);
        CHECK(v.get_den() == 1);
        if (n0 <= 4) CHECK(v == count_ssyt(lam, n0));
      }
    }
}

TEST_CASE("mixed dimension polynomials") {
  PolyN n = PolyN::var();
  CHECK(dim_mixed_poly({{1}, {}}) == n);
  CHECK(dim_mixed_poly({{1}, {1}}) == n * n - PolyN(1));
  CHECK(dim_mixed_poly({{}, {}}) == PolyN(1));
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l + k <= 4; ++l)
      for (const auto& lab : labels_with_sizes(k, l)) {
        PolyN p = dim_mixed_poly(lab);
        CHECK(p.degree() == k + l);
        if (l == 0) CHECK(p == dim_un_poly(lab.mu));
        for (long n0 = std::max(2, lab.rows()); n0 <= 9; ++n0) {
          CHECK(p.eval(n0) == weyl_product(signature_of(lab, n0)));
          CHECK(Rat(weyl_dimension(signature_of(lab, n0))) == p.eval(n0));
        }
      }
}

TEST_CASE("label enumeration") {
  CHECK(labels_with_sizes(0, 0).size() == 1);
  CHECK(labels_with_sizes(2, 1).size() == 2);
  CHECK(labels_with_sizes(2, 2).size() == 4);
  CHECK(MixedLabel{{2, 1}, {1}}.to_string() == "[[2,1],[1]]");
}

TEST_CASE("truncated Witten zeta") {
  for (long n : {2L, 5L, 9L}) CHECK(witten_zeta_truncated(2, n, 0) == 1);
  // SU(2): one irrep of each dimension m+1, m = |lambda|.
  Rat su2 = 0;
  for (int m = 0; m <= 10; ++m) su2 += Rat(1, (m + 1) * (m + 1));
  CHECK(witten_zeta_truncated(2, 2, 10) == su2);
  CHECK(su2 == Rat(BigInt("239437889"), BigInt("153679680")));
  for (long n : {3L, 8L})
    for (int s : {1, 2, 3}) {
      Rat prev = 1;
      for (int b = 0; b <= 6; ++b) {
        Rat z = witten_zeta_truncated(s, n, b);
        CHECK(z >= prev);
        prev = z;
      }
    }
  for (long n = 8; n <= 32; ++n) CHECK(witten_zeta_truncated(2, n, 4) - 1 <= Rat(3, n * n));
  CHECK_THROWS_AS(witten_zeta_truncated(0, 3, 2), DomainError);
  CHECK_THROWS_AS(witten_zeta_truncated(2, 1, 2), DomainError);
}

}  // TEST_SUITE
