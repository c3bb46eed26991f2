#include <doctest.h>

#include "surftrace/mixedrep.hpp"

using namespace surftrace;

TEST_SUITE("mixedrep") {

TEST_CASE("theta norms") {
  CHECK(theta_norm_sq({{1}, {}}) == 1);
  CHECK(theta_norm_sq({{2}, {}}) == 1);
  CHECK(theta_norm_sq({{1, 1}, {}}) == Rat(1, 2));
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; k + l <= 4; ++l)
      for (const auto& lab : labels_with_sizes(k, l)) CHECK(theta_norm_sq(lab) > 0);
}

TEST_CASE("projector onto the Young subgroup") {
  GroupAlgElem p1 = p_mu_tensor_nu({{1}, {}});
  CHECK(p1.terms().size() == 1);
  CHECK(p1.coeff(Permutation(1)) == RatFuncN(1));
  GroupAlgElem p2 = p_mu_tensor_nu({{2}, {}});
  CHECK(p2.coeff(Permutation(2)) == RatFuncN(Rat(1, 2)));
  CHECK(p2.coeff(Permutation::from_cycles(2, {{1, 2}})) == RatFuncN(Rat(1, 2)));
  GroupAlgElem p11 = p_mu_tensor_nu({{1}, {1}});
  CHECK(p11.terms().size() == 1);
  CHECK(p11.coeff(Permutation(2)) == RatFuncN(1));
  // idempotent
  for (const auto& lab : labels_with_sizes(2, 1)) {
    GroupAlgElem p = p_mu_tensor_nu(lab);
    CHECK(p * p == p);
  }
}

TEST_CASE("z_theta closed forms") {
  RatFuncN n = RatFuncN::var();
  const GroupAlgElem& z1 = z_theta({{1}, {}});
  CHECK(z1.terms().size() == 1);
  CHECK(z1.coeff(Permutation(1)) == RatFuncN(1) / n);
  CHECK(z_theta({{2}, {}}).coeff(Permutation(2)) == RatFuncN(1) / (n * (n + 1)));
  CHECK(z_theta({{1, 1}, {}}).coeff(Permutation(2)) == RatFuncN(1) / (n * (n - 1)));
  const GroupAlgElem& zm = z_theta({{1}, {1}});
  CHECK(zm.coeff(Permutation::from_cycles(2, {{1, 2}})).degree() <= -3);
}

TEST_CASE("z_theta of a pure label is supported on S_k") {
  for (int k = 1; k <= 3; ++k)
    for (const auto& lab : labels_with_sizes(k, 0)) CHECK(z_theta(lab).degree() == k);
}

TEST_CASE("pure labels: the projector has trace one per copy") {
  // sum_pi z(pi) n^{#cyc(pi)} = Tr(q) / D = 1
  for (int k = 1; k <= 4; ++k) {
    for (const auto& lab : labels_with_sizes(k, 0)) {
      RatFuncN s;
      for (const auto& [pi, c] : z_theta(lab).terms()) s += c * RatFuncN(PolyN::monomial(pi.cycle_count()));
      CHECK(s == RatFuncN(1));
    }
    for (const auto& lab : labels_with_sizes(0, k)) {
      RatFuncN s;
      for (const auto& [pi, c] : z_theta(lab).terms()) s += c * RatFuncN(PolyN::monomial(pi.cycle_count()));
      CHECK(s == RatFuncN(1));
    }
  }
}

TEST_CASE("coefficient degree bound") {
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; k + l <= 3; ++l) {
      if (k + l == 0) continue;
      for (const auto& lab : labels_with_sizes(k, l))
        for (const auto& t : enumerate_sym(k + l))
          CHECK(z_theta(lab).coeff(t).degree() <= -(k + l) - coset_norm(t, k, l));
    }
}

TEST_CASE("theta data bundles the pieces") {
  ThetaData d = theta_data({{2, 1}, {}});
  CHECK(d.norm_sq == theta_norm_sq({{2, 1}, {}}));
  CHECK(d.z == z_theta({{2, 1}, {}}));
  CHECK(young_subgroup({{2}, {1}}).size() == 2);
}

}  // TEST_SUITE
