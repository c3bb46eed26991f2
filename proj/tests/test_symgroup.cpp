#include <doctest.h>

#include <deque>
#include <map>

#include "surftrace/errors.hpp"
#include "surftrace/symgroup.hpp"
#include "surftrace/weingarten.hpp"

using namespace surftrace;

namespace {

// Distance from the identity in the transposition Cayley graph of S_m.
std::map<Permutation, int> transposition_bfs(int m) {
  std::map<Permutation, int> dist{{Permutation(m), 0}};
  std::deque<Permutation> q{Permutation(m)};
  while (!q.empty()) {
    Permutation p = q.front();
    q.pop_front();
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        Permutation nxt = Permutation::from_cycles(m, {{i, j}}) * p;
        if (dist.emplace(nxt, dist[p] + 1).second) q.push_back(nxt);
      }
  }
  return dist;
}

// Standard Young tableaux by filling boxes 1..k one at a time.
long count_syt(Partition shape) {
  long total = 0;
  bool empty = true;
  for (size_t r = 0; r < shape.size(); ++r) {
    if (shape[r] == 0) continue;
    empty = false;
    // box k can be removed from row r if it is a corner
    if (r + 1 == shape.size() || shape[r + 1] < shape[r]) {
      --shape[r];
      total += count_syt(shape);
      ++shape[r];
    }
  }
  return empty ? 1 : total;
}

}  // namespace

TEST_SUITE("symgroup") {

TEST_CASE("enumeration sizes and guard") {
  CHECK(enumerate_sym(0).size() == 1);
  CHECK(enumerate_sym(3).size() == 6);
  CHECK(enumerate_sym(7).size() == 5040);
  CHECK_THROWS_AS(enumerate_sym(10), DomainError);
}

TEST_CASE("rank and unrank follow the enumeration order") {
  auto all = enumerate_sym(5);
  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].rank() == i);
    CHECK(Permutation::unrank(5, i) == all[i]);
  }
}

TEST_CASE("cycle notation round trip") {
  for (const auto& p : enumerate_sym(5)) CHECK(Permutation::parse_cycles(5, p.cycle_notation()) == p);
  CHECK(Permutation::parse_cycles(3, "()").is_identity());
  CHECK(Permutation::parse_cycles(4, "(1,2)(3 4)").cycle_type() == Partition{2, 2});
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), DomainError);
}

TEST_CASE("composition acts right to left") {
  Permutation a = Permutation::from_cycles(3, {{1, 2}});
  Permutation b = Permutation::from_cycles(3, {{2, 3}});
  // (a*b)(3) = a(b(3)) = a(2) = 1
  CHECK((a * b)(2) == 0);
}

TEST_CASE("transposition norm matches the Cayley graph distance") {
  CHECK(transposition_norm(Permutation(4)) == 0);
  CHECK(transposition_norm(Permutation::from_cycles(3, {{1, 2, 3}})) == 2);
  CHECK(transposition_norm(Permutation::from_cycles(5, {{1, 2}})) == 1);
  for (int m = 1; m <= 5; ++m)
    for (const auto& [p, d] : transposition_bfs(m)) CHECK(transposition_norm(p) == d);
}

TEST_CASE("coset norm") {
  CHECK(coset_norm(Permutation(3), 2, 1) == 0);
  CHECK(coset_norm(Permutation::from_cycles(2, {{1, 2}}), 1, 1) == 1);
  CHECK(coset_norm(Permutation::from_cycles(2, {{1, 2}}), 2, 0) == 0);
  CHECK_THROWS_AS(coset_norm(Permutation(3), 1, 1), DomainError);
  // Exhaustive minimum over left cosets using the BFS distances.
  auto dist = transposition_bfs(4);
  for (int k = 0; k <= 4; ++k) {
    auto young = enumerate_young_product(k, 4 - k);
    for (const auto& [s, _] : dist) {
      int best = 99;
      for (const auto& s0 : young) best = std::min(best, dist[s0.inverse() * s]);
      CHECK(coset_norm(s, k, 4 - k) == best);
    }
  }
}

TEST_CASE("irrep dimensions against tableau counts") {
  CHECK(dim_irrep({3}) == 1);
  CHECK(dim_irrep({1, 1, 1, 1}) == 1);
  CHECK(dim_irrep({2, 1}) == 2);
  for (int k = 1; k <= 8; ++k)
    for (const auto& lam : partitions_of(k)) CHECK(dim_irrep(lam) == count_syt(lam));
}

TEST_CASE("character tables of S_3 and S_4") {
  CHECK(character({1, 1}, Partition{2}) == -1);
  CHECK(character({2}, Partition{2}) == 1);
  CHECK(character({2, 1}, Partition{3}) == -1);

  const std::vector<Partition> c3{{1, 1, 1}, {2, 1}, {3}};
  const std::map<Partition, std::vector<long>> t3{
      {{3}, {1, 1, 1}}, {{2, 1}, {2, 0, -1}}, {{1, 1, 1}, {1, -1, 1}}};
  for (const auto& [lam, row] : t3)
    for (size_t j = 0; j < c3.size(); ++j) CHECK(character(lam, c3[j]) == row[j]);

  const std::vector<Partition> c4{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  const std::map<Partition, std::vector<long>> t4{{{4}, {1, 1, 1, 1, 1}},
                                                  {{3, 1}, {3, 1, -1, 0, -1}},
                                                  {{2, 2}, {2, 0, 2, -1, 0}},
                                                  {{2, 1, 1}, {3, -1, -1, 0, 1}},
                                                  {{1, 1, 1, 1}, {1, -1, 1, 1, -1}}};
  for (const auto& [lam, row] : t4)
    for (size_t j = 0; j < c4.size(); ++j) CHECK(character(lam, c4[j]) == row[j]);
}

TEST_CASE("row and column orthogonality") {
  for (int k = 1; k <= 7; ++k) {
    auto parts = partitions_of(k);
    BigInt kf = factorial(k);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        BigInt s = 0;
        for (const auto& c : parts) s += class_size(c) * character(a, c) * character(b, c);
        CHECK(s == (a == b ? kf : BigInt(0)));
      }
    for (const auto& c : parts)
      for (const auto& d : parts) {
        BigInt s = 0;
        for (const auto& a : parts) s += BigInt(character(a, c) * character(a, d));
        CHECK(s == (c == d ? centralizer_order(c) : BigInt(0)));
      }
  }
}

TEST_CASE("central idempotents") {
  CHECK(central_idempotent_coeff({1}, Permutation(1)) == 1);
  CHECK(central_idempotent_coeff({2}, Permutation::from_cycles(2, {{1, 2}})) == Rat(1, 2));
  CHECK(central_idempotent_coeff({1, 1}, Permutation::from_cycles(2, {{1, 2}})) == Rat(-1, 2));
  for (int k = 1; k <= 4; ++k) {
    auto parts = partitions_of(k);
    std::vector<GroupAlgElem> e;
    for (const auto& lam : parts) {
      GroupAlgElem x(k);
      for (const auto& s : enumerate_sym(k)) x.add_term(s, RatFuncN(central_idempotent_coeff(lam, s)));
      e.push_back(x);
    }
    GroupAlgElem sum(k);
    for (size_t i = 0; i < e.size(); ++i) {
      sum += e[i];
      for (size_t j = 0; j < e.size(); ++j) {
        GroupAlgElem prod = e[i] * e[j];
        if (i == j)
          CHECK(prod == e[i]);
        else
          CHECK(prod.terms().empty());
      }
    }
    GroupAlgElem id(k);
    id.add_term(Permutation(k), RatFuncN(1));
    CHECK(sum == id);
  }
}

TEST_CASE("class sizes sum to k!") {
  for (int k = 0; k <= 8; ++k) {
    BigInt s = 0;
    for (const auto& c : partitions_of(k)) {
      s += class_size(c);
      CHECK(class_size(c) * centralizer_order(c) == factorial(k));
    }
    CHECK(s == factorial(k));
  }
}

}  // TEST_SUITE
