#include <doctest.h>

#include <random>

#include "surftrace/errors.hpp"
#include "surftrace/exactnum.hpp"

using namespace surftrace;

namespace {

RatFuncN rf(std::vector<long> num, std::vector<long> den) {
  std::vector<Rat> a(num.begin(), num.end()), b(den.begin(), den.end());
  return RatFuncN(PolyN(a), PolyN(b));
}

RatFuncN random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4), d(0, 2);
  auto poly = [&](bool nonzero) {
    for (;;) {
      std::vector<Rat> v(d(rng) + 1);
      for (auto& x : v) x = c(rng);
      PolyN p(v);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return RatFuncN(poly(false), poly(true));
}

}  // namespace

TEST_SUITE("exactnum") {

TEST_CASE("arithmetic examples") {
  RatFuncN n = RatFuncN::var();
  CHECK(ratfunc_arith(n, RatFuncN(1) / n, ArithOp::Mul) == RatFuncN(1));
  RatFuncN s = ratfunc_arith(rf({1}, {-1, 1}), rf({1}, {1, 1}), ArithOp::Add);
  CHECK(s == rf({0, 2}, {-1, 0, 1}));
  CHECK(rf({-1, 0, 1}, {-1, 1}) == RatFuncN(PolyN(std::vector<Rat>{1, 1})));
  CHECK_THROWS_AS(ratfunc_arith(n, RatFuncN(), ArithOp::Div), DomainError);
}

TEST_CASE("evaluation and poles") {
  CHECK(ratfunc_eval(rf({1}, {-1, 0, 1}), 3) == Rat(1, 8));
  CHECK(ratfunc_eval(RatFuncN::var(), 7) == 7);
  CHECK_THROWS_AS(ratfunc_eval(rf({1}, {-1, 1}), 1), DomainError);
}

TEST_CASE("degree") {
  CHECK(ratfunc_degree(RatFuncN::var()) == 1);
  CHECK(ratfunc_degree(rf({1}, {0, -1, 0, 1})) == -3);
  CHECK(ratfunc_degree(RatFuncN()) == kDegNegInf);
  CHECK(degree_to_string(kDegNegInf) == "-inf");
}

TEST_CASE("normal form") {
  RatFuncN f = rf({2, 2}, {4, 0, -4});  // 2(n+1) / (-4(n^2-1)) = -1/(2(n-1))
  CHECK(f.den().lead() == 1);
  CHECK(f == rf({-1}, {-2, 2}));
  CHECK(gcd(f.num(), f.den()).degree() == 0);
  CHECK(RatFuncN().den() == PolyN(1));
}

TEST_CASE("interpolation") {
  PolyN line = poly_interpolate({{1, 1}, {2, 2}, {3, 3}}, 1);
  CHECK(line == PolyN::var());
  // binomial oracle: n choose 2
  PolyN b = poly_interpolate({{2, 1}, {3, 3}, {4, 6}, {5, 10}}, 2);
  for (long n = 0; n < 12; ++n) CHECK(b.eval(n) == Rat(n * (n - 1)) / 2);
  CHECK_THROWS_AS(poly_interpolate({{1, 1}, {2, 2}, {3, 5}}, 1), DomainError);
}

TEST_CASE("polynomial division") {
  PolyN a = PolyN::from_linear_factors({-1, 1, 2});
  PolyN b = PolyN::from_linear_factors({1});
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == PolyN::from_linear_factors({-1, 2}));
  CHECK(exact_div(a, b) == q);
  CHECK_THROWS_AS(exact_div(a, PolyN::from_linear_factors({5})), InternalError);
  CHECK(lcm(PolyN::from_linear_factors({1, 2}), PolyN::from_linear_factors({2, 3})) ==
        PolyN::from_linear_factors({1, 2, 3}));
}

TEST_CASE("common denominator") {
  std::vector<RatFuncN> fs{rf({1}, {-1, 1}), rf({1}, {1, 1}), RatFuncN(3)};
  CommonDenominator cd = common_denominator(fs);
  for (size_t i = 0; i < fs.size(); ++i) CHECK(RatFuncN(cd.nums[i], cd.den) == fs[i]);
}

TEST_CASE("json round trip") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    RatFuncN f = random_ratfunc(rng) / RatFuncN(Rat(3, 7));
    CHECK(ratfunc_from_json(ratfunc_to_json(f)) == f);
  }
  CHECK(rat_from_string("-6/4") == Rat(-3, 2));
  CHECK(rat_to_string(Rat(5)) == "5/1");
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(2024);
  for (int it = 0; it < 200; ++it) {
    RatFuncN a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFuncN());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // evaluation is a homomorphism away from poles
    for (long x : {11L, 17L}) {
      bool pole = false;
      for (const RatFuncN* f : {&a, &b}) pole = pole || f->den().eval(x) == 0;
      if (pole) continue;
      CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
      CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

}  // TEST_SUITE
