#include "doctest.h"

#include "twinlat/numeric.hpp"

using namespace twinlat;

namespace {

Poly poly(std::vector<BigInt> c) { return Poly(std::move(c)); }

} // namespace

TEST_CASE("polynomial arithmetic") {
  Poly one_plus_t = poly({1, 1});
  CHECK(one_plus_t * one_plus_t == poly({1, 2, 1}));
  CHECK(one_plus_t + poly({0, -1}) == Poly::constant(1));
  CHECK(one_plus_t - one_plus_t == Poly());
  CHECK(one_plus_t.pow(3) == poly({1, 3, 3, 1}));
  CHECK(one_plus_t.pow(0) == Poly::constant(1));
  CHECK(Poly::monomial(5, 3) == poly({0, 0, 0, 5}));
  CHECK(poly({1, 2, 3}).derivative() == poly({2, 6}));
  CHECK(poly({1, 2, 3}).scaled(2) == poly({2, 4, 6}));
  CHECK(poly({1, 2, 2, 1}).reversed(3) == poly({1, 2, 2, 1}));
  CHECK(poly({0, 0, 1}).reversed(2) == Poly::constant(1));
  CHECK(poly({2, 0, 1}).degree() == 2);
  CHECK(poly({1, 2, 3}).eval(BigRat(1, 2)) == BigRat(11, 4));
  CHECK(poly({1, 2, 3}).eval_int(10) == 321);
  CHECK(poly({-2, 0, 1}).sign_at(BigRat(3, 2)) == 1);
  CHECK(poly({-2, 0, 1}).sign_at(1) == -1);
  CHECK(poly({4, -6, 2}).content() == 2);
  CHECK(poly({4, -6, 2}).primitive() == poly({2, -3, 1}));
}

TEST_CASE("exact division and gcd") {
  Poly a = poly({-1, 0, 1});       // (t-1)(t+1)
  Poly b = poly({1, -2, 1});       // (t-1)^2
  CHECK(poly_divexact(a, poly({-1, 1})) == poly({1, 1}));
  CHECK(poly_gcd(a, b) == poly({-1, 1}));
  CHECK(poly_gcd(poly({2, 2}), poly({4})) == Poly::constant(1));
  Poly sq = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
  Poly sf = poly_squarefree_part(sq);
  CHECK(poly_gcd(sf, poly({-1, 1})).degree() == 1);
  CHECK(poly_gcd(sf, poly({2, 1})).degree() == 1);
  CHECK(sf.degree() == 2);
}

TEST_CASE("sturm root counting") {
  // (t-1)(t-2)(t-3)
  Poly p = poly({-6, 11, -6, 1});
  SturmChain chain(p);
  CHECK(chain.count_in(0, 4) == 3);
  CHECK(chain.count_in(0, BigRat(5, 2)) == 2);
  CHECK(chain.count_in(0, 1) == 1);  // half-open: 1 is counted at the top end
  CHECK(count_positive_roots_upto(p, 4) == 3);
  Poly q = poly({-2, 0, 1});  // t^2 - 2
  CHECK(count_positive_roots_upto(q, 1) == 0);
  CHECK(count_positive_roots_upto(q, BigRat(3, 2)) == 1);
  CHECK(count_positive_roots_upto(q, 2) == 1);
  // Repeated roots are counted once.
  CHECK(count_positive_roots_upto(poly({1, -2, 1}), 5) == 1);
}

TEST_CASE("root isolation") {
  CHECK(!isolate_least_positive_root(poly({1, 0, 1})).has_value());
  CHECK(!isolate_least_positive_root(poly({1, 1})).has_value());
  auto r = isolate_least_positive_root(poly({-5, 2}));  // root 5/2
  REQUIRE(r.has_value());
  CHECK(r->lo < BigRat(5, 2));
  CHECK(BigRat(5, 2) <= r->hi);
  auto s = isolate_least_positive_root(poly({-2, 0, 1}));  // sqrt(2)
  REQUIRE(s.has_value());
  CHECK(s->lo * s->lo < 2);
  CHECK(s->hi * s->hi >= 2);
  CHECK(s->hi - s->lo < BigRat(1, 1000));
  // Least positive root of (t-1)(t-3), not the larger one.
  auto t = isolate_least_positive_root(poly({3, -4, 1}));
  REQUIRE(t.has_value());
  CHECK(t->lo < 1);
  CHECK(1 <= t->hi);
  CHECK(t->hi < 3);
  BigRat bound = root_magnitude_bound(poly({-6, 11, -6, 1}));
  CHECK(bound >= 3);
}

TEST_CASE("rational function reduction") {
  RationalFn f(poly({-1, 0, 1}), poly({-1, 1}));  // (t^2-1)/(t-1) = t+1
  CHECK(f.num() == poly({1, 1}));
  CHECK(f.den() == Poly::constant(1));
  RationalFn g = RationalFn(Poly::constant(1), poly({1, 1})) +
                 RationalFn(Poly::constant(1), poly({1, -1}));
  // 1/(1+t) + 1/(1-t) = 2/(1-t^2)
  CHECK(g.num() == Poly::constant(2));
  CHECK(g.den() == poly({1, 0, -1}));
}

TEST_CASE("power sum series") {
  RationalFn s0 = power_sum_series(0);
  CHECK(s0.num() == Poly::constant(1));
  CHECK(s0.den() == poly({1, -1}));
  RationalFn s1 = power_sum_series(1);
  CHECK(s1.num() == poly({0, 1}));
  CHECK(s1.den() == poly({1, -2, 1}));
  RationalFn s2 = power_sum_series(2);
  CHECK(s2.num() == poly({0, 1, 1}));
  CHECK(s2.den() == poly({1, -3, 3, -1}));

  auto eval = [](const RationalFn& f, const BigRat& x) {
    return f.num().eval(x) / f.den().eval(x);
  };
  CHECK(eval(s1, BigRat(1, 2)) == 2);        // sum n / 2^n
  CHECK(eval(s2, BigRat(1, 2)) == 6);        // sum n^2 / 2^n
  CHECK(eval(power_sum_series(3), BigRat(1, 2)) == 26);
  CHECK(eval(power_sum_series(4), BigRat(1, 2)) == 150);
  CHECK(eval(power_sum_series(2), BigRat(1, 3)) == BigRat(3, 2));
}

TEST_CASE("big integer power") {
  CHECK(big_pow(1764, 0) == 1);
  CHECK(big_pow(1764, 1) == 1764);
  CHECK(big_pow(2, 70) == BigInt("1180591620717411303424"));
  CHECK(big_pow(-3, 3) == -27);
}
