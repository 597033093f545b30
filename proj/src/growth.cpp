#include "twinlat/growth.hpp"

#include <algorithm>

namespace twinlat {

namespace {

std::vector<int> exponent_degrees(const ComponentType& c) {
  int n = c.subscript;
  std::vector<int> d;
  if (c.family == "A") {
    for (int i = 2; i <= n + 1; ++i) d.push_back(i);
  } else if (c.family == "B") {
    for (int i = 2; i <= 2 * n; i += 2) d.push_back(i);
  } else if (c.family == "D") {
    for (int i = 2; i <= 2 * n - 2; i += 2) d.push_back(i);
    d.push_back(n);
  } else if (c.family == "E" && n == 6) {
    d = {2, 5, 6, 8, 9, 12};
  } else if (c.family == "E" && n == 7) {
    d = {2, 6, 8, 10, 12, 14, 18};
  } else if (c.family == "E" && n == 8) {
    d = {2, 8, 12, 14, 18, 20, 24, 30};
  } else if (c.family == "F") {
    d = {2, 6, 8, 12};
  } else if (c.family == "G") {
    d = {2, 6};
  } else if (c.family == "H" && n == 3) {
    d = {2, 6, 10};
  } else if (c.family == "H" && n == 4) {
    d = {2, 12, 20, 30};
  } else if (c.family == "I2") {
    d = {2, c.param};
  } else {
    fail(ErrorCode::Internal, "no exponent table for component " + c.label());
  }
  return d;
}

Poly geometric_factor(int degree) {
  std::vector<BigInt> c(static_cast<size_t>(degree), 1);
  return Poly(std::move(c));
}

} // namespace

Poly finite_poincare_polynomial(const TypeClassification& cls) {
  if (!cls.spherical())
    fail(ErrorCode::Inapplicable, "Poincare polynomial requires a spherical system");
  Poly p = Poly::constant(1);
  for (const auto& comp : cls.components)
    for (int d : exponent_degrees(comp)) p = p * geometric_factor(d);
  return p;
}

GrowthSeries growth_series(const CoxeterMatrix& m) {
  TypeClassification cls = classify(m);
  if (cls.spherical()) {
    GrowthSeries s;
    s.num = finite_poincare_polynomial(cls);
    s.den = Poly::constant(1);
    s.radius = std::nullopt;
    return s;
  }

  int n = m.rank();
  if (n > 24)
    fail(ErrorCode::BudgetExceeded, "growth series capped at rank 24");

  // 1/W(1/t) as a rational function of t, summed over spherical subsets.
  RationalFn r(Poly::constant(1), Poly::constant(1));  // empty subset
  std::vector<int> subset;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    subset.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    TypeClassification sub = classify(m.submatrix(subset));
    if (!sub.spherical()) continue;
    Poly wj = finite_poincare_polynomial(sub);
    Poly sign = Poly::constant(subset.size() % 2 == 0 ? 1 : -1);
    r = r + RationalFn(sign, wj);
  }

  // W(t) = 1 / r(1/t): reverse both parts and rebalance powers of t.
  const Poly& p = r.num();
  const Poly& q = r.den();
  if (p.is_zero()) fail(ErrorCode::Internal, "alternating sum vanished identically");
  int dp = p.degree(), dq = q.degree();
  Poly num = q.reversed(dq);
  Poly den = p.reversed(dp);
  if (dp > dq)
    num = num * Poly::monomial(1, dp - dq);
  else if (dq > dp)
    den = den * Poly::monomial(1, dq - dp);
  RationalFn w(num, den);

  GrowthSeries s;
  s.num = w.num();
  s.den = w.den();
  if (s.den.coeff(0) != 1)
    fail(ErrorCode::Internal, "reduced growth denominator not 1 at the origin");
  s.radius = isolate_least_positive_root(s.den);
  return s;
}

Evaluation evaluate_at(const GrowthSeries& s, const BigRat& x) {
  if (x < 0) fail(ErrorCode::InvalidInput, "growth series evaluated at a negative point");
  if (x > 0 && s.den.degree() > 0 && count_positive_roots_upto(s.den, x) > 0)
    return {false, BigRat(0)};
  BigRat denv = s.den.eval(x);
  if (denv == 0) fail(ErrorCode::Internal, "denominator vanished past the root count");
  return {true, s.num.eval(x) / denv};
}

std::vector<BigInt> taylor_coefficients(const GrowthSeries& s, int n) {
  if (n < 0) fail(ErrorCode::InvalidInput, "coefficient count must be >= 0");
  // den(0) = 1, so the linear recurrence stays in the integers.
  std::vector<BigInt> c(static_cast<size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) {
    BigInt acc = s.num.coeff(k);
    for (int j = 1; j <= std::min(k, s.den.degree()); ++j)
      acc -= s.den.coeff(j) * c[static_cast<size_t>(k - j)];
    c[static_cast<size_t>(k)] = acc;
  }
  return c;
}

std::vector<BigInt> bfs_coefficients(const WeylSystem& sys, int n, std::size_t cap) {
  if (n < 0) fail(ErrorCode::InvalidInput, "coefficient count must be >= 0");
  std::vector<BigInt> c(static_cast<size_t>(n) + 1, 0);
  for (const auto& w : sys.ball(n, cap)) c[static_cast<size_t>(w.length())] += 1;
  return c;
}

bool lattice_criterion(const CoxeterMatrix& m, const BigInt& q_min) {
  if (q_min < 2) fail(ErrorCode::InvalidInput, "q_min must be >= 2");
  GrowthSeries s = growth_series(m);
  return evaluate_at(s, BigRat(1, q_min)).finite;
}

} // namespace twinlat
