// Exact arithmetic: big integers, rationals, integer polynomials, rational
// functions, Sturm sequences for real-root counting, and the closed forms
// for power sums that the integrability bound needs.

#ifndef TWINLAT_NUMERIC_HPP
#define TWINLAT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "twinlat/errors.hpp"

namespace twinlat {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  for (unsigned e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

// Dense integer polynomial, coefficients ascending, no trailing zeros.
// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const BigInt& a) { return Poly({a}); }
  static Poly monomial(const BigInt& a, int deg) {
    std::vector<BigInt> v(static_cast<size_t>(deg) + 1, 0);
    v.back() = a;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& coeff(int i) const {
    static const BigInt zero = 0;
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
  }
  const std::vector<BigInt>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const BigInt& k) const;

  Poly derivative() const;
  Poly pow(unsigned e) const;
  // t^k * P(1/t) for k >= degree; used for the t -> 1/t substitution.
  Poly reversed(int k) const;

  BigRat eval(const BigRat& x) const;
  BigInt eval_int(const BigInt& x) const;
  int sign_at(const BigRat& x) const;

  BigInt content() const;    // gcd of coefficients, >= 0
  Poly primitive() const;    // content 1, sign of leading coeff preserved
  std::string to_string(const std::string& var = "t") const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

// Exact division; raises Internal if the division is not exact.
Poly poly_divexact(const Poly& num, const Poly& den);
// Remainder of Euclidean division over Q, returned primitivized with a
// positive scale factor (safe wherever only signs or roots matter).
Poly poly_prem(const Poly& num, const Poly& den);
Poly poly_gcd(const Poly& a, const Poly& b);  // primitive, positive leading
Poly poly_squarefree_part(const Poly& p);

// Sturm chain of a squarefree polynomial.  count_in(a, b) counts distinct
// real roots in the half-open interval (a, b]; requires no root at a.
class SturmChain {
public:
  explicit SturmChain(const Poly& squarefree);
  int sign_variations_at(const BigRat& x) const;
  int count_in(const BigRat& a, const BigRat& b) const;
  const std::vector<Poly>& chain() const { return chain_; }

private:
  std::vector<Poly> chain_;
};

// Number of distinct positive real roots of p in (0, x].  Exact.
int count_positive_roots_upto(const Poly& p, const BigRat& x);
// Cauchy-style upper bound on the absolute value of real roots.
BigRat root_magnitude_bound(const Poly& p);

struct IsolatedRoot {
  BigRat lo, hi;  // the least positive root lies in (lo, hi]
};

// Least positive real root of p, isolated by Sturm bisection; nullopt when p
// has no positive real root.
std::optional<IsolatedRoot> isolate_least_positive_root(const Poly& p);

// Rational function P/Q over the integers, reduced, Q never zero.
class RationalFn {
public:
  RationalFn() : num_(Poly::constant(0)), den_(Poly::constant(1)) {}
  RationalFn(Poly num, Poly den);
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;

private:
  void reduce();
  Poly num_, den_;
};

// Closed form of sum_{n>=0} n^k x^n as a rational function of x.
RationalFn power_sum_series(unsigned k);

} // namespace twinlat

#endif
