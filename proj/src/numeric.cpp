#include "twinlat/numeric.hpp"

#include <algorithm>
#include <sstream>

namespace twinlat {

namespace {

BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int sgn(const BigRat& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

// Clears denominators by a positive factor and divides out the content,
// so signs (and roots) are preserved exactly.
Poly rat_to_primitive(const std::vector<BigRat>& c) {
  BigInt lcm = 1;
  for (const auto& x : c) {
    BigInt d = boost::multiprecision::denominator(x);
    lcm = lcm / int_gcd(lcm, d) * d;
  }
  std::vector<BigInt> v;
  v.reserve(c.size());
  for (const auto& x : c) {
    v.push_back(BigInt(boost::multiprecision::numerator(x) *
                       (lcm / boost::multiprecision::denominator(x))));
  }
  return Poly(std::move(v)).primitive();
}

} // namespace

Poly Poly::operator+(const Poly& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<BigInt> v(c_);
  for (auto& x : v) x = -x;
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<BigInt> v(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(v));
}

Poly Poly::scaled(const BigInt& k) const {
  std::vector<BigInt> v(c_);
  for (auto& x : v) x *= k;
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<BigInt> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * BigInt(i);
  return Poly(std::move(v));
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(1), b = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b;
    b = b * b;
  }
  return r;
}

Poly Poly::reversed(int k) const {
  if (degree() > k) fail(ErrorCode::Internal, "reversal degree too small");
  std::vector<BigInt> v(static_cast<size_t>(k) + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) v[k - i] = c_[i];
  return Poly(std::move(v));
}

BigRat Poly::eval(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

BigInt Poly::eval_int(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Poly::sign_at(const BigRat& x) const { return sgn(eval(x)); }

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto& x : c_) g = int_gcd(g, x);
  return g;
}

Poly Poly::primitive() const {
  BigInt g = content();
  if (g == 0 || g == 1) return *this;
  std::vector<BigInt> v(c_);
  for (auto& x : v) x /= g;
  return Poly(std::move(v));
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    BigInt mag = a < 0 ? BigInt(-a) : a;
    if (i == 0) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Poly poly_divexact(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(ErrorCode::Internal, "division by zero polynomial");
  if (num.is_zero()) return Poly();
  int dn = num.degree(), dd = den.degree();
  if (dn < dd) fail(ErrorCode::Internal, "inexact polynomial division");
  std::vector<BigRat> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<BigRat> quo(static_cast<size_t>(dn - dd) + 1, BigRat(0));
  BigRat lead = BigRat(den.coeff(dd));
  for (int k = dn - dd; k >= 0; --k) {
    BigRat q = rem[static_cast<size_t>(k + dd)] / lead;
    quo[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(k + j)] -= q * BigRat(den.coeff(j));
  }
  for (const auto& r : rem)
    if (r != 0) fail(ErrorCode::Internal, "inexact polynomial division");
  std::vector<BigInt> out;
  out.reserve(quo.size());
  for (const auto& q : quo) {
    if (boost::multiprecision::denominator(q) != 1)
      fail(ErrorCode::Internal, "inexact polynomial division");
    out.push_back(BigInt(boost::multiprecision::numerator(q)));
  }
  return Poly(std::move(out));
}

Poly poly_prem(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(ErrorCode::Internal, "remainder by zero polynomial");
  std::vector<BigRat> rem(num.coeffs().begin(), num.coeffs().end());
  int dd = den.degree();
  BigRat lead = BigRat(den.coeff(dd));
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr < dd) break;
    BigRat q = rem.back() / lead;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(dr - dd + j)] -= q * BigRat(den.coeff(j));
    rem.pop_back();
  }
  return rat_to_primitive(rem);
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a.primitive(), y = b.primitive();
  if (x.is_zero()) x = y;
  while (!y.is_zero()) {
    Poly r = poly_prem(x, y);
    x = y;
    y = r;
  }
  if (!x.is_zero() && x.coeff(x.degree()) < 0) x = -x;
  return x;
}

Poly poly_squarefree_part(const Poly& p) {
  Poly q = p.primitive();
  if (q.degree() <= 0) return q;
  Poly g = poly_gcd(q, q.derivative());
  if (g.degree() <= 0) return q;
  return poly_divexact(q, g).primitive();
}

SturmChain::SturmChain(const Poly& squarefree) {
  Poly p = squarefree.primitive();
  if (p.is_zero()) fail(ErrorCode::Internal, "Sturm chain of zero polynomial");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative().primitive());
  while (chain_.back().degree() > 0) {
    Poly r = poly_prem(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmChain::sign_variations_at(const BigRat& x) const {
  int count = 0, prev = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int SturmChain::count_in(const BigRat& a, const BigRat& b) const {
  if (chain_.front().sign_at(a) == 0)
    fail(ErrorCode::Internal, "Sturm count from a root");
  return sign_variations_at(a) - sign_variations_at(b);
}

namespace {

// Strips the factor t^m (roots at zero are never positive) and returns the
// squarefree part of what remains.
Poly positive_root_core(const Poly& p) {
  if (p.is_zero()) fail(ErrorCode::Internal, "root count of zero polynomial");
  std::vector<BigInt> c = p.coeffs();
  size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  std::vector<BigInt> v(c.begin() + static_cast<long>(shift), c.end());
  return poly_squarefree_part(Poly(std::move(v)));
}

} // namespace

int count_positive_roots_upto(const Poly& p, const BigRat& x) {
  if (x <= 0) return 0;
  Poly core = positive_root_core(p);
  if (core.degree() <= 0) return 0;
  SturmChain chain(core);
  return chain.count_in(BigRat(0), x);
}

BigRat root_magnitude_bound(const Poly& p) {
  if (p.degree() <= 0) return BigRat(1);
  BigInt lead = p.coeff(p.degree());
  if (lead < 0) lead = -lead;
  BigInt biggest = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigInt a = p.coeff(i);
    if (a < 0) a = -a;
    if (a > biggest) biggest = a;
  }
  return BigRat(1) + BigRat(biggest) / BigRat(lead);
}

std::optional<IsolatedRoot> isolate_least_positive_root(const Poly& p) {
  Poly core = positive_root_core(p);
  if (core.degree() <= 0) return std::nullopt;
  SturmChain chain(core);
  BigRat lo = 0, hi = root_magnitude_bound(core);
  if (chain.count_in(lo, hi) == 0) return std::nullopt;
  // Invariant: no root in (0, lo], at least one in (lo, hi].
  const BigRat width_goal = BigRat(1, BigInt(1) << 64);
  while (hi - lo > width_goal) {
    BigRat mid = (lo + hi) / 2;
    if (core.sign_at(mid) == 0) {
      if (chain.count_in(BigRat(0), mid) == 1) return IsolatedRoot{mid, mid};
      hi = mid;
      // A root below mid exists; shrink from above but keep bisecting around
      // nonzero midpoints by nudging.
      continue;
    }
    if (chain.count_in(lo, mid) > 0)
      hi = mid;
    else
      lo = mid;
  }
  return IsolatedRoot{lo, hi};
}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::Internal, "rational function with zero denominator");
  reduce();
}

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_divexact(num_, g);
    den_ = poly_divexact(den_, g);
  }
  BigInt cn = num_.content(), cd = den_.content();
  BigInt g2 = cd;
  {
    BigInt a = cn, b = cd;
    while (b != 0) {
      BigInt t = a % b;
      a = b;
      b = t;
    }
    g2 = a;
  }
  if (g2 > 1) {
    num_ = poly_divexact(num_, Poly::constant(g2));
    den_ = poly_divexact(den_, Poly::constant(g2));
  }
  int anchor = 0;
  while (den_.coeff(anchor) == 0) ++anchor;
  if (den_.coeff(anchor) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
  return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn power_sum_series(unsigned k) {
  // sum n^k x^n = N_k(x) / (1-x)^(k+1), N_0 = 1,
  // N_k = x * (N_{k-1}' * (1-x) + k * N_{k-1}).
  Poly one_minus_x({BigInt(1), BigInt(-1)});
  Poly x_poly({BigInt(0), BigInt(1)});
  Poly n = Poly::constant(1);
  for (unsigned j = 1; j <= k; ++j)
    n = x_poly * (n.derivative() * one_minus_x + n.scaled(BigInt(j)));
  return RationalFn(n, one_minus_x.pow(k + 1));
}

} // namespace twinlat
