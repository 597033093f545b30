// The growth series W(t) of a Coxeter system as an exact rational function:
// Poincare polynomials for the finite types, the alternating subset identity
// for infinite systems, Taylor coefficients, radius of convergence by real
// root isolation, and the lattice criterion W(1/q) < infinity.

#ifndef TWINLAT_GROWTH_HPP
#define TWINLAT_GROWTH_HPP

#include <optional>
#include <vector>

#include "twinlat/gcm.hpp"
#include "twinlat/numeric.hpp"
#include "twinlat/weyl.hpp"

namespace twinlat {

struct GrowthSeries {
  Poly num;  // coprime with den
  Poly den;  // den(0) = 1
  // Least positive real root of den, isolated; nullopt when den has none
  // (infinite radius of convergence).  With non-negative Taylor coefficients
  // this root IS the radius of convergence.
  std::optional<IsolatedRoot> radius;
};

struct Evaluation {
  bool finite = true;
  BigRat value;  // meaningful when finite
};

// Product of (1 + t + ... + t^(d-1)) over the exponent-table degrees d of
// every component; requires an all-spherical classification (Inapplicable
// otherwise).
Poly finite_poincare_polynomial(const TypeClassification& cls);

// Exact W(t).  Finite systems get their Poincare polynomial; infinite ones
// go through the alternating identity 1/W(1/t) = sum over spherical subsets
// J of (-1)^|J| / W_J(t), followed by t -> 1/t and reduction.
GrowthSeries growth_series(const CoxeterMatrix& m);

// Finite(P(x)/Q(x)) when 0 <= x < radius, Divergent otherwise (a pole at x
// included), decided by exact Sturm root counting on (0, x].
Evaluation evaluate_at(const GrowthSeries& s, const BigRat& x);

// Taylor coefficients c_0 .. c_n of the series, exact integers.
std::vector<BigInt> taylor_coefficients(const GrowthSeries& s, int n);

// Independent oracle: c_0 .. c_n counted from ball enumeration.
std::vector<BigInt> bfs_coefficients(const WeylSystem& sys, int n,
                                     std::size_t cap = WeylSystem::kDefaultBallCap);

// W(1/q_min) < infinity.
bool lattice_criterion(const CoxeterMatrix& m, const BigInt& q_min);

} // namespace twinlat

#endif
