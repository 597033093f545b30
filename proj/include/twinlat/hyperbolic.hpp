// Constructive witnesses for hyperbolic configurations: the triangle
// trichotomy, a root disjoint from a given one, pairwise-disjoint triples,
// and the translated configuration beta = tau^h(-alpha) with its
// certificates.  Every search is deterministic and every result carries
// chamber certificates that re-verify without searching.

#ifndef TWINLAT_HYPERBOLIC_HPP
#define TWINLAT_HYPERBOLIC_HPP

#include <vector>

#include "twinlat/roots.hpp"

namespace twinlat {

enum class TriangleType { Spherical, Euclidean, Hyperbolic };

// Compares 1/a + 1/b + 1/c against 1 in exact rational arithmetic; entries
// are >= 2 or kInfiniteOrder (contributing 0).
TriangleType triangle_type(int a, int b, int c);

struct DisjointRoot {
  Root eta;
  // Nested with empty quadrant (+,+): H_alpha n H_eta is empty.
  HalfspaceRelation certificate;
};

struct TripleWitness {
  Root alpha, beta, gamma;
  // One certificate per pair, each Nested with (+,+) empty: the pair's own
  // quadrant is the disjoint one.
  HalfspaceRelation rel_alpha_beta, rel_alpha_gamma, rel_beta_gamma;
  int search_radius = 0;
};

struct SimplicityWitness {
  Root alpha;
  int h = 1;
  Root eta, beta, xi, gamma;
  WeylElement tau;        // r_eta r_alpha
  WeylElement tau_prime;  // r_xi r_beta
  TripleWitness triple;   // over (alpha, beta, gamma)
};

class HyperbolicSearch {
public:
  HyperbolicSearch(const RootCalculus& calc, SearchBudget budget = {})
      : calc_(&calc), budget_(std::move(budget)) {}

  // A root eta with H_alpha n H_eta empty, eta distinct from +-alpha and
  // from the avoid list.  Requires irreducible and infinite; searches roots
  // by depth along the budget's radius schedule.
  DisjointRoot find_disjoint_root(const Root& alpha,
                                  const std::vector<Root>& avoid = {}) const;

  // A root gamma disjoint from both inputs, which must themselves be
  // disjoint and non-opposite.  Requires irreducible, infinite, non-affine.
  TripleWitness find_disjoint_triple(const Root& alpha, const Root& beta) const;

  // The full translated configuration for the given alpha and h >= 1:
  // eta, tau = r_eta r_alpha, beta = tau^h(-alpha), xi disjoint from alpha
  // and eta, tau' = r_xi r_beta, gamma = (tau')^h(-beta), with pairwise
  // disjointness of (alpha, beta, gamma) certified.
  SimplicityWitness simplicity_witness(const Root& alpha, int h) const;

  // Fresh verification: re-checks the stored certificates chamber by
  // chamber, then re-runs each pair's relation with a single radius of
  // (search radius + extra) and demands the same disjointness verdict.
  bool revalidate(const TripleWitness& w, int extra = 2) const;

private:
  void require_hypotheses(bool need_non_affine) const;
  const RootCalculus* calc_;
  SearchBudget budget_;
};

} // namespace twinlat

#endif
