#include "twinlat/hyperbolic.hpp"

#include <algorithm>

namespace twinlat {

TriangleType triangle_type(int a, int b, int c) {
  for (int v : {a, b, c})
    if (v < 2) fail(ErrorCode::InvalidInput, "triangle entries must be >= 2 or infinite");
  BigRat sum = 0;
  for (int v : {a, b, c})
    if (v != kInfiniteOrder) sum += BigRat(1, v);
  if (sum > 1) return TriangleType::Spherical;
  if (sum == 1) return TriangleType::Euclidean;
  return TriangleType::Hyperbolic;
}

void HyperbolicSearch::require_hypotheses(bool need_non_affine) const {
  TypeClassification cls = classify(calc_->system().coxeter());
  if (!cls.irreducible)
    fail(ErrorCode::Inapplicable, "irreducible hypothesis fails");
  if (!cls.infinite())
    fail(ErrorCode::Inapplicable, "infinite hypothesis fails (the Weyl group is finite)");
  if (need_non_affine && cls.affine())
    fail(ErrorCode::Inapplicable, "non-affine hypothesis fails");
}

namespace {

bool disjoint_plus_plus(const HalfspaceRelation& rel) {
  return rel.kind == RelationKind::Nested &&
         rel.empty_quadrant == QuadrantSign{true, true};
}

} // namespace

DisjointRoot HyperbolicSearch::find_disjoint_root(const Root& alpha,
                                                  const std::vector<Root>& avoid) const {
  require_hypotheses(false);
  IntVec neg = negated(alpha.vec());
  for (int radius : budget_.radius_schedule) {
    for (const Root& cand : calc_->roots_up_to_depth(radius, budget_.ball_cap)) {
      if (cand.vec() == alpha.vec() || cand.vec() == neg) continue;
      bool skip = false;
      for (const auto& av : avoid) skip = skip || cand == av;
      if (skip) continue;
      HalfspaceRelation rel = calc_->halfspace_relation(alpha, cand, budget_);
      if (disjoint_plus_plus(rel)) return DisjointRoot{cand, std::move(rel)};
    }
  }
  fail(ErrorCode::BudgetExceeded, "no disjoint root found within the radius schedule");
}

TripleWitness HyperbolicSearch::find_disjoint_triple(const Root& alpha,
                                                     const Root& beta) const {
  require_hypotheses(true);
  HalfspaceRelation rel_ab = calc_->halfspace_relation(alpha, beta, budget_);
  if (rel_ab.kind == RelationKind::Equal || rel_ab.kind == RelationKind::Opposite)
    fail(ErrorCode::Inapplicable, "the two inputs must be distinct non-opposite roots");
  if (!disjoint_plus_plus(rel_ab))
    fail(ErrorCode::Inapplicable, "the two input half-spaces are not disjoint");

  for (int radius : budget_.radius_schedule) {
    for (const Root& cand : calc_->roots_up_to_depth(radius, budget_.ball_cap)) {
      if (cand.vec() == alpha.vec() || cand.vec() == negated(alpha.vec())) continue;
      if (cand.vec() == beta.vec() || cand.vec() == negated(beta.vec())) continue;
      if (calc_->product_order(cand, alpha).finite) continue;
      if (calc_->product_order(cand, beta).finite) continue;
      HalfspaceRelation rel_ag = calc_->halfspace_relation(alpha, cand, budget_);
      if (!disjoint_plus_plus(rel_ag)) continue;
      HalfspaceRelation rel_bg = calc_->halfspace_relation(beta, cand, budget_);
      if (!disjoint_plus_plus(rel_bg)) continue;
      TripleWitness w;
      w.alpha = alpha;
      w.beta = beta;
      w.gamma = cand;
      w.rel_alpha_beta = std::move(rel_ab);
      w.rel_alpha_gamma = std::move(rel_ag);
      w.rel_beta_gamma = std::move(rel_bg);
      w.search_radius = radius;
      return w;
    }
  }
  fail(ErrorCode::BudgetExceeded, "no third disjoint root found within the radius schedule");
}

SimplicityWitness HyperbolicSearch::simplicity_witness(const Root& alpha, int h) const {
  if (h < 1) fail(ErrorCode::InvalidInput, "the translation power h must be >= 1");
  require_hypotheses(true);
  const WeylSystem& sys = calc_->system();

  DisjointRoot eta = find_disjoint_root(alpha);
  WeylElement tau = sys.multiply(calc_->reflection_of(eta.eta), calc_->reflection_of(alpha));
  WeylElement tau_h = sys.identity();
  for (int i = 0; i < h; ++i) tau_h = sys.multiply(tau_h, tau);
  Root beta = calc_->act(tau_h, calc_->negate(alpha));

  TripleWitness alpha_eta_triple = find_disjoint_triple(alpha, eta.eta);
  const Root& xi = alpha_eta_triple.gamma;
  WeylElement tau_prime = sys.multiply(calc_->reflection_of(xi), calc_->reflection_of(beta));
  WeylElement tau_prime_h = sys.identity();
  for (int i = 0; i < h; ++i) tau_prime_h = sys.multiply(tau_prime_h, tau_prime);
  Root gamma = calc_->act(tau_prime_h, calc_->negate(beta));

  SimplicityWitness w{alpha, h, eta.eta, beta, xi, gamma, tau, tau_prime, {}};
  w.triple.alpha = alpha;
  w.triple.beta = beta;
  w.triple.gamma = gamma;
  w.triple.rel_alpha_beta = calc_->halfspace_relation(alpha, beta, budget_);
  w.triple.rel_alpha_gamma = calc_->halfspace_relation(alpha, gamma, budget_);
  w.triple.rel_beta_gamma = calc_->halfspace_relation(beta, gamma, budget_);
  w.triple.search_radius = std::max({w.triple.rel_alpha_beta.radius_used,
                                     w.triple.rel_alpha_gamma.radius_used,
                                     w.triple.rel_beta_gamma.radius_used});
  for (const auto* rel : {&w.triple.rel_alpha_beta, &w.triple.rel_alpha_gamma,
                          &w.triple.rel_beta_gamma})
    if (!disjoint_plus_plus(*rel))
      fail(ErrorCode::Internal, "constructed configuration failed its disjointness check");
  return w;
}

bool HyperbolicSearch::revalidate(const TripleWitness& w, int extra) const {
  struct PairCheck {
    const Root* a;
    const Root* b;
    const HalfspaceRelation* rel;
  };
  const PairCheck checks[] = {{&w.alpha, &w.beta, &w.rel_alpha_beta},
                              {&w.alpha, &w.gamma, &w.rel_alpha_gamma},
                              {&w.beta, &w.gamma, &w.rel_beta_gamma}};
  SearchBudget fresh = budget_;
  fresh.radius_schedule = {w.search_radius + extra};
  for (const auto& c : checks) {
    if (!disjoint_plus_plus(*c.rel)) return false;
    if (!calc_->verify_certificate(*c.a, *c.b, *c.rel)) return false;
    HalfspaceRelation rerun = calc_->halfspace_relation(*c.a, *c.b, fresh);
    if (!disjoint_plus_plus(rerun)) return false;
  }
  return true;
}

} // namespace twinlat
