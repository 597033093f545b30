#include "twinlat/verdict.hpp"

#include <algorithm>

namespace twinlat {

const char* to_string(SimplicityVerdict v) {
  switch (v) {
    case SimplicityVerdict::SimpleModCenter: return "SimpleModCenter";
    case SimplicityVerdict::VirtuallySimple: return "VirtuallySimple";
    case SimplicityVerdict::Inconclusive: return "Inconclusive";
    case SimplicityVerdict::Inapplicable: return "Inapplicable";
  }
  fail(ErrorCode::Internal, "unknown simplicity verdict");
}

namespace {

// Everything the named checks consult, resolved once per input.
struct Resolved {
  CoxeterMatrix cox;
  TypeClassification cls;
  std::vector<BigInt> orders;
  BigInt q_min;
  BigInt torus;
  BigInt threshold;
  bool lattice = false;
  Evaluation growth_value;

  explicit Resolved(const LatticeInput& in) : cox(coxeter_of(in.gcm)) {
    const int n = in.gcm.size();
    if (in.q < 2) fail(ErrorCode::InvalidInput, "q must be at least 2");
    orders = in.root_group_orders.empty()
                 ? std::vector<BigInt>(static_cast<size_t>(n), in.q)
                 : in.root_group_orders;
    if (static_cast<int>(orders.size()) != n)
      fail(ErrorCode::InvalidInput, "root_group_orders must list one order per simple root");
    for (const auto& o : orders)
      if (o < 2) fail(ErrorCode::InvalidInput, "every root group order must be at least 2");
    q_min = *std::min_element(orders.begin(), orders.end());
    torus = in.torus_order ? *in.torus_order : big_pow(in.q - 1, static_cast<unsigned>(n));
    if (torus < 1) fail(ErrorCode::InvalidInput, "torus_order must be at least 1");
    threshold = kazhdan_threshold(n);
    cls = classify(cox);
    growth_value = evaluate_at(growth_series(cox), BigRat(BigInt(1), q_min));
    lattice = growth_value.finite;
  }
};

bool check_value(const LatticeInput& in, const Resolved& r, const std::string& name) {
  if (name == "coxeter.irreducible") return r.cls.irreducible;
  if (name == "coxeter.infinite") return r.cls.infinite();
  if (name == "coxeter.non_affine") return !r.cls.affine();
  if (name == "coxeter.two_spherical") return is_two_spherical(r.cox);
  if (name == "coxeter.simply_laced") return is_simply_laced(r.cox);
  if (name == "coxeter.no_critical_rank2_pairs")
    return critical_rank2_pairs(r.cox, r.orders).empty();
  if (name == "coxeter.flat_rank_subsets") return flat_rank_geq_2(r.cox);
  if (name == "growth.finite_at_inverse_q_min") return r.lattice;
  if (name == "orders.q_min_gt_2") return r.q_min > 2;
  if (name == "orders.q_min_gt_3") return r.q_min > 3;
  if (name == "orders.q_min_gt_kazhdan_threshold") return r.q_min > r.threshold;
  if (name == "datum.split_kac_moody") return in.split_kac_moody;
  if (name == "datum.root_groups_finite_nilpotent") return in.root_groups_finite_nilpotent;
  if (name == "datum.rank_one_lie_type") return in.rank_one_lie_type;
  if (name == "datum.center_finite") return in.center_finite;
  if (name == "datum.derived_group_dense") return in.derived_group_dense;
  fail(ErrorCode::InvalidInput, "unknown check name: " + name);
}

CheckList run_all(const LatticeInput& in, const Resolved& r,
                  std::initializer_list<const char*> names) {
  CheckList out;
  out.reserve(names.size());
  for (const char* nm : names) out.push_back({nm, check_value(in, r, nm)});
  return out;
}

bool all_hold(const CheckList& l) {
  for (const auto& c : l)
    if (!c.holds) return false;
  return true;
}

} // namespace

Verdict analyze(const LatticeInput& in) {
  validate_gcm(in.gcm);
  Resolved r(in);

  Verdict v;
  v.classification = r.cls;
  v.root_group_orders = r.orders;
  v.q_min = r.q_min;
  v.torus_order = r.torus;
  v.growth_value = r.growth_value;
  v.kazhdan_threshold_value = r.threshold;

  auto flag = [&](const char* name, std::initializer_list<const char*> names) {
    CheckList l = run_all(in, r, names);
    bool value = all_hold(l);
    v.trail[name] = std::move(l);
    return value;
  };

  v.irreducible = flag("irreducible", {"coxeter.irreducible"});
  v.infinite = flag("infinite", {"coxeter.infinite"});
  v.non_affine = flag("non_affine", {"coxeter.non_affine"});
  v.two_spherical = flag("two_spherical", {"coxeter.two_spherical"});
  v.simply_laced = flag("simply_laced", {"coxeter.simply_laced"});
  v.critical_pairs = critical_rank2_pairs(r.cox, r.orders);
  v.lattice = flag("lattice", {"growth.finite_at_inverse_q_min"});
  v.rank_one_perfect = flag("rank_one_perfect", {"orders.q_min_gt_3"});

  // Simplicity: the type gate first, then the split route (simple modulo
  // the center), then the generic (S1)-(S3) route (virtually simple).
  {
    CheckList l = run_all(in, r,
                          {"coxeter.irreducible", "coxeter.infinite", "coxeter.non_affine",
                           "datum.split_kac_moody", "growth.finite_at_inverse_q_min",
                           "datum.root_groups_finite_nilpotent", "datum.center_finite",
                           "datum.derived_group_dense"});
    bool gate = l[0].holds && l[1].holds && l[2].holds;
    bool split_route = l[3].holds && l[4].holds;
    bool generic_route = l[5].holds && l[6].holds && l[4].holds && l[7].holds;
    if (!gate)
      v.simplicity = SimplicityVerdict::Inapplicable;
    else if (split_route)
      v.simplicity = SimplicityVerdict::SimpleModCenter;
    else if (generic_route)
      v.simplicity = SimplicityVerdict::VirtuallySimple;
    else
      v.simplicity = SimplicityVerdict::Inconclusive;
    v.trail["simplicity"] = std::move(l);
  }

  v.finite_quotient_bound = 1;
  for (const auto& o : r.orders) v.finite_quotient_bound *= o;

  // Finite quotients are trivial under the type gate plus nilpotent finite
  // root groups when any of the three sufficient conditions fires:
  // (3) rank-one groups of Lie type and q_min > 3, (4) 2-spherical and
  // q_min > 2, (5) simply laced.
  {
    CheckList l = run_all(in, r,
                          {"coxeter.irreducible", "coxeter.infinite", "coxeter.non_affine",
                           "datum.root_groups_finite_nilpotent", "datum.rank_one_lie_type",
                           "orders.q_min_gt_3", "coxeter.two_spherical", "orders.q_min_gt_2",
                           "coxeter.simply_laced"});
    bool gate = l[0].holds && l[1].holds && l[2].holds && l[3].holds;
    if (gate) {
      if (l[4].holds && l[5].holds) v.quotient_conditions.push_back(3);
      if (l[6].holds && l[7].holds) v.quotient_conditions.push_back(4);
      if (l[8].holds) v.quotient_conditions.push_back(5);
    }
    v.quotients_trivial = gate && !v.quotient_conditions.empty();
    v.trail["quotients_trivial"] = std::move(l);
  }

  v.kazhdan = flag("kazhdan",
                   {"coxeter.irreducible", "coxeter.infinite", "coxeter.non_affine",
                    "datum.root_groups_finite_nilpotent", "datum.center_finite",
                    "growth.finite_at_inverse_q_min", "datum.rank_one_lie_type",
                    "orders.q_min_gt_3", "coxeter.two_spherical",
                    "orders.q_min_gt_kazhdan_threshold"});

  v.finitely_presented = flag("finitely_presented",
                              {"coxeter.two_spherical", "orders.q_min_gt_2"});
  v.flat_rank_geq_2 = flag("flat_rank_geq_2", {"coxeter.flat_rank_subsets"});

  // (FPRS) holds for split data outright, and for any datum that is
  // 2-spherical with no critical rank-2 subgroup.
  {
    CheckList l = run_all(in, r,
                          {"datum.split_kac_moody", "coxeter.two_spherical",
                           "coxeter.no_critical_rank2_pairs"});
    v.fprs_guaranteed = l[0].holds || (l[1].holds && l[2].holds);
    v.trail["fprs_guaranteed"] = std::move(l);
  }

  v.commensurator_discrete = flag("commensurator_discrete",
                                  {"coxeter.irreducible", "coxeter.infinite",
                                   "coxeter.non_affine", "datum.root_groups_finite_nilpotent",
                                   "datum.rank_one_lie_type", "orders.q_min_gt_3"});
  return v;
}

bool run_check(const LatticeInput& in, const std::string& check_name) {
  validate_gcm(in.gcm);
  Resolved r(in);
  return check_value(in, r, check_name);
}

BigInt kazhdan_threshold(int n) {
  if (n < 0) fail(ErrorCode::InvalidInput, "rank must be non-negative");
  return big_pow(1764, static_cast<unsigned>(n));
}

bool flat_rank_geq_2(const CoxeterMatrix& m) {
  const int n = m.rank();
  if (n > 24) fail(ErrorCode::BudgetExceeded, "flat rank subset scan capped at rank 24");

  std::vector<DiagramKind> kind(static_cast<size_t>(1) << n);
  std::vector<bool> irred(static_cast<size_t>(1) << n, false);
  std::vector<int> size_of(static_cast<size_t>(1) << n, 0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) keep.push_back(i);
    TypeClassification c = classify(m.submatrix(keep));
    kind[mask] = c.kind;
    irred[mask] = c.irreducible;
    size_of[mask] = static_cast<int>(keep.size());
  }

  for (unsigned mask = 1; mask < (1u << n); ++mask)
    if (irred[mask] && kind[mask] == DiagramKind::Affine && size_of[mask] >= 3) return true;

  // Two disjoint infinite-type subsets with m = 2 across: it is enough to
  // test each infinite subset against everything that commutes with it,
  // since an infinite subgroup survives inside the full commuting rest.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (kind[mask] == DiagramKind::Spherical) continue;
    unsigned rest = 0;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) continue;
      bool commutes = true;
      for (int i = 0; i < n && commutes; ++i)
        if ((mask & (1u << i)) && m.entry(i, j) != 2) commutes = false;
      if (commutes) rest |= 1u << j;
    }
    if (rest != 0 && kind[rest] != DiagramKind::Spherical) return true;
  }
  return false;
}

std::optional<int> fprs_fix_radius_bound(const BigInt& dist) {
  if (dist < 1) return std::nullopt;
  int n = 0;
  BigInt pw = 16;  // 4^(n+2) for n = 0
  while ((pw - 1) / 3 <= dist) {
    ++n;
    pw *= 4;
  }
  return n;
}

Poly q_h_polynomial(int big_l) {
  if (big_l < 0) fail(ErrorCode::InvalidInput, "height parameter must be non-negative");
  const BigInt l = big_l;
  return Poly({3 * l * l + 3 * l + 1, 6 * l + 3, 3});
}

Evaluation integrability_bound(int l_minus, int l_plus, int p, const BigInt& q,
                               const BigInt& torus_order) {
  if (l_minus < 0 || l_plus < 0)
    fail(ErrorCode::InvalidInput, "height parameters must be non-negative");
  if (p < 1) fail(ErrorCode::InvalidInput, "the exponent must be at least 1");
  if (q < 2) fail(ErrorCode::InvalidInput, "q must be at least 2");
  if (torus_order < 1) fail(ErrorCode::InvalidInput, "torus_order must be at least 1");

  const Poly qp = q_h_polynomial(l_minus + l_plus).pow(static_cast<unsigned>(p));
  const BigRat x(BigInt(1), q);
  BigRat total = 0;
  for (int k = 0; k <= qp.degree(); ++k) {
    if (qp.coeff(k) == 0) continue;
    RationalFn s = power_sum_series(static_cast<unsigned>(k));
    total += BigRat(qp.coeff(k)) * s.num().eval(x) / s.den().eval(x);
  }
  total *= BigRat(torus_order);
  return Evaluation{true, total};
}

} // namespace twinlat
