// The decision pipeline for a Kac-Moody style lattice datum: classification
// gates, the growth-series lattice criterion, simplicity / finite-quotient /
// Kazhdan / presentation / commensurator flags, flat rank, the fix-radius
// formula, and the closed-form integrability bound.  Every flag records the
// named checks that decided it, and each named check can be re-run on its
// own and must reproduce the recorded outcome.

#ifndef TWINLAT_VERDICT_HPP
#define TWINLAT_VERDICT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twinlat/gcm.hpp"
#include "twinlat/growth.hpp"
#include "twinlat/matrix.hpp"
#include "twinlat/numeric.hpp"
#include "twinlat/roots.hpp"

namespace twinlat {

struct LatticeInput {
  IntMat gcm;
  BigInt q = 2;  // >= 2; not required to be a prime power
  // One order per simple root; empty means all equal to q.
  std::vector<BigInt> root_group_orders;
  // Defaults to (q - 1)^rank, the split simply-connected value.
  std::optional<BigInt> torus_order;

  // Facts about the group behind the datum that are not decidable from the
  // matrix alone.  The defaults hold for split and almost split Kac-Moody
  // groups over finite fields; flip them for exotic twin root data.
  bool split_kac_moody = true;
  bool root_groups_finite_nilpotent = true;
  bool rank_one_lie_type = true;
  bool center_finite = true;
  bool derived_group_dense = true;

  SearchBudget budget;

  LatticeInput() = default;
  explicit LatticeInput(IntMat m, BigInt field_q = 2)
      : gcm(std::move(m)), q(std::move(field_q)) {}
};

enum class SimplicityVerdict { SimpleModCenter, VirtuallySimple, Inconclusive, Inapplicable };

const char* to_string(SimplicityVerdict v);

// One named check with its recorded outcome; run_check(input, name) must
// reproduce `holds` exactly.
struct HypothesisCheck {
  std::string name;
  bool holds = false;
};

using CheckList = std::vector<HypothesisCheck>;

struct Verdict {
  TypeClassification classification;
  std::vector<BigInt> root_group_orders;  // resolved, one per simple root
  BigInt q_min;
  BigInt torus_order;

  bool irreducible = false;
  bool infinite = false;
  bool non_affine = false;
  bool two_spherical = false;
  // Generator pairs whose rank-2 subgroup is one of the excluded small
  // groups; empty is required by the 2-spherical route to (FPRS).
  std::vector<std::pair<int, int>> critical_pairs;
  bool simply_laced = false;

  bool lattice = false;          // W(1/q_min) converges
  Evaluation growth_value;       // exact value of W(1/q_min) when finite

  bool rank_one_perfect = false; // q_min > 3

  SimplicityVerdict simplicity = SimplicityVerdict::Inconclusive;

  BigInt finite_quotient_bound;  // product of the root group orders
  bool quotients_trivial = false;
  std::vector<int> quotient_conditions;  // which of 3, 4, 5 fired

  bool kazhdan = false;
  BigInt kazhdan_threshold_value;  // 1764^rank

  bool finitely_presented = false;
  bool flat_rank_geq_2 = false;
  bool fprs_guaranteed = false;
  bool commensurator_discrete = false;

  // flag name -> every check consulted for it, in evaluation order.
  std::map<std::string, CheckList> trail;
};

// Runs every check and assembles the flags.  Raises InvalidInput on a bad
// datum; arithmetic and budget errors from the growth series propagate.
Verdict analyze(const LatticeInput& in);

// Recomputes a single named check from scratch.  Raises InvalidInput on an
// unknown name.
bool run_check(const LatticeInput& in, const std::string& check_name);

// 1764^n exactly; n = 0 gives 1.
BigInt kazhdan_threshold(int n);

// True iff the group contains a free abelian subgroup of rank 2, decided by
// subset scan: some subset induces an irreducible affine diagram of rank
// >= 3, or two disjoint infinite-type subsets commute entrywise.  The scan
// is exponential in the rank and is capped at rank 24 (BudgetExceeded).
bool flat_rank_geq_2(const CoxeterMatrix& m);

// Largest n >= 0 with (4^(n+1) - 1)/3 <= dist, or nullopt when dist < 1:
// the radius of the ball around the base chamber fixed by the root group
// opposite a half-space at gallery distance dist.
std::optional<int> fprs_fix_radius_bound(const BigInt& dist);

// 3X^2 + (6L + 3)X + (3L^2 + 3L + 1), the chamber-count majorant at
// combinatorial height L.
Poly q_h_polynomial(int big_l);

// Closed form of torus_order * sum_{n>=0} Q(n)^p / q^n with
// Q = q_h_polynomial(l_minus + l_plus), via the power-sum identities.
// Always finite for q >= 2; exact rational.
Evaluation integrability_bound(int l_minus, int l_plus, int p, const BigInt& q,
                               const BigInt& torus_order);

} // namespace twinlat

#endif
