// Roots as half-spaces of the chamber set: positivity, reflections,
// membership, the disjointness decision procedure with chamber certificates,
// prenilpotent pairs, intervals, nilpotent sets, and gallery distance.
//
// Semantics: the half-space of a root g is H_g = {w in W : w^{-1}(g) > 0};
// the fundamental chamber c+ is the identity.  Every emptiness verdict is
// certified: either a chamber witness, or the one-empty-quadrant trichotomy
// for walls whose reflections generate an infinite dihedral group.

#ifndef TWINLAT_ROOTS_HPP
#define TWINLAT_ROOTS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "twinlat/weyl.hpp"

namespace twinlat {

struct SearchBudget {
  std::vector<int> radius_schedule{4, 6, 8};
  std::size_t ball_cap = WeylSystem::kDefaultBallCap;
};

class Root {
public:
  // Empty root for container use; real roots come from RootCalculus.
  Root() = default;

  const IntVec& vec() const { return vec_; }
  const IntVec& covec() const { return covec_; }
  // Derivation certificate: applying the word to the simple root/coroot
  // reproduces (vec, covec) exactly, sign included.
  const Word& witness_word() const { return wit_word_; }
  int witness_simple() const { return wit_simple_; }
  bool positive() const { return all_nonneg(vec_); }

  // A root IS its half-space, and the half-space is determined by vec.
  bool operator==(const Root& o) const { return vec_ == o.vec_; }
  bool operator!=(const Root& o) const { return vec_ != o.vec_; }
  bool operator<(const Root& o) const { return vec_ < o.vec_; }

private:
  friend class RootCalculus;
  Root(IntVec v, IntVec cv, Word w, int s)
      : vec_(std::move(v)), covec_(std::move(cv)), wit_word_(std::move(w)), wit_simple_(s) {}
  IntVec vec_, covec_;
  Word wit_word_;
  int wit_simple_ = 0;
};

enum class RelationKind { Equal, Opposite, Crossing, Nested };

// Sign pattern of a quadrant H_{sa.a} n H_{sb.b}.
struct QuadrantSign {
  bool first_positive = true;
  bool second_positive = true;
  bool operator==(const QuadrantSign& o) const {
    return first_positive == o.first_positive && second_positive == o.second_positive;
  }
};

struct QuadrantWitness {
  QuadrantSign quadrant;
  WeylElement chamber;
};

struct HalfspaceRelation {
  RelationKind kind = RelationKind::Crossing;
  // Meaningful only when kind == Nested.
  QuadrantSign empty_quadrant;
  // The three chamber certificates proving the other quadrants nonempty
  // (Nested only), listed in quadrant order (+,+), (+,-), (-,+), (-,-).
  std::vector<QuadrantWitness> witnesses;
  int radius_used = 0;
};

struct ProductOrder {
  bool finite = true;
  int order = 1;  // meaningful when finite
};

class RootCalculus {
public:
  explicit RootCalculus(const WeylSystem& sys) : sys_(&sys) {}
  const WeylSystem& system() const { return *sys_; }

  Root simple_root(int i) const;
  Root negate(const Root& r) const;
  Root act(const WeylElement& w, const Root& r) const;
  // The root sign * u(alpha_i) for a CLI literal.
  Root from_witness(const Word& u, int simple, bool positive_sign) const;

  // The reflection u s_i u^{-1} through the root's wall.
  WeylElement reflection_of(const Root& r) const;

  bool chamber_in_halfspace(const WeylElement& w, const Root& r) const;

  // k(a,b) = <a, b~><b, a~>; non-negative for genuine real root pairs.
  Int k_invariant(const Root& a, const Root& b) const;
  // Order of the product of the two wall reflections: 1 for equal/opposite
  // walls, else k = 0,1,2,3 gives 2,3,4,6 and k >= 4 gives infinite.
  ProductOrder product_order(const Root& a, const Root& b) const;

  HalfspaceRelation halfspace_relation(const Root& a, const Root& b,
                                       const SearchBudget& budget = {}) const;

  // Re-checks a Nested certificate without searching: three witnesses, one
  // per non-empty quadrant, each chamber in the quadrant it claims.
  bool verify_certificate(const Root& a, const Root& b,
                          const HalfspaceRelation& rel) const;

  bool is_prenilpotent(const Root& a, const Root& b,
                       const SearchBudget& budget = {}) const;

  // The closed interval [a, b]: all roots whose half-space wedges between
  // the pair, ordered along a minimal gallery from the (+,+) chamber to the
  // (-,-) chamber.  Requires a prenilpotent pair.
  std::vector<Root> interval(const Root& a, const Root& b,
                             const SearchBudget& budget = {}) const;

  bool is_nilpotent_set(const std::vector<Root>& set,
                        const SearchBudget& budget = {}) const;
  // Greedy removal order certifying nilpotency step by step; raises
  // NotNilpotent when the set is not nilpotent and NoNibblingFound when the
  // greedy strategy stalls.
  std::vector<Root> nibbling_sequence(const std::vector<Root>& set,
                                      const SearchBudget& budget = {}) const;

  // Gallery distance from chamber w to the nearest chamber of H_r.
  int chamber_to_halfspace_distance(const WeylElement& w, const Root& r,
                                    std::size_t cap = WeylSystem::kDefaultBallCap) const;

  // All distinct roots expressible as +-u(alpha_i) with l(u) <= depth, in
  // deterministic order: by word (ball order), index, then sign.
  std::vector<Root> roots_up_to_depth(int depth,
                                      std::size_t cap = WeylSystem::kDefaultBallCap) const;

  // First chamber of H_{sa.a} n H_{sb.b} in the deterministic scan order,
  // or nullopt if the scan exhausts the budget without a hit.  A nullopt is
  // NOT a proof of emptiness; use halfspace_relation for certified verdicts.
  std::optional<WeylElement> find_quadrant_chamber(const Root& a, bool sa,
                                                   const Root& b, bool sb,
                                                   const SearchBudget& budget = {}) const;

private:
  bool vec_in_halfspace(const IntMat& root_action_inv, const IntVec& vec) const;
  // H_p inside H_q, decided through the pair relation: crossing walls leave
  // all four quadrants inhabited, so inclusion needs parallel walls.
  bool halfspace_subset(const Root& p, const Root& q, const SearchBudget& budget) const;
  // All elements of the finite group generated by the two wall reflections.
  std::vector<WeylElement> dihedral_elements(const Root& a, const Root& b) const;
  // Whether H_a n H_b lies inside H_h and H_{-a} n H_{-b} inside H_{-h}, by
  // BFS over both quadrants at once, level-synchronized so a counterexample
  // on either side is reached even when the other side is infinite and
  // clean; quadrants are convex, so exhaustion certifies an inclusion.
  bool separates_quadrants(const WeylElement& x, const WeylElement& y,
                           const Root& a, const Root& b, const Root& h,
                           std::size_t cap) const;

  const WeylSystem* sys_;
};

} // namespace twinlat

#endif
