#include "twinlat/roots.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace twinlat {

namespace {

struct FlatKeyHash {
  size_t operator()(const std::vector<Int>& v) const {
    size_t h = 1469598103934665603ull;
    for (const auto& x : v) {
      bool neg = x < 0;
      Int mag = neg ? Int(-x) : x;
      auto low = static_cast<unsigned long long>(mag & 0xffffffffull);
      h = (h ^ low) * 1099511628211ull;
      h = (h ^ (neg ? 0x9eu : 0x31u)) * 1099511628211ull;
    }
    return h;
  }
};

std::vector<Int> element_key(const WeylElement& w) {
  std::vector<Int> key;
  key.reserve(w.root_action().flat().size() + w.coroot_action().flat().size());
  key.insert(key.end(), w.root_action().flat().begin(), w.root_action().flat().end());
  key.insert(key.end(), w.coroot_action().flat().begin(), w.coroot_action().flat().end());
  return key;
}

int vec_sign(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0 ? 1 : -1;
  return 0;
}

} // namespace

Root RootCalculus::simple_root(int i) const {
  int n = sys_->rank();
  if (i < 0 || i >= n) fail(ErrorCode::InvalidInput, "simple root index out of range");
  IntVec v(static_cast<size_t>(n), 0), cv(static_cast<size_t>(n), 0);
  v[static_cast<size_t>(i)] = 1;
  cv[static_cast<size_t>(i)] = 1;
  return Root(std::move(v), std::move(cv), {}, i);
}

Root RootCalculus::negate(const Root& r) const {
  Word w = r.witness_word();
  w.push_back(r.witness_simple());
  return Root(negated(r.vec()), negated(r.covec()), std::move(w), r.witness_simple());
}

Root RootCalculus::act(const WeylElement& w, const Root& r) const {
  IntVec v = w.root_action().apply(r.vec());
  IntVec cv = w.coroot_action().apply(r.covec());
  if (vec_sign(v) == 0 || (!all_nonneg(v) && !all_nonpos(v)))
    fail(ErrorCode::Internal, "action produced a vector that is not a root");
  Word word = w.word();
  word.insert(word.end(), r.witness_word().begin(), r.witness_word().end());
  return Root(std::move(v), std::move(cv), std::move(word), r.witness_simple());
}

Root RootCalculus::from_witness(const Word& u, int simple, bool positive_sign) const {
  Root r = act(sys_->from_word(u), simple_root(simple));
  return positive_sign ? r : negate(r);
}

WeylElement RootCalculus::reflection_of(const Root& r) const {
  WeylElement u = sys_->from_word(r.witness_word());
  WeylElement s = sys_->generator(r.witness_simple());
  return sys_->multiply(sys_->multiply(u, s), sys_->inverse(u));
}

bool RootCalculus::vec_in_halfspace(const IntMat& root_action_inv, const IntVec& vec) const {
  int s = vec_sign(root_action_inv.apply(vec));
  if (s == 0) fail(ErrorCode::Internal, "root vector mapped to zero");
  return s > 0;
}

bool RootCalculus::chamber_in_halfspace(const WeylElement& w, const Root& r) const {
  return vec_in_halfspace(w.root_action_inv(), r.vec());
}

Int RootCalculus::k_invariant(const Root& a, const Root& b) const {
  Int p = sys_->pairing(a.vec(), b.covec());
  Int q = sys_->pairing(b.vec(), a.covec());
  return p * q;
}

ProductOrder RootCalculus::product_order(const Root& a, const Root& b) const {
  if (a.vec() == b.vec() || a.vec() == negated(b.vec())) return {true, 1};
  Int k = k_invariant(a, b);
  if (k < 0)
    fail(ErrorCode::Internal, "negative pairing product for a root pair");
  if (k == 0) return {true, 2};
  if (k == 1) return {true, 3};
  if (k == 2) return {true, 4};
  if (k == 3) return {true, 6};
  return {false, 0};
}

namespace {

// Chambers guaranteed to sit on prescribed sides of a root's wall: the
// root's defining chamber and its mirror across the wall.
void seed_chambers(const WeylSystem& sys, const Root& r, std::vector<WeylElement>& out) {
  WeylElement u = sys.from_word(r.witness_word());
  out.push_back(sys.multiply(u, sys.generator(r.witness_simple())));
  out.push_back(std::move(u));
}

} // namespace

HalfspaceRelation RootCalculus::halfspace_relation(const Root& a, const Root& b,
                                                   const SearchBudget& budget) const {
  HalfspaceRelation rel;
  if (a.vec() == b.vec()) {
    rel.kind = RelationKind::Equal;
    return rel;
  }
  if (a.vec() == negated(b.vec())) {
    rel.kind = RelationKind::Opposite;
    return rel;
  }
  ProductOrder po = product_order(a, b);
  if (po.finite) {
    rel.kind = RelationKind::Crossing;
    return rel;
  }

  // Infinite dihedral: the walls do not cross, so exactly one of the four
  // quadrants is empty.  Find chambers for three; the missing one is it.
  rel.kind = RelationKind::Nested;
  std::vector<WeylElement> bases{sys_->identity()};
  seed_chambers(*sys_, a, bases);
  seed_chambers(*sys_, b, bases);

  for (int radius : budget.radius_schedule) {
    std::vector<WeylElement> chambers = sys_->ball(radius, budget.ball_cap);
    std::vector<std::optional<QuadrantWitness>> found(4);
    int found_count = 0;
    for (const auto& base : bases) {
      IntVec va = base.root_action_inv().apply(a.vec());
      IntVec vb = base.root_action_inv().apply(b.vec());
      for (const auto& c : chambers) {
        bool in_a = vec_in_halfspace(c.root_action_inv(), va);
        bool in_b = vec_in_halfspace(c.root_action_inv(), vb);
        size_t slot = (in_a ? 0u : 2u) + (in_b ? 0u : 1u);
        if (found[slot]) continue;
        found[slot] = QuadrantWitness{QuadrantSign{in_a, in_b}, sys_->multiply(base, c)};
        if (++found_count == 3) break;
      }
      if (found_count == 3) break;
    }
    if (found_count == 3) {
      for (size_t slot = 0; slot < 4; ++slot) {
        if (found[slot])
          rel.witnesses.push_back(*found[slot]);
        else
          rel.empty_quadrant = QuadrantSign{slot < 2, slot % 2 == 0};
      }
      rel.radius_used = radius;
      return rel;
    }
  }
  fail(ErrorCode::BudgetExceeded,
       "halfspace relation search exhausted its radius schedule");
}

bool RootCalculus::verify_certificate(const Root& a, const Root& b,
                                      const HalfspaceRelation& rel) const {
  if (rel.kind != RelationKind::Nested) return false;
  if (rel.witnesses.size() != 3) return false;
  bool quadrant_seen[4] = {false, false, false, false};
  for (const auto& w : rel.witnesses) {
    size_t slot = (w.quadrant.first_positive ? 0u : 2u) +
                  (w.quadrant.second_positive ? 0u : 1u);
    if (quadrant_seen[slot]) return false;
    quadrant_seen[slot] = true;
    if (w.quadrant == rel.empty_quadrant) return false;
    if (chamber_in_halfspace(w.chamber, a) != w.quadrant.first_positive) return false;
    if (chamber_in_halfspace(w.chamber, b) != w.quadrant.second_positive) return false;
  }
  return true;
}

std::optional<WeylElement> RootCalculus::find_quadrant_chamber(
    const Root& a, bool sa, const Root& b, bool sb, const SearchBudget& budget) const {
  std::vector<WeylElement> bases{sys_->identity()};
  seed_chambers(*sys_, a, bases);
  seed_chambers(*sys_, b, bases);
  for (int radius : budget.radius_schedule) {
    std::vector<WeylElement> chambers = sys_->ball(radius, budget.ball_cap);
    for (const auto& base : bases) {
      IntVec va = base.root_action_inv().apply(a.vec());
      IntVec vb = base.root_action_inv().apply(b.vec());
      for (const auto& c : chambers) {
        if (vec_in_halfspace(c.root_action_inv(), va) == sa &&
            vec_in_halfspace(c.root_action_inv(), vb) == sb)
          return sys_->multiply(base, c);
      }
    }
  }
  return std::nullopt;
}

bool RootCalculus::is_prenilpotent(const Root& a, const Root& b,
                                   const SearchBudget& budget) const {
  HalfspaceRelation rel = halfspace_relation(a, b, budget);
  switch (rel.kind) {
    case RelationKind::Equal: return true;
    case RelationKind::Opposite: return false;
    case RelationKind::Crossing: return true;
    case RelationKind::Nested:
      return rel.empty_quadrant.first_positive != rel.empty_quadrant.second_positive;
  }
  fail(ErrorCode::Internal, "unreachable relation kind");
}

bool RootCalculus::halfspace_subset(const Root& p, const Root& q,
                                    const SearchBudget& budget) const {
  if (p.vec() == q.vec()) return true;
  if (p.vec() == negated(q.vec())) return false;
  if (product_order(p, q).finite) return false;
  HalfspaceRelation rel = halfspace_relation(p, q, budget);
  return rel.empty_quadrant.first_positive && !rel.empty_quadrant.second_positive;
}

std::vector<WeylElement> RootCalculus::dihedral_elements(const Root& a, const Root& b) const {
  WeylElement ra = reflection_of(a);
  WeylElement rb = reflection_of(b);
  std::vector<WeylElement> elems{sys_->identity()};
  std::unordered_set<std::vector<Int>, FlatKeyHash> seen;
  seen.insert(element_key(elems[0]));
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto* g : {&ra, &rb}) {
      WeylElement next = sys_->multiply(elems[i], *g);
      if (seen.insert(element_key(next)).second) elems.push_back(std::move(next));
    }
    if (elems.size() > 24)
      fail(ErrorCode::Internal, "dihedral wall group failed to close");
  }
  return elems;
}

bool RootCalculus::separates_quadrants(const WeylElement& x, const WeylElement& y,
                                       const Root& a, const Root& b, const Root& h,
                                       std::size_t cap) const {
  if (!chamber_in_halfspace(x, h) || chamber_in_halfspace(y, h)) return false;
  struct Side {
    std::unordered_set<std::vector<Int>, FlatKeyHash> visited;
    std::vector<WeylElement> frontier;
    bool inside = true;
  };
  Side sides[2];
  sides[0].frontier.push_back(x);
  sides[0].visited.insert(element_key(x));
  sides[1].frontier.push_back(y);
  sides[1].visited.insert(element_key(y));
  sides[1].inside = false;
  size_t total = 2;
  while (!sides[0].frontier.empty() || !sides[1].frontier.empty()) {
    for (auto& side : sides) {
      std::vector<WeylElement> next;
      for (const auto& c : side.frontier)
        for (int i = 0; i < sys_->rank(); ++i) {
          WeylElement child = sys_->multiply(c, sys_->generator(i));
          if (chamber_in_halfspace(child, a) != side.inside ||
              chamber_in_halfspace(child, b) != side.inside)
            continue;
          if (!side.visited.insert(element_key(child)).second) continue;
          if (++total > cap)
            fail(ErrorCode::BudgetExceeded,
                 "interval membership undecided within budget");
          if (chamber_in_halfspace(child, h) != side.inside) return false;
          next.push_back(std::move(child));
        }
      side.frontier = std::move(next);
    }
  }
  return true;
}

std::vector<Root> RootCalculus::interval(const Root& a, const Root& b,
                                         const SearchBudget& budget) const {
  HalfspaceRelation rel = halfspace_relation(a, b, budget);
  bool mixed_gap = rel.empty_quadrant.first_positive != rel.empty_quadrant.second_positive;
  if (rel.kind == RelationKind::Opposite ||
      (rel.kind == RelationKind::Nested && !mixed_gap))
    fail(ErrorCode::NotPrenilpotent, "interval requires a prenilpotent pair");
  if (rel.kind == RelationKind::Equal) return {a};

  std::optional<WeylElement> x = find_quadrant_chamber(a, true, b, true, budget);
  std::optional<WeylElement> y = find_quadrant_chamber(a, false, b, false, budget);
  if (!x || !y)
    fail(ErrorCode::BudgetExceeded, "interval endpoints not found within budget");

  // Crossing walls: the finite group M generated by the two reflections cuts
  // the chamber set into |M| sectors, each realized by m*x, and every
  // half-space whose wall belongs to the M-orbit is a union of sectors, so
  // the inclusions defining membership reduce to checks on the sector
  // representatives.  Parallel walls: membership is the inclusion chain
  // H_inner <= H_wall <= H_outer, a pair question on each side.
  std::vector<WeylElement> reps;
  std::vector<char> in_pp, in_mm;
  std::set<IntVec> span;
  if (rel.kind == RelationKind::Crossing) {
    for (const auto& m : dihedral_elements(a, b)) {
      span.insert(m.root_action().apply(a.vec()));
      span.insert(m.root_action().apply(negated(a.vec())));
      span.insert(m.root_action().apply(b.vec()));
      span.insert(m.root_action().apply(negated(b.vec())));
      WeylElement c = sys_->multiply(m, *x);
      bool ia = chamber_in_halfspace(c, a);
      bool ib = chamber_in_halfspace(c, b);
      in_pp.push_back(ia && ib);
      in_mm.push_back(!ia && !ib);
      reps.push_back(std::move(c));
    }
  }
  const Root* inner = &a;
  const Root* outer = &b;
  if (rel.kind == RelationKind::Nested && !rel.empty_quadrant.first_positive)
    std::swap(inner, outer);

  // Every member's wall separates x from y, and one minimal gallery from x
  // to y crosses exactly the separating walls, once each, x-side positive.
  Word path = sys_->multiply(sys_->inverse(*x), *y).word();
  std::vector<Root> out;
  WeylElement prefix = *x;
  for (int step : path) {
    Root wall = act(prefix, simple_root(step));
    prefix = sys_->multiply(prefix, sys_->generator(step));
    bool member;
    if (rel.kind == RelationKind::Nested) {
      member = halfspace_subset(*inner, wall, budget) &&
               halfspace_subset(wall, *outer, budget);
    } else if (span.count(wall.vec()) != 0) {
      member = true;
      for (size_t i = 0; i < reps.size() && member; ++i) {
        bool in_wall = chamber_in_halfspace(reps[i], wall);
        member = (!in_pp[i] || in_wall) && (!in_mm[i] || !in_wall);
      }
    } else {
      member = separates_quadrants(*x, *y, a, b, wall, budget.ball_cap);
    }
    if (member) out.push_back(std::move(wall));
  }

  bool has_a = false, has_b = false;
  for (const auto& r : out) {
    has_a = has_a || r == a;
    has_b = has_b || r == b;
  }
  if (!has_a || !has_b)
    fail(ErrorCode::Internal, "interval lost one of its endpoints");
  return out;
}

namespace {

bool closure_holds(RootCalculus const& calc, const std::vector<Root>& set,
                   const SearchBudget& budget) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j) {
      for (const auto& r : calc.interval(set[i], set[j], budget)) {
        bool inside = false;
        for (const auto& s : set) inside = inside || s == r;
        if (!inside) return false;
      }
    }
  return true;
}

} // namespace

bool RootCalculus::is_nilpotent_set(const std::vector<Root>& set,
                                    const SearchBudget& budget) const {
  std::vector<Root> uniq;
  for (const auto& r : set) {
    bool dup = false;
    for (const auto& s : uniq) dup = dup || s == r;
    if (!dup) uniq.push_back(r);
  }
  for (size_t i = 0; i < uniq.size(); ++i)
    for (size_t j = i + 1; j < uniq.size(); ++j)
      if (!is_prenilpotent(uniq[i], uniq[j], budget)) return false;
  return closure_holds(*this, uniq, budget);
}

std::vector<Root> RootCalculus::nibbling_sequence(const std::vector<Root>& set,
                                                  const SearchBudget& budget) const {
  if (!is_nilpotent_set(set, budget))
    fail(ErrorCode::NotNilpotent, "nibbling requires a nilpotent set");
  std::vector<Root> remaining;
  for (const auto& r : set) {
    bool dup = false;
    for (const auto& s : remaining) dup = dup || s == r;
    if (!dup) remaining.push_back(r);
  }
  std::sort(remaining.begin(), remaining.end());

  std::vector<Root> seq;
  while (!remaining.empty()) {
    if (remaining.size() == 1) {
      seq.push_back(remaining[0]);
      break;
    }
    bool removed = false;
    for (size_t i = 0; i < remaining.size(); ++i) {
      std::vector<Root> rest;
      for (size_t j = 0; j < remaining.size(); ++j)
        if (j != i) rest.push_back(remaining[j]);
      if (closure_holds(*this, rest, budget)) {
        seq.push_back(remaining[i]);
        remaining = std::move(rest);
        removed = true;
        break;
      }
    }
    if (!removed)
      fail(ErrorCode::NoNibblingFound,
           "greedy removal found no root whose deletion keeps interval closure");
  }
  return seq;
}

int RootCalculus::chamber_to_halfspace_distance(const WeylElement& w, const Root& r,
                                                std::size_t cap) const {
  if (chamber_in_halfspace(w, r)) return 0;
  std::unordered_set<std::vector<Int>, FlatKeyHash> visited;
  std::vector<WeylElement> frontier{w};
  visited.insert(element_key(w));
  size_t total = 1;
  int dist = 0;
  while (!frontier.empty()) {
    ++dist;
    std::vector<WeylElement> next;
    for (const auto& c : frontier)
      for (int i = 0; i < sys_->rank(); ++i) {
        WeylElement child = sys_->multiply(c, sys_->generator(i));
        if (!visited.insert(element_key(child)).second) continue;
        if (++total > cap)
          fail(ErrorCode::BudgetExceeded, "distance search exceeded the chamber cap");
        if (chamber_in_halfspace(child, r)) return dist;
        next.push_back(child);
      }
    frontier = std::move(next);
  }
  fail(ErrorCode::Internal, "half-space exhausted without a hit");
}

std::vector<Root> RootCalculus::roots_up_to_depth(int depth, std::size_t cap) const {
  std::vector<Root> out;
  std::set<IntVec> seen;
  for (const auto& w : sys_->ball(depth, cap)) {
    for (int i = 0; i < sys_->rank(); ++i) {
      Root plus = act(w, simple_root(i));
      if (seen.insert(plus.vec()).second) out.push_back(plus);
      Root minus = negate(plus);
      if (seen.insert(minus.vec()).second) out.push_back(minus);
    }
  }
  return out;
}

} // namespace twinlat
