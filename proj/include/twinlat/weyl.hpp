// Exact Weyl group elements for a generalized Cartan matrix: each element
// carries its ShortLex normal form together with its action matrices on the
// root and coroot lattices (and their inverses, which drive descent tests).
// Equality is decided by the pair of action matrices, never by the word.

#ifndef TWINLAT_WEYL_HPP
#define TWINLAT_WEYL_HPP

#include <cstddef>
#include <vector>

#include "twinlat/gcm.hpp"
#include "twinlat/matrix.hpp"

namespace twinlat {

using Word = std::vector<int>;

class WeylElement {
public:
  // Empty element for container use; real elements come from WeylSystem.
  WeylElement() = default;

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  const IntMat& root_action() const { return root_; }
  const IntMat& coroot_action() const { return coroot_; }
  const IntMat& root_action_inv() const { return root_inv_; }
  const IntMat& coroot_action_inv() const { return coroot_inv_; }

  bool operator==(const WeylElement& o) const {
    return root_ == o.root_ && coroot_ == o.coroot_;
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  // Deterministic order: by length, then word, lexicographically.
  bool operator<(const WeylElement& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
  }

private:
  friend class WeylSystem;
  WeylElement(Word w, IntMat m, IntMat c, IntMat mi, IntMat ci)
      : word_(std::move(w)), root_(std::move(m)), coroot_(std::move(c)),
        root_inv_(std::move(mi)), coroot_inv_(std::move(ci)) {}
  Word word_;
  IntMat root_, coroot_, root_inv_, coroot_inv_;
};

class WeylSystem {
public:
  static constexpr std::size_t kDefaultBallCap = 1000000;

  // Validates the matrix as a generalized Cartan matrix.
  explicit WeylSystem(IntMat gcm);

  int rank() const { return gcm_.size(); }
  const IntMat& gcm() const { return gcm_; }
  const CoxeterMatrix& coxeter() const { return cox_; }
  const IntMat& generator_root_action(int i) const { return gen_root_[static_cast<size_t>(i)]; }
  const IntMat& generator_coroot_action(int i) const { return gen_coroot_[static_cast<size_t>(i)]; }

  WeylElement identity() const;
  WeylElement generator(int i) const;
  WeylElement multiply(const WeylElement& u, const WeylElement& v) const;
  WeylElement inverse(const WeylElement& u) const;
  // Product of the listed generators, normalized (the input word need not be
  // reduced).
  WeylElement from_word(const Word& w) const;

  // True iff l(s_i w) < l(w), read off the sign of w^{-1}(alpha_i).
  bool left_descent(const WeylElement& w, int i) const;
  // True iff l(w s_i) < l(w), read off the sign of w(alpha_i).
  bool right_descent(const WeylElement& w, int i) const;

  // Every element of length <= radius exactly once, sorted by (length, word).
  // Raises BudgetExceeded when more than cap elements appear.
  std::vector<WeylElement> ball(int radius, std::size_t cap = kDefaultBallCap) const;

  // Integer pairing <x, y_covec> = y^T A x of a root vector against a coroot
  // vector, overflow-checked.
  Int pairing(const IntVec& root_vec, const IntVec& coroot_vec) const;

private:
  Word shortlex_normal_form(const IntMat& root_inv) const;
  WeylElement assemble(IntMat m, IntMat c, IntMat mi, IntMat ci) const;

  IntMat gcm_;
  CoxeterMatrix cox_;
  std::vector<IntMat> gen_root_, gen_coroot_;
};

} // namespace twinlat

#endif
