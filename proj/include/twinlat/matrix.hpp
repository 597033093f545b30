// Integer vectors and square matrices over arbitrary-precision integers.
// Weyl action matrices grow exponentially with word length, so fixed-width
// entries would overflow on the deep witnesses this library certifies.

#ifndef TWINLAT_MATRIX_HPP
#define TWINLAT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "twinlat/errors.hpp"
#include "twinlat/numeric.hpp"

namespace twinlat {

using Int = BigInt;
using IntVec = std::vector<Int>;

// Row-major square matrix.
class IntMat {
public:
  IntMat() = default;
  IntMat(int n, Int fill) : n_(n), a_(static_cast<size_t>(n) * n, std::move(fill)) {}
  static IntMat identity(int n) {
    IntMat m(n, 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<Int>& flat() const { return a_; }

  bool operator==(const IntMat& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const IntMat& o) const { return !(*this == o); }
  bool operator<(const IntMat& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return a_ < o.a_;
  }

  IntMat operator*(const IntMat& o) const {
    if (n_ != o.n_) fail(ErrorCode::Internal, "matrix size mismatch");
    IntMat r(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const Int& aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  IntVec apply(const IntVec& x) const {
    if (static_cast<int>(x.size()) != n_) fail(ErrorCode::Internal, "vector size mismatch");
    IntVec y(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) y[static_cast<size_t>(i)] += at(i, j) * x[static_cast<size_t>(j)];
    return y;
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

private:
  int n_ = 0;
  std::vector<Int> a_;
};

inline IntVec negated(const IntVec& v) {
  IntVec r(v);
  for (auto& x : r) x = -x;
  return r;
}

inline bool all_nonneg(const IntVec& v) {
  for (const auto& x : v)
    if (x < 0) return false;
  return true;
}

inline bool all_nonpos(const IntVec& v) {
  for (const auto& x : v)
    if (x > 0) return false;
  return true;
}

inline bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

} // namespace twinlat

#endif
