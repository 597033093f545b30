// Shared fixtures: matrix builders and the recurring test systems.

#ifndef TWINLAT_TESTS_SUPPORT_HPP
#define TWINLAT_TESTS_SUPPORT_HPP

#include <vector>

#include "twinlat/errors.hpp"
#include "twinlat/gcm.hpp"
#include "twinlat/matrix.hpp"

namespace twinlat::test {

inline IntMat gcm(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  IntMat a(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return a;
}

inline CoxeterMatrix cox(const std::vector<std::vector<int>>& rows) {
  return CoxeterMatrix::from_entries(rows);
}

// Finite Weyl group, m = 3.
inline IntMat gcm_a2() { return gcm({{2, -1}, {-1, 2}}); }
// Finite, m = 4.
inline IntMat gcm_b2() { return gcm({{2, -1}, {-2, 2}}); }
// Infinite dihedral / affine rank 2.
inline IntMat gcm_a1t() { return gcm({{2, -2}, {-2, 2}}); }
// Affine rank 3 triangle.
inline IntMat gcm_a2t() { return gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}); }
// Rank-3 all-(-2): every pairwise subgroup infinite dihedral.
inline IntMat gcm_sec51() { return gcm({{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}}); }
// Indefinite with one infinite and two finite bonds.
inline IntMat gcm_mixed() { return gcm({{2, -2, -1}, {-2, 2, -1}, {-1, -1, 2}}); }
// 2-spherical indefinite (4,3,4) triangle.
inline IntMat gcm_tri434() { return gcm({{2, -2, -1}, {-1, 2, -2}, {-1, -1, 2}}); }
// 2-spherical indefinite simply laced: complete graph on 4 vertices.
inline IntMat gcm_k4() {
  IntMat a(4, -1);
  for (int i = 0; i < 4; ++i) a.at(i, i) = 2;
  return a;
}

inline ErrorCode code_of(const Error& e) { return e.code(); }

// A GCM realizing a crystallographic Coxeter matrix (m in {2,3,4,6,inf}).
inline IntMat gcm_of_cox(const CoxeterMatrix& m) {
  int n = m.rank();
  IntMat a(n, 0);
  for (int i = 0; i < n; ++i) a.at(i, i) = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      switch (m.entry(i, j)) {
        case 2: break;
        case 3: a.at(i, j) = -1; break;
        case 4: a.at(i, j) = (i < j) ? -1 : -2; break;
        case 6: a.at(i, j) = (i < j) ? -1 : -3; break;
        case kInfiniteOrder: a.at(i, j) = -2; break;
        default: fail(ErrorCode::InvalidInput, "not crystallographic");
      }
    }
  return a;
}

} // namespace twinlat::test

#endif
