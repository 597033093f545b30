// Input matrices and diagram classification: generalized Cartan matrix
// validation, the derived Coxeter matrix, and the complete finite/affine
// diagram catalogues used to sort systems into spherical / affine /
// indefinite with named irreducible components.

#ifndef TWINLAT_GCM_HPP
#define TWINLAT_GCM_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "twinlat/matrix.hpp"
#include "twinlat/numeric.hpp"

namespace twinlat {

// Coxeter matrix entry meaning m = infinity.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

class CoxeterMatrix {
public:
  // Validates: square, symmetric, 1 on the diagonal, entries >= 2 (or
  // kInfiniteOrder) off it.  Raises InvalidInput otherwise.
  static CoxeterMatrix from_entries(const std::vector<std::vector<int>>& m);

  int rank() const { return n_; }
  int entry(int i, int j) const { return m_[static_cast<size_t>(i) * n_ + j]; }
  // Induced submatrix on the given vertex subset (ascending indices).
  CoxeterMatrix submatrix(const std::vector<int>& keep) const;
  bool operator==(const CoxeterMatrix& o) const { return n_ == o.n_ && m_ == o.m_; }

private:
  CoxeterMatrix(int n, std::vector<int> m) : n_(n), m_(std::move(m)) {}
  int n_ = 0;
  std::vector<int> m_;
};

// Generalized Cartan matrix shape check: 2 on the diagonal, non-positive
// integers off it, and a_ij = 0 iff a_ji = 0.  Raises InvalidInput.
void validate_gcm(const IntMat& a);

// Coxeter matrix of a GCM: k = a_st * a_ts maps 0,1,2,3 to m = 2,3,4,6 and
// anything >= 4 to infinity.
CoxeterMatrix coxeter_of(const IntMat& a);

enum class DiagramKind { Spherical, Affine, Indefinite };

struct ComponentType {
  DiagramKind kind = DiagramKind::Indefinite;
  // "A".."I2" finite, "A~".."G~" affine, "" for indefinite.
  std::string family;
  int subscript = 0;          // A3 -> 3, C~2 -> 2; 0 when not applicable
  int param = 0;              // m for I2(m); 0 otherwise
  std::vector<int> vertices;  // original indices, ascending
  std::string label() const;  // "A2", "I2(7)", "A~1", "indefinite"
};

struct TypeClassification {
  std::vector<ComponentType> components;
  DiagramKind kind = DiagramKind::Indefinite;  // whole system
  bool irreducible = false;

  bool spherical() const { return kind == DiagramKind::Spherical; }
  bool infinite() const { return kind != DiagramKind::Spherical; }
  bool affine() const { return kind == DiagramKind::Affine; }
  std::string type_string() const;  // e.g. "spherical:A2 x affine:A~1"
};

// Connected-component split followed by catalogue matching.  The system is
// Spherical when every component is, Affine when every component is
// spherical or affine with at least one affine, Indefinite otherwise.
TypeClassification classify(const CoxeterMatrix& m);

// True iff every pair of generators spans a finite subgroup (all m finite).
bool is_two_spherical(const CoxeterMatrix& m);

// Rank-2 subgroups excluded by the small-field conditions: pairs (s, t)
// whose (m_st, min root group order) lies in {(4,2),(6,2),(6,3),(8,2)}.
std::vector<std::pair<int, int>> critical_rank2_pairs(
    const CoxeterMatrix& m, const std::vector<BigInt>& root_group_orders);

// True iff every off-diagonal m is 2 or 3.
bool is_simply_laced(const CoxeterMatrix& m);

// True iff every off-diagonal m lies in {2,3,4,6,infinity}, i.e. the matrix
// is realizable by a generalized Cartan matrix.
bool is_crystallographic(const CoxeterMatrix& m);

} // namespace twinlat

#endif
