#include "twinlat/gcm.hpp"

#include <algorithm>
#include <sstream>

namespace twinlat {

CoxeterMatrix CoxeterMatrix::from_entries(const std::vector<std::vector<int>>& m) {
  int n = static_cast<int>(m.size());
  if (n < 1) fail(ErrorCode::InvalidInput, "Coxeter matrix must be nonempty");
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      fail(ErrorCode::InvalidInput, "Coxeter matrix must be square");
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = m[i][j];
  }
  for (int i = 0; i < n; ++i) {
    if (flat[static_cast<size_t>(i) * n + i] != 1)
      fail(ErrorCode::InvalidInput, "Coxeter matrix diagonal must be 1");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int v = flat[static_cast<size_t>(i) * n + j];
      if (v < 2) fail(ErrorCode::InvalidInput, "off-diagonal Coxeter entries must be >= 2");
      if (v != flat[static_cast<size_t>(j) * n + i])
        fail(ErrorCode::InvalidInput, "Coxeter matrix must be symmetric");
    }
  }
  return CoxeterMatrix(n, std::move(flat));
}

CoxeterMatrix CoxeterMatrix::submatrix(const std::vector<int>& keep) const {
  int k = static_cast<int>(keep.size());
  std::vector<int> flat(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      flat[static_cast<size_t>(i) * k + j] = entry(keep[i], keep[j]);
  return CoxeterMatrix(k, std::move(flat));
}

void validate_gcm(const IntMat& a) {
  int n = a.size();
  if (n < 1) fail(ErrorCode::InvalidInput, "Cartan matrix must be nonempty");
  for (int i = 0; i < n; ++i) {
    if (a.at(i, i) != 2)
      fail(ErrorCode::InvalidInput, "Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a.at(i, j) > 0)
        fail(ErrorCode::InvalidInput, "off-diagonal Cartan entries must be <= 0");
      if ((a.at(i, j) == 0) != (a.at(j, i) == 0))
        fail(ErrorCode::InvalidInput, "Cartan matrix zero pattern must be symmetric");
    }
  }
}

CoxeterMatrix coxeter_of(const IntMat& a) {
  validate_gcm(a);
  int n = a.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int j = i + 1; j < n; ++j) {
      Int k = a.at(i, j) * a.at(j, i);
      int order;
      if (k == 0)
        order = 2;
      else if (k == 1)
        order = 3;
      else if (k == 2)
        order = 4;
      else if (k == 3)
        order = 6;
      else
        order = kInfiniteOrder;
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = order;
      m[static_cast<size_t>(j)][static_cast<size_t>(i)] = order;
    }
  }
  return CoxeterMatrix::from_entries(m);
}

std::string ComponentType::label() const {
  if (family.empty()) return "indefinite";
  std::ostringstream os;
  if (family == "I2") {
    os << "I2(" << param << ")";
    return os.str();
  }
  os << family << subscript;
  return os.str();
}

std::string TypeClassification::type_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : components) {
    if (!first) os << " x ";
    first = false;
    switch (c.kind) {
      case DiagramKind::Spherical: os << "spherical:" << c.label(); break;
      case DiagramKind::Affine: os << "affine:" << c.label(); break;
      case DiagramKind::Indefinite: os << "indefinite"; break;
    }
  }
  return os.str();
}

namespace {

struct Component {
  std::vector<int> verts;                 // original indices, ascending
  const CoxeterMatrix* m = nullptr;
  int label(int a, int b) const { return m->entry(verts[static_cast<size_t>(a)], verts[static_cast<size_t>(b)]); }
  bool edge(int a, int b) const { return label(a, b) >= 3; }
  int size() const { return static_cast<int>(verts.size()); }
};

ComponentType named(DiagramKind kind, std::string family, int subscript, int param,
                    std::vector<int> verts) {
  ComponentType t;
  t.kind = kind;
  t.family = std::move(family);
  t.subscript = subscript;
  t.param = param;
  t.vertices = std::move(verts);
  return t;
}

ComponentType indefinite_of(std::vector<int> verts) {
  ComponentType t;
  t.kind = DiagramKind::Indefinite;
  t.vertices = std::move(verts);
  return t;
}

// Matches a rank >= 3 path against the finite and affine label catalogues.
// The label sequence runs along the path; both orientations are tried.
ComponentType classify_path(const std::vector<int>& labels, std::vector<int> verts) {
  int n = static_cast<int>(verts.size());
  auto match = [&](const std::vector<int>& seq) -> ComponentType {
    int fours = 0, others = 0;
    for (int v : seq) {
      if (v == 4) ++fours;
      else if (v != 3) ++others;
    }
    if (others == 0) {
      if (fours == 0) return named(DiagramKind::Spherical, "A", n, 0, verts);
      if (fours == 1) {
        if (seq.back() == 4) return named(DiagramKind::Spherical, "B", n, 0, verts);
        if (n == 4 && seq[1] == 4)
          return named(DiagramKind::Spherical, "F", 4, 0, verts);
        if (n == 5 && seq[2] == 4)
          return named(DiagramKind::Affine, "F~", 4, 0, verts);
        return indefinite_of(verts);
      }
      if (fours == 2 && seq.front() == 4 && seq.back() == 4)
        return named(DiagramKind::Affine, "C~", n - 1, 0, verts);
      return indefinite_of(verts);
    }
    if (others == 1 && fours == 0) {
      if (seq.back() == 5 && n == 3) return named(DiagramKind::Spherical, "H", 3, 0, verts);
      if (seq.back() == 5 && n == 4) return named(DiagramKind::Spherical, "H", 4, 0, verts);
      if (seq.back() == 6 && n == 3) return named(DiagramKind::Affine, "G~", 2, 0, verts);
    }
    return indefinite_of(verts);
  };
  ComponentType forward = match(labels);
  if (forward.kind != DiagramKind::Indefinite) return forward;
  std::vector<int> rev(labels.rbegin(), labels.rend());
  return match(rev);
}

ComponentType classify_component(const Component& c) {
  int n = c.size();
  std::vector<int> verts = c.verts;
  if (n == 1) return named(DiagramKind::Spherical, "A", 1, 0, verts);
  if (n == 2) {
    int m = c.label(0, 1);
    if (m == 2) fail(ErrorCode::Internal, "disconnected pair in one component");
    if (m == kInfiniteOrder) return named(DiagramKind::Affine, "A~", 1, 0, verts);
    if (m == 3) return named(DiagramKind::Spherical, "A", 2, 0, verts);
    if (m == 4) return named(DiagramKind::Spherical, "B", 2, 0, verts);
    if (m == 6) return named(DiagramKind::Spherical, "G", 2, 0, verts);
    return named(DiagramKind::Spherical, "I2", 2, m, verts);
  }

  int edges = 0;
  std::vector<int> deg(static_cast<size_t>(n), 0);
  bool all_simple = true;  // every edge label 3
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c.edge(i, j)) {
        ++edges;
        ++deg[static_cast<size_t>(i)];
        ++deg[static_cast<size_t>(j)];
        if (c.label(i, j) != 3) all_simple = false;
      }

  if (edges != n - 1) {
    // Connected with a cycle; the one affine cycle is the all-3 n-gon with
    // every vertex of degree 2.
    bool ring = edges == n && all_simple;
    for (int d : deg) ring = ring && d == 2;
    if (ring) return named(DiagramKind::Affine, "A~", n - 1, 0, verts);
    return indefinite_of(verts);
  }

  int maxdeg = *std::max_element(deg.begin(), deg.end());
  if (maxdeg >= 4) {
    if (n == 5 && maxdeg == 4 && all_simple) {
      int centers = static_cast<int>(std::count(deg.begin(), deg.end(), 4));
      if (centers == 1) return named(DiagramKind::Affine, "D~", 4, 0, verts);
    }
    return indefinite_of(verts);
  }

  std::vector<int> branch;
  for (int i = 0; i < n; ++i)
    if (deg[static_cast<size_t>(i)] == 3) branch.push_back(i);

  if (branch.empty()) {
    // Path: order vertices from one endpoint and read the labels.
    int start = 0;
    while (deg[static_cast<size_t>(start)] != 1) ++start;
    std::vector<int> order{start};
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[static_cast<size_t>(start)] = 1;
    while (static_cast<int>(order.size()) < n) {
      int cur = order.back();
      for (int j = 0; j < n; ++j)
        if (!seen[static_cast<size_t>(j)] && c.edge(cur, j)) {
          order.push_back(j);
          seen[static_cast<size_t>(j)] = 1;
          break;
        }
    }
    std::vector<int> labels;
    for (size_t i = 0; i + 1 < order.size(); ++i)
      labels.push_back(c.label(order[i], order[i + 1]));
    return classify_path(labels, verts);
  }

  if (static_cast<int>(branch.size()) == 1) {
    int center = branch[0];
    // Three legs; walk each outward collecting labels.
    struct Leg { std::vector<int> labels; };
    std::vector<Leg> legs;
    for (int j = 0; j < n; ++j) {
      if (j == center || !c.edge(center, j)) continue;
      Leg leg;
      int prev = center, cur = j;
      leg.labels.push_back(c.label(prev, cur));
      while (true) {
        int next = -1;
        for (int k = 0; k < n; ++k)
          if (k != prev && k != cur && c.edge(cur, k)) { next = k; break; }
        if (next < 0) break;
        leg.labels.push_back(c.label(cur, next));
        prev = cur;
        cur = next;
      }
      legs.push_back(std::move(leg));
    }
    if (legs.size() != 3) return indefinite_of(verts);
    std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) {
      return a.labels.size() < b.labels.size();
    });
    size_t a = legs[0].labels.size(), b = legs[1].labels.size(), k = legs[2].labels.size();
    int nonsimple = 0;
    for (const auto& leg : legs)
      for (int v : leg.labels)
        if (v != 3) ++nonsimple;
    if (nonsimple == 0) {
      if (a == 1 && b == 1) return named(DiagramKind::Spherical, "D", n, 0, verts);
      if (a == 1 && b == 2 && k == 2) return named(DiagramKind::Spherical, "E", 6, 0, verts);
      if (a == 1 && b == 2 && k == 3) return named(DiagramKind::Spherical, "E", 7, 0, verts);
      if (a == 1 && b == 2 && k == 4) return named(DiagramKind::Spherical, "E", 8, 0, verts);
      if (a == 2 && b == 2 && k == 2) return named(DiagramKind::Affine, "E~", 6, 0, verts);
      if (a == 1 && b == 3 && k == 3) return named(DiagramKind::Affine, "E~", 7, 0, verts);
      if (a == 1 && b == 2 && k == 5) return named(DiagramKind::Affine, "E~", 8, 0, verts);
      return indefinite_of(verts);
    }
    if (nonsimple == 1) {
      // One marked edge: affine only when it is a 4 on the outermost edge
      // of one leg and the two remaining legs are single all-3 edges.
      int marked = -1;
      for (size_t li = 0; li < legs.size(); ++li)
        for (int v : legs[li].labels)
          if (v != 3) marked = static_cast<int>(li);
      const Leg& ml = legs[static_cast<size_t>(marked)];
      bool others_short = true;
      for (size_t li = 0; li < legs.size(); ++li)
        if (static_cast<int>(li) != marked)
          others_short = others_short && legs[li].labels.size() == 1;
      if (ml.labels.back() == 4 && others_short)
        return named(DiagramKind::Affine, "B~", n - 1, 0, verts);
    }
    return indefinite_of(verts);
  }

  if (static_cast<int>(branch.size()) == 2 && all_simple) {
    // Two forks joined by a path, four leaves total.
    int leaves = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
    bool forks_ok = true;
    for (int bvert : branch) {
      int leaf_neighbors = 0;
      for (int j = 0; j < n; ++j)
        if (c.edge(bvert, j) && deg[static_cast<size_t>(j)] == 1) ++leaf_neighbors;
      forks_ok = forks_ok && leaf_neighbors == 2;
    }
    if (leaves == 4 && forks_ok) return named(DiagramKind::Affine, "D~", n - 1, 0, verts);
    return indefinite_of(verts);
  }

  return indefinite_of(verts);
}

} // namespace

TypeClassification classify(const CoxeterMatrix& m) {
  int n = m.rank();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[static_cast<size_t>(i)] >= 0) continue;
    std::vector<int> stack{i};
    comp[static_cast<size_t>(i)] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (comp[static_cast<size_t>(j)] < 0 && m.entry(v, j) >= 3) {
          comp[static_cast<size_t>(j)] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }

  TypeClassification out;
  for (int cidx = 0; cidx < ncomp; ++cidx) {
    Component c;
    c.m = &m;
    for (int i = 0; i < n; ++i)
      if (comp[static_cast<size_t>(i)] == cidx) c.verts.push_back(i);
    out.components.push_back(classify_component(c));
  }
  bool any_affine = false, any_indef = false;
  for (const auto& c : out.components) {
    any_affine = any_affine || c.kind == DiagramKind::Affine;
    any_indef = any_indef || c.kind == DiagramKind::Indefinite;
  }
  out.kind = any_indef ? DiagramKind::Indefinite
             : any_affine ? DiagramKind::Affine
                          : DiagramKind::Spherical;
  out.irreducible = ncomp == 1;
  return out;
}

bool is_two_spherical(const CoxeterMatrix& m) {
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (m.entry(i, j) == kInfiniteOrder) return false;
  return true;
}

std::vector<std::pair<int, int>> critical_rank2_pairs(
    const CoxeterMatrix& m, const std::vector<BigInt>& root_group_orders) {
  if (static_cast<int>(root_group_orders.size()) != m.rank())
    fail(ErrorCode::InvalidInput, "one root group order per generator required");
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      int order = m.entry(i, j);
      BigInt q = std::min(root_group_orders[static_cast<size_t>(i)],
                          root_group_orders[static_cast<size_t>(j)]);
      bool critical = (order == 4 && q == 2) || (order == 6 && q == 2) ||
                      (order == 6 && q == 3) || (order == 8 && q == 2);
      if (critical) out.emplace_back(i, j);
    }
  return out;
}

bool is_simply_laced(const CoxeterMatrix& m) {
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (m.entry(i, j) != 2 && m.entry(i, j) != 3) return false;
  return true;
}

bool is_crystallographic(const CoxeterMatrix& m) {
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      int v = m.entry(i, j);
      if (v != 2 && v != 3 && v != 4 && v != 6 && v != kInfiniteOrder) return false;
    }
  return true;
}

} // namespace twinlat
