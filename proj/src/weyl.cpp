#include "twinlat/weyl.hpp"

#include <unordered_set>

namespace twinlat {

namespace {

// Sign of column j, which for an inverse-action column is a root vector and
// therefore has all entries of one sign.
bool negative_column(const IntMat& m, int j) {
  for (int i = 0; i < m.size(); ++i) {
    const Int& v = m.at(i, j);
    if (v != 0) return v < 0;
  }
  fail(ErrorCode::Internal, "zero column in a Weyl action matrix");
}

struct FlatPairHash {
  size_t operator()(const std::vector<Int>& v) const {
    size_t h = 1469598103934665603ull;
    for (const auto& x : v) {
      // Low bits plus sign are plenty for hashing; equality stays exact.
      bool neg = x < 0;
      Int mag = neg ? Int(-x) : x;
      auto low = static_cast<unsigned long long>(mag & 0xffffffffull);
      h = (h ^ low) * 1099511628211ull;
      h = (h ^ (neg ? 0x9eu : 0x31u)) * 1099511628211ull;
    }
    return h;
  }
};

std::vector<Int> pair_key(const IntMat& m, const IntMat& c) {
  std::vector<Int> key;
  key.reserve(m.flat().size() + c.flat().size());
  key.insert(key.end(), m.flat().begin(), m.flat().end());
  key.insert(key.end(), c.flat().begin(), c.flat().end());
  return key;
}

} // namespace

WeylSystem::WeylSystem(IntMat gcm) : gcm_(std::move(gcm)), cox_(coxeter_of(gcm_)) {
  int n = gcm_.size();
  for (int i = 0; i < n; ++i) {
    IntMat s = IntMat::identity(n);
    IntMat c = IntMat::identity(n);
    for (int j = 0; j < n; ++j) {
      s.at(i, j) -= gcm_.at(i, j);
      c.at(i, j) -= gcm_.at(j, i);
    }
    gen_root_.push_back(std::move(s));
    gen_coroot_.push_back(std::move(c));
  }
}

WeylElement WeylSystem::identity() const {
  IntMat id = IntMat::identity(rank());
  return WeylElement({}, id, id, id, id);
}

WeylElement WeylSystem::generator(int i) const {
  if (i < 0 || i >= rank()) fail(ErrorCode::InvalidInput, "generator index out of range");
  const IntMat& s = gen_root_[static_cast<size_t>(i)];
  const IntMat& c = gen_coroot_[static_cast<size_t>(i)];
  return WeylElement({i}, s, c, s, c);
}

Word WeylSystem::shortlex_normal_form(const IntMat& root_inv) const {
  Word nf;
  IntMat inv = root_inv;
  while (true) {
    int descent = -1;
    for (int i = 0; i < rank(); ++i)
      if (negative_column(inv, i)) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    nf.push_back(descent);
    inv = inv * gen_root_[static_cast<size_t>(descent)];
  }
  if (!inv.is_identity())
    fail(ErrorCode::Internal, "element with no descent is not the identity");
  return nf;
}

WeylElement WeylSystem::assemble(IntMat m, IntMat c, IntMat mi, IntMat ci) const {
  Word nf = shortlex_normal_form(mi);
  return WeylElement(std::move(nf), std::move(m), std::move(c), std::move(mi), std::move(ci));
}

WeylElement WeylSystem::multiply(const WeylElement& u, const WeylElement& v) const {
  return assemble(u.root_action() * v.root_action(),
                  u.coroot_action() * v.coroot_action(),
                  v.root_action_inv() * u.root_action_inv(),
                  v.coroot_action_inv() * u.coroot_action_inv());
}

WeylElement WeylSystem::inverse(const WeylElement& u) const {
  return assemble(u.root_action_inv(), u.coroot_action_inv(), u.root_action(),
                  u.coroot_action());
}

WeylElement WeylSystem::from_word(const Word& w) const {
  int n = rank();
  IntMat m = IntMat::identity(n), c = IntMat::identity(n);
  IntMat mi = IntMat::identity(n), ci = IntMat::identity(n);
  for (int i : w) {
    if (i < 0 || i >= n) fail(ErrorCode::InvalidInput, "generator index out of range");
    m = m * gen_root_[static_cast<size_t>(i)];
    c = c * gen_coroot_[static_cast<size_t>(i)];
    mi = gen_root_[static_cast<size_t>(i)] * mi;
    ci = gen_coroot_[static_cast<size_t>(i)] * ci;
  }
  return assemble(std::move(m), std::move(c), std::move(mi), std::move(ci));
}

bool WeylSystem::left_descent(const WeylElement& w, int i) const {
  return negative_column(w.root_action_inv(), i);
}

bool WeylSystem::right_descent(const WeylElement& w, int i) const {
  return negative_column(w.root_action(), i);
}

std::vector<WeylElement> WeylSystem::ball(int radius, std::size_t cap) const {
  if (radius < 0) fail(ErrorCode::InvalidInput, "ball radius must be >= 0");
  std::vector<WeylElement> out;
  std::unordered_set<std::vector<Int>, FlatPairHash> seen;
  out.push_back(identity());
  seen.insert(pair_key(out[0].root_action(), out[0].coroot_action()));
  // Right-multiplication BFS.  Parents are visited in (length, word) order
  // and children appended with ascending generator index, so each element is
  // first reached through its ShortLex normal form: ShortLex normal forms
  // are closed under prefixes, making first-wins dedup produce normal forms
  // without any per-element normalization.
  for (size_t head = 0; head < out.size(); ++head) {
    if (out[head].length() >= radius) continue;
    for (int i = 0; i < rank(); ++i) {
      if (right_descent(out[head], i)) continue;
      IntMat m = out[head].root_action() * gen_root_[static_cast<size_t>(i)];
      IntMat c = out[head].coroot_action() * gen_coroot_[static_cast<size_t>(i)];
      auto key = pair_key(m, c);
      if (!seen.insert(std::move(key)).second) continue;
      if (out.size() + 1 > cap)
        fail(ErrorCode::BudgetExceeded, "ball enumeration exceeded the configured cap");
      Word w = out[head].word();
      w.push_back(i);
      IntMat mi = gen_root_[static_cast<size_t>(i)] * out[head].root_action_inv();
      IntMat ci = gen_coroot_[static_cast<size_t>(i)] * out[head].coroot_action_inv();
      out.push_back(WeylElement(std::move(w), std::move(m), std::move(c),
                                std::move(mi), std::move(ci)));
    }
  }
  return out;
}

Int WeylSystem::pairing(const IntVec& root_vec, const IntVec& coroot_vec) const {
  int n = rank();
  if (static_cast<int>(root_vec.size()) != n || static_cast<int>(coroot_vec.size()) != n)
    fail(ErrorCode::InvalidInput, "pairing vector size mismatch");
  Int acc = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      acc += coroot_vec[static_cast<size_t>(i)] * gcm_.at(i, j) * root_vec[static_cast<size_t>(j)];
  return acc;
}

} // namespace twinlat
