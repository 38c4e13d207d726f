// Deliberately naive verifiers used by the test suites.  They re-implement
// the group arithmetic from the definitions (plain int64 vectors, direct
// label chasing) and never call the engine's multiplication, order or
// conjugacy routines, so a shared bug cannot confirm itself.

#ifndef BRAIDCRYS_ORACLE_HPP_
#define BRAIDCRYS_ORACLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "braidcrys/crystal.hpp"
#include "braidcrys/families.hpp"
#include "braidcrys/words.hpp"

namespace braidcrys::oracle {

struct BruteElem {
  std::vector<long long> v;
  std::vector<int> w;  // permutation images, or +-1 signs for plbext
};

// label chasing done from scratch: where does basis slot k go, with which
// sign, under the point element w?
inline std::pair<int, int> act_on_slot(const CrystalGroup& g, const std::vector<int>& w,
                                       int k) {
  Label l = g.label(k);
  switch (g.family()) {
    case FamilyTag::VB:
      return {g.label_index({w[l.i - 1], w[l.j - 1]}), 1};
    case FamilyTag::VT: {
      int a = w[l.i - 1], b = w[l.j - 1];
      if (a < b) return {g.label_index({a, b}), 1};
      return {g.label_index({b, a}), -1};
    }
    case FamilyTag::PLBEXT:
      return {k, w[l.j - 1]};
    case FamilyTag::KB3: {
      // parity by counting inversions
      int inv = 0;
      for (size_t x = 0; x < w.size(); ++x)
        for (size_t y = x + 1; y < w.size(); ++y)
          if (w[x] > w[y]) ++inv;
      if (inv % 2 == 0) return {k, 1};
      return {k == 0 ? 1 : 0, 1};
    }
  }
  throw DomainError("unknown family");
}

inline std::vector<int> point_mul(const CrystalGroup& g, const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> r(a.size());
  if (g.point_kind() == PointKind::Perms) {
    for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x] - 1];
  } else {
    for (size_t x = 0; x < a.size(); ++x) r[x] = a[x] * b[x];
  }
  return r;
}

inline bool point_is_identity(const CrystalGroup& g, const std::vector<int>& a) {
  for (size_t x = 0; x < a.size(); ++x)
    if (a[x] != (g.point_kind() == PointKind::Perms ? static_cast<int>(x) + 1 : 1))
      return false;
  return true;
}

inline BruteElem brute_mul(const CrystalGroup& g, const BruteElem& a,
                           const BruteElem& b) {
  BruteElem r;
  r.v = a.v;
  for (int k = 0; k < g.rank(); ++k) {
    if (b.v[k] == 0) continue;
    auto [slot, sign] = act_on_slot(g, a.w, k);
    r.v[slot] += sign * b.v[k];
  }
  r.w = point_mul(g, a.w, b.w);
  return r;
}

inline bool brute_is_identity(const CrystalGroup& g, const BruteElem& e) {
  for (long long c : e.v)
    if (c != 0) return false;
  return point_is_identity(g, e.w);
}

inline BruteElem from_element(const Element& e) {
  BruteElem r;
  for (const Bigint& c : e.v) r.v.push_back(c.as_slonglong());
  r.w = e.w.data;
  return r;
}

// order by repeated multiplication, nullopt (= unknown) beyond the cap
inline std::optional<long long> brute_order(const Element& e, long long cap) {
  const CrystalGroup& g = *e.group;
  BruteElem base = from_element(e);
  BruteElem acc = base;
  for (long long t = 1; t <= cap; ++t) {
    if (brute_is_identity(g, acc)) return t;
    acc = brute_mul(g, acc, base);
  }
  return std::nullopt;
}

struct BruteWitness {
  std::vector<long long> x;
  std::vector<int> c;
};

// exhaustive search over conjugators (x, c) with |x|_inf <= radius and c over
// all of W; nullopt means "not found within the radius", never a disproof.
// The two multiplications per candidate are unrolled onto precomputed slot
// tables so the full box can actually be walked.
inline std::optional<BruteWitness> brute_conjugacy(const Element& e1, const Element& e2,
                                                   long long radius) {
  const CrystalGroup& g = *e1.group;
  BruteElem a = from_element(e1), b = from_element(e2);
  int m = g.rank();
  std::optional<BruteWitness> found;
  auto try_points = [&](const std::vector<int>& c) {
    if (found) return;
    std::vector<int> cinv(c.size());
    if (g.point_kind() == PointKind::Perms)
      for (size_t x = 0; x < c.size(); ++x) cinv[c[x] - 1] = static_cast<int>(x) + 1;
    else
      cinv = c;
    // permutation parts must already match; translations cannot fix that
    std::vector<int> cw = point_mul(g, c, a.w);
    if (point_mul(g, cw, cinv) != b.w) return;
    // slot tables for the two products (x, c) * a and (..) * (x, c)^-1
    std::vector<int> c_slot(m), c_sign(m), cw_slot(m), cw_sign(m), ci_slot(m),
        ci_sign(m);
    for (int k = 0; k < m; ++k) {
      auto [s1, g1] = act_on_slot(g, c, k);
      c_slot[k] = s1;
      c_sign[k] = g1;
      auto [s2, g2] = act_on_slot(g, cw, k);
      cw_slot[k] = s2;
      cw_sign[k] = g2;
      auto [s3, g3] = act_on_slot(g, cinv, k);
      ci_slot[k] = s3;
      ci_sign[k] = g3;
    }
    std::vector<long long> x(m, -radius), conj(m), xi(m);
    while (true) {
      // conj = x + phi(c) a.v + phi(c w) xi  with xi = -phi(c^-1) x
      for (int k = 0; k < m; ++k) conj[k] = x[k];
      for (int k = 0; k < m; ++k) conj[c_slot[k]] += c_sign[k] * a.v[k];
      for (int k = 0; k < m; ++k) xi[ci_slot[k]] = -ci_sign[k] * x[k];
      for (int k = 0; k < m; ++k) conj[cw_slot[k]] += cw_sign[k] * xi[k];
      if (conj == b.v) {
        found = BruteWitness{x, c};
        return;
      }
      int k = 0;
      while (k < m && x[k] == radius) x[k++] = -radius;
      if (k == m) break;
      ++x[k];
    }
  };
  if (g.point_kind() == PointKind::Perms) {
    for_each_perm(g.n(), [&](const Perm& p) { try_points(p.images()); });
  } else {
    for (unsigned long long mask = 0; mask < (1ULL << g.n()); ++mask) {
      std::vector<int> c(g.n());
      for (int k = 0; k < g.n(); ++k) c[k] = (mask >> k) & 1 ? -1 : 1;
      try_points(c);
    }
  }
  return found;
}

struct RelationResult {
  std::string name;
  bool pass;
};

// evaluates both sides of every defining relation through the word evaluator
inline std::vector<RelationResult> relation_suite(FamilyTag tag, int n) {
  CrystalGroupPtr g = make_family(tag, n);
  std::vector<RelationResult> out;
  for (const Relation& rel : defining_relations(tag, n)) {
    Element lhs = evaluate_word(g, rel.lhs);
    Element rhs = evaluate_word(g, rel.rhs);
    out.push_back({rel.name, lhs == rhs});
  }
  return out;
}

// full enumeration of W; the nontrivial kernel of the action
inline std::vector<PointElem> faithfulness_enum(const CrystalGroup& g,
                                                unsigned long long cap = 3628800ULL) {
  if (g.w_count() > cap)
    throw DomainError("faithfulness_enum: point group larger than enumeration cap");
  std::vector<PointElem> kernel;
  g.for_each_w([&](const PointElem& w) {
    if (g.w_is_identity(w)) return;
    bool trivial = true;
    for (int k = 0; k < g.rank(); ++k) {
      auto [slot, sign] = act_on_slot(g, w.data, k);
      if (slot != k || sign != 1) trivial = false;
    }
    if (trivial) kernel.push_back(w);
  });
  return kernel;
}

}  // namespace braidcrys::oracle

#endif
