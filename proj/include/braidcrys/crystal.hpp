// The common skeleton of every quotient treated here: a free abelian lattice
// Z^m with a fixed labeled basis, a small finite point group W, and a
// monomial action phi of W on the lattice.  Elements are normal forms
// (v, w) with multiplication (v1,w1)(v2,w2) = (v1 + phi(w1) v2, w1 w2).
//
// W elements are either permutations of {1..n} (stored as 1-indexed image
// arrays) or sign tuples in {+1,-1}^n; which one is fixed per group.

#ifndef BRAIDCRYS_CRYSTAL_HPP_
#define BRAIDCRYS_CRYSTAL_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidcrys/bigint.hpp"
#include "braidcrys/intmat.hpp"
#include "braidcrys/monomial.hpp"
#include "braidcrys/perm.hpp"

namespace braidcrys {

enum class FamilyTag { VB, VT, PLBEXT, KB3 };

inline const char* family_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::VB: return "vb";
    case FamilyTag::VT: return "vt";
    case FamilyTag::PLBEXT: return "plbext";
    case FamilyTag::KB3: return "kb3";
  }
  return "?";
}

enum class PointKind { Perms, Signs };

// basis label: ordered pair (i, j); VT stores i < j, KB3 uses (1,2),(1,3)
struct Label {
  int i = 0;
  int j = 0;
  friend bool operator==(const Label& a, const Label& b) {
    return a.i == b.i && a.j == b.j;
  }
  friend bool operator<(const Label& a, const Label& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
  std::string str() const { return std::to_string(i) + "," + std::to_string(j); }
};

// a W element: permutation images, or a +-1 tuple
struct PointElem {
  std::vector<int> data;
  friend bool operator==(const PointElem& a, const PointElem& b) {
    return a.data == b.data;
  }
  friend bool operator!=(const PointElem& a, const PointElem& b) { return !(a == b); }
  friend bool operator<(const PointElem& a, const PointElem& b) {
    return a.data < b.data;
  }
};

class CrystalGroup {
public:
  CrystalGroup(FamilyTag family, int n, PointKind kind, std::vector<Label> labels)
      : family_(family), n_(n), kind_(kind), labels_(std::move(labels)) {
    for (int k = 0; k < rank(); ++k) index_[labels_[k]] = k;
  }

  FamilyTag family() const { return family_; }
  int n() const { return n_; }
  int rank() const { return static_cast<int>(labels_.size()); }
  PointKind point_kind() const { return kind_; }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(int k) const { return labels_[k]; }

  int label_index(const Label& l) const {
    auto it = index_.find(l);
    if (it == index_.end())
      throw DomainError("no basis label (" + l.str() + ") in " +
                        std::string(family_name(family_)) + " with n=" +
                        std::to_string(n_));
    return it->second;
  }
  bool has_label(const Label& l) const { return index_.count(l) != 0; }

  // --- W as an abstract finite group ---

  PointElem w_identity() const {
    PointElem e;
    if (kind_ == PointKind::Perms) e.data = Perm::identity(n_).images();
    else e.data.assign(n_, 1);
    return e;
  }
  PointElem w_from_perm(const Perm& p) const { return PointElem{p.images()}; }
  Perm w_as_perm(const PointElem& w) const { return Perm(w.data); }

  PointElem w_mul(const PointElem& a, const PointElem& b) const {
    check_w(a);
    check_w(b);
    PointElem r;
    if (kind_ == PointKind::Perms) {
      r.data = compose(Perm(a.data), Perm(b.data)).images();
    } else {
      r.data.resize(n_);
      for (int k = 0; k < n_; ++k) r.data[k] = a.data[k] * b.data[k];
    }
    return r;
  }
  PointElem w_inv(const PointElem& a) const {
    check_w(a);
    if (kind_ == PointKind::Perms) return PointElem{Perm(a.data).inverse().images()};
    return a;
  }
  bool w_is_identity(const PointElem& a) const { return a == w_identity(); }
  long long w_order(const PointElem& a) const {
    check_w(a);
    if (kind_ == PointKind::Perms) return perm_order(Perm(a.data));
    return w_is_identity(a) ? 1 : 2;
  }
  unsigned long long w_count() const {
    if (kind_ == PointKind::Perms) return factorial(n_);
    return 1ULL << n_;
  }
  // deterministic enumeration: lexicographic images / sign masks
  template <typename Fn>
  void for_each_w(Fn&& fn) const {
    if (kind_ == PointKind::Perms) {
      for_each_perm(n_, [&](const Perm& p) { fn(PointElem{p.images()}); });
    } else {
      for (unsigned long long mask = 0; mask < (1ULL << n_); ++mask) {
        PointElem e;
        e.data.resize(n_);
        for (int k = 0; k < n_; ++k) e.data[k] = (mask >> k) & 1 ? -1 : 1;
        fn(e);
      }
    }
  }
  std::vector<PointElem> w_generators() const {
    std::vector<PointElem> gens;
    if (kind_ == PointKind::Perms) {
      for (int i = 1; i < n_; ++i)
        gens.push_back(PointElem{Perm::transposition(n_, i).images()});
    } else {
      for (int k = 0; k < n_; ++k) {
        PointElem e;
        e.data.assign(n_, 1);
        e.data[k] = -1;
        gens.push_back(e);
      }
    }
    return gens;
  }
  // all c in W with c * w1 * c^-1 == w2
  std::vector<PointElem> w_conjugators(const PointElem& w1, const PointElem& w2) const {
    std::vector<PointElem> out;
    if (kind_ == PointKind::Signs) {
      if (w1 == w2) for_each_w([&](const PointElem& c) { out.push_back(c); });
      return out;
    }
    for (const Perm& c : find_conjugators(Perm(w1.data), Perm(w2.data)))
      out.push_back(PointElem{c.images()});
    return out;
  }

  // --- the action ---

  MonomialMatrix action(const PointElem& w) const {
    check_w(w);
    MonomialMatrix m = MonomialMatrix::identity(rank());
    switch (family_) {
      case FamilyTag::VB: {
        Perm p(w.data);
        for (int k = 0; k < rank(); ++k)
          m.target[k] = label_index({p.apply(labels_[k].i), p.apply(labels_[k].j)});
        break;
      }
      case FamilyTag::VT: {
        Perm p(w.data);
        for (int k = 0; k < rank(); ++k) {
          int a = p.apply(labels_[k].i), b = p.apply(labels_[k].j);
          if (a < b) {
            m.target[k] = label_index({a, b});
          } else {
            m.target[k] = label_index({b, a});
            m.sign[k] = -1;
          }
        }
        break;
      }
      case FamilyTag::PLBEXT:
        for (int k = 0; k < rank(); ++k) m.sign[k] = w.data[labels_[k].j - 1];
        break;
      case FamilyTag::KB3:
        if (Perm(w.data).parity() < 0) {
          m.target[0] = 1;
          m.target[1] = 0;
        }
        break;
    }
    return m;
  }

private:
  FamilyTag family_;
  int n_;
  PointKind kind_;
  std::vector<Label> labels_;
  std::map<Label, int> index_;

  void check_w(const PointElem& w) const {
    if (static_cast<int>(w.data.size()) != n_)
      throw DomainError("point-group element has wrong degree");
  }
};

using CrystalGroupPtr = std::shared_ptr<const CrystalGroup>;

inline bool same_ambient(const CrystalGroup& a, const CrystalGroup& b) {
  return a.family() == b.family() && a.n() == b.n();
}

// --- elements ---

struct Element {
  CrystalGroupPtr group;
  std::vector<Bigint> v;
  PointElem w;

  friend bool operator==(const Element& a, const Element& b) {
    return a.v == b.v && a.w == b.w && same_ambient(*a.group, *b.group);
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  bool is_identity() const {
    if (!group->w_is_identity(w)) return false;
    for (const Bigint& c : v)
      if (!c.is_zero()) return false;
    return true;
  }
};

inline Element identity_element(const CrystalGroupPtr& g) {
  return Element{g, std::vector<Bigint>(g->rank()), g->w_identity()};
}

inline Element make_element(const CrystalGroupPtr& g, std::vector<Bigint> v,
                            PointElem w) {
  if (static_cast<int>(v.size()) != g->rank())
    throw DomainError("element vector has wrong rank");
  return Element{g, std::move(v), std::move(w)};
}

inline void check_same_ambient(const Element& a, const Element& b) {
  if (!same_ambient(*a.group, *b.group))
    throw DomainError("elements live in different ambient groups");
}

inline Element mul(const Element& a, const Element& b) {
  check_same_ambient(a, b);
  std::vector<Bigint> v = a.group->action(a.w).apply(b.v);
  for (int k = 0; k < a.group->rank(); ++k) v[k] += a.v[k];
  return Element{a.group, std::move(v), a.group->w_mul(a.w, b.w)};
}

inline Element inv(const Element& a) {
  PointElem wi = a.group->w_inv(a.w);
  std::vector<Bigint> v = a.group->action(wi).apply(a.v);
  for (Bigint& c : v) c = -c;
  return Element{a.group, std::move(v), std::move(wi)};
}

// sum_{l=0}^{count-1} phi(w)^l v   (the "telescoped" translation of (v,w)^count)
inline std::vector<Bigint> twisted_sum(const CrystalGroup& g, const PointElem& w,
                                       const std::vector<Bigint>& v, long long count) {
  std::vector<Bigint> acc(g.rank());
  std::vector<Bigint> cur = v;
  MonomialMatrix phi = g.action(w);
  for (long long l = 0; l < count; ++l) {
    for (int k = 0; k < g.rank(); ++k) acc[k] += cur[k];
    if (l + 1 < count) cur = phi.apply(cur);
  }
  return acc;
}

// e^k via the closed form: e^t = (sum_{l<t} phi(w)^l v, w^t), so for
// k = q*t + r with t = order(w) the translation is q * (full sum) + partial.
inline Element pow(const Element& e, const Bigint& k) {
  const CrystalGroup& g = *e.group;
  if (k.is_zero()) return identity_element(e.group);
  Element base = k.signum() < 0 ? inv(e) : e;
  Bigint kk = k.abs();
  long long t = g.w_order(base.w);
  auto [q, r] = Bigint::divmod(kk, Bigint(t));
  long long rr = r.as_slonglong();
  std::vector<Bigint> full = twisted_sum(g, base.w, base.v, t);
  std::vector<Bigint> part = twisted_sum(g, base.w, base.v, rr);
  std::vector<Bigint> v(g.rank());
  for (int i = 0; i < g.rank(); ++i) v[i] = q * full[i] + part[i];
  // w^r
  PointElem wr = g.w_identity();
  for (long long l = 0; l < rr; ++l) wr = g.w_mul(wr, base.w);
  return Element{e.group, std::move(v), std::move(wr)};
}

inline Element pow(const Element& e, long long k) { return pow(e, Bigint(k)); }

// order of (v, w): t = order(w) if the telescoped sum over t steps vanishes,
// infinite otherwise (nullopt)
inline std::optional<long long> element_order(const Element& e) {
  long long t = e.group->w_order(e.w);
  std::vector<Bigint> s = twisted_sum(*e.group, e.w, e.v, t);
  for (const Bigint& c : s)
    if (!c.is_zero()) return std::nullopt;
  return t;
}

// --- orbits of the basis under <phi(w)> ---

struct Orbit {
  int rep = 0;                // least basis index in the orbit
  std::vector<int> indices;   // orbit walked from rep by repeated phi(w)
  std::vector<int> signs;     // accumulated sign at each step (signs[0] = +1)
  bool self_inverse = false;  // the walk returns to rep with sign -1
};

struct OrbitData {
  std::vector<Orbit> orbits;  // sorted by rep
  std::vector<int> transversal() const {
    std::vector<int> t;
    for (const Orbit& o : orbits) t.push_back(o.rep);
    return t;
  }
};

inline OrbitData orbit_transversal(const CrystalGroup& g, const PointElem& w) {
  MonomialMatrix phi = g.action(w);
  OrbitData data;
  std::vector<bool> seen(g.rank(), false);
  for (int start = 0; start < g.rank(); ++start) {
    if (seen[start]) continue;
    Orbit o;
    o.rep = start;
    int cur = start, sign = 1;
    while (true) {
      seen[cur] = true;
      o.indices.push_back(cur);
      o.signs.push_back(sign);
      int nxt = phi.target[cur];
      sign *= phi.sign[cur];
      if (nxt == start) {
        o.self_inverse = sign < 0;
        break;
      }
      cur = nxt;
    }
    data.orbits.push_back(std::move(o));
  }
  return data;
}

// --- conjugacy ---

// Searches every c in W with c w1 c^-1 = w2 and solves
// x - phi(w2) x = v2 - phi(c) v1 over the integers; the witness is (x, c).
// nullopt is a definitive "not conjugate".
inline std::optional<Element> conjugacy_test(const Element& e1, const Element& e2) {
  check_same_ambient(e1, e2);
  const CrystalGroup& g = *e1.group;
  int m = g.rank();
  for (const PointElem& c : g.w_conjugators(e1.w, e2.w)) {
    IntMat lhs = IntMat::identity(m) - g.action(e2.w).to_intmat();
    std::vector<Bigint> ca = g.action(c).apply(e1.v);
    std::vector<Bigint> rhs(m);
    for (int k = 0; k < m; ++k) rhs[k] = e2.v[k] - ca[k];
    if (auto sol = solve_integer(lhs, rhs))
      return make_element(e1.group, sol->particular, c);
  }
  return std::nullopt;
}

// --- crystallographic test ---

struct CrystCheck {
  bool crystallographic = false;
  std::optional<PointElem> kernel_witness;  // some nontrivial w with phi(w) = 1
};

inline CrystCheck is_crystallographic(const CrystalGroup& g,
                                      unsigned long long cap = 3628800ULL) {
  if (g.w_count() > cap)
    throw DomainError("is_crystallographic: point group larger than enumeration cap");
  CrystCheck out;
  out.crystallographic = true;
  g.for_each_w([&](const PointElem& w) {
    if (!out.crystallographic) return;
    if (!g.w_is_identity(w) && g.action(w).is_identity()) {
      out.crystallographic = false;
      out.kernel_witness = w;
    }
  });
  return out;
}

// --- sublattices ---

// Exact membership/coordinate solver for a full-rank sublattice given by
// basis columns; the Smith form is computed once.
class LatticeSolver {
public:
  explicit LatticeSolver(const IntMat& basis) : basis_(basis), snf_(smith_normal_form(basis)) {
    if (basis.rows != basis.cols || snf_.rank != basis.rows)
      throw DomainError("LatticeSolver: basis is not full rank");
  }
  const IntMat& basis() const { return basis_; }
  int dim() const { return basis_.rows; }
  // y with basis * y = x, if x lies in the sublattice
  std::optional<std::vector<Bigint>> coords(const std::vector<Bigint>& x) const {
    std::vector<Bigint> ux = snf_.u.apply(x);
    std::vector<Bigint> y(dim());
    for (int i = 0; i < dim(); ++i) {
      auto [q, r] = Bigint::divmod(ux[i], snf_.d.at(i, i));
      if (!r.is_zero()) return std::nullopt;
      y[i] = q;
    }
    return snf_.v.apply(y);
  }
  bool contains(const std::vector<Bigint>& x) const { return coords(x).has_value(); }

private:
  IntMat basis_;
  SmithResult snf_;
};

// Hermite-reduced basis of { x in L : phi(g) x = x for all given g }.
inline IntMat fixed_sublattice(const CrystalGroup& g, const IntMat& lattice,
                               const std::vector<PointElem>& holonomy) {
  int m = g.rank();
  if (holonomy.empty()) return hermite_columns(lattice);
  IntMat stacked(static_cast<int>(holonomy.size()) * m, lattice.cols);
  for (size_t t = 0; t < holonomy.size(); ++t) {
    IntMat diff = g.action(holonomy[t]).to_intmat() * lattice - lattice;
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < lattice.cols; ++c)
        stacked.at(static_cast<int>(t) * m + r, c) = diff.at(r, c);
  }
  auto sol = solve_integer(stacked, std::vector<Bigint>(stacked.rows));
  // homogeneous system: always solvable
  IntMat fixed_coords = sol->homogeneous;
  return hermite_columns(lattice * fixed_coords);
}

// --- torsion of a crystallographic subgroup ---

struct TorsionFreeReport {
  bool torsion_free = false;
  std::optional<Element> witness;  // a nontrivial finite-order element when not
};

// The subgroup is L . {lifts}: kernel lattice L (full-rank, closed under the
// holonomy action) plus one coset representative per holonomy element.
// Torsion above holonomy g with lift (v_g, w_g) and t = order(w_g) exists
// iff sum_{l<t} phi(w_g)^l (x + v_g) = 0 for some x in L.
inline TorsionFreeReport subgroup_torsion_free(
    const CrystalGroup& g, const IntMat& lattice,
    const std::vector<std::pair<PointElem, Element>>& lifts) {
  LatticeSolver solver(lattice);
  int m = g.rank();
  // lift consistency: lift(a) lift(b) must equal lift(ab) modulo L
  for (const auto& [wa, la] : lifts) {
    if (la.w != wa) throw DomainError("subgroup_torsion_free: lift has wrong image");
    for (const auto& [wb, lb] : lifts) {
      PointElem wab = g.w_mul(wa, wb);
      const Element* lab = nullptr;
      for (const auto& [wc, lc] : lifts)
        if (wc == wab) lab = &lc;
      if (!lab)
        throw DomainError("subgroup_torsion_free: holonomy set not closed");
      Element diff = mul(mul(la, lb), inv(*lab));
      if (!g.w_is_identity(diff.w) || !solver.contains(diff.v))
        throw DomainError("subgroup_torsion_free: inconsistent lifts");
    }
  }
  // closure of L under the action
  for (const auto& [wg, lift] : lifts) {
    for (int c = 0; c < lattice.cols; ++c)
      if (!solver.contains(g.action(wg).apply(lattice.column(c))))
        throw DomainError("subgroup_torsion_free: lattice not closed under action");
  }
  TorsionFreeReport report;
  report.torsion_free = true;
  for (const auto& [wg, lift] : lifts) {
    if (g.w_is_identity(wg)) continue;
    long long t = g.w_order(wg);
    // A = sum_{l<t} phi(w)^l as a matrix
    IntMat acc(m, m);
    IntMat cur = IntMat::identity(m);
    IntMat phi = g.action(wg).to_intmat();
    for (long long l = 0; l < t; ++l) {
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) acc.at(r, c) += cur.at(r, c);
      if (l + 1 < t) cur = phi * cur;
    }
    // solve acc * (L y) = -acc * v_g over the integers
    IntMat lhs = acc * lattice;
    std::vector<Bigint> rhs = acc.apply(lift.v);
    for (Bigint& x : rhs) x = -x;
    if (auto sol = solve_integer(lhs, rhs)) {
      std::vector<Bigint> xv = lattice.apply(sol->particular);
      for (int k = 0; k < m; ++k) xv[k] += lift.v[k];
      report.torsion_free = false;
      report.witness = make_element(lift.group, xv, wg);
      return report;
    }
  }
  return report;
}

}  // namespace braidcrys

#endif
