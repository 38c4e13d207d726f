// The torsion-free subgroup G~_n of the vb quotient with cyclic holonomy of
// order n, and the invariants of the flat manifold it determines.
//
// Construction: let w be the point image of rho_{n-1} ... rho_1 (an n-cycle)
// and let the lift be (e_{1,2}, w).  The kernel lattice L has basis
//   Y' = { O } u { n e_{i,j} : (i,j) != (1,2) },
// where O is the sum of e over the orbit of (1,2) under phi(w).  Columns are
// ordered so that the conjugation action of the lift is block diagonal: the
// orbit of (1,2) first (O, then n e along the orbit walk), then each
// remaining orbit walked from its least label.

#ifndef BRAIDCRYS_BIEBERBACH_HPP_
#define BRAIDCRYS_BIEBERBACH_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidcrys/crystal.hpp"
#include "braidcrys/families.hpp"
#include "braidcrys/poly.hpp"
#include "braidcrys/torsion.hpp"

namespace braidcrys {

struct BieberbachSubgroup {
  CrystalGroupPtr ambient;   // vb quotient
  IntMat basis;              // columns = Y' in ambient coordinates
  Element lift;              // (e_{1,2}, w), order-n holonomy generator lift
  long long holonomy_order = 0;
};

inline BieberbachSubgroup build_gn_tilde(int n) {
  if (n < 2) throw DomainError("build_gn_tilde needs n >= 2");
  CrystalGroupPtr g = vb_quotient(n);
  Element lift = identity_element(g);
  {
    std::vector<Bigint> v(g->rank());
    v[g->label_index({1, 2})] = 1;
    Element lam = make_element(g, std::move(v), g->w_identity());
    Element alpha = identity_element(g);
    for (int i = n - 1; i >= 1; --i)
      alpha = mul(alpha, generator_image(g, GeneratorSymbol{GenKind::Rho, i, 0, Bigint(1)}));
    lift = mul(lam, alpha);
  }
  MonomialMatrix phi = g->action(lift.w);
  int m = g->rank();
  // orbit walk of (1,2) under phi
  int start = g->label_index({1, 2});
  std::vector<int> walk{start};
  while (true) {
    int nxt = phi.target[walk.back()];
    if (nxt == start) break;
    walk.push_back(nxt);
  }
  std::vector<Bigint> orbit_sum(m);
  for (int idx : walk) orbit_sum[idx] = 1;
  IntMat basis(m, m);
  int col = 0;
  basis.set_column(col++, orbit_sum);
  for (size_t l = 1; l < walk.size(); ++l) {
    std::vector<Bigint> v(m);
    v[walk[l]] = n;
    basis.set_column(col++, v);
  }
  std::vector<bool> used(m, false);
  for (int idx : walk) used[idx] = true;
  for (int lead = 0; lead < m; ++lead) {
    if (used[lead]) continue;
    int cur = lead;
    while (!used[cur]) {
      used[cur] = true;
      std::vector<Bigint> v(m);
      v[cur] = n;
      basis.set_column(col++, v);
      cur = phi.target[cur];
    }
  }
  return BieberbachSubgroup{g, std::move(basis), std::move(lift),
                            static_cast<long long>(n)};
}

inline std::vector<std::pair<PointElem, Element>> holonomy_lifts(
    const BieberbachSubgroup& sub) {
  std::vector<std::pair<PointElem, Element>> lifts;
  Element cur = identity_element(sub.ambient);
  for (long long l = 0; l < sub.holonomy_order; ++l) {
    lifts.emplace_back(cur.w, cur);
    cur = mul(cur, sub.lift);
  }
  return lifts;
}

struct BieberbachReport {
  int dimension = 0;
  bool torsion_free = false;
  long long holonomy_order = 0;
  bool holonomy_faithful = false;
  std::optional<Element> torsion_witness;
};

inline BieberbachReport verify_bieberbach(const BieberbachSubgroup& sub) {
  BieberbachReport rep;
  rep.dimension = sub.basis.rows;
  rep.holonomy_order = sub.holonomy_order;
  TorsionFreeReport tf =
      subgroup_torsion_free(*sub.ambient, sub.basis, holonomy_lifts(sub));
  rep.torsion_free = tf.torsion_free;
  rep.torsion_witness = tf.witness;
  rep.holonomy_faithful = true;
  MonomialMatrix phi = sub.ambient->action(sub.lift.w);
  MonomialMatrix acc = phi;
  for (long long l = 1; l < sub.holonomy_order; ++l) {
    if (acc.is_identity()) rep.holonomy_faithful = false;
    acc = compose(phi, acc);
  }
  return rep;
}

struct CenterData {
  long long rank = 0;
  IntMat basis;  // ambient coordinates, Hermite-reduced
};

inline CenterData center_rank(const BieberbachSubgroup& sub) {
  IntMat fixed = fixed_sublattice(*sub.ambient, sub.basis, {sub.lift.w});
  return CenterData{fixed.cols, fixed};
}

// matrix of x |-> phi(w) x on L in the Y' basis (exact change of basis)
inline IntMat holonomy_matrix(const BieberbachSubgroup& sub) {
  LatticeSolver solver(sub.basis);
  MonomialMatrix phi = sub.ambient->action(sub.lift.w);
  int m = sub.basis.rows;
  IntMat out(m, m);
  for (int c = 0; c < m; ++c) {
    auto coords = solver.coords(phi.apply(sub.basis.column(c)));
    if (!coords)
      throw DomainError("holonomy_matrix: lattice not closed under the action");
    out.set_column(c, *coords);
  }
  return out;
}

inline long long betti_1(const BieberbachSubgroup& sub) {
  IntMat h = holonomy_matrix(sub);
  return h.rows - rank_of(h - IntMat::identity(h.rows));
}

inline bool is_orientable(const BieberbachSubgroup& sub) {
  return determinant(holonomy_matrix(sub)) == Bigint(1);
}

// Everything the flat manifold report needs, computed exactly.
struct ManifoldReport {
  int n = 0;
  int dimension = 0;
  long long betti1 = 0;
  long long rank_holonomy_minus_identity = 0;
  bool orientable = false;
  bool anosov = false;
  bool kahler = false;
  bool torsion_free = false;
  long long holonomy_order = 0;
  long long center_rank = 0;
  Poly charpoly;                          // ascending coefficients
  std::vector<IntMat> blocks;             // diagonal blocks of the holonomy matrix
  std::vector<Bigint> block_determinants;
  std::map<int, int> cyclotomic_mult;     // d | n  ->  multiplicity of Phi_d
};

// split a block-diagonal matrix along its connectivity
inline std::vector<IntMat> diagonal_blocks(const IntMat& h) {
  std::vector<IntMat> blocks;
  int m = h.rows;
  int pos = 0;
  while (pos < m) {
    int end = pos;  // smallest suffix start so that [pos, end] is closed
    for (int r = pos; r <= end; ++r)
      for (int c = 0; c < m; ++c)
        if ((!h.at(r, c).is_zero() || !h.at(c, r).is_zero()) && c > end) end = c;
    IntMat b(end - pos + 1, end - pos + 1);
    for (int r = pos; r <= end; ++r)
      for (int c = pos; c <= end; ++c) b.at(r - pos, c - pos) = h.at(r, c);
    blocks.push_back(std::move(b));
    pos = end + 1;
  }
  return blocks;
}

inline ManifoldReport manifold_report(const BieberbachSubgroup& sub) {
  ManifoldReport rep;
  rep.n = sub.ambient->n();
  rep.dimension = sub.basis.rows;
  IntMat h = holonomy_matrix(sub);
  rep.rank_holonomy_minus_identity = rank_of(h - IntMat::identity(h.rows));
  rep.betti1 = rep.dimension - rep.rank_holonomy_minus_identity;
  Bigint det = determinant(h);
  rep.orientable = det == Bigint(1);
  rep.charpoly = charpoly(h);
  rep.cyclotomic_mult = cyclotomic_multiplicities(rep.charpoly, rep.n);
  // Anosov: the holonomy is cyclic of order n, so its rational-irreducible
  // summands correspond to the cyclotomic factors Phi_d, d | n; a hyperbolic
  // automorphism exists iff every summand that occurs occurs at least twice.
  rep.anosov = true;
  {
    Poly rest = rep.charpoly;
    for (auto [d, mult] : rep.cyclotomic_mult) {
      if (mult == 1) rep.anosov = false;
      for (int t = 0; t < mult; ++t) rest = *poly_div_exact(rest, cyclotomic(d));
    }
    if (poly_deg(poly_trim(rest)) > 0)
      throw DomainError("manifold_report: holonomy spectrum is not n-torsion");
  }
  // Kahler: even dimension, and the real-irreducible summands that are also
  // complex-irreducible are the eigenvalues +-1, i.e. Phi_1 and (n even) Phi_2
  // must occur with even multiplicity.
  rep.kahler = rep.dimension % 2 == 0;
  if (rep.cyclotomic_mult.count(1) && rep.cyclotomic_mult.at(1) % 2 != 0)
    rep.kahler = false;
  if (rep.cyclotomic_mult.count(2) && rep.cyclotomic_mult.at(2) % 2 != 0)
    rep.kahler = false;
  rep.blocks = diagonal_blocks(h);
  for (const IntMat& b : rep.blocks) rep.block_determinants.push_back(determinant(b));
  BieberbachReport br = verify_bieberbach(sub);
  rep.torsion_free = br.torsion_free;
  rep.holonomy_order = br.holonomy_order;
  rep.center_rank = center_rank(sub).rank;
  return rep;
}

inline bool admits_anosov(const BieberbachSubgroup& sub) {
  return manifold_report(sub).anosov;
}
inline bool is_kahler(const BieberbachSubgroup& sub) {
  return manifold_report(sub).kahler;
}

}  // namespace braidcrys

#endif
