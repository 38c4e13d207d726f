// Constructive procedures on top of the engine: torsion certificates from
// orbit sums, synthesis of elements with a prescribed finite order, the
// conjugacy normal form for unsigned actions, and the realization of the
// virtually cyclic groups Z_n x| Z inside the vb / vt quotients.

#ifndef BRAIDCRYS_TORSION_HPP_
#define BRAIDCRYS_TORSION_HPP_

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braidcrys/crystal.hpp"
#include "braidcrys/families.hpp"

namespace braidcrys {

// Orbit-sum certificate: (v, w) has finite order (equal to the order of w)
// exactly when every reported orbit sum vanishes.  The sum is the signed sum
// of v along the full cycle of phi(w) through the representative; on a
// self-inverse orbit the walk passes each slot with both signs, so that sum
// telescopes to zero identically and the orbit never obstructs torsion.
struct TorsionCertificate {
  Element element;
  std::optional<long long> order;  // nullopt = infinite
  struct OrbitSum {
    int rep_index;
    Bigint sum;
    bool self_inverse;
  };
  std::vector<OrbitSum> sums;
  OrbitData orbits;
};

inline TorsionCertificate torsion_certificate(const Element& e) {
  const CrystalGroup& g = *e.group;
  TorsionCertificate cert;
  cert.element = e;
  cert.orbits = orbit_transversal(g, e.w);
  bool finite = true;
  for (const Orbit& o : cert.orbits.orbits) {
    Bigint s;
    if (!o.self_inverse)
      for (size_t l = 0; l < o.indices.size(); ++l)
        s += o.signs[l] > 0 ? e.v[o.indices[l]] : -e.v[o.indices[l]];
    if (!s.is_zero()) finite = false;
    cert.sums.push_back({o.rep, s, o.self_inverse});
  }
  cert.order = finite ? std::optional<long long>(g.w_order(e.w)) : std::nullopt;
  return cert;
}

// Element of order lcm(n_1..n_t) whose permutation part has the given cycle
// type, built from disjoint blocks of consecutive strands.  With a seed, a
// random orbit-sum-zero vector is added on each block's leading orbit.
inline Element make_torsion_element(const CrystalGroupPtr& g,
                                    const std::vector<int>& cycle_type,
                                    std::optional<unsigned long long> seed = {}) {
  if (g->family() != FamilyTag::VB && g->family() != FamilyTag::VT)
    throw DomainError("make_torsion_element supports the vb and vt families");
  int total = 0;
  for (int nk : cycle_type) {
    if (nk < 2) throw DomainError("cycle type parts must be >= 2");
    total += nk;
  }
  if (total > g->n())
    throw DomainError("cycle type does not fit on " + std::to_string(g->n()) +
                      " strands");
  Element e = identity_element(g);
  int offset = 0;
  for (int nk : cycle_type) {
    for (int i = offset + 1; i <= offset + nk - 1; ++i)
      e = mul(e, generator_image(g, GeneratorSymbol{GenKind::Rho, i, 0, Bigint(1)}));
    offset += nk;
  }
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::vector<Bigint> v(g->rank());
    OrbitData od = orbit_transversal(*g, e.w);
    offset = 0;
    for (int nk : cycle_type) {
      int lead = g->label_index({offset + 1, offset + 2});
      for (const Orbit& o : od.orbits) {
        bool contains = false;
        for (int idx : o.indices) contains |= idx == lead;
        if (!contains) continue;
        // signed coefficients with zero signed sum over the orbit
        Bigint running;
        for (size_t l = 0; l + 1 < o.indices.size(); ++l) {
          long long c = static_cast<long long>(rng() % 7) - 3;
          v[o.indices[l]] = o.signs[l] > 0 ? Bigint(c) : Bigint(-c);
          running += Bigint(c);
        }
        if (!o.self_inverse) {
          size_t last = o.indices.size() - 1;
          v[o.indices[last]] = o.signs[last] > 0 ? -running : running;
        }
        break;
      }
      offset += nk;
    }
    Element shift = make_element(g, std::move(v), g->w_identity());
    e = mul(shift, e);
  }
  return e;
}

// Concentrates each orbit's coefficient sum on the transversal representative.
// Only meaningful for unsigned actions (vb, kb3); conjugate to the input and
// idempotent.
inline Element conjugacy_normal_form(const Element& e) {
  const CrystalGroup& g = *e.group;
  if (g.family() == FamilyTag::VT || g.family() == FamilyTag::PLBEXT)
    throw DomainError("conjugacy_normal_form is defined for unsigned actions only");
  OrbitData od = orbit_transversal(g, e.w);
  std::vector<Bigint> v(g.rank());
  for (const Orbit& o : od.orbits) {
    Bigint s;
    for (int idx : o.indices) s += e.v[idx];
    v[o.rep] = s;
  }
  return make_element(e.group, std::move(v), e.w);
}

// --- virtually cyclic realizations ---

struct VCRealization {
  int n = 0;
  int k = 0;
  Element a;  // order n
  Element b;  // infinite order, b a b^-1 = a^k
  std::vector<std::string> transcript;
};

// A is the image of rho_1 ... rho_{n-1}.  B = (x, gamma) where gamma is a
// point-group conjugator carrying pi(A) to pi(A)^k and x solves the
// conjugation system.  Conjugators are tried in lexicographic order; for
// each one the particular solution and its shifts by single homogeneous
// basis vectors are tested for infinite order, and the first success is
// kept.  The telescoped translation is linear in x, so if the particular
// solution and every basis shift telescope to zero, every solution for that
// gamma does; exhausting all gamma is then a proof that no B of the required
// shape exists, which is reported as an error.
inline VCRealization realize_virtually_cyclic(const CrystalGroupPtr& g, int k) {
  int n = g->n();
  if (g->family() != FamilyTag::VB && g->family() != FamilyTag::VT)
    throw DomainError("virtually cyclic realizations live in the vb and vt families");
  if (n < 2 || k < 1 || k > n - 1 || std::gcd(n, k) != 1)
    throw DomainError("need 1 <= k <= n-1 with gcd(n, k) = 1");
  VCRealization out;
  out.n = n;
  out.k = k;
  Element a = identity_element(g);
  for (int i = 1; i <= n - 1; ++i)
    a = mul(a, generator_image(g, GeneratorSymbol{GenKind::Rho, i, 0, Bigint(1)}));
  out.a = a;
  Element ak = pow(a, static_cast<long long>(k));
  int m = g->rank();
  std::vector<PointElem> gammas = g->w_conjugators(a.w, ak.w);
  if (gammas.empty())
    throw DomainError("internal: no conjugator between pi(A) and pi(A)^k");
  std::optional<Element> b;
  for (const PointElem& gamma : gammas) {
    // conjugating (v_A, w_A) by (x, gamma) gives permutation part w_A^k and
    // translation x + phi(gamma) v_A - phi(w_A^k) x; match it to A^k:
    IntMat lhs = IntMat::identity(m) - g->action(ak.w).to_intmat();
    std::vector<Bigint> ga = g->action(gamma).apply(a.v);
    std::vector<Bigint> rhs(m);
    for (int i = 0; i < m; ++i) rhs[i] = ak.v[i] - ga[i];
    auto sol = solve_integer(lhs, rhs);
    if (!sol) continue;
    std::vector<std::vector<Bigint>> candidates;
    candidates.push_back(sol->particular);
    for (int c = 0; c < sol->homogeneous.cols; ++c) {
      std::vector<Bigint> x = sol->particular;
      for (int r = 0; r < m; ++r) x[r] += sol->homogeneous.at(r, c);
      candidates.push_back(std::move(x));
    }
    for (const auto& x : candidates) {
      Element cand = make_element(g, x, gamma);
      if (!element_order(cand)) {
        b = cand;
        break;
      }
    }
    if (b) {
      out.transcript.push_back("gamma = " + Perm(gamma.data).cycle_string());
      break;
    }
  }
  if (!b)
    throw DomainError(
        "no infinite-order solution: for every point-group conjugator the whole "
        "solution lattice for B telescopes to the identity, so no B of this "
        "shape exists");
  out.b = *b;
  // verify the contract before returning
  if (!pow(out.a, static_cast<long long>(n)).is_identity())
    throw DomainError("internal: A^n != 1");
  if (mul(mul(out.b, out.a), inv(out.b)) != ak)
    throw DomainError("internal: B A B^-1 != A^k");
  if (element_order(out.b))
    throw DomainError("internal: B has finite order");
  out.transcript.push_back("A^n = 1 verified");
  out.transcript.push_back("B A B^-1 = A^k verified");
  out.transcript.push_back("order(B) infinite verified");
  return out;
}

}  // namespace braidcrys

#endif
