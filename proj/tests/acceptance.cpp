// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria.  Everything is exact; no tolerances are involved.

#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "braidcrys/bieberbach.hpp"
#include "braidcrys/oracle.hpp"
#include "braidcrys/torsion.hpp"
#include "braidcrys/words.hpp"

using namespace braidcrys;

namespace {

long long rnd(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

struct Tally {
  long long checked = 0;
  long long failed = 0;
  std::string first_failure;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failed;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

// every element with coefficients from the grid, every point part
template <typename Fn>
void for_each_grid_element(const CrystalGroupPtr& g, long long span, Fn&& fn) {
  std::vector<PointElem> ws;
  g->for_each_w([&](const PointElem& w) { ws.push_back(w); });
  std::vector<long long> coords(g->rank(), -span);
  while (true) {
    for (const PointElem& w : ws) {
      std::vector<Bigint> v;
      v.reserve(g->rank());
      for (long long c : coords) v.push_back(Bigint(c));
      fn(make_element(g, std::move(v), w));
    }
    int k = 0;
    while (k < g->rank() && coords[k] == span) coords[k++] = -span;
    if (k == g->rank()) break;
    ++coords[k];
  }
}

Element consecutive_rho(const CrystalGroupPtr& g, int r, int t) {
  Element e = identity_element(g);
  for (int i = r; i <= r + t; ++i)
    e = mul(e, generator_image(g, GeneratorSymbol{GenKind::Rho, i, 0, Bigint(1)}));
  return e;
}

// ---------------------------------------------------------------- criteria

bool criterion_presentations(std::string& detail) {
  Tally t;
  for (int n = 2; n <= 6; ++n)
    for (FamilyTag tag : {FamilyTag::VB, FamilyTag::VT, FamilyTag::PLBEXT})
      for (const auto& r : oracle::relation_suite(tag, n))
        t.expect(r.pass, std::string(family_name(tag)) + " n=" +
                             std::to_string(n) + " " + r.name);
  detail = std::to_string(t.checked) + " relation instances" +
           (t.failed ? ", first failure: " + t.first_failure : "");
  return t.failed == 0;
}

bool criterion_crystallographic(std::string& detail) {
  Tally t;
  for (int n = 2; n <= 6; ++n) {
    t.expect(is_crystallographic(*vb_quotient(n)).crystallographic,
             "vb n=" + std::to_string(n));
    t.expect(is_crystallographic(*vt_quotient(n)).crystallographic,
             "vt n=" + std::to_string(n));
    t.expect(oracle::faithfulness_enum(*vb_quotient(n)).empty(),
             "vb kernel n=" + std::to_string(n));
    t.expect(oracle::faithfulness_enum(*vt_quotient(n)).empty(),
             "vt kernel n=" + std::to_string(n));
  }
  for (int n = 2; n <= 8; ++n) {
    t.expect(is_crystallographic(*plbext_quotient(n)).crystallographic,
             "plbext n=" + std::to_string(n));
    t.expect(oracle::faithfulness_enum(*plbext_quotient(n)).empty(),
             "plbext kernel n=" + std::to_string(n));
  }
  // kb3: the kernel of the action is exactly the alternating subgroup A_3,
  // i.e. the two 3-cycles besides the identity
  auto kernel = oracle::faithfulness_enum(*kb3_quotient());
  t.expect(kernel.size() == 2, "kb3 kernel size");
  for (const PointElem& w : kernel)
    t.expect(perm_order(Perm(w.data)) == 3, "kb3 kernel element is a 3-cycle");
  t.expect(!is_crystallographic(*kb3_quotient()).crystallographic, "kb3 verdict");
  detail = std::to_string(t.checked) + " verdicts" +
           (t.failed ? ", first failure: " + t.first_failure : "");
  return t.failed == 0;
}

bool criterion_order_vs_oracle(std::string& detail) {
  Tally t;
  long long cases = 0;
  for (const auto& g : {vb_quotient(3), vt_quotient(3)}) {
    for_each_grid_element(g, 1, [&](const Element& e) {
      ++cases;
      auto fast = element_order(e);
      auto brute = oracle::brute_order(e, 8);
      if (fast)
        t.expect(brute && *brute == *fast, "order mismatch");
      else
        t.expect(!brute, "claimed infinite but brute found an order");
      // the orbit-sum criterion must reproduce order() everywhere; its
      // hypothesis class (consecutive-rho point parts) is inside this grid
      t.expect(torsion_certificate(e).order == fast, "certificate mismatch");
    });
  }
  // hypothesis class at n = 4: exhaustive over single orbits, coeffs {-2..2}
  for (FamilyTag tag : {FamilyTag::VB, FamilyTag::VT}) {
    auto g = make_family(tag, 4);
    for (int r = 1; r <= 3; ++r)
      for (int tt = 0; r + tt <= 3; ++tt) {
        Element shape = consecutive_rho(g, r, tt);
        for (const Orbit& o : orbit_transversal(*g, shape.w).orbits) {
          std::vector<long long> coords(o.indices.size(), -2);
          while (true) {
            std::vector<Bigint> v(g->rank());
            for (size_t l = 0; l < o.indices.size(); ++l)
              v[o.indices[l]] = Bigint(coords[l]);
            Element e = make_element(g, std::move(v), shape.w);
            ++cases;
            t.expect(torsion_certificate(e).order == element_order(e),
                     "certificate mismatch on orbit grid");
            size_t k = 0;
            while (k < coords.size() && coords[k] == 2) coords[k++] = -2;
            if (k == coords.size()) break;
            ++coords[k];
          }
        }
      }
  }
  detail = std::to_string(cases) + " cases (needs >= 4000)" +
           (t.failed ? ", first failure: " + t.first_failure : "");
  return t.failed == 0 && cases >= 4000;
}

bool criterion_rho_orders(std::string& detail) {
  Tally t;
  for (FamilyTag tag : {FamilyTag::VB, FamilyTag::VT})
    for (int n = 2; n <= 6; ++n) {
      auto g = make_family(tag, n);
      for (int r = 1; r <= n - 1; ++r)
        for (int tt = 0; r + tt <= n - 1; ++tt)
          t.expect(element_order(consecutive_rho(g, r, tt)) == tt + 2,
                   std::string(family_name(tag)) + " n=" + std::to_string(n) +
                       " r=" + std::to_string(r) + " t=" + std::to_string(tt));
    }
  detail = std::to_string(t.checked) + " products" +
           (t.failed ? ", first failure: " + t.first_failure : "");
  return t.failed == 0;
}

bool criterion_conjugacy(std::string& detail) {
  Tally t;
  std::mt19937_64 rng(20260808);
  for (const auto& g : {vb_quotient(3), vt_quotient(3)}) {
    std::vector<PointElem> ws;
    g->for_each_w([&](const PointElem& w) { ws.push_back(w); });
    auto pick = [&](long long span) {
      std::vector<Bigint> v(g->rank());
      for (int k = 0; k < g->rank(); ++k) v[k] = Bigint(rnd(rng, -span, span));
      return make_element(g, std::move(v),
                          ws[rnd(rng, 0, static_cast<long long>(ws.size()) - 1)]);
    };
    for (int trial = 0; trial < 200; ++trial) {
      Element a = pick(2);
      Element b = pick(2);
      if (trial % 2 == 0) {
        Element c = pick(1);
        b = mul(mul(c, a), inv(c));
      }
      auto witness = conjugacy_test(a, b);
      if (witness) {
        t.expect(mul(mul(*witness, a), inv(*witness)) == b, "witness rejected");
      } else {
        t.expect(!oracle::brute_conjugacy(a, b, 4),
                 "NotConjugate contradicted at radius 4");
      }
    }
  }
  // torsion pairs in the vb quotient, exhaustive for n = 3: conjugate iff
  // the point parts are conjugate in S_3.  (This equivalence is specific to
  // the unsigned action: in vt a self-inverse orbit carries a mod-2
  // invariant, e.g. (0, tau_1) and (e_{1,2}, tau_1) in vt_3 both have order
  // 2 but are not conjugate; the signed criterion grids cover that case.)
  {
    auto g = vb_quotient(3);
    std::vector<Element> torsion;
    for_each_grid_element(g, 1, [&](const Element& e) {
      if (element_order(e)) torsion.push_back(e);
    });
    for (const Element& a : torsion)
      for (const Element& b : torsion) {
        bool perm_conj = cycle_type(Perm(a.w.data)) == cycle_type(Perm(b.w.data));
        t.expect(conjugacy_test(a, b).has_value() == perm_conj,
                 "torsion pair verdict");
      }
  }
  detail = std::to_string(t.checked) + " pair checks" +
           (t.failed ? ", first failure: " + t.first_failure : "");
  return t.failed == 0;
}

bool criterion_virtually_cyclic(std::string& detail) {
  Tally t;
  std::string failing;
  for (FamilyTag tag : {FamilyTag::VB, FamilyTag::VT})
    for (int n = 2; n <= 6; ++n)
      for (int k = 1; k <= n - 1; ++k) {
        if (std::gcd(n, k) != 1) continue;
        std::string label = std::string(family_name(tag)) + "(n=" +
                            std::to_string(n) + ",k=" + std::to_string(k) + ")";
        auto g = make_family(tag, n);
        try {
          VCRealization vc = realize_virtually_cyclic(g, k);
          bool ok = pow(vc.a, static_cast<long long>(n)).is_identity() &&
                    mul(mul(vc.b, vc.a), inv(vc.b)) ==
                        pow(vc.a, static_cast<long long>(k)) &&
                    !element_order(vc.b);
          t.expect(ok, label + " returned but failed verification");
          if (!ok) failing += " " + label;
        } catch (const DomainError&) {
          t.expect(false, label + " no realization");
          failing += " " + label;
        }
      }
  detail = std::to_string(t.checked) + " (family,n,k) cases";
  if (!failing.empty())
    detail += "; unrealizable:" + failing +
              " -- exhausting every point-group conjugator and the whole solution"
              " lattice shows no infinite-order B exists for these";
  return t.failed == 0;
}

bool criterion_bieberbach(std::string& detail) {
  Tally t;
  for (int n = 2; n <= 6; ++n) {
    BieberbachSubgroup sub = build_gn_tilde(n);
    BieberbachReport rep = verify_bieberbach(sub);
    t.expect(rep.torsion_free, "torsion-free n=" + std::to_string(n));
    t.expect(rep.dimension == n * (n - 1), "dimension n=" + std::to_string(n));
    t.expect(rep.holonomy_order == n && rep.holonomy_faithful &&
                 sub.ambient->w_order(sub.lift.w) == n,
             "holonomy Z_n n=" + std::to_string(n));
    t.expect(center_rank(sub).rank == n - 1, "center rank n=" + std::to_string(n));
  }
  detail = std::to_string(t.checked) + " checks" +
           (t.failed ? ", first failure: " + t.first_failure : "");
  return t.failed == 0;
}

bool criterion_manifolds(std::string& detail) {
  Tally t;
  for (int n = 2; n <= 8; ++n) {
    ManifoldReport rep = manifold_report(build_gn_tilde(n));
    std::string at = " n=" + std::to_string(n);
    t.expect(rep.betti1 == n - 1, "betti1" + at);
    t.expect(rep.orientable == (n % 2 == 1), "orientable" + at);
    t.expect(rep.kahler == (n % 2 == 1), "kahler" + at);
    t.expect(rep.anosov == (n >= 3), "anosov" + at);
    t.expect(poly_eq(rep.charpoly, poly_pow(poly_xn_minus_1(n), n - 1)),
             "charpoly" + at);
  }
  detail = std::to_string(t.checked) + " invariants" +
           (t.failed ? ", first failure: " + t.first_failure : "");
  return t.failed == 0;
}

bool criterion_figure1(std::string& detail) {
  Tally t;
  for (int n = 3; n <= 6; ++n) {
    auto vb = vb_quotient(n);
    auto vt = vt_quotient(n);
    std::string at = " n=" + std::to_string(n);
    t.expect(relator_check(vb, 1), "vb arrow 1" + at);
    t.expect(relator_check(vb, 4), "vb arrow 4" + at);
    t.expect(relator_check(vt, 1), "vt arrow 1" + at);
    t.expect(relator_check(vt, 3), "vt arrow 3" + at);
    t.expect(!relator_check(vt, 5), "vt arrow 5 nontrivial" + at);
    for (int i = 1; i <= n - 1; ++i) {
      Element img = evaluate_word(vt, relator_word(5, i));
      std::vector<Bigint> expect(vt->rank());
      expect[vt->label_index({i, i + 1})] = 2;
      t.expect(img.v == expect && vt->w_is_identity(img.w),
               "vt arrow 5 image" + at + " i=" + std::to_string(i));
    }
  }
  detail = std::to_string(t.checked) + " relator families" +
           (t.failed ? ", first failure: " + t.first_failure : "");
  return t.failed == 0;
}

bool criterion_plbext_kb3(std::string& detail) {
  Tally t;
  // part 1: every product of alphas with second index k times tau_k has
  // order 2; exhaustive on |a| <= 3 column grids for n = 2, 3
  for (int n = 2; n <= 3; ++n) {
    auto g = plbext_quotient(n);
    for (int k = 1; k <= n; ++k) {
      PointElem tk = generator_image(g, GeneratorSymbol{GenKind::Tau, k, 0, Bigint(1)}).w;
      std::vector<int> column;
      for (int idx = 0; idx < g->rank(); ++idx)
        if (g->label(idx).j == k) column.push_back(idx);
      std::vector<long long> coords(column.size(), -3);
      while (true) {
        std::vector<Bigint> v(g->rank());
        for (size_t l = 0; l < column.size(); ++l) v[column[l]] = Bigint(coords[l]);
        Element e = make_element(g, std::move(v), tk);
        t.expect(element_order(e) == 2, "plbext order-2 n=" + std::to_string(n));
        size_t c = 0;
        while (c < coords.size() && coords[c] == 3) coords[c++] = -3;
        if (c == coords.size()) break;
        ++coords[c];
      }
    }
  }
  // part 2 table, plbext: on the same element family the complete conjugacy
  // relation is componentwise congruence mod 2 on column k
  for (int n = 2; n <= 3; ++n) {
    auto g = plbext_quotient(n);
    for (int k = 1; k <= n; ++k) {
      PointElem tk = generator_image(g, GeneratorSymbol{GenKind::Tau, k, 0, Bigint(1)}).w;
      std::vector<int> column;
      for (int idx = 0; idx < g->rank(); ++idx)
        if (g->label(idx).j == k) column.push_back(idx);
      size_t digits = 2 * column.size();
      std::vector<long long> coords(digits, -3);
      while (true) {
        std::vector<Bigint> va(g->rank()), vb(g->rank());
        bool criterion = true;
        for (size_t l = 0; l < column.size(); ++l) {
          va[column[l]] = Bigint(coords[l]);
          vb[column[l]] = Bigint(coords[column.size() + l]);
          criterion = criterion &&
                      (coords[l] - coords[column.size() + l]) % 2 == 0;
        }
        Element ea = make_element(g, std::move(va), tk);
        Element eb = make_element(g, std::move(vb), tk);
        t.expect(conjugacy_test(ea, eb).has_value() == criterion,
                 "plbext conjugacy table n=" + std::to_string(n));
        size_t c = 0;
        while (c < digits && coords[c] == 3) coords[c++] = -3;
        if (c == digits) break;
        ++coords[c];
      }
    }
  }
  // kb3: order 2 iff a12 + a13 = 0; conjugate iff the sums agree
  auto kb = kb3_quotient();
  for (int r1 = 1; r1 <= 2; ++r1) {
    PointElem w = kb->w_from_perm(Perm::transposition(3, r1));
    for (long long a12 = -3; a12 <= 3; ++a12)
      for (long long a13 = -3; a13 <= 3; ++a13) {
        Element ea = make_element(kb, {Bigint(a12), Bigint(a13)}, w);
        auto ord = element_order(ea);
        t.expect((a12 + a13 == 0) == (ord == std::optional<long long>(2)),
                 "kb3 order-2 table");
        if (a12 + a13 != 0) t.expect(!ord.has_value(), "kb3 infinite order");
        for (long long b12 = -3; b12 <= 3; ++b12)
          for (long long b13 = -3; b13 <= 3; ++b13) {
            Element eb = make_element(kb, {Bigint(b12), Bigint(b13)}, w);
            t.expect(conjugacy_test(ea, eb).has_value() ==
                         (a12 + a13 == b12 + b13),
                     "kb3 conjugacy table");
          }
      }
  }
  detail = std::to_string(t.checked) + " table entries" +
           (t.failed ? ", first failure: " + t.first_failure : "");
  return t.failed == 0;
}

bool criterion_artin(std::string& detail) {
  Tally t;
  for (int n = 2; n <= 6; ++n) {
    auto g = vb_quotient(n);
    IntMat stacked(g->rank(), n * (n - 1) / 2);
    int col = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        stacked.set_column(col++, artin_pure_image(g, i, j).v);
    t.expect(rank_of(stacked) == n * (n - 1) / 2, "rank n=" + std::to_string(n));
  }
  detail = std::to_string(t.checked) + " ranks" +
           (t.failed ? ", first failure: " + t.first_failure : "");
  return t.failed == 0;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<bool(std::string&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "presentation audit (vb/vt/plbext, n=2..6)", criterion_presentations},
      {2, "crystallographic verdicts incl. kb3 kernel = A3", criterion_crystallographic},
      {3, "order() vs brute powering and orbit-sum criterion", criterion_order_vs_oracle},
      {4, "rho-product orders t+2 (n<=6)", criterion_rho_orders},
      {5, "conjugacy vs brute force (radius 4) and torsion pairs", criterion_conjugacy},
      {6, "virtually cyclic realizations (vb/vt, n<=6)", criterion_virtually_cyclic},
      {7, "Bieberbach subgroups: torsion-free, holonomy Z_n, center n-1", criterion_bieberbach},
      {8, "manifold invariants (n=2..8): betti, orient, Kahler, Anosov, charpoly", criterion_manifolds},
      {9, "quotient-diagram relators (vb 1,4; vt 1,3; vt 5 image)", criterion_figure1},
      {10, "plbext/kb3 order-2 and conjugacy tables (|a|<=3)", criterion_plbext_kb3},
      {11, "Artin pure image spans rank n(n-1)/2", criterion_artin},
  };
  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%2d] %s  %s -- %s\n", c.id, ok ? "PASS" : "FAIL", c.title,
                detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
