// Dense univariate polynomials over the integers, coefficients ascending
// (p[k] is the coefficient of x^k).  Enough for characteristic polynomials
// and cyclotomic factor counting.

#ifndef BRAIDCRYS_POLY_HPP_
#define BRAIDCRYS_POLY_HPP_

#include <map>
#include <optional>
#include <vector>

#include "braidcrys/bigint.hpp"
#include "braidcrys/perm.hpp"  // DomainError

namespace braidcrys {

using Poly = std::vector<Bigint>;

inline Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline bool poly_eq(const Poly& a, const Poly& b) {
  return poly_trim(a) == poly_trim(b);
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline Poly poly_pow(const Poly& a, int e) {
  Poly r{Bigint(1)};
  for (int i = 0; i < e; ++i) r = poly_mul(r, a);
  return r;
}

// x^n - 1
inline Poly poly_xn_minus_1(int n) {
  Poly p(n + 1);
  p[0] = Bigint(-1);
  p[n] = Bigint(1);
  return p;
}

// exact division; nullopt when b does not divide a over Z[x]
inline std::optional<Poly> poly_div_exact(const Poly& a_in, const Poly& b_in) {
  Poly a = poly_trim(a_in), b = poly_trim(b_in);
  if (b.empty()) throw DomainError("poly_div_exact: division by zero polynomial");
  if (a.empty()) return Poly{};
  if (a.size() < b.size()) return std::nullopt;
  Poly q(a.size() - b.size() + 1);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    Bigint num = a[k + b.size() - 1];
    auto [c, rem] = Bigint::divmod(num, b.back());
    if (!rem.is_zero()) return std::nullopt;
    q[k] = c;
    if (c.is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  for (const Bigint& c : a)
    if (!c.is_zero()) return std::nullopt;
  return q;
}

// d-th cyclotomic polynomial via x^d - 1 = prod_{e | d} Phi_e
inline Poly cyclotomic(int d) {
  Poly p = poly_xn_minus_1(d);
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto q = poly_div_exact(p, cyclotomic(e));
    if (!q) throw DomainError("cyclotomic: internal division failure");
    p = *q;
  }
  return p;
}

// multiplicity of each Phi_d, d | n, in p (exact repeated division)
inline std::map<int, int> cyclotomic_multiplicities(const Poly& p, int n) {
  std::map<int, int> mult;
  Poly rest = poly_trim(p);
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Poly phi = cyclotomic(d);
    int m = 0;
    while (true) {
      auto q = poly_div_exact(rest, phi);
      if (!q) break;
      rest = *q;
      ++m;
    }
    mult[d] = m;
  }
  return mult;
}

}  // namespace braidcrys

#endif
