// Signed permutation matrices: every basis vector maps to plus or minus a
// basis vector.  These are the only point-group actions that occur here.

#ifndef BRAIDCRYS_MONOMIAL_HPP_
#define BRAIDCRYS_MONOMIAL_HPP_

#include <vector>

#include "braidcrys/bigint.hpp"
#include "braidcrys/intmat.hpp"

namespace braidcrys {

struct MonomialMatrix {
  // e_k  |->  sign[k] * e_{target[k]}
  std::vector<int> target;
  std::vector<int> sign;

  static MonomialMatrix identity(int m) {
    MonomialMatrix r;
    r.target.resize(m);
    r.sign.assign(m, 1);
    for (int k = 0; k < m; ++k) r.target[k] = k;
    return r;
  }

  int dim() const { return static_cast<int>(target.size()); }

  bool is_identity() const {
    for (int k = 0; k < dim(); ++k)
      if (target[k] != k || sign[k] != 1) return false;
    return true;
  }

  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
    return a.target == b.target && a.sign == b.sign;
  }
  friend bool operator!=(const MonomialMatrix& a, const MonomialMatrix& b) {
    return !(a == b);
  }

  std::vector<Bigint> apply(const std::vector<Bigint>& v) const {
    std::vector<Bigint> out(v.size());
    for (int k = 0; k < dim(); ++k) {
      if (v[k].is_zero()) continue;
      out[target[k]] = sign[k] > 0 ? v[k] : -v[k];
    }
    return out;
  }

  MonomialMatrix inverse() const {
    MonomialMatrix r;
    r.target.resize(dim());
    r.sign.resize(dim());
    for (int k = 0; k < dim(); ++k) {
      r.target[target[k]] = k;
      r.sign[target[k]] = sign[k];
    }
    return r;
  }

  IntMat to_intmat() const {
    IntMat m(dim(), dim());
    for (int k = 0; k < dim(); ++k) m.at(target[k], k) = sign[k];
    return m;
  }
};

// (a*b) e_k = a (b e_k)
inline MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b) {
  MonomialMatrix r;
  r.target.resize(b.dim());
  r.sign.resize(b.dim());
  for (int k = 0; k < b.dim(); ++k) {
    r.target[k] = a.target[b.target[k]];
    r.sign[k] = a.sign[b.target[k]] * b.sign[k];
  }
  return r;
}

}  // namespace braidcrys

#endif
