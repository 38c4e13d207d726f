// Dense integer matrices over Bigint and the exact solvers built on them:
// Smith normal form (D = U*A*V with U, V unimodular), complete integer
// linear-system solving, column Hermite reduction, Bareiss determinant and
// the division-free Berkowitz characteristic polynomial.

#ifndef BRAIDCRYS_INTMAT_HPP_
#define BRAIDCRYS_INTMAT_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "braidcrys/bigint.hpp"
#include "braidcrys/perm.hpp"  // for DomainError

namespace braidcrys {

struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Bigint> a;  // row-major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Bigint& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Bigint& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool is_identity() const {
    if (rows != cols) return false;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (at(r, c) != Bigint(r == c ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const IntMat& x, const IntMat& y) { return !(x == y); }

  friend IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw DomainError("IntMat: dimension mismatch in product");
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const Bigint& v = x.at(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < y.cols; ++j)
          if (!y.at(k, j).is_zero()) r.at(i, j) += v * y.at(k, j);
      }
    return r;
  }

  friend IntMat operator-(const IntMat& x, const IntMat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
      throw DomainError("IntMat: dimension mismatch in difference");
    IntMat r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
  }

  std::vector<Bigint> apply(const std::vector<Bigint>& v) const {
    if (static_cast<int>(v.size()) != cols)
      throw DomainError("IntMat: dimension mismatch in apply");
    std::vector<Bigint> out(rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
  }

  IntMat transposed() const {
    IntMat t(cols, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  std::vector<Bigint> column(int c) const {
    std::vector<Bigint> v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
  }
  void set_column(int c, const std::vector<Bigint>& v) {
    for (int r = 0; r < rows; ++r) at(r, c) = v[r];
  }
};

struct SmithResult {
  IntMat d;  // diagonal, d_i | d_{i+1}, nonnegative
  IntMat u;  // unimodular, d = u * a * v
  IntMat v;
  int rank = 0;
};

namespace detail {

inline void swap_rows(IntMat& m, int r1, int r2) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}
inline void swap_cols(IntMat& m, int c1, int c2) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
}
inline void negate_row(IntMat& m, int r) {
  for (int c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
}
inline void negate_col(IntMat& m, int c) {
  for (int r = 0; r < m.rows; ++r) m.at(r, c) = -m.at(r, c);
}
// row r2 += f * row r1
inline void add_row(IntMat& m, int r2, int r1, const Bigint& f) {
  if (f.is_zero()) return;
  for (int c = 0; c < m.cols; ++c)
    if (!m.at(r1, c).is_zero()) m.at(r2, c) += f * m.at(r1, c);
}
inline void add_col(IntMat& m, int c2, int c1, const Bigint& f) {
  if (f.is_zero()) return;
  for (int r = 0; r < m.rows; ++r)
    if (!m.at(r, c1).is_zero()) m.at(r, c2) += f * m.at(r, c1);
}

}  // namespace detail

// Smith normal form by elimination with the smallest nonzero pivot.
inline SmithResult smith_normal_form(const IntMat& input) {
  SmithResult res;
  res.d = input;
  res.u = IntMat::identity(input.rows);
  res.v = IntMat::identity(input.cols);
  IntMat& d = res.d;
  int k = 0;
  int limit = std::min(input.rows, input.cols);
  while (k < limit) {
    // smallest |entry| in the trailing block as pivot
    int pr = -1, pc = -1;
    for (int r = k; r < d.rows; ++r)
      for (int c = k; c < d.cols; ++c) {
        if (d.at(r, c).is_zero()) continue;
        if (pr < 0 || d.at(r, c).abs() < d.at(pr, pc).abs()) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // trailing block is zero
    if (pr != k) {
      detail::swap_rows(d, k, pr);
      detail::swap_rows(res.u, k, pr);
    }
    if (pc != k) {
      detail::swap_cols(d, k, pc);
      detail::swap_cols(res.v, k, pc);
    }
    bool clean = true;
    for (int r = k + 1; r < d.rows; ++r) {
      Bigint q = Bigint::div_round(d.at(r, k), d.at(k, k));
      detail::add_row(d, r, k, -q);
      detail::add_row(res.u, r, k, -q);
      if (!d.at(r, k).is_zero()) clean = false;
    }
    for (int c = k + 1; c < d.cols; ++c) {
      Bigint q = Bigint::div_round(d.at(k, c), d.at(k, k));
      detail::add_col(d, c, k, -q);
      detail::add_col(res.v, c, k, -q);
      if (!d.at(k, c).is_zero()) clean = false;
    }
    if (!clean) continue;  // smaller residues exist, pick a new pivot
    // pivot must divide the rest of the block
    bool divides = true;
    for (int r = k + 1; r < d.rows && divides; ++r)
      for (int c = k + 1; c < d.cols && divides; ++c)
        if (!(d.at(r, c) % d.at(k, k)).is_zero()) {
          detail::add_row(d, k, r, Bigint(1));
          detail::add_row(res.u, k, r, Bigint(1));
          divides = false;
        }
    if (!divides) continue;
    if (d.at(k, k).signum() < 0) {
      detail::negate_row(d, k);
      detail::negate_row(res.u, k);
    }
    ++k;
  }
  res.rank = k;
  return res;
}

inline long long rank_of(const IntMat& m) { return smith_normal_form(m).rank; }

// Complete solution set of A x = b over the integers.
struct LinearSolution {
  std::vector<Bigint> particular;
  IntMat homogeneous;  // columns span the solutions of A x = 0 (Hermite-reduced)
};

inline IntMat hermite_columns(const IntMat& m);

inline std::optional<LinearSolution> solve_integer(const IntMat& a,
                                                   const std::vector<Bigint>& b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw DomainError("solve_integer: right-hand side has wrong length");
  SmithResult s = smith_normal_form(a);
  std::vector<Bigint> ub = s.u.apply(b);
  std::vector<Bigint> y(a.cols);
  for (int i = 0; i < a.rows; ++i) {
    if (i < s.rank) {
      auto [q, r] = Bigint::divmod(ub[i], s.d.at(i, i));
      if (!r.is_zero()) return std::nullopt;
      y[i] = q;
    } else if (!ub[i].is_zero()) {
      return std::nullopt;
    }
  }
  LinearSolution sol;
  sol.particular = s.v.apply(y);
  IntMat basis(a.cols, a.cols - s.rank);
  for (int j = s.rank; j < a.cols; ++j)
    for (int r = 0; r < a.cols; ++r) basis.at(r, j - s.rank) = s.v.at(r, j);
  sol.homogeneous = hermite_columns(basis);
  return sol;
}

// Canonical column Hermite form of the lattice spanned by the columns:
// zero columns dropped, pivots positive, entries left of a pivot reduced
// into [0, pivot).  Unique for a given column span.
inline IntMat hermite_columns(const IntMat& m) {
  IntMat h = m;
  int pivot_col = h.cols - 1;
  for (int r = h.rows - 1; r >= 0 && pivot_col >= 0; --r) {
    // gcd out everything in row r left of pivot_col inclusive
    while (true) {
      int best = -1;
      for (int c = 0; c <= pivot_col; ++c)
        if (!h.at(r, c).is_zero() &&
            (best < 0 || h.at(r, c).abs() < h.at(r, best).abs()))
          best = c;
      if (best < 0) break;
      bool reduced = true;
      for (int c = 0; c <= pivot_col; ++c) {
        if (c == best || h.at(r, c).is_zero()) continue;
        Bigint q = Bigint::div_round(h.at(r, c), h.at(r, best));
        detail::add_col(h, c, best, -q);
        if (!h.at(r, c).is_zero()) reduced = false;
      }
      if (reduced) {
        if (best != pivot_col) detail::swap_cols(h, best, pivot_col);
        if (h.at(r, pivot_col).signum() < 0) detail::negate_col(h, pivot_col);
        // reduce entries to the right of the pivot into [0, pivot)
        for (int c = pivot_col + 1; c < h.cols; ++c) {
          auto [q, rem] = Bigint::divmod(h.at(r, c), h.at(r, pivot_col));
          if (rem.signum() < 0) q -= 1;
          detail::add_col(h, c, pivot_col, -q);
        }
        --pivot_col;
        break;
      }
    }
  }
  // columns 0..pivot_col are now zero; drop them
  IntMat out(h.rows, h.cols - (pivot_col + 1));
  for (int r = 0; r < h.rows; ++r)
    for (int c = pivot_col + 1; c < h.cols; ++c)
      out.at(r, c - (pivot_col + 1)) = h.at(r, c);
  return out;
}

// Bareiss fraction-free determinant.
inline Bigint determinant(const IntMat& input) {
  if (input.rows != input.cols) throw DomainError("determinant: matrix not square");
  int n = input.rows;
  if (n == 0) return Bigint(1);
  IntMat m = input;
  Bigint prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m.at(r, k).is_zero()) {
          swap = r;
          break;
        }
      if (swap < 0) return Bigint(0);
      detail::swap_rows(m, k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = Bigint::div_exact(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j),
                                       prev);
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

// Berkowitz: characteristic polynomial det(xI - A), coefficients ascending
// (index k holds the coefficient of x^k), leading coefficient 1.
inline std::vector<Bigint> charpoly(const IntMat& input) {
  if (input.rows != input.cols) throw DomainError("charpoly: matrix not square");
  int n = input.rows;
  std::vector<Bigint> p{Bigint(1)};  // descending during the build
  for (int k = 0; k < n; ++k) {
    // Toeplitz column for principal submatrix of size k+1:
    // t = [1, -a_kk, -(r M q), -(r M^2 q), ...] with r = row, q = col
    std::vector<Bigint> t(k + 2);
    t[0] = 1;
    t[1] = -input.at(k, k);
    std::vector<Bigint> w(k);
    for (int i = 0; i < k; ++i) w[i] = input.at(i, k);
    for (int s = 2; s <= k + 1; ++s) {
      Bigint dot;
      for (int i = 0; i < k; ++i)
        if (!input.at(k, i).is_zero() && !w[i].is_zero()) dot += input.at(k, i) * w[i];
      t[s] = -dot;
      if (s <= k) {
        std::vector<Bigint> w2(k);
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j)
            if (!input.at(i, j).is_zero() && !w[j].is_zero())
              w2[i] += input.at(i, j) * w[j];
        }
        w = std::move(w2);
      }
    }
    std::vector<Bigint> next(k + 2);
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      for (int s = 0; s + i < k + 2 && s < static_cast<int>(t.size()); ++s)
        next[i + s] += p[i] * t[s];
    p = std::move(next);
  }
  std::vector<Bigint> ascending(p.rbegin(), p.rend());
  return ascending;
}

}  // namespace braidcrys

#endif
