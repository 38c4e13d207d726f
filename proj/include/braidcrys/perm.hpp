// Permutations of {1..n} and the small symmetric-group utilities the
// conjugacy machinery needs.
//
// Composition convention: compose(p, q) applies q first, then p, i.e.
// (p*q)(x) = p(q(x)).  When transcribing a product written in left-to-right
// application order ("apply p, then q"), use compose_seq(p, q) == compose(q, p).

#ifndef BRAIDCRYS_PERM_HPP_
#define BRAIDCRYS_PERM_HPP_

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcrys {

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
        throw DomainError("Perm: images are not a bijection of {1..n}");
      seen[v - 1] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Perm(std::move(im));
  }
  // the transposition (i, i+1) in S_n
  static Perm transposition(int n, int i) {
    if (i < 1 || i + 1 > n) throw DomainError("Perm: transposition index out of range");
    Perm p = identity(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }
  static Perm swap_points(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n) throw DomainError("Perm: point out of range");
    Perm p = identity(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x - 1]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int x = 1; x <= degree(); ++x)
      if (img_[x - 1] != x) return false;
    return true;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  Perm inverse() const {
    std::vector<int> im(img_.size());
    for (int x = 1; x <= degree(); ++x) im[img_[x - 1] - 1] = x;
    Perm p;
    p.img_ = std::move(im);
    return p;
  }

  int parity() const {  // +1 even, -1 odd
    int transpositions = 0;
    for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
    return transpositions % 2 == 0 ? 1 : -1;
  }

  // disjoint cycles of length >= 2, each starting at its least point,
  // sorted by that least point
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int x = 1; x <= degree(); ++x) {
      if (seen[x - 1] || img_[x - 1] == x) continue;
      std::vector<int> c;
      int y = x;
      do {
        seen[y - 1] = true;
        c.push_back(y);
        y = img_[y - 1];
      } while (y != x);
      out.push_back(std::move(c));
    }
    return out;
  }

  std::string cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += '(';
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(c[i]);
      }
      s += ')';
    }
    return s;
  }

private:
  std::vector<int> img_;
};

inline Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw DomainError("Perm: degree mismatch in compose");
  std::vector<int> im(p.degree());
  for (int x = 1; x <= p.degree(); ++x) im[x - 1] = p.apply(q.apply(x));
  return Perm(std::move(im));
}

// apply p first, then q
inline Perm compose_seq(const Perm& p, const Perm& q) { return compose(q, p); }

inline Perm conjugate(const Perm& c, const Perm& p) {  // c p c^-1
  return compose(compose(c, p), c.inverse());
}

// cycle type as a sorted partition of n, fixed points included as 1s
inline std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> type;
  int moved = 0;
  for (const auto& c : p.cycles()) {
    type.push_back(static_cast<int>(c.size()));
    moved += static_cast<int>(c.size());
  }
  for (int k = moved; k < p.degree(); ++k) type.push_back(1);
  std::sort(type.begin(), type.end());
  return type;
}

inline long long perm_order(const Perm& p) {
  long long ord = 1;
  for (const auto& c : p.cycles())
    ord = std::lcm(ord, static_cast<long long>(c.size()));
  return ord;
}

// visit all of S_n in lexicographic order of image arrays
template <typename Fn>
void for_each_perm(int n, Fn&& fn) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  do {
    fn(Perm(im));
  } while (std::next_permutation(im.begin(), im.end()));
}

// every c with c * w1 * c^-1 == w2, in lexicographic order;
// empty exactly when the cycle types differ
inline std::vector<Perm> find_conjugators(const Perm& w1, const Perm& w2) {
  if (w1.degree() != w2.degree())
    throw DomainError("find_conjugators: degree mismatch");
  std::vector<Perm> out;
  for_each_perm(w1.degree(), [&](const Perm& c) {
    if (conjugate(c, w1) == w2) out.push_back(c);
  });
  return out;
}

inline unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<unsigned long long>(k);
  return f;
}

}  // namespace braidcrys

#endif
