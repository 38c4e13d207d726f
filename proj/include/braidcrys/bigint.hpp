// Arbitrary-precision signed integers, sign-magnitude with 32-bit limbs.
// Only what the exact linear algebra needs: ring ops, truncated divmod, gcd.

#ifndef BRAIDCRYS_BIGINT_HPP_
#define BRAIDCRYS_BIGINT_HPP_

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <stdexcept>
#include <utility>
#include <vector>

namespace braidcrys {

class Bigint {
public:
  Bigint() = default;
  Bigint(long long v) {  // NOLINT: implicit on purpose
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    while (u != 0) {
      mag_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
      u >>= 32;
    }
  }
  Bigint(int v) : Bigint(static_cast<long long>(v)) {}

  static Bigint from_string(std::string_view s) {
    size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    if (pos == s.size())
      throw std::invalid_argument("Bigint: empty numeral");
    Bigint r;
    for (; pos < s.size(); ++pos) {
      char c = s[pos];
      if (c < '0' || c > '9')
        throw std::invalid_argument("Bigint: bad digit in numeral");
      r.mul_small_add(10, static_cast<uint32_t>(c - '0'));
    }
    if (!r.mag_.empty()) r.sign_ = sign;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  int signum() const { return sign_; }

  bool fits_slonglong() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = mag_u64();
    if (sign_ >= 0) return u <= 0x7fffffffffffffffULL;
    return u <= 0x8000000000000000ULL;
  }
  long long as_slonglong() const {
    if (!fits_slonglong()) throw std::overflow_error("Bigint: out of long long range");
    unsigned long long u = mag_u64();
    if (sign_ >= 0) return static_cast<long long>(u);
    return -static_cast<long long>(u - 1) - 1;
  }

  friend bool operator==(const Bigint& a, const Bigint& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const Bigint& a, const Bigint& b) { return !(a == b); }
  friend bool operator<(const Bigint& a, const Bigint& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Bigint& a, const Bigint& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Bigint& a, const Bigint& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Bigint& a, const Bigint& b) { return cmp(a, b) >= 0; }

  Bigint operator-() const {
    Bigint r = *this;
    r.sign_ = -r.sign_;
    return r;
  }
  Bigint abs() const {
    Bigint r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend Bigint operator+(const Bigint& a, const Bigint& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    Bigint r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return Bigint();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }
  friend Bigint operator-(const Bigint& a, const Bigint& b) { return a + (-b); }

  friend Bigint operator*(const Bigint& a, const Bigint& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return Bigint();
    Bigint r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
      uint64_t carry = 0;
      uint64_t ai = a.mag_[i];
      for (size_t j = 0; j < b.mag_.size(); ++j) {
        uint64_t cur = r.mag_[i + j] + ai * b.mag_[j] + carry;
        r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
      }
      size_t k = i + b.mag_.size();
      while (carry != 0) {
        uint64_t cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  Bigint& operator+=(const Bigint& b) { return *this = *this + b; }
  Bigint& operator-=(const Bigint& b) { return *this = *this - b; }
  Bigint& operator*=(const Bigint& b) { return *this = *this * b; }

  // Truncated division (C semantics): q = trunc(a/b), r = a - q*b.
  static std::pair<Bigint, Bigint> divmod(const Bigint& a, const Bigint& b) {
    if (b.sign_ == 0) throw std::domain_error("Bigint: division by zero");
    if (a.sign_ == 0) return {Bigint(), Bigint()};
    if (cmp_mag(a.mag_, b.mag_) < 0) return {Bigint(), a};
    Bigint q, r;
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.trim();
    r.trim();
    if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;
    if (!r.mag_.empty()) r.sign_ = a.sign_;
    return {q, r};
  }
  friend Bigint operator/(const Bigint& a, const Bigint& b) { return divmod(a, b).first; }
  friend Bigint operator%(const Bigint& a, const Bigint& b) { return divmod(a, b).second; }

  // Exact quotient; throws if b does not divide a.
  static Bigint div_exact(const Bigint& a, const Bigint& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("Bigint: inexact division");
    return q;
  }

  // Quotient rounded to nearest (ties toward zero); used by pivot reduction.
  static Bigint div_round(const Bigint& a, const Bigint& b) {
    auto [q, r] = divmod(a, b);
    Bigint r2 = r.abs() + r.abs();
    if (r2 > b.abs())
      q += Bigint(a.sign_ * b.sign_);
    return q;
  }

  std::string str() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
      // divide magnitude by 10^9
      uint64_t rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out.append(digits.rbegin(), digits.rend());
    return out;
  }

  friend Bigint gcd(Bigint a, Bigint b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
      Bigint r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

private:
  int sign_ = 0;
  std::vector<uint32_t> mag_;  // little-endian, no trailing zero limbs

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }
  unsigned long long mag_u64() const {
    unsigned long long u = 0;
    if (mag_.size() > 0) u = mag_[0];
    if (mag_.size() > 1) u |= static_cast<unsigned long long>(mag_[1]) << 32;
    return u;
  }
  void mul_small_add(uint32_t f, uint32_t add) {
    uint64_t carry = add;
    for (size_t i = 0; i < mag_.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(mag_[i]) * f + carry;
      mag_[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    while (carry != 0) {
      mag_.push_back(static_cast<uint32_t>(carry & 0xffffffffULL));
      carry >>= 32;
    }
    if (!mag_.empty()) sign_ = 1;
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static int cmp(const Bigint& a, const Bigint& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
  }
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r = big;
    uint64_t carry = 0;
    for (size_t i = 0; i < small.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(r[i]) + small[i] + carry;
      r[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    for (size_t i = small.size(); carry != 0 && i < r.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(r[i]) + carry;
      r[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    if (carry != 0) r.push_back(static_cast<uint32_t>(carry));
    return r;
  }
  // requires a >= b
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
      if (cur < 0) {
        cur += int64_t(1) << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  // magnitude division, a >= b > 0
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (a.size() <= 2 && b.size() <= 2) {
      uint64_t ua = a[0] | (a.size() > 1 ? static_cast<uint64_t>(a[1]) << 32 : 0);
      uint64_t ub = b[0] | (b.size() > 1 ? static_cast<uint64_t>(b[1]) << 32 : 0);
      uint64_t uq = ua / ub, ur = ua % ub;
      q = {static_cast<uint32_t>(uq & 0xffffffffULL), static_cast<uint32_t>(uq >> 32)};
      r = {static_cast<uint32_t>(ur & 0xffffffffULL), static_cast<uint32_t>(ur >> 32)};
      return;
    }
    if (b.size() == 1) {
      q.assign(a.size(), 0);
      uint64_t rem = 0;
      for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<uint32_t>(cur / b[0]);
        rem = cur % b[0];
      }
      r = {static_cast<uint32_t>(rem)};
      return;
    }
    // binary long division; operand sizes here are small
    size_t abits = bit_length(a);
    q.assign(a.size(), 0);
    std::vector<uint32_t> rem;
    for (size_t bit = abits; bit-- > 0;) {
      shift_left1(rem);
      if ((a[bit / 32] >> (bit % 32)) & 1u) {
        if (rem.empty()) rem.push_back(1);
        else {
          uint64_t cur = static_cast<uint64_t>(rem[0]) | 1u;
          rem[0] = static_cast<uint32_t>(cur);
        }
      }
      if (cmp_mag(rem, b) >= 0) {
        rem = sub_mag(rem, b);
        q[bit / 32] |= (1u << (bit % 32));
      }
    }
    r = rem;
  }
  static size_t bit_length(const std::vector<uint32_t>& m) {
    if (m.empty()) return 0;
    uint32_t top = m.back();
    size_t bits = (m.size() - 1) * 32;
    while (top != 0) {
      ++bits;
      top >>= 1;
    }
    return bits;
  }
  static void shift_left1(std::vector<uint32_t>& m) {
    uint32_t carry = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      uint32_t next = m[i] >> 31;
      m[i] = (m[i] << 1) | carry;
      carry = next;
    }
    if (carry != 0) m.push_back(carry);
  }
};

inline Bigint lcm(const Bigint& a, const Bigint& b) {
  if (a.is_zero() || b.is_zero()) return Bigint();
  return Bigint::div_exact(a * b, gcd(a, b)).abs();
}

}  // namespace braidcrys

#endif
