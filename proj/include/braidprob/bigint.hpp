#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidprob {

// Signed arbitrary-precision integer, base 1e9 limbs, little-endian.
// Sized for this project's needs (walk counts, series coefficients up to
// ~16^64); all algorithms are the simple quadratic ones.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int64_t v) {  // NOLINT: implicit by design
    if (v < 0) {
      // magnitude computed without overflowing on INT64_MIN
      from_u64(static_cast<uint64_t>(-(v + 1)) + 1);
      neg_ = !limbs_.empty();
    } else {
      from_u64(static_cast<uint64_t>(v));
    }
  }
  static BigInt from_uint(uint64_t v) {
    BigInt r;
    r.from_u64(v);
    return r;
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return neg_; }
  int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

  friend BigInt operator-(const BigInt& a) {
    BigInt r = a;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.neg_ == b.neg_) {
      BigInt r;
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.neg_ = a.neg_;
      r.trim();
      return r;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    BigInt r;
    if (c == 0) return r;
    if (c > 0) {
      r.limbs_ = sub_mag(a.limbs_, b.limbs_);
      r.neg_ = a.neg_;
    } else {
      r.limbs_ = sub_mag(b.limbs_, a.limbs_);
      r.neg_ = b.neg_;
    }
    r.trim();
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.limbs_.size(); ++j) {
        uint64_t cur = r.limbs_[i + j] +
                       static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
        carry = cur / kBase;
      }
      size_t k = i + b.limbs_.size();
      while (carry) {
        uint64_t cur = r.limbs_[k] + carry;
        r.limbs_[k] = static_cast<uint32_t>(cur % kBase);
        carry = cur / kBase;
        ++k;
      }
    }
    r.neg_ = a.neg_ != b.neg_;
    r.trim();
    return r;
  }

  // Truncated division (quotient rounds toward zero, as in C).
  static void divmod(const BigInt& a, const BigInt& b, BigInt* q, BigInt* r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    BigInt quo, rem;
    divmod_mag(a.limbs_, b.limbs_, &quo.limbs_, &rem.limbs_);
    quo.neg_ = a.neg_ != b.neg_;
    rem.neg_ = a.neg_;
    quo.trim();
    rem.trim();
    if (q) *q = quo;
    if (r) *r = rem;
  }
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q;
    divmod(a, b, &q, nullptr);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt r;
    divmod(a, b, nullptr, &r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.neg_ != b.neg_) return a.neg_;
    int c = cmp_mag(a.limbs_, b.limbs_);
    return a.neg_ ? c > 0 : c < 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  static BigInt pow(const BigInt& base, uint32_t e) {
    BigInt r(1), b = base;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.is_zero()) {
      BigInt r = a % b;
      a = b;
      b = r;
    }
    return a;
  }

  BigInt abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
  }

  // Throws if the value does not fit.
  int64_t to_int64() const {
    uint64_t acc = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
      if (acc > (UINT64_MAX - limbs_[i]) / kBase)
        throw std::overflow_error("BigInt: to_int64 overflow");
      acc = acc * kBase + limbs_[i];
    }
    if (!neg_ && acc > static_cast<uint64_t>(INT64_MAX))
      throw std::overflow_error("BigInt: to_int64 overflow");
    if (neg_ && acc > static_cast<uint64_t>(INT64_MAX) + 1)
      throw std::overflow_error("BigInt: to_int64 overflow");
    return neg_ ? -static_cast<int64_t>(acc - 1) - 1 : static_cast<int64_t>(acc);
  }

  double to_double() const {
    double acc = 0;
    for (size_t i = limbs_.size(); i-- > 0;) acc = acc * kBase + limbs_[i];
    return neg_ ? -acc : acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s = neg_ ? "-" : "";
    s += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

  static BigInt from_string(const std::string& s) {
    BigInt r;
    size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    if (pos >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; pos < s.size(); ++pos) {
      if (s[pos] < '0' || s[pos] > '9')
        throw std::invalid_argument("BigInt: bad digit");
      r = r * BigInt(10) + BigInt(s[pos] - '0');
    }
    r.neg_ = neg && !r.is_zero();
    return r;
  }

 private:
  static constexpr uint32_t kBase = 1000000000u;
  std::vector<uint32_t> limbs_;  // little-endian, no leading zero limb
  bool neg_ = false;

  void from_u64(uint64_t v) {
    limbs_.clear();
    neg_ = false;
    while (v) {
      limbs_.push_back(static_cast<uint32_t>(v % kBase));
      v /= kBase;
    }
  }
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
  }

  using Mag = std::vector<uint32_t>;
  static int cmp_mag(const Mag& a, const Mag& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static Mag add_mag(const Mag& a, const Mag& b) {
    Mag r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint32_t carry = 0;
    for (size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
      uint64_t cur = carry;
      if (i < a.size()) cur += a[i];
      if (i < b.size()) cur += b[i];
      r.push_back(static_cast<uint32_t>(cur % kBase));
      carry = static_cast<uint32_t>(cur / kBase);
    }
    return r;
  }
  // requires |a| >= |b|
  static Mag sub_mag(const Mag& a, const Mag& b) {
    Mag r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      int64_t cur = static_cast<int64_t>(r[i]) - borrow -
                    (i < b.size() ? b[i] : 0);
      borrow = 0;
      if (cur < 0) {
        cur += kBase;
        borrow = 1;
      }
      r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  // Schoolbook long division on magnitudes; per-digit binary search keeps the
  // carry logic trivial (operand sizes here are a handful of limbs).
  static void divmod_mag(const Mag& a, const Mag& b, Mag* q, Mag* r) {
    q->clear();
    r->clear();
    if (cmp_mag(a, b) < 0) {
      *r = a;
      return;
    }
    q->assign(a.size(), 0);
    Mag rem;
    for (size_t i = a.size(); i-- > 0;) {
      rem.insert(rem.begin(), a[i]);
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      uint32_t lo = 0, hi = kBase - 1, digit = 0;
      while (lo <= hi) {
        uint32_t mid = lo + (hi - lo) / 2;
        if (cmp_mag(mul_mag_small(b, mid), rem) <= 0) {
          digit = mid;
          lo = mid + 1;
        } else {
          if (mid == 0) break;
          hi = mid - 1;
        }
      }
      (*q)[i] = digit;
      rem = sub_mag(rem, mul_mag_small(b, digit));
    }
    while (!q->empty() && q->back() == 0) q->pop_back();
    *r = rem;
  }
  static Mag mul_mag_small(const Mag& a, uint32_t m) {
    Mag r;
    if (m == 0) return r;
    r.reserve(a.size() + 1);
    uint64_t carry = 0;
    for (uint32_t limb : a) {
      uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
      r.push_back(static_cast<uint32_t>(cur % kBase));
      carry = cur / kBase;
    }
    while (carry) {
      r.push_back(static_cast<uint32_t>(carry % kBase));
      carry /= kBase;
    }
    return r;
  }
};

}  // namespace braidprob
