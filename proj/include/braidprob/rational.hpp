#pragma once

#include <string>

#include "braidprob/bigint.hpp"

namespace braidprob {

// Exact rational, always reduced, denominator > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int64_t v) : num_(v), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den = BigInt(1)) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  double to_double() const { return num_.to_double() / den_.to_double(); }

  std::string to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

 private:
  BigInt num_, den_;

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.is_negative()) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
  }
};

// Exact complex number over Rational; the coefficient field for the exact
// group-algebra mode. Only ring operations and conjugation are needed.
struct RatComplex {
  Rational re, im;

  RatComplex() = default;
  RatComplex(int64_t v) : re(v) {}  // NOLINT
  RatComplex(Rational r, Rational i = Rational()) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  RatComplex conj() const { return RatComplex(re, -im); }

  friend RatComplex operator+(const RatComplex& a, const RatComplex& b) {
    return RatComplex(a.re + b.re, a.im + b.im);
  }
  friend RatComplex operator-(const RatComplex& a, const RatComplex& b) {
    return RatComplex(a.re - b.re, a.im - b.im);
  }
  friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
    return RatComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend RatComplex operator-(const RatComplex& a) { return RatComplex(-a.re, -a.im); }
  RatComplex& operator+=(const RatComplex& o) { return *this = *this + o; }
  RatComplex& operator*=(const RatComplex& o) { return *this = *this * o; }
  friend bool operator==(const RatComplex& a, const RatComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const RatComplex& a, const RatComplex& b) { return !(a == b); }

  std::string to_string() const {
    if (im.is_zero()) return re.to_string();
    return re.to_string() + (im.num().is_negative() ? "" : "+") + im.to_string() + "i";
  }
};

}  // namespace braidprob
