#ifndef SOLW_RATIONAL_HPP
#define SOLW_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "solw/errors.hpp"

namespace solw {

// Exact rational on int64. All quantities in this project are tiny
// (coefficients with denominators dividing 21, values below 2^40), so
// a word-sized rational with overflow checks is enough.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  long long as_integer() const {
    if (den_ != 1) throw Internal("rational is not an integer: " + str());
    return num_;
  }

  friend Rat operator+(const Rat &a, const Rat &b) {
    return Rat(checked(a.num_ * (__int128)b.den_ + (__int128)b.num_ * a.den_),
               checked((__int128)a.den_ * b.den_));
  }
  friend Rat operator-(const Rat &a, const Rat &b) { return a + Rat(-b.num_, b.den_); }
  friend Rat operator*(const Rat &a, const Rat &b) {
    return Rat(checked((__int128)a.num_ * b.num_), checked((__int128)a.den_ * b.den_));
  }
  friend Rat operator/(const Rat &a, const Rat &b) {
    if (b.num_ == 0) throw Internal("rational division by zero");
    return Rat(checked((__int128)a.num_ * b.den_), checked((__int128)a.den_ * b.num_));
  }
  Rat operator-() const { return Rat(-num_, den_); }
  Rat &operator+=(const Rat &o) { return *this = *this + o; }
  Rat &operator-=(const Rat &o) { return *this = *this - o; }
  Rat &operator*=(const Rat &o) { return *this = *this * o; }

  friend bool operator==(const Rat &a, const Rat &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat &a, const Rat &b) { return !(a == b); }
  friend bool operator<(const Rat &a, const Rat &b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator<=(const Rat &a, const Rat &b) { return a < b || a == b; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // parses "n" or "n/d"
  static Rat parse(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }

  friend std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.str(); }

private:
  static long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw Internal("rational overflow");
    return (long long)v;
  }
  void normalize() {
    if (den_ == 0) throw Internal("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }
  long long num_, den_;
};

// 2-adic valuation of a nonzero rational
inline int v2(const Rat &r) {
  check(!r.is_zero(), "v2 of zero");
  auto v = [](long long n) {
    int k = 0;
    while (n % 2 == 0) { n /= 2; ++k; }
    return k;
  };
  long long n = r.num() < 0 ? -r.num() : r.num();
  return v(n) - v(r.den());
}

inline int v2_int(long long n) {
  check(n != 0, "v2 of zero");
  if (n < 0) n = -n;
  int k = 0;
  while (n % 2 == 0) { n /= 2; ++k; }
  return k;
}

} // namespace solw

#endif
