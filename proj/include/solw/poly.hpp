#ifndef SOLW_POLY_HPP
#define SOLW_POLY_HPP

#include <string>
#include <vector>

#include "solw/rational.hpp"

namespace solw {

// Polynomial in x = 2^l with exact rational coefficients, ascending order.
// Trailing zeros are trimmed so equality is coefficientwise.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat &r) { return RatPoly({r}); }

  const std::vector<Rat> &coeffs() const { return c_; }
  int degree() const { return (int)c_.size() - 1; } // -1 for zero poly
  bool is_zero() const { return c_.empty(); }

  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Rat eval(const Rat &x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  Rat eval_at_x(long long x) const { return eval(Rat(x)); }

  friend RatPoly operator+(const RatPoly &a, const RatPoly &b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return RatPoly(std::move(r));
  }
  friend RatPoly operator-(const RatPoly &a, const RatPoly &b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return RatPoly(std::move(r));
  }
  friend RatPoly operator*(const RatPoly &a, const RatPoly &b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(r));
  }
  RatPoly &operator+=(const RatPoly &o) { return *this = *this + o; }

  friend bool operator==(const RatPoly &a, const RatPoly &b) { return a.c_ == b.c_; }
  friend bool operator!=(const RatPoly &a, const RatPoly &b) { return !(a == b); }

  std::string str() const; // human form, e.g. "4/3x^3 - 3x^2 + 2"

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Exact interpolation through the given (x, value) samples.  With more than
// degree_bound+1 samples the extra points are consistency checks.
RatPoly interpolate(const std::vector<std::pair<Rat, Rat>> &samples, int degree_bound);

} // namespace solw

#endif
