#include "solw/poly.hpp"

#include <set>

namespace solw {

std::string RatPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rat &r = c_[i];
    if (r.is_zero()) continue;
    Rat a = r;
    if (out.empty()) {
      if (a < Rat(0)) { out += "-"; a = -a; }
    } else {
      out += a < Rat(0) ? " - " : " + ";
      if (a < Rat(0)) a = -a;
    }
    bool unit = a == Rat(1) && i > 0;
    if (!unit) out += a.str();
    if (i >= 1) {
      if (!unit) out += "*";
      out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

RatPoly interpolate(const std::vector<std::pair<Rat, Rat>> &samples, int degree_bound) {
  check(degree_bound >= 0, "negative degree bound");
  if ((int)samples.size() < degree_bound + 1)
    throw Error("interpolate: need " + std::to_string(degree_bound + 1) + " samples, got " +
                std::to_string(samples.size()));
  {
    std::set<std::pair<long long, long long>> seen;
    for (auto &s : samples)
      if (!seen.insert({s.first.num(), s.first.den()}).second)
        throw DuplicateAbscissa(s.first.str());
  }

  // Lagrange through the first degree_bound+1 points.
  size_t n = (size_t)degree_bound + 1;
  RatPoly acc;
  for (size_t i = 0; i < n; ++i) {
    RatPoly li = RatPoly::constant(Rat(1));
    Rat denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      li = li * RatPoly({-samples[j].first, Rat(1)});
      denom = denom * (samples[i].first - samples[j].first);
    }
    acc += li * RatPoly::constant(samples[i].second / denom);
  }
  for (auto &s : samples)
    if (acc.eval(s.first) != s.second)
      throw OverdeterminedMismatch("at x=" + s.first.str() + ": poly gives " +
                                   acc.eval(s.first).str() + ", sample is " + s.second.str());
  return acc;
}

} // namespace solw
