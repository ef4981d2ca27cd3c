#include "solw/finite_field.hpp"

#include <algorithm>

namespace solw {

namespace {

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// polynomial arithmetic over F_p for the table build only
using Poly = std::vector<uint32_t>;

Poly poly_mulmod(const Poly &a, const Poly &b, const Poly &mod, uint32_t p) {
  std::vector<uint32_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + (uint64_t)a[i] * b[j]) % p;
  // reduce by monic mod of degree d
  size_t d = mod.size() - 1;
  for (size_t i = prod.size(); i-- > d;) {
    uint32_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (size_t j = 0; j < d; ++j) {
      uint64_t sub = (uint64_t)c * mod[j] % p;
      prod[i - d + j] = (uint32_t)((prod[i - d + j] + p - sub) % p);
    }
  }
  prod.resize(d);
  return prod;
}

bool poly_is_one(const Poly &a) {
  if (a.empty() || a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

} // namespace

FieldCtx::FieldCtx(uint32_t p, uint32_t n) : p_(p), n_(n) {
  check(is_prime(p) && p % 2 == 1, "field characteristic must be an odd prime");
  uint64_t sz = 1;
  for (uint32_t i = 0; i < n; ++i) sz *= p;
  check(sz <= 65535, "field too large for 16-bit codes");
  size_ = (uint32_t)sz;
  half_ = (size_ - 1) / 2;

  // find a monic irreducible polynomial of degree n whose companion element x
  // is primitive; scan deterministically by coefficient vector.
  uint32_t m = size_ - 1;
  std::vector<uint32_t> primes;
  {
    uint32_t t = m;
    for (uint32_t d = 2; d * d <= t; ++d)
      while (t % d == 0) { primes.push_back(d); while (t % d == 0) t /= d; break; }
    // the loop above is wrong on repeated division; redo cleanly
  }
  primes.clear();
  {
    uint32_t t = m;
    for (uint32_t d = 2; (uint64_t)d * d <= t; ++d) {
      if (t % d == 0) {
        primes.push_back(d);
        while (t % d == 0) t /= d;
      }
    }
    if (t > 1) primes.push_back(t);
  }

  auto try_modulus = [&](const Poly &mod) -> bool {
    // x generates the multiplicative group iff x^(m/r) != 1 for all prime r|m,
    // and x^m == 1 (which also forces irreducibility of the modulus when
    // combined with the full enumeration below).
    Poly x(n_, 0);
    if (n_ == 1) {
      x = Poly{mod[0] ? (p_ - mod[0]) % p_ : 0}; // companion of (t - c): x = c
    } else {
      x[1] = 1;
    }
    auto pw = [&](uint64_t e) {
      Poly acc(n_, 0);
      acc[0] = 1;
      Poly base = x;
      while (e) {
        if (e & 1) acc = poly_mulmod(acc, base, mod, p_);
        base = poly_mulmod(base, base, mod, p_);
        e >>= 1;
      }
      return acc;
    };
    if (!poly_is_one(pw(m))) return false; // not invertible of full order
    for (uint32_t r : primes)
      if (poly_is_one(pw(m / r))) return false;
    return true;
  };

  Poly mod(n_ + 1, 0);
  mod[n_] = 1;
  bool found = false;
  // enumerate constant-first coefficient vectors
  std::vector<uint32_t> idx(n_, 0);
  uint64_t total = 1;
  for (uint32_t i = 0; i < n_; ++i) total *= p_;
  for (uint64_t code = 0; code < total && !found; ++code) {
    uint64_t c = code;
    for (uint32_t i = 0; i < n_; ++i) { mod[i] = c % p_; c /= p_; }
    if (mod[0] == 0) continue; // reducible (x divides)
    if (try_modulus(mod)) found = true;
  }
  check(found, "no primitive modulus found");

  // power table: g = x (or the constant for n=1)
  Poly g(n_, 0);
  if (n_ == 1) g[0] = (p_ - mod[0]) % p_;
  else g[1] = 1;

  auto pack = [&](const Poly &a) {
    uint32_t v = 0;
    for (size_t i = n_; i-- > 0;) v = v * p_ + a[i];
    return v;
  };

  std::vector<uint32_t> log_by_packed(size_, 0xFFFFFFFFu);
  std::vector<uint32_t> packed_by_log(m);
  Poly cur(n_, 0);
  cur[0] = 1;
  for (uint32_t k = 0; k < m; ++k) {
    packed_by_log[k] = pack(cur);
    check(log_by_packed[packed_by_log[k]] == 0xFFFFFFFFu, "generator not primitive");
    log_by_packed[packed_by_log[k]] = k;
    cur = poly_mulmod(cur, g, mod, p_);
  }
  check(poly_is_one(cur), "generator order mismatch");

  // zech table: zech[k] = log(1 + g^k)
  zech_.assign(m, kZechZero);
  for (uint32_t k = 0; k < m; ++k) {
    uint32_t pk = packed_by_log[k];
    // add 1 to the constant coefficient
    uint32_t c0 = pk % p_;
    uint32_t pk1 = pk - c0 + (c0 + 1) % p_;
    if (pk1 == 0) { zech_[k] = kZechZero; continue; }
    zech_[k] = (uint16_t)log_by_packed[pk1];
  }

  int_embed_.assign(p_, 0);
  int_embed_[0] = 0;
  for (uint32_t v = 1; v < p_; ++v) int_embed_[v] = elem(1 + log_by_packed[v]);
}

FieldCtx::elem FieldCtx::pow(elem a, long long e) const {
  if (a == 0) {
    check(e > 0, "0^e with e<=0");
    return 0;
  }
  int64_t m = size_ - 1;
  int64_t k = ((int64_t)(a - 1) % m) * (e % m) % m;
  if (k < 0) k += m;
  return from_log((uint32_t)k);
}

FieldCtx::elem FieldCtx::from_int(long long k) const {
  long long v = k % (long long)p_;
  if (v < 0) v += p_;
  return int_embed_[(size_t)v];
}

uint32_t FieldCtx::order(elem a) const {
  check(a != 0, "order of zero");
  uint32_t m = size_ - 1;
  uint32_t k = a - 1;
  uint32_t g = std::gcd(k, m);
  return m / g;
}

bool FieldCtx::in_subfield(elem a, uint32_t m) const {
  check(n_ % m == 0, "not a subfield degree");
  if (a == 0) return true;
  // subfield of size p^m: elements with log divisible by (size-1)/(p^m-1)
  uint64_t sub = 1;
  for (uint32_t i = 0; i < m; ++i) sub *= p_;
  uint32_t step = (size_ - 1) / (uint32_t)(sub - 1);
  return (uint32_t)(a - 1) % step == 0;
}

} // namespace solw
