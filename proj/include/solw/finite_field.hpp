#ifndef SOLW_FINITE_FIELD_HPP
#define SOLW_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "solw/errors.hpp"

namespace solw {

// GF(p^n) with Zech-logarithm tables.  Elements are 16-bit codes:
// 0 is the zero element, 1+k is the k-th power of the fixed primitive
// element.  Field sizes here stay below 2^16 entries times a couple of
// tables, so everything is precomputed once per context.
//
// The code of an element doubles as its canonical byte encoding, which makes
// group-element serialization deterministic ("integer indices against the
// primitive-element power table").
class FieldCtx {
public:
  using elem = uint16_t; // 0 = zero, 1+k = g^k

  // Builds GF(p^n).  p odd prime, p^n <= 65535.
  FieldCtx(uint32_t p, uint32_t n);

  uint32_t p() const { return p_; }
  uint32_t n() const { return n_; }
  uint32_t size() const { return size_; } // p^n

  elem zero() const { return 0; }
  elem one() const { return 1; }
  elem gen() const { return 2; } // the primitive element g

  bool is_zero(elem a) const { return a == 0; }

  elem from_log(uint32_t k) const { return elem(1 + k % (size_ - 1)); }
  // multiplicative order of a nonzero element
  uint32_t order(elem a) const;

  elem neg(elem a) const {
    if (a == 0) return 0;
    if (p_ == 2) return a;
    return from_log(a - 1 + half_);
  }
  elem add(elem a, elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    // a + b = a * (1 + b/a)
    uint32_t d = mod_ord(int64_t(b) - int64_t(a));
    uint16_t z = zech_[d];
    if (z == kZechZero) return 0;
    return from_log(a - 1 + z);
  }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
  elem mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    return from_log(uint32_t(a - 1) + uint32_t(b - 1));
  }
  elem inv(elem a) const {
    check(a != 0, "field inverse of zero");
    return from_log(mod_ord(-(int64_t)(a - 1)));
  }
  elem pow(elem a, long long e) const;

  // the prime subfield embedding: k mod p -> element
  elem from_int(long long k) const;
  // true if a lies in the subfield GF(p^m); m must divide n
  bool in_subfield(elem a, uint32_t m) const;

private:
  static constexpr uint16_t kZechZero = 0xFFFF;
  uint32_t mod_ord(int64_t v) const {
    int64_t m = size_ - 1;
    v %= m;
    if (v < 0) v += m;
    return (uint32_t)v;
  }
  uint32_t p_, n_, size_, half_; // half_ = (size-1)/2, log of -1
  std::vector<uint16_t> zech_;   // zech_[k] = log(1 + g^k), or kZechZero
  std::vector<elem> int_embed_;  // images of 0..p-1
};

// Z/2^k arithmetic helpers (k <= 8 stored in uint8 lanes would be too tight
// for 2^{l+2} with l<=4; use uint16 and mask).
struct ResidueCtx {
  explicit ResidueCtx(uint32_t k) : k(k), mod(1u << k), mask(mod - 1) {
    check(k >= 1 && k <= 15, "residue exponent out of range");
  }
  uint32_t k, mod, mask;
  uint16_t reduce(int64_t v) const {
    int64_t m = (int64_t)(v & mask);
    return (uint16_t)m;
  }
};

} // namespace solw

#endif
