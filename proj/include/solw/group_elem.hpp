#ifndef SOLW_GROUP_ELEM_HPP
#define SOLW_GROUP_ELEM_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "solw/finite_field.hpp"

namespace solw {

// Square matrix over a FieldCtx, entries as field codes, row-major.
struct FqMat {
  uint8_t n = 0;
  std::vector<FieldCtx::elem> a;
};

// Square matrix over Z/2^k, row-major.
struct ZkMat {
  uint8_t n = 0;
  uint8_t k = 0;
  std::vector<uint16_t> a;
};

// Permutation on points 0..deg-1 (image list).
struct Perm {
  std::vector<uint16_t> img;
};

// Semidirect pair (v, M) acting as t -> v + M t on (Z/2^k)^n.
struct SemiElem {
  uint8_t n = 0;
  uint8_t k = 0;
  std::vector<uint16_t> v;
  std::vector<uint16_t> m;
};

using Payload = std::variant<FqMat, ZkMat, Perm, SemiElem>;

struct GroupElem {
  Payload p;

  bool is_fq() const { return std::holds_alternative<FqMat>(p); }
  const FqMat &fq() const { return std::get<FqMat>(p); }
  const ZkMat &zk() const { return std::get<ZkMat>(p); }
  const Perm &perm() const { return std::get<Perm>(p); }
  const SemiElem &semi() const { return std::get<SemiElem>(p); }
};

// Multiplication / inversion need the field context for FqMat payloads; the
// other payloads are self-contained.  GroupCtx also carries the optional
// central-quotient canonicalization set.
struct GroupCtx {
  std::shared_ptr<FieldCtx> field;                  // for FqMat
  std::vector<GroupElem> quotient_center;           // nonempty => canonicalize by min encoding over coset

  GroupElem mul(const GroupElem &x, const GroupElem &y) const;
  GroupElem inv(const GroupElem &x) const;
  GroupElem canon(GroupElem x) const; // min over quotient_center coset
  GroupElem identity_like(const GroupElem &sample) const;

  // raw (no quotient) operations
  GroupElem raw_mul(const GroupElem &x, const GroupElem &y) const;
  GroupElem raw_inv(const GroupElem &x) const;
};

// canonical byte encoding; deterministic across runs
std::string encode(const GroupElem &e);
bool elem_eq(const GroupElem &a, const GroupElem &b);

// convenience constructors
GroupElem fq_identity(const std::shared_ptr<FieldCtx> &F, int n);
GroupElem perm_identity(int deg);
GroupElem perm_from_cycles(int deg, const std::vector<std::vector<int>> &cycles);
GroupElem zk_identity(int n, int k);

} // namespace solw

#endif
