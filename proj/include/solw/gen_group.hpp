#ifndef SOLW_GEN_GROUP_HPP
#define SOLW_GEN_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "solw/group_elem.hpp"

namespace solw {

constexpr uint64_t kDefaultClosureCap = 1ull << 23;

struct ClassInfo {
  uint32_t rep;  // element index of the canonical-encoding minimum
  uint32_t size;
};

// A finitely generated group with cached enumeration and conjugacy data.
// Immutable once built (single-writer-then-share).
class GenGroup {
public:
  // breadth-first closure over products; deterministic ordering
  static GenGroup closure(GroupCtx ctx, std::vector<GroupElem> gens,
                          uint64_t cap = kDefaultClosureCap);
  // wrap an already-closed element set
  static GenGroup from_elements(GroupCtx ctx, std::vector<GroupElem> elems,
                                std::vector<GroupElem> gens = {});

  uint64_t order() const { return elems_.size(); }
  const std::vector<GroupElem> &elements() const { return elems_; }
  const std::vector<GroupElem> &generators() const { return gens_; }
  const GroupCtx &ctx() const { return ctx_; }

  const GroupElem &elem(uint32_t i) const { return elems_[i]; }
  uint32_t index_of(const GroupElem &e) const;
  std::optional<uint32_t> find(const GroupElem &e) const;
  bool contains(const GroupElem &e) const { return find(e).has_value(); }
  uint32_t identity_index() const { return id_idx_; }

  uint32_t mul_idx(uint32_t a, uint32_t b) const { return index_of(ctx_.mul(elems_[a], elems_[b])); }
  uint32_t inv_idx(uint32_t a) const { return index_of(ctx_.inv(elems_[a])); }

  // conjugacy data (computed on first use, then cached)
  const std::vector<ClassInfo> &classes() const;
  const std::vector<uint32_t> &class_of() const;
  uint32_t num_classes() const { return (uint32_t)classes().size(); }

  std::vector<uint32_t> center() const; // element indices
  int element_order(uint32_t i) const;
  uint64_t exponent() const;

  // deterministic fingerprint of the element set (for memo caches)
  uint64_t fingerprint() const;

private:
  GroupCtx ctx_;
  std::vector<GroupElem> gens_;
  std::vector<GroupElem> elems_;
  std::unordered_map<std::string, uint32_t> index_;
  uint32_t id_idx_ = 0;
  mutable std::vector<ClassInfo> classes_;
  mutable std::vector<uint32_t> class_of_;
  void build_index();
};

// A subgroup given by a sorted list of parent element indices.
struct SubgroupHandle {
  const GenGroup *parent = nullptr;
  std::vector<uint32_t> elems; // sorted parent indices
  std::vector<uint32_t> gens;  // parent indices, may be empty

  uint64_t order() const { return elems.size(); }
  bool contains(uint32_t idx) const;
  bool is_normal_in_parent() const;
  bool operator==(const SubgroupHandle &o) const { return elems == o.elems; }
};

SubgroupHandle whole_group(const GenGroup &g);
SubgroupHandle subgroup_closure(const GenGroup &g, const std::vector<uint32_t> &gens);
SubgroupHandle trivial_subgroup(const GenGroup &g);

SubgroupHandle centralizer(const GenGroup &g, const GroupElem &x);
SubgroupHandle centralizer_of_set(const GenGroup &g, const std::vector<uint32_t> &xs);

// normalizer of H inside the enumerated parent; candidate-generator variant
// is provided by the catalog layer for non-enumerable parents.
SubgroupHandle normalizer_in(const GenGroup &parent, const SubgroupHandle &h);

// subgroup of fixed elements filter
SubgroupHandle filter_subgroup(const GenGroup &g, const std::vector<uint32_t> &candidates,
                               const std::function<bool(uint32_t)> &pred);

// central quotient: returns the quotient group (coset representatives as
// elements, canonicalized by the quotient context) and the section map from
// quotient elements to original representatives.
struct QuotientResult {
  GenGroup group;
  std::vector<uint32_t> section; // quotient element -> parent element index
};
QuotientResult quotient_by_central(const GenGroup &g, const SubgroupHandle &z);

// derived subgroup [G,G] as a handle
SubgroupHandle derived_subgroup(const GenGroup &g);

// one representative per conjugacy class of elementary abelian 2-subgroups
// (including the trivial subgroup), each with its normalizer
struct ElabClass {
  SubgroupHandle rep;
  SubgroupHandle normalizer;
};
std::vector<ElabClass> elementary_abelian_2subgroups(const GenGroup &g);

// all elementary abelian 2-subgroups (not up to conjugacy), sorted lists of
// element indices; exposed for the chain machinery
std::vector<std::vector<uint32_t>> all_elab_2subgroups(const GenGroup &g);

// GenGroup for a subgroup handle (payloads copied from parent)
GenGroup subgroup_as_group(const SubgroupHandle &h);

} // namespace solw

#endif
