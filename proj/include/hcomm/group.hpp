#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcomm/element_set.hpp"
#include "hcomm/group_spec.hpp"

namespace hcomm {

enum class GroupKind { Cyclic, Abelian, Dihedral, Symmetric, Quaternion, Heisenberg, Product, Semidirect, Quotient };

std::string_view to_string(GroupKind kind);

inline constexpr std::size_t kMaxGroupOrder = 20000;

/// Split-extension layout of a group built as A x| K with A, K abelian.
/// Element (a, k) has index a * |K| + k; A and K are written additively
/// as products of cyclic factors in mixed radix (first factor most
/// significant), so the projection onto K is `index % |K|`.
struct SemidirectLayout {
  std::vector<std::uint64_t> a_factors;
  std::vector<std::uint64_t> k_factors;
  std::vector<IntMatrix> generator_matrices;     // one per K factor
  std::vector<std::vector<Element>> action;      // action[k][a] = k . a
  std::size_t a_order() const noexcept { return action.empty() ? 0 : action.front().size(); }
  std::size_t k_order() const noexcept { return action.size(); }
};

/// A finite group stored as its full multiplication table. Immutable after
/// construction; copies share the lazily built centralizer table.
class FiniteGroup {
 public:
  FiniteGroup(GroupKind kind, std::string name, std::size_t order, std::vector<std::uint16_t> table,
              std::vector<std::string> labels, std::shared_ptr<const SemidirectLayout> layout = nullptr);

  std::size_t order() const noexcept { return order_; }
  GroupKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  Element conj(Element g, Element x) const noexcept { return mul(mul(g, x), inv(g)); }  // g x g^-1
  bool commute(Element a, Element b) const noexcept { return mul(a, b) == mul(b, a); }
  Element power(Element a, std::uint64_t k) const noexcept;
  std::uint64_t element_order(Element a) const noexcept;

  const std::string& label(Element a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const SemidirectLayout* layout() const noexcept { return layout_.get(); }
  std::shared_ptr<const SemidirectLayout> shared_layout() const noexcept { return layout_; }

  /// C_G(g) as a bitset; cached after the first call.
  const ElementSet& centralizer_set(Element g) const;

  bool is_abelian() const;

 private:
  GroupKind kind_;
  std::string name_;
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::vector<std::string> labels_;
  std::shared_ptr<const SemidirectLayout> layout_;

  struct CentralizerCache;
  std::shared_ptr<CentralizerCache> cache_;
};

/// A subgroup of some parent group, held as its member bitset. Operations
/// take the parent explicitly.
struct SubgroupSet {
  ElementSet members;

  std::size_t order() const noexcept { return members.count(); }
  bool contains(Element x) const noexcept { return members.contains(x); }
  bool is_subgroup_of(const SubgroupSet& other) const noexcept { return members.is_subset_of(other.members); }

  friend bool operator==(const SubgroupSet&, const SubgroupSet&) = default;
};

struct GroupOptions {
  std::size_t order_cap = kMaxGroupOrder;
  std::uint64_t seed = 0x5eed;  // random associativity sampler for |G| > 128
};

FiniteGroup make_group(const GroupSpec& spec, const GroupOptions& options = {});
FiniteGroup make_group(std::string_view spec_text, const GroupOptions& options = {});

FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t order_cap = kMaxGroupOrder);

/// Throws Error(InternalInconsistency) if the table is not a group:
/// Latin square, identity, inverses, associativity (exhaustive for n <= 128,
/// otherwise 10^5 random triples from `seed`).
void check_group_axioms(const FiniteGroup& g, std::uint64_t seed = 0x5eed);

SubgroupSet whole_group(const FiniteGroup& g);
SubgroupSet trivial_subgroup(const FiniteGroup& g);

SubgroupSet centralizer(const FiniteGroup& g, Element x);
SubgroupSet center(const FiniteGroup& g);
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);
SubgroupSet subgroup_closure(const FiniteGroup& g, std::span<const Element> generators);
FiniteGroup make_quotient(const FiniteGroup& g, const SubgroupSet& normal);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
bool is_abelian(const FiniteGroup& g, const SubgroupSet& s);
bool is_normal(const FiniteGroup& g, const SubgroupSet& s);

/// Derived subgroup [G, G].
SubgroupSet derived_subgroup(const FiniteGroup& g);

/// Elements of G commuting with every member of h.
ElementSet centralizer_of_set(const FiniteGroup& g, const ElementSet& h);

}  // namespace hcomm
