#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hcomm/group.hpp"

namespace hcomm {

inline constexpr std::size_t kDefaultLatticeCap = 512;

/// The lattice cap: HCOMM_LATTICE_CAP from the environment when set to a
/// positive integer, otherwise kDefaultLatticeCap.
std::size_t default_lattice_cap();

struct LatticeOptions {
  std::size_t order_cap = default_lattice_cap();
};

/// All abelian subgroups of a group, ordered by (order, bitset), together
/// with the adjoined top element G. When G is abelian the top is G's own
/// node; otherwise it is the extra node `size()`.
class AbelianPoset {
 public:
  using Node = std::size_t;

  AbelianPoset(std::size_t group_order, std::vector<SubgroupSet> members);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t group_order() const noexcept { return group_order_; }
  const std::vector<SubgroupSet>& members() const noexcept { return members_; }
  const SubgroupSet& member(Node n) const { return members_.at(n); }

  Node top() const noexcept { return top_; }
  bool top_is_member() const noexcept { return top_ < members_.size(); }
  std::size_t node_order(Node n) const { return n == members_.size() ? group_order_ : members_.at(n).order(); }

  /// Containment in L_2(G) = N_2(G) + {G}.
  bool leq(Node a, Node b) const;

  std::optional<Node> find(const ElementSet& s) const;

  /// mu(a, upper) in L_2(G), memoized per upper node. Throws
  /// Error(NotComparable) unless a <= upper.
  std::int64_t moebius(Node a, Node upper) const;

 private:
  std::size_t group_order_;
  std::vector<SubgroupSet> members_;
  std::vector<ElementSet> up_sets_;  // up_sets_[a] holds every member b with a <= b
  Node top_;

  struct Memo {
    std::mutex mutex;
    std::map<Node, std::shared_ptr<const std::vector<std::int64_t>>> columns;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();

  std::vector<std::int64_t> moebius_column(Node upper) const;
};

/// Enumerates abelian subgroups by seeding with cyclic subgroups and
/// repeatedly adjoining centralizing elements. Throws Error(OrderCap) when
/// |G| exceeds the cap.
AbelianPoset enumerate_abelian_subgroups(const FiniteGroup& g, const LatticeOptions& options = {});

struct AbelianStats {
  std::uint64_t m = 0;              // largest abelian order
  std::uint64_t n_max = 0;          // number of abelian subgroups of order m
  std::uint64_t b = 0;              // second-largest distinct abelian order, 0 for abelian G
  std::uint64_t maximal_count = 0;  // inclusion-maximal abelian subgroups
  std::vector<SubgroupSet> max_order_witnesses;
  std::vector<SubgroupSet> maximal_witnesses;
};

AbelianStats abelian_stats(const AbelianPoset& poset);
AbelianStats abelian_stats(const FiniteGroup& g, const LatticeOptions& options = {});

inline std::int64_t poset_moebius(const AbelianPoset& poset, AbelianPoset::Node a, AbelianPoset::Node upper) {
  return poset.moebius(a, upper);
}

}  // namespace hcomm
