#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "hcomm/exact.hpp"
#include "hcomm/group.hpp"

namespace hcomm {

/// Counts |Comm_r(H)| = |Hom(Z^r, H)| for subgroups H of one group via
///   |Comm_r(H)| = sum_{x in H} |Comm_{r-1}(C_H(x))|,
/// memoized on (subgroup bitset, r). Concurrent callers may race to fill
/// the same entry; the inserted values are identical.
class HomCounter {
 public:
  explicit HomCounter(const FiniteGroup& g) : group_(&g) {}

  const FiniteGroup& group() const noexcept { return *group_; }

  ExactInteger count(unsigned r) const { return count(ElementSet::full(group_->order()), r); }
  ExactInteger count(const ElementSet& subgroup, unsigned r) const;

  std::size_t cache_size() const;

 private:
  struct Key {
    ElementSet set;
    unsigned r;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return k.set.hash() ^ (std::size_t{k.r} * 0x9e3779b97f4a7c15ULL); }
  };
  struct Cache {
    std::mutex mutex;
    std::unordered_map<Key, ExactInteger, KeyHash> values;
  };

  const FiniteGroup* group_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline constexpr std::uint64_t kBruteForceHomCap = 100'000'000;
inline constexpr std::uint64_t kBruteForceOrbitCap = 10'000'000;

/// Exhaustive count of pairwise-commuting r-tuples. Throws Error(Infeasible)
/// when |G|^r exceeds `cap`.
ExactInteger hom_count_bruteforce(const FiniteGroup& g, unsigned r, std::uint64_t cap = kBruteForceHomCap);

ExactInteger hom_count(const FiniteGroup& g, unsigned r);

/// P_r(G) = |Hom(Z^r, G)| / |G|^r for r >= 1.
ExactRational commuting_probability(const FiniteGroup& g, unsigned r);

/// kappa_r(G) by Burnside: (1/|G|) sum_h |Comm_r(C_G(h))|. Cross-checked
/// against |G|^r P_{r+1}(G); throws Error(InternalInconsistency) otherwise.
ExactInteger kappa(const FiniteGroup& g, unsigned r);
ExactInteger kappa(const HomCounter& counter, unsigned r);

/// Explicit count of diagonal-conjugation orbits on commuting r-tuples.
ExactInteger kappa_orbits_bruteforce(const FiniteGroup& g, unsigned r, std::uint64_t cap = kBruteForceOrbitCap);

}  // namespace hcomm
