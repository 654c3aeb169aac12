#include "hcomm/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_set>

#include "hcomm/error.hpp"

namespace hcomm {

std::size_t default_lattice_cap() {
  if (const char* env = std::getenv("HCOMM_LATTICE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultLatticeCap;
}

AbelianPoset::AbelianPoset(std::size_t group_order, std::vector<SubgroupSet> members)
    : group_order_(group_order), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    const auto oa = a.order(), ob = b.order();
    return oa != ob ? oa < ob : a.members < b.members;
  });
  const std::size_t n = members_.size();
  up_sets_.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (members_[a].is_subgroup_of(members_[b])) up_sets_[a].insert(static_cast<Element>(b));
    }
  }
  top_ = n;
  if (n > 0 && members_.back().order() == group_order_) top_ = n - 1;
}

bool AbelianPoset::leq(Node a, Node b) const {
  const std::size_t n = members_.size();
  if (a > n || b > n) fail(ErrorCode::IndexOutOfRange, "poset node out of range");
  if (b == n) return true;
  if (a == n) return false;
  return up_sets_[a].contains(static_cast<Element>(b));
}

std::optional<AbelianPoset::Node> AbelianPoset::find(const ElementSet& s) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].members == s) return i;
  }
  if (s.count() == group_order_ && top_ == members_.size()) return top_;
  return std::nullopt;
}

std::vector<std::int64_t> AbelianPoset::moebius_column(Node upper) const {
  const std::size_t n = members_.size();
  std::vector<std::int64_t> mu(n + 1, 0);
  mu[upper] = 1;
  // Members are sorted by order, so every strict upper bound of a node
  // has a larger index and is finished before the node itself.
  for (std::size_t a = std::min(upper, n); a-- > 0;) {
    if (!leq(a, upper)) continue;
    std::int64_t sum = 0;
    up_sets_[a].for_each([&](Element b) {
      if (b != a && leq(b, upper)) sum += mu[b];
    });
    if (upper == n) sum += mu[n];
    mu[a] = -sum;
  }
  return mu;
}

std::int64_t AbelianPoset::moebius(Node a, Node upper) const {
  if (!leq(a, upper)) {
    fail(ErrorCode::NotComparable, "node " + std::to_string(a) + " is not below node " + std::to_string(upper));
  }
  std::shared_ptr<const std::vector<std::int64_t>> column;
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->columns.find(upper); it != memo_->columns.end()) column = it->second;
  }
  if (!column) {
    auto computed = std::make_shared<const std::vector<std::int64_t>>(moebius_column(upper));
    std::lock_guard lock(memo_->mutex);
    column = memo_->columns.try_emplace(upper, std::move(computed)).first->second;
  }
  return (*column)[a];
}

AbelianPoset enumerate_abelian_subgroups(const FiniteGroup& g, const LatticeOptions& options) {
  if (g.order() > options.order_cap) {
    fail(ErrorCode::OrderCap, "abelian subgroup enumeration of " + g.name() + " (order " + std::to_string(g.order()) +
                                  ") exceeds lattice cap " + std::to_string(options.order_cap));
  }
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::deque<ElementSet> queue;
  const auto push = [&](ElementSet s) {
    if (seen.insert(s).second) queue.push_back(std::move(s));
  };
  for (Element x = 0; x < g.order(); ++x) {
    const Element gens[] = {x};
    push(subgroup_closure(g, gens).members);
  }
  while (!queue.empty()) {
    const ElementSet h = std::move(queue.front());
    queue.pop_front();
    const ElementSet candidates = centralizer_of_set(g, h).minus(h);
    const auto h_elems = h.elements();
    candidates.for_each([&](Element x) {
      // <H, x> = union of the cosets H x^j, since x centralizes H.
      ElementSet extended = h;
      for (Element power = x; !h.contains(power); power = g.mul(power, x)) {
        for (auto y : h_elems) extended.insert(g.mul(y, power));
      }
      push(std::move(extended));
    });
  }
  std::vector<SubgroupSet> members;
  members.reserve(seen.size());
  for (const auto& s : seen) members.push_back({s});
  return AbelianPoset(g.order(), std::move(members));
}

AbelianStats abelian_stats(const AbelianPoset& poset) {
  AbelianStats stats;
  const auto& members = poset.members();
  if (members.empty()) fail(ErrorCode::InternalInconsistency, "empty abelian poset");
  stats.m = members.back().order();
  for (const auto& s : members) {
    if (s.order() == stats.m) {
      ++stats.n_max;
      stats.max_order_witnesses.push_back(s);
    } else if (!poset.top_is_member()) {
      stats.b = std::max<std::uint64_t>(stats.b, s.order());
    }
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = a + 1; b < members.size() && maximal; ++b) {
      if (poset.leq(a, b)) maximal = false;
    }
    if (maximal) {
      ++stats.maximal_count;
      stats.maximal_witnesses.push_back(members[a]);
    }
  }
  return stats;
}

AbelianStats abelian_stats(const FiniteGroup& g, const LatticeOptions& options) {
  return abelian_stats(enumerate_abelian_subgroups(g, options));
}

}  // namespace hcomm
