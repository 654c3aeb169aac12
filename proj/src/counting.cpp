#include "hcomm/counting.hpp"

#include <map>
#include <string>

#include "hcomm/error.hpp"

namespace hcomm {

namespace {

bool fits_cap(std::size_t n, unsigned r, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (n != 0 && total > cap / n) return false;
    total *= n;
  }
  return total <= cap;
}

}  // namespace

std::size_t HomCounter::cache_size() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->values.size();
}

ExactInteger HomCounter::count(const ElementSet& subgroup, unsigned r) const {
  if (r == 0) return 1;
  const std::size_t order = subgroup.count();
  if (r == 1) return ExactInteger(order);
  Key key{subgroup, r};
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->values.find(key); it != cache_->values.end()) return it->second;
  }
  // Group the first coordinate by its centralizer in H; those recur heavily.
  std::map<ElementSet, std::uint64_t> strata;
  bool abelian = true;
  subgroup.for_each([&](Element x) {
    ElementSet c = subgroup & group_->centralizer_set(x);
    if (c.count() != order) abelian = false;
    ++strata[std::move(c)];
  });
  ExactInteger total;
  if (abelian) {
    total = pow(ExactInteger(order), r);
  } else {
    for (const auto& [c, multiplicity] : strata) total += count(c, r - 1) * multiplicity;
  }
  std::lock_guard lock(cache_->mutex);
  return cache_->values.try_emplace(std::move(key), std::move(total)).first->second;
}

ExactInteger hom_count(const FiniteGroup& g, unsigned r) { return HomCounter(g).count(r); }

ExactInteger hom_count_bruteforce(const FiniteGroup& g, unsigned r, std::uint64_t cap) {
  if (!fits_cap(g.order(), r, cap)) {
    fail(ErrorCode::Infeasible, "brute-force tuple count for " + g.name() + " at r=" + std::to_string(r) +
                                    " exceeds cap " + std::to_string(cap));
  }
  if (r == 0) return 1;
  // Depth-first over tuples; `allowed` holds the elements commuting with
  // every coordinate chosen so far.
  std::uint64_t total = 0;
  const auto extend = [&](auto&& self, const ElementSet& allowed, unsigned remaining) -> void {
    if (remaining == 1) {
      total += allowed.count();
      return;
    }
    allowed.for_each([&](Element x) { self(self, allowed & g.centralizer_set(x), remaining - 1); });
  };
  extend(extend, ElementSet::full(g.order()), r);
  return ExactInteger(total);
}

ExactRational commuting_probability(const FiniteGroup& g, unsigned r) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "commuting_probability needs r >= 1");
  return ExactRational(hom_count(g, r), pow(ExactInteger(g.order()), r));
}

ExactInteger kappa(const HomCounter& counter, unsigned r) {
  const FiniteGroup& g = counter.group();
  ExactInteger burnside = 0;
  std::map<ElementSet, std::uint64_t> centralizers;
  for (Element h = 0; h < g.order(); ++h) ++centralizers[g.centralizer_set(h)];
  for (const auto& [c, multiplicity] : centralizers) burnside += counter.count(c, r) * multiplicity;
  const ExactInteger order(g.order());
  if (burnside % order != 0) {
    fail(ErrorCode::InternalInconsistency, "Burnside sum for " + g.name() + " at r=" + std::to_string(r) +
                                               " is not divisible by |G|");
  }
  ExactInteger orbits = burnside / order;
  // kappa_r = |G|^r P_{r+1} = |Comm_{r+1}(G)| / |G|
  const ExactInteger next = counter.count(r + 1);
  if (next % order != 0 || next / order != orbits) {
    fail(ErrorCode::InternalInconsistency, "kappa_" + std::to_string(r) + "(" + g.name() + ") disagrees with |G|^r P_{r+1}");
  }
  return orbits;
}

ExactInteger kappa(const FiniteGroup& g, unsigned r) { return kappa(HomCounter(g), r); }

ExactInteger kappa_orbits_bruteforce(const FiniteGroup& g, unsigned r, std::uint64_t cap) {
  if (!fits_cap(g.order(), r, cap)) {
    fail(ErrorCode::Infeasible, "orbit enumeration for " + g.name() + " at r=" + std::to_string(r) + " exceeds cap " +
                                    std::to_string(cap));
  }
  if (r == 0) return 1;
  const std::size_t n = g.order();
  std::uint64_t orbits = 0;
  std::vector<Element> tuple(r), image(r);
  // A tuple is counted when it is the lexicographically smallest member
  // of its conjugation orbit.
  const auto is_orbit_minimum = [&] {
    for (Element h = 0; h < n; ++h) {
      for (unsigned i = 0; i < r; ++i) image[i] = g.conj(h, tuple[i]);
      if (image < tuple) return false;
    }
    return true;
  };
  const auto extend = [&](auto&& self, const ElementSet& allowed, unsigned depth) -> void {
    if (depth == r) {
      if (is_orbit_minimum()) ++orbits;
      return;
    }
    allowed.for_each([&](Element x) {
      tuple[depth] = x;
      self(self, allowed & g.centralizer_set(x), depth + 1);
    });
  };
  extend(extend, ElementSet::full(n), 0);
  return ExactInteger(orbits);
}

}  // namespace hcomm
