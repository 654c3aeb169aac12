#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace hcomm {

using Element = std::uint32_t;

/// Fixed-width bitset over the element indices of one group. Equality and
/// hashing are on the bits, so a sorted member list and its bitset are the
/// same key.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void insert(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Element x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

  /// Elements of *this not in other.
  ElementSet minus(const ElementSet& other) const {
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~other.words_[i];
    return r;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Element>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) { return a.words_ <=> b.words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace hcomm
