#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hcomm {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// How K acts on A in a semidirect spec: either by inversion (every
/// generator acts as a -> -a) or by one integer matrix per K-generator.
struct ActionSpec {
  bool inversion = false;
  std::vector<IntMatrix> matrices;

  friend bool operator==(const ActionSpec&, const ActionSpec&) = default;
};

/// Parsed group constructor. Grammar (whitespace insignificant):
///
///   spec   := "quaternion8" | name "(" args ")"
///   name   := cyclic | abelian | dihedral | symmetric | heisenberg | product | semidirect
///   cyclic(n) dihedral(n) symmetric(n) heisenberg(p)
///   abelian(n) | abelian([d1, ..., dk])
///   product(spec, spec)
///   semidirect(spec; spec; action)
///   action := "inversion" | matrix ("," matrix)*
///   matrix := "[" row ("," row)* "]" ;  row := "[" int ("," int)* "]"
struct GroupSpec {
  enum class Kind { Cyclic, Abelian, Dihedral, Symmetric, Quaternion8, Heisenberg, Product, Semidirect };

  Kind kind = Kind::Cyclic;
  std::vector<std::uint64_t> params;  // n, p, or the cyclic factor orders
  std::vector<GroupSpec> children;    // product: {G, H}; semidirect: {A, K}
  ActionSpec action;

  static GroupSpec cyclic(std::uint64_t n) { return {Kind::Cyclic, {n}, {}, {}}; }
  static GroupSpec abelian(std::vector<std::uint64_t> factors) { return {Kind::Abelian, std::move(factors), {}, {}}; }
  static GroupSpec dihedral(std::uint64_t n) { return {Kind::Dihedral, {n}, {}, {}}; }
  static GroupSpec symmetric(std::uint64_t n) { return {Kind::Symmetric, {n}, {}, {}}; }
  static GroupSpec quaternion8() { return {Kind::Quaternion8, {}, {}, {}}; }
  static GroupSpec heisenberg(std::uint64_t p) { return {Kind::Heisenberg, {p}, {}, {}}; }
  static GroupSpec product(GroupSpec g, GroupSpec h) { return {Kind::Product, {}, {std::move(g), std::move(h)}, {}}; }
  static GroupSpec semidirect(GroupSpec a, GroupSpec k, ActionSpec action) {
    return {Kind::Semidirect, {}, {std::move(a), std::move(k)}, std::move(action)};
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Canonical text form; parse_spec(to_string(s)) == s.
std::string to_string(const GroupSpec& spec);

/// Throws Error(ParseError) with the byte offset and the expected-token set.
GroupSpec parse_spec(std::string_view text);

/// Order implied by the spec, saturating at UINT64_MAX; validates nothing else.
std::uint64_t spec_order(const GroupSpec& spec);

}  // namespace hcomm
