#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hcomm/exact.hpp"
#include "hcomm/group.hpp"
#include "hcomm/lattice.hpp"
#include "hcomm/spectrum.hpp"

namespace hcomm {

/// A group built as A x| K with A and K abelian, viewed through its layout.
/// A and K are carried as standalone groups whose element indices match the
/// layout: a in A embeds as a * |K|, k in K embeds as k, and the projection
/// G -> K is g % |K|.
class SplitExtension {
 public:
  /// Throws Error(InvalidArgument) when `g` was not built as a split extension.
  explicit SplitExtension(FiniteGroup g, const LatticeOptions& options = {});

  const FiniteGroup& group() const noexcept { return group_; }
  const FiniteGroup& a_group() const noexcept { return a_; }
  const FiniteGroup& k_group() const noexcept { return k_; }
  const SemidirectLayout& layout() const noexcept { return *group_.layout(); }
  std::size_t a_order() const noexcept { return a_.order(); }
  std::size_t k_order() const noexcept { return k_.order(); }

  Element project(Element g) const noexcept { return static_cast<Element>(g % k_.order()); }
  Element embed_a(Element a) const noexcept { return static_cast<Element>(a * k_.order()); }
  Element embed_k(Element k) const noexcept { return k; }

  /// Every subgroup of K, ordered by (order, bitset).
  const AbelianPoset& k_subgroups() const noexcept { return k_poset_; }

  /// The abelian subgroups of the whole group, built on first use. Throws
  /// Error(OrderCap) past the lattice cap.
  const AbelianPoset& group_poset() const;

 private:
  FiniteGroup group_;
  FiniteGroup a_;
  FiniteGroup k_;
  AbelianPoset k_poset_;
  LatticeOptions options_;

  struct Lazy;
  std::shared_ptr<Lazy> lazy_;
};

/// C_A(B): elements of A fixed by every b in B. B is a subgroup of K.
SubgroupSet fixed_subgroup(const SplitExtension& ext, const SubgroupSet& b);

/// Number of generating r-tuples of the abelian group B, given as a subgroup
/// of `g`: sum over D <= B of mu_B(D) |D|^r.
ExactInteger phi_r(const FiniteGroup& g, const SubgroupSet& b, unsigned r);
ExactInteger phi_r(const SplitExtension& ext, const SubgroupSet& b, unsigned r);

/// Abelian H <= G with pi(H) = B and H meet A = C_A(B), counted directly.
std::uint64_t lambda_bruteforce(const SplitExtension& ext, const SubgroupSet& b);

/// |A : C_A(B)|. Throws Error(NotCoprime) unless gcd(|A|, |B|) = 1.
std::uint64_t lambda_coprime(const SplitExtension& ext, const SubgroupSet& b);

enum class LambdaMode {
  BruteForce,    // enumerate, cross-checking the coprime formula where it applies
  TrustCoprime,  // use |A:C_B| on coprime strata without enumerating
};

struct StratumData {
  SubgroupSet b;        // subgroup of K
  SubgroupSet c_b;      // C_A(B), subgroup of A
  std::uint64_t lambda = 0;
};

/// One entry per subgroup B of K. Throws Error(FormulaMismatch) if a
/// brute-forced coprime lambda disagrees with |A:C_B|.
std::vector<StratumData> strata(const SplitExtension& ext, LambdaMode mode = LambdaMode::BruteForce);

/// sum_B lambda(B) |C_B|^r phi_r(B).
ExactInteger hom_count_split(const SplitExtension& ext, unsigned r, LambdaMode mode = LambdaMode::BruteForce);
ExactInteger hom_count_split(const SplitExtension& ext, const std::vector<StratumData>& strata, unsigned r);

/// sum_{n | w} |A:C_n| |C_n|^r J_r(n) for cyclic K of order w. Throws
/// Error(NotCyclic) otherwise.
ExactInteger hom_count_cyclic(const SplitExtension& ext, unsigned r);

struct LeadingData {
  std::uint64_t m = 0;
  std::uint64_t n_max = 0;
};

/// m = max_B |C_B||B| and N_max = sum of lambda(B) over maximizing strata,
/// asserted against the abelian statistics of the group. Throws
/// Error(FormulaMismatch) on disagreement.
LeadingData m_and_nmax_formula(const SplitExtension& ext, LambdaMode mode = LambdaMode::BruteForce);

/// c_m = sum over B, D <= B of lambda(B) mu_B(D) at m = |A:C_B||K:D|,
/// asserted equal to the Moebius spectrum. Throws Error(AbelianGroup) or
/// Error(SpectrumMismatch).
Spectrum spectrum_explicit(const SplitExtension& ext, LambdaMode mode = LambdaMode::BruteForce);

/// For cyclic K = <t> with C_A(t^j) = F for all 1 <= j < w: m = max(|A|, w|F|)
/// and the three-case N_max. Throws Error(NotCyclic), Error(HypothesisFails),
/// or Error(FormulaMismatch) against the abelian statistics.
LeadingData uniform_stratum_stats(const SplitExtension& ext);

}  // namespace hcomm
