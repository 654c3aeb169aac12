#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hcomm/exact.hpp"
#include "hcomm/group.hpp"
#include "hcomm/lattice.hpp"

namespace hcomm {

struct SpectrumEntry {
  std::uint64_t m = 0;  // abelian index |G:A|
  std::int64_t c = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// The finite Dirichlet spectrum P_r(G) = sum c_m / m^r, entries sorted by m.
/// `group_order` is 0 when the spectrum was recovered from values alone.
struct Spectrum {
  std::vector<SpectrumEntry> entries;
  std::uint64_t group_order = 0;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }

  /// Drops zero coefficients and sorts by m.
  static Spectrum from_map(const std::map<std::uint64_t, std::int64_t>& coefficients, std::uint64_t group_order = 0);

  friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.entries == b.entries; }
};

std::string to_string(const Spectrum& s);  // "{(2,1),(3,3),(6,-3)}"

/// c_m = -sum_{A abelian, |G:A| = m} mu(A, G). Throws Error(AbelianGroup)
/// for abelian G.
Spectrum spectrum_from_moebius(const FiniteGroup& g, const LatticeOptions& options = {});
Spectrum spectrum_from_moebius(const AbelianPoset& poset);

/// sum c_m / m^r for r >= 2.
ExactRational eval_Pr(const Spectrum& s, unsigned r);

/// The rank generating series sum_m c_m / (m (m - z)). Throws
/// Error(PoleHit) when z is a support point.
ExactRational eval_series(const Spectrum& s, const ExactRational& z);

struct SpecialValues {
  ExactRational sigma;      // value at z = 1
  ExactRational alt;        // value at z = -1
  ExactRational dirichlet;  // sum c_m m
};
SpecialValues special_values(const Spectrum& s);

struct FirstPole {
  std::uint64_t m_star = 0;
  ExactRational coefficient;  // c_{m_*} / m_*
};

/// Leading pole, asserted against the abelian statistics. Throws
/// Error(SpectrumStatsMismatch) when m_* != |G|/m(G) or c_{m_*} != N_max.
FirstPole first_pole(const Spectrum& s, const AbelianStats& stats, std::uint64_t group_order);

/// sigma_1..sigma_t: elementary symmetric functions of the 1/m_j, so that
/// P_{r+t} = sigma_1 P_{r+t-1} - sigma_2 P_{r+t-2} + ... + (-1)^{t-1} sigma_t P_r.
std::vector<ExactRational> recurrence_from_spectrum(const Spectrum& s);

/// Checks the signed recurrence on values P_{first}, P_{first+1}, ...
bool recurrence_holds(std::span<const ExactRational> sigma, std::span<const ExactRational> values);

/// The k x k Hankel matrix (P_{i+j+2}) over values starting at P_2.
ExactMatrix hankel_matrix(std::span<const ExactRational> values, std::size_t k);

/// Rank of the floor(n/2) square Hankel matrix of n >= 2 values.
std::size_t hankel_rank_of_sequence(std::span<const ExactRational> values);

/// Recovers the spectrum from exact values P_2, P_3, ... Throws
/// Error(NotEnoughData) when the rank is not yet confirmed and no valid
/// spectrum fits, Error(NonSpectralSequence) when the recurrence is
/// confirmed but its roots or coefficients are not of spectral shape.
Spectrum inverse_spectrum(std::span<const ExactRational> values);

struct EntropyReport {
  ExactRational lambda_prob;  // m(G) / |G|
  std::uint64_t lambda_orb = 0;  // m(G)
  std::uint64_t index = 0;       // |G| / m(G)
  double h_prob = 0;             // log(|G| / m(G))
  double h_orb = 0;              // log m(G)
};
EntropyReport entropy_report(const AbelianStats& stats, std::uint64_t group_order);

struct SeriesReport {
  Spectrum spectrum;
  std::uint64_t m_star = 0;
  ExactRational pole_coefficient;
  SpecialValues specials;
  std::vector<ExactRational> sigma;
  std::size_t hankel_rank = 0;
  EntropyReport entropy;
};

/// Everything the series verb reports, for non-abelian G.
SeriesReport series_report(const FiniteGroup& g, const LatticeOptions& options = {});

}  // namespace hcomm
