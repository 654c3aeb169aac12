#include "hcomm/spectrum.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "hcomm/error.hpp"

namespace hcomm {

Spectrum Spectrum::from_map(const std::map<std::uint64_t, std::int64_t>& coefficients, std::uint64_t group_order) {
  Spectrum s;
  s.group_order = group_order;
  for (const auto& [m, c] : coefficients) {
    if (c != 0) s.entries.push_back({m, c});
  }
  return s;
}

std::string to_string(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(s.entries[i].m) + "," + std::to_string(s.entries[i].c) + ")";
  }
  return out + "}";
}

Spectrum spectrum_from_moebius(const AbelianPoset& poset) {
  if (poset.top_is_member()) fail(ErrorCode::AbelianGroup, "the Dirichlet spectrum needs a non-abelian group");
  const std::uint64_t order = poset.group_order();
  std::map<std::uint64_t, std::int64_t> coefficients;
  for (AbelianPoset::Node a = 0; a < poset.size(); ++a) {
    coefficients[order / poset.node_order(a)] -= poset.moebius(a, poset.top());
  }
  return Spectrum::from_map(coefficients, order);
}

Spectrum spectrum_from_moebius(const FiniteGroup& g, const LatticeOptions& options) {
  if (g.is_abelian()) fail(ErrorCode::AbelianGroup, g.name() + " is abelian; the Dirichlet spectrum is undefined");
  return spectrum_from_moebius(enumerate_abelian_subgroups(g, options));
}

ExactRational eval_Pr(const Spectrum& s, unsigned r) {
  if (r < 2) fail(ErrorCode::InvalidArgument, "spectral evaluation needs r >= 2");
  ExactRational total = 0;
  for (const auto& [m, c] : s.entries) total += ExactRational(ExactInteger(c), pow(ExactInteger(m), r));
  return total;
}

ExactRational eval_series(const Spectrum& s, const ExactRational& z) {
  ExactRational total = 0;
  for (const auto& [m, c] : s.entries) {
    const ExactRational gap = ExactRational(m) - z;
    if (gap == 0) fail(ErrorCode::PoleHit, "z = " + to_string(z) + " is a pole");
    total += ExactRational(c) / (ExactRational(m) * gap);
  }
  return total;
}

SpecialValues special_values(const Spectrum& s) {
  SpecialValues v{eval_series(s, 1), eval_series(s, -1), 0};
  for (const auto& [m, c] : s.entries) v.dirichlet += ExactRational(ExactInteger(c) * m);
  return v;
}

FirstPole first_pole(const Spectrum& s, const AbelianStats& stats, std::uint64_t group_order) {
  if (s.empty()) fail(ErrorCode::SpectrumStatsMismatch, "empty spectrum has no pole");
  const auto& lead = s.entries.front();
  if (stats.m == 0 || group_order % stats.m != 0 || lead.m != group_order / stats.m) {
    fail(ErrorCode::SpectrumStatsMismatch, "first pole " + std::to_string(lead.m) + " but |G|/m(G) = " +
                                               std::to_string(group_order) + "/" + std::to_string(stats.m));
  }
  if (lead.c < 0 || static_cast<std::uint64_t>(lead.c) != stats.n_max) {
    fail(ErrorCode::SpectrumStatsMismatch, "leading coefficient " + std::to_string(lead.c) + " but N_max = " +
                                               std::to_string(stats.n_max));
  }
  return {lead.m, ExactRational(lead.c, static_cast<std::int64_t>(lead.m))};
}

std::vector<ExactRational> recurrence_from_spectrum(const Spectrum& s) {
  // e[j] after processing a prefix holds the j-th elementary symmetric value.
  std::vector<ExactRational> e{1};
  for (const auto& entry : s.entries) {
    const ExactRational lambda(1, static_cast<std::int64_t>(entry.m));
    e.push_back(0);
    for (std::size_t j = e.size() - 1; j > 0; --j) e[j] += lambda * e[j - 1];
  }
  return {e.begin() + 1, e.end()};
}

bool recurrence_holds(std::span<const ExactRational> sigma, std::span<const ExactRational> values) {
  const std::size_t t = sigma.size();
  for (std::size_t r = 0; r + t < values.size(); ++r) {
    ExactRational predicted = 0;
    for (std::size_t j = 1; j <= t; ++j) {
      const ExactRational term = sigma[j - 1] * values[r + t - j];
      predicted += (j % 2 == 1) ? term : ExactRational(-term);
    }
    if (predicted != values[r + t]) return false;
  }
  return true;
}

ExactMatrix hankel_matrix(std::span<const ExactRational> values, std::size_t k) {
  if (k > 0 && values.size() < 2 * k - 1) fail(ErrorCode::InvalidArgument, "not enough values for the Hankel window");
  ExactMatrix h(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) h(i, j) = values[i + j];
  }
  return h;
}

std::size_t hankel_rank_of_sequence(std::span<const ExactRational> values) {
  if (values.size() < 2) fail(ErrorCode::InvalidArgument, "Hankel rank needs at least 2 values");
  return rank_exact(hankel_matrix(values, values.size() / 2));
}

namespace {

// Fits a t-term exponential sum to the values. Returns the reason for
// rejection in `why` when the fit is not a spectrum.
std::optional<Spectrum> fit_spectrum(std::span<const ExactRational> values, std::size_t t, std::string& why) {
  std::vector<ExactRational> beta;
  try {
    beta = solve_linear_exact(hankel_matrix(values, t), values.subspan(t, t));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    why = "leading " + std::to_string(t) + "x" + std::to_string(t) + " Hankel block is singular";
    return std::nullopt;
  }
  // x^t - sum beta_i x^i
  std::vector<ExactRational> characteristic(t + 1);
  for (std::size_t i = 0; i < t; ++i) characteristic[i] = -beta[i];
  characteristic[t] = 1;
  const auto roots = rational_roots(primitive_part(characteristic));
  if (roots.size() != t) {
    why = "characteristic polynomial has " + std::to_string(t - roots.size()) + " non-rational roots";
    return std::nullopt;
  }
  std::vector<std::uint64_t> support;
  for (const auto& root : roots) {
    if (numerator(root) != 1 || denominator(root) < 2) {
      why = "characteristic root " + to_string(root) + " is not 1/m with m >= 2";
      return std::nullopt;
    }
    const auto m = static_cast<std::uint64_t>(denominator(root));
    if (!support.empty() && support.back() == m) {
      why = "repeated characteristic root " + to_string(root);
      return std::nullopt;
    }
    support.push_back(m);
  }
  // Vandermonde system: values[i] = sum_j c_j m_j^{-(i+2)}.
  ExactMatrix vandermonde(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      vandermonde(i, j) = ExactRational(1, pow(ExactInteger(support[j]), static_cast<unsigned>(i + 2)));
    }
  }
  const auto coefficients = solve_linear_exact(vandermonde, values.first(t));
  std::map<std::uint64_t, std::int64_t> found;
  for (std::size_t j = 0; j < t; ++j) {
    const auto& c = coefficients[j];
    if (c == 0 || denominator(c) != 1 || abs(numerator(c)) > ExactInteger(INT64_MAX)) {
      why = "coefficient at m = " + std::to_string(support[j]) + " is " + to_string(c);
      return std::nullopt;
    }
    found[support[j]] = static_cast<std::int64_t>(numerator(c));
  }
  Spectrum s = Spectrum::from_map(found);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (eval_Pr(s, static_cast<unsigned>(i + 2)) != values[i]) {
      why = "recovered spectrum does not reproduce P_" + std::to_string(i + 2);
      return std::nullopt;
    }
  }
  return s;
}

}  // namespace

Spectrum inverse_spectrum(std::span<const ExactRational> values) {
  if (values.size() < 2) fail(ErrorCode::NotEnoughData, "need at least P_2 and P_3");
  const std::size_t window = values.size() / 2;
  const std::size_t t = hankel_rank_of_sequence(values);
  if (t == 0) fail(ErrorCode::NonSpectralSequence, "the zero sequence has no spectrum");
  const bool confirmed = t < window;
  std::string why;
  if (auto s = fit_spectrum(values, t, why)) return *s;
  if (confirmed) fail(ErrorCode::NonSpectralSequence, why);
  fail(ErrorCode::NotEnoughData, "Hankel rank " + std::to_string(t) + " fills the " + std::to_string(window) +
                                     "-window and no spectrum fits (" + why + "); supply more values");
}

EntropyReport entropy_report(const AbelianStats& stats, std::uint64_t group_order) {
  if (stats.m == 0 || group_order % stats.m != 0) {
    fail(ErrorCode::InternalInconsistency, "m(G) = " + std::to_string(stats.m) + " does not divide |G|");
  }
  EntropyReport e;
  e.lambda_orb = stats.m;
  e.index = group_order / stats.m;
  if (e.index * e.lambda_orb != group_order) fail(ErrorCode::InternalInconsistency, "(|G|/m) m != |G|");
  e.lambda_prob = ExactRational(stats.m, group_order);
  e.h_prob = std::log(static_cast<double>(e.index));
  e.h_orb = std::log(static_cast<double>(e.lambda_orb));
  return e;
}

SeriesReport series_report(const FiniteGroup& g, const LatticeOptions& options) {
  if (g.is_abelian()) fail(ErrorCode::AbelianGroup, g.name() + " is abelian; the series is 1/(1-z) and diverges");
  const AbelianPoset poset = enumerate_abelian_subgroups(g, options);
  const AbelianStats stats = abelian_stats(poset);
  SeriesReport report;
  report.spectrum = spectrum_from_moebius(poset);
  const FirstPole pole = first_pole(report.spectrum, stats, g.order());
  report.m_star = pole.m_star;
  report.pole_coefficient = pole.coefficient;
  report.specials = special_values(report.spectrum);
  report.sigma = recurrence_from_spectrum(report.spectrum);
  std::vector<ExactRational> values;
  for (unsigned r = 2; r < 2 * report.spectrum.size() + 4; ++r) values.push_back(eval_Pr(report.spectrum, r));
  report.hankel_rank = hankel_rank_of_sequence(values);
  report.entropy = entropy_report(stats, g.order());
  return report;
}

}  // namespace hcomm
