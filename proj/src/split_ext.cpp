#include "hcomm/split_ext.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>

#include "hcomm/error.hpp"

namespace hcomm {

struct SplitExtension::Lazy {
  std::once_flag once;
  std::optional<AbelianPoset> poset;
};

namespace {

FiniteGroup require_layout(FiniteGroup g) {
  if (g.layout() == nullptr) fail(ErrorCode::InvalidArgument, g.name() + " was not built as a split extension");
  return g;
}

FiniteGroup restrict_to(const FiniteGroup& g, std::size_t order, std::size_t stride, const std::string& name) {
  std::vector<std::uint16_t> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    labels[x] = g.label(static_cast<Element>(x * stride));
    for (std::size_t y = 0; y < order; ++y) {
      const auto product = g.mul(static_cast<Element>(x * stride), static_cast<Element>(y * stride));
      table[x * order + y] = static_cast<std::uint16_t>(product / stride);
    }
  }
  return FiniteGroup(GroupKind::Abelian, name, order, std::move(table), std::move(labels));
}

Element cyclic_generator(const SplitExtension& ext) {
  const FiniteGroup& k = ext.k_group();
  for (Element t = 0; t < k.order(); ++t) {
    if (k.element_order(t) == k.order()) return t;
  }
  fail(ErrorCode::NotCyclic, "complement of " + ext.group().name() + " is not cyclic");
}

SubgroupSet fixed_by(const SplitExtension& ext, std::span<const Element> ks) {
  const auto& action = ext.layout().action;
  SubgroupSet fixed{ElementSet(ext.a_order())};
  for (Element a = 0; a < ext.a_order(); ++a) {
    bool all = true;
    for (auto k : ks) all = all && action[k][a] == a;
    if (all) fixed.members.insert(a);
  }
  return fixed;
}

ExactInteger phi_in_poset(const AbelianPoset& poset, AbelianPoset::Node b, unsigned r) {
  ExactInteger total = 0;
  for (AbelianPoset::Node d = 0; d < poset.size(); ++d) {
    if (!poset.leq(d, b)) continue;
    total += poset.moebius(d, b) * pow(ExactInteger(poset.node_order(d)), r);
  }
  return total;
}

AbelianPoset::Node node_of(const AbelianPoset& poset, const SubgroupSet& b) {
  const auto node = poset.find(b.members);
  if (!node) fail(ErrorCode::InvalidArgument, "B is not an abelian subgroup of the ambient group");
  return *node;
}

}  // namespace

SplitExtension::SplitExtension(FiniteGroup g, const LatticeOptions& options)
    : group_(require_layout(std::move(g))),
      a_(restrict_to(group_, group_.layout()->a_order(), group_.layout()->k_order(), "A")),
      k_(restrict_to(group_, group_.layout()->k_order(), 1, "K")),
      k_poset_(enumerate_abelian_subgroups(k_, options)),
      options_(options),
      lazy_(std::make_shared<Lazy>()) {}

const AbelianPoset& SplitExtension::group_poset() const {
  std::call_once(lazy_->once, [&] { lazy_->poset.emplace(enumerate_abelian_subgroups(group_, options_)); });
  return *lazy_->poset;
}

SubgroupSet fixed_subgroup(const SplitExtension& ext, const SubgroupSet& b) {
  const auto elements = b.members.elements();
  return fixed_by(ext, elements);
}

ExactInteger phi_r(const FiniteGroup& g, const SubgroupSet& b, unsigned r) {
  const AbelianPoset poset = enumerate_abelian_subgroups(g);
  return phi_in_poset(poset, node_of(poset, b), r);
}

ExactInteger phi_r(const SplitExtension& ext, const SubgroupSet& b, unsigned r) {
  return phi_in_poset(ext.k_subgroups(), node_of(ext.k_subgroups(), b), r);
}

std::uint64_t lambda_bruteforce(const SplitExtension& ext, const SubgroupSet& b) {
  const SubgroupSet c_b = fixed_subgroup(ext, b);
  const std::size_t kn = ext.k_order();
  std::uint64_t count = 0;
  for (const auto& h : ext.group_poset().members()) {
    ElementSet image(kn), kernel(ext.a_order());
    h.members.for_each([&](Element x) {
      image.insert(ext.project(x));
      if (x % kn == 0) kernel.insert(static_cast<Element>(x / kn));
    });
    if (image == b.members && kernel == c_b.members) ++count;
  }
  return count;
}

std::uint64_t lambda_coprime(const SplitExtension& ext, const SubgroupSet& b) {
  if (std::gcd(ext.a_order(), b.order()) != 1) {
    fail(ErrorCode::NotCoprime, "gcd(|A|, |B|) = gcd(" + std::to_string(ext.a_order()) + ", " +
                                    std::to_string(b.order()) + ") != 1");
  }
  return ext.a_order() / fixed_subgroup(ext, b).order();
}

std::vector<StratumData> strata(const SplitExtension& ext, LambdaMode mode) {
  std::vector<StratumData> out;
  for (const auto& b : ext.k_subgroups().members()) {
    StratumData s{b, fixed_subgroup(ext, b), 0};
    const bool coprime = std::gcd(ext.a_order(), b.order()) == 1;
    if (coprime && mode == LambdaMode::TrustCoprime) {
      s.lambda = lambda_coprime(ext, b);
    } else {
      s.lambda = lambda_bruteforce(ext, b);
      if (coprime && s.lambda != lambda_coprime(ext, b)) {
        fail(ErrorCode::FormulaMismatch, "lambda(B) = " + std::to_string(s.lambda) + " but |A:C_B| = " +
                                             std::to_string(lambda_coprime(ext, b)) + " on a coprime stratum");
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

ExactInteger hom_count_split(const SplitExtension& ext, const std::vector<StratumData>& strata, unsigned r) {
  ExactInteger total = 0;
  for (const auto& s : strata) {
    if (s.lambda == 0) continue;
    total += s.lambda * pow(ExactInteger(s.c_b.order()), r) * phi_r(ext, s.b, r);
  }
  return total;
}

ExactInteger hom_count_split(const SplitExtension& ext, unsigned r, LambdaMode mode) {
  return hom_count_split(ext, strata(ext, mode), r);
}

ExactInteger hom_count_cyclic(const SplitExtension& ext, unsigned r) {
  const Element t = cyclic_generator(ext);
  const FiniteGroup& k = ext.k_group();
  const std::uint64_t omega = k.order();
  ExactInteger total = 0;
  for (auto n : divisors(omega)) {
    const Element gens[] = {k.power(t, omega / n)};
    const SubgroupSet c_n = fixed_subgroup(ext, subgroup_closure(k, gens));
    total += (ext.a_order() / c_n.order()) * pow(ExactInteger(c_n.order()), r) * jordan_totient(r, n);
  }
  return total;
}

LeadingData m_and_nmax_formula(const SplitExtension& ext, LambdaMode mode) {
  LeadingData lead;
  const auto all = strata(ext, mode);
  for (const auto& s : all) lead.m = std::max<std::uint64_t>(lead.m, s.c_b.order() * s.b.order());
  for (const auto& s : all) {
    if (s.c_b.order() * s.b.order() == lead.m) lead.n_max += s.lambda;
  }
  const AbelianStats stats = abelian_stats(ext.group_poset());
  if (stats.m != lead.m || stats.n_max != lead.n_max) {
    fail(ErrorCode::FormulaMismatch, "stratum formula gives (m, N_max) = (" + std::to_string(lead.m) + ", " +
                                         std::to_string(lead.n_max) + "), lattice gives (" + std::to_string(stats.m) +
                                         ", " + std::to_string(stats.n_max) + ")");
  }
  return lead;
}

Spectrum spectrum_explicit(const SplitExtension& ext, LambdaMode mode) {
  if (ext.group().is_abelian()) fail(ErrorCode::AbelianGroup, ext.group().name() + " is abelian");
  const AbelianPoset& kp = ext.k_subgroups();
  const auto all = strata(ext, mode);
  std::map<std::uint64_t, std::int64_t> coefficients;
  for (AbelianPoset::Node b = 0; b < kp.size(); ++b) {
    const auto& s = all[b];
    if (s.lambda == 0) continue;
    for (AbelianPoset::Node d = 0; d < kp.size(); ++d) {
      if (!kp.leq(d, b)) continue;
      const std::uint64_t m = (ext.a_order() / s.c_b.order()) * (ext.k_order() / kp.node_order(d));
      if (m < 2) fail(ErrorCode::SpectrumMismatch, "stratum index m_{B,D} = " + std::to_string(m) + " < 2");
      coefficients[m] += static_cast<std::int64_t>(s.lambda) * kp.moebius(d, b);
    }
  }
  Spectrum explicit_spectrum = Spectrum::from_map(coefficients, ext.group().order());
  const Spectrum moebius = spectrum_from_moebius(ext.group_poset());
  if (!(explicit_spectrum == moebius)) {
    fail(ErrorCode::SpectrumMismatch, "stratum spectrum " + to_string(explicit_spectrum) + " differs from " +
                                          to_string(moebius));
  }
  return explicit_spectrum;
}

LeadingData uniform_stratum_stats(const SplitExtension& ext) {
  const Element t = cyclic_generator(ext);
  const FiniteGroup& k = ext.k_group();
  const std::uint64_t omega = k.order();
  if (omega < 2) fail(ErrorCode::HypothesisFails, "complement is trivial");
  std::optional<SubgroupSet> f;
  for (std::uint64_t j = 1; j < omega; ++j) {
    const Element tj[] = {k.power(t, j)};
    SubgroupSet c = fixed_by(ext, tj);
    if (f && !(c == *f)) {
      fail(ErrorCode::HypothesisFails, "fixed subgroups of t^1 and t^" + std::to_string(j) + " differ");
    }
    f = std::move(c);
  }
  const std::uint64_t a = ext.a_order();
  const std::uint64_t wf = omega * f->order();
  LeadingData lead{std::max(a, wf), 0};
  const std::uint64_t index = a / f->order();
  lead.n_max = a > wf ? 1 : (a < wf ? index : 1 + index);
  const AbelianStats stats = abelian_stats(ext.group_poset());
  if (stats.m != lead.m || stats.n_max != lead.n_max) {
    fail(ErrorCode::FormulaMismatch, "uniform-stratum formula gives (" + std::to_string(lead.m) + ", " +
                                         std::to_string(lead.n_max) + "), lattice gives (" + std::to_string(stats.m) +
                                         ", " + std::to_string(stats.n_max) + ")");
  }
  return lead;
}

}  // namespace hcomm
